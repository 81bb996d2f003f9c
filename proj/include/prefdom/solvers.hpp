#pragma once

#include "prefdom/profile.hpp"
#include "prefdom/recognition.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace prefdom {

enum class DeletionMode { Voters, Alternatives };

std::string_view to_string(DeletionMode mode);
std::optional<DeletionMode> parse_deletion_mode(std::string_view name);

enum class SolveMethod { Poly, Fpt, Brute };
enum class MethodChoice { Auto, Fpt, Brute, Poly };

std::string_view to_string(SolveMethod method);
std::string_view to_string(MethodChoice method);
std::optional<MethodChoice> parse_method_choice(std::string_view name);

struct SolveOutcome {
    bool feasible = false;
    DomainProperty property = DomainProperty::ValueRestricted;
    DeletionMode mode = DeletionMode::Voters;
    std::size_t k = 0;
    /// Sorted original indices of deleted voters or alternatives.
    std::vector<Index> deleted;
    SolveMethod method = SolveMethod::Brute;
    std::size_t explored = 0;
    double elapsed_ms = 0.0;
    /// check() of the remaining profile, present when feasible.
    std::optional<RecognitionResult> certificate;

    std::size_t size() const { return deleted.size(); }
};

/// Arc of the inclusion DAG. Weight is the multiplicity of the target's order.
struct DagArc {
    std::size_t to;
    std::size_t weight;
};

/// Vertex 0 is the root; vertex 1 + z*q + i stands for u^z_i (anchor z, order i).
struct InclusionDag {
    std::vector<PreferenceOrder> orders;
    std::vector<std::size_t> multiplicity;
    /// Outgoing arcs per vertex, targets ascending.
    std::vector<std::vector<DagArc>> out;

    static constexpr std::size_t kRoot = 0;

    std::size_t order_count() const { return orders.size(); }
    std::size_t vertex(std::size_t anchor, std::size_t order) const { return 1 + anchor * orders.size() + order; }
    std::size_t anchor_of(std::size_t v) const { return (v - 1) / orders.size(); }
    std::size_t order_of(std::size_t v) const { return (v - 1) % orders.size(); }
};

/// Throws std::invalid_argument on duplicate orders, mixed sizes, or zero multiplicity.
InclusionDag build_inclusion_dag(const std::vector<PreferenceOrder>& distinct_orders,
                                 const std::vector<std::size_t>& multiplicity);

struct WeightedPath {
    /// Starts at the root.
    std::vector<std::size_t> vertices;
    std::size_t weight = 0;
};

/// Heaviest root path; among optimal paths the lexicographically smallest vertex sequence.
WeightedPath max_weight_path(const InclusionDag& dag);

struct SingleCrossingSubset {
    /// Ascending voter indices.
    std::vector<Index> kept;
    /// The kept voters in a single-crossing order.
    std::vector<Index> order;
};

/// Largest single-crossing voter subset. Among the maximum ones, the deleted complement
/// is lexicographically smallest.
SingleCrossingSubset max_single_crossing_voters(const Profile& profile);

/// Branches on the members of the first forbidden witness. Exhaustive, so feasibility is exact,
/// but the returned set is the first one found rather than a canonical one.
SolveOutcome fpt_branch(const Profile& profile, DomainProperty property, DeletionMode mode, std::size_t k);

inline constexpr double kBruteForceSubsetLimit = 1e7;

/// Tries deletion sets by size then lexicographically. Throws GuardExceeded when more than
/// kBruteForceSubsetLimit candidate sets would be needed.
SolveOutcome brute_force(const Profile& profile, DomainProperty property, DeletionMode mode, std::size_t k);

/// Smallest feasible k. Poly only supports (SingleCrossing, Voters) and throws
/// std::invalid_argument otherwise; Auto picks Poly there and Fpt elsewhere.
SolveOutcome min_distance(const Profile& profile, DomainProperty property, DeletionMode mode,
                          MethodChoice method = MethodChoice::Auto);

}  // namespace prefdom
