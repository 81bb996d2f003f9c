#pragma once

#include "prefdom/profile.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prefdom {

enum class ConfigurationKind { BestDiverse, MediumDiverse, WorstDiverse, Cyclic, Alpha, AlphaBar, Beta, Gamma, Delta };

inline constexpr std::array<ConfigurationKind, 9> kAllConfigurationKinds = {
    ConfigurationKind::BestDiverse, ConfigurationKind::MediumDiverse, ConfigurationKind::WorstDiverse,
    ConfigurationKind::Cyclic,      ConfigurationKind::Alpha,         ConfigurationKind::AlphaBar,
    ConfigurationKind::Beta,        ConfigurationKind::Gamma,         ConfigurationKind::Delta};

std::string_view to_string(ConfigurationKind kind);
std::optional<ConfigurationKind> parse_configuration_kind(std::string_view name);

/// Number of voter and alternative role slots for a kind.
std::size_t voter_arity(ConfigurationKind kind);
std::size_t alternative_arity(ConfigurationKind kind);

/// Voters and alternatives filling the role slots of one forbidden configuration.
///
/// Alternative slots are named a, b, c, ... in order. For Gamma the six slots
/// form the pairs {a,b}, {c,d}, {e,f}; for Delta the pairs {a,b}, {c,d}. Those
/// pairs need distinct endpoints but may share alternatives with each other.
struct ConfigurationWitness {
    ConfigurationKind kind;
    std::vector<Index> voters;
    std::vector<Index> alternatives;

    friend bool operator==(const ConfigurationWitness&, const ConfigurationWitness&) = default;
};

/// Checks the role constraints of `w.kind` literally against the cited voters.
/// Throws std::invalid_argument on arity mismatch and std::out_of_range on bad indices.
bool verify_witness(const Profile& profile, const ConfigurationWitness& w);

/// First witness of `kind` in the fixed scan order, if any.
///
/// Scan orders:
///  - BestDiverse/MediumDiverse/WorstDiverse: triples x<y<z ascending, roles (a,b,c) = (x,y,z),
///    each voter slot filled by the smallest voter index satisfying it.
///  - Cyclic: triples ascending; orientation x>y>z before x>z>y; smallest voters per slot.
///  - Alpha/AlphaBar/Beta: ordered voter pairs (v1,v2) ascending, then the lexicographically
///    smallest alternative role tuple.
///  - Gamma: voter triples v1<v2<v3 ascending, smallest conflict pair in each role.
///  - Delta: alternative pairs p<q ascending (pairs ordered lexicographically), smallest
///    voter per orientation class.
std::optional<ConfigurationWitness> find_configuration(const Profile& profile, ConfigurationKind kind);

/// Voter counts for the six linear orders of a triple (t0,t1,t2). Slot order follows the
/// lexicographic permutations of positions: 012, 021, 102, 120, 201, 210.
struct TripleCensus {
    std::array<Index, 3> triple{};
    std::array<std::size_t, 6> counts{};

    /// Count for the order x > y > z, where {x,y,z} is the triple.
    std::size_t count(Index x, Index y, Index z) const;
    std::size_t total() const;
};

TripleCensus triple_census(const Profile& profile, std::array<Index, 3> triple);

}  // namespace prefdom
