#pragma once

#include "prefdom/configurations.hpp"
#include "prefdom/profile.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace prefdom {

enum class DomainProperty {
    ValueRestricted,
    BestRestricted,
    MediumRestricted,
    WorstRestricted,
    SinglePeaked,
    SingleCaved,
    GroupSeparable,
    BetaRestricted,
    SingleCrossing,
};

inline constexpr std::array<DomainProperty, 9> kAllDomainProperties = {
    DomainProperty::ValueRestricted, DomainProperty::BestRestricted, DomainProperty::MediumRestricted,
    DomainProperty::WorstRestricted, DomainProperty::SinglePeaked,   DomainProperty::SingleCaved,
    DomainProperty::GroupSeparable,  DomainProperty::BetaRestricted, DomainProperty::SingleCrossing};

std::string_view to_string(DomainProperty property);
std::optional<DomainProperty> parse_domain_property(std::string_view name);

/// Forbidden configuration kinds characterizing `property`, in the order they are searched.
/// ValueRestricted is decided by cyclic classes, so it maps to {Cyclic}.
std::vector<ConfigurationKind> forbidden_kinds(DomainProperty property);

struct RecognitionResult {
    DomainProperty property;
    bool holds = true;
    std::optional<ConfigurationWitness> violation;
    /// Voter ordering; present for SingleCrossing whenever it holds.
    std::optional<std::vector<Index>> certificate;
};

/// First forbidden substructure for `property`, without computing certificates.
std::optional<ConfigurationWitness> find_violation(const Profile& profile, DomainProperty property);

RecognitionResult check(const Profile& profile, DomainProperty property);

/// A single-crossing voter ordering, or nothing if the profile is not single-crossing.
std::optional<std::vector<Index>> single_crossing_order(const Profile& profile);

/// True iff along `order` every alternative pair flips at most once.
/// Throws std::invalid_argument if `order` is not a permutation of the voters.
bool validate_sc_order(const Profile& profile, const std::vector<Index>& order);

/// Resource limits for the definitional oracles.
inline constexpr std::size_t kOracleMaxAxisAlternatives = 8;
inline constexpr std::size_t kOracleMaxSeparableAlternatives = 14;
inline constexpr std::size_t kOracleMaxCrossingOrders = 8;

/// Decides `property` straight from its definition, without the configuration detectors.
/// Throws GuardExceeded past the limits above.
bool oracle_check(const Profile& profile, DomainProperty property);

}  // namespace prefdom
