#include "prefdom/recognition.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <set>

namespace prefdom {

std::string_view to_string(DomainProperty property)
{
    switch (property) {
    case DomainProperty::ValueRestricted: return "value-restricted";
    case DomainProperty::BestRestricted: return "best-restricted";
    case DomainProperty::MediumRestricted: return "medium-restricted";
    case DomainProperty::WorstRestricted: return "worst-restricted";
    case DomainProperty::SinglePeaked: return "single-peaked";
    case DomainProperty::SingleCaved: return "single-caved";
    case DomainProperty::GroupSeparable: return "group-separable";
    case DomainProperty::BetaRestricted: return "beta-restricted";
    case DomainProperty::SingleCrossing: return "single-crossing";
    }
    return "unknown";
}

std::optional<DomainProperty> parse_domain_property(std::string_view name)
{
    for (auto p : kAllDomainProperties)
        if (to_string(p) == name)
            return p;
    return std::nullopt;
}

std::vector<ConfigurationKind> forbidden_kinds(DomainProperty property)
{
    using K = ConfigurationKind;
    switch (property) {
    case DomainProperty::ValueRestricted: return {K::Cyclic};
    case DomainProperty::BestRestricted: return {K::BestDiverse};
    case DomainProperty::MediumRestricted: return {K::MediumDiverse};
    case DomainProperty::WorstRestricted: return {K::WorstDiverse};
    case DomainProperty::SinglePeaked: return {K::WorstDiverse, K::Alpha};
    case DomainProperty::SingleCaved: return {K::BestDiverse, K::AlphaBar};
    case DomainProperty::GroupSeparable: return {K::MediumDiverse, K::Beta};
    case DomainProperty::BetaRestricted: return {K::Beta};
    case DomainProperty::SingleCrossing: return {K::Gamma, K::Delta};
    }
    return {};
}

std::optional<ConfigurationWitness> find_violation(const Profile& profile, DomainProperty property)
{
    for (auto kind : forbidden_kinds(property))
        if (auto w = find_configuration(profile, kind))
            return w;
    return std::nullopt;
}

RecognitionResult check(const Profile& profile, DomainProperty property)
{
    RecognitionResult result{property, true, std::nullopt, std::nullopt};
    result.violation = find_violation(profile, property);
    result.holds = !result.violation;
    if (result.holds && property == DomainProperty::SingleCrossing)
        result.certificate = single_crossing_order(profile);
    return result;
}

std::optional<std::vector<Index>> single_crossing_order(const Profile& profile)
{
    const Dedup groups = dedup(profile);
    const std::size_t count = groups.distinct_orders.size();
    if (count == 0)
        return std::vector<Index>{};

    for (std::size_t anchor = 0; anchor < count; ++anchor) {
        std::vector<ConflictPairSet> delta(count);
        for (std::size_t i = 0; i < count; ++i)
            delta[i] = conflict_pairs(groups.distinct_orders[anchor], groups.distinct_orders[i]);
        std::vector<std::size_t> chain(count);
        std::iota(chain.begin(), chain.end(), 0);
        std::stable_sort(chain.begin(), chain.end(),
                         [&](std::size_t x, std::size_t y) { return delta[x].size() < delta[y].size(); });
        bool nested = true;
        for (std::size_t p = 1; p < count && nested; ++p)
            nested = delta[chain[p - 1]].is_subset_of(delta[chain[p]]) && delta[chain[p - 1]].size() < delta[chain[p]].size();
        if (!nested)
            continue;
        std::vector<Index> order;
        order.reserve(profile.num_voters());
        for (std::size_t g : chain)
            order.insert(order.end(), groups.voter_groups[g].begin(), groups.voter_groups[g].end());
        return order;
    }
    return std::nullopt;
}

bool validate_sc_order(const Profile& profile, const std::vector<Index>& order)
{
    const std::size_t n = profile.num_voters();
    if (order.size() != n)
        throw std::invalid_argument("voter ordering has wrong length");
    std::vector<bool> seen(n, false);
    for (Index v : order) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("voter ordering is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    const auto m = static_cast<Index>(profile.num_alternatives());
    for (Index a = 0; a < m; ++a)
        for (Index b = a + 1; b < m; ++b) {
            int flips = 0;
            for (std::size_t p = 1; p < n; ++p) {
                const auto& prev = profile.voter(static_cast<std::size_t>(order[p - 1]));
                const auto& cur = profile.voter(static_cast<std::size_t>(order[p]));
                if (prev.prefers(a, b) != cur.prefers(a, b) && ++flips > 1)
                    return false;
            }
        }
    return true;
}

namespace {

// ---------------------------------------------------------------------------
// Definitional oracles. Nothing below calls the configuration detectors.
// ---------------------------------------------------------------------------

// Ranks along `axis` must strictly fall then strictly rise (peaked) or the reverse (caved).
bool unimodal_along(const PreferenceOrder& voter, const std::vector<Index>& axis, bool caved)
{
    std::size_t p = 1;
    auto rank = [&](std::size_t i) {
        Index r = voter.rank_of(axis[i]);
        return caved ? -r : r;
    };
    while (p < axis.size() && rank(p) < rank(p - 1))
        ++p;
    while (p < axis.size() && rank(p) > rank(p - 1))
        ++p;
    return p >= axis.size();
}

bool oracle_axis(const Profile& profile, bool caved)
{
    const std::size_t m = profile.num_alternatives();
    if (m > kOracleMaxAxisAlternatives)
        throw GuardExceeded("axis enumeration needs m <= " + std::to_string(kOracleMaxAxisAlternatives));
    std::vector<Index> axis(m);
    std::iota(axis.begin(), axis.end(), 0);
    do {
        bool ok = true;
        for (const auto& v : profile.voters())
            if (!unimodal_along(v, axis, caved)) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(axis.begin(), axis.end()));
    return false;
}

bool oracle_group_separable(const Profile& profile)
{
    const std::size_t m = profile.num_alternatives();
    if (m > kOracleMaxSeparableAlternatives)
        throw GuardExceeded("subset check needs m <= " + std::to_string(kOracleMaxSeparableAlternatives));
    if (profile.num_voters() == 0)
        return true;
    const auto& lead = profile.voter(0);
    for (std::uint32_t subset = 0; subset < (1U << m); ++subset) {
        if (std::popcount(subset) < 3)
            continue;
        // One block must be a top segment of the first voter's restricted ranking.
        std::vector<Index> restricted;
        for (Index a : lead.ranking())
            if (subset >> a & 1U)
                restricted.push_back(a);
        bool separable = false;
        for (std::size_t cut = 1; cut < restricted.size() && !separable; ++cut) {
            std::uint32_t block = 0;
            for (std::size_t i = 0; i < cut; ++i)
                block |= 1U << restricted[i];
            separable = true;
            for (const auto& v : profile.voters()) {
                // block must be a top or bottom segment of v restricted to the subset
                std::vector<bool> inside;
                for (Index a : v.ranking())
                    if (subset >> a & 1U)
                        inside.push_back((block >> a & 1U) != 0);
                std::size_t changes = 0;
                for (std::size_t i = 1; i < inside.size(); ++i)
                    changes += inside[i] != inside[i - 1];
                if (changes != 1) {
                    separable = false;
                    break;
                }
            }
        }
        if (!separable)
            return false;
    }
    return true;
}

bool oracle_single_crossing(const Profile& profile)
{
    std::set<std::vector<Index>> unique;
    for (const auto& v : profile.voters())
        unique.insert(v.ranking());
    if (unique.size() > kOracleMaxCrossingOrders)
        throw GuardExceeded("permutation check needs at most " + std::to_string(kOracleMaxCrossingOrders) +
                            " distinct orders");
    std::vector<PreferenceOrder> orders;
    for (const auto& r : unique)
        orders.emplace_back(r);
    std::vector<std::size_t> perm(orders.size());
    std::iota(perm.begin(), perm.end(), 0);
    const auto m = static_cast<Index>(profile.num_alternatives());
    do {
        bool ok = true;
        for (Index a = 0; a < m && ok; ++a)
            for (Index b = 0; b < m && ok; ++b) {
                if (a == b || orders.empty() || !orders[perm[0]].prefers(a, b))
                    continue;
                // once some voter prefers b to a, every later voter must too
                bool flipped = false;
                for (std::size_t p = 0; p < perm.size() && ok; ++p) {
                    bool b_over_a = orders[perm[p]].prefers(b, a);
                    if (flipped && !b_over_a)
                        ok = false;
                    flipped |= b_over_a;
                }
            }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

enum class Place { Top, Middle, Bottom };

Place place_of(const PreferenceOrder& v, Index x, Index y, Index z)
{
    const Index rx = v.rank_of(x), ry = v.rank_of(y), rz = v.rank_of(z);
    if (rx < ry && rx < rz)
        return Place::Top;
    if (rx > ry && rx > rz)
        return Place::Bottom;
    return Place::Middle;
}

// Voters v1,v2,v3 put a, b, c (respectively) in `place` relative to the triple.
bool diverse_on(const Profile& profile, Index a, Index b, Index c, Place place,
                std::size_t v1, std::size_t v2, std::size_t v3)
{
    return place_of(profile.voter(v1), a, b, c) == place && place_of(profile.voter(v2), b, a, c) == place &&
           place_of(profile.voter(v3), c, a, b) == place;
}

bool has_diverse_triple(const Profile& profile, Index a, Index b, Index c, Place place,
                        std::size_t i, std::size_t j, std::size_t k)
{
    const std::array<std::size_t, 3> vs = {i, j, k};
    std::array<std::size_t, 3> idx = {0, 1, 2};
    do {
        if (diverse_on(profile, a, b, c, place, vs[idx[0]], vs[idx[1]], vs[idx[2]]))
            return true;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

// Whether any three voters form the configuration for `place` on some triple.
bool oracle_diverse_free(const Profile& profile, Place place)
{
    const auto m = static_cast<Index>(profile.num_alternatives());
    const std::size_t n = profile.num_voters();
    for (Index a = 0; a < m; ++a)
        for (Index b = a + 1; b < m; ++b)
            for (Index c = b + 1; c < m; ++c)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        for (std::size_t k = j + 1; k < n; ++k)
                            if (has_diverse_triple(profile, a, b, c, place, i, j, k))
                                return false;
    return true;
}

bool oracle_value_restricted(const Profile& profile)
{
    const auto m = static_cast<Index>(profile.num_alternatives());
    const std::size_t n = profile.num_voters();
    for (Index a = 0; a < m; ++a)
        for (Index b = a + 1; b < m; ++b)
            for (Index c = b + 1; c < m; ++c)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        for (std::size_t k = j + 1; k < n; ++k)
                            if (has_diverse_triple(profile, a, b, c, Place::Top, i, j, k) &&
                                has_diverse_triple(profile, a, b, c, Place::Middle, i, j, k) &&
                                has_diverse_triple(profile, a, b, c, Place::Bottom, i, j, k))
                                return false;
    return true;
}

bool oracle_beta_restricted(const Profile& profile)
{
    const auto m = static_cast<Index>(profile.num_alternatives());
    const std::size_t n = profile.num_voters();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const auto& v1 = profile.voter(i);
            const auto& v2 = profile.voter(j);
            for (Index a = 0; a < m; ++a)
                for (Index b = 0; b < m; ++b)
                    for (Index c = 0; c < m; ++c)
                        for (Index d = 0; d < m; ++d) {
                            if (a == b || a == c || a == d || b == c || b == d || c == d)
                                continue;
                            if (v1.prefers(a, b) && v1.prefers(b, c) && v1.prefers(c, d) && v2.prefers(b, d) &&
                                v2.prefers(d, a) && v2.prefers(a, c))
                                return false;
                        }
        }
    return true;
}

}  // namespace

bool oracle_check(const Profile& profile, DomainProperty property)
{
    switch (property) {
    case DomainProperty::SinglePeaked: return oracle_axis(profile, false);
    case DomainProperty::SingleCaved: return oracle_axis(profile, true);
    case DomainProperty::GroupSeparable: return oracle_group_separable(profile);
    case DomainProperty::SingleCrossing: return oracle_single_crossing(profile);
    case DomainProperty::ValueRestricted: return oracle_value_restricted(profile);
    case DomainProperty::BestRestricted: return oracle_diverse_free(profile, Place::Top);
    case DomainProperty::MediumRestricted: return oracle_diverse_free(profile, Place::Middle);
    case DomainProperty::WorstRestricted: return oracle_diverse_free(profile, Place::Bottom);
    case DomainProperty::BetaRestricted: return oracle_beta_restricted(profile);
    }
    return false;
}

}  // namespace prefdom
