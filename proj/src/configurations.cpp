#include "prefdom/configurations.hpp"

#include <algorithm>
#include <map>

namespace prefdom {

std::string_view to_string(ConfigurationKind kind)
{
    switch (kind) {
    case ConfigurationKind::BestDiverse: return "best-diverse";
    case ConfigurationKind::MediumDiverse: return "medium-diverse";
    case ConfigurationKind::WorstDiverse: return "worst-diverse";
    case ConfigurationKind::Cyclic: return "cyclic";
    case ConfigurationKind::Alpha: return "alpha";
    case ConfigurationKind::AlphaBar: return "alpha-bar";
    case ConfigurationKind::Beta: return "beta";
    case ConfigurationKind::Gamma: return "gamma";
    case ConfigurationKind::Delta: return "delta";
    }
    return "unknown";
}

std::optional<ConfigurationKind> parse_configuration_kind(std::string_view name)
{
    for (auto kind : kAllConfigurationKinds)
        if (to_string(kind) == name)
            return kind;
    return std::nullopt;
}

std::size_t voter_arity(ConfigurationKind kind)
{
    switch (kind) {
    case ConfigurationKind::Alpha:
    case ConfigurationKind::AlphaBar:
    case ConfigurationKind::Beta: return 2;
    case ConfigurationKind::Delta: return 4;
    default: return 3;
    }
}

std::size_t alternative_arity(ConfigurationKind kind)
{
    switch (kind) {
    case ConfigurationKind::Alpha:
    case ConfigurationKind::AlphaBar:
    case ConfigurationKind::Beta:
    case ConfigurationKind::Delta: return 4;
    case ConfigurationKind::Gamma: return 6;
    default: return 3;
    }
}

namespace {

bool all_distinct(const std::vector<Index>& xs)
{
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j])
                return false;
    return true;
}

// True iff `order` ranks the listed alternatives in exactly this sequence.
bool chain(const PreferenceOrder& order, std::initializer_list<Index> seq)
{
    const Index* prev = nullptr;
    for (const Index& x : seq) {
        if (prev && !order.prefers(*prev, x))
            return false;
        prev = &x;
    }
    return true;
}

bool between(const PreferenceOrder& o, Index lo, Index mid, Index hi)
{
    return chain(o, {lo, mid, hi}) || chain(o, {hi, mid, lo});
}

// Dense rank table: rank[v * m + a].
struct RankTable {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Index> rank;

    explicit RankTable(const Profile& p) : n(p.num_voters()), m(p.num_alternatives()), rank(n * m)
    {
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t a = 0; a < m; ++a)
                rank[v * m + a] = p.voter(v).rank_of(static_cast<Index>(a));
    }

    const Index* row(std::size_t v) const { return rank.data() + v * m; }
};

// Index of the restricted order of (x,y,z) in TripleCensus slot numbering.
int pattern(Index rx, Index ry, Index rz)
{
    if (rx < ry) {
        if (ry < rz)
            return 0;
        return rx < rz ? 1 : 4;
    }
    if (rx < rz)
        return 2;
    return ry < rz ? 3 : 5;
}

// Triple position holding the top / middle / bottom place for each slot.
constexpr std::array<int, 6> kTop = {0, 0, 1, 1, 2, 2};
constexpr std::array<int, 6> kMid = {1, 2, 0, 2, 0, 1};
constexpr std::array<int, 6> kBottom = {2, 1, 2, 0, 1, 0};

std::optional<ConfigurationWitness> scan_triples(const Profile& profile, ConfigurationKind kind)
{
    const RankTable ranks(profile);
    const std::size_t m = ranks.m;
    const std::size_t n = ranks.n;
    const std::array<int, 6>* place = nullptr;
    if (kind == ConfigurationKind::BestDiverse)
        place = &kTop;
    else if (kind == ConfigurationKind::MediumDiverse)
        place = &kMid;
    else if (kind == ConfigurationKind::WorstDiverse)
        place = &kBottom;

    std::array<Index, 6> first{};
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = x + 1; y < m; ++y)
            for (std::size_t z = y + 1; z < m; ++z) {
                first.fill(-1);
                int distinct = 0;
                for (std::size_t v = 0; v < n && distinct < 6; ++v) {
                    const Index* r = ranks.row(v);
                    int pat = pattern(r[x], r[y], r[z]);
                    if (first[static_cast<std::size_t>(pat)] < 0) {
                        first[static_cast<std::size_t>(pat)] = static_cast<Index>(v);
                        ++distinct;
                    }
                }
                if (distinct < 3)
                    continue;
                const std::array<Index, 3> triple = {static_cast<Index>(x), static_cast<Index>(y),
                                                     static_cast<Index>(z)};
                if (place) {
                    std::array<Index, 3> who = {-1, -1, -1};
                    for (std::size_t pat = 0; pat < 6; ++pat) {
                        if (first[pat] < 0)
                            continue;
                        auto slot = static_cast<std::size_t>((*place)[pat]);
                        if (who[slot] < 0 || first[pat] < who[slot])
                            who[slot] = first[pat];
                    }
                    if (who[0] >= 0 && who[1] >= 0 && who[2] >= 0)
                        return ConfigurationWitness{kind, {who[0], who[1], who[2]},
                                                    {triple[0], triple[1], triple[2]}};
                } else {
                    if (first[0] >= 0 && first[3] >= 0 && first[4] >= 0)
                        return ConfigurationWitness{kind, {first[0], first[3], first[4]},
                                                    {triple[0], triple[1], triple[2]}};
                    if (first[1] >= 0 && first[5] >= 0 && first[2] >= 0)
                        return ConfigurationWitness{kind, {first[1], first[5], first[2]},
                                                    {triple[0], triple[2], triple[1]}};
                }
            }
    return std::nullopt;
}

// Alpha: v1 {a,d} > b > c, v2 {c,d} > b > a.  AlphaBar: v1 a > b > {c,d}, v2 c > b > {a,d}.
std::optional<ConfigurationWitness> scan_alpha(const Profile& profile, bool bar)
{
    const RankTable ranks(profile);
    const std::size_t m = ranks.m;
    const std::size_t n = ranks.n;
    const ConfigurationKind kind = bar ? ConfigurationKind::AlphaBar : ConfigurationKind::Alpha;
    std::vector<char> has_c(m), has_d(m);

    // d sits on the same side of b in both orders: above for Alpha, below for AlphaBar.
    auto d_ok = [bar](const Index* r1, const Index* r2, std::size_t d, std::size_t b) {
        return bar ? (r1[d] > r1[b] && r2[d] > r2[b]) : (r1[d] < r1[b] && r2[d] < r2[b]);
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const Index* r1 = ranks.row(i);
            const Index* r2 = ranks.row(j);
            for (std::size_t b = 0; b < m; ++b) {
                has_c[b] = has_d[b] = 0;
                for (std::size_t x = 0; x < m; ++x) {
                    if (r1[b] < r1[x] && r2[x] < r2[b])
                        has_c[b] = 1;
                    if (x != b && d_ok(r1, r2, x, b))
                        has_d[b] = 1;
                }
            }
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    if (!(r1[a] < r1[b] && r2[b] < r2[a] && has_c[b] && has_d[b]))
                        continue;
                    std::size_t c = 0;
                    while (!(r1[b] < r1[c] && r2[c] < r2[b]))
                        ++c;
                    std::size_t d = 0;
                    while (d == b || !d_ok(r1, r2, d, b))
                        ++d;
                    return ConfigurationWitness{kind,
                                                {static_cast<Index>(i), static_cast<Index>(j)},
                                                {static_cast<Index>(a), static_cast<Index>(b),
                                                 static_cast<Index>(c), static_cast<Index>(d)}};
                }
        }
    return std::nullopt;
}

// Beta: v1 a > b > c > d, v2 b > d > a > c.
std::optional<ConfigurationWitness> scan_beta(const Profile& profile)
{
    const RankTable ranks(profile);
    const std::size_t m = ranks.m;
    const std::size_t n = ranks.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const Index* r1 = ranks.row(i);
            const Index* r2 = ranks.row(j);
            const auto& order2 = profile.voter(j);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    if (!(r1[a] < r1[b] && r2[b] < r2[a]))
                        continue;
                    // d candidates lie strictly between b and a in v2; track the lowest v1 rank among them
                    Index deepest = -1;
                    for (Index p = r2[b] + 1; p < r2[a]; ++p)
                        deepest = std::max(deepest, r1[static_cast<std::size_t>(order2.at(static_cast<std::size_t>(p)))]);
                    if (deepest <= r1[b] + 1)
                        continue;
                    for (std::size_t c = 0; c < m; ++c) {
                        if (!(r1[b] < r1[c] && r1[c] < deepest && r2[c] > r2[a]))
                            continue;
                        for (std::size_t d = 0; d < m; ++d)
                            if (r1[d] > r1[c] && r2[b] < r2[d] && r2[d] < r2[a])
                                return ConfigurationWitness{ConfigurationKind::Beta,
                                                            {static_cast<Index>(i), static_cast<Index>(j)},
                                                            {static_cast<Index>(a), static_cast<Index>(b),
                                                             static_cast<Index>(c), static_cast<Index>(d)}};
                    }
                }
        }
    return std::nullopt;
}

// Orients pair {p,q} so that `prefers_first` voter ranks the first element higher.
std::pair<Index, Index> oriented(const PreferenceOrder& voter, std::pair<Index, Index> pq)
{
    return voter.prefers(pq.first, pq.second) ? pq : std::pair{pq.second, pq.first};
}

std::optional<ConfigurationWitness> scan_gamma(const Profile& profile)
{
    const std::size_t n = profile.num_voters();
    if (n < 3 || profile.num_alternatives() < 2)
        return std::nullopt;
    std::vector<ConflictPairSet> delta(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            delta[i * n + j] = conflict_pairs(profile.voter(i), profile.voter(j));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& dij = delta[i * n + j];
            if (dij.empty())
                continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto& dik = delta[i * n + k];
                const auto& djk = delta[j * n + k];
                auto p1 = dij.intersection(dik).first();
                if (!p1)
                    continue;
                auto p2 = dij.intersection(djk).first();
                if (!p2)
                    continue;
                auto p3 = dik.intersection(djk).first();
                if (!p3)
                    continue;
                // v1 alone has b > a; v2 alone has d > c; v3 alone has f > e.
                auto [b, a] = oriented(profile.voter(i), *p1);
                auto [d, c] = oriented(profile.voter(j), *p2);
                auto [f, e] = oriented(profile.voter(k), *p3);
                return ConfigurationWitness{ConfigurationKind::Gamma,
                                            {static_cast<Index>(i), static_cast<Index>(j), static_cast<Index>(k)},
                                            {a, b, c, d, e, f}};
            }
        }
    return std::nullopt;
}

std::optional<ConfigurationWitness> scan_delta(const Profile& profile)
{
    const std::size_t n = profile.num_voters();
    const std::size_t m = profile.num_alternatives();
    if (n < 4 || m < 2)
        return std::nullopt;
    const RankTable ranks(profile);
    const std::size_t words = (n + 63) / 64;
    const std::size_t slots = m * (m - 1) / 2;

    // Each pair splits the voters by whether they disagree with voter 0 on it.
    std::map<std::vector<std::uint64_t>, int> class_id;
    std::vector<std::vector<std::uint64_t>> class_mask;
    std::vector<std::vector<std::size_t>> class_slots;
    std::vector<int> slot_class(slots, -1);
    std::vector<std::uint64_t> mask(words);
    const Index* r0 = ranks.row(0);
    for (std::size_t a = 0, s = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b, ++s) {
            std::fill(mask.begin(), mask.end(), 0);
            bool any = false;
            const bool first_ab = r0[a] < r0[b];
            for (std::size_t v = 1; v < n; ++v) {
                const Index* r = ranks.row(v);
                if ((r[a] < r[b]) != first_ab) {
                    mask[v / 64] |= std::uint64_t{1} << (v % 64);
                    any = true;
                }
            }
            if (!any)
                continue;
            auto [it, inserted] = class_id.try_emplace(mask, static_cast<int>(class_mask.size()));
            if (inserted) {
                class_mask.push_back(mask);
                class_slots.emplace_back();
            }
            slot_class[s] = it->second;
            class_slots[static_cast<std::size_t>(it->second)].push_back(s);
        }

    const std::size_t k = class_mask.size();
    std::vector<signed char> cross(k * k, -1);
    auto crosses = [&](std::size_t c, std::size_t d) {
        signed char& memo = cross[c * k + d];
        if (memo < 0) {
            bool both = false, only_c = false, only_d = false;
            for (std::size_t w = 0; w < words; ++w) {
                both |= (class_mask[c][w] & class_mask[d][w]) != 0;
                only_c |= (class_mask[c][w] & ~class_mask[d][w]) != 0;
                only_d |= (~class_mask[c][w] & class_mask[d][w]) != 0;
            }
            memo = both && only_c && only_d ? 1 : 0;
        }
        return memo == 1;
    };

    for (std::size_t p = 0; p < slots; ++p) {
        if (slot_class[p] < 0)
            continue;
        const auto c = static_cast<std::size_t>(slot_class[p]);
        std::size_t best = slots;
        for (std::size_t d = 0; d < k; ++d) {
            if (!crosses(c, d))
                continue;
            auto it = std::upper_bound(class_slots[d].begin(), class_slots[d].end(), p);
            if (it != class_slots[d].end())
                best = std::min(best, *it);
        }
        if (best == slots)
            continue;
        auto [a, b] = ConflictPairSet::unslot(m, p);
        auto [c2, d2] = ConflictPairSet::unslot(m, best);
        std::array<Index, 4> who = {-1, -1, -1, -1};
        for (std::size_t v = 0; v < n; ++v) {
            const Index* r = ranks.row(v);
            int cls = (r[a] < r[b] ? 0 : 2) + (r[c2] < r[d2] ? 0 : 1);
            if (who[static_cast<std::size_t>(cls)] < 0)
                who[static_cast<std::size_t>(cls)] = static_cast<Index>(v);
        }
        return ConfigurationWitness{ConfigurationKind::Delta, {who[0], who[1], who[2], who[3]}, {a, b, c2, d2}};
    }
    return std::nullopt;
}

}  // namespace

bool verify_witness(const Profile& profile, const ConfigurationWitness& w)
{
    if (w.voters.size() != voter_arity(w.kind) || w.alternatives.size() != alternative_arity(w.kind))
        throw std::invalid_argument("witness arity does not match kind " + std::string(to_string(w.kind)));
    for (Index v : w.voters)
        if (v < 0 || static_cast<std::size_t>(v) >= profile.num_voters())
            throw std::out_of_range("witness voter index out of range");
    for (Index a : w.alternatives)
        if (a < 0 || static_cast<std::size_t>(a) >= profile.num_alternatives())
            throw std::out_of_range("witness alternative index out of range");

    auto voter = [&](std::size_t slot) -> const PreferenceOrder& {
        return profile.voter(static_cast<std::size_t>(w.voters[slot]));
    };
    const auto& x = w.alternatives;

    switch (w.kind) {
    case ConfigurationKind::BestDiverse: {
        if (!all_distinct(x))
            return false;
        const Index a = x[0], b = x[1], c = x[2];
        return chain(voter(0), {a, b}) && chain(voter(0), {a, c}) && chain(voter(1), {b, a}) &&
               chain(voter(1), {b, c}) && chain(voter(2), {c, a}) && chain(voter(2), {c, b});
    }
    case ConfigurationKind::MediumDiverse: {
        if (!all_distinct(x))
            return false;
        const Index a = x[0], b = x[1], c = x[2];
        return between(voter(0), b, a, c) && between(voter(1), a, b, c) && between(voter(2), a, c, b);
    }
    case ConfigurationKind::WorstDiverse: {
        if (!all_distinct(x))
            return false;
        const Index a = x[0], b = x[1], c = x[2];
        return chain(voter(0), {b, a}) && chain(voter(0), {c, a}) && chain(voter(1), {a, b}) &&
               chain(voter(1), {c, b}) && chain(voter(2), {a, c}) && chain(voter(2), {b, c});
    }
    case ConfigurationKind::Cyclic: {
        if (!all_distinct(x))
            return false;
        const Index a = x[0], b = x[1], c = x[2];
        return chain(voter(0), {a, b, c}) && chain(voter(1), {b, c, a}) && chain(voter(2), {c, a, b});
    }
    case ConfigurationKind::Alpha: {
        if (!all_distinct(x))
            return false;
        const Index a = x[0], b = x[1], c = x[2], d = x[3];
        return chain(voter(0), {a, b, c}) && chain(voter(0), {d, b}) && chain(voter(1), {c, b, a}) &&
               chain(voter(1), {d, b});
    }
    case ConfigurationKind::AlphaBar: {
        if (!all_distinct(x))
            return false;
        const Index a = x[0], b = x[1], c = x[2], d = x[3];
        return chain(voter(0), {a, b, c}) && chain(voter(0), {b, d}) && chain(voter(1), {c, b, a}) &&
               chain(voter(1), {b, d});
    }
    case ConfigurationKind::Beta: {
        if (!all_distinct(x))
            return false;
        const Index a = x[0], b = x[1], c = x[2], d = x[3];
        return chain(voter(0), {a, b, c, d}) && chain(voter(1), {b, d, a, c});
    }
    case ConfigurationKind::Gamma: {
        const Index a = x[0], b = x[1], c = x[2], d = x[3], e = x[4], f = x[5];
        if (a == b || c == d || e == f)
            return false;
        return chain(voter(0), {b, a}) && chain(voter(0), {c, d}) && chain(voter(0), {e, f}) &&
               chain(voter(1), {a, b}) && chain(voter(1), {d, c}) && chain(voter(1), {e, f}) &&
               chain(voter(2), {a, b}) && chain(voter(2), {c, d}) && chain(voter(2), {f, e});
    }
    case ConfigurationKind::Delta: {
        const Index a = x[0], b = x[1], c = x[2], d = x[3];
        if (a == b || c == d)
            return false;
        return chain(voter(0), {a, b}) && chain(voter(0), {c, d}) && chain(voter(1), {a, b}) &&
               chain(voter(1), {d, c}) && chain(voter(2), {b, a}) && chain(voter(2), {c, d}) &&
               chain(voter(3), {b, a}) && chain(voter(3), {d, c});
    }
    }
    return false;
}

std::optional<ConfigurationWitness> find_configuration(const Profile& profile, ConfigurationKind kind)
{
    switch (kind) {
    case ConfigurationKind::BestDiverse:
    case ConfigurationKind::MediumDiverse:
    case ConfigurationKind::WorstDiverse:
    case ConfigurationKind::Cyclic: return scan_triples(profile, kind);
    case ConfigurationKind::Alpha: return scan_alpha(profile, false);
    case ConfigurationKind::AlphaBar: return scan_alpha(profile, true);
    case ConfigurationKind::Beta: return scan_beta(profile);
    case ConfigurationKind::Gamma: return scan_gamma(profile);
    case ConfigurationKind::Delta: return scan_delta(profile);
    }
    return std::nullopt;
}

std::size_t TripleCensus::count(Index x, Index y, Index z) const
{
    auto pos = [this](Index a) -> Index {
        for (std::size_t i = 0; i < 3; ++i)
            if (triple[i] == a)
                return static_cast<Index>(i);
        throw std::invalid_argument("alternative not in census triple");
    };
    // ranks of triple positions under the order x > y > z
    std::array<Index, 3> r{};
    r[static_cast<std::size_t>(pos(x))] = 0;
    r[static_cast<std::size_t>(pos(y))] = 1;
    r[static_cast<std::size_t>(pos(z))] = 2;
    if (x == y || y == z || x == z)
        throw std::invalid_argument("census order needs three distinct alternatives");
    return counts[static_cast<std::size_t>(pattern(r[0], r[1], r[2]))];
}

std::size_t TripleCensus::total() const
{
    std::size_t sum = 0;
    for (auto c : counts)
        sum += c;
    return sum;
}

TripleCensus triple_census(const Profile& profile, std::array<Index, 3> triple)
{
    for (Index a : triple)
        if (a < 0 || static_cast<std::size_t>(a) >= profile.num_alternatives())
            throw std::out_of_range("census alternative out of range");
    if (triple[0] == triple[1] || triple[1] == triple[2] || triple[0] == triple[2])
        throw std::invalid_argument("census triple must be three distinct alternatives");
    TripleCensus census;
    census.triple = triple;
    for (const auto& v : profile.voters())
        ++census.counts[static_cast<std::size_t>(
            pattern(v.rank_of(triple[0]), v.rank_of(triple[1]), v.rank_of(triple[2])))];
    return census;
}

}  // namespace prefdom
