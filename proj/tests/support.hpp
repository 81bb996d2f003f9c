#pragma once

// Random instance generators and literal-definition oracles shared by the test binaries.

#include "prefdom/configurations.hpp"
#include "prefdom/profile.hpp"
#include "prefdom/reductions.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testsupport {

using prefdom::ConfigurationKind;
using prefdom::Index;
using prefdom::PreferenceOrder;
using prefdom::Profile;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<Index> shuffled(Rng& rng, std::size_t m)
{
    std::vector<Index> r(m);
    std::iota(r.begin(), r.end(), 0);
    std::shuffle(r.begin(), r.end(), rng);
    return r;
}

inline Profile uniform_profile(Rng& rng, std::size_t n, std::size_t m)
{
    std::vector<PreferenceOrder> voters;
    for (std::size_t i = 0; i < n; ++i)
        voters.emplace_back(shuffled(rng, m));
    return Profile(m, std::move(voters));
}

// Voters drawn from a small pool, so duplicates are common.
inline Profile pooled_profile(Rng& rng, std::size_t n, std::size_t m)
{
    std::vector<std::vector<Index>> pool;
    const std::size_t q = uniform(rng, 1, std::max<std::size_t>(1, n / 2 + 1));
    for (std::size_t i = 0; i < q; ++i)
        pool.push_back(shuffled(rng, m));
    std::vector<PreferenceOrder> voters;
    for (std::size_t i = 0; i < n; ++i)
        voters.emplace_back(pool[uniform(rng, 0, q - 1)]);
    return Profile(m, std::move(voters));
}

// Walks outward from a random peak on a random axis.
inline Profile single_peaked_profile(Rng& rng, std::size_t n, std::size_t m)
{
    const auto axis = shuffled(rng, m);
    std::vector<PreferenceOrder> voters;
    for (std::size_t i = 0; i < n; ++i) {
        if (m == 0) {
            voters.emplace_back(std::vector<Index>{});
            continue;
        }
        std::size_t peak = uniform(rng, 0, m - 1);
        std::size_t left = peak, right = peak;
        std::vector<Index> ranking = {axis[peak]};
        while (ranking.size() < m) {
            bool go_left = right + 1 >= m || (left > 0 && uniform(rng, 0, 1) == 0);
            if (go_left)
                ranking.push_back(axis[--left]);
            else
                ranking.push_back(axis[++right]);
        }
        voters.emplace_back(std::move(ranking));
    }
    return Profile(m, std::move(voters));
}

// Each voter swaps some adjacent pairs still in the first voter's relative order.
inline Profile single_crossing_profile(Rng& rng, std::size_t n, std::size_t m)
{
    std::vector<PreferenceOrder> voters;
    if (n == 0)
        return Profile(m, {});
    std::vector<Index> current = shuffled(rng, m);
    const PreferenceOrder first(current);
    voters.emplace_back(current);
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t swaps = uniform(rng, 0, m);
        for (std::size_t t = 0; t < swaps && m > 1; ++t) {
            std::size_t p = uniform(rng, 0, m - 2);
            if (first.prefers(current[p], current[p + 1]))
                std::swap(current[p], current[p + 1]);
        }
        voters.emplace_back(current);
    }
    std::shuffle(voters.begin(), voters.end(), rng);
    return Profile(m, std::move(voters));
}

// Random binary tree over the alternatives; each voter flips children independently.
inline Profile group_separable_profile(Rng& rng, std::size_t n, std::size_t m)
{
    struct Node {
        int left = -1, right = -1;
        Index leaf = -1;
    };
    std::vector<Node> nodes;
    std::vector<int> roots;
    for (Index a : shuffled(rng, m)) {
        nodes.push_back({-1, -1, a});
        roots.push_back(static_cast<int>(nodes.size()) - 1);
    }
    while (roots.size() > 1) {
        std::size_t i = uniform(rng, 0, roots.size() - 2);
        nodes.push_back({roots[i], roots[i + 1], -1});
        roots.erase(roots.begin() + static_cast<long>(i), roots.begin() + static_cast<long>(i) + 2);
        roots.insert(roots.begin() + static_cast<long>(i), static_cast<int>(nodes.size()) - 1);
    }
    std::vector<PreferenceOrder> voters;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<Index> ranking;
        std::vector<int> stack;
        if (!roots.empty())
            stack.push_back(roots[0]);
        while (!stack.empty()) {
            const Node node = nodes[static_cast<std::size_t>(stack.back())];
            stack.pop_back();
            if (node.leaf >= 0) {
                ranking.push_back(node.leaf);
                continue;
            }
            if (uniform(rng, 0, 1) == 0) {
                stack.push_back(node.right);
                stack.push_back(node.left);
            } else {
                stack.push_back(node.left);
                stack.push_back(node.right);
            }
        }
        voters.emplace_back(std::move(ranking));
    }
    return Profile(m, std::move(voters));
}

inline Profile perturbed(Rng& rng, const Profile& p)
{
    if (p.num_voters() == 0 || p.num_alternatives() < 2)
        return p;
    auto voters = p.voters();
    const std::size_t v = uniform(rng, 0, voters.size() - 1);
    auto ranking = voters[v].ranking();
    const std::size_t pos = uniform(rng, 0, ranking.size() - 2);
    std::swap(ranking[pos], ranking[pos + 1]);
    voters[v] = PreferenceOrder(ranking);
    return Profile(p.num_alternatives(), voters);
}

/// Mix of the generator families, optionally perturbed.
inline Profile sample_profile(Rng& rng, std::size_t max_n, std::size_t max_m, std::size_t min_n = 0,
                              std::size_t min_m = 0)
{
    const std::size_t n = uniform(rng, min_n, max_n);
    const std::size_t m = uniform(rng, min_m, max_m);
    Profile p = [&] {
        switch (uniform(rng, 0, 4)) {
        case 0: return uniform_profile(rng, n, m);
        case 1: return pooled_profile(rng, n, m);
        case 2: return single_peaked_profile(rng, n, m);
        case 3: return single_crossing_profile(rng, n, m);
        default: return group_separable_profile(rng, n, m);
        }
    }();
    if (uniform(rng, 0, 2) == 0)
        p = perturbed(rng, p);
    return p;
}

inline prefdom::Graph random_connected_graph(Rng& rng, int r, double extra_edge_probability = 0.3)
{
    std::set<std::pair<int, int>> edges;
    auto order = shuffled(rng, static_cast<std::size_t>(r));
    for (int i = 1; i < r; ++i) {
        int u = order[static_cast<std::size_t>(i)] + 1;
        int v = order[uniform(rng, 0, static_cast<std::size_t>(i) - 1)] + 1;
        edges.insert({std::min(u, v), std::max(u, v)});
    }
    std::bernoulli_distribution extra(extra_edge_probability);
    for (int u = 1; u <= r; ++u)
        for (int v = u + 1; v <= r; ++v)
            if (extra(rng))
                edges.insert({u, v});
    return prefdom::Graph{r, {edges.begin(), edges.end()}};
}

// ---------------------------------------------------------------------------
// Literal configuration definitions, enumerated exhaustively.
// ---------------------------------------------------------------------------

inline bool ranks_in_order(const PreferenceOrder& v, std::initializer_list<Index> chain)
{
    const Index* prev = nullptr;
    for (const Index& x : chain) {
        if (prev && !v.prefers(*prev, x))
            return false;
        prev = &x;
    }
    return true;
}

inline bool top_of(const PreferenceOrder& v, Index x, Index y, Index z)
{
    return v.prefers(x, y) && v.prefers(x, z);
}
inline bool bottom_of(const PreferenceOrder& v, Index x, Index y, Index z)
{
    return v.prefers(y, x) && v.prefers(z, x);
}
inline bool middle_of(const PreferenceOrder& v, Index x, Index y, Index z)
{
    return !top_of(v, x, y, z) && !bottom_of(v, x, y, z);
}

/// Whether some assignment of voters and alternatives realizes `kind`.
inline bool exists_configuration(const Profile& p, ConfigurationKind kind)
{
    const auto n = static_cast<Index>(p.num_voters());
    const auto m = static_cast<Index>(p.num_alternatives());
    auto V = [&](Index i) -> const PreferenceOrder& { return p.voter(static_cast<std::size_t>(i)); };

    switch (kind) {
    case ConfigurationKind::BestDiverse:
    case ConfigurationKind::MediumDiverse:
    case ConfigurationKind::WorstDiverse:
    case ConfigurationKind::Cyclic:
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                for (Index k = 0; k < n; ++k) {
                    if (i == j || j == k || i == k)
                        continue;
                    for (Index a = 0; a < m; ++a)
                        for (Index b = 0; b < m; ++b)
                            for (Index c = 0; c < m; ++c) {
                                if (a == b || b == c || a == c)
                                    continue;
                                bool ok = false;
                                if (kind == ConfigurationKind::BestDiverse)
                                    ok = top_of(V(i), a, b, c) && top_of(V(j), b, a, c) && top_of(V(k), c, a, b);
                                else if (kind == ConfigurationKind::MediumDiverse)
                                    ok = middle_of(V(i), a, b, c) && middle_of(V(j), b, a, c) &&
                                         middle_of(V(k), c, a, b);
                                else if (kind == ConfigurationKind::WorstDiverse)
                                    ok = bottom_of(V(i), a, b, c) && bottom_of(V(j), b, a, c) &&
                                         bottom_of(V(k), c, a, b);
                                else
                                    ok = ranks_in_order(V(i), {a, b, c}) && ranks_in_order(V(j), {b, c, a}) &&
                                         ranks_in_order(V(k), {c, a, b});
                                if (ok)
                                    return true;
                            }
                }
        return false;
    case ConfigurationKind::Alpha:
    case ConfigurationKind::AlphaBar:
    case ConfigurationKind::Beta:
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                for (Index a = 0; a < m; ++a)
                    for (Index b = 0; b < m; ++b)
                        for (Index c = 0; c < m; ++c)
                            for (Index d = 0; d < m; ++d) {
                                if (a == b || a == c || a == d || b == c || b == d || c == d)
                                    continue;
                                bool ok = false;
                                if (kind == ConfigurationKind::Alpha)
                                    ok = ranks_in_order(V(i), {a, b, c}) && ranks_in_order(V(i), {d, b}) &&
                                         ranks_in_order(V(j), {c, b, a}) && ranks_in_order(V(j), {d, b});
                                else if (kind == ConfigurationKind::AlphaBar)
                                    ok = ranks_in_order(V(i), {a, b, c}) && ranks_in_order(V(i), {b, d}) &&
                                         ranks_in_order(V(j), {c, b, a}) && ranks_in_order(V(j), {b, d});
                                else
                                    ok = ranks_in_order(V(i), {a, b, c, d}) && ranks_in_order(V(j), {b, d, a, c});
                                if (ok)
                                    return true;
                            }
            }
        return false;
    case ConfigurationKind::Gamma: {
        // voter x alone disagrees with the other two on some pair
        auto lone = [&](Index x, Index y, Index z) {
            for (Index a = 0; a < m; ++a)
                for (Index b = 0; b < m; ++b)
                    if (a != b && V(x).prefers(b, a) && V(y).prefers(a, b) && V(z).prefers(a, b))
                        return true;
            return false;
        };
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                for (Index k = 0; k < n; ++k)
                    if (i != j && j != k && i != k && lone(i, j, k) && lone(j, i, k) && lone(k, i, j))
                        return true;
        return false;
    }
    case ConfigurationKind::Delta: {
        // (w,x) prefer a to b and (y,z) the reverse
        auto splits = [&](Index w, Index x, Index y, Index z) {
            for (Index a = 0; a < m; ++a)
                for (Index b = 0; b < m; ++b)
                    if (a != b && V(w).prefers(a, b) && V(x).prefers(a, b) && V(y).prefers(b, a) &&
                        V(z).prefers(b, a))
                        return true;
            return false;
        };
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                for (Index k = 0; k < n; ++k)
                    for (Index l = 0; l < n; ++l) {
                        std::set<Index> distinct = {i, j, k, l};
                        if (distinct.size() == 4 && splits(i, j, k, l) && splits(i, k, j, l))
                            return true;
                    }
        return false;
    }
    }
    return false;
}

/// Reads the hand-typed reduction table: one "voter: item item ..." line per voter, where
/// O, Ō, X<i>, X̄<i> stand for whole blocks of `block_size` / `width` alternatives.
inline std::vector<std::pair<std::string, std::vector<std::string>>> expand_table_rows(const std::string& path,
                                                                                     std::size_t block_size,
                                                                                     std::size_t width)
{
    std::ifstream in(path);
    std::vector<std::pair<std::string, std::vector<std::string>>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream tokens(line);
        std::string voter, item;
        tokens >> voter;
        voter.pop_back();
        std::vector<std::string> names;
        while (tokens >> item) {
            if (item == "O" || item == "Ō") {
                const std::string prefix = item == "O" ? "o" : "ō";
                for (std::size_t i = 1; i <= block_size; ++i)
                    names.push_back(prefix + std::to_string(i));
            } else if (item.rfind("X̄", 0) == 0 || item[0] == 'X') {
                const bool bar = item.rfind("X̄", 0) == 0;
                const std::string var = item.substr(bar ? std::string("X̄").size() : 1);
                for (std::size_t l = 1; l <= width; ++l)
                    names.push_back((bar ? "x̄" : "x") + var + "_" + std::to_string(l));
            } else {
                names.push_back(item);
            }
        }
        rows.emplace_back(voter, names);
    }
    return rows;
}

}  // namespace testsupport
