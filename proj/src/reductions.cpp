#include "prefdom/reductions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prefdom {

void validate_graph(const Graph& g)
{
    if (g.r < 0)
        throw std::invalid_argument("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u < 1 || v > g.r || u >= v)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") must satisfy 1 <= u < v <= " + std::to_string(g.r));
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
}

void validate_max2sat(const Max2SatInstance& inst)
{
    if (inst.r < 0)
        throw std::invalid_argument("negative variable count");
    for (auto [x, y] : inst.clauses)
        for (int lit : {x, y})
            if (lit == 0 || std::abs(lit) > inst.r)
                throw std::invalid_argument("literal " + std::to_string(lit) + " out of range");
    if (inst.h < 0 || static_cast<std::size_t>(inst.h) > inst.clauses.size())
        throw std::invalid_argument("h must lie in 0..s");
}

bool is_connected(const Graph& g)
{
    if (g.r <= 1)
        return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.r) + 1);
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack = {1};
    seen[1] = true;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.r;
}

namespace {

// Non-empty, comment-stripped lines as integer rows.
std::vector<std::pair<std::size_t, std::vector<long long>>> integer_rows(std::istream& in)
{
    std::vector<std::pair<std::size_t, std::vector<long long>>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::vector<long long> row;
        std::string token;
        while (tokens >> token) {
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size())
                throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + token + "'");
            row.push_back(value);
        }
        if (!row.empty())
            rows.emplace_back(line_no, std::move(row));
    }
    return rows;
}

std::string at_line(std::size_t line_no)
{
    return "line " + std::to_string(line_no) + ": ";
}

template <typename T, typename Parse>
T read_file(const std::string& path, Parse parse)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse(in);
}

}  // namespace

Graph parse_graph(std::istream& in)
{
    const auto rows = integer_rows(in);
    if (rows.empty())
        throw ParseError("missing header line 'r s'");
    const auto& [header_line, header] = rows.front();
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw ParseError(at_line(header_line) + "header must be 'r s' with non-negative counts");
    Graph g;
    g.r = static_cast<int>(header[0]);
    const auto s = static_cast<std::size_t>(header[1]);
    if (rows.size() - 1 != s)
        throw ParseError("expected " + std::to_string(s) + " edges, found " + std::to_string(rows.size() - 1));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& [line_no, row] = rows[i];
        if (row.size() != 2)
            throw ParseError(at_line(line_no) + "edge line must be 'u v'");
        g.edges.emplace_back(static_cast<int>(row[0]), static_cast<int>(row[1]));
    }
    try {
        validate_graph(g);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return g;
}

Graph read_graph_file(const std::string& path)
{
    return read_file<Graph>(path, [](std::istream& in) { return parse_graph(in); });
}

Max2SatInstance parse_max2sat(std::istream& in)
{
    const auto rows = integer_rows(in);
    if (rows.empty())
        throw ParseError("missing header line 'r s h'");
    const auto& [header_line, header] = rows.front();
    if (header.size() != 3 || header[0] < 0 || header[1] < 0)
        throw ParseError(at_line(header_line) + "header must be 'r s h' with non-negative counts");
    Max2SatInstance inst;
    inst.r = static_cast<int>(header[0]);
    inst.h = static_cast<int>(header[2]);
    const auto s = static_cast<std::size_t>(header[1]);
    if (rows.size() - 1 != s)
        throw ParseError("expected " + std::to_string(s) + " clauses, found " + std::to_string(rows.size() - 1));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& [line_no, row] = rows[i];
        if (row.size() != 2)
            throw ParseError(at_line(line_no) + "clause line must hold two literals");
        inst.clauses.emplace_back(static_cast<int>(row[0]), static_cast<int>(row[1]));
    }
    try {
        validate_max2sat(inst);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return inst;
}

Max2SatInstance read_max2sat_file(const std::string& path)
{
    return read_file<Max2SatInstance>(path, [](std::istream& in) { return parse_max2sat(in); });
}

namespace {

void require_connected_four(const Graph& g)
{
    validate_graph(g);
    if (g.r < 4)
        throw std::invalid_argument("graph needs at least four vertices");
    if (!is_connected(g))
        throw std::invalid_argument("graph must be connected");
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t count, std::size_t first = 1)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i)
        names.push_back(prefix + std::to_string(first + i));
    return names;
}

// One block of alternatives per edge. `block(role)` lists offsets for the lower endpoint (0),
// the higher endpoint (1) and every other voter (2).
template <typename BlockOrder>
Profile edge_block_profile(const Graph& g, const std::string& letters, BlockOrder block)
{
    const std::size_t width = letters.size();
    const std::size_t s = g.edges.size();
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= s; ++j)
        for (char c : letters)
            names.push_back(std::string(1, c) + std::to_string(j));
    std::vector<PreferenceOrder> voters;
    for (int v = 1; v <= g.r; ++v) {
        std::vector<Index> ranking;
        for (std::size_t j = 0; j < s; ++j) {
            const auto [lo, hi] = g.edges[j];
            for (int offset : block(v == lo ? 0 : v == hi ? 1 : 2))
                ranking.push_back(static_cast<Index>(j * width) + offset);
        }
        voters.emplace_back(std::move(ranking));
    }
    return Profile(width * s, std::move(voters), std::move(names));
}

}  // namespace

Profile vc_to_value_md(const Graph& g)
{
    require_connected_four(g);
    // a=0 b=1 c=2; lower endpoint c>a>b, higher b>c>a, others a>b>c
    return edge_block_profile(g, "abc", [](int role) -> std::vector<int> {
        if (role == 0)
            return {2, 0, 1};
        if (role == 1)
            return {1, 2, 0};
        return {0, 1, 2};
    });
}

Profile vc_to_beta_md(const Graph& g)
{
    require_connected_four(g);
    // lower a>b>c>d, higher b>d>a>c, others d>a>b>c
    return edge_block_profile(g, "abcd", [](int role) -> std::vector<int> {
        if (role == 0)
            return {0, 1, 2, 3};
        if (role == 1)
            return {1, 3, 0, 2};
        return {3, 0, 1, 2};
    });
}

Profile vc_to_value_ad(const Graph& g, std::size_t k)
{
    validate_graph(g);
    const auto r = static_cast<std::size_t>(g.r);
    auto names = numbered("a", r);
    auto dummies = numbered("d", k + 1);
    names.insert(names.end(), dummies.begin(), dummies.end());

    std::vector<Index> dummy_block(k + 1);
    std::iota(dummy_block.begin(), dummy_block.end(), static_cast<Index>(r));

    // tops, then the dummies, then the remaining a's ascending
    auto ranking = [&](std::vector<Index> tops) {
        std::vector<Index> out = tops;
        out.insert(out.end(), dummy_block.begin(), dummy_block.end());
        for (Index a = 0; a < static_cast<Index>(r); ++a)
            if (std::find(tops.begin(), tops.end(), a) == tops.end())
                out.push_back(a);
        return PreferenceOrder(std::move(out));
    };

    std::vector<PreferenceOrder> voters = {ranking({})};
    for (auto [u, v] : g.edges) {
        voters.push_back(ranking({u - 1, v - 1}));
        voters.push_back(ranking({v - 1}));
    }
    auto voter_names = numbered("v", voters.size(), 0);
    return Profile(r + k + 1, std::move(voters), std::move(names), std::move(voter_names));
}

Profile vc_to_beta_ad(const Graph& g)
{
    validate_graph(g);
    const auto r = static_cast<std::size_t>(g.r);
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= r; ++j) {
        names.push_back("d" + std::to_string(j));
        names.push_back("a" + std::to_string(j));
    }
    auto a_index = [](int j) { return static_cast<Index>(2 * (j - 1) + 1); };

    auto ranking = [&](std::vector<Index> tops) {
        std::vector<Index> out = tops;
        for (Index x = 0; x < static_cast<Index>(2 * r); ++x)
            if (std::find(tops.begin(), tops.end(), x) == tops.end())
                out.push_back(x);
        return PreferenceOrder(std::move(out));
    };

    std::vector<PreferenceOrder> voters = {ranking({})};
    for (auto [u, v] : g.edges)
        voters.push_back(ranking({a_index(u), a_index(v)}));
    auto voter_names = numbered("v", voters.size(), 0);
    return Profile(2 * r, std::move(voters), std::move(names), std::move(voter_names));
}

Max2SatReduction max2sat_to_sc_ad(const Max2SatInstance& inst)
{
    validate_max2sat(inst);
    for (auto [x, y] : inst.clauses)
        if (std::abs(x) == std::abs(y))
            throw std::invalid_argument("clause literals must use distinct variables");

    const auto r = static_cast<std::size_t>(inst.r);
    const std::size_t s = inst.clauses.size();
    const std::size_t t = 2 * (r * s + r + s) + 1;
    const std::size_t width = s + 1;

    std::vector<std::string> names;
    for (std::size_t i = 1; i <= t; ++i)
        names.push_back("o" + std::to_string(i));
    for (std::size_t i = 1; i <= t; ++i)
        names.push_back("ō" + std::to_string(i));
    for (std::size_t i = 1; i <= r; ++i) {
        for (std::size_t l = 1; l <= width; ++l)
            names.push_back("x" + std::to_string(i) + "_" + std::to_string(l));
        for (std::size_t l = 1; l <= width; ++l)
            names.push_back("x̄" + std::to_string(i) + "_" + std::to_string(l));
    }
    for (std::size_t j = 1; j <= s; ++j) {
        names.push_back("a" + std::to_string(j));
        names.push_back("b" + std::to_string(j));
    }
    const std::size_t m = names.size();

    auto range = [](std::size_t first, std::size_t count) {
        std::vector<Index> out(count);
        std::iota(out.begin(), out.end(), static_cast<Index>(first));
        return out;
    };
    const auto o_block = range(0, t);
    const auto o_bar_block = range(t, t);
    // literal block: variable i (1-based), negated or not
    auto literal_block = [&](std::size_t i, bool negated) {
        return range(2 * t + (2 * (i - 1) + (negated ? 1 : 0)) * width, width);
    };
    const Index a_base = static_cast<Index>(2 * t + 2 * r * width);
    auto a_of = [&](std::size_t j) { return a_base + static_cast<Index>(2 * (j - 1)); };
    auto b_of = [&](std::size_t j) { return a_base + static_cast<Index>(2 * (j - 1) + 1); };

    auto append = [](std::vector<Index>& out, const std::vector<Index>& block) {
        out.insert(out.end(), block.begin(), block.end());
    };

    std::vector<PreferenceOrder> voters;
    std::vector<std::string> voter_names;
    for (std::size_t i = 1; i <= r; ++i)
        for (bool o_first : {true, false}) {
            std::vector<Index> ranking;
            append(ranking, o_first ? o_block : o_bar_block);
            append(ranking, o_first ? o_bar_block : o_block);
            for (std::size_t l = 1; l <= r; ++l) {
                append(ranking, literal_block(l, l == i));
                append(ranking, literal_block(l, l != i));
            }
            for (std::size_t j = 1; j <= s; ++j) {
                ranking.push_back(a_of(j));
                ranking.push_back(b_of(j));
            }
            voters.emplace_back(std::move(ranking));
            voter_names.push_back("v" + std::to_string(voters.size()));
        }

    // (a below X1, b below X2) for w_{4j-3}, ..., w_{4j}
    constexpr std::array<std::pair<bool, bool>, 4> kPatterns = {
        std::pair{true, false}, std::pair{true, true}, std::pair{false, false}, std::pair{false, true}};
    for (std::size_t j = 1; j <= s; ++j) {
        auto [x, y] = inst.clauses[j - 1];
        if (std::abs(x) > std::abs(y))
            std::swap(x, y);
        const std::size_t first_var = static_cast<std::size_t>(std::abs(x));
        const std::size_t second_var = static_cast<std::size_t>(std::abs(y));
        for (std::size_t p = 0; p < kPatterns.size(); ++p) {
            const auto [a_below, b_below] = kPatterns[p];
            std::vector<Index> ranking;
            append(ranking, o_bar_block);
            append(ranking, o_block);
            for (std::size_t l = 1; l < j; ++l) {
                ranking.push_back(a_of(l));
                ranking.push_back(b_of(l));
            }
            for (std::size_t i = 1; i <= r; ++i)
                for (bool negated : {false, true}) {
                    const bool holds_a = i == first_var && negated == (x < 0);
                    const bool holds_b = i == second_var && negated == (y < 0);
                    if (holds_a && !a_below)
                        ranking.push_back(a_of(j));
                    if (holds_b && !b_below)
                        ranking.push_back(b_of(j));
                    append(ranking, literal_block(i, negated));
                    if (holds_a && a_below)
                        ranking.push_back(a_of(j));
                    if (holds_b && b_below)
                        ranking.push_back(b_of(j));
                }
            for (std::size_t l = j + 1; l <= s; ++l) {
                ranking.push_back(a_of(l));
                ranking.push_back(b_of(l));
            }
            voters.emplace_back(std::move(ranking));
            voter_names.push_back("w" + std::to_string(4 * (j - 1) + p + 1));
        }
    }

    Max2SatReduction out{Profile(m, std::move(voters), std::move(names), std::move(voter_names)), 0};
    out.k = r * (s + 1) + (s - static_cast<std::size_t>(inst.h));
    return out;
}

std::size_t oracle_vertex_cover(const Graph& g)
{
    validate_graph(g);
    if (g.r > kOracleMaxVariables)
        throw GuardExceeded("vertex cover oracle needs r <= " + std::to_string(kOracleMaxVariables));
    std::size_t best = static_cast<std::size_t>(g.r);
    for (std::uint32_t mask = 0; mask < (1U << g.r); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size >= best)
            continue;
        bool covers = std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
            return (mask >> (e.first - 1) & 1U) || (mask >> (e.second - 1) & 1U);
        });
        if (covers)
            best = size;
    }
    return best;
}

std::size_t oracle_max2sat(const Max2SatInstance& inst)
{
    if (inst.r > kOracleMaxVariables)
        throw GuardExceeded("Max2Sat oracle needs r <= " + std::to_string(kOracleMaxVariables));
    for (auto [x, y] : inst.clauses)
        for (int lit : {x, y})
            if (lit == 0 || std::abs(lit) > inst.r)
                throw std::invalid_argument("literal " + std::to_string(lit) + " out of range");
    std::size_t best = 0;
    for (std::uint32_t assignment = 0; assignment < (1U << inst.r); ++assignment) {
        auto truth = [&](int lit) {
            const bool value = assignment >> (std::abs(lit) - 1) & 1U;
            return lit > 0 ? value : !value;
        };
        std::size_t satisfied = 0;
        for (auto [x, y] : inst.clauses)
            satisfied += truth(x) || truth(y);
        best = std::max(best, satisfied);
    }
    return best;
}

}  // namespace prefdom
