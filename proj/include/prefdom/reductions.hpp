#pragma once

#include "prefdom/profile.hpp"

#include <cstddef>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace prefdom {

/// Undirected graph on vertices 1..r. Edges are (u,v) with u < v.
struct Graph {
    int r = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Literals are nonzero; -i negates variable i.
struct Max2SatInstance {
    int r = 0;
    std::vector<std::pair<int, int>> clauses;
    int h = 0;
};

/// Throws std::invalid_argument if the graph breaks its invariants.
void validate_graph(const Graph& g);
void validate_max2sat(const Max2SatInstance& inst);

bool is_connected(const Graph& g);

/// "r s" then s lines "u v". Throws ParseError.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
/// "r s h" then s lines with two literals. Throws ParseError.
Max2SatInstance parse_max2sat(std::istream& in);
Max2SatInstance read_max2sat_file(const std::string& path);

/// Edge blocks a_j b_j c_j. Requires a connected graph with r >= 4.
Profile vc_to_value_md(const Graph& g);
/// Alternatives a_1..a_r then dummies d_1..d_{k+1}; voters v0..v{2s}.
Profile vc_to_value_ad(const Graph& g, std::size_t k);
/// Edge blocks a_j b_j c_j d_j. Requires a connected graph with r >= 4.
Profile vc_to_beta_md(const Graph& g);
/// Canonical order d_1 a_1 d_2 a_2 ... d_r a_r; voters v0..v{s}.
/// The hardness argument also wants r >= k+2; that is not checked here.
Profile vc_to_beta_ad(const Graph& g);

struct Max2SatReduction {
    Profile profile;
    std::size_t k = 0;
};

/// Alternatives in the order O, Ō, X_1, X̄_1, ..., X_r, X̄_r, a_1, b_1, ..., a_s, b_s.
/// Throws std::invalid_argument on a clause whose literals share a variable, or if k would be negative.
Max2SatReduction max2sat_to_sc_ad(const Max2SatInstance& inst);

inline constexpr int kOracleMaxVariables = 20;

/// Exact minimum vertex cover by subset enumeration; throws GuardExceeded when r > 20.
std::size_t oracle_vertex_cover(const Graph& g);
/// Maximum number of simultaneously satisfiable clauses; throws GuardExceeded when r > 20.
std::size_t oracle_max2sat(const Max2SatInstance& inst);

}  // namespace prefdom
