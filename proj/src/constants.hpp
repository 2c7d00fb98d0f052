#pragma once

#include <optional>
#include <vector>

#include "blocks.hpp"
#include "digraph.hpp"
#include "voltage.hpp"

namespace hfg {

struct ConstantsReport {
    int mu = 0, t = 0, mu0 = 0, t0 = 0;
    std::vector<int> mu_witness;                // a maximum-cardinality HF subset
    std::vector<std::vector<int>> t_cover;      // minimum HF cover of G \ {e}
    std::vector<int> mu0_witness;
    std::vector<std::vector<int>> t0_cover;
    int max_atom_len = 0;                       // over S = G \ {e}
};

// mu / t / mu0 / t0 by subset-lattice search with monotonicity pruning
// (supersets of a non-HF set are never tested) and exact set cover over
// the maximal HF / WHF sets.
ConstantsReport compute_mu_t(const Group& g, int order_cap = 12);

struct StarConstantsReport {
    int mu_star = 0, t_star = 0;
    std::vector<int> mu_star_witness;           // color ids
    std::vector<std::vector<int>> t_star_cover;
    // KVL-based variants, present when a voltage assignment is supplied.
    std::optional<int> mu0_star, t0_star;
    std::vector<int> mu0_star_witness;
    std::vector<std::vector<int>> t0_star_cover;
};

// mu* / t* over color subsets: A_S = arcs whose color lies in S, tested
// for geodeticality (graph mode when the digraph and its coloring are
// symmetric). mu0* / t0* use the KVL criterion instead.
StarConstantsReport compute_mu_star_t_star(const WeightedDigraph& d,
                                           const std::optional<VoltageAssignment>& v = std::nullopt);

struct BoundsReport {
    long long edge_count = 0;
    int delta = 0;
    int chi_prime = 0;
    int t = 0;
    int mu = 0;                    // max edge count of a geodetical subgraph
    Rational e_over_chi{0};
    bool t_le_chi = false;
    bool t_le_delta_plus_one = false;
    bool chi_in_vizing_range = false;  // chi' in {Delta, Delta+1}
    bool mono_classes_up = false;      // every monochromatic class is UP
    bool mu_le_e_over_chi = false;     // printed, never asserted
    std::vector<int> edge_colors;      // per edge, the proper coloring used
};

// Exact chromatic index by backtracking at k = Delta (greedy Delta+1 as
// the fallback), t and mu by exhaustive search over edge subsets with
// monotone pruning. Input must be a symmetric digraph; a supplied
// coloring must be proper on edges.
BoundsReport check_coloring_bounds(const WeightedDigraph& graph,
                              const std::optional<std::vector<int>>& edge_coloring = std::nullopt,
                              int max_edges = 12);

// Exact chromatic index of a simple graph given as a symmetric digraph.
int chromatic_index(const WeightedDigraph& graph, std::vector<int>* edge_colors = nullptr);

struct Potential {
    std::vector<Rational> p;  // per vertex
};

// D_g for g = delta p: keeps arcs with p(fin) - p(init) > 0, weighted so
// that every arc's length is exactly that difference; path lengths then
// telescope to p(y) - p(x), which makes the result geodetical.
WeightedDigraph bond_induced_digraph(const WeightedDigraph& d, const Potential& p);

// Reproducible small-rational potential, fixed generator per seed.
Potential random_potential(int vertex_count, unsigned seed);

}  // namespace hfg
