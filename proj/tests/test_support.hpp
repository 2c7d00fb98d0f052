#pragma once

// Shared corpus builders and independent naive oracles. Everything here
// must stay independent of the optimized paths it is used to check:
// the oracles enumerate blindly and re-derive results from definitions.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "blocks.hpp"
#include "cayley.hpp"
#include "digraph.hpp"
#include "group.hpp"
#include "verify.hpp"

namespace hfg::test {

inline std::vector<std::vector<int>> catalog_moduli(int max_order) {
    std::vector<std::vector<int>> out;
    for (int n = 1; n <= max_order; ++n)
        for (auto& f : moduli_factorizations(n)) out.push_back(f);
    return out;
}

inline std::vector<int> non_identity(const Group& g) {
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x)
        if (x != g.identity()) out.push_back(x);
    return out;
}

inline std::vector<SubsetS> all_subsets(const Group& g) {
    auto universe = non_identity(g);
    std::vector<SubsetS> out;
    for (uint32_t mask = 0; mask < (uint32_t{1} << universe.size()); ++mask) {
        std::vector<int> elems;
        for (size_t i = 0; i < universe.size(); ++i)
            if (mask & (uint32_t{1} << i)) elems.push_back(universe[i]);
        out.push_back(SubsetS{std::move(elems)});
    }
    return out;
}

// Naive atom oracle: all non-decreasing multisets over S up to length
// |G|, filtered by the block and minimality definitions directly.
inline std::vector<Atom> naive_atoms(const Group& g, const SubsetS& s) {
    std::vector<Atom> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, size_t min_pos) -> void {
        if (!cur.empty() && is_block(g, cur)) {
            Block b{cur};
            if (is_atom(g, b)) out.push_back(Atom{b, cross_number(g, b)});
        }
        if (static_cast<int>(cur.size()) == g.order()) return;
        for (size_t i = min_pos; i < s.elems.size(); ++i) {
            cur.push_back(s.elems[i]);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const Atom& a, const Atom& b) { return a.block < b.block; });
    return out;
}

// Small digraph builders.
inline WeightedDigraph directed_path(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1, Rational(1), -1});
    return WeightedDigraph(n, std::move(arcs));
}

inline WeightedDigraph directed_cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n, Rational(1), -1});
    return WeightedDigraph(n, std::move(arcs));
}

inline WeightedDigraph complete_digraph(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) arcs.push_back({i, j, Rational(1), -1});
    return WeightedDigraph(n, std::move(arcs));
}

// Symmetric digraph from an undirected edge list; per-edge colors optional.
inline WeightedDigraph graph_of(int n, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<int>* colors = nullptr) {
    std::vector<Arc> arcs;
    for (size_t i = 0; i < edges.size(); ++i) {
        int c = colors ? (*colors)[i] : -1;
        arcs.push_back({edges[i].first, edges[i].second, Rational(1), c});
        arcs.push_back({edges[i].second, edges[i].first, Rational(1), c});
    }
    return WeightedDigraph(n, std::move(arcs));
}

inline WeightedDigraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return graph_of(n, edges);
}

inline WeightedDigraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return graph_of(a + b, edges);
}

inline WeightedDigraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return graph_of(n, edges);
}

inline WeightedDigraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return graph_of(n, edges);
}

inline WeightedDigraph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return graph_of(leaves + 1, edges);
}

// Mixed corpus of small digraphs for property sweeps.
inline std::vector<WeightedDigraph> digraph_corpus() {
    std::vector<WeightedDigraph> out;
    for (int n = 2; n <= 6; ++n) out.push_back(directed_path(n));
    for (int n = 3; n <= 6; ++n) out.push_back(directed_cycle(n));
    for (int n = 2; n <= 5; ++n) out.push_back(complete_digraph(n));
    out.push_back(path_graph(4));
    out.push_back(cycle_graph(4));
    out.push_back(cycle_graph(5));
    out.push_back(star_graph(4));
    out.push_back(complete_graph(4));
    out.push_back(complete_bipartite(2, 3));
    // a couple of Cayley digraphs
    {
        AbelianGroup z6({6});
        out.push_back(build_cayley(z6, SubsetS::of(z6, {1, 2})).base);
        AbelianGroup z2z2({2, 2});
        out.push_back(build_cayley(z2z2, SubsetS::of(z2z2, {1, 2, 3})).base);
    }
    return out;
}

}  // namespace hfg::test
