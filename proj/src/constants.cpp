#include "constants.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>

namespace hfg {

namespace {

using Mask = uint32_t;

std::vector<int> mask_to_elems(Mask mask, const std::vector<int>& universe) {
    std::vector<int> out;
    for (size_t i = 0; i < universe.size(); ++i)
        if (mask & (Mask{1} << i)) out.push_back(universe[i]);
    return out;
}

// Evaluates a downward-closed predicate over the whole subset lattice.
// A mask is tested only if every one-element-smaller submask already
// holds; everything above a failure is marked false for free.
std::vector<bool> monotone_lattice(size_t k, const std::function<bool(Mask)>& pred) {
    std::vector<bool> holds(size_t{1} << k, false);
    holds[0] = true;  // empty set holds vacuously for all predicates used here
    for (Mask mask = 1; mask < (Mask{1} << k); ++mask) {
        bool candidate = true;
        for (size_t i = 0; i < k && candidate; ++i)
            if (mask & (Mask{1} << i)) candidate = holds[mask & ~(Mask{1} << i)];
        holds[mask] = candidate && pred(mask);
    }
    return holds;
}

std::vector<Mask> maximal_masks(const std::vector<bool>& holds, size_t k) {
    std::vector<Mask> out;
    for (Mask mask = 0; mask < (Mask{1} << k); ++mask) {
        if (!holds[mask]) continue;
        bool maximal = true;
        for (size_t i = 0; i < k && maximal; ++i)
            if (!(mask & (Mask{1} << i)) && holds[mask | (Mask{1} << i)]) maximal = false;
        if (maximal) out.push_back(mask);
    }
    return out;
}

// Exact minimum set cover of `universe_mask` by the candidate masks.
// Branches on the least-covered uncovered element.
struct SetCover {
    const std::vector<Mask>& candidates;
    Mask universe;
    int best_size = -1;
    std::vector<Mask> best, current;

    void solve(Mask covered) {
        if (covered == universe) {
            if (best_size < 0 || static_cast<int>(current.size()) < best_size) {
                best_size = static_cast<int>(current.size());
                best = current;
            }
            return;
        }
        // at least one more set is needed; prune when that cannot beat best
        if (best_size >= 0 && static_cast<int>(current.size()) + 1 >= best_size) return;
        // least-covered uncovered element
        int pick = -1, pick_count = -1;
        for (int i = 0; i < 32; ++i) {
            Mask bit = Mask{1} << i;
            if (!(universe & bit) || (covered & bit)) continue;
            int cnt = 0;
            for (Mask c : candidates)
                if (c & bit) ++cnt;
            if (pick < 0 || cnt < pick_count) {
                pick = i;
                pick_count = cnt;
            }
        }
        if (pick < 0 || pick_count == 0) return;  // uncoverable
        for (Mask c : candidates) {
            if (!(c & (Mask{1} << pick))) continue;
            current.push_back(c);
            solve(covered | c);
            current.pop_back();
        }
    }
};

std::vector<Mask> min_cover(const std::vector<Mask>& candidates, Mask universe) {
    if (universe == 0) return {};
    SetCover sc{candidates, universe};
    sc.solve(0);
    if (sc.best_size < 0) throw std::logic_error("universe is not coverable");
    return sc.best;
}

// Lex-smallest element list among maximum-popcount masks.
Mask best_witness(const std::vector<bool>& holds, size_t k, const std::vector<int>& universe) {
    int best_count = -1;
    Mask best = 0;
    std::vector<int> best_elems;
    for (Mask mask = 0; mask < (Mask{1} << k); ++mask) {
        if (!holds[mask]) continue;
        int pc = std::popcount(mask);
        if (pc < best_count) continue;
        auto elems = mask_to_elems(mask, universe);
        if (pc > best_count || elems < best_elems) {
            best_count = pc;
            best = mask;
            best_elems = std::move(elems);
        }
    }
    return best;
}

}  // namespace

ConstantsReport compute_mu_t(const Group& g, int order_cap) {
    if (g.order() > order_cap)
        throw LimitError("group order " + std::to_string(g.order()) +
                         " exceeds the constants cap " + std::to_string(order_cap) +
                         " (raise with --max-order)");
    std::vector<int> universe;
    for (int x = 0; x < g.order(); ++x)
        if (x != g.identity()) universe.push_back(x);
    const size_t k = universe.size();
    if (k > 25) throw LimitError("subset lattice too large for exhaustive mu/t");

    auto hf_pred = [&](Mask mask) {
        return is_half_factorial(g, SubsetS{mask_to_elems(mask, universe)}).holds;
    };
    auto whf_pred = [&](Mask mask) {
        return is_weakly_half_factorial(g, SubsetS{mask_to_elems(mask, universe)}).holds;
    };

    ConstantsReport r;
    const Mask full = k == 32 ? ~Mask{0} : (Mask{1} << k) - 1;

    auto hf = monotone_lattice(k, hf_pred);
    Mask mu_mask = best_witness(hf, k, universe);
    r.mu = std::popcount(mu_mask);
    r.mu_witness = mask_to_elems(mu_mask, universe);
    auto hf_max = maximal_masks(hf, k);
    for (Mask m : min_cover(hf_max, full)) r.t_cover.push_back(mask_to_elems(m, universe));
    r.t = static_cast<int>(r.t_cover.size());

    auto whf = monotone_lattice(k, whf_pred);
    Mask mu0_mask = best_witness(whf, k, universe);
    r.mu0 = std::popcount(mu0_mask);
    r.mu0_witness = mask_to_elems(mu0_mask, universe);
    auto whf_max = maximal_masks(whf, k);
    for (Mask m : min_cover(whf_max, full)) r.t0_cover.push_back(mask_to_elems(m, universe));
    r.t0 = static_cast<int>(r.t0_cover.size());

    for_each_atom(g, SubsetS{universe}, std::nullopt, [&](const Atom& a) {
        r.max_atom_len = std::max(r.max_atom_len, static_cast<int>(a.block.entries.size()));
        return true;
    });
    return r;
}

namespace {

// Colors must be symmetric (reverse arcs share a color) for the graph
// view to be coherent; otherwise everything runs in digraph mode.
bool coloring_symmetric(const WeightedDigraph& d) {
    if (!d.symmetric()) return false;
    for (const Arc& a : d.arcs()) {
        int rev = d.arc_index(a.to, a.from);
        if (rev < 0 || d.arcs()[rev].color != a.color) return false;
    }
    return true;
}

WeightedDigraph color_subgraph(const WeightedDigraph& d, const std::vector<int>& colors,
                               Mask mask, std::vector<int>* arc_map = nullptr) {
    std::vector<Arc> arcs;
    if (arc_map) arc_map->clear();
    for (size_t i = 0; i < d.arcs().size(); ++i) {
        const Arc& a = d.arcs()[i];
        auto it = std::find(colors.begin(), colors.end(), a.color);
        size_t pos = static_cast<size_t>(it - colors.begin());
        if (mask & (Mask{1} << pos)) {
            arcs.push_back(a);
            if (arc_map) arc_map->push_back(static_cast<int>(i));
        }
    }
    WeightedDigraph sub(d.vertex_count(), std::move(arcs));
    sub.set_enumeration_guard(d.enumeration_guard());
    return sub;
}

}  // namespace

StarConstantsReport compute_mu_star_t_star(const WeightedDigraph& d,
                                           const std::optional<VoltageAssignment>& v) {
    std::vector<int> colors;
    for (const Arc& a : d.arcs()) {
        if (a.color < 0) throw InputError("every arc must be colored for mu*/t*");
        if (std::find(colors.begin(), colors.end(), a.color) == colors.end())
            colors.push_back(a.color);
    }
    std::sort(colors.begin(), colors.end());
    const size_t k = colors.size();
    if (k > 20) throw LimitError("too many colors for exhaustive mu*/t*");
    const bool graph_mode = coloring_symmetric(d);
    const Mask full = (Mask{1} << k) - 1;

    auto geo_pred = [&](Mask mask) {
        return color_subgraph(d, colors, mask).is_geodetical(graph_mode).holds;
    };

    StarConstantsReport r;
    auto geo = monotone_lattice(k, geo_pred);
    Mask mu_mask = best_witness(geo, k, colors);
    r.mu_star = std::popcount(mu_mask);
    r.mu_star_witness = mask_to_elems(mu_mask, colors);
    for (Mask m : min_cover(maximal_masks(geo, k), full))
        r.t_star_cover.push_back(mask_to_elems(m, colors));
    r.t_star = static_cast<int>(r.t_star_cover.size());

    if (v) {
        auto kvl_pred = [&](Mask mask) {
            std::vector<int> arc_map;
            WeightedDigraph sub = color_subgraph(d, colors, mask, &arc_map);
            VoltageAssignment sv;
            sv.modulus = v->modulus;
            for (int ai : arc_map) sv.residues.push_back(v->residues[ai]);
            return kvl_check(sub, sv).holds;
        };
        auto kvl = monotone_lattice(k, kvl_pred);
        Mask mu0_mask = best_witness(kvl, k, colors);
        r.mu0_star = std::popcount(mu0_mask);
        r.mu0_star_witness = mask_to_elems(mu0_mask, colors);
        for (Mask m : min_cover(maximal_masks(kvl, k), full))
            r.t0_star_cover.push_back(mask_to_elems(m, colors));
        r.t0_star = static_cast<int>(r.t0_star_cover.size());
    }
    return r;
}

namespace {

struct Edge {
    int u, v;  // u < v
    Rational weight;
};

std::vector<Edge> edges_of(const WeightedDigraph& graph) {
    if (!graph.symmetric()) throw InputError("coloring bounds require a symmetric digraph (a graph)");
    std::vector<Edge> edges;
    for (const Arc& a : graph.arcs())
        if (a.from < a.to) edges.push_back({a.from, a.to, a.weight});
    return edges;
}

WeightedDigraph edge_subgraph(int n, const std::vector<Edge>& edges, Mask mask, int guard) {
    std::vector<Arc> arcs;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (!(mask & (Mask{1} << i))) continue;
        arcs.push_back(Arc{edges[i].u, edges[i].v, edges[i].weight, -1});
        arcs.push_back(Arc{edges[i].v, edges[i].u, edges[i].weight, -1});
    }
    WeightedDigraph sub(n, std::move(arcs));
    sub.set_enumeration_guard(guard);
    return sub;
}

bool proper_edge_coloring(const std::vector<Edge>& edges, const std::vector<int>& colors) {
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            bool adjacent = edges[i].u == edges[j].u || edges[i].u == edges[j].v ||
                            edges[i].v == edges[j].u || edges[i].v == edges[j].v;
            if (adjacent && colors[i] == colors[j]) return false;
        }
    return true;
}

int max_degree(int n, const std::vector<Edge>& edges) {
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

// Backtracking k-edge-coloring; edges in input order, colors tried
// ascending, so the first solution is deterministic.
bool color_edges(const std::vector<Edge>& edges, int k, std::vector<int>& colors) {
    colors.assign(edges.size(), -1);
    std::function<bool(size_t)> go = [&](size_t i) -> bool {
        if (i == edges.size()) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j) {
                bool adjacent = edges[i].u == edges[j].u || edges[i].u == edges[j].v ||
                                edges[i].v == edges[j].u || edges[i].v == edges[j].v;
                if (adjacent && colors[j] == c) ok = false;
            }
            if (!ok) continue;
            colors[i] = c;
            if (go(i + 1)) return true;
            colors[i] = -1;
        }
        return false;
    };
    return go(0);
}

}  // namespace

int chromatic_index(const WeightedDigraph& graph, std::vector<int>* edge_colors) {
    auto edges = edges_of(graph);
    if (edges.empty()) {
        if (edge_colors) edge_colors->clear();
        return 0;
    }
    int delta = max_degree(graph.vertex_count(), edges);
    std::vector<int> colors;
    if (color_edges(edges, delta, colors)) {
        if (edge_colors) *edge_colors = colors;
        return delta;
    }
    // Vizing: Delta+1 always suffices for simple graphs
    if (!color_edges(edges, delta + 1, colors))
        throw std::logic_error("Delta+1 edge coloring failed on a simple graph");
    if (edge_colors) *edge_colors = colors;
    return delta + 1;
}

BoundsReport check_coloring_bounds(const WeightedDigraph& graph,
                              const std::optional<std::vector<int>>& edge_coloring,
                              int max_edges) {
    auto edges = edges_of(graph);
    max_edges = std::min(max_edges, 20);  // 2^|E| lattice
    if (static_cast<int>(edges.size()) > max_edges)
        throw LimitError("graph has " + std::to_string(edges.size()) +
                         " edges; exhaustive t/mu search is capped at " +
                         std::to_string(max_edges) + " (raise with --max-edges)");

    BoundsReport r;
    r.edge_count = static_cast<long long>(edges.size());
    r.delta = max_degree(graph.vertex_count(), edges);
    r.chi_prime = chromatic_index(graph, &r.edge_colors);
    if (edge_coloring) {
        if (edge_coloring->size() != edges.size())
            throw InputError("edge coloring size does not match edge count");
        if (!proper_edge_coloring(edges, *edge_coloring))
            throw InputError("supplied edge coloring is not proper");
        r.edge_colors = *edge_coloring;
    }
    r.chi_in_vizing_range = r.chi_prime == r.delta || r.chi_prime == r.delta + 1;

    // monochromatic classes of the coloring in use
    r.mono_classes_up = true;
    if (!edges.empty()) {
        int num_colors = *std::max_element(r.edge_colors.begin(), r.edge_colors.end()) + 1;
        for (int c = 0; c < num_colors && r.mono_classes_up; ++c) {
            Mask mask = 0;
            for (size_t i = 0; i < edges.size(); ++i)
                if (r.edge_colors[i] == c) mask |= Mask{1} << i;
            if (mask &&
                !edge_subgraph(graph.vertex_count(), edges, mask, graph.enumeration_guard())
                     .is_unique_path())
                r.mono_classes_up = false;
        }
    }

    const size_t k = edges.size();
    const Mask full = k == 0 ? 0 : (Mask{1} << k) - 1;
    auto geo_pred = [&](Mask mask) {
        return edge_subgraph(graph.vertex_count(), edges, mask, graph.enumeration_guard())
            .is_geodetical(true)
            .holds;
    };
    auto geo = monotone_lattice(k, geo_pred);
    int mu = 0;
    for (Mask mask = 0; mask < (Mask{1} << k); ++mask)
        if (geo[mask]) mu = std::max(mu, std::popcount(mask));
    r.mu = mu;
    r.t = static_cast<int>(min_cover(maximal_masks(geo, k), full).size());

    r.e_over_chi = r.chi_prime == 0 ? Rational(0) : Rational(r.edge_count, r.chi_prime);
    r.t_le_chi = r.t <= r.chi_prime;
    r.t_le_delta_plus_one = r.t <= r.delta + 1;
    r.mu_le_e_over_chi = Rational(r.mu) <= r.e_over_chi;
    return r;
}

WeightedDigraph bond_induced_digraph(const WeightedDigraph& d, const Potential& p) {
    if (static_cast<int>(p.p.size()) != d.vertex_count())
        throw InputError("potential must be total on the vertex set");
    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs()) {
        Rational diff = p.p[a.to] - p.p[a.from];
        if (diff > Rational(0)) arcs.push_back(Arc{a.from, a.to, Rational(1) / diff, a.color});
    }
    WeightedDigraph out(d.vertex_count(), std::move(arcs));
    out.set_enumeration_guard(d.enumeration_guard());
    return out;
}

Potential random_potential(int vertex_count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 6);
    Potential p;
    p.p.reserve(vertex_count);
    for (int i = 0; i < vertex_count; ++i) p.p.emplace_back(num(rng), den(rng));
    return p;
}

}  // namespace hfg
