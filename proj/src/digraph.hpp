#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hfg {

struct Arc {
    int from = 0;
    int to = 0;
    Rational weight{1};  // psi; length is 1/psi
    int color = -1;      // -1 = uncolored

    Rational length() const { return Rational(1) / weight; }
};

// Simple path: distinct vertices except possibly first == last (a cycle).
struct Path {
    std::vector<int> vertices;     // size = arcs + 1
    std::vector<int> arc_indices;  // indices into the digraph's arc list
    Rational length{0};

    bool is_cycle() const { return vertices.size() >= 2 && vertices.front() == vertices.back(); }
};

struct GeodeticResult {
    bool holds = true;
    std::optional<std::pair<Path, Path>> certificate;  // two unequal-length paths, same endpoints
};

struct PairSpectrum {
    int from = 0, to = 0;
    std::vector<Rational> lengths;  // distinct, sorted
    long long path_count = 0;
};

struct PathSpectrum {
    std::vector<PairSpectrum> pairs;        // only pairs with >= 1 path
    std::map<int, long long> paths_per_m;   // m -> number of paths in G_m
    int max_m = 0;
};

// Loop-free digraph with no multiple arcs; exact-rational positive arc
// weights; opposite arcs, when both present, must agree in weight.
// Immutable after construction.
class WeightedDigraph {
public:
    WeightedDigraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool symmetric() const { return symmetric_; }

    // Exhaustive enumeration refuses instances above this many vertices.
    int enumeration_guard() const { return guard_; }
    void set_enumeration_guard(int g) { guard_ = g; }

    // All simple (x,y)-paths; cycles through x when x == y. graph_mode
    // treats an arc and its reverse as one edge, so the two-arc cycle
    // x -> y -> x is not a closed path in that view.
    std::vector<Path> simple_paths(int x, int y, bool graph_mode = false) const;
    void for_each_path(int x, int y, bool graph_mode,
                       const std::function<bool(const Path&)>& fn) const;

    // Single source: one DFS that reports every simple path leaving x,
    // i.e. every prefix with >= 1 arc, including cycles back to x.
    void for_each_path_from(int x, const std::function<bool(const Path&)>& fn) const;

    std::optional<Rational> shortest_path_length(int x, int y) const;

    GeodeticResult is_geodetical(bool graph_mode = false) const;
    PathSpectrum path_spectrum(bool graph_mode = false) const;

    // At most one simple path per ordered pair and no cycles; symmetric
    // digraphs are checked in graph mode, where this coincides with
    // being a forest.
    bool is_unique_path() const;

    WeightedDigraph underlying_graph() const;

    int arc_index(int from, int to) const;  // -1 if absent
    const std::vector<int>& arcs_from(int v) const { return out_[v]; }

    static constexpr int kDefaultGuard = 14;

private:
    void check_vertex(int v) const;
    void check_guard() const;

    int n_;
    std::vector<Arc> arcs_;                  // sorted by (from, to)
    std::vector<std::vector<int>> out_;      // arc indices per source
    bool symmetric_;
    int guard_ = kDefaultGuard;
};

}  // namespace hfg
