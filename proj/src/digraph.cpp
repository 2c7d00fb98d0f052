#include "digraph.hpp"

#include <algorithm>
#include <set>

namespace hfg {

WeightedDigraph::WeightedDigraph(int n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) throw InputError("vertex count must be non-negative");
    std::sort(arcs_.begin(), arcs_.end(),
              [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    for (size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
            throw InputError("arc endpoint out of range");
        if (a.from == a.to) throw InputError("loops are not allowed");
        if (a.weight <= Rational(0)) throw InputError("arc weights must be positive");
        if (i > 0 && arcs_[i - 1].from == a.from && arcs_[i - 1].to == a.to)
            throw InputError("multiple arcs are not allowed");
    }
    out_.assign(n_, {});
    for (size_t i = 0; i < arcs_.size(); ++i) out_[arcs_[i].from].push_back(static_cast<int>(i));
    symmetric_ = true;
    for (const Arc& a : arcs_) {
        int rev = arc_index(a.to, a.from);
        if (rev < 0) {
            symmetric_ = false;
        } else if (arcs_[rev].weight != a.weight) {
            throw InputError("opposite arcs must carry the same weight");
        }
    }
}

int WeightedDigraph::arc_index(int from, int to) const {
    Arc probe{from, to, Rational(1), -1};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), probe,
                               [](const Arc& a, const Arc& b) {
                                   return std::tie(a.from, a.to) < std::tie(b.from, b.to);
                               });
    if (it != arcs_.end() && it->from == from && it->to == to)
        return static_cast<int>(it - arcs_.begin());
    return -1;
}

void WeightedDigraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex out of range: " + std::to_string(v));
}

void WeightedDigraph::check_guard() const {
    if (n_ > guard_)
        throw LimitError("digraph has " + std::to_string(n_) +
                         " vertices; exhaustive path enumeration is capped at " +
                         std::to_string(guard_) + " (raise with --max-vertices)");
}

void WeightedDigraph::for_each_path(int x, int y, bool graph_mode,
                                    const std::function<bool(const Path&)>& fn) const {
    check_vertex(x);
    check_vertex(y);
    check_guard();
    std::vector<bool> on_path(n_, false);
    Path cur;
    cur.vertices.push_back(x);
    on_path[x] = true;
    bool stop = false;

    auto dfs = [&](auto&& self, int u) -> void {
        if (stop) return;
        for (int ai : out_[u]) {
            const Arc& a = arcs_[ai];
            int v = a.to;
            if (v == y) {
                if (x == y && graph_mode && cur.arc_indices.size() == 1 &&
                    arcs_[cur.arc_indices[0]].from == v && arcs_[cur.arc_indices[0]].to == u) {
                    continue;  // same edge both ways is not a graph cycle
                }
                cur.vertices.push_back(v);
                cur.arc_indices.push_back(ai);
                cur.length += a.length();
                if (!fn(cur)) stop = true;
                cur.length -= a.length();
                cur.arc_indices.pop_back();
                cur.vertices.pop_back();
                if (stop) return;
                continue;  // path ends at y (or cycle closed); never re-enter
            }
            if (on_path[v]) continue;
            cur.vertices.push_back(v);
            cur.arc_indices.push_back(ai);
            cur.length += a.length();
            on_path[v] = true;
            self(self, v);
            on_path[v] = false;
            cur.length -= a.length();
            cur.arc_indices.pop_back();
            cur.vertices.pop_back();
            if (stop) return;
        }
    };
    dfs(dfs, x);
}

void WeightedDigraph::for_each_path_from(int x, const std::function<bool(const Path&)>& fn) const {
    check_vertex(x);
    check_guard();
    std::vector<bool> on_path(n_, false);
    Path cur;
    cur.vertices.push_back(x);
    on_path[x] = true;
    bool stop = false;

    auto dfs = [&](auto&& self, int u) -> void {
        if (stop) return;
        for (int ai : out_[u]) {
            const Arc& a = arcs_[ai];
            int v = a.to;
            if (v != x && on_path[v]) continue;
            cur.vertices.push_back(v);
            cur.arc_indices.push_back(ai);
            cur.length += a.length();
            if (!fn(cur)) stop = true;
            if (!stop && v != x) {
                on_path[v] = true;
                self(self, v);
                on_path[v] = false;
            }
            cur.length -= a.length();
            cur.arc_indices.pop_back();
            cur.vertices.pop_back();
            if (stop) return;
        }
    };
    dfs(dfs, x);
}

std::vector<Path> WeightedDigraph::simple_paths(int x, int y, bool graph_mode) const {
    std::vector<Path> out;
    for_each_path(x, y, graph_mode, [&](const Path& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::optional<Rational> WeightedDigraph::shortest_path_length(int x, int y) const {
    std::optional<Rational> best;
    for_each_path(x, y, false, [&](const Path& p) {
        if (!best || p.length < *best) best = p.length;
        return true;
    });
    return best;
}

GeodeticResult WeightedDigraph::is_geodetical(bool graph_mode) const {
    GeodeticResult r;
    for (int x = 0; x < n_ && r.holds; ++x) {
        for (int y = 0; y < n_ && r.holds; ++y) {
            std::optional<Path> first;
            for_each_path(x, y, graph_mode, [&](const Path& p) {
                if (!first) {
                    first = p;
                    return true;
                }
                if (p.length != first->length) {
                    r.holds = false;
                    r.certificate = {*first, p};
                    return false;
                }
                return true;
            });
        }
    }
    return r;
}

PathSpectrum WeightedDigraph::path_spectrum(bool graph_mode) const {
    PathSpectrum spec;
    for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y) {
            std::set<Rational> lengths;
            long long count = 0;
            for_each_path(x, y, graph_mode, [&](const Path& p) {
                lengths.insert(p.length);
                ++count;
                return true;
            });
            if (count == 0) continue;
            PairSpectrum ps;
            ps.from = x;
            ps.to = y;
            ps.lengths.assign(lengths.begin(), lengths.end());
            ps.path_count = count;
            int m = static_cast<int>(lengths.size());
            spec.paths_per_m[m] += count;
            spec.max_m = std::max(spec.max_m, m);
            spec.pairs.push_back(std::move(ps));
        }
    }
    return spec;
}

bool WeightedDigraph::is_unique_path() const {
    const bool graph_mode = symmetric_;
    for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y) {
            int count = 0;
            bool bad = false;
            for_each_path(x, y, graph_mode, [&](const Path&) {
                ++count;
                if (x == y || count > 1) {
                    bad = true;  // a cycle, or a second path
                    return false;
                }
                return true;
            });
            if (bad) return false;
        }
    }
    return true;
}

WeightedDigraph WeightedDigraph::underlying_graph() const {
    std::vector<Arc> arcs = arcs_;
    for (const Arc& a : arcs_) {
        if (arc_index(a.to, a.from) < 0) {
            Arc rev = a;
            std::swap(rev.from, rev.to);
            arcs.push_back(rev);
        }
    }
    WeightedDigraph g(n_, std::move(arcs));
    g.set_enumeration_guard(guard_);
    return g;
}

}  // namespace hfg
