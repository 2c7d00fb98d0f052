#include "cayley.hpp"

#include <algorithm>
#include <optional>

namespace hfg {

CayleyDigraph build_cayley(const Group& g, const SubsetS& s) {
    for (int x : s.elems)
        if (x == g.identity()) throw InputError("identity in S would create loops");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(g.order()) * s.elems.size());
    for (int v = 0; v < g.order(); ++v) {
        for (size_t i = 0; i < s.elems.size(); ++i) {
            int gen = s.elems[i];
            arcs.push_back(Arc{v, g.multiply(v, gen), Rational(g.element_order(gen)),
                               static_cast<int>(i)});
        }
    }
    return CayleyDigraph{WeightedDigraph(g.order(), std::move(arcs)), s.elems};
}

namespace {

// Products reachable by arranging some nonempty sub-multiset of the given
// colors, one uint64 element-mask per position subset (so this is capped
// at 16 positions / 64 group elements). Position-subset DP: any
// arrangement's product is (product of the rest) * (last element).
bool multiset_reducible(const Group& g, const std::vector<int>& colors) {
    size_t k = colors.size();
    if (k > 16) throw LimitError("cycle too long for the reducibility check");
    if (g.order() > 64) throw LimitError("group too large for the reducibility check");
    std::vector<uint64_t> dp(size_t{1} << k, 0);
    uint64_t e_bit = uint64_t{1} << g.identity();
    for (uint32_t t = 1; t < (uint32_t{1} << k); ++t) {
        uint64_t prods = 0;
        for (size_t i = 0; i < k; ++i) {
            if (!(t & (uint32_t{1} << i))) continue;
            uint32_t rest = t & ~(uint32_t{1} << i);
            if (rest == 0) {
                prods |= uint64_t{1} << colors[i];
            } else {
                uint64_t prev = dp[rest];
                for (int x = 0; x < g.order(); ++x)
                    if (prev & (uint64_t{1} << x))
                        prods |= uint64_t{1} << g.multiply(x, colors[i]);
            }
        }
        dp[t] = prods;
        // proper nonempty subset arranging to the identity
        if (t + 1 != (uint32_t{1} << k) && (prods & e_bit)) return true;
    }
    return false;
}

// The length-1 reference cycle e -> s -> s^2 -> ... -> e for generator s.
Path reference_cycle(const Group& g, const CayleyDigraph& c, int s) {
    Path p;
    p.length = Rational(0);
    int v = g.identity();
    p.vertices.push_back(v);
    do {
        int w = g.multiply(v, s);
        int ai = c.base.arc_index(v, w);
        p.arc_indices.push_back(ai);
        p.length += c.base.arcs()[ai].length();
        p.vertices.push_back(w);
        v = w;
    } while (v != g.identity());
    return p;
}

}  // namespace

GeodeticResult is_geodetical_cayley(const Group& g, const CayleyDigraph& c, bool naive) {
    GeodeticResult r;
    if (c.gens.empty()) return r;
    const int e = g.identity();

    auto flag_cycle = [&](const Path& cycle, int first_color) {
        r.holds = false;
        r.certificate = {reference_cycle(g, c, first_color), cycle};
    };

    if (naive) {
        // Blind oracle: every cycle from every start vertex, irreducibility
        // re-derived per cycle by the position-subset DP.
        for (int x = 0; x < g.order() && r.holds; ++x) {
            c.base.for_each_path(x, x, false, [&](const Path& p) {
                std::vector<int> colors;
                for (int ai : p.arc_indices) colors.push_back(c.generator_of_arc(ai));
                if (!multiset_reducible(g, colors) && p.length != Rational(1)) {
                    flag_cycle(p, colors.front());
                    return false;
                }
                return true;
            });
        }
        return r;
    }

    if (g.order() > 64) throw LimitError("group too large for the cycle search");

    if (!g.abelian()) {
        // No sub-multiset pruning without commutativity; enumerate cycles
        // through e (left translation moves any cycle there) and test each.
        c.base.for_each_path(e, e, false, [&](const Path& p) {
            std::vector<int> colors;
            for (int ai : p.arc_indices) colors.push_back(c.generator_of_arc(ai));
            if (!multiset_reducible(g, colors) && p.length != Rational(1)) {
                flag_cycle(p, colors.front());
                return false;
            }
            return true;
        });
        return r;
    }

    // Abelian: DFS over simple paths from e carrying the achievable-product
    // masks of the atom search. prop holds products of proper nonempty
    // sub-multisets of the colors so far plus one candidate extension; once
    // the identity shows up there, every completion of the prefix closes a
    // reducible cycle, so the branch dies. A surviving closing arc to e is
    // an irreducible cycle, i.e. an atom read along arcs, and must have
    // length exactly 1.
    const uint64_t e_bit = uint64_t{1} << e;
    std::vector<char> on_path(g.order(), 0);
    Path cur;
    cur.length = Rational(0);
    cur.vertices.push_back(e);
    on_path[e] = 1;

    auto mul_set = [&](uint64_t set, int s) {
        uint64_t out = 0;
        for (int x = 0; x < g.order(); ++x)
            if (set & (uint64_t{1} << x)) out |= uint64_t{1} << g.multiply(x, s);
        return out;
    };

    auto dfs = [&](auto&& self, int v, uint64_t prop, uint64_t all) -> bool {
        for (int ai : c.base.arcs_from(v)) {
            const Arc& a = c.base.arcs()[ai];
            int s = c.gens[a.color];
            uint64_t new_prop = all | mul_set(prop, s);
            if (!cur.arc_indices.empty()) new_prop |= uint64_t{1} << s;
            if (new_prop & e_bit) continue;  // proper zero-sum sub-multiset
            if (a.to == e) {
                Rational len = cur.length + a.length();
                if (len != Rational(1)) {
                    Path cycle = cur;
                    cycle.vertices.push_back(e);
                    cycle.arc_indices.push_back(ai);
                    cycle.length = len;
                    flag_cycle(cycle, c.generator_of_arc(cycle.arc_indices.front()));
                    return false;
                }
                continue;
            }
            if (on_path[a.to]) continue;
            on_path[a.to] = 1;
            cur.vertices.push_back(a.to);
            cur.arc_indices.push_back(ai);
            cur.length += a.length();
            // all nonempty sub-multisets = proper ones plus the full
            // product, and the full product is the vertex we stand on
            bool keep = self(self, a.to, new_prop, new_prop | (uint64_t{1} << a.to));
            cur.length -= a.length();
            cur.arc_indices.pop_back();
            cur.vertices.pop_back();
            on_path[a.to] = 0;
            if (!keep) return false;
        }
        return true;
    };
    dfs(dfs, e, 0, 0);
    return r;
}

}  // namespace hfg
