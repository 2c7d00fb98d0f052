#pragma once

#include "blocks.hpp"
#include "digraph.hpp"
#include "group.hpp"

namespace hfg {

// Cay(G; S): vertices are the group elements, arcs (g, gs) for s in S,
// psi((g, gs)) = ord(s), arc color = position of s in the sorted
// generator list. e not in S guarantees loop-freeness; gs = gs' forces
// s = s', so there are no multiple arcs.
struct CayleyDigraph {
    WeightedDigraph base;
    std::vector<int> gens;  // sorted element indices

    int generator_of_arc(int arc_idx) const { return gens[base.arcs()[arc_idx].color]; }
};

CayleyDigraph build_cayley(const Group& g, const SubsetS& s);

// Geodeticality of Cay(G;S) in the sense matching half factoriality:
// every irreducible cycle has length exactly 1, where a cycle is
// irreducible when no proper nonempty sub-multiset of its generator
// labels can be arranged into a closed walk (for abelian groups: no
// zero-sum proper sub-multiset). Irreducible cycles read along their
// arcs are exactly the atoms with support in S, and their lengths are
// the cross numbers. Comparing raw path lengths per endpoint pair is a
// strictly stronger property that already fails for half factorial sets
// like {a, b} in Z2 x Z2, where the 2-cycle over a and the 4-cycle
// interleaving the atoms a,a and b,b have lengths 1 and 2.
//
// The default variant runs one pruned DFS from the identity (left
// translation moves any cycle there, preserving colors and lengths);
// naive = true re-derives the verdict from all-pairs cycle enumeration
// with a per-cycle reducibility recheck, as an independent oracle. The
// failure certificate pairs the offending cycle with the length-1
// reference cycle of its first generator.
GeodeticResult is_geodetical_cayley(const Group& g, const CayleyDigraph& c, bool naive = false);

}  // namespace hfg
