#pragma once

#include <optional>
#include <vector>

#include "cayley.hpp"
#include "digraph.hpp"

namespace hfg {

// Voltages in Z_N, the additive stand-in for the N-th roots of unity:
// residue r means exp(2*pi*i*r/N), and products of roots are residue
// sums mod N. Residues are stored per arc index.
struct VoltageAssignment {
    long long modulus = 1;
    std::vector<long long> residues;
};

struct KvlReport {
    bool holds = true;
    std::optional<Path> violating_cycle;
    long long residue_sum = 0;  // of the violating cycle, mod N
};

// phi((g, gs)) = N / ord(s) mod N with N = exponent(G); the additive
// form of exp(2*pi*i / ord(s)), valid because ord(s) divides N.
VoltageAssignment cayley_voltage(const Group& g, const CayleyDigraph& c);

// KVL over simple cycles, deduplicated by enumerating (x,x)-paths only
// from the smallest vertex on each cycle (rotation-canonical; direction
// is preserved, cycles are oriented). Non-simple closed walks decompose
// into simple cycles additively, so this decides KVL for all closed walks.
KvlReport kvl_check(const WeightedDigraph& d, const VoltageAssignment& v);

}  // namespace hfg
