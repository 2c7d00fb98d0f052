#include "voltage.hpp"

#include <algorithm>

namespace hfg {

VoltageAssignment cayley_voltage(const Group& g, const CayleyDigraph& c) {
    VoltageAssignment v;
    v.modulus = g.exponent();
    v.residues.reserve(c.base.arcs().size());
    for (size_t i = 0; i < c.base.arcs().size(); ++i) {
        int ord = g.element_order(c.generator_of_arc(static_cast<int>(i)));
        v.residues.push_back((v.modulus / ord) % v.modulus);
    }
    return v;
}

KvlReport kvl_check(const WeightedDigraph& d, const VoltageAssignment& v) {
    if (v.modulus < 1) throw InputError("voltage modulus must be >= 1");
    if (v.residues.size() != d.arcs().size())
        throw InputError("voltage assignment does not cover every arc");
    for (long long r : v.residues)
        if (r < 0 || r >= v.modulus) throw InputError("voltage residue out of range");

    KvlReport report;
    const long long n_mod = v.modulus;
    for (int x = 0; x < d.vertex_count() && report.holds; ++x) {
        d.for_each_path(x, x, false, [&](const Path& cycle) {
            // keep each cycle once: only at its smallest vertex
            if (*std::min_element(cycle.vertices.begin(), cycle.vertices.end()) != x)
                return true;
            long long sum = 0;
            for (int ai : cycle.arc_indices) sum = (sum + v.residues[ai]) % n_mod;
            if (sum != 0) {
                report.holds = false;
                report.violating_cycle = cycle;
                report.residue_sum = sum;
                return false;
            }
            return true;
        });
    }
    return report;
}

}  // namespace hfg
