#include "verify.hpp"

#include "cayley.hpp"
#include "io.hpp"
#include "voltage.hpp"

namespace hfg {

namespace {

void factorize_from(int n, int min_factor, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 1) {
        out.push_back(cur);
        return;
    }
    for (int f = min_factor; f <= n; ++f) {
        if (n % f != 0) continue;
        cur.push_back(f);
        factorize_from(n / f, f, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> moduli_factorizations(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    factorize_from(n, 2, cur, out);
    return out;
}

TheoremSweep sweep_theorems(int max_order) {
    TheoremSweep sweep;
    for (int n = 1; n <= max_order; ++n) {
        for (const auto& moduli : moduli_factorizations(n)) {
            AbelianGroup g(moduli);
            ++sweep.groups;
            std::vector<int> universe;
            for (int x = 0; x < g.order(); ++x)
                if (x != g.identity()) universe.push_back(x);
            const uint32_t masks = uint32_t{1} << universe.size();
            for (uint32_t mask = 0; mask < masks; ++mask) {
                std::vector<int> elems;
                for (size_t i = 0; i < universe.size(); ++i)
                    if (mask & (uint32_t{1} << i)) elems.push_back(universe[i]);
                SubsetS s = SubsetS::of(g, std::move(elems));
                ++sweep.subsets;

                CayleyDigraph cay = build_cayley(g, s);
                bool hf = is_half_factorial(g, s).holds;
                bool geo = is_geodetical_cayley(g, cay).holds;
                bool geo_naive = is_geodetical_cayley(g, cay, /*naive=*/true).holds;
                bool whf = is_weakly_half_factorial(g, s).holds;
                bool kvl = kvl_check(cay.base, cayley_voltage(g, cay)).holds;

                auto describe = [&](const char* what) {
                    return std::string(what) + " mismatch: G=Z" +
                           [&] {
                               std::string m;
                               for (size_t i = 0; i < moduli.size(); ++i)
                                   m += (i ? "x" : "") + std::to_string(moduli[i]);
                               return m.empty() ? std::string("1") : m;
                           }() +
                           " S=" + subset_to_string(g, s);
                };
                if (hf != geo) {
                    ++sweep.hf_geodetic_mismatches;
                    sweep.mismatch_details.push_back(describe("hf-geodetic"));
                }
                if (geo != geo_naive) {
                    ++sweep.oracle_mismatches;
                    sweep.mismatch_details.push_back(describe("geodetic-oracle"));
                }
                if (whf != kvl) {
                    ++sweep.whf_kvl_mismatches;
                    sweep.mismatch_details.push_back(describe("whf-kvl"));
                }
            }
        }
    }
    return sweep;
}

}  // namespace hfg
