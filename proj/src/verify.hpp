#pragma once

#include <string>
#include <vector>

#include "group.hpp"

namespace hfg {

// All unordered factorizations of n into factors >= 2, ascending within
// each factorization; n = 1 yields the empty factorization (trivial
// group). Duplicate isomorphism types across n are fine, they only
// repeat checks.
std::vector<std::vector<int>> moduli_factorizations(int n);

struct TheoremSweep {
    long long groups = 0;
    long long subsets = 0;
    long long hf_geodetic_mismatches = 0;
    long long whf_kvl_mismatches = 0;
    long long oracle_mismatches = 0;  // single-source vs all-pairs geodetic check
    std::vector<std::string> mismatch_details;
};

// For every abelian group of order <= max_order and every S of G \ {e}:
// HF(S) vs geodeticality of Cay(G;S), WHF(S) vs KVL of the root-of-unity
// voltage, and the single-source check vs the naive all-pairs one.
TheoremSweep sweep_theorems(int max_order);

}  // namespace hfg
