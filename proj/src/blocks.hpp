#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"
#include "rational.hpp"

namespace hfg {

// Multiset of non-identity elements with product e, stored as a sorted
// index sequence in the group's canonical element order.
struct Block {
    std::vector<int> entries;

    bool operator==(const Block&) const = default;
    // Lexicographic on the sorted entry sequence; shorter prefixes first.
    bool operator<(const Block& o) const { return entries < o.entries; }
};

struct Atom {
    Block block;
    Rational cross;
};

// A subset S of G \ {e}, sorted element indices.
struct SubsetS {
    std::vector<int> elems;

    static SubsetS of(const Group& g, std::vector<int> elems);
};

struct HfResult {
    bool holds = true;
    std::optional<Atom> certificate;  // lexicographically first violating atom
};

// Zero-sum blocks and atoms are defined over abelian groups only;
// every entry point below rejects a nonabelian group.
bool is_block(const Group& g, const std::vector<int>& entries);
bool is_atom(const Group& g, const Block& b);
Rational cross_number(const Group& g, const Block& b);

// Every atom with support in S, each multiset once, in lexicographic
// order. DFS over non-decreasing entry sequences, pruning any prefix
// that contains a proper nonempty zero-sum sub-multiset; atom length is
// capped by |G|.
std::vector<Atom> enumerate_atoms(const Group& g, const SubsetS& s,
                                  std::optional<int> max_len = std::nullopt);

// Callback form; return false from the callback to stop early.
void for_each_atom(const Group& g, const SubsetS& s, std::optional<int> max_len,
                   const std::function<bool(const Atom&)>& fn);

HfResult is_half_factorial(const Group& g, const SubsetS& s);
HfResult is_weakly_half_factorial(const Group& g, const SubsetS& s);

std::string block_to_string(const Group& g, const Block& b);

}  // namespace hfg
