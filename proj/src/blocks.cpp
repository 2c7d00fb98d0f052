#include "blocks.hpp"

#include <algorithm>
#include <cstdint>

namespace hfg {

namespace {

const Group& require_abelian(const Group& g) {
    if (!g.abelian())
        throw InputError("blocks and atoms are defined over abelian groups only; "
                         "nonabelian groups are handled on the graph side");
    if (g.order() > 64) throw LimitError("block enumeration supports group order <= 64");
    return g;
}

void require_non_identity(const Group& g, const std::vector<int>& entries) {
    for (int x : entries) {
        if (x < 0 || x >= g.order()) throw InputError("entry index out of range");
        if (x == g.identity()) throw InputError("identity element not allowed in a block");
    }
}

// Product set tracking over element indices, one bit per element.
uint64_t mul_set(const Group& g, uint64_t set, int s) {
    uint64_t out = 0;
    for (int x = 0; set; ++x, set >>= 1)
        if (set & 1) out |= uint64_t{1} << g.multiply(x, s);
    return out;
}

}  // namespace

SubsetS SubsetS::of(const Group& g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (int x : elems) {
        if (x < 0 || x >= g.order()) throw InputError("subset element out of range");
        if (x == g.identity()) throw InputError("identity element not allowed in a subset S");
    }
    return SubsetS{std::move(elems)};
}

bool is_block(const Group& g, const std::vector<int>& entries) {
    require_abelian(g);
    if (entries.empty()) return false;
    require_non_identity(g, entries);
    int acc = g.identity();
    for (int x : entries) acc = g.multiply(acc, x);
    return acc == g.identity();
}

bool is_atom(const Group& g, const Block& b) {
    require_abelian(g);
    if (!is_block(g, b.entries)) return false;
    // Enumerate distinct sub-multisets by exponent vectors over the
    // distinct entries; repeated entries contribute mult+1 choices, not 2^mult.
    std::vector<std::pair<int, int>> distinct;  // (element, multiplicity)
    for (int x : b.entries) {
        if (!distinct.empty() && distinct.back().first == x)
            ++distinct.back().second;
        else
            distinct.emplace_back(x, 1);
    }
    const int k = static_cast<int>(distinct.size());
    std::vector<int> take(k, 0);
    const int total = static_cast<int>(b.entries.size());
    while (true) {
        // advance odometer
        int i = 0;
        while (i < k && take[i] == distinct[i].second) take[i++] = 0;
        if (i == k) break;
        ++take[i];
        int count = 0, acc = g.identity();
        for (int j = 0; j < k; ++j) {
            count += take[j];
            for (int r = 0; r < take[j]; ++r) acc = g.multiply(acc, distinct[j].first);
        }
        if (count > 0 && count < total && acc == g.identity()) return false;
    }
    return true;
}

Rational cross_number(const Group& g, const Block& b) {
    require_abelian(g);
    Rational sum(0);
    for (int x : b.entries) sum += Rational(1, g.element_order(x));
    return sum;
}

namespace {

struct AtomDfs {
    const Group& g;
    const std::vector<int>& subset;
    int max_len;
    const std::function<bool(const Atom&)>& fn;
    std::vector<int> prefix;
    bool stopped = false;

    // prop: products of nonempty proper sub-multisets of the prefix
    // all:  prop plus the full product
    void run(int min_pos, int full, uint64_t prop, uint64_t all) {
        if (stopped) return;
        const uint64_t e_bit = uint64_t{1} << g.identity();
        for (size_t p = min_pos; p < subset.size(); ++p) {
            int s = subset[p];
            int new_full = g.multiply(full, s);
            uint64_t new_prop = all | mul_set(g, prop, s);
            if (!prefix.empty()) new_prop |= uint64_t{1} << s;
            if (new_prop & e_bit) continue;  // proper zero-sum sub-multiset
            prefix.push_back(s);
            if (new_full == g.identity()) {
                // atom found; extensions would contain it as a proper sub
                Atom a;
                a.block.entries = prefix;
                a.cross = cross_number(g, a.block);
                if (!fn(a)) stopped = true;
            } else if (static_cast<int>(prefix.size()) < max_len) {
                if (static_cast<int>(prefix.size()) >= g.order())
                    throw std::logic_error("zero-sum-free prefix longer than |G| - 1");
                run(static_cast<int>(p), new_full, new_prop,
                    new_prop | (uint64_t{1} << new_full));
            }
            prefix.pop_back();
            if (stopped) return;
        }
    }
};

}  // namespace

void for_each_atom(const Group& g, const SubsetS& s, std::optional<int> max_len,
                   const std::function<bool(const Atom&)>& fn) {
    require_abelian(g);
    if (max_len && *max_len < 2) throw InputError("max_len must be >= 2");
    int cap = g.order();  // atoms have length <= |G|
    if (max_len) cap = std::min(cap, *max_len);
    AtomDfs dfs{g, s.elems, cap, fn};
    dfs.run(0, g.identity(), 0, 0);
}

std::vector<Atom> enumerate_atoms(const Group& g, const SubsetS& s,
                                  std::optional<int> max_len) {
    std::vector<Atom> out;
    for_each_atom(g, s, max_len, [&](const Atom& a) {
        out.push_back(a);
        return true;
    });
    return out;
}

HfResult is_half_factorial(const Group& g, const SubsetS& s) {
    HfResult r;
    for_each_atom(g, s, std::nullopt, [&](const Atom& a) {
        if (a.cross != Rational(1)) {
            r.holds = false;
            r.certificate = a;
            return false;
        }
        return true;
    });
    return r;
}

HfResult is_weakly_half_factorial(const Group& g, const SubsetS& s) {
    HfResult r;
    for_each_atom(g, s, std::nullopt, [&](const Atom& a) {
        if (a.cross.denominator() != 1) {
            r.holds = false;
            r.certificate = a;
            return false;
        }
        return true;
    });
    return r;
}

std::string block_to_string(const Group& g, const Block& b) {
    std::string out;
    for (int x : b.entries) out += g.element_name(x);
    return out;
}

}  // namespace hfg
