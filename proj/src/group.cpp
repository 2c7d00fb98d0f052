#include "group.hpp"

#include <numeric>
#include <sstream>

#include "rational.hpp"

namespace hfg {

void Group::check_element(int g) const {
    if (g < 0 || g >= order()) throw InputError("element index out of range: " + std::to_string(g));
}

int Group::element_order(int g) const {
    check_element(g);
    int e = identity();
    int acc = g;
    int d = 1;
    while (acc != e) {
        acc = multiply(acc, g);
        ++d;
        if (d > order()) throw std::logic_error("element order exceeds group order");
    }
    return d;
}

long long Group::exponent() const {
    long long n = 1;
    for (int g = 0; g < order(); ++g) n = lcm_ll(n, element_order(g));
    return n;
}

std::vector<int> Group::elements() const {
    std::vector<int> v(order());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

AbelianGroup::AbelianGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    long long ord = 1;
    for (int m : moduli_) {
        if (m < 2) throw InputError("modulus must be >= 2, got " + std::to_string(m));
        ord *= m;
        if (ord > (1 << 20)) throw LimitError("group order too large");
    }
    order_ = static_cast<int>(ord);
}

AbelianGroup AbelianGroup::parse(const std::string& spec) {
    std::vector<int> moduli;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        // strip spaces
        std::string t;
        for (char c : token)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) continue;
        int m;
        try {
            m = std::stoi(t);
        } catch (const std::exception&) {
            throw InputError("malformed group spec token: '" + token + "'");
        }
        if (m == 1) continue;  // trivial factor
        moduli.push_back(m);
    }
    return AbelianGroup(std::move(moduli));
}

int AbelianGroup::multiply(int g, int h) const {
    check_element(g);
    check_element(h);
    // mixed radix, coords[0] most significant; walk from the least
    // significant end and recompose
    int result = 0;
    int gg = g, hh = h;
    std::vector<int> rc(moduli_.size());
    for (int i = static_cast<int>(moduli_.size()) - 1; i >= 0; --i) {
        int m = moduli_[i];
        rc[i] = (gg % m + hh % m) % m;
        gg /= m;
        hh /= m;
    }
    for (size_t i = 0; i < moduli_.size(); ++i) result = result * moduli_[i] + rc[i];
    return result;
}

int AbelianGroup::inverse(int g) const {
    check_element(g);
    std::vector<int> c = coords(g);
    for (size_t i = 0; i < c.size(); ++i) c[i] = (moduli_[i] - c[i]) % moduli_[i];
    return index_of(c);
}

std::vector<int> AbelianGroup::coords(int g) const {
    check_element(g);
    std::vector<int> c(moduli_.size());
    for (int i = static_cast<int>(moduli_.size()) - 1; i >= 0; --i) {
        c[i] = g % moduli_[i];
        g /= moduli_[i];
    }
    return c;
}

int AbelianGroup::index_of(const std::vector<int>& coords) const {
    if (coords.size() != moduli_.size()) throw InputError("coordinate arity mismatch");
    int idx = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= moduli_[i])
            throw InputError("coordinate out of range: " + std::to_string(coords[i]));
        idx = idx * moduli_[i] + coords[i];
    }
    return idx;
}

int AbelianGroup::coord_order(int g) const {
    std::vector<int> c = coords(g);
    long long d = 1;
    for (size_t i = 0; i < c.size(); ++i)
        d = lcm_ll(d, moduli_[i] / gcd_ll(c[i], moduli_[i]));
    return static_cast<int>(d);
}

std::string AbelianGroup::element_name(int g) const {
    std::vector<int> c = coords(g);
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    s += ")";
    return s;
}

TableGroup::TableGroup(int identity, std::vector<std::vector<int>> table)
    : identity_(identity), table_(std::move(table)) {
    const int n = static_cast<int>(table_.size());
    if (n < 1) throw InputError("table group must have order >= 1");
    if (identity_ < 0 || identity_ >= n) throw InputError("identity index out of range");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw InputError("table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw InputError("table entry out of range");
    }
    // Latin square
    for (int i = 0; i < n; ++i) {
        std::vector<bool> row_seen(n, false), col_seen(n, false);
        for (int j = 0; j < n; ++j) {
            if (row_seen[table_[i][j]]) throw InputError("table row " + std::to_string(i) + " repeats an element");
            if (col_seen[table_[j][i]]) throw InputError("table column " + std::to_string(i) + " repeats an element");
            row_seen[table_[i][j]] = true;
            col_seen[table_[j][i]] = true;
        }
    }
    // identity acts trivially
    for (int i = 0; i < n; ++i)
        if (table_[identity_][i] != i || table_[i][identity_] != i)
            throw InputError("identity row/column does not act trivially");
    // two-sided inverses
    inverse_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (table_[i][j] == identity_ && table_[j][i] == identity_) {
                inverse_[i] = j;
                break;
            }
        }
        if (inverse_[i] < 0) throw InputError("element " + std::to_string(i) + " has no two-sided inverse");
    }
    // associativity, O(n^3)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw InputError("table is not associative");
    abelian_ = true;
    for (int a = 0; a < n && abelian_; ++a)
        for (int b = a + 1; b < n; ++b)
            if (table_[a][b] != table_[b][a]) {
                abelian_ = false;
                break;
            }
}

TableGroup TableGroup::parse(const std::string& text) {
    std::istringstream in(text);
    int n, e;
    if (!(in >> n)) throw InputError("table group file: missing order");
    if (n < 1) throw InputError("table group order must be >= 1");
    if (n > 512) throw LimitError("table group order too large");
    if (!(in >> e)) throw InputError("table group file: missing identity index");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> table[i][j])) throw InputError("table group file: truncated table");
    return TableGroup(e, std::move(table));
}

TableGroup TableGroup::from_abelian(const AbelianGroup& g) {
    const int n = g.order();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = g.multiply(i, j);
    return TableGroup(g.identity(), std::move(table));
}

int TableGroup::multiply(int g, int h) const {
    check_element(g);
    check_element(h);
    return table_[g][h];
}

std::string TableGroup::element_name(int g) const { return "[" + std::to_string(g) + "]"; }

}  // namespace hfg
