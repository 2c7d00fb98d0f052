#pragma once

#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hfg {

// A finite group with elements addressed by index 0..order-1.
// Everything is immutable after construction.
class Group {
public:
    virtual ~Group() = default;

    virtual int order() const = 0;
    virtual int identity() const = 0;
    virtual int multiply(int g, int h) const = 0;
    virtual int inverse(int g) const = 0;
    virtual bool abelian() const = 0;
    virtual std::string element_name(int g) const = 0;

    // Least d >= 1 with g^d = e.
    int element_order(int g) const;

    // lcm of element orders.
    long long exponent() const;

    // All elements in their canonical index order.
    std::vector<int> elements() const;

protected:
    void check_element(int g) const;
};

// Z_{n1} x ... x Z_{nk}; elements are residue vectors in lexicographic
// (mixed radix) order, so index 0 is the identity. The trivial group is
// the empty product.
class AbelianGroup final : public Group {
public:
    explicit AbelianGroup(std::vector<int> moduli);

    // "2,2,3" -> Z_2 x Z_2 x Z_3; "" or "1" -> trivial group.
    static AbelianGroup parse(const std::string& spec);

    int order() const override { return order_; }
    int identity() const override { return 0; }
    int multiply(int g, int h) const override;
    int inverse(int g) const override;
    bool abelian() const override { return true; }
    std::string element_name(int g) const override;

    const std::vector<int>& moduli() const { return moduli_; }
    std::vector<int> coords(int g) const;
    int index_of(const std::vector<int>& coords) const;

    // Closed form: lcm_i n_i / gcd(c_i, n_i).
    int coord_order(int g) const;

private:
    std::vector<int> moduli_;
    int order_;
};

// Arbitrary finite group given by its full multiplication table.
// Latin-square, identity, inverse and associativity checks run eagerly.
class TableGroup final : public Group {
public:
    TableGroup(int identity, std::vector<std::vector<int>> table);

    // Whitespace-separated integers: order, identity index, then the
    // row-major order x order product table.
    static TableGroup parse(const std::string& text);

    // The multiplication table of an abelian spec, for oracle tests.
    static TableGroup from_abelian(const AbelianGroup& g);

    int order() const override { return static_cast<int>(table_.size()); }
    int identity() const override { return identity_; }
    int multiply(int g, int h) const override;
    int inverse(int g) const override { return inverse_[g]; }
    bool abelian() const override { return abelian_; }
    std::string element_name(int g) const override;

private:
    int identity_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    bool abelian_;
};

}  // namespace hfg
