#pragma once

#include "k3q/arith.hpp"

#include <compare>
#include <stdexcept>
#include <string>

namespace k3q {

struct AmbientMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// aC + bF in Pic(F_n).
struct DivisorClass {
    int n = 0;
    Int a = 0;
    Int b = 0;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    friend auto operator<=>(const DivisorClass& x, const DivisorClass& y) {
        if (auto c = x.n <=> y.n; c != 0) return c;
        if (x.a != y.a) return x.a < y.a ? std::strong_ordering::less : std::strong_ordering::greater;
        if (x.b != y.b) return x.b < y.b ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(const Int& k) const { return {n, a * k, b * k}; }

    bool is_section() const { return a == 1 && b == 0; }
    bool is_fiber() const { return a == 0 && b == 1; }

    std::string str() const;  // "(a,b)"
};

struct RationalDivisorClass {
    int n = 0;
    Rat a = 0;
    Rat b = 0;

    friend bool operator==(const RationalDivisorClass&, const RationalDivisorClass&) = default;

    RationalDivisorClass operator+(const RationalDivisorClass& o) const;
    bool is_zero() const { return a == 0 && b == 0; }
    std::string str() const;
};

RationalDivisorClass to_rational(const DivisorClass& x);
RationalDivisorClass scale(const Rat& w, const DivisorClass& x);

Int intersection_number(const DivisorClass& x, const DivisorClass& y);
DivisorClass canonical_class(int n);
bool is_irreducible_class(const DivisorClass& x);
bool divisible_by(const DivisorClass& x, const Int& k);

}  // namespace k3q
