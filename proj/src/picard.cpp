#include "k3q/picard.hpp"

namespace k3q {

namespace {

void require_same(int n, int m) {
    if (n != m)
        throw AmbientMismatch("ambient mismatch: F_" + std::to_string(n) + " vs F_" + std::to_string(m));
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    require_same(n, o.n);
    return {n, a + o.a, b + o.b};
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    require_same(n, o.n);
    return {n, a - o.a, b - o.b};
}

std::string DivisorClass::str() const { return "(" + a.str() + "," + b.str() + ")"; }

RationalDivisorClass RationalDivisorClass::operator+(const RationalDivisorClass& o) const {
    require_same(n, o.n);
    return {n, a + o.a, b + o.b};
}

std::string RationalDivisorClass::str() const {
    return "(" + to_string(a) + "," + to_string(b) + ")";
}

RationalDivisorClass to_rational(const DivisorClass& x) { return {x.n, Rat(x.a), Rat(x.b)}; }

RationalDivisorClass scale(const Rat& w, const DivisorClass& x) {
    return {x.n, w * Rat(x.a), w * Rat(x.b)};
}

Int intersection_number(const DivisorClass& x, const DivisorClass& y) {
    require_same(x.n, y.n);
    return -Int(x.n) * x.a * y.a + x.a * y.b + x.b * y.a;
}

DivisorClass canonical_class(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    return {n, -2, -(Int(n) + 2)};
}

bool is_irreducible_class(const DivisorClass& x) {
    if (x.is_section() || x.is_fiber()) return true;
    if (x.n == 0) return x.a >= 1 && x.b >= 1;
    return x.a >= 1 && x.b >= Int(x.n) * x.a;
}

bool divisible_by(const DivisorClass& x, const Int& k) {
    if (k < 2) throw std::invalid_argument("divisor must be at least 2");
    return x.a % k == 0 && x.b % k == 0;
}

}  // namespace k3q
