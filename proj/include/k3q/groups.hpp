#pragma once

#include "k3q/arith.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace k3q {

struct GroupParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k, d_i >= 2.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    // Any list of cyclic orders; factors equal to 1 are dropped.
    explicit FiniteAbelianGroup(const std::vector<long>& cyclicOrders);

    static FiniteAbelianGroup cyclic(long m) { return FiniteAbelianGroup(std::vector<long>{m}); }
    // Grammar: "Z2^3", "Z2xZ4", "z2xz3^2xz4", "Z/2+Z/4", "0" for the trivial group.
    static FiniteAbelianGroup parse(std::string_view spec);

    const std::vector<long>& invariant_factors() const { return factors_; }
    std::vector<long> primary_factors() const;  // sorted prime powers
    long order() const;
    std::size_t rank() const { return factors_.size(); }
    bool is_trivial() const { return factors_.empty(); }
    std::string str() const;            // primary form, e.g. "Z2xZ3^2xZ4"
    std::string invariant_str() const;  // invariant factors, e.g. "Z2xZ6"

    FiniteAbelianGroup operator+(const FiniteAbelianGroup& o) const;  // direct sum

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
    friend bool operator<(const FiniteAbelianGroup& x, const FiniteAbelianGroup& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.factors_ < y.factors_;
    }

private:
    std::vector<long> factors_;
};

using GroupSet = std::set<FiniteAbelianGroup>;

constexpr int kInfinity = -1;  // the P^2 key of the catalogs

// Keys 0,1,2,3,4,6,8,12 and kInfinity; anything else gives the empty set.
GroupSet catalog_AG(int n);
GroupSet catalog_AG_union();  // the full AG list
std::vector<int> catalog_keys();

// Abelian Galois covers of P^1 with the given branch multiplicities.
std::optional<FiniteAbelianGroup> fenchel_abelian_p1(std::vector<int> multiplicities);

}  // namespace k3q
