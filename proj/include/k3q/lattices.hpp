#pragma once

#include "k3q/groups.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace k3q {

using Matrix = std::vector<std::vector<Int>>;

struct InvalidKind : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateLattice : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotTabulated : std::out_of_range {
    using std::out_of_range::out_of_range;
};

Matrix identity_matrix(std::size_t n);
Matrix diagonal_matrix(const std::vector<Int>& d);
Matrix multiply(const Matrix& x, const Matrix& y);
Int determinant(const Matrix& m);  // Bareiss elimination, exact

struct IntegerLattice {
    Matrix gram;
    std::vector<std::string> basisLabels;

    std::size_t dimension() const { return gram.size(); }
    std::size_t rank() const;  // rank of the Gram matrix
    Int determinant() const { return k3q::determinant(gram); }
};

enum class RootKind { A, E6, E7, E8, U };

// Negative definite A_k, E_6, E_7, E_8; hyperbolic U. k is used only for A_k.
IntegerLattice root_lattice(RootKind kind, int k = 0);
// "A3", "A_3", "E8", "U" (case-insensitive).
IntegerLattice root_lattice(const std::string& name);
IntegerLattice direct_sum(const std::vector<IntegerLattice>& parts);
IntegerLattice power(const IntegerLattice& L, int copies);

struct SmithNormalForm {
    Matrix D, U, V;  // U * M * V == D
};

SmithNormalForm smith_normal_form(const Matrix& M);

struct DiscriminantGroup {
    std::vector<Int> invariantFactors;  // ascending, each > 1
    Int order() const;
    std::string str() const;
};

DiscriminantGroup discriminant_group(const IntegerLattice& L);

// One row of the symplectic E_G / M_G tables.
struct SymplecticRow {
    FiniteAbelianGroup group;
    std::string rootLattice;  // e.g. "A_3^4+A_1^2"
    long overlatticeIndex;    // r_G
    std::size_t rankM;
    FiniteAbelianGroup discriminantM;
};

const std::vector<SymplecticRow>& symplectic_table();

struct SymplecticReport {
    SymplecticRow row;
    std::size_t rankE = 0;
    Int detE = 0;
    DiscriminantGroup discE;
    Rat consistencyValue = 0;  // |det E_G| / r_G^2
    bool rankMatches = false;
    bool consistent = false;
    std::string status() const { return consistent && rankMatches ? "CONSISTENT" : "DISCREPANCY"; }
};

SymplecticReport check_symplectic_tables(const FiniteAbelianGroup& G);
std::vector<SymplecticReport> check_all_symplectic_tables();
IntegerLattice lattice_from_label(const std::string& label);  // "A_3^4+A_1^2"

}  // namespace k3q
