#include "k3q/lattices.hpp"

#include <doctest.h>

#include <random>

using namespace k3q;

namespace {

// Cofactor expansion along the first row.
Int laplace_det(const Matrix& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        Matrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Int c = m[0][j] * laplace_det(minor);
        d += (j % 2 == 0) ? c : Int(-c);
    }
    return d;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> v(-bound, bound);
    Matrix m(rows, std::vector<Int>(cols));
    for (auto& r : m)
        for (auto& x : r) x = v(rng);
    return m;
}

Matrix M(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m;
    for (auto r : rows) {
        std::vector<Int> row;
        for (int x : r) row.emplace_back(x);
        m.push_back(row);
    }
    return m;
}

std::vector<Int> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_SUITE("lattices") {
    TEST_CASE("root lattices") {
        CHECK(root_lattice(RootKind::A, 1).gram == M({{-2}}));
        CHECK(root_lattice(RootKind::A, 1).determinant() == -2);
        CHECK(root_lattice(RootKind::U).gram == M({{0, 1}, {1, 0}}));
        CHECK(root_lattice(RootKind::U).determinant() == -1);
        CHECK(root_lattice(RootKind::A, 2).gram == M({{-2, 1}, {1, -2}}));
        CHECK(root_lattice(RootKind::A, 2).determinant() == 3);
        CHECK(root_lattice(RootKind::E6).determinant() == 3);
        CHECK(root_lattice(RootKind::E7).determinant() == -2);
        CHECK(root_lattice(RootKind::E8).determinant() == 1);
        for (int k = 1; k <= 9; ++k) {
            Int expected = (k % 2 == 0 ? 1 : -1) * (k + 1);
            CHECK(root_lattice(RootKind::A, k).determinant() == expected);
            CHECK(root_lattice(RootKind::A, k).rank() == static_cast<std::size_t>(k));
        }
        CHECK(root_lattice("A_3").gram == root_lattice(RootKind::A, 3).gram);
        CHECK(root_lattice("e8").gram == root_lattice(RootKind::E8).gram);
        CHECK_THROWS_AS(root_lattice(RootKind::A, 0), InvalidKind);
        CHECK_THROWS_AS(root_lattice("D4"), InvalidKind);
        CHECK_THROWS_AS(root_lattice("A"), InvalidKind);
    }

    TEST_CASE("sums and powers") {
        auto L = direct_sum({root_lattice(RootKind::A, 2), root_lattice(RootKind::A, 1)});
        CHECK(L.dimension() == 3);
        CHECK(L.determinant() == -6);
        CHECK(power(root_lattice(RootKind::A, 1), 8).determinant() == 256);
        CHECK(lattice_from_label("A_3^4+A_1^2").dimension() == 14);
        CHECK(abs(lattice_from_label("A_3^4+A_1^2").determinant()) == 1024);
    }

    TEST_CASE("bareiss agrees with cofactor expansion") {
        std::mt19937 rng(7);
        for (int t = 0; t < 200; ++t) {
            std::size_t n = 1 + t % 6;
            auto m = random_matrix(rng, n, n, 9);
            CHECK(determinant(m) == laplace_det(m));
        }
        CHECK(determinant(M({{1, 2}, {2, 4}})) == 0);
        CHECK(determinant(M({{0, 1}, {1, 0}})) == -1);
    }

    TEST_CASE("smith normal form examples") {
        CHECK(smith_normal_form(identity_matrix(3)).D == identity_matrix(3));
        CHECK(smith_normal_form(diagonal_matrix(ints({2, 3}))).D == diagonal_matrix(ints({1, 6})));
        CHECK(smith_normal_form(root_lattice(RootKind::A, 2).gram).D == diagonal_matrix(ints({1, 3})));
    }

    TEST_CASE("smith normal form properties on random matrices") {
        std::mt19937 rng(1015);
        std::uniform_int_distribution<int> dim(1, 6);
        for (int t = 0; t < 500; ++t) {
            std::size_t r = dim(rng), c = dim(rng);
            auto m = random_matrix(rng, r, c, t % 3 == 0 ? 1 : 12);
            auto snf = smith_normal_form(m);
            CHECK(multiply(multiply(snf.U, m), snf.V) == snf.D);
            CHECK(abs(determinant(snf.U)) == 1);
            CHECK(abs(determinant(snf.V)) == 1);
            std::size_t k = std::min(r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    if (i != j) CHECK(snf.D[i][j] == 0);
            for (std::size_t i = 0; i < k; ++i) CHECK(snf.D[i][i] >= 0);
            for (std::size_t i = 0; i + 1 < k; ++i) {
                if (snf.D[i][i] == 0) {
                    CHECK(snf.D[i + 1][i + 1] == 0);
                } else {
                    CHECK(snf.D[i + 1][i + 1] % snf.D[i][i] == 0);
                }
            }
            if (r == c) {
                Int prod = 1;
                for (std::size_t i = 0; i < k; ++i) prod *= snf.D[i][i];
                CHECK(prod == abs(determinant(m)));
            }
        }
    }

    TEST_CASE("discriminant groups") {
        auto d8 = discriminant_group(power(root_lattice(RootKind::A, 1), 8));
        CHECK(d8.order() == 256);
        CHECK(d8.invariantFactors == std::vector<Int>(8, 2));
        CHECK(discriminant_group(lattice_from_label("A_7^2+A_3+A_1")).order() == 512);
        CHECK(discriminant_group(root_lattice(RootKind::U)).invariantFactors.empty());
        CHECK(discriminant_group(root_lattice(RootKind::U)).order() == 1);
        for (int k = 1; k <= 8; ++k) CHECK(discriminant_group(root_lattice(RootKind::A, k)).invariantFactors == ints({k + 1}));
        CHECK(discriminant_group(root_lattice(RootKind::E8)).order() == 1);
        IntegerLattice degenerate{M({{2, 2}, {2, 2}}), {"x", "y"}};
        CHECK_THROWS_AS(discriminant_group(degenerate), DegenerateLattice);
        CHECK(degenerate.rank() == 1);
    }

    TEST_CASE("symplectic table examples") {
        auto r2 = check_symplectic_tables(FiniteAbelianGroup::parse("Z2"));
        CHECK(r2.rankE == 8);
        CHECK(r2.detE == 256);
        CHECK(r2.consistencyValue == 64);
        CHECK(r2.status() == "CONSISTENT");

        auto r44 = check_symplectic_tables(FiniteAbelianGroup::parse("Z4^2"));
        CHECK(r44.detE == 4096);
        CHECK(r44.consistencyValue == 16);
        CHECK(r44.status() == "CONSISTENT");

        auto r24 = check_symplectic_tables(FiniteAbelianGroup::parse("Z2xZ4"));
        CHECK(r24.detE == 4096);
        CHECK(r24.consistencyValue == 64);
        CHECK(r24.row.discriminantM.order() == 144);
        CHECK(r24.rankMatches);
        CHECK(r24.status() == "DISCREPANCY");

        CHECK_THROWS_AS(check_symplectic_tables(FiniteAbelianGroup::parse("Z9")), NotTabulated);
    }

    TEST_CASE("all symplectic rows") {
        auto all = check_all_symplectic_tables();
        REQUIRE(all.size() == 14);
        int consistent = 0;
        for (const auto& r : all) {
            INFO(r.row.group.str());
            CHECK(r.rankMatches);
            CHECK(r.rankE == r.row.rankM);
            if (r.status() == "CONSISTENT") {
                ++consistent;
                CHECK(r.consistencyValue == r.row.discriminantM.order());
            } else {
                CHECK(r.row.group == FiniteAbelianGroup::parse("Z2xZ4"));
            }
        }
        CHECK(consistent == 13);
    }
}
