#include "k3q/lattices.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace k3q {

using boost::multiprecision::abs;

Matrix identity_matrix(std::size_t n) {
    Matrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix diagonal_matrix(const std::vector<Int>& d) {
    Matrix m(d.size(), std::vector<Int>(d.size(), 0));
    for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return m;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
    std::size_t r = x.size(), inner = y.size(), c = y.empty() ? 0 : y[0].size();
    Matrix out(r, std::vector<Int>(c, 0));
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i].size() != inner) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t k = 0; k < inner; ++k)
            if (x[i][k] != 0)
                for (std::size_t j = 0; j < c; ++j) out[i][j] += x[i][k] * y[k][j];
    }
    return out;
}

Int determinant(const Matrix& m0) {
    std::size_t n = m0.size();
    for (const auto& row : m0)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return 1;
    Matrix m = m0;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::size_t IntegerLattice::rank() const {
    // fraction-free row echelon
    Matrix m = gram;
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            Int f = m[i][c], g = m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * g - m[r][j] * f;
        }
        ++r;
    }
    return r;
}

namespace {

IntegerLattice chain_with_branch(int nodes, int branchAt) {
    // A chain 0..nodes-2 plus one node attached to `branchAt`.
    IntegerLattice L;
    L.gram.assign(nodes, std::vector<Int>(nodes, 0));
    for (int i = 0; i < nodes; ++i) L.gram[i][i] = -2;
    for (int i = 0; i + 2 < nodes; ++i) L.gram[i][i + 1] = L.gram[i + 1][i] = 1;
    L.gram[nodes - 1][branchAt] = L.gram[branchAt][nodes - 1] = 1;
    return L;
}

}  // namespace

IntegerLattice root_lattice(RootKind kind, int k) {
    IntegerLattice L;
    switch (kind) {
        case RootKind::A:
            if (k < 1) throw InvalidKind("A_k needs k >= 1");
            L.gram.assign(k, std::vector<Int>(k, 0));
            for (int i = 0; i < k; ++i) {
                L.gram[i][i] = -2;
                if (i + 1 < k) L.gram[i][i + 1] = L.gram[i + 1][i] = 1;
            }
            for (int i = 0; i < k; ++i) L.basisLabels.push_back("a" + std::to_string(i + 1));
            return L;
        case RootKind::E6:
        case RootKind::E7:
        case RootKind::E8: {
            int n = kind == RootKind::E6 ? 6 : kind == RootKind::E7 ? 7 : 8;
            L = chain_with_branch(n, 2);
            for (int i = 0; i < n; ++i) L.basisLabels.push_back("e" + std::to_string(i + 1));
            return L;
        }
        case RootKind::U:
            L.gram = {{0, 1}, {1, 0}};
            L.basisLabels = {"e", "f"};
            return L;
    }
    throw InvalidKind("unknown root lattice kind");
}

IntegerLattice root_lattice(const std::string& name) {
    std::string s;
    for (char c : name)
        if (c != '_') s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s == "U") return root_lattice(RootKind::U);
    if (s == "E6") return root_lattice(RootKind::E6);
    if (s == "E7") return root_lattice(RootKind::E7);
    if (s == "E8") return root_lattice(RootKind::E8);
    if (s.size() >= 2 && s[0] == 'A' && s.size() <= 4 &&
        std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return root_lattice(RootKind::A, std::stoi(s.substr(1)));
    throw InvalidKind("unknown root lattice '" + name + "'");
}

IntegerLattice direct_sum(const std::vector<IntegerLattice>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.dimension();
    IntegerLattice L;
    L.gram.assign(n, std::vector<Int>(n, 0));
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.dimension(); ++i)
            for (std::size_t j = 0; j < p.dimension(); ++j) L.gram[off + i][off + j] = p.gram[i][j];
        off += p.dimension();
    }
    return L;
}

IntegerLattice power(const IntegerLattice& L, int copies) {
    return direct_sum(std::vector<IntegerLattice>(static_cast<std::size_t>(std::max(copies, 0)), L));
}

namespace {

void swap_rows(Matrix& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }
void swap_cols(Matrix& m, std::size_t i, std::size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}
void add_row(Matrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}
void add_col(Matrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (auto& row : m) row[dst] += f * row[src];
}

}  // namespace

SmithNormalForm smith_normal_form(const Matrix& M) {
    std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    for (const auto& r : M)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    SmithNormalForm s{M, identity_matrix(rows), identity_matrix(cols)};
    Matrix& D = s.D;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // pivot: smallest nonzero absolute value in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (D[i][j] != 0 && (pi == rows || abs(D[i][j]) < abs(D[pi][pj]))) pi = i, pj = j;
        if (pi == rows) break;
        swap_rows(D, t, pi), swap_rows(s.U, t, pi);
        swap_cols(D, t, pj), swap_cols(s.V, t, pj);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Int q = D[i][t] / D[t][t];
                if (q != 0) add_row(D, i, t, -q), add_row(s.U, i, t, -q);
                if (D[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Int q = D[t][j] / D[t][t];
                if (q != 0) add_col(D, j, t, -q), add_col(s.V, j, t, -q);
                if (D[t][j] != 0) clean = false;
            }
            if (!clean) {
                // a smaller remainder sits in row or column t; move it to the pivot
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (D[i][t] != 0 && abs(D[i][t]) < abs(D[bi][bj])) bi = i, bj = t;
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D[t][j] != 0 && abs(D[t][j]) < abs(D[bi][bj])) bi = t, bj = j;
                swap_rows(D, t, bi), swap_rows(s.U, t, bi);
                swap_cols(D, t, bj), swap_cols(s.V, t, bj);
                continue;
            }
            // enforce d_t | every entry of the trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        add_row(D, t, i, 1), add_row(s.U, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D[t][t] < 0) {
            for (auto& x : D[t]) x = -x;
            for (auto& x : s.U[t]) x = -x;
        }
    }
    return s;
}

Int DiscriminantGroup::order() const {
    Int o = 1;
    for (const auto& d : invariantFactors) o *= d;
    return o;
}

std::string DiscriminantGroup::str() const {
    if (invariantFactors.empty()) return "0";
    std::vector<long> v;
    for (const auto& d : invariantFactors) v.push_back(static_cast<long>(d));
    return FiniteAbelianGroup(v).str();
}

DiscriminantGroup discriminant_group(const IntegerLattice& L) {
    if (L.dimension() == 0) return {};
    if (L.determinant() == 0) throw DegenerateLattice("degenerate Gram matrix");
    auto s = smith_normal_form(L.gram);
    DiscriminantGroup g;
    for (std::size_t i = 0; i < L.dimension(); ++i)
        if (abs(s.D[i][i]) > 1) g.invariantFactors.push_back(abs(s.D[i][i]));
    std::sort(g.invariantFactors.begin(), g.invariantFactors.end());
    return g;
}

const std::vector<SymplecticRow>& symplectic_table() {
    static const std::vector<SymplecticRow> rows = [] {
        auto G = [](const char* s) { return FiniteAbelianGroup::parse(s); };
        return std::vector<SymplecticRow>{
            {G("Z2"), "A_1^8", 2, 8, G("Z2^6")},
            {G("Z3"), "A_2^6", 3, 12, G("Z3^4")},
            {G("Z4"), "A_3^4+A_1^2", 4, 14, G("Z2^2xZ4^2")},
            {G("Z5"), "A_4^4", 5, 16, G("Z5^2")},
            {G("Z6"), "A_5^2+A_2^2+A_1^2", 6, 16, G("Z6^2")},
            {G("Z7"), "A_6^3", 7, 18, G("Z7")},
            {G("Z8"), "A_7^2+A_3+A_1", 8, 18, G("Z2xZ4")},
            {G("Z2^2"), "A_1^12", 4, 12, G("Z2^8")},
            {G("Z2^3"), "A_1^14", 8, 14, G("Z2^8")},
            {G("Z2^4"), "A_1^15", 16, 15, G("Z2^7")},
            {G("Z2xZ4"), "A_3^4+A_1^4", 8, 16, G("Z2^2xZ6^2")},
            {G("Z2xZ6"), "A_5^3+A_1^3", 12, 18, G("Z2xZ6")},
            {G("Z3^2"), "A_2^8", 9, 16, G("Z3^4")},
            {G("Z4^2"), "A_3^6", 16, 18, G("Z4^2")},
        };
    }();
    return rows;
}

IntegerLattice lattice_from_label(const std::string& label) {
    static const std::regex term(R"(([AEU])(?:_?(\d+))?(?:\^(\d+))?)");
    std::vector<IntegerLattice> parts;
    std::size_t start = 0;
    while (start <= label.size()) {
        auto plus = label.find('+', start);
        std::string t = label.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        std::smatch m;
        if (!std::regex_match(t, m, term)) throw InvalidKind("bad lattice label '" + label + "'");
        IntegerLattice base = root_lattice(m[1].str() + m[2].str());
        int e = m[3].matched ? std::stoi(m[3].str()) : 1;
        for (int i = 0; i < e; ++i) parts.push_back(base);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return direct_sum(parts);
}

SymplecticReport check_symplectic_tables(const FiniteAbelianGroup& G) {
    const auto& rows = symplectic_table();
    auto it = std::find_if(rows.begin(), rows.end(), [&](const SymplecticRow& r) { return r.group == G; });
    if (it == rows.end()) throw NotTabulated("no symplectic table row for " + G.str());
    SymplecticReport rep;
    rep.row = *it;
    IntegerLattice E = lattice_from_label(it->rootLattice);
    rep.rankE = E.rank();
    rep.detE = abs(E.determinant());
    rep.discE = discriminant_group(E);
    rep.consistencyValue = Rat(rep.detE, Int(it->overlatticeIndex) * it->overlatticeIndex);
    rep.rankMatches = rep.rankE == it->rankM;
    rep.consistent = rep.consistencyValue == Rat(it->discriminantM.order());
    return rep;
}

std::vector<SymplecticReport> check_all_symplectic_tables() {
    std::vector<SymplecticReport> out;
    for (const auto& r : symplectic_table()) out.push_back(check_symplectic_tables(r.group));
    return out;
}

}  // namespace k3q
