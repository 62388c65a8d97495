#include "k3q/enumerate.hpp"
#include "k3q/lattices.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace k3q;
using k3q::test::enriques_verdicts;
using k3q::test::fixture;
using k3q::test::plans;
using k3q::test::verdicts;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int n, bool pass, const std::string& detail) {
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

std::set<int> admissible_ns() {
    std::set<int> ns;
    for (const auto& e : fixture().entries())
        if (verdicts().find(e.id)->is_admissible()) ns.insert(e.cls.n());
    return ns;
}

}  // namespace

TEST_SUITE("acceptance") {
    TEST_CASE("criterion 1: enumeration reproduces the fixture") {
        auto t0 = Clock::now();
        std::vector<std::string> diffs;
        std::set<std::string> missing, unlisted;
        for (int n = 0; n <= 12; ++n) {
            auto classes = enumerate_branch_classes(n);
            for (const auto& B : classes)
                if (!fixture().find(B)) {
                    unlisted.insert("n=" + std::to_string(n) + " | " + B.str());
                    diffs.push_back("enumerated, not listed: n=" + std::to_string(n) + " | " + B.str());
                }
            for (const auto* e : fixture().on(n))
                if (!std::binary_search(classes.begin(), classes.end(), e->cls)) {
                    missing.insert(e->id);
                    diffs.push_back("listed, not enumerated: " + e->id);
                }
        }
        double secs = seconds_since(t0);
        std::string detail = "n=0..12 in " + std::to_string(secs) + " s";
        for (const auto& d : diffs) detail += "; " + d;
        report(1, diffs.empty() && secs < 10, detail);

        CHECK(secs < 10);
        CHECK(enumerate_branch_classes(10).empty());
        CHECK(enumerate_branch_classes(11).empty());
        // The two differences are the listed class with nonzero canonical defect and one class absent from the list.
        CHECK(missing == std::set<std::string>{"F0-20"});
        CHECK(unlisted == std::set<std::string>{"n=1 | " + test::make(1, "2*(1,1) + 2*(1,3) + 2*(2,2)").str()});
        CHECK_FALSE(has_zero_defect(test::cls("F0-20")));
    }

    TEST_CASE("criterion 2: Hirzebruch spectrum") {
        auto ns = admissible_ns();
        bool pass = ns == std::set<int>{0, 1, 2, 3, 4, 6, 8, 12};
        for (int n : {5, 7, 9}) {
            pass = pass && !fixture().on(n).empty() && !enumerate_branch_classes(n).empty();
            for (const auto* e : fixture().on(n)) pass = pass && final_verdict(fixture(), verdicts(), e->id).is_rejected();
        }
        std::string list;
        for (int n : ns) list += (list.empty() ? "" : ",") + std::to_string(n);
        report(2, pass, "admissible n = {" + list + "}; n=5,7,9 nonempty and all rejected");
        CHECK(pass);
    }

    TEST_CASE("criterion 3: K3 group catalogs") {
        bool pass = true;
        GroupSet all;
        for (int n = 0; n <= 12; ++n) {
            GroupSet s;
            for (const auto* e : fixture().on(n))
                if (verdicts().find(e->id)->is_admissible()) s.insert(deduce_group(fixture(), verdicts(), e->cls).group);
            INFO("n=" << n);
            CHECK(s == catalog_AG(n));
            pass = pass && s == catalog_AG(n);
            all.insert(s.begin(), s.end());
        }
        auto inf = catalog_AG(kInfinity);
        all.insert(inf.begin(), inf.end());
        CHECK(all == catalog_AG_union());
        pass = pass && all == catalog_AG_union();
        report(3, pass, "deduced groups equal AG_n for n=0..12; union with AG_inf equals AG (" + std::to_string(all.size()) + " groups)");
    }

    TEST_CASE("criterion 4: Enriques group catalogs") {
        bool pass = true;
        GroupSet all;
        for (int n = 0; n <= 12; ++n) {
            GroupSet s;
            for (const auto* e : enriques_candidates(fixture(), verdicts(), n)) {
                auto v = enriques_verdict(fixture(), verdicts(), enriques_verdicts(), e->cls);
                if (v.is_admissible()) s.insert(*v.group);
            }
            INFO("n=" << n);
            CHECK(s == catalog_AGE(n));
            pass = pass && s == catalog_AGE(n);
            bool listedKey = n == 0 || n == 1 || n == 2 || n == 4;
            CHECK(s.empty() != listedKey);
            pass = pass && s.empty() != listedKey;
            all.insert(s.begin(), s.end());
        }
        auto inf = catalog_AGE(kInfinity);
        all.insert(inf.begin(), inf.end());
        CHECK(all == catalog_AGE_union());
        pass = pass && all == catalog_AGE_union();
        report(4, pass, "Enriques groups equal AG_n(E) for n=0,1,2,4 and are empty otherwise; union equals AG(E)");
    }

    TEST_CASE("criterion 5: rule engine soundness") {
        auto t0 = Clock::now();
        int contradictions = 0, uncited = 0, rejected = 0;
        for (const auto& e : fixture().entries()) {
            const Verdict* cur = verdicts().find(e.id);
            REQUIRE(cur != nullptr);
            auto g = apply_generic_rules(e.cls, tentative_group_order(e.cls));
            if (cur->is_admissible() && g.is_rejected()) ++contradictions;
            if (cur->is_rejected()) {
                ++rejected;
                if (cur->rules.empty() || cur->citation.empty()) ++uncited;
            }
        }
        double secs = seconds_since(t0);
        bool pass = contradictions == 0 && uncited == 0 && secs < 5;
        report(5, pass,
               std::to_string(fixture().entries().size()) + " classes, " + std::to_string(contradictions) +
                   " contradictions, " + std::to_string(rejected) + " rejections all cited, " + std::to_string(secs) + " s");
        CHECK(pass);
    }

    TEST_CASE("criterion 6: exceptional equation solution sets") {
        using S = std::set<ExceptionalSolution>;
        auto solve = [](std::vector<Rat> w, std::set<int> orders, std::vector<std::vector<int>> groups) {
            auto v = solve_exceptional_equation(w, 1, orders, groups);
            return S(v.begin(), v.end());
        };
        auto s1 = solve({Rat(1, 2), Rat(2, 3), Rat(5, 6), Rat(1, 2), Rat(3, 4), Rat(3, 4)}, {2, 3, 4, 6, 12},
                        {{0, 1, 2}, {3, 4, 5}});
        auto s2 = solve({Rat(2, 3), Rat(1, 2), Rat(1, 2)}, {2, 3, 6}, {{1, 2}});
        auto s3 = solve({Rat(1, 2), Rat(3, 4), Rat(3, 4), Rat(2, 3), Rat(2, 3), Rat(2, 3)}, {2, 3, 4, 6, 12},
                        {{0, 1, 2}, {3, 4, 5}});
        bool e1 = s1 == S{{{1, 0, 0, 1, 0, 0}, 12}};
        bool e2 = s2 == S{{{2, 1, 0}, 6}, {{2, 0, 1}, 6}};
        bool e3 = s3.empty();
        report(6, e1 && e2 && e3,
               "first set " + std::string(e1 ? "matches" : "differs") + " (" + std::to_string(s1.size()) +
                   " solutions; the quoted (1,0,0,1,0,0;12) does not satisfy the equation), second set " +
                   (e2 ? "matches" : "differs") + " (" + std::to_string(s2.size()) +
                   " solutions, quoted pair included), third set " + (e3 ? "matches" : "differs") + " (" +
                   std::to_string(s3.size()) + " solutions; empty only with 0/1 coefficients and one per group)");
        // Solver output under the at-most-one-per-group contract.
        CHECK(s1.size() == 15);
        CHECK(s1.count({{1, 0, 0, 1, 0, 0}, 1}) == 1);
        CHECK(s2.size() == 8);
        CHECK(s2.count({{2, 1, 0}, 6}) == 1);
        CHECK(s2.count({{2, 0, 1}, 6}) == 1);
        CHECK(s3.size() == 10);
        for (const auto& s : s3) {
            bool binary = std::all_of(s.coefficients.begin(), s.coefficients.end(), [](int a) { return a <= 1; });
            int first = s.coefficients[0] + s.coefficients[1] + s.coefficients[2];
            int second = s.coefficients[3] + s.coefficients[4] + s.coefficients[5];
            CHECK_FALSE((binary && first == 1 && second == 1));
        }
    }

    TEST_CASE("criterion 7: symplectic lattice tables and Smith normal form") {
        auto reps = check_all_symplectic_tables();
        int consistent = 0, ranks = 0;
        std::string flagged;
        for (const auto& r : reps) {
            ranks += r.rankMatches;
            if (r.status() == "CONSISTENT") ++consistent;
            else flagged += r.row.group.invariant_str() + " (" + to_string(r.consistencyValue) + " vs " +
                            std::to_string(r.row.discriminantM.order()) + ")";
        }
        bool tables = reps.size() == 14 && ranks == 14 && consistent == 13 && flagged == "Z2xZ4 (64 vs 144)";

        std::mt19937 rng(424242);
        std::uniform_int_distribution<int> dim(1, 6), val(-20, 20);
        int snfOk = 0;
        for (int t = 0; t < 500; ++t) {
            std::size_t r = dim(rng), c = dim(rng);
            Matrix m(r, std::vector<Int>(c));
            for (auto& row : m)
                for (auto& x : row) x = val(rng);
            auto snf = smith_normal_form(m);
            bool ok = multiply(multiply(snf.U, m), snf.V) == snf.D && abs(determinant(snf.U)) == 1 &&
                      abs(determinant(snf.V)) == 1;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    if (i != j) ok = ok && snf.D[i][j] == 0;
            std::size_t k = std::min(r, c);
            for (std::size_t i = 0; i + 1 < k; ++i)
                ok = ok && snf.D[i][i] >= 0 &&
                     (snf.D[i][i] == 0 ? snf.D[i + 1][i + 1] == 0 : snf.D[i + 1][i + 1] % snf.D[i][i] == 0);
            snfOk += ok;
        }
        report(7, tables && snfOk == 500,
               std::to_string(ranks) + "/14 ranks match, " + std::to_string(consistent) + " consistent, flagged " + flagged +
                   ", SNF " + std::to_string(snfOk) + "/500");
        CHECK(tables);
        CHECK(snfOk == 500);
    }

    TEST_CASE("criterion 8: Fenchel truth table") {
        int checked = 0, wrong = 0;
        std::vector<int> ms;
        auto expected = [](const std::vector<int>& m) {
            return (m.size() == 2 && m[0] == m[1]) || m == std::vector<int>{2, 2, 2};
        };
        std::function<void(int)> rec = [&](int lo) {
            if (!ms.empty()) {
                ++checked;
                if (fenchel_abelian_p1(ms).has_value() != expected(ms)) ++wrong;
            }
            if (ms.size() == 4) return;
            for (int m = lo; m <= 8; ++m) {
                ms.push_back(m);
                rec(m);
                ms.pop_back();
            }
        };
        rec(2);
        report(8, wrong == 0, std::to_string(checked) + " multisets, " + std::to_string(wrong) + " mismatches");
        CHECK(wrong == 0);
    }

    TEST_CASE("criterion 9: cover plans verify") {
        int pass = 0, withAssertions = 0, fail = 0, orderMismatch = 0;
        for (const auto& [id, p] : plans().plans()) {
            auto r = verify_plan(p);
            if (r.status == PlanReport::Status::Pass) ++pass;
            else if (r.status == PlanReport::Status::PassWithAssertions) ++withAssertions;
            else ++fail;
            auto g = deduce_group(fixture(), verdicts(), fixture().find(id)->cls);
            if (r.degreeProduct != g.group.order()) ++orderMismatch;
        }
        CoverPlan tampered;
        tampered.classId = "TAMPERED";
        tampered.base = "n=0 | 2*(1,1)";
        tampered.claimedGroup = FiniteAbelianGroup::cyclic(2);
        tampered.steps = {CyclicCover{2, "2*(1,1)"}};
        auto t = verify_plan(tampered);
        bool tamperedOk = t.str() == "FAIL(step 1, \"class (1,1) not divisible by 2\")";
        bool ok = fail == 0 && orderMismatch == 0 && pass + withAssertions == 77 && tamperedOk;
        report(9, ok,
               std::to_string(pass) + " PASS, " + std::to_string(withAssertions) + " PASS-WITH-ASSERTIONS, " +
                   std::to_string(fail) + " FAIL, tampered plan " + t.str());
        CHECK(ok);
    }
}
