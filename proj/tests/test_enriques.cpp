#include "support.hpp"

#include <doctest.h>

using namespace k3q;
using k3q::test::cls;
using k3q::test::enriques_verdicts;
using k3q::test::fixture;
using k3q::test::make;
using k3q::test::verdicts;

namespace {

FiniteAbelianGroup G(const char* s) { return FiniteAbelianGroup::parse(s); }

bool power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

}  // namespace

TEST_SUITE("enriques") {
    TEST_CASE("candidates") {
        const auto& F = fixture();
        const auto& T = verdicts();
        CHECK(is_enriques_candidate(F, T, cls("F4-249")));
        CHECK(is_enriques_candidate(F, T, cls("F0-53")));
        CHECK_FALSE(is_enriques_candidate(F, T, cls("F0-1")));
        CHECK_FALSE(is_enriques_candidate(F, T, cls("F0-4")));
        CHECK(enriques_candidates(F, T, 12).empty());
        CHECK(enriques_candidates(F, T, 5).empty());
    }

    TEST_CASE("candidates are the admissible power-of-two classes") {
        const auto& F = fixture();
        const auto& T = verdicts();
        std::size_t total = 0;
        for (int n = 0; n <= 12; ++n) {
            auto c = enriques_candidates(F, T, n);
            total += c.size();
            for (const auto* e : c) {
                INFO(e->id);
                CHECK(e->cls.n() == n);
                CHECK(T.find(e->id)->is_admissible());
                for (int m : e->cls.multiplicities()) CHECK(power_of_two(m));
            }
        }
        CHECK(total == enriques_verdicts().rows().size());
    }

    TEST_CASE("verdict examples") {
        const auto& F = fixture();
        const auto& T = verdicts();
        const auto& E = enriques_verdicts();
        auto v53 = enriques_verdict(F, T, E, cls("F0-53"));
        REQUIRE(v53.is_admissible());
        CHECK(*v53.group == G("Z2^2"));
        CHECK(enriques_verdict(F, T, E, cls("F0-31")).is_rejected());
        auto v141 = enriques_verdict(F, T, E, cls("F1-141"));
        REQUIRE(v141.is_admissible());
        CHECK(*v141.group == G("Z4xZ8"));
        CHECK_THROWS_AS(enriques_verdict(F, T, E, cls("F0-1")), NotCandidate);
        CHECK_THROWS_AS(enriques_verdict(F, T, E, cls("F0-4")), NotCandidate);
        CHECK_THROWS_AS(enriques_verdict(F, T, E, make(0, "2*(9,9)")), NotCandidate);
    }

    TEST_CASE("catalog examples") {
        CHECK(catalog_AGE(4) == GroupSet{G("Z2xZ4")});
        CHECK(catalog_AGE(3).empty());
        CHECK(catalog_AGE(kInfinity) == GroupSet{G("Z2^2"), G("Z2^3"), G("Z2^4")});
        GroupSet u;
        for (int k : catalog_AGE_keys()) {
            auto s = catalog_AGE(k);
            u.insert(s.begin(), s.end());
        }
        CHECK(u == catalog_AGE_union());
    }

    TEST_CASE("quotient group has index two in the K3 group") {
        const auto& F = fixture();
        const auto& T = verdicts();
        const auto& E = enriques_verdicts();
        int admissible = 0;
        for (const auto& [id, v] : E.rows()) {
            INFO(id);
            CHECK_FALSE(v.citation.empty());
            if (!v.is_admissible()) continue;
            ++admissible;
            auto g = T.find(id)->group;
            REQUIRE(g.has_value());
            CHECK(g->order() == 2 * v.group->order());
        }
        CHECK(admissible > 0);
    }
}
