#pragma once

#include "k3q/rules.hpp"

#include <vector>

namespace k3q {

struct NotCandidate : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// K3-admissible fixture classes on F_n whose multiplicities are all powers of two.
std::vector<const FixtureEntry*> enriques_candidates(const Fixture& fixture, const VerdictTable& k3, int n);
bool is_enriques_candidate(const Fixture& fixture, const VerdictTable& k3, const BranchClass& B);

Verdict enriques_verdict(const Fixture& fixture, const VerdictTable& k3, const VerdictTable& enriques,
                         const BranchClass& B);

// Keys 0,1,2,4 and kInfinity; anything else gives the empty set.
GroupSet catalog_AGE(int n);
GroupSet catalog_AGE_union();
std::vector<int> catalog_AGE_keys();

}  // namespace k3q
