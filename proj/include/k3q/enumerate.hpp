#pragma once

#include "k3q/classes.hpp"

#include <vector>

namespace k3q {

// All b (aligned with `slots`, b_j >= 2) with sum_j m_j (1 - 1/b_j) == target.
// Slots of equal weight receive nondecreasing b, so each multiset appears once. Sorted output.
std::vector<std::vector<int>> solve_weighted_unit(const Rat& target, const std::vector<int>& slots);

// Every zero-defect branch class on F_n with irreducible components, sorted canonically.
std::vector<BranchClass> enumerate_branch_classes(int n);

}  // namespace k3q
