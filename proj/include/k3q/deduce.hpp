#pragma once

#include "k3q/rules.hpp"

namespace k3q {

struct NotAdmissible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class GroupProvenance { Generic, Curated };

struct DeducedGroup {
    FiniteAbelianGroup group;
    GroupProvenance provenance;
};

// Z/b for one component, Z/b1 + Z/b2 for two meeting components, else the curated group.
DeducedGroup deduce_group(const Fixture& fixture, const VerdictTable& table, const BranchClass& B);

}  // namespace k3q
