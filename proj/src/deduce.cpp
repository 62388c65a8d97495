#include "k3q/deduce.hpp"

namespace k3q {

DeducedGroup deduce_group(const Fixture& fixture, const VerdictTable& table, const BranchClass& B) {
    Verdict v = final_verdict(fixture, table, B);
    if (!v.is_admissible()) throw NotAdmissible("class is not admissible: n=" + std::to_string(B.n()) + " | " + B.str());
    const auto& c = B.components();
    if (c.size() == 1) return {FiniteAbelianGroup::cyclic(c[0].multiplicity), GroupProvenance::Generic};
    if (c.size() == 2 && intersection_number(c[0].cls, c[1].cls) != 0)
        return {FiniteAbelianGroup({c[0].multiplicity, c[1].multiplicity}), GroupProvenance::Generic};
    return {*v.group, GroupProvenance::Curated};
}

}  // namespace k3q
