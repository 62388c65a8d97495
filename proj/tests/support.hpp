#pragma once

#include "k3q/deduce.hpp"
#include "k3q/enriques.hpp"
#include "k3q/towers.hpp"

#include <string>

namespace k3q::test {

inline std::string data_file(const std::string& name) { return std::string(K3Q_TEST_DATA) + "/" + name; }

inline const Fixture& fixture() {
    static const Fixture f = Fixture::load(data_file("fixtures.txt"));
    return f;
}
inline const VerdictTable& verdicts() {
    static const VerdictTable t = VerdictTable::load(data_file("verdicts.tsv"));
    return t;
}
inline const VerdictTable& enriques_verdicts() {
    static const VerdictTable t = VerdictTable::load(data_file("verdicts_enriques.tsv"));
    return t;
}
inline const PlanBook& plans() {
    static const PlanBook b = PlanBook::load(data_file("plans.json"));
    return b;
}
inline const BranchClass& cls(const ClassId& id) {
    const FixtureEntry* e = fixture().find(id);
    if (!e) throw UnknownClass(id);
    return e->cls;
}
inline BranchClass make(int n, const std::string& comps) { return parse_components(n, comps); }

}  // namespace k3q::test
