#include "k3q/enriques.hpp"

#include <algorithm>

namespace k3q {

namespace {

bool power_of_two(int m) { return m >= 2 && (m & (m - 1)) == 0; }

bool k3_admissible(const VerdictTable& k3, const ClassId& id) {
    const Verdict* v = k3.find(id);
    return v && v->is_admissible();
}

GroupSet groups(std::initializer_list<const char*> specs) {
    GroupSet out;
    for (const char* s : specs) out.insert(FiniteAbelianGroup::parse(s));
    return out;
}

}  // namespace

std::vector<const FixtureEntry*> enriques_candidates(const Fixture& fixture, const VerdictTable& k3, int n) {
    std::vector<const FixtureEntry*> out;
    for (const FixtureEntry* e : fixture.on(n)) {
        auto ms = e->cls.multiplicities();
        if (k3_admissible(k3, e->id) && std::all_of(ms.begin(), ms.end(), power_of_two)) out.push_back(e);
    }
    return out;
}

bool is_enriques_candidate(const Fixture& fixture, const VerdictTable& k3, const BranchClass& B) {
    const FixtureEntry* e = fixture.find(B);
    if (!e || !k3_admissible(k3, e->id)) return false;
    auto ms = B.multiplicities();
    return std::all_of(ms.begin(), ms.end(), power_of_two);
}

Verdict enriques_verdict(const Fixture& fixture, const VerdictTable& k3, const VerdictTable& enriques,
                         const BranchClass& B) {
    if (!is_enriques_candidate(fixture, k3, B))
        throw NotCandidate("not an Enriques candidate: n=" + std::to_string(B.n()) + " | " + B.str());
    const FixtureEntry* e = fixture.find(B);
    const Verdict* v = enriques.find(e->id);
    if (!v) throw UnknownClass("no Enriques verdict for " + e->id);
    return *v;
}

GroupSet catalog_AGE(int n) {
    switch (n) {
        case kInfinity: return groups({"Z2^2", "Z2^3", "Z2^4"});
        case 0: return groups({"Z2^2", "Z2^3", "Z2^4", "Z4^2", "Z2xZ4", "Z2^2xZ4"});
        case 1: return groups({"Z2^2", "Z2^3", "Z2^4", "Z2xZ4", "Z2^2xZ4", "Z4xZ8"});
        case 2: return groups({"Z2^2", "Z2^3", "Z4^2", "Z2^2xZ4"});
        case 4: return groups({"Z2xZ4"});
        default: return {};
    }
}

GroupSet catalog_AGE_union() { return groups({"Z2^2", "Z2^3", "Z2^4", "Z4^2", "Z2xZ4", "Z2^2xZ4", "Z4xZ8"}); }

std::vector<int> catalog_AGE_keys() { return {0, 1, 2, 4, kInfinity}; }

}  // namespace k3q
