#pragma once

#include "k3q/classes.hpp"
#include "k3q/groups.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3q {

using RuleId = std::string;

struct UnknownClass : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Fixed-locus counts used by the lemmas.
inline constexpr int kSymplecticInvolutionFixedPoints = 8;  // lemma thm:22
inline constexpr int kOrderThreeFixedPoints = 3;            // lemma thm:27
inline constexpr int kOrderFourIsolatedPoints = 4;          // lemma thm:31

// "L22" -> "lemma thm:22", "T44" -> "theorem thm:44", "ADHOC-41" -> "ad hoc argument for class (41)".
std::string rule_citation(const RuleId& id);

struct Verdict {
    enum class Kind { Admissible, Rejected, Undecided };

    Kind kind = Kind::Undecided;
    std::optional<FiniteAbelianGroup> group;
    std::set<RuleId> rules;
    std::string citation;

    static Verdict admissible(FiniteAbelianGroup g, std::string citation = {});
    static Verdict rejected(std::set<RuleId> rules, std::string citation = {});
    static Verdict undecided(std::string citation = {});

    bool is_admissible() const { return kind == Kind::Admissible; }
    bool is_rejected() const { return kind == Kind::Rejected; }
    std::string kind_name() const;  // admissible / rejected / undecided
    std::string detail() const;     // group, or comma-joined rules
};

// Shape-guarded numerical lemmas; never returns Admissible.
// Rules that need |G| (L28, L33, L40) are evaluated only when an order is supplied.
Verdict apply_generic_rules(const BranchClass& B, std::optional<long> tentativeGroupOrder = std::nullopt);

// Order the lemmas may assume before the curated table is consulted:
// b for one component, b1*b2 for two meeting components.
std::optional<long> tentative_group_order(const BranchClass& B);

struct ExceptionalSolution {
    std::vector<int> coefficients;
    int beta = 1;
    friend auto operator<=>(const ExceptionalSolution&, const ExceptionalSolution&) = default;
};

// level + (beta-1)/beta == sum_j w_j a_j, beta in allowedOrders plus 1,
// at most one nonzero a_j inside each exclusivity group (0-based indices).
std::vector<ExceptionalSolution> solve_exceptional_equation(const std::vector<Rat>& weights, int level,
                                                            const std::set<int>& allowedOrders,
                                                            const std::vector<std::vector<int>>& exclusivityGroups);

// ClassId -> curated verdict, loaded from a tab-separated table.
class VerdictTable {
public:
    static VerdictTable load(const std::string& path);
    static VerdictTable parse(const std::string& text);

    const Verdict* find(const ClassId& id) const;
    const std::map<ClassId, Verdict>& rows() const { return rows_; }

private:
    std::map<ClassId, Verdict> rows_;
};

Verdict final_verdict(const Fixture& fixture, const VerdictTable& table, const BranchClass& B);
Verdict final_verdict(const Fixture& fixture, const VerdictTable& table, const ClassId& id);

}  // namespace k3q
