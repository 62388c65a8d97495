#pragma once

#include "k3q/deduce.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace k3q {

// z -> z^m on the base of the ruling; ramified over the two fibers listed in `over`.
struct BaseChangeCyclic {
    int degree = 2;
    int from_n = 0;
    int to_n = 0;
    char ruling = 'F';  // F_0 only: 'C' base-changes the ruling whose lines are (1,0)
    std::vector<int> over;
};

// (Z/2)^2 base change of degree 4, ramified with index 2 over the three fibers in `over`.
struct BaseChangeKlein {
    int from_n = 0;
    int to_n = 0;
    char ruling = 'F';
    std::vector<int> over;
};

// Cyclic cover of degree `degree` branched along the listed components of the current base.
struct CyclicCover {
    int degree = 2;
    std::string branch;
};

// Normalized fiber product of two earlier cyclic covers (0-based step indices).
struct FiberProduct {
    int first = 0;
    int second = 0;
};

struct AssertedStep {
    int degree = 1;
    std::string citation;
};

using CoverStep = std::variant<BaseChangeCyclic, BaseChangeKlein, CyclicCover, FiberProduct, AssertedStep>;

int step_degree(const CoverStep& s);
std::string step_name(const CoverStep& s);

enum class PlanProvenance { Curated, CuratedInterpolated };

struct CoverPlan {
    ClassId classId;
    std::string base;  // "n=<int> | m*(a,b) + ...", in the orientation used by the steps
    FiniteAbelianGroup claimedGroup;
    std::vector<CoverStep> steps;
    PlanProvenance provenance = PlanProvenance::Curated;
    std::string source;

    BranchClass base_class() const;
    long degree_product() const;
};

CoverPlan plan_from_json(const nlohmann::json& j);
nlohmann::json plan_to_json(const CoverPlan& p);

class PlanBook {
public:
    static PlanBook load(const std::string& path);
    static PlanBook from_json(const nlohmann::json& j);

    const CoverPlan* find(const ClassId& id) const;
    const std::map<ClassId, CoverPlan>& plans() const { return plans_; }

private:
    std::map<ClassId, CoverPlan> plans_;
};

// Throws NotAdmissible for classes without an admissible verdict, UnknownClass if no plan is shipped.
CoverPlan plan_tower(const Fixture& fixture, const VerdictTable& table, const PlanBook& book, const ClassId& id);

struct PlanReport {
    enum class Status { Pass, Fail, PassWithAssertions };

    Status status = Status::Pass;
    int failedStep = 0;  // 1-based; steps.size()+1 for the closing checks
    std::string reason;
    std::vector<std::string> assertions;
    std::vector<std::string> trace;  // class after each step
    long degreeProduct = 1;

    std::string status_name() const;
    std::string str() const;
};

PlanReport verify_plan(const CoverPlan& plan);

}  // namespace k3q
