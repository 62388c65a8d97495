#include "k3q/towers.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>

namespace k3q {

using nlohmann::json;

int step_degree(const CoverStep& s) {
    return std::visit(
        [](const auto& st) -> int {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, BaseChangeCyclic>) return st.degree;
            else if constexpr (std::is_same_v<T, BaseChangeKlein>) return 4;
            else if constexpr (std::is_same_v<T, CyclicCover>) return st.degree;
            else if constexpr (std::is_same_v<T, FiberProduct>) return 1;
            else return st.degree;
        },
        s);
}

std::string step_name(const CoverStep& s) {
    static const char* names[] = {"BaseChangeCyclic", "BaseChangeKlein", "CyclicCover", "FiberProduct", "AssertedStep"};
    return names[s.index()];
}

BranchClass CoverPlan::base_class() const {
    auto bar = base.find('|');
    if (bar == std::string::npos) throw ParseError("plan base needs 'n=<int> | components'", 0, 1);
    auto [id, B] = parse_fixture_line("base | " + base);
    (void)id;
    // keep the plan's own orientation
    return parse_components(B.n(), base.substr(bar + 1));
}

long CoverPlan::degree_product() const {
    long d = 1;
    for (const auto& s : steps) d *= step_degree(s);
    return d;
}

CoverPlan plan_from_json(const json& j) {
    CoverPlan p;
    p.classId = j.at("class").get<std::string>();
    p.base = j.at("base").get<std::string>();
    p.claimedGroup = FiniteAbelianGroup::parse(j.at("group").get<std::string>());
    p.source = j.value("source", "");
    std::string prov = j.value("provenance", "Curated");
    if (prov == "Curated") p.provenance = PlanProvenance::Curated;
    else if (prov == "Curated-Interpolated") p.provenance = PlanProvenance::CuratedInterpolated;
    else throw std::invalid_argument("unknown provenance " + prov);
    auto ruling = [](const json& s) {
        std::string r = s.value("ruling", "F");
        if (r != "F" && r != "C") throw std::invalid_argument("ruling must be F or C");
        return r[0];
    };
    for (const auto& s : j.at("steps")) {
        std::string type = s.at("type").get<std::string>();
        if (type == "BaseChangeCyclic") {
            p.steps.push_back(BaseChangeCyclic{s.at("degree").get<int>(), s.at("from_n").get<int>(),
                                               s.at("to_n").get<int>(), ruling(s), s.at("over").get<std::vector<int>>()});
        } else if (type == "BaseChangeKlein") {
            p.steps.push_back(BaseChangeKlein{s.at("from_n").get<int>(), s.at("to_n").get<int>(), ruling(s),
                                              s.at("over").get<std::vector<int>>()});
        } else if (type == "CyclicCover") {
            p.steps.push_back(CyclicCover{s.at("degree").get<int>(), s.at("branch").get<std::string>()});
        } else if (type == "FiberProduct") {
            auto of = s.at("of").get<std::vector<int>>();
            if (of.size() != 2) throw std::invalid_argument("FiberProduct needs two step indices");
            p.steps.push_back(FiberProduct{of[0], of[1]});
        } else if (type == "AssertedStep") {
            p.steps.push_back(AssertedStep{s.at("degree").get<int>(), s.at("citation").get<std::string>()});
        } else {
            throw std::invalid_argument("unknown step type " + type);
        }
    }
    return p;
}

json plan_to_json(const CoverPlan& p) {
    json steps = json::array();
    for (const auto& s : p.steps) {
        json js;
        js["type"] = step_name(s);
        std::visit(
            [&](const auto& st) {
                using T = std::decay_t<decltype(st)>;
                if constexpr (std::is_same_v<T, BaseChangeCyclic>) {
                    js["degree"] = st.degree;
                    js["from_n"] = st.from_n;
                    js["to_n"] = st.to_n;
                    js["ruling"] = std::string(1, st.ruling);
                    js["over"] = st.over;
                } else if constexpr (std::is_same_v<T, BaseChangeKlein>) {
                    js["from_n"] = st.from_n;
                    js["to_n"] = st.to_n;
                    js["ruling"] = std::string(1, st.ruling);
                    js["over"] = st.over;
                } else if constexpr (std::is_same_v<T, CyclicCover>) {
                    js["degree"] = st.degree;
                    js["branch"] = st.branch;
                } else if constexpr (std::is_same_v<T, FiberProduct>) {
                    js["of"] = {st.first, st.second};
                } else {
                    js["degree"] = st.degree;
                    js["citation"] = st.citation;
                }
            },
            s);
        steps.push_back(js);
    }
    return json{{"class", p.classId},
                {"provenance", p.provenance == PlanProvenance::Curated ? "Curated" : "Curated-Interpolated"},
                {"source", p.source},
                {"group", p.claimedGroup.str()},
                {"base", p.base},
                {"steps", steps}};
}

PlanBook PlanBook::from_json(const json& j) {
    PlanBook b;
    for (const auto& pj : j.at("plans")) {
        CoverPlan p = plan_from_json(pj);
        ClassId id = p.classId;
        if (!b.plans_.emplace(id, std::move(p)).second) throw std::invalid_argument("duplicate plan for " + id);
    }
    return b;
}

PlanBook PlanBook::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open plan file " + path);
    return from_json(json::parse(in));
}

const CoverPlan* PlanBook::find(const ClassId& id) const {
    auto it = plans_.find(id);
    return it == plans_.end() ? nullptr : &it->second;
}

CoverPlan plan_tower(const Fixture& fixture, const VerdictTable& table, const PlanBook& book, const ClassId& id) {
    Verdict v = final_verdict(fixture, table, id);
    if (!v.is_admissible()) throw NotAdmissible(id + " is not admissible");
    const CoverPlan* p = book.find(id);
    if (!p) throw UnknownClass("no cover plan shipped for " + id);
    return *p;
}

std::string PlanReport::status_name() const {
    switch (status) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        default: return "PASS-WITH-ASSERTIONS";
    }
}

std::string PlanReport::str() const {
    if (status == Status::Fail) return "FAIL(step " + std::to_string(failedStep) + ", \"" + reason + "\")";
    return status_name();
}

namespace {

struct Tracked {
    int mult;
    DivisorClass cls;
    int ram = 1;  // ramification index accumulated by the covers so far
};

struct Failure {
    std::string reason;
};

// 2D lattice in Hermite form: rows (p, q), (0, s) with p, s > 0.
struct Lattice2 {
    Int p, q, s;

    static Lattice2 span(std::vector<std::pair<Int, Int>> gens) {
        // column 0 by extended gcd
        Int p = 0, q = 0;
        std::vector<Int> rest;
        for (auto [x, y] : gens) {
            // combine (p,q) with (x,y) so the first coordinate becomes gcd(p,x)
            if (x == 0) {
                rest.push_back(y);
                continue;
            }
            Int a = p, b = x, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (b != 0) {
                Int k = a / b;
                Int r = a - k * b;
                a = b, b = r;
                Int ns = s0 - k * s1, nt = t0 - k * t1;
                s0 = s1, s1 = ns, t0 = t1, t1 = nt;
            }
            // a = s0*p + t0*x; the kernel combination (x/a)*row_old - (p/a)*row_new has zero first coordinate
            Int g = a;
            Int newq = s0 * q + t0 * y;
            if (p != 0) rest.push_back((x / g) * q - (p / g) * y);
            p = g, q = newq;
        }
        Int s = 0;
        for (const auto& r : rest) s = boost::multiprecision::gcd(s, r);
        if (p < 0) p = -p, q = -q;
        if (s < 0) s = -s;
        return {p, q, s};
    }

    bool contains(const Int& x, const Int& y) const {
        if (p == 0 || s == 0) throw std::logic_error("lattice is not of full rank");
        if (x % p != 0) return false;
        return (y - (x / p) * q) % s == 0;
    }
};

class Walker {
public:
    explicit Walker(const CoverPlan& plan) : plan_(plan) {
        BranchClass B = plan.base_class();
        n_ = B.n();
        for (const auto& c : B.components()) comps_.push_back({c.multiplicity, c.cls, 1});
    }

    PlanReport run() {
        PlanReport rep;
        rep.degreeProduct = plan_.degree_product();
        for (std::size_t i = 0; i < plan_.steps.size(); ++i) {
            try {
                std::visit([&](const auto& st) { apply(st, static_cast<int>(i), rep); }, plan_.steps[i]);
            } catch (const Failure& f) {
                return fail(rep, static_cast<int>(i) + 1, f.reason);
            } catch (const std::exception& e) {
                return fail(rep, static_cast<int>(i) + 1, e.what());
            }
            rep.trace.push_back(current().str());
        }
        int closing = static_cast<int>(plan_.steps.size()) + 1;
        if (!has_zero_defect(current())) return fail(rep, closing, "final class has nonzero canonical defect");
        for (const auto& c : comps_)
            if (c.ram != c.mult)
                return fail(rep, closing,
                            "component " + std::to_string(c.mult) + "*" + c.cls.str() + " ramified to order " +
                                std::to_string(c.ram));
        if (rep.degreeProduct != plan_.claimedGroup.order())
            return fail(rep, closing,
                        "degree product " + std::to_string(rep.degreeProduct) + " differs from |G| = " +
                            std::to_string(plan_.claimedGroup.order()));
        rep.status = rep.assertions.empty() ? PlanReport::Status::Pass : PlanReport::Status::PassWithAssertions;
        return rep;
    }

private:
    static PlanReport fail(PlanReport rep, int step, std::string reason) {
        rep.status = PlanReport::Status::Fail;
        rep.failedStep = step;
        rep.reason = std::move(reason);
        return rep;
    }

    BranchClass current() const {
        std::vector<BranchComponent> v;
        for (const auto& c : comps_) v.push_back({c.mult, c.cls});
        return BranchClass(n_, v);
    }

    void base_change(int degree, int from_n, int to_n, int expectTo, char ruling, const std::vector<int>& over,
                     int ramIndex, int copiesPerRamified, std::size_t expectOver) {
        if (covered_) throw Failure{"base change after a cover is not supported"};
        if (from_n != n_) throw Failure{"base change starts on F_" + std::to_string(from_n) + ", current base is F_" + std::to_string(n_)};
        if (to_n != expectTo) throw Failure{"base change target F_" + std::to_string(to_n) + " should be F_" + std::to_string(expectTo)};
        if (n_ != 0 && ruling != 'F') throw Failure{"only F_0 has a second ruling"};
        if (over.size() != expectOver) throw Failure{"base change needs " + std::to_string(expectOver) + " ramified fibers"};
        DivisorClass fiber = ruling == 'F' ? DivisorClass{n_, 0, 1} : DivisorClass{n_, 1, 0};

        std::vector<bool> ramified(comps_.size(), false);
        for (int m : over) {
            if (m % ramIndex != 0) throw Failure{"fiber multiplicity " + std::to_string(m) + " not divisible by " + std::to_string(ramIndex)};
            bool found = false;
            for (std::size_t i = 0; i < comps_.size() && !found; ++i)
                if (!ramified[i] && comps_[i].cls == fiber && comps_[i].mult == m) ramified[i] = found = true;
            if (!found) throw Failure{"no fiber " + std::to_string(m) + "*" + fiber.str() + " to ramify over"};
        }
        std::vector<Tracked> next;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            const auto& c = comps_[i];
            if (ramified[i]) {
                int m = c.mult / ramIndex;
                if (m > 1)
                    for (int k = 0; k < copiesPerRamified; ++k) next.push_back({m, {to_n, fiber.a, fiber.b}});
            } else if (c.cls == fiber) {
                for (int k = 0; k < degree; ++k) next.push_back({c.mult, {to_n, fiber.a, fiber.b}});
            } else if (ruling == 'F') {
                next.push_back({c.mult, {to_n, c.cls.a, c.cls.b * degree}});  // p*C = C, p*F = mF
            } else {
                next.push_back({c.mult, {to_n, c.cls.a * degree, c.cls.b}});
            }
        }
        comps_ = std::move(next);
        n_ = to_n;
        current();  // validates the pulled-back class
    }

    void apply(const BaseChangeCyclic& s, int, PlanReport&) {
        if (s.degree < 2) throw Failure{"base change degree must be at least 2"};
        base_change(s.degree, s.from_n, s.to_n, s.degree * s.from_n, s.ruling, s.over, s.degree, 1, 2);
    }

    void apply(const BaseChangeKlein& s, int, PlanReport&) {
        base_change(4, s.from_n, s.to_n, 4 * s.from_n, s.ruling, s.over, 2, 2, 3);
    }

    void apply(const CyclicCover& s, int index, PlanReport&) {
        if (s.degree < 2) throw Failure{"cover degree must be at least 2"};
        BranchClass branch = parse_components(n_, s.branch);
        std::vector<std::size_t> picked;
        for (const auto& bc : branch.components()) {
            std::optional<std::size_t> hit;
            for (std::size_t i = 0; i < comps_.size() && !hit; ++i) {
                bool used = std::find(picked.begin(), picked.end(), i) != picked.end();
                if (!used && comps_[i].cls == bc.cls && comps_[i].mult == bc.multiplicity &&
                    comps_[i].mult % (comps_[i].ram * s.degree) == 0)
                    hit = i;
            }
            if (!hit) throw Failure{"branch component " + bc.str() + " is not available for a degree " + std::to_string(s.degree) + " cover"};
            picked.push_back(*hit);
        }

        // Reduced preimages of already ramified components are cls/ram; the branch must be divisible in their span.
        Int den = 1;
        for (const auto& c : comps_) den = boost::multiprecision::lcm(den, Int(c.ram));
        std::vector<std::pair<Int, Int>> gens{{den, 0}, {0, den}};
        for (const auto& c : comps_)
            if (c.ram > 1) gens.push_back({c.cls.a * den / c.ram, c.cls.b * den / c.ram});
        Int sx = 0, sy = 0;
        for (auto i : picked) sx += comps_[i].cls.a * den / comps_[i].ram, sy += comps_[i].cls.b * den / comps_[i].ram;
        Lattice2 L = Lattice2::span(gens);
        Int k = s.degree;
        Lattice2 kL{L.p * k, L.q * k, L.s * k};
        if (!kL.contains(sx, sy)) {
            Rat ax(sx, den), ay(sy, den);
            if (den == 1) throw Failure{"class (" + sx.str() + "," + sy.str() + ") not divisible by " + k.str()};
            throw Failure{"branch (" + to_string(ax) + "," + to_string(ay) + ") not divisible by " + k.str() +
                          " in the pulled-back Picard lattice"};
        }
        bool overBase = den == 1 || std::all_of(picked.begin(), picked.end(), [&](auto i) { return comps_[i].ram == 1; });
        if (overBase) {
            DivisorClass total{n_, 0, 0};
            for (auto i : picked) total = total + comps_[i].cls;
            overBase = divisible_by(total, k);
        }
        for (auto i : picked) comps_[i].ram *= s.degree;
        covers_[index] = overBase;
        covered_ = true;
    }

    void apply(const FiberProduct& s, int, PlanReport&) {
        for (int i : {s.first, s.second}) {
            auto it = covers_.find(i);
            if (it == covers_.end()) throw Failure{"fiber product factor " + std::to_string(i) + " is not an earlier cyclic cover"};
            if (!it->second) throw Failure{"fiber product factor " + std::to_string(i) + " is not defined over the base"};
        }
        if (s.first == s.second) throw Failure{"fiber product of a cover with itself"};
    }

    void apply(const AssertedStep& s, int index, PlanReport& rep) {
        if (s.degree < 1) throw Failure{"asserted degree must be positive"};
        if (s.citation.empty()) throw Failure{"asserted step without citation"};
        rep.assertions.push_back("step " + std::to_string(index + 1) + " (degree " + std::to_string(s.degree) +
                                 "): " + s.citation);
    }

    const CoverPlan& plan_;
    int n_ = 0;
    std::vector<Tracked> comps_;
    std::map<int, bool> covers_;  // cyclic step index -> defined over the Hirzebruch base
    bool covered_ = false;
};

}  // namespace

PlanReport verify_plan(const CoverPlan& plan) {
    try {
        return Walker(plan).run();
    } catch (const std::exception& e) {
        PlanReport rep;
        rep.status = PlanReport::Status::Fail;
        rep.failedStep = 0;
        rep.reason = std::string("invalid base: ") + e.what();
        return rep;
    }
}

}  // namespace k3q
