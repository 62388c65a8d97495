#include "k3q/rules.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace k3q {

std::string rule_citation(const RuleId& id) {
    if (id.rfind("ADHOC-", 0) == 0) return "ad hoc argument for class (" + id.substr(6) + ")";
    if (id.rfind("E25-", 0) == 0) return "proof of theorem thm:25";
    if (id.size() > 1 && id[0] == 'L') return "lemma thm:" + id.substr(1);
    if (id.size() > 1 && id[0] == 'T') return "theorem thm:" + id.substr(1);
    return {};
}

Verdict Verdict::admissible(FiniteAbelianGroup g, std::string citation) {
    Verdict v;
    v.kind = Kind::Admissible;
    v.group = std::move(g);
    v.citation = std::move(citation);
    return v;
}

Verdict Verdict::rejected(std::set<RuleId> rules, std::string citation) {
    if (rules.empty()) throw std::invalid_argument("a rejection needs at least one rule");
    Verdict v;
    v.kind = Kind::Rejected;
    v.rules = std::move(rules);
    v.citation = std::move(citation);
    return v;
}

Verdict Verdict::undecided(std::string citation) {
    Verdict v;
    v.citation = std::move(citation);
    return v;
}

std::string Verdict::kind_name() const {
    switch (kind) {
        case Kind::Admissible: return "admissible";
        case Kind::Rejected: return "rejected";
        default: return "undecided";
    }
}

std::string Verdict::detail() const {
    if (group) return group->str();
    std::string out;
    for (const auto& r : rules) out += (out.empty() ? "" : ",") + r;
    return out;
}

namespace {

struct Comp {
    int m;
    long a, b;
    bool section() const { return a == 1 && b == 0; }
    bool fiber() const { return a == 0 && b == 1; }
    bool line() const { return section() || fiber(); }
    bool even_class() const { return a % 2 == 0 && b % 2 == 0; }
    bool operator==(const Comp& o) const { return a == o.a && b == o.b; }
};

class Shape {
public:
    explicit Shape(const BranchClass& B) : n(B.n()) {
        for (const auto& c : B.components())
            comps.push_back({c.multiplicity, static_cast<long>(c.cls.a), static_cast<long>(c.cls.b)});
    }
    long dot(const Comp& x, const Comp& y) const { return -n * x.a * y.a + x.a * y.b + x.b * y.a; }
    std::vector<int> idx_if(auto pred) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(comps.size()); ++i)
            if (pred(comps[i])) out.push_back(i);
        return out;
    }

    long n;
    std::vector<Comp> comps;
};

bool all_equal(const std::vector<int>& v) { return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end(); }

// Multiplicities of the other components, each repeated (C.X) times.
std::vector<int> section_meetings(const Shape& s, int sec) {
    std::vector<int> M;
    for (int i = 0; i < static_cast<int>(s.comps.size()); ++i) {
        if (i == sec) continue;
        long t = s.dot(s.comps[sec], s.comps[i]);
        for (long k = 0; k < t; ++k) M.push_back(s.comps[i].m);
    }
    std::sort(M.begin(), M.end());
    return M;
}

void section_rules(const Shape& s, std::set<RuleId>& fired) {
    if (s.n < 1) return;
    auto secs = s.idx_if([](const Comp& c) { return c.section(); });
    if (secs.empty()) return;
    int sec = secs.front();
    auto fibs = s.idx_if([](const Comp& c) { return c.fiber(); });
    auto M = section_meetings(s, sec);
    if (!fibs.empty()) {
        bool disjoint = true;
        for (const auto& c : s.comps)
            if (!c.line() && s.dot(s.comps[sec], c) != 0) disjoint = false;
        std::vector<int> d;
        for (int i : fibs) d.push_back(s.comps[i].m);
        if (disjoint && !(d.size() >= 2 && d.size() <= 3 && all_equal(d))) fired.insert("L11");
        if (!(M.size() >= 2 && M.size() <= 3 && all_equal(M))) fired.insert("L20");
    } else {
        // Without fibers the section is a P^1 whose branch points must solve the abelian Fenchel problem.
        bool ok = M.empty() || fenchel_abelian_p1(M).has_value();
        if (!ok) fired.insert("L20");
    }
}

void pair_rules(const Shape& s, std::set<RuleId>& fired) {
    if (s.comps.size() != 2) return;
    const Comp &x = s.comps[0], &y = s.comps[1];
    long p = s.dot(x, y);
    if (p == 0) return;
    if (x.m % 2 == 0 && y.m % 2 == 0 && p != kSymplecticInvolutionFixedPoints) fired.insert("L22");
    if (x.m == 3 && y.m == 3 && p != kOrderThreeFixedPoints) fired.insert("L27");
    if (x.m == 2 && y.m == 2 && !(x.even_class() && y.even_class())) fired.insert("L29");
}

void triple_rules(const Shape& s, std::set<RuleId>& fired) {
    if (s.comps.size() != 3) return;
    const auto& c = s.comps;
    bool allMeet = s.dot(c[0], c[1]) != 0 && s.dot(c[0], c[2]) != 0 && s.dot(c[1], c[2]) != 0;
    std::vector<int> ms{c[0].m, c[1].m, c[2].m};
    std::vector<int> sorted = ms;
    std::sort(sorted.begin(), sorted.end());
    bool allEven = std::all_of(ms.begin(), ms.end(), [](int m) { return m % 2 == 0; });

    if (sorted == std::vector<int>{2, 3, 6} && allMeet) {
        for (const auto& x : c)
            if (x.m == 3) {
                long sq = s.dot(x, x);
                if (sq >= 1 && sq != 1) fired.insert("L30");
            }
    }
    if (sorted == std::vector<int>{2, 4, 4} && allMeet) {
        for (const auto& x : c)
            if (x.m == 2)
                for (const auto& y : c)
                    // G = Z2+Z4+Z4; each point of B_1 . B_j has |G|/8 preimages fixed by an order-4 element.
                    if (y.m == 4 && s.dot(x, y) * (32 / 8) > kOrderFourIsolatedPoints) fired.insert("L31");
    }
    if (sorted == std::vector<int>{2, 2, 2} && allMeet) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                int k = 3 - i - j;
                long p = s.dot(c[i], c[j]);
                if (p == 4 && !c[k].even_class()) fired.insert("L34");
                if (p > 4) fired.insert("L35");
            }
    }
    if (s.n == 0 && allEven) {
        for (int i = 0; i < 3; ++i) {
            if (!c[i].line()) continue;
            const Comp& u = c[(i + 1) % 3];
            const Comp& v = c[(i + 2) % 3];
            if (s.dot(c[i], u) != 0 && s.dot(c[i], v) != 0 && s.dot(u, v) != 0) fired.insert("L32");
        }
    }
    if (s.n >= 1 && allEven) {
        for (int i = 0; i < 3; ++i) {
            if (!c[i].section()) continue;
            const Comp& u = c[(i + 1) % 3];
            const Comp& v = c[(i + 2) % 3];
            if (u.a >= 1 && v.a >= 1 && s.dot(c[i], u) != 0 && s.dot(c[i], v) != 0 && s.dot(u, v) != 0)
                fired.insert("L41");
        }
    }
}

bool proper_curve(const Comp& c) { return c.a > 0 && c.b > 0; }

void quadric_rules(const Shape& s, std::set<RuleId>& fired) {
    if (s.n != 0) return;
    std::size_t k = s.comps.size();
    if (k != 4 && k != 5) return;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        auto at = [&](int i) -> const Comp& { return s.comps[perm[i]]; };
        if (k == 4) {
            const Comp &L1 = at(0), &L2 = at(1), &Cp = at(2), &M = at(3);
            // two lines of one ruling, a curve, one line of the other ruling
            if (L1 == L2 && L1.line() && M.line() && !(M == L1) && proper_curve(Cp))
                if ((L1.m * L2.m) % 2 == 0 && Cp.m % 2 == 0 && M.m % 2 == 0) fired.insert("L36");
            // a line of each ruling and two curves
            if (L1.line() && M.line() && !(L1 == M) && proper_curve(L2) && proper_curve(Cp))
                if (L1.m % 2 == 0 && M.m % 2 == 0 && (L2.m * Cp.m) % 2 == 0) fired.insert("L37");
        } else {
            const Comp &L1 = at(0), &L2 = at(1), &Cp = at(2), &M1 = at(3), &M2 = at(4);
            if (L1 == L2 && L1.line() && M1 == M2 && M1.line() && !(M1 == L1) && proper_curve(Cp))
                if (L1.m != L2.m || M1.m != M2.m) fired.insert("L38");
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

void fibration_rules(const Shape& s, std::set<RuleId>& fired) {
    if (s.n < 1) return;
    std::vector<Comp> hor, secs, fibs;
    for (const auto& c : s.comps) (c.section() ? secs : c.fiber() ? fibs : hor).push_back(c);
    if (hor.size() == 2 && fibs.size() == 1 && secs.size() <= 1) {
        const Comp &x = hor[0], &y = hor[1];
        if (x.m % 2 == 0 && y.m % 2 == 0 && fibs[0].m % 2 == 0 && s.dot(x, y) != 0) fired.insert("L39");
    }
}

void order_rules(const Shape& s, long order, std::set<RuleId>& fired) {
    const auto& c = s.comps;
    int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) {
        // |G| / b_i^2 (B_i.B_i) must be an even integer.
        Rat v = Rat(order, static_cast<long>(c[i].m) * c[i].m) * s.dot(c[i], c[i]);
        if (!is_integer(v) || numer(v) % 2 != 0) fired.insert("L40");
        // If G is the stabilizer of B_i, B_i is disjoint from the rest.
        if (order == c[i].m)
            for (int j = 0; j < k; ++j)
                if (j != i && s.dot(c[i], c[j]) != 0) fired.insert("L28");
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (std::gcd(c[i].m, c[j].m) != 1 || s.dot(c[i], c[j]) == 0) continue;
            if (order != static_cast<long>(c[i].m) * c[j].m) continue;
            for (int t = 0; t < k; ++t) {
                if (t == i || t == j) continue;
                for (int u : {i, j})
                    if (s.dot(c[t], c[u]) != 0 && std::gcd(c[t].m, c[u].m) != 1) fired.insert("L33");
            }
        }
}

}  // namespace

Verdict apply_generic_rules(const BranchClass& B, std::optional<long> order) {
    Shape s(B);
    std::set<RuleId> fired;
    if (s.n == 5 || s.n == 7 || s.n == 9) fired.insert("T44");
    section_rules(s, fired);
    pair_rules(s, fired);
    triple_rules(s, fired);
    quadric_rules(s, fired);
    fibration_rules(s, fired);
    if (order) order_rules(s, *order, fired);
    if (fired.empty()) return Verdict::undecided();
    std::string cites;
    for (const auto& r : fired) cites += (cites.empty() ? "" : "; ") + rule_citation(r);
    return Verdict::rejected(std::move(fired), cites);
}

std::optional<long> tentative_group_order(const BranchClass& B) {
    const auto& c = B.components();
    if (c.size() == 1) return c[0].multiplicity;
    if (c.size() == 2 && intersection_number(c[0].cls, c[1].cls) != 0)
        return static_cast<long>(c[0].multiplicity) * c[1].multiplicity;
    return std::nullopt;
}

namespace {

void exceptional_rec(const std::vector<Rat>& w, const std::vector<int>& group_of, std::size_t j, const Rat& rem,
                     std::vector<int>& a, std::vector<bool>& groupUsed, int beta,
                     std::vector<ExceptionalSolution>& out) {
    if (j == w.size()) {
        if (rem == 0) out.push_back({a, beta});
        return;
    }
    int g = group_of[j];
    exceptional_rec(w, group_of, j + 1, rem, a, groupUsed, beta, out);
    if (g >= 0 && groupUsed[g]) return;
    if (g >= 0) groupUsed[g] = true;
    for (int k = 1; w[j] * k <= rem; ++k) {
        a[j] = k;
        exceptional_rec(w, group_of, j + 1, rem - w[j] * k, a, groupUsed, beta, out);
    }
    a[j] = 0;
    if (g >= 0) groupUsed[g] = false;
}

}  // namespace

std::vector<ExceptionalSolution> solve_exceptional_equation(const std::vector<Rat>& weights, int level,
                                                            const std::set<int>& allowedOrders,
                                                            const std::vector<std::vector<int>>& exclusivityGroups) {
    for (const auto& w : weights)
        if (w < Rat(1, 2) || w >= 1) throw std::invalid_argument("weights must lie in [1/2, 1)");
    std::vector<int> group_of(weights.size(), -1);
    for (std::size_t g = 0; g < exclusivityGroups.size(); ++g)
        for (int i : exclusivityGroups[g]) {
            if (i < 0 || i >= static_cast<int>(weights.size())) throw std::out_of_range("exclusivity index");
            group_of[i] = static_cast<int>(g);
        }
    std::set<int> betas = allowedOrders;
    betas.insert(1);
    std::vector<ExceptionalSolution> out;
    for (int beta : betas) {
        if (beta < 1) throw std::invalid_argument("orders must be positive");
        Rat target = Rat(level) + Rat(beta - 1, beta);
        std::vector<int> a(weights.size(), 0);
        std::vector<bool> used(exclusivityGroups.size(), false);
        exceptional_rec(weights, group_of, 0, target, a, used, beta, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

VerdictTable VerdictTable::parse(const std::string& text) {
    VerdictTable t;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto f = split(line, '\t');
        if (f.size() != 4) throw ParseError("expected 4 tab-separated columns", line_no, 1);
        Verdict v;
        if (f[1] == "admissible") {
            v = Verdict::admissible(FiniteAbelianGroup::parse(f[2]), f[3]);
        } else if (f[1] == "rejected") {
            auto rs = split(f[2], ',');
            v = Verdict::rejected({rs.begin(), rs.end()}, f[3]);
        } else if (f[1] == "undecided") {
            v = Verdict::undecided(f[3]);
        } else {
            throw ParseError("unknown verdict '" + f[1] + "'", line_no, static_cast<int>(f[0].size()) + 2);
        }
        if (!t.rows_.emplace(f[0], std::move(v)).second) throw ParseError("duplicate row " + f[0], line_no, 1);
    }
    return t;
}

VerdictTable VerdictTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open verdict table " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

const Verdict* VerdictTable::find(const ClassId& id) const {
    auto it = rows_.find(id);
    return it == rows_.end() ? nullptr : &it->second;
}

Verdict final_verdict(const Fixture& fixture, const VerdictTable& table, const ClassId& id) {
    if (!fixture.find(id)) throw UnknownClass("unknown class " + id);
    const Verdict* v = table.find(id);
    if (!v) throw UnknownClass("no curated verdict for " + id);
    return *v;
}

Verdict final_verdict(const Fixture& fixture, const VerdictTable& table, const BranchClass& B) {
    const FixtureEntry* e = fixture.find(B);
    if (!e) throw UnknownClass("class not in fixture: n=" + std::to_string(B.n()) + " | " + B.str());
    return final_verdict(fixture, table, e->id);
}

}  // namespace k3q
