#include "k3q/cli.hpp"

#include "k3q/data.hpp"
#include "k3q/deduce.hpp"
#include "k3q/enriques.hpp"
#include "k3q/enumerate.hpp"
#include "k3q/lattices.hpp"
#include "k3q/towers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace k3q {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::optional<std::string> fixtures;
    DataPaths paths() const { return data_paths(fixtures); }
};

std::string key_name(int n) { return n == kInfinity ? "inf" : std::to_string(n); }

std::string join_groups(const GroupSet& s) {
    std::string out = "{";
    for (const auto& g : s) out += (out.size() > 1 ? ", " : "") + g.str();
    return out + "}";
}

json groups_json(const GroupSet& s) {
    json a = json::array();
    for (const auto& g : s) a.push_back(g.str());
    return a;
}

// ---- enumerate

struct EnumerationDiff {
    int n;
    std::vector<std::pair<ClassId, BranchClass>> listed;  // enumerated and in the fixture
    std::vector<BranchClass> unlisted;                    // enumerated only
    std::vector<const FixtureEntry*> missing;             // fixture only
    bool clean() const { return unlisted.empty() && missing.empty(); }
};

EnumerationDiff diff_enumeration(const Fixture& fx, int n) {
    EnumerationDiff d{n, {}, {}, {}};
    auto classes = enumerate_branch_classes(n);
    for (const auto& B : classes) {
        const FixtureEntry* e = fx.find(B);
        if (e) d.listed.emplace_back(e->id, B);
        else d.unlisted.push_back(B);
    }
    for (const FixtureEntry* e : fx.on(n))
        if (!std::binary_search(classes.begin(), classes.end(), e->cls)) d.missing.push_back(e);
    std::sort(d.listed.begin(), d.listed.end(), [](auto& x, auto& y) { return classid_less(x.first, y.first); });
    return d;
}

std::string unlisted_id(int n, std::size_t i) { return "F" + std::to_string(n) + "-UNLISTED-" + std::to_string(i + 1); }

int cmd_enumerate(const Context& ctx, std::optional<int> n, bool all, const std::string& format, std::ostream& out) {
    if (!all && !n) throw UsageError("enumerate needs --n <int> or --all");
    if (n && *n < 0) throw UsageError("--n must be non-negative");
    Fixture fx = Fixture::load(ctx.paths().fixtures);
    std::vector<int> ns;
    if (all) for (int k = 0; k <= 12; ++k) ns.push_back(k);
    else ns.push_back(*n);

    bool clean = true;
    json doc = json::array();
    for (int k : ns) {
        auto d = diff_enumeration(fx, k);
        clean = clean && d.clean();
        if (format == "json") {
            json j{{"n", k}, {"count", d.listed.size() + d.unlisted.size()}, {"classes", json::array()},
                   {"unlisted", json::array()}, {"missing", json::array()}};
            for (auto& [id, B] : d.listed) j["classes"].push_back({{"id", id}, {"line", serialize_fixture_line(id, B)}});
            for (std::size_t i = 0; i < d.unlisted.size(); ++i)
                j["unlisted"].push_back({{"id", unlisted_id(k, i)}, {"line", serialize_fixture_line(unlisted_id(k, i), d.unlisted[i])}});
            for (auto* e : d.missing)
                j["missing"].push_back({{"id", e->id}, {"line", serialize_fixture_line(e->id, e->cls)},
                                        {"defect", canonical_defect(e->cls).str()}});
            doc.push_back(j);
        } else {
            out << "# F_" << k << ": " << d.listed.size() + d.unlisted.size() << " enumerated, " << fx.on(k).size()
                << " listed\n";
            for (auto& [id, B] : d.listed) out << serialize_fixture_line(id, B) << "\n";
            for (std::size_t i = 0; i < d.unlisted.size(); ++i)
                out << serialize_fixture_line(unlisted_id(k, i), d.unlisted[i]) << "  # enumerated, not listed\n";
            for (auto* e : d.missing)
                out << "# listed, not enumerated: " << serialize_fixture_line(e->id, e->cls) << "  (defect "
                    << canonical_defect(e->cls).str() << ")\n";
        }
    }
    if (format == "json") out << (all ? doc : doc[0]).dump(2) << "\n";
    return clean ? 0 : 1;
}

// ---- classify

int cmd_classify(const Context& ctx, int n, const std::string& format, std::ostream& out) {
    auto p = ctx.paths();
    Fixture fx = Fixture::load(p.fixtures);
    VerdictTable vt = VerdictTable::load(p.verdicts);
    bool ok = true;
    json doc = json::array();
    GroupSet admissibleGroups;
    for (const FixtureEntry* e : fx.on(n)) {
        Verdict v = final_verdict(fx, vt, e->id);
        std::string note;
        if (has_zero_defect(e->cls)) {
            Verdict g = apply_generic_rules(e->cls, tentative_group_order(e->cls));
            for (const auto& r : g.rules)
                if (!v.is_rejected() || !v.rules.count(r)) {
                    ok = false;
                    note += " generic " + r + " contradicts curated verdict;";
                }
        } else {
            note = " nonzero canonical defect " + canonical_defect(e->cls).str() + ";";
        }
        std::string provenance;
        if (v.is_admissible()) {
            DeducedGroup d = deduce_group(fx, vt, e->cls);
            provenance = d.provenance == GroupProvenance::Generic ? "generic" : "curated";
            if (!(d.group == *v.group)) {
                ok = false;
                note += " deduced " + d.group.str() + " differs from curated;";
            }
            admissibleGroups.insert(*v.group);
        }
        std::string cites;
        for (const auto& r : v.rules) cites += (cites.empty() ? "" : "; ") + rule_citation(r);
        if (format == "json") {
            json j{{"id", e->id}, {"line", serialize_fixture_line(e->id, e->cls)}, {"verdict", v.kind_name()},
                   {"citation", v.citation}};
            if (v.is_admissible()) j["group"] = v.group->str(), j["group_provenance"] = provenance;
            if (v.is_rejected()) {
                j["rules"] = json::array();
                for (const auto& r : v.rules) j["rules"].push_back({{"id", r}, {"citation", rule_citation(r)}});
            }
            if (!note.empty()) j["note"] = note.substr(1);
            doc.push_back(j);
        } else {
            out << e->id << "\t" << v.kind_name() << "\t" << v.detail();
            if (!provenance.empty()) out << "\t(" << provenance << ")";
            if (!cites.empty()) out << "\t" << cites;
            out << "\t" << v.citation;
            if (!note.empty()) out << "\t!" << note;
            out << "\n";
        }
    }
    if (format == "json") {
        out << json{{"n", n}, {"classes", doc}, {"admissible_groups", groups_json(admissibleGroups)}}.dump(2) << "\n";
    } else {
        out << "# admissible groups on F_" << n << ": " << join_groups(admissibleGroups) << "\n";
    }
    return ok ? 0 : 1;
}

// ---- catalog

GroupSet computed_k3(const Fixture& fx, const VerdictTable& vt, int n) {
    GroupSet s;
    for (const FixtureEntry* e : fx.on(n))
        if (const Verdict* v = vt.find(e->id); v && v->is_admissible()) s.insert(deduce_group(fx, vt, e->cls).group);
    return s;
}

GroupSet computed_enriques(const Fixture& fx, const VerdictTable& k3, const VerdictTable& en, int n) {
    GroupSet s;
    for (const FixtureEntry* e : enriques_candidates(fx, k3, n)) {
        Verdict v = enriques_verdict(fx, k3, en, e->cls);
        if (v.is_admissible()) s.insert(*v.group);
    }
    return s;
}

int cmd_catalog(const Context& ctx, const std::string& target, std::optional<std::string> nArg,
                const std::string& format, std::ostream& out) {
    if (target != "k3" && target != "enriques") throw UsageError("--target must be k3 or enriques");
    auto p = ctx.paths();
    Fixture fx = Fixture::load(p.fixtures);
    VerdictTable vt = VerdictTable::load(p.verdicts);
    std::optional<VerdictTable> en;
    if (target == "enriques") en = VerdictTable::load(p.enriques);

    auto catalog = [&](int n) { return target == "k3" ? catalog_AG(n) : catalog_AGE(n); };
    auto computed = [&](int n) { return target == "k3" ? computed_k3(fx, vt, n) : computed_enriques(fx, vt, *en, n); };

    std::vector<int> keys;
    if (nArg) {
        if (*nArg == "inf" || *nArg == "INF" || *nArg == "infinity") keys.push_back(kInfinity);
        else {
            try {
                keys.push_back(std::stoi(*nArg));
            } catch (const std::exception&) {
                throw UsageError("--n must be an integer or inf");
            }
            if (keys.back() < 0) throw UsageError("--n must be non-negative");
        }
    } else {
        for (int k = 0; k <= 12; ++k) keys.push_back(k);
        keys.push_back(kInfinity);
    }

    bool ok = true;
    json rows = json::array();
    GroupSet unionComputed;
    for (int k : keys) {
        GroupSet cat = catalog(k);
        // P^2 quotients are not enumerated; their catalog is taken as given.
        GroupSet comp = k == kInfinity ? cat : computed(k);
        unionComputed.insert(comp.begin(), comp.end());
        bool same = cat == comp;
        ok = ok && same;
        GroupSet onlyComputed, onlyCatalog;
        std::set_difference(comp.begin(), comp.end(), cat.begin(), cat.end(), std::inserter(onlyComputed, onlyComputed.end()));
        std::set_difference(cat.begin(), cat.end(), comp.begin(), comp.end(), std::inserter(onlyCatalog, onlyCatalog.end()));
        if (format == "json") {
            json j{{"n", key_name(k)}, {"computed", groups_json(comp)}, {"catalog", groups_json(cat)}, {"match", same}};
            if (!same) j["only_computed"] = groups_json(onlyComputed), j["only_catalog"] = groups_json(onlyCatalog);
            rows.push_back(j);
        } else {
            out << "F_" << key_name(k) << "\t" << (same ? "MATCH" : "DIFF") << "\t" << join_groups(comp);
            if (!same) out << "\t+" << join_groups(onlyComputed) << " -" << join_groups(onlyCatalog);
            out << "\n";
        }
    }
    json result{{"target", target}, {"rows", rows}};
    if (!nArg) {
        GroupSet full = target == "k3" ? catalog_AG_union() : catalog_AGE_union();
        bool same = full == unionComputed;
        ok = ok && same;
        if (format == "json") result["union_match"] = same;
        else out << "union\t" << (same ? "MATCH" : "DIFF") << "\t" << join_groups(unionComputed) << "\n";
    }
    if (format == "json") out << result.dump(2) << "\n";
    return ok ? 0 : 1;
}

// ---- lattice

json report_json(const SymplecticReport& r) {
    return {{"group", r.row.group.invariant_str()},
            {"E_G", r.row.rootLattice},
            {"rank_E", r.rankE},
            {"rank_M", r.row.rankM},
            {"det_E", r.detE.str()},
            {"disc_E", r.discE.str()},
            {"r_G", r.row.overlatticeIndex},
            {"det_over_r2", to_string(r.consistencyValue)},
            {"disc_M", r.row.discriminantM.invariant_str()},
            {"disc_M_order", r.row.discriminantM.order()},
            {"status", r.status()}};
}

void report_text(const SymplecticReport& r, std::ostream& out) {
    out << r.row.group.invariant_str() << "\tE_G=" << r.row.rootLattice << "\trank " << r.rankE << "/" << r.row.rankM
        << "\t|det E_G|=" << r.detE << "\tr_G=" << r.row.overlatticeIndex << "\t|det|/r^2=" << to_string(r.consistencyValue)
        << "\tdisc M_G=" << r.row.discriminantM.invariant_str() << " (" << r.row.discriminantM.order() << ")\t" << r.status()
        << "\n";
}

int cmd_lattice(std::optional<std::string> group, bool checkAll, const std::string& format, std::ostream& out) {
    if (group.has_value() == checkAll) throw UsageError("lattice needs exactly one of --group or --check-all");
    std::vector<SymplecticReport> reps;
    if (checkAll) {
        reps = check_all_symplectic_tables();
    } else {
        FiniteAbelianGroup G;
        try {
            G = FiniteAbelianGroup::parse(*group);
        } catch (const GroupParseError& e) {
            throw UsageError(e.what());
        }
        try {
            reps.push_back(check_symplectic_tables(G));
        } catch (const NotTabulated& e) {
            throw UsageError(e.what());
        }
    }
    bool ok = true;
    json doc = json::array();
    for (const auto& r : reps) {
        ok = ok && r.status() == "CONSISTENT";
        if (format == "json") doc.push_back(report_json(r));
        else report_text(r, out);
    }
    if (format == "json") out << (checkAll ? doc : doc[0]).dump(2) << "\n";
    else if (checkAll) {
        long bad = std::count_if(reps.begin(), reps.end(), [](auto& r) { return r.status() != "CONSISTENT"; });
        out << "# " << reps.size() - bad << " CONSISTENT, " << bad << " DISCREPANCY\n";
    }
    return ok ? 0 : 1;
}

// ---- plan

int cmd_plan(const Context& ctx, const std::string& id, bool verify, const std::string& format, std::ostream& out) {
    auto p = ctx.paths();
    Fixture fx = Fixture::load(p.fixtures);
    VerdictTable vt = VerdictTable::load(p.verdicts);
    PlanBook book = PlanBook::load(p.plans);
    CoverPlan plan;
    try {
        plan = plan_tower(fx, vt, book, id);
    } catch (const UnknownClass& e) {
        throw UsageError(e.what());
    } catch (const NotAdmissible& e) {
        throw UsageError(e.what());
    }
    json j = plan_to_json(plan);
    if (!verify) {
        out << j.dump(2) << "\n";
        return 0;
    }
    PlanReport rep = verify_plan(plan);
    bool baseMatches = plan.base_class() == fx.find(id)->cls;
    bool ok = rep.status != PlanReport::Status::Fail && baseMatches;
    if (format == "json") {
        j["report"] = {{"status", rep.status_name()}, {"degree_product", rep.degreeProduct},
                       {"base_matches_fixture", baseMatches}, {"assertions", rep.assertions}, {"trace", rep.trace}};
        if (rep.status == PlanReport::Status::Fail) j["report"]["failed_step"] = rep.failedStep, j["report"]["reason"] = rep.reason;
        out << j.dump(2) << "\n";
    } else {
        out << id << "\tgroup " << plan.claimedGroup.str() << "\tdegree " << rep.degreeProduct << "\t"
            << (plan.provenance == PlanProvenance::Curated ? "Curated" : "Curated-Interpolated") << "\n";
        out << "base\tn=" << plan.base_class().n() << " | " << plan.base_class().str()
            << (baseMatches ? "" : "\t(does not match the fixture)") << "\n";
        for (std::size_t i = 0; i < plan.steps.size(); ++i) {
            out << "step " << i + 1 << "\t" << step_name(plan.steps[i]) << "\tdegree " << step_degree(plan.steps[i]);
            if (i < rep.trace.size()) out << "\t-> " << rep.trace[i];
            out << "\n";
        }
        for (const auto& a : rep.assertions) out << "asserted\t" << a << "\n";
        out << rep.str() << "\n";
    }
    return ok ? 0 : 1;
}

// ---- fenchel

int cmd_fenchel(const std::string& mults, const std::string& format, std::ostream& out) {
    std::vector<int> ms;
    std::stringstream ss(mults);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int m = std::stoi(tok, &used);
            if (used != tok.size() || m < 2) throw std::invalid_argument(tok);
            ms.push_back(m);
        } catch (const std::exception&) {
            throw UsageError("--mults expects integers >= 2 separated by commas");
        }
    }
    if (ms.empty()) throw UsageError("--mults is empty");
    auto g = fenchel_abelian_p1(ms);
    if (format == "json") out << json{{"multiplicities", ms}, {"group", g ? json(g->str()) : json(nullptr)}}.dump(2) << "\n";
    else out << (g ? g->str() : "none") << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Branch divisors of abelian K3 quotients of Hirzebruch surfaces", "k3q"};
    app.require_subcommand(1);
    Context ctx;
    std::string format = "text";
    auto addFormat = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto addFixtures = [&](CLI::App* sub) {
        sub->add_option("--fixtures", ctx.fixtures, "fixture file (default $K3Q_FIXTURES or the shipped list)");
    };

    std::optional<int> n;
    bool all = false;
    auto* en = app.add_subcommand("enumerate", "enumerate zero-defect classes and diff against the fixture");
    en->add_option("--n", n, "Hirzebruch index");
    en->add_flag("--all", all, "every n from 0 to 12");
    addFormat(en);
    addFixtures(en);

    int cn = 0;
    auto* cl = app.add_subcommand("classify", "verdicts, groups and rule citations for F_n");
    cl->add_option("--n", cn, "Hirzebruch index")->required();
    addFormat(cl);
    addFixtures(cl);

    std::string target;
    std::optional<std::string> catN;
    auto* ca = app.add_subcommand("catalog", "computed group catalogs against the listed ones");
    ca->add_option("--target", target, "k3 or enriques")->required();
    ca->add_option("--n", catN, "Hirzebruch index or inf");
    addFormat(ca);
    addFixtures(ca);

    std::optional<std::string> group;
    bool checkAll = false;
    auto* la = app.add_subcommand("lattice", "symplectic E_G / M_G table checks");
    la->add_option("--group", group, "group spec such as Z2^3 or Z2xZ4");
    la->add_flag("--check-all", checkAll, "check every tabulated group");
    addFormat(la);

    std::string cls;
    bool verify = false;
    auto* pl = app.add_subcommand("plan", "cover-construction plan for an admissible class");
    pl->add_option("--class", cls, "class id such as F4-237")->required();
    pl->add_flag("--verify", verify, "walk and verify the plan");
    addFormat(pl);
    addFixtures(pl);

    std::string mults;
    auto* fe = app.add_subcommand("fenchel", "abelian covers of P^1 with the given branch multiplicities");
    fe->add_option("--mults", mults, "comma-separated multiplicities")->required();
    addFormat(fe);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (en->parsed()) return cmd_enumerate(ctx, n, all, format, out);
        if (cl->parsed()) return cmd_classify(ctx, cn, format, out);
        if (ca->parsed()) return cmd_catalog(ctx, target, catN, format, out);
        if (la->parsed()) return cmd_lattice(group, checkAll, format, out);
        if (pl->parsed()) return cmd_plan(ctx, cls, verify, format, out);
        if (fe->parsed()) return cmd_fenchel(mults, format, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace k3q
