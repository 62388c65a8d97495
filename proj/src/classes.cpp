#include "k3q/classes.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace k3q {

ParseError::ParseError(const std::string& what, int line_, int column_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what),
      line(line_),
      column(column_) {}

std::string BranchComponent::str() const { return std::to_string(multiplicity) + "*" + cls.str(); }

BranchClass::BranchClass(int n, std::vector<BranchComponent> components) : n_(n), comps_(std::move(components)) {
    if (n < 0) throw InvalidComponent("negative ambient index");
    int sections = 0;
    for (const auto& c : comps_) {
        if (c.cls.n != n) throw AmbientMismatch("component " + c.str() + " lives on F_" + std::to_string(c.cls.n));
        if (c.multiplicity < 2) throw InvalidComponent("multiplicity < 2 in " + c.str());
        if (!is_irreducible_class(c.cls))
            throw InvalidComponent("class " + c.cls.str() + " is not irreducible on F_" + std::to_string(n));
        if (n >= 1 && c.cls.is_section()) ++sections;
    }
    if (sections > 1) throw InvalidComponent("negative section appears more than once");
    std::sort(comps_.begin(), comps_.end(), [](const BranchComponent& x, const BranchComponent& y) {
        return std::tie(x.cls.a, x.cls.b, x.multiplicity) < std::tie(y.cls.a, y.cls.b, y.multiplicity);
    });
}

BranchClass BranchClass::swapped() const {
    if (n_ != 0) return *this;
    std::vector<BranchComponent> s;
    s.reserve(comps_.size());
    for (const auto& c : comps_) s.push_back({c.multiplicity, {0, c.cls.b, c.cls.a}});
    return BranchClass(0, std::move(s));
}

BranchClass::Key BranchClass::key() const {
    Key k;
    k.reserve(comps_.size());
    for (const auto& c : comps_) k.emplace_back(c.cls.a, c.cls.b, c.multiplicity);
    return k;
}

BranchClass BranchClass::canonical() const {
    if (n_ != 0) return *this;
    BranchClass s = swapped();
    return s.key() < key() ? s : *this;
}

std::string BranchClass::str() const {
    std::string out;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) out += " + ";
        out += comps_[i].str();
    }
    return out;
}

std::vector<int> BranchClass::multiplicities() const {
    std::vector<int> m;
    for (const auto& c : comps_) m.push_back(c.multiplicity);
    std::sort(m.begin(), m.end());
    return m;
}

bool operator==(const BranchClass& x, const BranchClass& y) {
    return x.n_ == y.n_ && x.canonical().key() == y.canonical().key();
}

bool operator<(const BranchClass& x, const BranchClass& y) {
    if (x.n_ != y.n_) return x.n_ < y.n_;
    return x.canonical().key() < y.canonical().key();
}

RationalDivisorClass canonical_defect(const BranchClass& B) {
    RationalDivisorClass d = to_rational(canonical_class(B.n()));
    for (const auto& c : B.components()) d = d + scale(c.weight(), c.cls);
    return d;
}

bool has_zero_defect(const BranchClass& B) { return canonical_defect(B).is_zero(); }

namespace {

class Cursor {
public:
    Cursor(std::string_view s, int line, int column0) : s_(s), line_(line), col0_(column0) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected integer");
        }
        return Int(std::string(s_.substr(start, pos_ - start)));
    }
    int column() const { return col0_ + static_cast<int>(pos_); }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column()); }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
    int col0_;
};

int small(const Int& x, const Cursor& cur, const char* what) {
    if (x > 1000000 || x < -1000000) cur.fail(std::string(what) + " out of range");
    return static_cast<int>(x);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

BranchClass parse_components(int n, std::string_view text, int line, int column0) {
    Cursor cur(text, line, column0);
    std::vector<BranchComponent> comps;
    if (cur.done()) cur.fail("empty component list");
    while (true) {
        int m = small(cur.integer(), cur, "multiplicity");
        cur.expect('*');
        cur.expect('(');
        Int a = cur.integer();
        cur.expect(',');
        Int b = cur.integer();
        cur.expect(')');
        comps.push_back({m, {n, a, b}});
        if (cur.done()) break;
        cur.expect('+');
    }
    return BranchClass(n, std::move(comps));
}

std::pair<ClassId, BranchClass> parse_fixture_line(std::string_view line, int line_no) {
    auto p1 = line.find('|');
    if (p1 == std::string_view::npos) throw ParseError("missing '|' after id", line_no, static_cast<int>(line.size()) + 1);
    auto p2 = line.find('|', p1 + 1);
    if (p2 == std::string_view::npos) throw ParseError("missing '|' after ambient index", line_no, static_cast<int>(line.size()) + 1);
    std::string_view id = trim(line.substr(0, p1));
    if (id.empty() || id.find_first_of(" \t") != std::string_view::npos) throw ParseError("bad class id", line_no, 1);

    std::string_view nfield = line.substr(p1 + 1, p2 - p1 - 1);
    Cursor cur(nfield, line_no, static_cast<int>(p1) + 2);
    cur.expect('n');
    cur.expect('=');
    Int nn = cur.integer();
    if (!cur.done()) cur.fail("trailing characters after ambient index");
    if (nn < 0) cur.fail("ambient index must be non-negative");
    int n = small(nn, cur, "ambient index");

    BranchClass B = parse_components(n, line.substr(p2 + 1), line_no, static_cast<int>(p2) + 2);
    return {ClassId(id), B.canonical()};
}

std::string serialize_fixture_line(const ClassId& id, const BranchClass& B) {
    return id + " | n=" + std::to_string(B.n()) + " | " + B.str();
}

Fixture Fixture::parse(std::string_view text) {
    Fixture f;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        if (trim(line).empty()) continue;
        auto [id, B] = parse_fixture_line(line, line_no);
        if (f.by_id_.count(id)) throw ParseError("duplicate class id " + id, line_no, 1);
        f.by_id_[id] = f.entries_.size();
        f.by_class_.emplace(B, f.entries_.size());
        f.entries_.push_back({id, std::move(B), line_no});
    }
    return f;
}

Fixture Fixture::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::vector<const FixtureEntry*> Fixture::on(int n) const {
    std::vector<const FixtureEntry*> out;
    for (const auto& e : entries_)
        if (e.cls.n() == n) out.push_back(&e);
    std::sort(out.begin(), out.end(), [](auto* x, auto* y) { return classid_less(x->id, y->id); });
    return out;
}

const FixtureEntry* Fixture::find(const ClassId& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &entries_[it->second];
}

const FixtureEntry* Fixture::find(const BranchClass& B) const {
    auto it = by_class_.find(B);
    return it == by_class_.end() ? nullptr : &entries_[it->second];
}

std::vector<std::vector<ClassId>> Fixture::duplicate_report() const {
    std::vector<std::vector<ClassId>> out;
    for (auto it = by_class_.begin(); it != by_class_.end();) {
        auto range = by_class_.equal_range(it->first);
        std::vector<ClassId> ids;
        for (auto j = range.first; j != range.second; ++j) ids.push_back(entries_[j->second].id);
        if (ids.size() > 1) {
            std::sort(ids.begin(), ids.end(), classid_less);
            out.push_back(ids);
        }
        it = range.second;
    }
    return out;
}

bool classid_less(const ClassId& x, const ClassId& y) {
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        bool dx = std::isdigit(static_cast<unsigned char>(x[i]));
        bool dy = std::isdigit(static_cast<unsigned char>(y[j]));
        if (dx && dy) {
            std::size_t ei = i, ej = j;
            while (ei < x.size() && std::isdigit(static_cast<unsigned char>(x[ei]))) ++ei;
            while (ej < y.size() && std::isdigit(static_cast<unsigned char>(y[ej]))) ++ej;
            unsigned long long vx = std::stoull(x.substr(i, ei - i)), vy = std::stoull(y.substr(j, ej - j));
            if (vx != vy) return vx < vy;
            i = ei;
            j = ej;
        } else {
            if (x[i] != y[j]) return x[i] < y[j];
            ++i;
            ++j;
        }
    }
    return x.size() - i < y.size() - j;
}

}  // namespace k3q
