#pragma once

#include "k3q/picard.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace k3q {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column);
    int line;
    int column;
};

struct InvalidComponent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BranchComponent {
    int multiplicity = 2;
    DivisorClass cls;

    friend bool operator==(const BranchComponent&, const BranchComponent&) = default;
    Rat weight() const { return Rat(multiplicity - 1, multiplicity); }
    std::string str() const;  // "m*(a,b)"
};

using ClassId = std::string;

class BranchClass {
public:
    BranchClass() = default;
    // Validates every component and sorts; keeps the given F_0 orientation.
    BranchClass(int n, std::vector<BranchComponent> components);

    int n() const { return n_; }
    const std::vector<BranchComponent>& components() const { return comps_; }
    std::size_t size() const { return comps_.size(); }

    // Sorted by (a, b, multiplicity); on F_0 the lexicographically smaller of the two orientations.
    BranchClass canonical() const;
    BranchClass swapped() const;  // exchanges the two rulings of F_0

    std::string str() const;  // "m*(a,b) + ..."
    std::vector<int> multiplicities() const;

    friend bool operator==(const BranchClass& x, const BranchClass& y);
    friend bool operator<(const BranchClass& x, const BranchClass& y);

private:
    using Key = std::vector<std::tuple<Int, Int, int>>;
    Key key() const;

    int n_ = 0;
    std::vector<BranchComponent> comps_;
};

RationalDivisorClass canonical_defect(const BranchClass& B);
bool has_zero_defect(const BranchClass& B);

// Components part of the fixture grammar; column offsets are reported relative to `column0`.
BranchClass parse_components(int n, std::string_view text, int line = 0, int column0 = 1);

std::pair<ClassId, BranchClass> parse_fixture_line(std::string_view line, int line_no = 0);
std::string serialize_fixture_line(const ClassId& id, const BranchClass& B);

struct FixtureEntry {
    ClassId id;
    BranchClass cls;
    int line = 0;
};

class Fixture {
public:
    static Fixture load(const std::string& path);
    static Fixture parse(std::string_view text);

    const std::vector<FixtureEntry>& entries() const { return entries_; }
    std::vector<const FixtureEntry*> on(int n) const;
    const FixtureEntry* find(const ClassId& id) const;
    const FixtureEntry* find(const BranchClass& B) const;
    // Groups of ids whose classes coincide canonically.
    std::vector<std::vector<ClassId>> duplicate_report() const;

private:
    std::vector<FixtureEntry> entries_;
    std::map<ClassId, std::size_t> by_id_;
    std::multimap<BranchClass, std::size_t> by_class_;
};

// Numeric-aware ordering: F0-2 < F0-14 < F1-3.
bool classid_less(const ClassId& x, const ClassId& y);

}  // namespace k3q
