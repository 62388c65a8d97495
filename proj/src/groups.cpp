#include "k3q/groups.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace k3q {

namespace {

// prime -> exponents of the p-primary cyclic parts
std::map<long, std::vector<int>> primary_parts(const std::vector<long>& orders) {
    std::map<long, std::vector<int>> parts;
    for (long m : orders) {
        if (m < 1) throw GroupParseError("cyclic order must be positive");
        for (long p = 2; p * p <= m; ++p) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e) parts[p].push_back(e);
        }
        if (m > 1) parts[m].push_back(1);
    }
    for (auto& [p, es] : parts) std::sort(es.rbegin(), es.rend());
    return parts;
}

long ipow(long p, int e) {
    long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(const std::vector<long>& cyclicOrders) {
    auto parts = primary_parts(cyclicOrders);
    std::size_t k = 0;
    for (const auto& [p, es] : parts) k = std::max(k, es.size());
    // The i-th largest invariant factor collects the i-th largest power of each prime.
    std::vector<long> inv(k, 1);
    for (const auto& [p, es] : parts)
        for (std::size_t i = 0; i < es.size(); ++i) inv[i] *= ipow(p, es[i]);
    std::reverse(inv.begin(), inv.end());
    factors_ = inv;
}

std::vector<long> FiniteAbelianGroup::primary_factors() const {
    std::vector<long> out;
    for (const auto& [p, es] : primary_parts(factors_))
        for (int e : es) out.push_back(ipow(p, e));
    std::sort(out.begin(), out.end());
    return out;
}

long FiniteAbelianGroup::order() const {
    long o = 1;
    for (long d : factors_) o *= d;
    return o;
}

std::string FiniteAbelianGroup::str() const {
    auto pf = primary_factors();
    if (pf.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pf.size();) {
        std::size_t j = i;
        while (j < pf.size() && pf[j] == pf[i]) ++j;
        if (!out.empty()) out += "x";
        out += "Z" + std::to_string(pf[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string FiniteAbelianGroup::invariant_str() const {
    if (factors_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < factors_.size();) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        if (!out.empty()) out += "x";
        out += "Z" + std::to_string(factors_[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

FiniteAbelianGroup FiniteAbelianGroup::operator+(const FiniteAbelianGroup& o) const {
    std::vector<long> all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    return FiniteAbelianGroup(all);
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "0" || s == "1" || s == "z1") return {};
    if (s.empty()) throw GroupParseError("empty group spec");
    std::vector<long> orders;
    std::size_t i = 0;
    auto number = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i || i - start > 9) throw GroupParseError("bad group spec: " + std::string(spec));
        return std::stol(s.substr(start, i - start));
    };
    while (true) {
        if (i >= s.size() || s[i] != 'z') throw GroupParseError("bad group spec: " + std::string(spec));
        ++i;
        if (i < s.size() && s[i] == '/') ++i;
        long m = number();
        if (m < 1) throw GroupParseError("bad group spec: " + std::string(spec));
        long e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            e = number();
            if (e < 1 || e > 64) throw GroupParseError("bad exponent in: " + std::string(spec));
        }
        for (long k = 0; k < e; ++k) orders.push_back(m);
        if (i == s.size()) break;
        if (s[i] != 'x' && s[i] != '+') throw GroupParseError("bad group spec: " + std::string(spec));
        ++i;
    }
    return FiniteAbelianGroup(orders);
}

namespace {

GroupSet groups(std::initializer_list<const char*> specs) {
    GroupSet out;
    for (const char* s : specs) out.insert(FiniteAbelianGroup::parse(s));
    return out;
}

}  // namespace

GroupSet catalog_AG(int n) {
    switch (n) {
        case kInfinity:
            return groups({"Z2", "Z2^2", "Z2^3", "Z2^4", "Z2^5", "Z4", "Z4^3", "Z2xZ3", "Z2xZ3^2", "Z2^3xZ3^2",
                           "Z2^2xZ4"});
        case 0:
            return groups({"Z2", "Z2^2", "Z2^3", "Z2^4", "Z2^5", "Z3", "Z3^2", "Z3^3", "Z2xZ4", "Z2xZ4^2",
                           "Z2^2xZ4", "Z2^3xZ4"});
        case 1:
            return groups({"Z2", "Z2^2", "Z2^3", "Z2^4", "Z2^5", "Z4^2", "Z2xZ3", "Z2xZ3^2", "Z2xZ3^3", "Z2xZ4",
                           "Z2^2xZ4", "Z2^3xZ4", "Z2xZ3^2xZ4", "Z2xZ4xZ8"});
        case 2:
            return groups({"Z2", "Z2^2", "Z2^3", "Z2^4", "Z3", "Z3^2", "Z3^3", "Z2^2xZ3^2", "Z2xZ4", "Z2xZ4^2",
                           "Z2^2xZ4", "Z2^3xZ4"});
        case 3:
            return groups({"Z2xZ3", "Z2xZ3^2", "Z2^3xZ3", "Z2xZ3xZ4"});
        case 4:
            return groups({"Z2", "Z2^2", "Z2^3", "Z4", "Z2xZ3^2", "Z2xZ4", "Z2^2xZ4"});
        case 6:
            return groups({"Z3", "Z3^2", "Z2^2xZ3"});
        case 8:
            return groups({"Z2xZ4"});
        case 12:
            return groups({"Z2xZ3"});
        default:
            return {};
    }
}

GroupSet catalog_AG_union() {
    GroupSet out;
    for (int a = 1; a <= 5; ++a) out.insert(FiniteAbelianGroup(std::vector<long>(a, 2)));
    for (int b = 1; b <= 3; ++b) out.insert(FiniteAbelianGroup(std::vector<long>(b, 3)));
    for (int c = 1; c <= 3; ++c) out.insert(FiniteAbelianGroup(std::vector<long>(c, 4)));
    for (auto [d, e] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}, {3, 2}})
        out.insert(FiniteAbelianGroup(std::vector<long>(d, 2)) + FiniteAbelianGroup(std::vector<long>(e, 3)));
    for (auto [f, g] : {std::pair{1, 1}, {1, 2}, {2, 1}, {3, 1}})
        out.insert(FiniteAbelianGroup(std::vector<long>(f, 2)) + FiniteAbelianGroup(std::vector<long>(g, 4)));
    for (int h = 1; h <= 2; ++h) {
        std::vector<long> v{2, 4};
        v.insert(v.end(), h, 3);
        out.insert(FiniteAbelianGroup(v));
    }
    out.insert(FiniteAbelianGroup({2, 4, 8}));
    return out;
}

std::vector<int> catalog_keys() { return {0, 1, 2, 3, 4, 6, 8, 12, kInfinity}; }

std::optional<FiniteAbelianGroup> fenchel_abelian_p1(std::vector<int> m) {
    std::sort(m.begin(), m.end());
    if (m.size() == 2 && m[0] == m[1] && m[0] >= 2) return FiniteAbelianGroup::cyclic(m[0]);
    if (m == std::vector<int>{2, 2, 2}) return FiniteAbelianGroup({2, 2});
    return std::nullopt;
}

}  // namespace k3q
