#include "k3q/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace k3q {

namespace {

using Assignment = std::map<int, std::vector<int>>;  // slot weight -> chosen b's

Int ceil_div(const Rat& x) {
    Int q = numer(x) / denom(x);
    if (Rat(q) < x) ++q;
    return q;
}

Int floor_div(const Rat& x) {
    Int q = numer(x) / denom(x);
    if (Rat(q) > x) --q;
    return q;
}

// The largest remaining term m/b is at least rs/r and at most `cap`; pick it first.
void unit_rec(const Rat& target, std::map<int, int>& counts, const Rat& cap, Assignment& cur,
              std::set<Assignment>& out) {
    int r = 0;
    Rat total = 0;
    for (auto [m, c] : counts) {
        r += c;
        total += Rat(m) * c;
    }
    if (r == 0) {
        if (target == 0) {
            Assignment a = cur;
            for (auto& [m, bs] : a) std::sort(bs.begin(), bs.end());
            out.insert(a);
        }
        return;
    }
    Rat rs = total - target;  // sum of the remaining terms m_j / b_j
    if (rs <= 0 || rs * 2 > total) return;
    for (auto& [m, c] : counts) {
        if (c == 0) continue;
        Int lo = std::max<Int>(2, ceil_div(Rat(m) / cap));
        Int hi = floor_div(Rat(m) * r / rs);
        for (Int b = lo; b <= hi; ++b) {
            int bi = static_cast<int>(b);
            Rat t(m, bi);
            --c;
            cur[m].push_back(bi);
            unit_rec(target - (Rat(m) - t), counts, t, cur, out);
            cur[m].pop_back();
            ++c;
        }
    }
}

}  // namespace

std::vector<std::vector<int>> solve_weighted_unit(const Rat& target, const std::vector<int>& slots) {
    if (target < 0) throw std::invalid_argument("target must be non-negative");
    std::map<int, int> counts;
    for (int m : slots) {
        if (m < 1) throw std::invalid_argument("slot weights must be positive");
        ++counts[m];
    }
    std::set<Assignment> found;
    Assignment cur;
    Rat cap = 0;
    for (auto [m, c] : counts) cap = std::max(cap, Rat(m, 2));
    unit_rec(target, counts, cap, cur, found);

    std::vector<std::vector<int>> out;
    for (const auto& a : found) {
        std::map<int, std::size_t> used;
        std::vector<int> row;
        for (int m : slots) row.push_back(a.at(m)[used[m]++]);
        out.push_back(row);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Horizontal {
    int alpha;
    int mult;
};

void partitions(int total, int maxPart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(total, maxPart); p >= 1; --p) {
        cur.push_back(p);
        partitions(total - p, p, cur, out);
        cur.pop_back();
    }
}

void close_fibers(int n, const std::vector<BranchComponent>& hor, const Rat& residual, std::set<BranchClass>& out) {
    auto emit = [&](const std::vector<int>& fibs) {
        std::vector<BranchComponent> comps = hor;
        for (int b : fibs) comps.push_back({b, {n, 0, 1}});
        out.insert(BranchClass(n, std::move(comps)).canonical());
    };
    if (residual == 0) {
        emit({});
        return;
    }
    // k fibers contribute a total in [k/2, k).
    for (int k = 1; Rat(k, 2) <= residual; ++k) {
        if (residual >= k) continue;
        for (const auto& fibs : solve_weighted_unit(residual, std::vector<int>(k, 1))) emit(fibs);
    }
}

void assign_betas(int n, const std::vector<Horizontal>& hor, std::size_t i, const Rat& remF, bool sectionUsed,
                  std::vector<BranchComponent>& cur, std::set<BranchClass>& out) {
    if (i == hor.size()) {
        close_fibers(n, cur, remF, out);
        return;
    }
    const auto [alpha, mult] = hor[i];
    Rat w(mult - 1, mult);
    auto take = [&](int beta, bool section) {
        cur.push_back({mult, {n, alpha, beta}});
        assign_betas(n, hor, i + 1, remF - w * beta, sectionUsed || section, cur, out);
        cur.pop_back();
    };
    if (alpha == 1 && (n == 0 || !sectionUsed)) take(0, n >= 1);
    for (int beta = std::max(n * alpha, 1); w * beta <= remF; ++beta) take(beta, false);
}

}  // namespace

std::vector<BranchClass> enumerate_branch_classes(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    // Each horizontal term w*alpha lies in [alpha/2, alpha), so sum(alpha) is 3 or 4.
    std::vector<std::vector<int>> alphas;
    std::vector<int> tmp;
    partitions(3, 4, tmp, alphas);
    partitions(4, 4, tmp, alphas);

    std::set<BranchClass> out;
    for (const auto& al : alphas) {
        for (const auto& mults : solve_weighted_unit(2, al)) {
            std::vector<Horizontal> hor;
            for (std::size_t j = 0; j < al.size(); ++j) hor.push_back({al[j], mults[j]});
            std::vector<BranchComponent> cur;
            assign_betas(n, hor, 0, Rat(n + 2), false, cur, out);
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace k3q
