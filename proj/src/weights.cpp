#include "tilecert/weights.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace tilecert {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <typename S> struct ScalarOps;

template <> struct ScalarOps<double> {
    static bool pos(double x) { return x > 1e-9; }
    static bool neg(double x) { return x < -1e-9; }
};

template <> struct ScalarOps<Rational> {
    static bool pos(const Rational& x) { return x > 0; }
    static bool neg(const Rational& x) { return x < 0; }
};

// Dense two-phase simplex for: min sum(x) s.t. A x >= b, x >= 0.
// Bland's rule throughout, so it terminates deterministically.
template <typename S> class Simplex {
public:
    // a: m rows of n entries; b: m entries (0 or 1 here).
    bool solve(const std::vector<std::vector<int>>& a, const std::vector<int>& b,
               std::vector<S>& solution) {
        m_ = a.size();
        n_ = m_ ? a[0].size() : 0;
        // columns: n structural + m surplus + m artificial + rhs
        cols_ = n_ + 2 * m_ + 1;
        t_.assign(m_ + 1, std::vector<S>(cols_, S(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            // A x - s + art = b, with rows flipped so rhs >= 0
            int sign = b[i] >= 0 ? 1 : -1;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = S(sign * a[i][j]);
            t_[i][n_ + i] = S(-sign);
            t_[i][n_ + m_ + i] = S(1);
            t_[i][cols_ - 1] = S(sign * b[i]);
            basis_[i] = n_ + m_ + i;
        }
        // phase 1: min sum of artificials (reduced costs c - sum of rows,
        // the artificial basis has cost 1 per row)
        for (std::size_t i = 0; i < m_; ++i) t_[m_][n_ + m_ + i] = S(1);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t_[m_][j] -= t_[i][j];
        run(n_ + 2 * m_);
        if (ScalarOps<S>::neg(t_[m_][cols_ - 1])) return false; // residual > 0
        // pivot leftover artificials out of the basis where possible
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_ + m_) continue;
            for (std::size_t j = 0; j < n_ + m_; ++j) {
                if (ScalarOps<S>::pos(t_[i][j]) || ScalarOps<S>::neg(t_[i][j])) {
                    pivot(i, j);
                    break;
                }
            }
        }
        // phase 2: min sum(x) over structural columns
        for (std::size_t j = 0; j < cols_; ++j) t_[m_][j] = S(0);
        for (std::size_t j = 0; j < n_; ++j) t_[m_][j] = S(1);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) {
                for (std::size_t j = 0; j < cols_; ++j) t_[m_][j] -= t_[i][j];
            }
        }
        run(n_ + m_); // artificials excluded from pricing
        solution.assign(n_, S(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) solution[basis_[i]] = t_[i][cols_ - 1];
        return true;
    }

private:
    void run(std::size_t pricing_cols) {
        for (;;) {
            std::size_t enter = pricing_cols;
            for (std::size_t j = 0; j < pricing_cols; ++j) {
                if (ScalarOps<S>::neg(t_[m_][j])) { enter = j; break; } // Bland
            }
            if (enter == pricing_cols) return;
            std::size_t leave = m_;
            for (std::size_t i = 0; i < m_; ++i) {
                if (!ScalarOps<S>::pos(t_[i][enter])) continue;
                if (leave == m_) { leave = i; continue; }
                // min ratio; ties by smallest basis index (Bland)
                S lhs = t_[i][cols_ - 1] * t_[leave][enter];
                S rhs = t_[leave][cols_ - 1] * t_[i][enter];
                if (lhs < rhs || (!(rhs < lhs) && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave == m_) return; // unbounded; with min-sum objective only at optimum 0
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        S inv = t_[row][col];
        for (std::size_t j = 0; j < cols_; ++j) t_[row][j] /= inv;
        t_[row][col] = S(1);
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == row) continue;
            S f = t_[i][col];
            if (!(ScalarOps<S>::pos(f) || ScalarOps<S>::neg(f))) continue;
            for (std::size_t j = 0; j < cols_; ++j) t_[i][j] -= f * t_[row][j];
            t_[i][col] = S(0);
        }
        basis_[row] = col;
    }

    std::size_t m_ = 0, n_ = 0, cols_ = 0;
    std::vector<std::vector<S>> t_;
    std::vector<std::size_t> basis_;
};

struct Groups {
    std::vector<Letter> letters;                  // compact index -> letter
    std::vector<std::vector<int>> diff;           // per group, dense over letters
    std::vector<std::vector<std::size_t>> member; // rule indices per group
};

Groups build_groups(const std::vector<Rule>& rules) {
    Groups g;
    std::vector<std::map<Letter, int>> sparse(rules.size());
    std::set<Letter> used;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (Letter l : rules[i].lhs) sparse[i][l] += 1;
        for (Letter l : rules[i].rhs) sparse[i][l] -= 1;
        for (auto it = sparse[i].begin(); it != sparse[i].end();) {
            if (it->second == 0) it = sparse[i].erase(it);
            else ++it;
        }
        for (const auto& [l, c] : sparse[i]) used.insert(l);
    }
    // canonical column order, so the search does not depend on interning
    // order
    g.letters.assign(used.begin(), used.end());
    std::sort(g.letters.begin(), g.letters.end(), symbols::less);
    std::map<Letter, std::size_t> index;
    for (std::size_t j = 0; j < g.letters.size(); ++j) index[g.letters[j]] = j;
    std::map<std::vector<int>, std::size_t> seen;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (sparse[i].empty()) continue; // zero difference: trivially weak
        std::vector<int> d(g.letters.size(), 0);
        for (const auto& [l, c] : sparse[i]) d[index[l]] = c;
        auto [it, fresh] = seen.emplace(std::move(d), g.diff.size());
        if (fresh) {
            g.diff.push_back(it->first);
            g.member.emplace_back();
        }
        g.member[it->second].push_back(i);
    }
    return g;
}

// Turns a rational LP vertex into integer weights: clear denominators,
// reduce by the gcd, check the cap.
bool integerize_exact(const std::vector<Rational>& x, long long cap, std::vector<long long>& w) {
    BigInt denom = 1;
    for (const Rational& v : x) denom = lcm(denom, BigInt(boost::multiprecision::denominator(v)));
    std::vector<BigInt> big(x.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        big[i] = boost::multiprecision::numerator(x[i]) * (denom / boost::multiprecision::denominator(x[i]));
        g = gcd(g, big[i]);
    }
    if (g == 0) g = 1;
    w.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        BigInt v = big[i] / g;
        if (v > cap) return false;
        w[i] = static_cast<long long>(v);
    }
    return true;
}

// Rational reconstruction of a double by continued fractions.
Rational approx_rational(double v, long long max_denom) {
    if (v <= 0) return Rational(0);
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(x);
        if (fl > 1e15) break;
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_denom) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = x - fl;
        if (frac < 1e-12) break;
        x = 1.0 / frac;
    }
    if (q1 == 0) return Rational(0);
    return Rational(p1, q1);
}

bool check_integer_witness(const Groups& g, const std::set<std::size_t>& strict,
                           const std::vector<long long>& w) {
    for (std::size_t gi = 0; gi < g.diff.size(); ++gi) {
        long long v = 0;
        for (std::size_t j = 0; j < w.size(); ++j) v += static_cast<long long>(g.diff[gi][j]) * w[j];
        if (v < 0) return false;
        if (strict.count(gi) && v <= 0) return false;
    }
    return true;
}

// Feasibility of: every group weakly decreases, groups in `strict`
// strictly. On success fills integer weights that witness it exactly.
bool feasible_with_witness(const Groups& g, const std::set<std::size_t>& strict, long long cap,
                           std::vector<long long>& w) {
    std::vector<std::vector<int>> a;
    std::vector<int> b;
    for (std::size_t gi = 0; gi < g.diff.size(); ++gi) {
        a.push_back(g.diff[gi]);
        b.push_back(strict.count(gi) ? 1 : 0);
    }
    Simplex<double> lp;
    std::vector<double> x;
    if (!lp.solve(a, b, x)) return false;
    // scale-and-round attempts, then exact reconstruction, then exact LP
    for (long long denom : {1LL, 2LL, 3LL, 4LL, 6LL, 8LL, 12LL, 16LL, 24LL, 48LL, 96LL}) {
        std::vector<long long> cand(x.size());
        long long mx = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            cand[i] = std::llround(std::max(0.0, x[i]) * denom);
            mx = std::max(mx, cand[i]);
        }
        if (mx == 0 || mx > cap) continue;
        long long gg = 0;
        for (long long v : cand) gg = std::gcd(gg, v);
        if (gg > 1)
            for (long long& v : cand) v /= gg;
        if (check_integer_witness(g, strict, cand)) {
            w = std::move(cand);
            return true;
        }
    }
    {
        std::vector<Rational> xr(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) xr[i] = approx_rational(x[i], 1 << 12);
        std::vector<long long> cand;
        if (integerize_exact(xr, cap, cand) && check_integer_witness(g, strict, cand)) {
            w = std::move(cand);
            return true;
        }
    }
    Simplex<Rational> exact;
    std::vector<Rational> xr;
    if (!exact.solve(a, b, xr)) return false;
    std::vector<long long> cand;
    if (integerize_exact(xr, cap, cand) && check_integer_witness(g, strict, cand)) {
        w = std::move(cand);
        return true;
    }
    return false;
}

} // namespace

WeightSearchResult find_weights(const std::vector<Rule>& rules, const WeightSearchOptions& opts) {
    WeightSearchResult res;
    Groups g = build_groups(rules);
    if (g.diff.empty()) return res;

    std::set<std::size_t> chosen;
    std::vector<long long> witness;

    // common case first: everything strictly decreasing at once
    std::set<std::size_t> all;
    for (std::size_t gi = 0; gi < g.diff.size(); ++gi) all.insert(gi);
    std::vector<long long> w;
    if (feasible_with_witness(g, all, opts.cap, w)) {
        chosen = all;
        witness = std::move(w);
    } else {
        // greedy in canonical rule order (groups ordered by first member)
        std::vector<std::size_t> order(g.diff.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return g.member[a].front() < g.member[b].front();
        });
        for (std::size_t gi : order) {
            opts.limits.check();
            std::set<std::size_t> trial = chosen;
            trial.insert(gi);
            std::vector<long long> tw;
            if (feasible_with_witness(g, trial, opts.cap, tw)) {
                chosen = std::move(trial);
                witness = std::move(tw);
            }
        }
    }
    if (chosen.empty() || witness.empty()) return res;

    for (std::size_t j = 0; j < g.letters.size(); ++j)
        if (witness[j] != 0) res.weights.values[g.letters[j]] = witness[j];
    // removed = every rule whose group strictly decreases under the map
    for (std::size_t gi = 0; gi < g.diff.size(); ++gi) {
        long long v = 0;
        for (std::size_t j = 0; j < witness.size(); ++j)
            v += static_cast<long long>(g.diff[gi][j]) * witness[j];
        if (v > 0)
            res.removed.insert(res.removed.end(), g.member[gi].begin(), g.member[gi].end());
    }
    std::sort(res.removed.begin(), res.removed.end());
    if (res.removed.empty()) res.weights.values.clear();
    return res;
}

bool validate_weights(const RelProblem& p, const std::vector<Rule>& removed, const WeightMap& w) {
    for (const auto* rs : {&p.strict(), &p.weak()}) {
        for (const Rule& r : *rs)
            if (w.of_word(r.lhs) < w.of_word(r.rhs)) return false;
    }
    auto occurs = [&](const Rule& r) {
        auto in = [&](const std::vector<Rule>& rs) {
            return std::find(rs.begin(), rs.end(), r) != rs.end();
        };
        return in(p.strict()) || in(p.weak());
    };
    for (const Rule& r : removed) {
        if (!occurs(r)) return false;
        if (w.of_word(r.lhs) <= w.of_word(r.rhs)) return false;
    }
    return true;
}

} // namespace tilecert
