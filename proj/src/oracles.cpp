#include "tilecert/oracles.hpp"

#include <algorithm>

namespace tilecert {

namespace {

// Inserts a candidate, respecting the length and size bounds.
struct Sink {
    std::set<Word>& out;
    const EnumBounds& b;
    bool& truncated;
    bool changed = false;

    void offer(Word w) {
        if (w.size() > b.max_len) {
            truncated = true;
            return;
        }
        if (out.size() >= b.max_size && !out.count(w)) {
            truncated = true;
            return;
        }
        if (out.insert(std::move(w)).second) changed = true;
    }
};

} // namespace

EnumResult reach_enum(const std::vector<Rule>& rules, const std::set<Word>& seeds,
                      const EnumBounds& b) {
    EnumResult res;
    for (const Word& s : seeds) {
        if (s.size() <= b.max_len) res.words.insert(s);
        else res.truncated = true;
    }
    for (std::size_t round = 0; round < b.max_rounds; ++round) {
        Sink sink{res.words, b, res.truncated};
        std::vector<Word> snapshot(res.words.begin(), res.words.end());
        for (const Word& w : snapshot)
            for (Word v : rewrite_steps(rules, w)) sink.offer(std::move(v));
        if (!sink.changed) return res;
    }
    res.truncated = true;
    return res;
}

EnumResult rfc_enum(const std::vector<Rule>& rules, const EnumBounds& b) {
    EnumResult res;
    for (const Rule& r : rules) {
        if (r.rhs.size() <= b.max_len) res.words.insert(r.rhs);
        else res.truncated = true;
    }
    for (std::size_t round = 0; round < b.max_rounds; ++round) {
        Sink sink{res.words, b, res.truncated};
        std::vector<Word> snapshot(res.words.begin(), res.words.end());
        for (const Word& w : snapshot) {
            for (Word v : rewrite_steps(rules, w)) sink.offer(std::move(v));
            for (const Rule& r : rules) {
                for (std::size_t cut = 1; cut < r.lhs.size(); ++cut) {
                    Word l1(r.lhs.begin(), r.lhs.begin() + cut);
                    if (!is_suffix(l1, w)) continue;
                    Word x(w.begin(), w.end() - cut);
                    sink.offer(concat(x, r.rhs));
                }
            }
        }
        if (!sink.changed) return res;
    }
    res.truncated = true;
    return res;
}

EnumResult roc_enum(const std::vector<Rule>& rules, const EnumBounds& b) {
    EnumResult res;
    for (const Rule& r : rules) {
        if (r.rhs.size() <= b.max_len) res.words.insert(r.rhs);
        else res.truncated = true;
    }
    for (std::size_t round = 0; round < b.max_rounds; ++round) {
        Sink sink{res.words, b, res.truncated};
        std::vector<Word> snapshot(res.words.begin(), res.words.end());
        for (const Word& w : snapshot) {
            // inner rewriting
            for (Word v : rewrite_steps(rules, w)) sink.offer(std::move(v));
            for (const Rule& r : rules) {
                for (std::size_t cut = 1; cut < r.lhs.size(); ++cut) {
                    // suffix rewriting: w = t x, rule = x u -> v, t nonempty
                    Word x(r.lhs.begin(), r.lhs.begin() + cut);
                    if (w.size() > x.size() && is_suffix(x, w)) {
                        Word t(w.begin(), w.end() - cut);
                        sink.offer(concat(t, r.rhs));
                    }
                    // prefix rewriting: w = x t, rule = u x -> v, t nonempty
                    Word px(r.lhs.begin() + cut, r.lhs.end());
                    if (w.size() > px.size() && is_prefix(px, w)) {
                        Word t(w.begin() + px.size(), w.end());
                        sink.offer(concat(r.rhs, t));
                    }
                }
            }
            // bridging: w1 = t x, w2 = y v, rule = x m y -> z with
            // t, x, y, v nonempty
            for (const Word& w2 : snapshot) {
                for (const Rule& r : rules) {
                    for (std::size_t xe = 1; xe < r.lhs.size(); ++xe) {
                        Word x(r.lhs.begin(), r.lhs.begin() + xe);
                        if (!(w.size() > x.size() && is_suffix(x, w))) continue;
                        Word t(w.begin(), w.end() - xe);
                        for (std::size_t ys = xe; ys < r.lhs.size(); ++ys) {
                            Word y(r.lhs.begin() + ys, r.lhs.end());
                            if (y.empty()) continue;
                            if (!(w2.size() > y.size() && is_prefix(y, w2))) continue;
                            Word v(w2.begin() + y.size(), w2.end());
                            sink.offer(concat(concat(t, r.rhs), v));
                        }
                    }
                }
            }
        }
        if (!sink.changed) return res;
    }
    res.truncated = true;
    return res;
}

PairEnumResult oc_pairs_enum(const std::vector<Rule>& rules, const EnumBounds& b) {
    PairEnumResult res;
    auto fits = [&](const Word& a, const Word& c) {
        return a.size() <= b.max_len && c.size() <= b.max_len;
    };
    bool changed = false;
    auto offer = [&](Word s, Word t) {
        if (!fits(s, t)) {
            res.truncated = true;
            return;
        }
        if (res.pairs.size() >= b.max_size && !res.pairs.count({s, t})) {
            res.truncated = true;
            return;
        }
        if (res.pairs.emplace(std::move(s), std::move(t)).second) changed = true;
    };
    for (const Rule& r : rules) offer(r.lhs, r.rhs);
    for (std::size_t round = 0; round < b.max_rounds; ++round) {
        changed = false;
        std::vector<std::pair<Word, Word>> snap(res.pairs.begin(), res.pairs.end());
        for (const auto& [s1, t1] : snap) {
            for (const auto& [s2, t2] : snap) {
                // (2): (s, tx), (xu, v) with t, x, u nonempty -> (su, tv)
                for (std::size_t xl = 1; xl < t1.size(); ++xl) {
                    if (xl >= s2.size()) break;
                    Word x(t1.end() - xl, t1.end());
                    if (!is_prefix(x, s2)) continue;
                    Word t(t1.begin(), t1.end() - xl);
                    Word u(s2.begin() + xl, s2.end());
                    offer(concat(s1, u), concat(t, t2));
                }
                // (2'): (s, xt), (ux, v) with t, x, u nonempty -> (us, vt)
                for (std::size_t xl = 1; xl < t1.size(); ++xl) {
                    if (xl >= s2.size()) break;
                    Word x(t1.begin(), t1.begin() + xl);
                    if (!is_suffix(x, s2)) continue;
                    Word t(t1.begin() + xl, t1.end());
                    Word u(s2.begin(), s2.end() - xl);
                    offer(concat(u, s1), concat(t2, t));
                }
                // (3): (s, t u t'), (u, v) -> (s, t v t'); u may be empty
                {
                    const Word& u = s2;
                    if (u.size() <= t1.size()) {
                        for (std::size_t i = 0; i + u.size() <= t1.size(); ++i) {
                            if (!std::equal(u.begin(), u.end(), t1.begin() + i)) continue;
                            Word t(t1.begin(), t1.begin() + i);
                            Word tp(t1.begin() + i + u.size(), t1.end());
                            offer(s1, concat(concat(t, t2), tp));
                        }
                    }
                }
                // (3'): (u, v), (s v s', t) -> (s u s', t); v may be empty
                if (t1.size() <= s2.size()) {
                    const Word& v = t1;
                    for (std::size_t i = 0; i + v.size() <= s2.size(); ++i) {
                        if (!std::equal(v.begin(), v.end(), s2.begin() + i)) continue;
                        Word s(s2.begin(), s2.begin() + i);
                        Word sp(s2.begin() + i + v.size(), s2.end());
                        offer(concat(concat(s, s1), sp), t2);
                    }
                }
            }
        }
        if (!changed) return res;
    }
    res.truncated = true;
    return res;
}

} // namespace tilecert
