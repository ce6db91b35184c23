#include "tilecert/labelling.hpp"

#include "tilecert/tiling.hpp"

#include <algorithm>
#include <set>

namespace tilecert {

RelProblem LabelledProblem::problem() const {
    std::vector<Rule> s, w;
    s.reserve(strict.size());
    w.reserve(weak.size());
    for (const LabelledRule& lr : strict) s.push_back(lr.rule);
    for (const LabelledRule& lr : weak) w.push_back(lr.rule);
    return RelProblem(std::move(s), std::move(w));
}

namespace {

struct RuleLess {
    bool operator()(const Rule& a, const Rule& b) const { return rule_less(a, b); }
};

void label_rules(const ShiftAutomaton& a, const std::vector<Rule>& rules,
                 std::vector<LabelledRule>& out) {
    const int k = a.width();
    std::set<Rule, RuleLess> seen;
    for (const Rule& r : rules) {
        if (k == 1) {
            // width-1 tiles are single letters; a rule survives iff both
            // sides evaluate in the automaton
            auto p = a.find_state(Word{});
            if (!p) continue;
            if (a.trace(*p, r.lhs) && a.trace(*p, r.rhs)) {
                if (seen.insert(r).second) out.push_back({r, r});
            }
            continue;
        }
        for (StateId p = 0; p < a.state_count(); ++p) {
            auto q = a.trace(p, r.lhs);
            if (!q) continue;
            a.for_each_context(*q, k - 1, [&](const Word& y, const std::vector<StateId>&) {
                Word rhs_ext = concat(r.rhs, y);
                if (!a.trace(p, rhs_ext)) return;
                Word lw = concat(concat(a.state_word(p), r.lhs), y);
                Word rw = concat(a.state_word(p), rhs_ext);
                Rule labelled{Word(), Word()};
                auto lt = tiled(lw, k);
                auto rt = tiled(rw, k);
                labelled.lhs.assign(lt.begin(), lt.end());
                labelled.rhs.assign(rt.begin(), rt.end());
                if (seen.insert(labelled).second) out.push_back({std::move(labelled), r});
            });
        }
    }
    std::sort(out.begin(), out.end(), [](const LabelledRule& x, const LabelledRule& y) {
        return rule_less(x.rule, y.rule);
    });
}

} // namespace

LabelledProblem btiled_rules(const ShiftAutomaton& a, const RelProblem& p) {
    LabelledProblem lp;
    lp.k = a.width();
    label_rules(a, p.strict(), lp.strict);
    label_rules(a, p.weak(), lp.weak);
    return lp;
}

bool has_covered_redex(const ShiftAutomaton& a, const Word& lhs) {
    for (StateId p = 0; p < a.state_count(); ++p) {
        auto q = a.trace(p, lhs);
        if (q && a.has_right_context(*q, a.width() - 1)) return true;
    }
    return false;
}

} // namespace tilecert
