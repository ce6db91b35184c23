#include "tilecert/closure.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace tilecert {

namespace {

Word markers(int n, Letter m) { return Word(static_cast<std::size_t>(n), m); }

std::vector<Rule> all_rules(const RelProblem& p) {
    std::vector<Rule> rs = p.strict();
    rs.insert(rs.end(), p.weak().begin(), p.weak().end());
    return rs;
}

} // namespace

std::vector<ClosureRule> closure_rules(const RelProblem& p, int k, ClosureMode mode) {
    if (k < 1) throw WidthError("tile width must be >= 1");
    if (mode == ClosureMode::ROC && k < 2)
        throw WidthError("ROC tiling needs width >= 2");

    const Letter lm = symbols::left_mark();
    const Letter rm = symbols::right_mark();
    const int m = std::max(1, k - 1);

    std::vector<ClosureRule> out;
    auto push = [&](ClosureRule cr) {
        if (std::find(out.begin(), out.end(), cr) == out.end()) out.push_back(std::move(cr));
    };

    for (const Rule& r : all_rules(p)) {
        push({ClosureKind::CC, r.lhs, r.rhs, k});
        for (std::size_t cut = 1; cut < r.lhs.size(); ++cut) {
            Word l1(r.lhs.begin(), r.lhs.begin() + cut);
            push({ClosureKind::FORW, concat(l1, markers(m, rm)), concat(r.rhs, markers(m, rm)), k});
            if (mode == ClosureMode::ROC) {
                Word l2(r.lhs.begin() + cut, r.lhs.end());
                push({ClosureKind::BACKW, concat(markers(k - 1, lm), l2),
                      concat(markers(k - 1, lm), r.rhs), k});
            }
        }
        if (mode == ClosureMode::ROC) {
            // splits l = x w y with x, y nonempty
            for (std::size_t xe = 1; xe < r.lhs.size(); ++xe) {
                for (std::size_t ys = xe; ys < r.lhs.size(); ++ys) {
                    Word x(r.lhs.begin(), r.lhs.begin() + xe);
                    Word y(r.lhs.begin() + ys, r.lhs.end());
                    Word lhs = concat(concat(x, markers(k - 1, rm)), concat(markers(k - 1, lm), y));
                    push({ClosureKind::CCLOOP, std::move(lhs), r.rhs, k});
                }
            }
        }
    }
    return out;
}

ShiftAutomaton initial_automaton(const RelProblem& p, int k, ClosureMode mode) {
    if (k < 1) throw WidthError("tile width must be >= 1");
    if (mode == ClosureMode::ROC && k < 2)
        throw WidthError("ROC tiling needs width >= 2");

    ShiftAutomaton a(k);
    StateId start = a.add_state(a.initial_word());
    for (const Rule& r : all_rules(p))
        a.add_path(start, concat(r.rhs, markers(k - 1, symbols::right_mark())));
    if (mode == ClosureMode::ROC) {
        StateId rend = a.add_state(markers(k - 1, symbols::right_mark()));
        a.add_path(rend, markers(k - 1, symbols::left_mark()));
    }
    return a;
}

namespace {

std::uint64_t default_budget(const ShiftAutomaton& a, const std::vector<ClosureRule>& rules) {
    std::set<Letter> sigma;
    for (const ClosureRule& cr : rules) {
        for (Letter l : cr.lhs_core) sigma.insert(l);
        for (Letter l : cr.rhs_core) sigma.insert(l);
    }
    for (StateId s = 0; s < a.state_count(); ++s)
        for (const auto& [c, q] : a.out_edges(s)) sigma.insert(c);
    sigma.insert(symbols::left_mark());
    sigma.insert(symbols::right_mark());
    std::uint64_t base = sigma.size();
    std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 4;
    std::uint64_t pow = 1;
    for (int i = 0; i < a.width(); ++i) {
        if (pow > cap / std::max<std::uint64_t>(base, 1)) return cap;
        pow *= base;
    }
    return 2 * pow;
}

struct Work {
    ShiftAutomaton& a;
    const CompletionOptions& opts;
    std::uint64_t budget;
    bool changed_this_round = false;

    void bump(bool added) {
        if (!added) return;
        changed_this_round = true;
        if (a.edge_count() > budget)
            throw BudgetError("tile budget exceeded during completion");
    }

    // Adds the reduct path p --rhs.y--> with an optional early cut in the
    // context region: once the reduct walk reaches the same state as the
    // redex walk with the same remaining suffix of y, the rest already
    // exists. redex_states[i] is the redex-side state after y[0..i), with
    // redex_states[0] the redex path's end state.
    void add_reduct(StateId p, const Word& rhs, const Word& y,
                    const std::vector<StateId>& redex_states) {
        StateId s = p;
        for (Letter c : rhs) {
            auto [t, added] = a.add_edge(s, c);
            bump(added);
            s = t;
        }
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (opts.early_cut && s == redex_states[i]) return;
            auto [t, added] = a.add_edge(s, y[i]);
            bump(added);
            s = t;
        }
    }

    // One obligation at one start state. Returns nothing; newly enabled
    // matches are picked up by the next round.
    void process(const ClosureRule& cr, StateId p) {
        Word lhs = cr.lhs_core;
        Word rhs = cr.rhs_core;
        if (cr.anchored_at_initial()) {
            if (a.state_word(p) != a.initial_word()) return;
            lhs = Word(lhs.begin() + (cr.k - 1), lhs.end());
            rhs = Word(rhs.begin() + (cr.k - 1), rhs.end());
        }
        auto q = a.trace(p, lhs);
        if (!q) return;
        if (!cr.context_closed()) {
            StateId s = p;
            for (Letter c : rhs) {
                auto [t, added] = a.add_edge(s, c);
                bump(added);
                s = t;
            }
            return;
        }
        // Enumerate full-length realizable contexts read-only first; the
        // worklist round structure picks up contexts enabled by the edges
        // added below.
        std::vector<std::pair<Word, std::vector<StateId>>> ctxs;
        a.for_each_context(*q, cr.k - 1, [&](const Word& y, const std::vector<StateId>& states) {
            ctxs.emplace_back(y, states);
        });
        for (const auto& [y, states] : ctxs) add_reduct(p, rhs, y, states);
    }
};

} // namespace

CompletionResult complete(ShiftAutomaton a, const std::vector<ClosureRule>& rules,
                          const CompletionOptions& opts) {
    CompletionResult res{std::move(a), 0, 0};
    Work work{res.automaton, opts, 0};
    work.budget = opts.tile_budget ? opts.tile_budget : default_budget(res.automaton, rules);
    if (res.automaton.edge_count() > work.budget)
        throw BudgetError("tile budget exceeded before completion");

    bool changed = true;
    while (changed) {
        opts.limits.check();
        ++res.rounds;
        work.changed_this_round = false;
        std::size_t nstates = res.automaton.state_count();
        std::vector<std::pair<std::size_t, StateId>> pairs;
        pairs.reserve(rules.size() * nstates);
        for (std::size_t ri = 0; ri < rules.size(); ++ri)
            for (StateId s = 0; s < nstates; ++s) pairs.emplace_back(ri, s);
        if (opts.shuffle_seed) {
            std::mt19937_64 rng(opts.shuffle_seed + res.rounds);
            std::shuffle(pairs.begin(), pairs.end(), rng);
        }
        std::size_t tick = 0;
        for (const auto& [ri, s] : pairs) {
            if ((++tick & 63) == 0) opts.limits.check();
            work.process(rules[ri], s);
        }
        changed = work.changed_this_round;
    }
    res.tile_count = res.automaton.edge_count();
    return res;
}

} // namespace tilecert
