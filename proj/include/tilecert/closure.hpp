#ifndef TILECERT_CLOSURE_HPP
#define TILECERT_CLOSURE_HPP

#include "tilecert/errors.hpp"
#include "tilecert/shift_automaton.hpp"
#include "tilecert/srs.hpp"

#include <cstdint>
#include <vector>

namespace tilecert {

enum class ClosureMode { RFC, ROC };

enum class ClosureKind { CC, FORW, BACKW, CCLOOP };

// One closure obligation driving completion.
//
//   CC:     lhs/rhs are the rule's sides; matched from any state and
//           closed under every realizable right context of length k-1.
//   FORW:   lhs = l1 . >^m, rhs = r . >^m with m = max(1, k-1), from the
//           splits l = l1 l2 (both parts nonempty). The marker suffix
//           makes both sides end in the same state, so no context is
//           needed. The paper's definition writes >^k, but bordered
//           strings carry exactly k-1 end markers; the k-1 exponent is
//           what its worked examples use.
//   BACKW:  lhs = <^{k-1} . l2, rhs = <^{k-1} . r; the marker prefix
//           anchors matching at the initial state, and a right context is
//           required to rejoin the redex path.
//   CCLOOP: lhs = x . >^{k-1} <^{k-1} . y from splits l = x w y (x, y
//           nonempty, w arbitrary), rhs = r; matched along the automaton
//           loop, context closed like CC.
struct ClosureRule {
    ClosureKind kind;
    Word lhs_core;
    Word rhs_core;
    int k;

    // Matching starts at the initial state with the marker prefix of
    // lhs_core/rhs_core stripped.
    bool anchored_at_initial() const { return kind == ClosureKind::BACKW; }
    // Whether reducts must be closed under realizable right contexts.
    bool context_closed() const {
        return kind == ClosureKind::CC || kind == ClosureKind::BACKW || kind == ClosureKind::CCLOOP;
    }

    bool operator==(const ClosureRule& o) const {
        return kind == o.kind && lhs_core == o.lhs_core && rhs_core == o.rhs_core && k == o.k;
    }
};

// The obligations for completing at width k: CC + FORW in RFC mode,
// plus BACKW + CCLOOP in ROC mode. Strict and weak rules are treated
// alike. ROC mode requires k >= 2.
std::vector<ClosureRule> closure_rules(const RelProblem& p, int k, ClosureMode mode);

// The starting automaton: btiles_k of every right-hand side (strict and
// weak); in ROC mode additionally the loop path from >^{k-1} back to
// <^{k-1} labelled <^{k-1}.
ShiftAutomaton initial_automaton(const RelProblem& p, int k, ClosureMode mode);

struct CompletionResult {
    ShiftAutomaton automaton;
    std::size_t rounds = 0;
    std::size_t tile_count = 0;
};

struct CompletionOptions {
    // 0 means the default cap 2 * |Sigma u {<,>}|^k (saturated).
    std::uint64_t tile_budget = 0;
    // Stop extending a reduct path once it rejoins the redex path. Does
    // not change the fixpoint; tested for flag independence.
    bool early_cut = true;
    // Nonzero: process (rule, state) pairs in a shuffled order, for
    // order-independence tests.
    std::uint64_t shuffle_seed = 0;
    RunLimits limits;
};

// Least-fixpoint completion: extends a until every obligation whose
// redex path (with a realizable context, where applicable) exists also
// has its reduct path. Throws BudgetError if the tile count passes the
// budget.
CompletionResult complete(ShiftAutomaton a, const std::vector<ClosureRule>& rules,
                          const CompletionOptions& opts = {});

} // namespace tilecert

#endif
