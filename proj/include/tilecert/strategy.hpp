#ifndef TILECERT_STRATEGY_HPP
#define TILECERT_STRATEGY_HPP

#include "tilecert/transforms.hpp"

#include <atomic>
#include <string>

namespace tilecert {

// One strategy element. Transform atoms name a transform; width-
// parameterized atoms may carry several widths, which are tried in order
// until one changes the problem (try-widths). The pseudo-atom "repeat"
// loops the atoms since the previous repeat (or the strategy start) until
// the problem stops changing.
struct StrategyAtom {
    std::string name;
    std::vector<int> params;
};

struct Strategy {
    std::vector<StrategyAtom> atoms;
};

// Grammar: atoms separated by ";", atom = name (":" integer)*.
// Names: trfc, trfcu, troc, trocu, mirror, dp, weights, repeat.
Strategy parse_strategy(std::string_view text);
std::string strategy_text(const Strategy& s);

struct Budget {
    double wall_seconds = 60.0; // <= 0: unlimited
    std::uint64_t tile_cap = 0; // 0: per-step default
    int max_steps = 64;
    long long weight_cap = 64;
    const std::atomic<bool>* cancel = nullptr;
};

enum class Verdict { YES, MAYBE };

// A replayable proof. problems[i] is the problem after steps[i]; the
// verdict is YES exactly when the final problem has no strict rules.
struct ProofTrace {
    RelProblem initial;
    std::vector<ProofStep> steps;
    std::vector<RelProblem> problems;
    Verdict verdict = Verdict::MAYBE;

    const RelProblem& final_problem() const {
        return problems.empty() ? initial : problems.back();
    }
};

// Applies the strategy, stopping early with YES once no strict rule is
// left, and with MAYBE on budget exhaustion or strategy end. Inapplicable
// or budget-aborted atoms are skipped; this never throws for those.
ProofTrace run_strategy(const RelProblem& p, const Strategy& s, const Budget& budget);

// Re-executes the deterministic steps and validates weight certificates.
// On mismatch returns false and, if given, reports the first diverging
// step.
bool replay(const ProofTrace& trace, std::string* diagnosis = nullptr);

// Portfolio prover: runs the default strategies concurrently, first YES
// wins and cancels the rest.
ProofTrace auto_prove(const RelProblem& p, const Budget& budget);

// Text form: one line per step plus indented certificates, then the
// verdict.
std::string trace_text(const ProofTrace& trace);

// JSON form: {problem, steps[], verdict}; steps carry name, params,
// sizes, certificate. Problems along the trace are not serialized;
// replay recomputes them.
std::string trace_json(const ProofTrace& trace);
ProofTrace trace_from_json(std::string_view json);

} // namespace tilecert

#endif
