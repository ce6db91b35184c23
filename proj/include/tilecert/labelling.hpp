#ifndef TILECERT_LABELLING_HPP
#define TILECERT_LABELLING_HPP

#include "tilecert/shift_automaton.hpp"
#include "tilecert/srs.hpp"

namespace tilecert {

struct LabelledRule {
    Rule rule;   // over tile letters (original letters for k = 1)
    Rule origin; // the plain rule it was labelled from
};

// The tiled rewrite system extracted from a shift automaton: semantic
// labelling with the shift algebra of tiles(A).
struct LabelledProblem {
    int k = 1;
    std::vector<LabelledRule> strict;
    std::vector<LabelledRule> weak;

    RelProblem problem() const;
};

// For every rule l -> r of p, every redex path x --l--> q and every
// realizable right context y of length k-1 from q whose reduct path
// x --r.y--> is also present: emit tiled(x l y) -> tiled(x r y), reading
// tiles along the paths. Pairs whose reduct path is missing are simply
// not in the labelled system (it is the intersection with T* x T*); on a
// completed automaton none are missing.
//
// For k = 1 the labelled system is the restriction of p to rules whose
// letters all appear as loops in the automaton, over the original
// letters.
LabelledProblem btiled_rules(const ShiftAutomaton& a, const RelProblem& p);

// True iff some redex path for lhs exists with at least one realizable
// right context of length k-1.
bool has_covered_redex(const ShiftAutomaton& a, const Word& lhs);

} // namespace tilecert

#endif
