#ifndef TILECERT_ORACLES_HPP
#define TILECERT_ORACLES_HPP

#include "tilecert/srs.hpp"

#include <set>

namespace tilecert {

// Bounds for the brute-force enumerations. Words longer than max_len are
// dropped (and the result marked truncated); enumeration also stops after
// max_rounds fixpoint rounds or when the set reaches max_size.
struct EnumBounds {
    std::size_t max_len = 12;
    std::size_t max_rounds = 16;
    std::size_t max_size = 4000;
};

struct EnumResult {
    std::set<Word> words;
    bool truncated = false;
};

// Least set containing the seeds and closed under rewrite_steps, cut off
// by the bounds.
EnumResult reach_enum(const std::vector<Rule>& rules, const std::set<Word>& seeds,
                      const EnumBounds& b);

// Right-hand sides of forward closures: rhs(R) closed under inner
// rewriting and suffix extension (x l1 in S, (l1 l2 -> r) in R with both
// split parts nonempty gives x r).
EnumResult rfc_enum(const std::vector<Rule>& rules, const EnumBounds& b);

// Right-hand sides of overlap closures, by the five-rule left-recursive
// characterization: rhs inclusion, suffix rewriting, prefix rewriting,
// inner rewriting, and two-sided bridging.
EnumResult roc_enum(const std::vector<Rule>& rules, const EnumBounds& b);

struct PairEnumResult {
    std::set<std::pair<Word, Word>> pairs;
    bool truncated = false;
};

// Overlap closures as pairs, by the original inference rules (1), (2),
// (2'), (3), (3').
PairEnumResult oc_pairs_enum(const std::vector<Rule>& rules, const EnumBounds& b);

} // namespace tilecert

#endif
