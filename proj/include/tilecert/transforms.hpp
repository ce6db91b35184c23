#ifndef TILECERT_TRANSFORMS_HPP
#define TILECERT_TRANSFORMS_HPP

#include "tilecert/closure.hpp"
#include "tilecert/labelling.hpp"
#include "tilecert/weights.hpp"

#include <optional>
#include <string>

namespace tilecert {

enum class StepName { TRFC, TRFCU, TROC, TROCU, MIRROR, DP, WEIGHTS };

const char* step_name_text(StepName n);
std::optional<StepName> step_name_from(std::string_view s);

struct TileSummary {
    int width = 0;
    std::size_t tile_count = 0;
    bool operator==(const TileSummary& o) const {
        return width == o.width && tile_count == o.tile_count;
    }
};

// One transformation record; output triple always matches size_triple of
// the produced problem.
struct ProofStep {
    StepName name;
    std::vector<int> params;
    SizeTriple in{0, 0, 0};
    SizeTriple out{0, 0, 0};
    std::optional<TileSummary> tiles;
    std::optional<WeightMap> weights;
};

struct TransformLimits {
    std::uint64_t tile_budget = 0; // 0: completion default
    long long weight_cap = 64;
    RunLimits limits;
};

using TransformResult = std::pair<RelProblem, ProofStep>;

// Tiling for forward closures: the labelled system over the completed
// sparse tile set. Standard problems only (RFC is unsound for relative
// termination).
TransformResult trfc(const RelProblem& p, int k, const TransformLimits& tl = {});

// RFC untiling: keeps the rules whose left-hand side has a covered redex.
TransformResult trfcu(const RelProblem& p, int k, const TransformLimits& tl = {});

// Tiling for overlap closures (relative problems; k >= 2).
TransformResult troc(const RelProblem& p, int k, const TransformLimits& tl = {});

// ROC untiling.
TransformResult trocu(const RelProblem& p, int k, const TransformLimits& tl = {});

// Reverses all left- and right-hand sides.
TransformResult mirror(const RelProblem& p);

// Dependency pairs for string rewriting with the rightmost position as
// top: defined letters are the last letters of left-hand sides; strict
// pairs mark the last letter of the lhs and of every nonempty prefix of
// the rhs ending in a defined letter; the original rules become weak.
TransformResult dp(const RelProblem& p);

// Rule removal by additive weights; removes every strictly decreasing
// rule (from both components) under a map that weakly decreases all.
// Returns the input and a no-op step when nothing can be removed.
TransformResult weight_removal(const RelProblem& p, const TransformLimits& tl = {});

} // namespace tilecert

#endif
