#ifndef TILECERT_WEIGHTS_HPP
#define TILECERT_WEIGHTS_HPP

#include "tilecert/errors.hpp"
#include "tilecert/srs.hpp"

#include <map>

namespace tilecert {

// Additive letter weights; absent letters weigh 0, the empty word weighs 0.
struct WeightMap {
    std::map<Letter, long long> values;

    long long of(Letter l) const {
        auto it = values.find(l);
        return it == values.end() ? 0 : it->second;
    }
    long long of_word(const Word& w) const {
        long long s = 0;
        for (Letter l : w) s += of(l);
        return s;
    }
    bool operator==(const WeightMap& o) const { return values == o.values; }
};

struct WeightSearchOptions {
    long long cap = 64; // bound on individual integer weights
    RunLimits limits;
};

struct WeightSearchResult {
    WeightMap weights;
    std::vector<std::size_t> removed; // indices into the searched rule list
};

// Finds nonnegative integer weights under which every rule weakly
// decreases, maximizing the set of strictly decreasing rules greedily in
// canonical rule order. Search is by linear programming over rationals
// followed by integer scaling; the returned certificate is always exact.
// If nothing can be made strictly decreasing the weight map is empty and
// removed is empty.
WeightSearchResult find_weights(const std::vector<Rule>& rules, const WeightSearchOptions& opts = {});

// Certificate check: all rules of p weakly decrease, every rule of
// removed occurs in p and strictly decreases.
bool validate_weights(const RelProblem& p, const std::vector<Rule>& removed, const WeightMap& w);

} // namespace tilecert

#endif
