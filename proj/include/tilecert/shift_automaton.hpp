#ifndef TILECERT_SHIFT_AUTOMATON_HPP
#define TILECERT_SHIFT_AUTOMATON_HPP

#include "tilecert/tiling.hpp"

#include <functional>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tilecert {

using StateId = std::uint32_t;

// Deterministic k-shift automaton. States are words of length k-1; the
// target of a transition (p, c) is forced to be the length-(k-1) suffix
// of p*c, so states have no identity besides their word. The edge set is
// a set of width-k tiles (edge p --c--> q is the tile p*c).
//
// The class has value semantics: completion works on a private copy and
// publishes the result, after which it is treated as immutable.
class ShiftAutomaton {
public:
    explicit ShiftAutomaton(int k);

    int width() const { return k_; }
    std::size_t state_count() const { return words_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    const Word& state_word(StateId s) const { return words_[s]; }
    const Word& initial_word() const { return initial_; }

    std::optional<StateId> find_state(const Word& w) const;
    StateId add_state(const Word& w);

    // Follows one transition; absent if undefined.
    std::optional<StateId> step(StateId s, Letter c) const;

    // Adds the transition (s, c); the target is forced by the shift
    // property. Returns the target and whether the edge was new.
    std::pair<StateId, bool> add_edge(StateId s, Letter c);

    // The state reached by following w from p, or absent if a transition
    // is missing along the way.
    std::optional<StateId> trace(StateId p, const Word& w) const;
    std::optional<Word> trace_word(const Word& from, const Word& w) const;

    // Extends the automaton so that trace(p, w) is defined; existing
    // transitions are never changed. Returns the end state.
    StateId add_path(StateId p, const Word& w);

    // All pairs (p, q) with trace(p, w) = q. For w = empty this is the
    // diagonal over all states.
    std::set<std::pair<Word, Word>> redex_endpoints(const Word& w) const;

    // All words y of length len with trace(q, y) defined and y of shape
    // Sigma^i Rightmark^j (no letter after a right marker, and never a
    // left marker, so contexts cannot cross the ROC loop junction).
    std::set<Word> right_contexts(StateId q, int len) const;
    // As above, but only asks whether one exists.
    bool has_right_context(StateId q, int len) const;
    // Visits each admissible context; states[i] is the state after
    // reading y[0..i); states has len+1 entries (states[0] = q).
    void for_each_context(StateId q, int len,
                          const std::function<void(const Word& y, const std::vector<StateId>& states)>& fn) const;

    const std::vector<std::pair<Letter, StateId>>& out_edges(StateId s) const { return out_[s]; }

    // Tile p*c for every transition.
    TileSet tiles() const;

    // Checks the shift property on every edge.
    bool validate() const;

    std::string to_dot() const;

    bool operator==(const ShiftAutomaton& o) const;

private:
    Word shifted(const Word& p, Letter c) const;

    int k_;
    Word initial_;
    std::vector<Word> words_;
    std::unordered_map<Word, StateId, WordHash> ids_;
    std::vector<std::vector<std::pair<Letter, StateId>>> out_;
    std::size_t edge_count_ = 0;
};

// The automaton with tiles(A) = T and states prefix_{k-1}(T) u
// suffix_{k-1}(T) u {seed}.
ShiftAutomaton from_tiles(const TileSet& T, const Word& seed);
ShiftAutomaton from_tiles(const TileSet& T);

} // namespace tilecert

#endif
