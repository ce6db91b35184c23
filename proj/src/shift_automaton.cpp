#include "tilecert/shift_automaton.hpp"

#include <algorithm>
#include <sstream>

namespace tilecert {

ShiftAutomaton::ShiftAutomaton(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("shift automaton needs k >= 1");
    initial_ = Word(static_cast<std::size_t>(k - 1), symbols::left_mark());
}

std::optional<StateId> ShiftAutomaton::find_state(const Word& w) const {
    auto it = ids_.find(w);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

StateId ShiftAutomaton::add_state(const Word& w) {
    if (w.size() != static_cast<std::size_t>(k_ - 1))
        throw std::invalid_argument("state word has wrong length");
    auto it = ids_.find(w);
    if (it != ids_.end()) return it->second;
    StateId id = static_cast<StateId>(words_.size());
    words_.push_back(w);
    ids_.emplace(w, id);
    out_.emplace_back();
    return id;
}

std::optional<StateId> ShiftAutomaton::step(StateId s, Letter c) const {
    for (const auto& [l, q] : out_[s])
        if (l == c) return q;
    return std::nullopt;
}

Word ShiftAutomaton::shifted(const Word& p, Letter c) const {
    Word q;
    q.reserve(k_ - 1);
    if (k_ > 1) {
        q.insert(q.end(), p.begin() + 1, p.end());
        q.push_back(c);
    }
    return q;
}

std::pair<StateId, bool> ShiftAutomaton::add_edge(StateId s, Letter c) {
    if (auto q = step(s, c)) return {*q, false};
    StateId q = add_state(shifted(words_[s], c));
    out_[s].emplace_back(c, q);
    ++edge_count_;
    return {q, true};
}

std::optional<StateId> ShiftAutomaton::trace(StateId p, const Word& w) const {
    StateId s = p;
    for (Letter c : w) {
        auto q = step(s, c);
        if (!q) return std::nullopt;
        s = *q;
    }
    return s;
}

std::optional<Word> ShiftAutomaton::trace_word(const Word& from, const Word& w) const {
    auto p = find_state(from);
    if (!p) return std::nullopt;
    auto q = trace(*p, w);
    if (!q) return std::nullopt;
    return words_[*q];
}

StateId ShiftAutomaton::add_path(StateId p, const Word& w) {
    StateId s = p;
    for (Letter c : w) s = add_edge(s, c).first;
    return s;
}

std::set<std::pair<Word, Word>> ShiftAutomaton::redex_endpoints(const Word& w) const {
    std::set<std::pair<Word, Word>> out;
    for (StateId p = 0; p < words_.size(); ++p) {
        if (auto q = trace(p, w)) out.emplace(words_[p], words_[*q]);
    }
    return out;
}

void ShiftAutomaton::for_each_context(
    StateId q, int len,
    const std::function<void(const Word&, const std::vector<StateId>&)>& fn) const {
    Word y;
    std::vector<StateId> states{q};
    y.reserve(len);
    const Letter lm = symbols::left_mark();
    const Letter rm = symbols::right_mark();
    auto rec = [&](auto&& self, StateId s, bool after_mark) -> void {
        if (static_cast<int>(y.size()) == len) {
            fn(y, states);
            return;
        }
        for (const auto& [c, t] : out_[s]) {
            if (c == lm) continue;
            if (after_mark && c != rm) continue;
            y.push_back(c);
            states.push_back(t);
            self(self, t, after_mark || c == rm);
            states.pop_back();
            y.pop_back();
        }
    };
    rec(rec, q, false);
}

std::set<Word> ShiftAutomaton::right_contexts(StateId q, int len) const {
    std::set<Word> out;
    for_each_context(q, len, [&](const Word& y, const std::vector<StateId>&) { out.insert(y); });
    return out;
}

bool ShiftAutomaton::has_right_context(StateId q, int len) const {
    if (len == 0) return true;
    const Letter lm = symbols::left_mark();
    const Letter rm = symbols::right_mark();
    auto rec = [&](auto&& self, StateId s, int rem, bool after_mark) -> bool {
        if (rem == 0) return true;
        for (const auto& [c, t] : out_[s]) {
            if (c == lm) continue;
            if (after_mark && c != rm) continue;
            if (self(self, t, rem - 1, after_mark || c == rm)) return true;
        }
        return false;
    };
    return rec(rec, q, len, false);
}

TileSet ShiftAutomaton::tiles() const {
    TileSet ts(k_);
    Word t;
    for (StateId s = 0; s < words_.size(); ++s) {
        for (const auto& [c, q] : out_[s]) {
            t = words_[s];
            t.push_back(c);
            ts.insert(tile_of_word(t));
        }
    }
    return ts;
}

bool ShiftAutomaton::validate() const {
    for (StateId s = 0; s < words_.size(); ++s) {
        if (words_[s].size() != static_cast<std::size_t>(k_ - 1)) return false;
        for (const auto& [c, q] : out_[s]) {
            if (words_[q] != shifted(words_[s], c)) return false;
        }
    }
    return true;
}

std::string ShiftAutomaton::to_dot() const {
    std::ostringstream os;
    os << "digraph shift {\n  rankdir=LR;\n";
    std::vector<StateId> order(words_.size());
    for (StateId s = 0; s < words_.size(); ++s) order[s] = s;
    std::sort(order.begin(), order.end(), [&](StateId a, StateId b) {
        return symbols::word_less(words_[a], words_[b]);
    });
    for (StateId s : order)
        os << "  \"" << symbols::word_plain_text(words_[s]) << "\";\n";
    for (StateId s : order) {
        auto edges = out_[s];
        std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
            return symbols::less(a.first, b.first);
        });
        for (const auto& [c, q] : edges) {
            os << "  \"" << symbols::word_plain_text(words_[s]) << "\" -> \""
               << symbols::word_plain_text(words_[q]) << "\" [label=\""
               << symbols::plain_text(c) << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

bool ShiftAutomaton::operator==(const ShiftAutomaton& o) const {
    if (k_ != o.k_) return false;
    if (words_.size() != o.words_.size() || edge_count_ != o.edge_count_) return false;
    for (StateId s = 0; s < words_.size(); ++s) {
        auto t = o.find_state(words_[s]);
        if (!t) return false;
        if (out_[s].size() != o.out_[*t].size()) return false;
        for (const auto& [c, q] : out_[s]) {
            auto r = o.step(*t, c);
            if (!r || o.state_word(*r) != words_[q]) return false;
        }
    }
    return true;
}

ShiftAutomaton from_tiles(const TileSet& T, const Word& seed) {
    ShiftAutomaton a(T.width());
    a.add_state(seed);
    for (Letter t : T.tiles()) {
        Word w = tile_word(t);
        Word prefix(w.begin(), w.end() - 1);
        StateId p = a.add_state(prefix);
        a.add_edge(p, w.back());
    }
    return a;
}

ShiftAutomaton from_tiles(const TileSet& T) {
    Word seed(static_cast<std::size_t>(T.width() - 1), symbols::left_mark());
    return from_tiles(T, seed);
}

} // namespace tilecert
