#ifndef TILECERT_SRS_HPP
#define TILECERT_SRS_HPP

#include "tilecert/symbols.hpp"

#include <array>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tilecert {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(std::string msg, int line_, int col_)
        : std::runtime_error(std::move(msg)), line(line_), col(col_) {}
};

struct Rule {
    Word lhs;
    Word rhs;

    bool operator==(const Rule& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

// Canonical order: lexicographic on lhs, then rhs, using the structural
// letter order so it is stable across interning orders.
bool rule_less(const Rule& a, const Rule& b);

using SizeTriple = std::array<std::size_t, 3>; // (strict, weak, letters)

// A relative termination problem: strict rules R, weak rules S, alphabet.
// Rule vectors are deduplicated and canonically ordered; a rule occurring
// both strictly and weakly is kept in the strict part only. Values are
// immutable after construction.
class RelProblem {
public:
    RelProblem() = default;
    RelProblem(std::vector<Rule> strict, std::vector<Rule> weak);

    const std::vector<Rule>& strict() const { return strict_; }
    const std::vector<Rule>& weak() const { return weak_; }
    // All letters occurring in rules, canonically ordered.
    const std::vector<Letter>& alphabet() const { return alphabet_; }

    bool operator==(const RelProblem& o) const {
        return strict_ == o.strict_ && weak_ == o.weak_;
    }

private:
    std::vector<Rule> strict_;
    std::vector<Rule> weak_;
    std::vector<Letter> alphabet_;
};

// (|strict|, |weak|, |letters occurring in rules|); the (r/s,a) notation.
SizeTriple size_triple(const RelProblem& p);
std::string format_size(const SizeTriple& t);

// TPDB SRS format. Strict rules use "->", weak rules "->=". Sections
// (RULES ...) and (COMMENT ...) are recognized; (VAR ...) is rejected
// because string rewriting is ground.
RelProblem parse_tpdb(std::string_view text);
std::string render_tpdb(const RelProblem& p);

// All one-step rewrites of w. A rule with empty lhs matches at every
// position of w.
std::set<Word> rewrite_steps(const std::vector<Rule>& rules, const Word& w);

// Word helpers.
Word make_word(std::initializer_list<Letter> ls);
Word concat(const Word& a, const Word& b);
Word reversed(const Word& w);
bool is_prefix(const Word& pre, const Word& w);
bool is_suffix(const Word& suf, const Word& w);

} // namespace tilecert

#endif
