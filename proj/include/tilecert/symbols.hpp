#ifndef TILECERT_SYMBOLS_HPP
#define TILECERT_SYMBOLS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tilecert {

// Letters are interned; a Letter value is an index into the process-wide
// symbol table. Equality of letters is equality of ids. The table is
// append-only and thread-safe, so letters can be shared freely between
// concurrent workers.
using Letter = std::uint32_t;

enum class LetterKind : std::uint8_t {
    Ordinary,  // plain token from input
    LeftMark,  // the left end marker
    RightMark, // the right end marker
    Marked,    // DP-marked copy of a base letter
    Tile,      // a width-k tile over other letters
};

namespace symbols {

// The two end markers have fixed ids.
Letter left_mark();
Letter right_mark();

Letter intern(std::string_view token);
Letter marked(Letter base);
Letter tile(int width, std::span<const Letter> components);

LetterKind kind(Letter l);
Letter base_of(Letter l);                      // Marked only
int tile_width(Letter l);                      // Tile only
std::span<const Letter> tile_components(Letter l); // Tile only

// Rendering. plain_text is the human form used in traces and DOT output:
// markers are "<" and ">", tiles are their letters joined without
// separator. tpdb_token is the exported token form: markers are "L"/"R",
// tile letters joined by "_".
std::string plain_text(Letter l);
std::string tpdb_token(Letter l);

// Canonical key: injective across kinds and nesting, used for ordering so
// that canonical rule order does not depend on interning order.
const std::string& canon_text(Letter l);

// Rebuilds (re-interning if needed) a letter from its canonical key.
Letter from_canon(std::string_view canon);

// Structural order on letters (by canonical key).
bool less(Letter a, Letter b);

} // namespace symbols

using Word = std::vector<Letter>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Letter l : w) {
            h ^= l;
            h *= 1099511628211ull;
        }
        return h;
    }
};

namespace symbols {

// Lexicographic structural order on words.
bool word_less(const Word& a, const Word& b);
std::string word_plain_text(const Word& w);

} // namespace symbols

} // namespace tilecert

#endif
