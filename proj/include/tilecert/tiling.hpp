#ifndef TILECERT_TILING_HPP
#define TILECERT_TILING_HPP

#include "tilecert/srs.hpp"
#include "tilecert/symbols.hpp"

#include <set>
#include <string>

namespace tilecert {

// A set of width-k tiles. Tiles are interned letters of kind Tile, so the
// set stores letter ids. The width is carried even when the set is empty;
// mixing widths is a checked failure.
class TileSet {
public:
    explicit TileSet(int k) : k_(k) {
        if (k < 1) throw std::invalid_argument("tile width must be >= 1");
    }
    TileSet(int k, std::set<Letter> tiles);

    int width() const { return k_; }
    const std::set<Letter>& tiles() const { return tiles_; }
    bool contains(Letter t) const { return tiles_.count(t) != 0; }
    std::size_t size() const { return tiles_.size(); }

    void insert(Letter t);

    bool operator==(const TileSet& o) const { return k_ == o.k_ && tiles_ == o.tiles_; }

private:
    int k_;
    std::set<Letter> tiles_;
};

// The k-bordered version of w: k left markers, w, k right markers.
Word bord(const Word& w, int k);

// The width-k factors of w, in order; empty if |w| < k. Tiles are interned.
std::vector<Letter> tiled(const Word& w, int k);

// tiled(bord(w, k-1), k); always has |w|+k-1 elements.
std::vector<Letter> btiled(const Word& w, int k);

// The set of tiles of btiled(w, k).
TileSet btiles(const Word& w, int k);

// Membership in the strictly locally testable language of T:
// true iff btiles(w, T.width()) is a subset of T.
bool lang_member(const TileSet& T, const Word& w);

// The word spelled by a tile (its components).
Word tile_word(Letter t);

// Interns the width-|w| tile spelled by w.
Letter tile_of_word(const Word& w);

} // namespace tilecert

#endif
