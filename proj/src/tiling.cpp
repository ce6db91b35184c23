#include "tilecert/tiling.hpp"

namespace tilecert {

TileSet::TileSet(int k, std::set<Letter> tiles) : TileSet(k) {
    for (Letter t : tiles) {
        if (symbols::kind(t) != LetterKind::Tile || symbols::tile_width(t) != k)
            throw std::invalid_argument("tile width mismatch in TileSet");
    }
    tiles_ = std::move(tiles);
}

void TileSet::insert(Letter t) {
    if (symbols::kind(t) != LetterKind::Tile || symbols::tile_width(t) != k_)
        throw std::invalid_argument("tile width mismatch in TileSet");
    tiles_.insert(t);
}

Word bord(const Word& w, int k) {
    if (k < 0) throw std::invalid_argument("bord needs k >= 0");
    Word out(static_cast<std::size_t>(k), symbols::left_mark());
    out.insert(out.end(), w.begin(), w.end());
    out.insert(out.end(), static_cast<std::size_t>(k), symbols::right_mark());
    return out;
}

std::vector<Letter> tiled(const Word& w, int k) {
    if (k < 1) throw std::invalid_argument("tiled needs k >= 1");
    std::vector<Letter> out;
    if (w.size() < static_cast<std::size_t>(k)) return out;
    out.reserve(w.size() - k + 1);
    for (std::size_t i = 0; i + k <= w.size(); ++i)
        out.push_back(symbols::tile(k, std::span<const Letter>(w.data() + i, k)));
    return out;
}

std::vector<Letter> btiled(const Word& w, int k) {
    if (k < 1) throw std::invalid_argument("btiled needs k >= 1");
    return tiled(bord(w, k - 1), k);
}

TileSet btiles(const Word& w, int k) {
    TileSet ts(k);
    for (Letter t : btiled(w, k)) ts.insert(t);
    return ts;
}

bool lang_member(const TileSet& T, const Word& w) {
    for (Letter t : btiled(w, T.width()))
        if (!T.contains(t)) return false;
    return true;
}

Word tile_word(Letter t) {
    auto comps = symbols::tile_components(t);
    return Word(comps.begin(), comps.end());
}

Letter tile_of_word(const Word& w) {
    return symbols::tile(static_cast<int>(w.size()), w);
}

} // namespace tilecert
