#include "tilecert/symbols.hpp"

#include <cassert>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace tilecert::symbols {

namespace {

struct Entry {
    LetterKind kind;
    std::string token;          // Ordinary: the token text
    Letter base = 0;            // Marked
    std::vector<Letter> comps;  // Tile
    std::string canon;
};

// Entries live behind stable pointers; once published they are never
// mutated, so readers only need the lock to fetch the pointer.
struct Table {
    mutable std::shared_mutex mtx;
    std::vector<std::unique_ptr<Entry>> entries;
    std::unordered_map<std::string, Letter> by_canon;

    Table() {
        // ids 0 and 1 are the end markers
        add(Entry{LetterKind::LeftMark, "<", 0, {}, "<"});
        add(Entry{LetterKind::RightMark, ">", 0, {}, ">"});
    }

    Letter add(Entry e) {
        Letter id = static_cast<Letter>(entries.size());
        by_canon.emplace(e.canon, id);
        entries.push_back(std::make_unique<Entry>(std::move(e)));
        return id;
    }

    Letter lookup_or_add(Entry e) {
        {
            std::shared_lock rd(mtx);
            auto it = by_canon.find(e.canon);
            if (it != by_canon.end()) return it->second;
        }
        std::unique_lock wr(mtx);
        auto it = by_canon.find(e.canon);
        if (it != by_canon.end()) return it->second;
        return add(std::move(e));
    }

    const Entry& get(Letter l) const {
        std::shared_lock rd(mtx);
        return *entries[l];
    }
};

Table& table() {
    static Table t;
    return t;
}

} // namespace

Letter left_mark() { return 0; }
Letter right_mark() { return 1; }

namespace {

// Tokens may contain the characters the canonical key uses structurally.
std::string escape_token(std::string_view tok) {
    std::string out;
    for (char c : tok) {
        if (c == '\\' || c == '[' || c == ']' || c == ',') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

Letter intern(std::string_view token) {
    if (token.empty()) throw std::invalid_argument("empty letter token");
    Entry e;
    e.kind = LetterKind::Ordinary;
    e.token = std::string(token);
    e.canon = "'" + escape_token(e.token);
    return table().lookup_or_add(std::move(e));
}

Letter marked(Letter base) {
    Entry e;
    e.kind = LetterKind::Marked;
    e.base = base;
    e.canon = "#" + canon_text(base);
    return table().lookup_or_add(std::move(e));
}

Letter tile(int width, std::span<const Letter> components) {
    if (width < 1 || static_cast<int>(components.size()) != width)
        throw std::invalid_argument("tile width/component mismatch");
    Entry e;
    e.kind = LetterKind::Tile;
    e.comps.assign(components.begin(), components.end());
    e.canon = "[";
    for (std::size_t i = 0; i < e.comps.size(); ++i) {
        if (i) e.canon += ",";
        e.canon += canon_text(e.comps[i]);
    }
    e.canon += "]";
    return table().lookup_or_add(std::move(e));
}

LetterKind kind(Letter l) { return table().get(l).kind; }

Letter base_of(Letter l) {
    const Entry& e = table().get(l);
    assert(e.kind == LetterKind::Marked);
    return e.base;
}

int tile_width(Letter l) {
    const Entry& e = table().get(l);
    assert(e.kind == LetterKind::Tile);
    return static_cast<int>(e.comps.size());
}

std::span<const Letter> tile_components(Letter l) {
    const Entry& e = table().get(l);
    assert(e.kind == LetterKind::Tile);
    return e.comps;
}

std::string plain_text(Letter l) {
    const Entry& e = table().get(l);
    switch (e.kind) {
    case LetterKind::LeftMark: return "<";
    case LetterKind::RightMark: return ">";
    case LetterKind::Ordinary: return e.token;
    case LetterKind::Marked: return plain_text(e.base) + "#";
    case LetterKind::Tile: {
        std::string s;
        for (Letter c : e.comps) s += plain_text(c);
        return s;
    }
    }
    return {};
}

std::string tpdb_token(Letter l) {
    const Entry& e = table().get(l);
    switch (e.kind) {
    case LetterKind::LeftMark: return "L";
    case LetterKind::RightMark: return "R";
    case LetterKind::Ordinary: return e.token;
    case LetterKind::Marked: return tpdb_token(e.base) + "#";
    case LetterKind::Tile: {
        std::string s;
        for (std::size_t i = 0; i < e.comps.size(); ++i) {
            if (i) s += "_";
            s += tpdb_token(e.comps[i]);
        }
        return s;
    }
    }
    return {};
}

const std::string& canon_text(Letter l) { return table().get(l).canon; }

namespace {

Letter parse_canon(std::string_view s, std::size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("empty canonical key");
    char c = s[pos];
    if (c == '<') { ++pos; return left_mark(); }
    if (c == '>') { ++pos; return right_mark(); }
    if (c == '\'') {
        ++pos;
        std::string tok;
        while (pos < s.size()) {
            char d = s[pos];
            if (d == ',' || d == ']') break;
            if (d == '\\' && pos + 1 < s.size()) {
                tok += s[pos + 1];
                pos += 2;
                continue;
            }
            tok += d;
            ++pos;
        }
        return intern(tok);
    }
    if (c == '#') {
        ++pos;
        return marked(parse_canon(s, pos));
    }
    if (c == '[') {
        ++pos;
        std::vector<Letter> comps;
        for (;;) {
            comps.push_back(parse_canon(s, pos));
            if (pos >= s.size()) throw std::invalid_argument("unterminated tile key");
            if (s[pos] == ',') { ++pos; continue; }
            if (s[pos] == ']') { ++pos; break; }
            throw std::invalid_argument("malformed tile key");
        }
        return tile(static_cast<int>(comps.size()), comps);
    }
    throw std::invalid_argument("malformed canonical key");
}

} // namespace

Letter from_canon(std::string_view canon) {
    std::size_t pos = 0;
    Letter l = parse_canon(canon, pos);
    if (pos != canon.size()) throw std::invalid_argument("trailing junk in canonical key");
    return l;
}

bool less(Letter a, Letter b) {
    if (a == b) return false;
    return canon_text(a) < canon_text(b);
}

bool word_less(const Word& a, const Word& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return less(a[i], b[i]);
    }
    return a.size() < b.size();
}

std::string word_plain_text(const Word& w) {
    std::string s;
    for (Letter l : w) s += plain_text(l);
    return s;
}

} // namespace tilecert::symbols
