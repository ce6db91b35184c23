#include "tilecert/srs.hpp"

#include <algorithm>
#include <sstream>

namespace tilecert {

bool rule_less(const Rule& a, const Rule& b) {
    if (a.lhs != b.lhs) return symbols::word_less(a.lhs, b.lhs);
    return symbols::word_less(a.rhs, b.rhs);
}

RelProblem::RelProblem(std::vector<Rule> strict, std::vector<Rule> weak) {
    auto canonize = [](std::vector<Rule>& rs) {
        std::sort(rs.begin(), rs.end(), rule_less);
        rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    };
    canonize(strict);
    canonize(weak);
    // duplicates across components land in strict
    std::vector<Rule> weak_only;
    for (const Rule& r : weak) {
        if (!std::binary_search(strict.begin(), strict.end(), r, rule_less))
            weak_only.push_back(r);
    }
    strict_ = std::move(strict);
    weak_ = std::move(weak_only);

    std::set<Letter> occ;
    for (const auto* rs : {&strict_, &weak_}) {
        for (const Rule& r : *rs) {
            occ.insert(r.lhs.begin(), r.lhs.end());
            occ.insert(r.rhs.begin(), r.rhs.end());
        }
    }
    alphabet_.assign(occ.begin(), occ.end());
    std::sort(alphabet_.begin(), alphabet_.end(), symbols::less);
}

SizeTriple size_triple(const RelProblem& p) {
    return {p.strict().size(), p.weak().size(), p.alphabet().size()};
}

std::string format_size(const SizeTriple& t) {
    std::ostringstream os;
    os << "(" << t[0] << "/" << t[1] << "," << t[2] << ")";
    return os.str();
}

namespace {

struct Token {
    enum Kind { Word, LParen, RParen, Comma, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && is_space(text_[pos_])) advance();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::End, "", line, col};
        char c = text_[pos_];
        if (c == '(') { advance(); return {Token::LParen, "(", line, col}; }
        if (c == ')') { advance(); return {Token::RParen, ")", line, col}; }
        if (c == ',') { advance(); return {Token::Comma, ",", line, col}; }
        std::string tok;
        while (pos_ < text_.size()) {
            char d = text_[pos_];
            if (is_space(d) || d == '(' || d == ')' || d == ',') break;
            tok += d;
            advance();
        }
        return {Token::Word, std::move(tok), line, col};
    }

private:
    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
    }
    void advance() {
        if (text_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
        ++pos_;
    }
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

[[noreturn]] void fail(const std::string& msg, const Token& t) {
    std::ostringstream os;
    os << msg << " at line " << t.line << ", column " << t.col;
    throw ParseError(os.str(), t.line, t.col);
}

} // namespace

RelProblem parse_tpdb(std::string_view text) {
    Lexer lex(text);
    std::vector<Rule> strict, weak;
    for (;;) {
        Token t = lex.next();
        if (t.kind == Token::End) break;
        if (t.kind != Token::LParen) fail("expected '('", t);
        Token name = lex.next();
        if (name.kind != Token::Word) fail("expected section name", name);
        if (name.text == "VAR")
            fail("(VAR ...) sections are not supported, SRS problems are ground", name);
        if (name.text == "COMMENT") {
            int depth = 1;
            while (depth > 0) {
                Token u = lex.next();
                if (u.kind == Token::End) fail("unterminated COMMENT section", u);
                if (u.kind == Token::LParen) ++depth;
                if (u.kind == Token::RParen) --depth;
            }
            continue;
        }
        if (name.text != "RULES") fail("unknown section '" + name.text + "'", name);

        // RULES body: rule ("," rule)*; rule = word ("->" | "->=") word
        Word side;
        Word lhs;
        bool have_arrow = false, weak_arrow = false, any_token = false;
        auto flush_rule = [&](const Token& at) {
            if (!any_token) return; // empty body "(RULES )"
            if (!have_arrow) fail("rule without arrow", at);
            if (weak_arrow) weak.push_back({std::move(lhs), std::move(side)});
            else strict.push_back({std::move(lhs), std::move(side)});
            lhs.clear();
            side.clear();
            have_arrow = false;
            weak_arrow = false;
            any_token = false;
        };
        for (;;) {
            Token u = lex.next();
            if (u.kind == Token::End) fail("unterminated RULES section", u);
            if (u.kind == Token::RParen) { flush_rule(u); break; }
            if (u.kind == Token::Comma) { flush_rule(u); any_token = true; continue; }
            if (u.kind == Token::LParen) fail("unexpected '(' inside RULES", u);
            any_token = true;
            if (u.text == "->=" || u.text == "->") {
                if (have_arrow) fail("second arrow in rule", u);
                have_arrow = true;
                weak_arrow = (u.text == "->=");
                lhs = std::move(side);
                side.clear();
            } else {
                side.push_back(symbols::intern(u.text));
            }
        }
    }
    return RelProblem(std::move(strict), std::move(weak));
}

namespace {

void render_rule(std::ostream& os, const Rule& r, bool weak) {
    for (Letter l : r.lhs) os << symbols::tpdb_token(l) << " ";
    os << (weak ? "->=" : "->");
    for (Letter l : r.rhs) os << " " << symbols::tpdb_token(l);
}

} // namespace

std::string render_tpdb(const RelProblem& p) {
    std::ostringstream os;
    os << "(RULES ";
    bool first = true;
    for (const Rule& r : p.strict()) {
        if (!first) os << ", ";
        render_rule(os, r, false);
        first = false;
    }
    for (const Rule& r : p.weak()) {
        if (!first) os << ", ";
        render_rule(os, r, true);
        first = false;
    }
    os << ")";
    return os.str();
}

std::set<Word> rewrite_steps(const std::vector<Rule>& rules, const Word& w) {
    std::set<Word> out;
    for (const Rule& r : rules) {
        if (r.lhs.size() > w.size()) continue;
        for (std::size_t i = 0; i + r.lhs.size() <= w.size(); ++i) {
            if (!std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + i)) continue;
            Word v;
            v.reserve(w.size() - r.lhs.size() + r.rhs.size());
            v.insert(v.end(), w.begin(), w.begin() + i);
            v.insert(v.end(), r.rhs.begin(), r.rhs.end());
            v.insert(v.end(), w.begin() + i + r.lhs.size(), w.end());
            out.insert(std::move(v));
        }
    }
    return out;
}

Word make_word(std::initializer_list<Letter> ls) { return Word(ls); }

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool is_prefix(const Word& pre, const Word& w) {
    return pre.size() <= w.size() && std::equal(pre.begin(), pre.end(), w.begin());
}

bool is_suffix(const Word& suf, const Word& w) {
    return suf.size() <= w.size() && std::equal(suf.rbegin(), suf.rend(), w.rbegin());
}

} // namespace tilecert
