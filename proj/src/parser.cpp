#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "tt/surface.hpp"

namespace tt {

const std::string& decl_name(const SurfaceDecl& d) {
    return std::visit([](const auto& x) -> const std::string& { return x.name; }, d.v);
}

namespace {

enum class Tok {
    Ident,
    Number,
    Postulate,
    Def,
    NatKw,
    ZeroKw,
    SuccKw,
    Ind,
    Fun,
    LParen,
    RParen,
    Colon,
    Arrow,
    Assign,
    Lambda,
    Dot,
    Semi,
    FatArrow,
    End,
};

std::string describe(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "numeral";
    case Tok::Postulate: return "'postulate'";
    case Tok::Def: return "'def'";
    case Tok::NatKw: return "'Nat'";
    case Tok::ZeroKw: return "'zero'";
    case Tok::SuccKw: return "'succ'";
    case Tok::Ind: return "'ind'";
    case Tok::Fun: return "'fun'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Colon: return "':'";
    case Tok::Arrow: return "'->'";
    case Tok::Assign: return "':='";
    case Tok::Lambda: return "'\\'";
    case Tok::Dot: return "'.'";
    case Tok::Semi: return "';'";
    case Tok::FatArrow: return "'=>'";
    case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    Span span;
};

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool is_ident_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80;
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            Token t = next();
            out.push_back(t);
            if (t.kind == Tok::End) return out;
        }
    }

private:
    static constexpr std::string_view kLambda = "\xCE\xBB"; // λ
    static constexpr std::string_view kArrow = "\xE2\x86\x92"; // →

    bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

    void advance(std::size_t n = 1) {
        for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
            const auto c = static_cast<unsigned char>(src_[pos_++]);
            if (c == '\n') {
                ++here_.line;
                here_.col = 1;
            } else if ((c & 0xC0) != 0x80) {
                ++here_.col;
            }
        }
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
                advance();
            } else if (starts_with("--")) {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                return;
            }
        }
    }

    Token make(Tok kind, std::size_t begin, SourcePos start) const {
        return {kind, std::string(src_.substr(begin, pos_ - begin)), Span{begin, pos_, start}};
    }

    Token next() {
        const std::size_t begin = pos_;
        const SourcePos start = here_;
        if (pos_ >= src_.size()) return {Tok::End, "", Span{begin, begin, start}};

        auto symbol = [&](std::string_view s, Tok kind) -> std::optional<Token> {
            if (!starts_with(s)) return std::nullopt;
            advance(s.size());
            return make(kind, begin, start);
        };
        for (auto [s, k] : {std::pair{std::string_view(":="), Tok::Assign},
                            {"->", Tok::Arrow},
                            {kArrow, Tok::Arrow},
                            {"=>", Tok::FatArrow},
                            {kLambda, Tok::Lambda},
                            {"\\", Tok::Lambda},
                            {"(", Tok::LParen},
                            {")", Tok::RParen},
                            {":", Tok::Colon},
                            {".", Tok::Dot},
                            {";", Tok::Semi}}) {
            if (auto t = symbol(s, k)) return *t;
        }

        const auto c = static_cast<unsigned char>(src_[pos_]);
        if (std::isdigit(c)) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
            return make(Tok::Number, begin, start);
        }
        if (is_ident_start(c)) {
            while (pos_ < src_.size() && is_ident_char(static_cast<unsigned char>(src_[pos_])) &&
                   !starts_with(kLambda) && !starts_with(kArrow))
                advance();
            Token t = make(Tok::Ident, begin, start);
            static const std::pair<std::string_view, Tok> keywords[] = {
                {"postulate", Tok::Postulate}, {"def", Tok::Def},   {"Nat", Tok::NatKw},
                {"zero", Tok::ZeroKw},         {"succ", Tok::SuccKw}, {"ind", Tok::Ind},
                {"fun", Tok::Fun},
            };
            for (auto [kw, k] : keywords)
                if (t.text == kw) t.kind = k;
            return t;
        }
        advance();
        throw ParseError("unexpected character '" + std::string(src_.substr(begin, pos_ - begin)) + "'",
                         Span{begin, pos_, start}, {});
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    SourcePos here_;
};

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(Lexer(src).run()) {}

    std::vector<SurfaceDecl> file() {
        std::vector<SurfaceDecl> decls;
        while (!at(Tok::End)) decls.push_back(decl());
        return decls;
    }

    SExpr whole_expr() {
        auto e = expr();
        expect(Tok::End);
        return e;
    }

    SType whole_type() {
        auto t = type();
        expect(Tok::End);
        return t;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(cur_ + ahead, tokens_.size() - 1)];
    }
    bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }

    [[noreturn]] void fail(std::vector<Tok> expected) const {
        std::vector<std::string> names;
        std::string msg = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            names.push_back(describe(expected[i]));
            if (i) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += names.back();
        }
        const Token& t = peek();
        msg += t.kind == Tok::End ? ", found end of input" : ", found '" + t.text + "'";
        throw ParseError(msg, t.span, std::move(names));
    }

    Token expect(Tok k) {
        if (!at(k)) fail({k});
        return tokens_[cur_++];
    }

    Span from(const Span& start) const {
        const Span& last = tokens_[cur_ == 0 ? 0 : cur_ - 1].span;
        return Span{start.begin, std::max(start.begin, last.end), start.start};
    }

    SurfaceDecl decl() {
        const Span start = peek().span;
        if (at(Tok::Postulate)) {
            ++cur_;
            SurfaceDecl::Postulate p;
            p.name = expect(Tok::Ident).text;
            while (at(Tok::LParen)) {
                const Span ps = peek().span;
                ++cur_;
                std::string name = expect(Tok::Ident).text;
                expect(Tok::Colon);
                auto ty = type();
                expect(Tok::RParen);
                p.params.push_back({std::move(name), std::move(ty), from(ps)});
            }
            if (at(Tok::Colon)) {
                ++cur_;
                p.type = type();
            }
            return {std::move(p), from(start)};
        }
        if (at(Tok::Def)) {
            ++cur_;
            SurfaceDecl::Def d;
            d.name = expect(Tok::Ident).text;
            expect(Tok::Colon);
            d.type = type();
            expect(Tok::Assign);
            d.body = expr();
            return {std::move(d), from(start)};
        }
        fail({Tok::Postulate, Tok::Def});
    }

    SType type() {
        const Span start = peek().span;
        if (at(Tok::LParen) && at(Tok::Ident, 1) && at(Tok::Colon, 2)) {
            cur_ += 1;
            std::string binder = expect(Tok::Ident).text;
            expect(Tok::Colon);
            auto dom = type();
            expect(Tok::RParen);
            expect(Tok::Arrow);
            auto cod = type();
            return std::make_shared<const SurfaceType>(
                SurfaceType{SurfaceType::Arrow{std::move(binder), std::move(dom), std::move(cod)},
                            from(start)});
        }
        auto dom = type1();
        if (at(Tok::Arrow)) {
            ++cur_;
            auto cod = type();
            return std::make_shared<const SurfaceType>(
                SurfaceType{SurfaceType::Arrow{std::nullopt, std::move(dom), std::move(cod)}, from(start)});
        }
        return dom;
    }

    SType type1() {
        const Span start = peek().span;
        if (at(Tok::NatKw)) {
            ++cur_;
            return std::make_shared<const SurfaceType>(SurfaceType{SurfaceType::NatType{}, from(start)});
        }
        if (at(Tok::Ident)) {
            std::string id = tokens_[cur_++].text;
            std::vector<SExpr> args;
            while (starts_atom()) args.push_back(atom());
            return std::make_shared<const SurfaceType>(
                SurfaceType{SurfaceType::Named{std::move(id), std::move(args)}, from(start)});
        }
        if (at(Tok::LParen)) {
            ++cur_;
            auto t = type();
            expect(Tok::RParen);
            return t;
        }
        fail({Tok::NatKw, Tok::Ident, Tok::LParen});
    }

    bool starts_atom() const {
        switch (peek().kind) {
        case Tok::Ident:
        case Tok::ZeroKw:
        case Tok::SuccKw:
        case Tok::Number:
        case Tok::LParen:
        case Tok::Ind: return true;
        default: return false;
        }
    }

    SExpr node(SurfaceExpr e) { return std::make_shared<const SurfaceExpr>(std::move(e)); }

    SExpr expr() {
        const Span start = peek().span;
        if (at(Tok::Lambda) || at(Tok::Fun)) {
            const bool arrow_style = at(Tok::Fun);
            ++cur_;
            std::vector<Token> binders{expect(Tok::Ident)};
            while (at(Tok::Ident)) binders.push_back(tokens_[cur_++]);
            expect(arrow_style ? Tok::FatArrow : Tok::Dot);
            SExpr body = expr();
            for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
                const Span s{it->span.begin, body->span.end, it->span.start};
                body = node({SurfaceExpr::Lambda{it->text, body}, it == binders.rend() - 1 ? from(start) : s});
            }
            return body;
        }
        if (!starts_atom()) fail({Tok::Lambda, Tok::Fun, Tok::Ident, Tok::ZeroKw, Tok::SuccKw, Tok::Number,
                                  Tok::LParen, Tok::Ind});
        SExpr e = atom();
        while (starts_atom()) {
            SExpr arg = atom();
            e = node({SurfaceExpr::Apply{e, arg}, from(start)});
        }
        return e;
    }

    SExpr atom() {
        const Span start = peek().span;
        switch (peek().kind) {
        case Tok::Ident: {
            std::string id = tokens_[cur_++].text;
            return node({SurfaceExpr::Name{std::move(id)}, from(start)});
        }
        case Tok::ZeroKw: ++cur_; return node({SurfaceExpr::ZeroLit{}, from(start)});
        case Tok::SuccKw: {
            ++cur_;
            if (!starts_atom())
                fail({Tok::Ident, Tok::ZeroKw, Tok::SuccKw, Tok::Number, Tok::LParen, Tok::Ind});
            SExpr pred = atom();
            return node({SurfaceExpr::SuccOf{pred}, from(start)});
        }
        case Tok::Number: {
            const Token& t = tokens_[cur_++];
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
            if (ec != std::errc{}) throw ParseError("numeral out of range", t.span, {});
            return node({SurfaceExpr::Numeral{value}, from(start)});
        }
        case Tok::LParen: {
            ++cur_;
            SExpr inner = expr();
            expect(Tok::RParen);
            return inner;
        }
        case Tok::Ind: {
            ++cur_;
            expect(Tok::LParen);
            SurfaceExpr::Induction ind;
            ind.scrutinee = expr();
            expect(Tok::Semi);
            ind.motive_binder = expect(Tok::Ident).text;
            expect(Tok::Dot);
            ind.motive = type();
            expect(Tok::Semi);
            ind.zcase = expr();
            expect(Tok::Semi);
            ind.pred_binder = expect(Tok::Ident).text;
            ind.rec_binder = expect(Tok::Ident).text;
            expect(Tok::Dot);
            ind.scase = expr();
            expect(Tok::RParen);
            return node({std::move(ind), from(start)});
        }
        default: fail({Tok::Ident, Tok::ZeroKw, Tok::SuccKw, Tok::Number, Tok::LParen, Tok::Ind});
        }
    }

    std::vector<Token> tokens_;
    std::size_t cur_ = 0;
};

} // namespace

std::vector<SurfaceDecl> parse(std::string_view source) { return Parser(source).file(); }
SExpr parse_expr(std::string_view source) { return Parser(source).whole_expr(); }
SType parse_type(std::string_view source) { return Parser(source).whole_type(); }

} // namespace tt
