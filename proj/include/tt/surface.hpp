#pragma once

// Named surface syntax and its parser.
//
//   file    := decl*
//   decl    := "postulate" IDENT ("(" IDENT ":" ty ")")* [":" ty]
//            | "def" IDENT ":" ty ":=" tm
//   ty      := "(" IDENT ":" ty ")" "->" ty | ty1 "->" ty | ty1
//   ty1     := "Nat" | IDENT tmAtom* | "(" ty ")"
//   tm      := "\" IDENT+ "." tm | "fun" IDENT+ "=>" tm | tmApp
//   tmApp   := tmAtom+
//   tmAtom  := IDENT | "zero" | "succ" tmAtom | NUMERAL | "(" tm ")"
//            | "ind" "(" tm ";" IDENT "." ty ";" tm ";" IDENT IDENT "." tm ")"
//
// `λ` and `→` are accepted for `\` and `->`; `--` starts a line comment.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tt/errors.hpp"

namespace tt {

struct SurfaceExpr;
struct SurfaceType;
using SExpr = std::shared_ptr<const SurfaceExpr>;
using SType = std::shared_ptr<const SurfaceType>;

struct SurfaceExpr {
    struct Name {
        std::string id;
    };
    struct Lambda {
        std::string binder;
        SExpr body;
    };
    struct Apply {
        SExpr fn;
        SExpr arg;
    };
    struct ZeroLit {};
    struct SuccOf {
        SExpr pred;
    };
    struct Numeral {
        std::size_t value;
    };
    struct Induction {
        SExpr scrutinee;
        std::string motive_binder;
        SType motive;
        SExpr zcase;
        std::string pred_binder;
        std::string rec_binder;
        SExpr scase;
    };

    std::variant<Name, Lambda, Apply, ZeroLit, SuccOf, Numeral, Induction> v;
    Span span;
};

struct SurfaceType {
    struct Arrow {
        std::optional<std::string> binder; // nullopt for `A -> B`
        SType domain;
        SType codomain;
    };
    struct NatType {};
    struct Named {
        std::string id;
        std::vector<SExpr> args;
    };

    std::variant<Arrow, NatType, Named> v;
    Span span;
};

struct SurfaceParam {
    std::string name;
    SType type;
    Span span;
};

struct SurfaceDecl {
    struct Postulate {
        std::string name;
        std::vector<SurfaceParam> params;
        std::optional<SType> type; // present for term constants
    };
    struct Def {
        std::string name;
        SType type;
        SExpr body;
    };

    std::variant<Postulate, Def> v;
    Span span;
};

const std::string& decl_name(const SurfaceDecl& d);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, Span span, std::vector<std::string> expected)
        : std::runtime_error(message), span_(span), expected_(std::move(expected)) {}

    const Span& span() const { return span_; }
    SourcePos pos() const { return span_.start; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    Span span_;
    std::vector<std::string> expected_;
};

std::vector<SurfaceDecl> parse(std::string_view source);
SExpr parse_expr(std::string_view source);
SType parse_type(std::string_view source);

} // namespace tt
