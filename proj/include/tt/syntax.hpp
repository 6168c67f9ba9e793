#pragma once

// Core syntax: well-scoped terms and types with de Bruijn indices
// (index 0 = innermost binder), telescoped contexts and renamings.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tt/handle.hpp"

namespace tt {

struct TermNode;
struct TyNode;
using Term = Handle<TermNode>;
using Ty = Handle<TyNode>;

struct Var {
    std::size_t index;
    friend bool operator==(const Var&, const Var&) = default;
};
struct Lam {
    Term body;
    friend bool operator==(const Lam&, const Lam&) = default;
};
struct App {
    Term fn;
    Term arg;
    friend bool operator==(const App&, const App&) = default;
};
struct Zero {
    friend bool operator==(const Zero&, const Zero&) = default;
};
struct Succ {
    Term pred;
    friend bool operator==(const Succ&, const Succ&) = default;
};
/// ind(scrutinee; n. motive; zcase; p r. scase). In `scase`, Var 1 is the
/// predecessor and Var 0 the recursive result.
struct NatInd {
    Term scrutinee;
    Ty motive;
    Term zcase;
    Term scase;
    friend bool operator==(const NatInd&, const NatInd&) = default;
};
struct TmConst {
    std::string name;
    std::vector<Term> args;
    friend bool operator==(const TmConst&, const TmConst&) = default;
};

struct Pi {
    Ty domain;
    Ty codomain;
    friend bool operator==(const Pi&, const Pi&) = default;
};
struct Nat {
    friend bool operator==(const Nat&, const Nat&) = default;
};
struct TyConst {
    std::string name;
    std::vector<Term> args;
    friend bool operator==(const TyConst&, const TyConst&) = default;
};

struct TermNode {
    std::variant<Var, Lam, App, Zero, Succ, NatInd, TmConst> v;
};
struct TyNode {
    std::variant<Pi, Nat, TyConst> v;
};

// Builders.
Term var(std::size_t index);
Term lam(Term body);
Term app(Term fn, Term arg);
Term app(Term fn, std::initializer_list<Term> args);
Term zero();
Term succ(Term pred);
Term nat_ind(Term scrutinee, Ty motive, Term zcase, Term scase);
Term tm_const(std::string name, std::vector<Term> args = {});
Term numeral(std::size_t n);
Ty nat();
Ty pi(Ty domain, Ty codomain);
Ty ty_const(std::string name, std::vector<Term> args = {});

/// α-equivalence; with de Bruijn indices this is structural equality.
inline bool alpha_eq(const Term& a, const Term& b) { return a == b; }
inline bool alpha_eq(const Ty& a, const Ty& b) { return a == b; }

/// Node count, binders included.
std::size_t size(const Term& t);
std::size_t size(const Ty& t);

/// Debug rendering in constructor notation, e.g. `Lam(App(Var 1, Var 0))`.
std::string to_string(const Term& t);
std::string to_string(const Ty& t);

/// Maps free variable indices (relative to the term's own scope).
using VarMap = std::function<std::size_t(std::size_t)>;

Term map_vars(const Term& t, const VarMap& f);
Ty map_vars(const Ty& t, const VarMap& f);

/// Adds `amount` to every free index >= `cutoff`.
Term shift(const Term& t, std::size_t amount, std::size_t cutoff = 0);
Ty shift(const Ty& t, std::size_t amount, std::size_t cutoff = 0);

/// Simultaneous substitution for the `args.size()` innermost free
/// variables: Var i (i < n) becomes args[i]; the remaining free variables
/// are lowered by n. Arguments are scoped in the outer context.
Term substitute(const Term& t, std::span<const Term> args);
Ty substitute(const Ty& t, std::span<const Term> args);

Term subst1(const Term& body, const Term& arg);
Ty subst1(const Ty& body, const Term& arg);

/// Instantiates a telescope entry (scoped over the first `args.size()`
/// parameters, first parameter outermost) with the given arguments.
Ty instantiate_params(const Ty& t, std::span<const Term> args);

/// True when every free index is below `depth`.
bool well_scoped(const Term& t, std::size_t depth);
bool well_scoped(const Ty& t, std::size_t depth);

/// Does index `index` occur free?
bool occurs(const Term& t, std::size_t index);
bool occurs(const Ty& t, std::size_t index);

/// A telescope: entry i is scoped over entries 0..i-1. Entry 0 is the
/// outermost variable (de Bruijn level 0).
class Context {
public:
    Context() = default;
    explicit Context(std::vector<Ty> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<Ty>& entries() const { return entries_; }

    /// Type of the variable with de Bruijn index `index`, weakened to be
    /// scoped in the whole context.
    Ty type_of(std::size_t index) const;

    Context extend(Ty ty) const;
    Context extend(std::initializer_list<Ty> tys) const;

    bool well_scoped() const;

    friend bool operator==(const Context&, const Context&) = default;

private:
    std::vector<Ty> entries_;
};

/// Variable map between contexts: `map[i]` is the target index of the
/// source variable with index i.
struct Renaming {
    Context source;
    Context target;
    std::vector<std::size_t> map;

    static Renaming identity(const Context& ctx);
    /// ctx into ctx extended by `extra` (fresh variables innermost).
    static Renaming weakening(const Context& ctx, const std::vector<Ty>& extra);

    /// Type-respecting and in range; checked structurally.
    bool valid() const;

    /// Lifts under one binder of source type `ty` (scoped in `source`).
    Renaming lift(const Ty& ty) const;

    VarMap as_function() const;
};

/// `second` after `first`; requires first.target == second.source.
Renaming compose(const Renaming& second, const Renaming& first);

Term rename(const Renaming& r, const Term& t);
Ty rename(const Renaming& r, const Ty& t);

} // namespace tt
