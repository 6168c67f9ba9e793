#include "tt/oracle.hpp"

#include <array>
#include <string>

#include "tt/errors.hpp"

namespace tt {

namespace {

std::optional<Term> contract(const Term& t) {
    if (const auto* a = t.as<App>()) {
        if (const auto* l = a->fn.as<Lam>()) return subst1(l->body, a->arg);
        return std::nullopt;
    }
    if (const auto* n = t.as<NatInd>()) {
        if (n->scrutinee.is<Zero>()) return n->zcase;
        if (const auto* s = n->scrutinee.as<Succ>()) {
            const Term rec = nat_ind(s->pred, n->motive, n->zcase, n->scase);
            const std::array<Term, 2> args{rec, s->pred}; // Var 0 = result, Var 1 = predecessor
            return substitute(n->scase, args);
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Term>> step_args(const Signature& sig, const std::vector<Term>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (auto r = step(sig, args[i])) {
            auto out = args;
            out[i] = *r;
            return out;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Term> step(const Signature& sig, const Term& t) {
    if (auto r = contract(t)) return r;
    return visit(
        t, overloaded{
               [](const Var&) -> std::optional<Term> { return std::nullopt; },
               [&](const Lam& l) -> std::optional<Term> {
                   if (auto b = step(sig, l.body)) return lam(*b);
                   return std::nullopt;
               },
               [&](const App& a) -> std::optional<Term> {
                   if (auto f = step(sig, a.fn)) return app(*f, a.arg);
                   if (auto x = step(sig, a.arg)) return app(a.fn, *x);
                   return std::nullopt;
               },
               [](const Zero&) -> std::optional<Term> { return std::nullopt; },
               [&](const Succ& s) -> std::optional<Term> {
                   if (auto p = step(sig, s.pred)) return succ(*p);
                   return std::nullopt;
               },
               [&](const NatInd& n) -> std::optional<Term> {
                   if (auto x = step(sig, n.scrutinee)) return nat_ind(*x, n.motive, n.zcase, n.scase);
                   if (auto m = step(sig, n.motive)) return nat_ind(n.scrutinee, *m, n.zcase, n.scase);
                   if (auto z = step(sig, n.zcase)) return nat_ind(n.scrutinee, n.motive, *z, n.scase);
                   if (auto s = step(sig, n.scase)) return nat_ind(n.scrutinee, n.motive, n.zcase, *s);
                   return std::nullopt;
               },
               [&](const TmConst& c) -> std::optional<Term> {
                   if (auto args = step_args(sig, c.args)) return tm_const(c.name, *args);
                   return std::nullopt;
               },
           });
}

std::optional<Ty> step(const Signature& sig, const Ty& t) {
    return visit(t, overloaded{
                        [&](const Pi& p) -> std::optional<Ty> {
                            if (auto d = step(sig, p.domain)) return pi(*d, p.codomain);
                            if (auto c = step(sig, p.codomain)) return pi(p.domain, *c);
                            return std::nullopt;
                        },
                        [](const Nat&) -> std::optional<Ty> { return std::nullopt; },
                        [&](const TyConst& c) -> std::optional<Ty> {
                            if (auto args = step_args(sig, c.args)) return ty_const(c.name, *args);
                            return std::nullopt;
                        },
                    });
}

namespace {

template <class T>
T reduce_impl(const Signature& sig, T t, std::size_t& fuel) {
    while (auto next = step(sig, t)) {
        if (fuel == 0) throw FuelExhausted("oracle ran out of fuel: " + to_string(t));
        --fuel;
        t = *next;
    }
    return t;
}

// η-expansion of β/ι-normal terms. Type heads are syntactic in this
// theory (no type-level computation), so shapes can be read off directly.
class Expander {
public:
    explicit Expander(const Signature& sig) : sig_(sig) {}

    Term expand(const Context& ctx, const Ty& ty, const Term& t) const {
        if (const auto* p = ty.as<Pi>()) {
            const Context inner = ctx.extend(p->domain);
            if (const auto* l = t.as<Lam>()) return lam(expand(inner, p->codomain, l->body));
            return lam(expand(inner, p->codomain, app(shift(t, 1), var(0))));
        }
        if (ty.is<Nat>()) {
            if (t.is<Zero>()) return t;
            if (const auto* s = t.as<Succ>()) return succ(expand(ctx, ty, s->pred));
        }
        return neutral(ctx, t).first;
    }

    Ty expand_ty(const Context& ctx, const Ty& ty) const {
        return visit(ty, overloaded{
                             [&](const Pi& p) {
                                 return pi(expand_ty(ctx, p.domain),
                                           expand_ty(ctx.extend(p.domain), p.codomain));
                             },
                             [&](const Nat&) { return ty; },
                             [&](const TyConst& c) {
                                 const auto& decl = sig_.type_constant(c.name);
                                 return ty_const(c.name, expand_args(ctx, decl.params, c.args));
                             },
                         });
    }

private:
    std::pair<Term, Ty> neutral(const Context& ctx, const Term& t) const {
        return visit(
            t, overloaded{
                   [&](const Var& v) -> std::pair<Term, Ty> { return {t, ctx.type_of(v.index)}; },
                   [&](const App& a) -> std::pair<Term, Ty> {
                       auto [fn, fn_ty] = neutral(ctx, a.fn);
                       const auto* p = fn_ty.as<Pi>();
                       if (!p) throw InvariantError("oracle: application of non-function " + to_string(t));
                       return {app(fn, expand(ctx, p->domain, a.arg)), subst1(p->codomain, a.arg)};
                   },
                   [&](const NatInd& n) -> std::pair<Term, Ty> {
                       auto scrutinee = neutral(ctx, n.scrutinee).first;
                       const Context under = ctx.extend(nat());
                       const Context step_ctx = under.extend(n.motive);
                       return {nat_ind(scrutinee, expand_ty(under, n.motive),
                                       expand(ctx, subst1(n.motive, zero()), n.zcase),
                                       expand(step_ctx, subst1(shift(n.motive, 2, 1), succ(var(1))),
                                              n.scase)),
                               subst1(n.motive, n.scrutinee)};
                   },
                   [&](const TmConst& c) -> std::pair<Term, Ty> {
                       const auto& decl = sig_.term_constant(c.name);
                       return {tm_const(c.name, expand_args(ctx, decl.params, c.args)),
                               instantiate_params(decl.result, c.args)};
                   },
                   [&](const auto&) -> std::pair<Term, Ty> {
                       throw InvariantError("oracle: expected a neutral term, got " + to_string(t));
                   },
               });
    }

    std::vector<Term> expand_args(const Context& ctx, const std::vector<Ty>& params,
                                  const std::vector<Term>& args) const {
        std::vector<Term> out;
        out.reserve(args.size());
        for (std::size_t i = 0; i < args.size(); ++i)
            out.push_back(
                expand(ctx, instantiate_params(params[i], std::span(args.data(), i)), args[i]));
        return out;
    }

    const Signature& sig_;
};

} // namespace

Term reduce(const Signature& sig, const Term& t, std::size_t& fuel) { return reduce_impl(sig, t, fuel); }
Ty reduce(const Signature& sig, const Ty& t, std::size_t& fuel) { return reduce_impl(sig, t, fuel); }

Term rw_normalize(const Signature& sig, const Context& ctx, const Ty& ty, const Term& t,
                  std::size_t fuel) {
    const Term reduced = reduce(sig, t, fuel);
    return Expander(sig).expand(ctx, ty, reduced);
}

Ty rw_normalize_ty(const Signature& sig, const Context& ctx, const Ty& ty, std::size_t fuel) {
    return Expander(sig).expand_ty(ctx, reduce(sig, ty, fuel));
}

bool oracle_equal(const Signature& sig, const Context& ctx, const Ty& ty, const Term& t,
                  const Term& u, std::size_t fuel) {
    return alpha_eq(rw_normalize(sig, ctx, ty, t, fuel), rw_normalize(sig, ctx, ty, u, fuel));
}

} // namespace tt
