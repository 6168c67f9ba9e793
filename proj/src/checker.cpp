#include "tt/checker.hpp"

#include <string>

#include "tt/nbe.hpp"
#include "tt/printer.hpp"

namespace tt {

namespace {

std::string show(const Signature& sig, const Context& ctx, const Ty& ty) {
    return print_nf(normalize_ty(sig, ctx, ty), default_names(ctx.size()));
}

Ty normal_ty(const Signature& sig, const Context& ctx, const Ty& ty) {
    return erase(normalize_ty(sig, ctx, ty));
}

[[noreturn]] void mismatch(const Signature& sig, const Context& ctx, ErrorCode code,
                           const Ty& expected, const Ty& actual) {
    std::string e = show(sig, ctx, expected);
    std::string a = show(sig, ctx, actual);
    TypeError err(code, "type mismatch: expected " + e + ", got " + a);
    err.with_types(std::move(e), std::move(a));
    throw err;
}

void check_at(const Signature& sig, const Context& ctx, const Term& t, const Ty& ty,
              ErrorCode on_mismatch);

void check_args(const Signature& sig, const Context& ctx, const std::string& name,
                const std::vector<Ty>& params, const std::vector<Term>& args) {
    if (params.size() != args.size())
        throw TypeError(ErrorCode::ArityMismatch, "'" + name + "' expects " +
                                                      std::to_string(params.size()) +
                                                      " argument(s), got " +
                                                      std::to_string(args.size()));
    for (std::size_t i = 0; i < args.size(); ++i)
        check(sig, ctx, args[i], instantiate_params(params[i], std::span(args.data(), i)));
}

/// Head and arguments of an application spine, arguments in order.
std::pair<Term, std::vector<Term>> spine(const Term& t) {
    std::vector<Term> args;
    Term head = t;
    while (const auto* a = head.as<App>()) {
        args.push_back(a->arg);
        head = a->fn;
    }
    return {head, std::vector<Term>(args.rbegin(), args.rend())};
}

// (\x. b) a1 ... an: the domain of x is the type of a1.
Ty infer_lam_spine(const Signature& sig, const Context& ctx, const Lam& head,
                   const std::vector<Term>& args) {
    const Ty domain = infer(sig, ctx, args.front());
    Term rest = head.body;
    for (std::size_t i = 1; i < args.size(); ++i) rest = app(rest, shift(args[i], 1));
    const Ty result = infer(sig, ctx.extend(domain), rest);
    return subst1(result, args.front());
}

Ty infer_app(const Signature& sig, const Context& ctx, const App& a) {
    const Ty fn_ty = normal_ty(sig, ctx, infer(sig, ctx, a.fn));
    const auto* p = fn_ty.as<Pi>();
    if (!p)
        throw TypeError(ErrorCode::NotAFunction,
                        "applying a term of non-function type " + show(sig, ctx, fn_ty));
    check(sig, ctx, a.arg, p->domain);
    return subst1(p->codomain, a.arg);
}

Ty infer_nat_ind(const Signature& sig, const Context& ctx, const NatInd& n) {
    check(sig, ctx, n.scrutinee, nat());
    const Context under = ctx.extend(nat());
    check_ty(sig, under, n.motive);
    check_at(sig, ctx, n.zcase, subst1(n.motive, zero()), ErrorCode::MotiveMismatch);
    const Context step = under.extend(n.motive);
    check_at(sig, step, n.scase, subst1(shift(n.motive, 2, 1), succ(var(1))),
             ErrorCode::MotiveMismatch);
    return subst1(n.motive, n.scrutinee);
}

void check_at(const Signature& sig, const Context& ctx, const Term& t, const Ty& ty,
              ErrorCode on_mismatch) {
    if (const auto* l = t.as<Lam>()) {
        const Ty expected = normal_ty(sig, ctx, ty);
        const auto* p = expected.as<Pi>();
        if (!p) {
            TypeError err(on_mismatch, "a lambda cannot have non-function type " +
                                           show(sig, ctx, expected));
            err.with_types(show(sig, ctx, expected), "function");
            throw err;
        }
        check(sig, ctx.extend(p->domain), l->body, p->codomain);
        return;
    }
    const Ty actual = infer(sig, ctx, t);
    if (!conv_ty(sig, ctx, ty, actual)) mismatch(sig, ctx, on_mismatch, ty, actual);
}

} // namespace

void check_ctx(const Signature& sig, const Context& ctx) {
    Context prefix;
    for (const auto& entry : ctx.entries()) {
        check_ty(sig, prefix, entry);
        prefix = prefix.extend(entry);
    }
}

void check_ty(const Signature& sig, const Context& ctx, const Ty& ty) {
    visit(ty, overloaded{
                  [&](const Pi& p) {
                      check_ty(sig, ctx, p.domain);
                      check_ty(sig, ctx.extend(p.domain), p.codomain);
                  },
                  [](const Nat&) {},
                  [&](const TyConst& c) {
                      const auto& decl = sig.type_constant(c.name);
                      check_args(sig, ctx, c.name, decl.params, c.args);
                  },
              });
}

Ty infer(const Signature& sig, const Context& ctx, const Term& t) {
    return visit(
        t, overloaded{
               [&](const Var& v) -> Ty {
                   if (v.index >= ctx.size())
                       throw TypeError(ErrorCode::UnboundVariable,
                                       "unbound variable index " + std::to_string(v.index));
                   return ctx.type_of(v.index);
               },
               [&](const Lam&) -> Ty {
                   throw TypeError(ErrorCode::CannotInfer,
                                   "cannot infer the type of a lambda; supply the expected type");
               },
               [&](const App& a) -> Ty {
                   auto [head, args] = spine(t);
                   if (const auto* l = head.as<Lam>()) return infer_lam_spine(sig, ctx, *l, args);
                   return infer_app(sig, ctx, a);
               },
               [](const Zero&) -> Ty { return nat(); },
               [&](const Succ& s) -> Ty {
                   check(sig, ctx, s.pred, nat());
                   return nat();
               },
               [&](const NatInd& n) -> Ty { return infer_nat_ind(sig, ctx, n); },
               [&](const TmConst& c) -> Ty {
                   const auto& decl = sig.term_constant(c.name);
                   check_args(sig, ctx, c.name, decl.params, c.args);
                   return instantiate_params(decl.result, c.args);
               },
           });
}

void check(const Signature& sig, const Context& ctx, const Term& t, const Ty& ty) {
    check_at(sig, ctx, t, ty, ErrorCode::Mismatch);
}

bool conv_ty(const Signature& sig, const Context& ctx, const Ty& a, const Ty& b) {
    return normalize_ty(sig, ctx, a) == normalize_ty(sig, ctx, b);
}

bool conv_tm(const Signature& sig, const Context& ctx, const Ty& ty, const Term& t, const Term& u) {
    return normalize_tm(sig, ctx, ty, t) == normalize_tm(sig, ctx, ty, u);
}

bool checks(const Signature& sig, const Context& ctx, const Term& t, const Ty& ty) {
    try {
        check(sig, ctx, t, ty);
        return true;
    } catch (const TypeError&) {
        return false;
    }
}

bool well_formed_ty(const Signature& sig, const Context& ctx, const Ty& ty) {
    try {
        check_ty(sig, ctx, ty);
        return true;
    } catch (const TypeError&) {
        return false;
    }
}

} // namespace tt
