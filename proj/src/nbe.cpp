#include "tt/nbe.hpp"

#include <string>

#include "tt/errors.hpp"

namespace tt {

namespace {

Env extended(Env env, const Value& v) {
    env.push_back(v);
    return env;
}

const Value& lookup_var(const Env& env, std::size_t index) {
    if (index >= env.size())
        throw InvariantError("eval: variable index " + std::to_string(index) +
                             " outside environment of size " + std::to_string(env.size()));
    return env[env.size() - 1 - index];
}

std::vector<Value> eval_all(const Signature& sig, const Env& env, const std::vector<Term>& ts) {
    std::vector<Value> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(eval(sig, env, t));
    return out;
}

/// Semantic types of a telescope instantiated by `args`, one per argument.
std::vector<SemTy> telescope_types(const Signature& sig, const std::vector<Ty>& params,
                                   const std::vector<Value>& args) {
    if (params.size() != args.size()) throw InvariantError("constant arity mismatch");
    std::vector<SemTy> out;
    out.reserve(params.size());
    Env env;
    for (std::size_t i = 0; i < params.size(); ++i) {
        out.push_back(eval_ty(sig, env, params[i]));
        env.push_back(args[i]);
    }
    return out;
}

std::vector<NfTm> reify_args(const Signature& sig, std::size_t depth, const std::vector<Ty>& params,
                             const std::vector<Value>& args) {
    const auto types = telescope_types(sig, params, args);
    std::vector<NfTm> out;
    out.reserve(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) out.push_back(reify(sig, depth, types[i], args[i]));
    return out;
}

Value eval_nat_ind(const Signature& sig, const Value& scrutinee, const TyClosure& motive,
              const Value& zcase, const BiClosure& scase) {
    return visit(scrutinee,
                 overloaded{
                     [&](const VZero&) { return zcase; },
                     [&](const VSucc& s) {
                         const Value rec = eval_nat_ind(sig, s.pred, motive, zcase, scase);
                         return instantiate(sig, scase, s.pred, rec);
                     },
                     [&](const VNe& n) {
                         return reflect(instantiate(sig, motive, scrutinee),
                                        NNatInd{n.ne, motive, zcase, scase});
                     },
                     [](const VLam&) -> Value {
                         throw InvariantError("induction on a function value");
                     },
                 });
}

} // namespace

SemTy eval_ty(const Signature& sig, const Env& env, const Ty& ty) {
    return visit(ty, overloaded{
                         [&](const Pi& p) -> SemTy {
                             return DPi{eval_ty(sig, env, p.domain), TyClosure{env, p.codomain}};
                         },
                         [](const Nat&) -> SemTy { return DNat{}; },
                         [&](const TyConst& c) -> SemTy {
                             return DConst{c.name, eval_all(sig, env, c.args)};
                         },
                     });
}

Value eval(const Signature& sig, const Env& env, const Term& t) {
    return visit(t, overloaded{
                        [&](const Var& v) { return lookup_var(env, v.index); },
                        [&](const Lam& l) -> Value { return VLam{TmClosure{env, l.body}}; },
                        [&](const App& a) {
                            return apply(sig, eval(sig, env, a.fn), eval(sig, env, a.arg));
                        },
                        [](const Zero&) -> Value { return VZero{}; },
                        [&](const Succ& s) -> Value { return VSucc{eval(sig, env, s.pred)}; },
                        [&](const NatInd& n) {
                            return eval_nat_ind(sig, eval(sig, env, n.scrutinee),
                                           TyClosure{env, n.motive}, eval(sig, env, n.zcase),
                                           BiClosure{env, n.scase});
                        },
                        [&](const TmConst& c) {
                            const auto& decl = sig.term_constant(c.name);
                            auto args = eval_all(sig, env, c.args);
                            const SemTy result = eval_ty(sig, args, decl.result);
                            return reflect(result, NConst{c.name, std::move(args)});
                        },
                    });
}

Value apply(const Signature& sig, const Value& fn, const Value& arg) {
    const auto* lam = fn.as<VLam>();
    if (!lam) throw InvariantError("apply: not a function value: " + to_string(fn));
    return std::visit(overloaded{
                          [&](const TmClosure& c) { return eval(sig, extended(c.env, arg), c.body); },
                          [&](const ReflectClosure& c) {
                              return reflect(instantiate(sig, c.codomain, arg),
                                             NApp{c.head, arg, c.domain});
                          },
                      },
                      lam->closure);
}

SemTy instantiate(const Signature& sig, const TyClosure& clo, const Value& arg) {
    return eval_ty(sig, extended(clo.env, arg), clo.body);
}

Value instantiate(const Signature& sig, const BiClosure& clo, const Value& pred, const Value& rec) {
    Env env = clo.env;
    env.push_back(pred);
    env.push_back(rec);
    return eval(sig, env, clo.body);
}

Value reflect(const SemTy& ty, Neutral ne) {
    return visit(ty, overloaded{
                         [&](const DPi& p) -> Value {
                             return VLam{ReflectClosure{std::move(ne), p.domain, p.codomain}};
                         },
                         [&](const DNat&) -> Value { return VNe{ty, std::move(ne)}; },
                         [&](const DConst&) -> Value { return VNe{ty, std::move(ne)}; },
                     });
}

NfTm reify(const Signature& sig, std::size_t depth, const SemTy& ty, const Value& v) {
    return visit(
        ty,
        overloaded{
            [&](const DPi& p) -> NfTm {
                const Value x = var_value(p.domain, depth);
                return LamNf{reify(sig, depth + 1, instantiate(sig, p.codomain, x), apply(sig, v, x))};
            },
            [&](const DNat&) -> NfTm {
                return visit(v, overloaded{
                                    [](const VZero&) -> NfTm { return ZeroNf{}; },
                                    [&](const VSucc& s) -> NfTm {
                                        return SuccNf{reify(sig, depth, ty, s.pred)};
                                    },
                                    [&](const VNe& n) -> NfTm { return NeNat{reify_ne(sig, depth, n.ne)}; },
                                    [&](const VLam&) -> NfTm {
                                        throw InvariantError("reify: function value at Nat");
                                    },
                                });
            },
            [&](const DConst& c) -> NfTm {
                const auto* n = v.as<VNe>();
                if (!n) throw InvariantError("reify: non-neutral value at type constant " + c.name);
                const auto& decl = sig.type_constant(c.name);
                return NeConst{c.name, reify_args(sig, depth, decl.params, c.args),
                               reify_ne(sig, depth, n->ne)};
            },
        });
}

NeTm reify_ne(const Signature& sig, std::size_t depth, const Neutral& ne) {
    return visit(
        ne,
        overloaded{
            [&](const NVar& v) -> NeTm {
                if (v.level >= depth)
                    throw InvariantError("scope escape: level " + std::to_string(v.level) +
                                         " at depth " + std::to_string(depth));
                return VarNe{depth - 1 - v.level};
            },
            [&](const NApp& a) -> NeTm {
                return AppNe{reify_ne(sig, depth, a.fn), reify(sig, depth, a.arg_type, a.arg)};
            },
            [&](const NNatInd& n) -> NeTm {
                const SemTy nat_ty = DNat{};
                const Value x = var_value(nat_ty, depth);
                NfTy motive = nfty(sig, depth + 1, instantiate(sig, n.motive, x));
                NfTm zcase = reify(sig, depth, instantiate(sig, n.motive, VZero{}), n.zcase);
                const Value p = var_value(nat_ty, depth);
                const Value r = var_value(instantiate(sig, n.motive, p), depth + 1);
                NfTm scase = reify(sig, depth + 2, instantiate(sig, n.motive, VSucc{p}),
                                   instantiate(sig, n.scase, p, r));
                return NatIndNe{reify_ne(sig, depth, n.scrutinee), std::move(motive),
                                std::move(zcase), std::move(scase)};
            },
            [&](const NConst& c) -> NeTm {
                const auto& decl = sig.term_constant(c.name);
                return TmConstNe{c.name, reify_args(sig, depth, decl.params, c.args)};
            },
        });
}

NfTy nfty(const Signature& sig, std::size_t depth, const SemTy& ty) {
    return visit(ty, overloaded{
                         [&](const DPi& p) -> NfTy {
                             const Value x = var_value(p.domain, depth);
                             return FunNf{nfty(sig, depth, p.domain),
                                          nfty(sig, depth + 1, instantiate(sig, p.codomain, x))};
                         },
                         [](const DNat&) -> NfTy { return NatNf{}; },
                         [&](const DConst& c) -> NfTy {
                             const auto& decl = sig.type_constant(c.name);
                             return TyConstNf{c.name, reify_args(sig, depth, decl.params, c.args)};
                         },
                     });
}

Env id_env(const Signature& sig, const Context& ctx) {
    Env env;
    env.reserve(ctx.size());
    for (std::size_t level = 0; level < ctx.size(); ++level) {
        const SemTy ty = eval_ty(sig, env, ctx.entries()[level]);
        env.push_back(var_value(ty, level));
    }
    return env;
}

NfTm normalize_tm(const Signature& sig, const Context& ctx, const Ty& ty, const Term& t) {
    const Env env = id_env(sig, ctx);
    return reify(sig, ctx.size(), eval_ty(sig, env, ty), eval(sig, env, t));
}

NfTy normalize_ty(const Signature& sig, const Context& ctx, const Ty& ty) {
    const Env env = id_env(sig, ctx);
    return nfty(sig, ctx.size(), eval_ty(sig, env, ty));
}

} // namespace tt
