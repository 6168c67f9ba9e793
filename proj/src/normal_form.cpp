#include "tt/normal_form.hpp"

#include <sstream>

#include "tt/errors.hpp"
#include "tt/nbe.hpp"

namespace tt {

namespace {

template <class N>
std::vector<Term> erase_all(const std::vector<N>& ns) {
    std::vector<Term> out;
    out.reserve(ns.size());
    for (const auto& n : ns) out.push_back(erase(n));
    return out;
}

} // namespace

Ty erase(const NfTy& n) {
    return visit(n, overloaded{
                        [](const FunNf& f) { return pi(erase(f.domain), erase(f.codomain)); },
                        [](const NatNf&) { return nat(); },
                        [](const TyConstNf& c) { return ty_const(c.name, erase_all(c.args)); },
                    });
}

Term erase(const NfTm& n) {
    return visit(n, overloaded{
                        [](const LamNf& l) { return lam(erase(l.body)); },
                        [](const ZeroNf&) { return zero(); },
                        [](const SuccNf& s) { return succ(erase(s.pred)); },
                        [](const NeNat& e) { return erase(e.ne); },
                        [](const NeConst& e) { return erase(e.ne); },
                    });
}

Term erase(const NeTm& n) {
    return visit(n, overloaded{
                        [](const VarNe& v) { return var(v.index); },
                        [](const AppNe& a) { return app(erase(a.fn), erase(a.arg)); },
                        [](const NatIndNe& i) {
                            return nat_ind(erase(i.scrutinee), erase(i.motive), erase(i.zcase),
                                           erase(i.scase));
                        },
                        [](const TmConstNe& c) { return tm_const(c.name, erase_all(c.args)); },
                    });
}

namespace {

void render(std::ostream& os, const NfTy& n);
void render(std::ostream& os, const NfTm& n);
void render(std::ostream& os, const NeTm& n);

void render_list(std::ostream& os, const std::vector<NfTm>& ns) {
    os << '[';
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (i) os << ", ";
        render(os, ns[i]);
    }
    os << ']';
}

void render(std::ostream& os, const NfTy& n) {
    visit(n, overloaded{
                 [&](const FunNf& f) {
                     os << "FunNf(";
                     render(os, f.domain);
                     os << ", ";
                     render(os, f.codomain);
                     os << ')';
                 },
                 [&](const NatNf&) { os << "NatNf"; },
                 [&](const TyConstNf& c) {
                     os << "TyConstNf(" << c.name << ", ";
                     render_list(os, c.args);
                     os << ')';
                 },
             });
}

void render(std::ostream& os, const NfTm& n) {
    visit(n, overloaded{
                 [&](const LamNf& l) {
                     os << "LamNf(";
                     render(os, l.body);
                     os << ')';
                 },
                 [&](const ZeroNf&) { os << "ZeroNf"; },
                 [&](const SuccNf& s) {
                     os << "SuccNf(";
                     render(os, s.pred);
                     os << ')';
                 },
                 [&](const NeNat& e) {
                     os << "NeNat(";
                     render(os, e.ne);
                     os << ')';
                 },
                 [&](const NeConst& e) {
                     os << "NeConst(" << e.name << ", ";
                     render_list(os, e.index);
                     os << ", ";
                     render(os, e.ne);
                     os << ')';
                 },
             });
}

void render(std::ostream& os, const NeTm& n) {
    visit(n, overloaded{
                 [&](const VarNe& v) { os << "VarNe " << v.index; },
                 [&](const AppNe& a) {
                     os << "AppNe(";
                     render(os, a.fn);
                     os << ", ";
                     render(os, a.arg);
                     os << ')';
                 },
                 [&](const NatIndNe& i) {
                     os << "NatIndNe(";
                     render(os, i.scrutinee);
                     os << ", ";
                     render(os, i.motive);
                     os << ", ";
                     render(os, i.zcase);
                     os << ", ";
                     render(os, i.scase);
                     os << ')';
                 },
                 [&](const TmConstNe& c) {
                     os << "TmConstNe(" << c.name << ", ";
                     render_list(os, c.args);
                     os << ')';
                 },
             });
}

} // namespace

std::string to_string(const NfTy& n) {
    std::ostringstream os;
    render(os, n);
    return os.str();
}
std::string to_string(const NfTm& n) {
    std::ostringstream os;
    render(os, n);
    return os.str();
}
std::string to_string(const NeTm& n) {
    std::ostringstream os;
    render(os, n);
    return os.str();
}

namespace {

// Variable maps under `depth` binders.
NfTy remap(const NfTy& n, const VarMap& f, std::size_t depth);
NfTm remap(const NfTm& n, const VarMap& f, std::size_t depth);
NeTm remap(const NeTm& n, const VarMap& f, std::size_t depth);

std::vector<NfTm> remap_all(const std::vector<NfTm>& ns, const VarMap& f, std::size_t depth) {
    std::vector<NfTm> out;
    out.reserve(ns.size());
    for (const auto& n : ns) out.push_back(remap(n, f, depth));
    return out;
}

NfTy remap(const NfTy& n, const VarMap& f, std::size_t depth) {
    return visit(n, overloaded{
                        [&](const FunNf& fn) -> NfTy {
                            return FunNf{remap(fn.domain, f, depth), remap(fn.codomain, f, depth + 1)};
                        },
                        [&](const NatNf&) { return n; },
                        [&](const TyConstNf& c) -> NfTy {
                            return TyConstNf{c.name, remap_all(c.args, f, depth)};
                        },
                    });
}

NfTm remap(const NfTm& n, const VarMap& f, std::size_t depth) {
    return visit(n, overloaded{
                        [&](const LamNf& l) -> NfTm { return LamNf{remap(l.body, f, depth + 1)}; },
                        [&](const ZeroNf&) { return n; },
                        [&](const SuccNf& s) -> NfTm { return SuccNf{remap(s.pred, f, depth)}; },
                        [&](const NeNat& e) -> NfTm { return NeNat{remap(e.ne, f, depth)}; },
                        [&](const NeConst& e) -> NfTm {
                            return NeConst{e.name, remap_all(e.index, f, depth), remap(e.ne, f, depth)};
                        },
                    });
}

NeTm remap(const NeTm& n, const VarMap& f, std::size_t depth) {
    return visit(n, overloaded{
                        [&](const VarNe& v) -> NeTm {
                            if (v.index < depth) return n;
                            return VarNe{f(v.index - depth) + depth};
                        },
                        [&](const AppNe& a) -> NeTm {
                            return AppNe{remap(a.fn, f, depth), remap(a.arg, f, depth)};
                        },
                        [&](const NatIndNe& i) -> NeTm {
                            return NatIndNe{remap(i.scrutinee, f, depth), remap(i.motive, f, depth + 1),
                                            remap(i.zcase, f, depth), remap(i.scase, f, depth + 2)};
                        },
                        [&](const TmConstNe& c) -> NeTm {
                            return TmConstNe{c.name, remap_all(c.args, f, depth)};
                        },
                    });
}

template <class N>
N checked_rename(const Renaming& r, const N& n) {
    if (!well_scoped(erase(n), r.source.size()))
        throw InvariantError("rename_nf: normal form escapes source context");
    return remap(n, r.as_function(), 0);
}

} // namespace

NfTy map_vars(const NfTy& n, const VarMap& f) { return remap(n, f, 0); }
NfTm map_vars(const NfTm& n, const VarMap& f) { return remap(n, f, 0); }
NeTm map_vars(const NeTm& n, const VarMap& f) { return remap(n, f, 0); }

NfTy rename_nf(const Renaming& r, const NfTy& n) { return checked_rename(r, n); }
NfTm rename_nf(const Renaming& r, const NfTm& n) { return checked_rename(r, n); }
NeTm rename_nf(const Renaming& r, const NeTm& n) { return checked_rename(r, n); }

// Normality reader. Types are brought to normal form with NbE so that the
// index of NeConst and the heads of function types are available; the
// term itself is only inspected, never evaluated.
namespace {

class Reader {
public:
    explicit Reader(const Signature& sig) : sig_(sig) {}

    std::optional<NfTm> nf(const Context& ctx, const NfTy& ty, const Term& t) const {
        return visit(
            ty,
            overloaded{
                [&](const FunNf& f) -> std::optional<NfTm> {
                    const auto* l = t.as<Lam>();
                    if (!l) return std::nullopt;
                    auto body = nf(ctx.extend(erase(f.domain)), f.codomain, l->body);
                    if (!body) return std::nullopt;
                    return NfTm(LamNf{*body});
                },
                [&](const NatNf&) -> std::optional<NfTm> {
                    if (t.is<Zero>()) return NfTm(ZeroNf{});
                    if (const auto* s = t.as<Succ>()) {
                        auto pred = nf(ctx, ty, s->pred);
                        if (!pred) return std::nullopt;
                        return NfTm(SuccNf{*pred});
                    }
                    auto e = ne(ctx, t);
                    if (!e || !e->second.is<NatNf>()) return std::nullopt;
                    return NfTm(NeNat{e->first});
                },
                [&](const TyConstNf& c) -> std::optional<NfTm> {
                    auto e = ne(ctx, t);
                    if (!e) return std::nullopt;
                    return NfTm(NeConst{c.name, c.args, e->first});
                },
            });
    }

    std::optional<std::pair<NeTm, NfTy>> ne(const Context& ctx, const Term& t) const {
        using Result = std::optional<std::pair<NeTm, NfTy>>;
        return visit(
            t,
            overloaded{
                [&](const Var& v) -> Result {
                    if (v.index >= ctx.size()) return std::nullopt;
                    return std::pair{NeTm(VarNe{v.index}), normal_type(ctx, ctx.type_of(v.index))};
                },
                [&](const App& a) -> Result {
                    auto head = ne(ctx, a.fn);
                    if (!head) return std::nullopt;
                    const auto* f = head->second.as<FunNf>();
                    if (!f) return std::nullopt;
                    auto arg = nf(ctx, f->domain, a.arg);
                    if (!arg) return std::nullopt;
                    Ty cod = subst1(erase(f->codomain), a.arg);
                    return std::pair{NeTm(AppNe{head->first, *arg}), normal_type(ctx, cod)};
                },
                [&](const NatInd& i) -> Result {
                    auto scrutinee = ne(ctx, i.scrutinee);
                    if (!scrutinee) return std::nullopt;
                    const Context under = ctx.extend(nat());
                    auto motive = ty_nf(under, i.motive);
                    if (!motive) return std::nullopt;
                    auto zcase = nf(ctx, normal_type(ctx, subst1(i.motive, zero())), i.zcase);
                    if (!zcase) return std::nullopt;
                    const Context step = under.extend(i.motive);
                    const Ty step_ty = subst1(shift(i.motive, 2, 1), succ(var(1)));
                    auto scase = nf(step, normal_type(step, step_ty), i.scase);
                    if (!scase) return std::nullopt;
                    return std::pair{NeTm(NatIndNe{scrutinee->first, *motive, *zcase, *scase}),
                                     normal_type(ctx, subst1(i.motive, i.scrutinee))};
                },
                [&](const TmConst& c) -> Result {
                    const auto* decl = constant(c.name);
                    if (!decl || decl->params.size() != c.args.size()) return std::nullopt;
                    auto args = args_nf(ctx, decl->params, c.args);
                    if (!args) return std::nullopt;
                    return std::pair{NeTm(TmConstNe{c.name, *args}),
                                     normal_type(ctx, instantiate_params(decl->result, c.args))};
                },
                [](const auto&) -> Result { return std::nullopt; },
            });
    }

    std::optional<NfTy> ty_nf(const Context& ctx, const Ty& ty) const {
        return visit(ty, overloaded{
                             [&](const Pi& p) -> std::optional<NfTy> {
                                 auto dom = ty_nf(ctx, p.domain);
                                 if (!dom) return std::nullopt;
                                 auto cod = ty_nf(ctx.extend(p.domain), p.codomain);
                                 if (!cod) return std::nullopt;
                                 return NfTy(FunNf{*dom, *cod});
                             },
                             [](const Nat&) -> std::optional<NfTy> { return NfTy(NatNf{}); },
                             [&](const TyConst& c) -> std::optional<NfTy> {
                                 const auto* d = sig_.find(c.name);
                                 const auto* decl = d ? std::get_if<PostulateTy>(d) : nullptr;
                                 if (!decl || decl->params.size() != c.args.size()) return std::nullopt;
                                 auto args = args_nf(ctx, decl->params, c.args);
                                 if (!args) return std::nullopt;
                                 return NfTy(TyConstNf{c.name, *args});
                             },
                         });
    }

    NfTy normal_type(const Context& ctx, const Ty& ty) const { return normalize_ty(sig_, ctx, ty); }

private:
    const PostulateTm* constant(const std::string& name) const {
        const auto* d = sig_.find(name);
        return d ? std::get_if<PostulateTm>(d) : nullptr;
    }

    std::optional<std::vector<NfTm>> args_nf(const Context& ctx, const std::vector<Ty>& params,
                                             const std::vector<Term>& args) const {
        std::vector<NfTm> out;
        for (std::size_t i = 0; i < args.size(); ++i) {
            const Ty expected = instantiate_params(params[i], std::span(args.data(), i));
            auto a = nf(ctx, normal_type(ctx, expected), args[i]);
            if (!a) return std::nullopt;
            out.push_back(*a);
        }
        return out;
    }

    const Signature& sig_;
};

} // namespace

std::optional<NfTm> read_normal(const Signature& sig, const Context& ctx, const Ty& ty,
                                const Term& t) {
    const Reader reader(sig);
    return reader.nf(ctx, reader.normal_type(ctx, ty), t);
}

std::optional<NfTy> read_normal_ty(const Signature& sig, const Context& ctx, const Ty& ty) {
    return Reader(sig).ty_nf(ctx, ty);
}

bool is_normal(const Signature& sig, const Context& ctx, const Ty& ty, const Term& t) {
    return read_normal(sig, ctx, ty, t).has_value();
}

bool is_normal_ty(const Signature& sig, const Context& ctx, const Ty& ty) {
    return read_normal_ty(sig, ctx, ty).has_value();
}

} // namespace tt
