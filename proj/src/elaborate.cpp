#include "tt/elaborate.hpp"

#include <algorithm>

#include "tt/checker.hpp"
#include "tt/errors.hpp"

namespace tt {

namespace {

class Elaborator {
public:
    Elaborator(const Signature& sig, std::vector<std::string> locals)
        : sig_(sig), locals_(std::move(locals)) {}

    Term expr(const SExpr& e) {
        return std::visit(
            overloaded{
                [&](const SurfaceExpr::Name& n) { return resolve_app(e, n, {}); },
                [&](const SurfaceExpr::Lambda& l) {
                    Scoped scope(*this, {l.binder});
                    return lam(expr(l.body));
                },
                [&](const SurfaceExpr::Apply&) { return spine(e); },
                [](const SurfaceExpr::ZeroLit&) { return zero(); },
                [&](const SurfaceExpr::SuccOf& s) { return succ(expr(s.pred)); },
                [](const SurfaceExpr::Numeral& n) { return numeral(n.value); },
                [&](const SurfaceExpr::Induction& i) {
                    Term scrutinee = expr(i.scrutinee);
                    Ty motive = [&] {
                        Scoped scope(*this, {i.motive_binder});
                        return type(i.motive);
                    }();
                    Term zcase = expr(i.zcase);
                    Term scase = [&] {
                        Scoped scope(*this, {i.pred_binder, i.rec_binder});
                        return expr(i.scase);
                    }();
                    return nat_ind(scrutinee, motive, zcase, scase);
                },
            },
            e->v);
    }

    Ty type(const SType& t) {
        return std::visit(
            overloaded{
                [&](const SurfaceType::Arrow& a) {
                    Ty dom = type(a.domain);
                    Scoped scope(*this, {a.binder.value_or("_")});
                    return pi(dom, type(a.codomain));
                },
                [](const SurfaceType::NatType&) { return nat(); },
                [&](const SurfaceType::Named& n) {
                    const Declaration* d = local(n.id) ? nullptr : sig_.find(n.id);
                    if (!d || !std::holds_alternative<PostulateTy>(*d))
                        throw TypeError(ErrorCode::UnknownConstant, "'" + n.id + "' is not a type")
                            .at(t->span);
                    std::vector<Term> args;
                    for (const auto& a : n.args) args.push_back(expr(a));
                    return ty_const(n.id, std::move(args));
                },
            },
            t->v);
    }

private:
    struct Scoped {
        Scoped(Elaborator& e, std::initializer_list<std::string> names) : e_(e), n_(names.size()) {
            e_.locals_.insert(e_.locals_.end(), names.begin(), names.end());
        }
        ~Scoped() { e_.locals_.resize(e_.locals_.size() - n_); }
        Scoped(const Scoped&) = delete;
        Scoped& operator=(const Scoped&) = delete;
        Elaborator& e_;
        std::size_t n_;
    };

    std::optional<std::size_t> local(const std::string& id) const {
        if (id == "_") return std::nullopt;
        for (std::size_t i = 0; i < locals_.size(); ++i)
            if (locals_[locals_.size() - 1 - i] == id) return i;
        return std::nullopt;
    }

    Term spine(const SExpr& e) {
        std::vector<SExpr> args;
        SExpr head = e;
        while (const auto* a = std::get_if<SurfaceExpr::Apply>(&head->v)) {
            args.push_back(a->arg);
            head = a->fn;
        }
        std::reverse(args.begin(), args.end());
        std::vector<Term> elaborated;
        for (const auto& a : args) elaborated.push_back(expr(a));
        if (const auto* n = std::get_if<SurfaceExpr::Name>(&head->v))
            return resolve_app(head, *n, std::move(elaborated));
        Term t = expr(head);
        for (auto& a : elaborated) t = app(t, a);
        return t;
    }

    // A name applied to already elaborated arguments.
    Term resolve_app(const SExpr& at, const SurfaceExpr::Name& n, std::vector<Term> args) {
        Term head = [&]() -> Term {
            if (auto i = local(n.id)) return var(*i);
            const Declaration* d = sig_.find(n.id);
            if (!d) throw TypeError(ErrorCode::UnknownName, "unknown name '" + n.id + "'").at(at->span);
            if (const auto* def = std::get_if<Define>(d)) return unfold(*def);
            if (std::holds_alternative<PostulateTy>(*d))
                throw TypeError(ErrorCode::UnknownName, "type constant '" + n.id + "' used as a term")
                    .at(at->span);
            const auto& c = std::get<PostulateTm>(*d);
            return saturate(c, args);
        }();
        for (auto& a : args) head = app(head, a);
        return head;
    }

    // Lambdas do not synthesize, so a lambda body is ascribed its declared
    // type as ind(0; _. T; body; _ r. r), which reduces to the body.
    static Term unfold(const Define& def) {
        if (!def.body.is<Lam>()) return def.body;
        return nat_ind(zero(), shift(def.type, 1), def.body, var(0));
    }

    // Consumes up to arity arguments; missing ones are η-expanded.
    static Term saturate(const PostulateTm& c, std::vector<Term>& args) {
        const std::size_t arity = c.params.size();
        const std::size_t given = std::min(arity, args.size());
        const std::size_t missing = arity - given;
        std::vector<Term> used;
        for (std::size_t i = 0; i < given; ++i) used.push_back(shift(args[i], missing));
        for (std::size_t i = 0; i < missing; ++i) used.push_back(var(missing - 1 - i));
        args.erase(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(given));
        Term t = tm_const(c.name, std::move(used));
        for (std::size_t i = 0; i < missing; ++i) t = lam(t);
        return t;
    }

    const Signature& sig_;
    std::vector<std::string> locals_;
};

Declaration resolve(const Signature& sig, const SurfaceDecl& d) {
    return std::visit(
        overloaded{
            [&](const SurfaceDecl::Postulate& p) -> Declaration {
                std::vector<std::string> names;
                std::vector<Ty> params;
                for (const auto& param : p.params) {
                    params.push_back(Elaborator(sig, names).type(param.type));
                    names.push_back(param.name);
                }
                if (!p.type) return PostulateTy{p.name, std::move(params)};
                Ty result = Elaborator(sig, names).type(*p.type);
                while (const auto* arrow = result.as<Pi>()) {
                    params.push_back(arrow->domain);
                    result = arrow->codomain;
                }
                return PostulateTm{p.name, std::move(params), result};
            },
            [&](const SurfaceDecl::Def& def) -> Declaration {
                return Define{def.name, Elaborator(sig, {}).type(def.type),
                              Elaborator(sig, {}).expr(def.body)};
            },
        },
        d.v);
}

} // namespace

Term elaborate_expr(const Signature& sig, const SExpr& e, const std::vector<std::string>& locals) {
    return Elaborator(sig, locals).expr(e);
}

Ty elaborate_type(const Signature& sig, const SType& t, const std::vector<std::string>& locals) {
    return Elaborator(sig, locals).type(t);
}

Signature elaborate(const std::vector<SurfaceDecl>& decls, const Signature& base) {
    Signature sig = base;
    for (const auto& d : decls) {
        try {
            sig = declare(sig, resolve(sig, d));
        } catch (TypeError& e) {
            e.at(d.span);
            throw;
        }
    }
    return sig;
}

Signature load_signature(std::string_view source) { return elaborate(parse(source)); }

TypedTerm elaborate_closed(const Signature& sig, std::string_view expr, std::optional<std::string_view> type) {
    const Term t = elaborate_expr(sig, parse_expr(expr));
    if (!type) return {t, infer(sig, {}, t)};
    const Ty ty = elaborate_type(sig, parse_type(*type));
    check_ty(sig, {}, ty);
    check(sig, {}, t, ty);
    return {t, ty};
}

} // namespace tt
