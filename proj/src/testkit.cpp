#include "tt/testkit.hpp"

#include <algorithm>
#include <map>

#include "tt/checker.hpp"
#include "tt/errors.hpp"

namespace tt::testkit {

Signature example_signature() {
    Signature sig;
    sig = declare(sig, PostulateTy{"A", {}});
    sig = declare(sig, PostulateTy{"B", {ty_const("A")}});
    sig = declare(sig, PostulateTm{"f", {ty_const("A")}, ty_const("B", {var(0)})});
    return sig;
}

std::size_t pi_depth(const Ty& ty) {
    if (const auto* p = ty.as<Pi>()) return 1 + std::max(pi_depth(p->domain), pi_depth(p->codomain));
    return 0;
}

namespace {

bool same_head(const Ty& a, const Ty& b) {
    if (a.is<Pi>() && b.is<Pi>()) return true;
    if (a.is<Nat>() && b.is<Nat>()) return true;
    const auto* ca = a.as<TyConst>();
    const auto* cb = b.as<TyConst>();
    return ca && cb && ca->name == cb->name;
}

/// Codomain spine of a type: shapes after 0, 1, 2, ... arguments. Heads are
/// syntactic, so the substitution of arguments can be ignored here.
std::vector<Ty> result_shapes(const Ty& ty) {
    std::vector<Ty> out{ty};
    while (const auto* p = out.back().as<Pi>()) out.push_back(p->codomain);
    return out;
}

enum class Option { Lam, Zero, Succ, Spine, Induction, Redex };

template <class T>
std::vector<T> weighted_order(Rng& rng, std::vector<std::pair<T, std::size_t>> options) {
    std::vector<T> out;
    while (!options.empty()) {
        std::size_t total = 0;
        for (const auto& o : options) total += o.second;
        std::size_t pick = rng.below(total);
        std::size_t i = 0;
        while (pick >= options[i].second) pick -= options[i++].second;
        out.push_back(options[i].first);
        options.erase(options.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return out;
}

struct Head {
    Term term;
    Ty type;
    std::size_t cost; // size of the head including constant arguments (minimum)
    const PostulateTm* constant = nullptr;
};

} // namespace

std::vector<std::size_t> Generator::split(std::size_t total, std::size_t parts) {
    std::vector<std::size_t> out(parts, 1);
    if (parts == 0 || total < parts) return out;
    for (std::size_t extra = total - parts; extra > 0; --extra) ++out[rng_.below(parts)];
    return out;
}

std::optional<std::vector<Term>> Generator::telescope_args(const Context& ctx,
                                                           const std::vector<Ty>& params,
                                                           std::size_t budget) {
    if (budget < params.size()) return std::nullopt;
    const auto shares = split(budget, params.size());
    std::vector<Term> args;
    for (std::size_t i = 0; i < params.size(); ++i) {
        auto a = check(ctx, instantiate_params(params[i], args), shares[i]);
        if (!a) return std::nullopt;
        args.push_back(*a);
    }
    return args;
}

std::optional<std::pair<Term, Ty>> Generator::apply_args(const Context& ctx, Term head, Ty head_ty,
                                                         std::size_t nargs, std::size_t budget) {
    // each argument costs at least one node plus its App node
    if (budget < 2 * nargs) return std::nullopt;
    const auto shares = split(budget - nargs, nargs);
    for (std::size_t i = 0; i < nargs; ++i) {
        const auto* p = head_ty.as<Pi>();
        if (!p) return std::nullopt;
        auto a = check(ctx, p->domain, shares[i]);
        if (!a) return std::nullopt;
        head = app(head, *a);
        head_ty = subst1(p->codomain, *a);
    }
    return std::pair{head, head_ty};
}

std::optional<Term> Generator::spine(const Context& ctx, const Ty& target, std::size_t budget) {
    std::vector<std::pair<Head, std::size_t>> candidates;
    auto consider = [&](const Head& h) {
        const auto shapes = result_shapes(h.type);
        for (std::size_t n = 0; n < shapes.size(); ++n)
            if (same_head(shapes[n], target) && h.cost + 2 * n <= budget) candidates.push_back({h, n});
    };
    for (std::size_t i = 0; i < ctx.size(); ++i) consider({var(i), ctx.type_of(i), 1});
    for (const auto& d : sig_.decls())
        if (const auto* c = std::get_if<PostulateTm>(&d))
            consider({tm_const(c->name), c->result, 1 + c->params.size(), c});

    for (int attempt = 0; attempt < 3 && !candidates.empty(); ++attempt) {
        const std::size_t pick = rng_.below(candidates.size());
        auto [head, nargs] = candidates[pick];
        std::size_t remaining = budget;
        Term term = head.term;
        Ty ty = head.type;
        if (head.constant) {
            const std::size_t app_budget = 2 * nargs;
            auto args = telescope_args(ctx, head.constant->params, budget - 1 - app_budget);
            if (!args) continue;
            term = tm_const(head.constant->name, *args);
            ty = instantiate_params(head.constant->result, *args);
            remaining = budget - size(term);
        } else {
            remaining = budget - 1;
        }
        auto applied = apply_args(ctx, term, ty, nargs, remaining);
        if (applied && conv_ty(sig_, ctx, applied->second, target)) return applied->first;
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return std::nullopt;
}

std::optional<Term> Generator::induction(const Context& ctx, const Ty& target, std::size_t budget) {
    const Ty motive = shift(target, 1);
    const std::size_t msize = size(motive);
    if (budget < 4 + msize) return std::nullopt;
    const auto shares = split(budget - 1 - msize, 3);
    auto scrutinee = check(ctx, nat(), shares[0]);
    if (!scrutinee) return std::nullopt;
    auto zcase = check(ctx, target, shares[1]);
    if (!zcase) return std::nullopt;
    auto scase = check(ctx.extend({nat(), motive}), shift(target, 2), shares[2]);
    if (!scase) return std::nullopt;
    return nat_ind(*scrutinee, motive, *zcase, *scase);
}

std::optional<Term> Generator::redex(const Context& ctx, const Ty& target, std::size_t budget) {
    if (target.is<Pi>() || budget < 4) return std::nullopt;
    const auto shares = split(budget - 2, 2);
    auto arg = infer(ctx, shares[0]);
    if (!arg) return std::nullopt;
    auto body = check(ctx.extend(arg->second), shift(target, 1), shares[1]);
    if (!body) return std::nullopt;
    return app(lam(*body), arg->first);
}

std::optional<Term> Generator::check(const Context& ctx, const Ty& ty, std::size_t budget) {
    if (budget == 0) return std::nullopt;
    std::vector<std::pair<Option, std::size_t>> options;
    if (ty.is<Pi>()) {
        if (budget >= 2) options.push_back({Option::Lam, 6});
        options.push_back({Option::Spine, 2});
        if (pi_depth(ty) <= 1) options.push_back({Option::Induction, 1});
    } else if (ty.is<Nat>()) {
        options.push_back({Option::Zero, budget <= 2 ? 4 : 1});
        if (budget >= 2) options.push_back({Option::Succ, 3});
        options.push_back({Option::Spine, 3});
        if (budget >= 5) options.push_back({Option::Induction, 2});
        if (budget >= 4) options.push_back({Option::Redex, 1});
    } else {
        options.push_back({Option::Spine, 4});
        options.push_back({Option::Induction, 1});
        options.push_back({Option::Redex, 1});
    }
    for (Option o : weighted_order(rng_, std::move(options))) {
        std::optional<Term> t;
        switch (o) {
        case Option::Lam: {
            const auto& p = *ty.as<Pi>();
            if (auto body = check(ctx.extend(p.domain), p.codomain, budget - 1)) t = lam(*body);
            break;
        }
        case Option::Zero: t = zero(); break;
        case Option::Succ:
            if (auto pred = check(ctx, ty, budget - 1)) t = succ(*pred);
            break;
        case Option::Spine: t = spine(ctx, ty, budget); break;
        case Option::Induction: t = induction(ctx, ty, budget); break;
        case Option::Redex: t = redex(ctx, ty, budget); break;
        }
        if (t) return t;
    }
    return std::nullopt;
}

std::optional<std::pair<Term, Ty>> Generator::infer(const Context& ctx, std::size_t budget) {
    if (budget == 0) return std::nullopt;
    enum class Kind { Nat, VarSpine, ConstSpine, Induction, Redex };
    std::vector<std::pair<Kind, std::size_t>> options{{Kind::Nat, 2}};
    if (!ctx.empty()) options.push_back({Kind::VarSpine, 3});
    if (std::any_of(sig_.decls().begin(), sig_.decls().end(),
                    [](const Declaration& d) { return std::holds_alternative<PostulateTm>(d); }))
        options.push_back({Kind::ConstSpine, 1});
    if (budget >= 5) options.push_back({Kind::Induction, 2});
    if (budget >= 4) options.push_back({Kind::Redex, 1});

    for (Kind k : weighted_order(rng_, std::move(options))) {
        switch (k) {
        case Kind::Nat:
            if (auto t = check(ctx, nat(), budget)) return std::pair{*t, nat()};
            break;
        case Kind::VarSpine: {
            const std::size_t i = rng_.below(ctx.size());
            const Ty ty = ctx.type_of(i);
            const std::size_t nargs = rng_.below(result_shapes(ty).size());
            if (auto r = apply_args(ctx, var(i), ty, nargs, budget - 1)) return r;
            break;
        }
        case Kind::ConstSpine: {
            std::vector<const PostulateTm*> consts;
            for (const auto& d : sig_.decls())
                if (const auto* c = std::get_if<PostulateTm>(&d)) consts.push_back(c);
            const auto* c = consts[rng_.below(consts.size())];
            if (budget < 1 + c->params.size()) break;
            auto args = telescope_args(ctx, c->params, budget - 1);
            if (!args) break;
            const Term head = tm_const(c->name, *args);
            const Ty ty = instantiate_params(c->result, *args);
            const std::size_t nargs = rng_.below(result_shapes(ty).size());
            if (auto r = apply_args(ctx, head, ty, nargs, budget - size(head))) return r;
            break;
        }
        case Kind::Induction: {
            const Context under = ctx.extend(nat());
            auto motive = type(under, std::min<std::size_t>(4, budget - 4), 1);
            if (!motive) break;
            const std::size_t msize = size(*motive);
            if (budget < 4 + msize) break;
            const auto shares = split(budget - 1 - msize, 3);
            auto scrutinee = check(ctx, nat(), shares[0]);
            if (!scrutinee) break;
            auto zcase = check(ctx, subst1(*motive, zero()), shares[1]);
            if (!zcase) break;
            auto scase = check(under.extend(*motive), subst1(shift(*motive, 2, 1), succ(var(1))),
                               shares[2]);
            if (!scase) break;
            return std::pair{nat_ind(*scrutinee, *motive, *zcase, *scase), subst1(*motive, *scrutinee)};
        }
        case Kind::Redex: {
            const auto shares = split(budget - 2, 2);
            auto arg = infer(ctx, shares[0]);
            if (!arg) break;
            auto body = infer(ctx.extend(arg->second), shares[1]);
            if (!body || body->first.is<Lam>()) break;
            return std::pair{app(lam(body->first), arg->first), subst1(body->second, arg->first)};
        }
        }
    }
    return std::nullopt;
}

std::optional<Ty> Generator::type(const Context& ctx, std::size_t budget, std::size_t max_pi) {
    if (budget == 0) return std::nullopt;
    enum class Kind { Nat, Const, Pi };
    std::vector<std::pair<Kind, std::size_t>> options{{Kind::Nat, 3}};
    std::vector<const PostulateTy*> consts;
    for (const auto& d : sig_.decls())
        if (const auto* c = std::get_if<PostulateTy>(&d))
            if (1 + c->params.size() <= budget) consts.push_back(c);
    if (!consts.empty()) options.push_back({Kind::Const, 3});
    if (max_pi > 0 && budget >= 3) options.push_back({Kind::Pi, 2});

    for (Kind k : weighted_order(rng_, std::move(options))) {
        switch (k) {
        case Kind::Nat: return nat();
        case Kind::Const: {
            const auto* c = consts[rng_.below(consts.size())];
            if (auto args = telescope_args(ctx, c->params, budget - 1)) return ty_const(c->name, *args);
            break;
        }
        case Kind::Pi: {
            const auto shares = split(budget - 1, 2);
            auto dom = type(ctx, shares[0], max_pi - 1);
            if (!dom) break;
            auto cod = type(ctx.extend(*dom), shares[1], max_pi - 1);
            if (!cod) break;
            return pi(*dom, *cod);
        }
        }
    }
    return std::nullopt;
}

Context Generator::context(std::size_t max_len) {
    Context ctx;
    const std::size_t len = rng_.below(max_len + 1);
    for (std::size_t i = 0; i < len; ++i) ctx = ctx.extend(type(ctx, 4, 2).value_or(nat()));
    return ctx;
}

Term gen_term(const Signature& sig, const Context& ctx, const Ty& ty, std::size_t size,
              std::uint64_t seed) {
    Generator g(sig, seed);
    for (int attempt = 0; attempt < 8; ++attempt)
        if (auto t = g.check(ctx, ty, size)) return *t;
    throw GenerationStuck("no term of size <= " + std::to_string(size) + " found at " + to_string(ty));
}

namespace {

// Exhaustive raw syntax by exact size, then filtered by the checker.
class Enumerator {
public:
    explicit Enumerator(const Signature& sig) : sig_(sig) {}

    const std::vector<Term>& terms(std::size_t scope, std::size_t k) {
        const auto key = std::pair{scope, k};
        if (auto it = terms_.find(key); it != terms_.end()) return it->second;
        std::vector<Term> out;
        if (k == 1) {
            for (std::size_t i = 0; i < scope; ++i) out.push_back(var(i));
            out.push_back(zero());
        }
        if (k >= 2) {
            for (const auto& b : terms(scope + 1, k - 1)) out.push_back(lam(b));
            for (const auto& p : terms(scope, k - 1)) out.push_back(succ(p));
        }
        for (std::size_t j = 1; j + 2 <= k; ++j)
            for (const auto& f : terms(scope, j))
                for (const auto& a : terms(scope, k - 1 - j)) out.push_back(app(f, a));
        if (k >= 5) {
            for (std::size_t i = 1; i < k; ++i)
                for (std::size_t j = 1; i + j < k; ++j)
                    for (std::size_t l = 1; i + j + l < k; ++l) {
                        const std::size_t m = k - 1 - i - j - l;
                        if (m == 0) continue;
                        for (const auto& s : terms(scope, i))
                            for (const auto& mo : types(scope + 1, j))
                                for (const auto& z : terms(scope, l))
                                    for (const auto& sc : terms(scope + 2, m))
                                        out.push_back(nat_ind(s, mo, z, sc));
                    }
        }
        for (const auto& d : sig_.decls())
            if (const auto* c = std::get_if<PostulateTm>(&d))
                for (auto& args : arg_lists(scope, c->params.size(), k - 1))
                    out.push_back(tm_const(c->name, std::move(args)));
        return terms_[key] = std::move(out);
    }

    const std::vector<Ty>& types(std::size_t scope, std::size_t k) {
        const auto key = std::pair{scope, k};
        if (auto it = types_.find(key); it != types_.end()) return it->second;
        std::vector<Ty> out;
        if (k == 1) out.push_back(nat());
        for (std::size_t i = 1; i + 1 < k; ++i)
            for (const auto& a : types(scope, i))
                for (const auto& b : types(scope + 1, k - 1 - i)) out.push_back(pi(a, b));
        for (const auto& d : sig_.decls())
            if (const auto* c = std::get_if<PostulateTy>(&d))
                for (auto& args : arg_lists(scope, c->params.size(), k - 1))
                    out.push_back(ty_const(c->name, std::move(args)));
        return types_[key] = std::move(out);
    }

private:
    // All argument lists of `n` terms with total size exactly `k`.
    std::vector<std::vector<Term>> arg_lists(std::size_t scope, std::size_t n, std::size_t k) {
        if (n == 0) return k == 0 ? std::vector<std::vector<Term>>{{}} : std::vector<std::vector<Term>>{};
        std::vector<std::vector<Term>> out;
        for (std::size_t first = 1; first + (n - 1) <= k; ++first)
            for (const auto& t : terms(scope, first))
                for (auto& rest : arg_lists(scope, n - 1, k - first)) {
                    rest.insert(rest.begin(), t);
                    out.push_back(std::move(rest));
                }
        return out;
    }

    const Signature& sig_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> terms_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Ty>> types_;
};

} // namespace

std::vector<Term> enum_terms(const Signature& sig, const Context& ctx, const Ty& ty,
                             std::size_t max_size) {
    Enumerator e(sig);
    std::vector<Term> out;
    for (std::size_t k = 1; k <= max_size; ++k)
        for (const auto& t : e.terms(ctx.size(), k))
            if (checks(sig, ctx, t, ty)) out.push_back(t);
    return out;
}

namespace {

// Source type mapping onto `target_ty` under the partial level map, or
// nullopt when some free variable has no preimage yet.
std::optional<Ty> preimage(const Ty& target_ty, const std::vector<std::size_t>& level_map,
                           std::size_t target_len) {
    bool ok = true;
    const std::size_t src_len = level_map.size();
    Ty out = map_vars(target_ty, [&](std::size_t target_index) -> std::size_t {
        const std::size_t target_level = target_len - 1 - target_index;
        for (std::size_t l = 0; l < src_len; ++l)
            if (level_map[l] == target_level) return src_len - 1 - l;
        ok = false;
        return 0;
    });
    if (!ok) return std::nullopt;
    return out;
}

Renaming from_levels(const Context& source, const Context& target, const std::vector<std::size_t>& levels) {
    std::vector<std::size_t> map(levels.size());
    for (std::size_t l = 0; l < levels.size(); ++l)
        map[levels.size() - 1 - l] = target.size() - 1 - levels[l];
    return {source, target, std::move(map)};
}

} // namespace

Renaming gen_renaming(const Signature& sig, std::uint64_t seed) {
    Generator g(sig, seed);
    Rng& rng = g.rng();
    switch (rng.below(5)) {
    case 0: return Renaming::identity(g.context(3));
    case 1: {
        const Context ctx = g.context(2);
        std::vector<Ty> extra;
        const std::size_t n = 1 + rng.below(2);
        Context grown = ctx;
        for (std::size_t i = 0; i < n; ++i) {
            extra.push_back(g.type(grown, 4, 1).value_or(nat()));
            grown = grown.extend(extra.back());
        }
        return Renaming::weakening(ctx, extra);
    }
    case 2: {
        // contraction: (x : Nat, y : Nat) onto (z : Nat)
        const Context target({nat()});
        const Context source({nat(), nat()});
        return from_levels(source, target, {0, 0});
    }
    default: {
        const Context target = g.context(3);
        if (target.empty()) return Renaming::identity(target);
        const std::size_t len = rng.below(4);
        std::vector<std::size_t> levels;
        Context source;
        for (std::size_t i = 0; i < len; ++i) {
            for (int attempt = 0; attempt < 4; ++attempt) {
                const std::size_t tl = rng.below(target.size());
                const Ty ty = target.type_of(target.size() - 1 - tl);
                if (auto s = preimage(ty, levels, target.size())) {
                    source = source.extend(*s);
                    levels.push_back(tl);
                    break;
                }
            }
        }
        return from_levels(source, target, levels);
    }
    }
}

} // namespace tt::testkit
