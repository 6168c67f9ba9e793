#include "tt/syntax.hpp"

#include <sstream>

#include "tt/errors.hpp"

namespace tt {

Term var(std::size_t index) { return Var{index}; }
Term lam(Term body) { return Lam{std::move(body)}; }
Term app(Term fn, Term arg) { return App{std::move(fn), std::move(arg)}; }
Term app(Term fn, std::initializer_list<Term> args) {
    for (const auto& a : args) fn = app(std::move(fn), a);
    return fn;
}
Term zero() { return Zero{}; }
Term succ(Term pred) { return Succ{std::move(pred)}; }
Term nat_ind(Term scrutinee, Ty motive, Term zcase, Term scase) {
    return NatInd{std::move(scrutinee), std::move(motive), std::move(zcase), std::move(scase)};
}
Term tm_const(std::string name, std::vector<Term> args) {
    return TmConst{std::move(name), std::move(args)};
}
Term numeral(std::size_t n) {
    Term t = zero();
    for (std::size_t i = 0; i < n; ++i) t = succ(t);
    return t;
}
Ty nat() { return Nat{}; }
Ty pi(Ty domain, Ty codomain) { return Pi{std::move(domain), std::move(codomain)}; }
Ty ty_const(std::string name, std::vector<Term> args) {
    return TyConst{std::move(name), std::move(args)};
}

namespace {

std::size_t sum_sizes(const std::vector<Term>& ts) {
    std::size_t n = 0;
    for (const auto& t : ts) n += size(t);
    return n;
}

} // namespace

std::size_t size(const Term& t) {
    return visit(t, overloaded{
                        [](const Var&) -> std::size_t { return 1; },
                        [](const Lam& l) { return 1 + size(l.body); },
                        [](const App& a) { return 1 + size(a.fn) + size(a.arg); },
                        [](const Zero&) -> std::size_t { return 1; },
                        [](const Succ& s) { return 1 + size(s.pred); },
                        [](const NatInd& n) {
                            return 1 + size(n.scrutinee) + size(n.motive) + size(n.zcase) +
                                   size(n.scase);
                        },
                        [](const TmConst& c) { return 1 + sum_sizes(c.args); },
                    });
}

std::size_t size(const Ty& t) {
    return visit(t, overloaded{
                        [](const Pi& p) { return 1 + size(p.domain) + size(p.codomain); },
                        [](const Nat&) -> std::size_t { return 1; },
                        [](const TyConst& c) { return 1 + sum_sizes(c.args); },
                    });
}

namespace {

void render(std::ostream& os, const Term& t);
void render(std::ostream& os, const Ty& t);

void render_args(std::ostream& os, const std::string& name, const std::vector<Term>& args) {
    os << '"' << name << "\" [";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) os << ", ";
        render(os, args[i]);
    }
    os << ']';
}

void render(std::ostream& os, const Term& t) {
    visit(t, overloaded{
                 [&](const Var& v) { os << "Var " << v.index; },
                 [&](const Lam& l) {
                     os << "Lam(";
                     render(os, l.body);
                     os << ')';
                 },
                 [&](const App& a) {
                     os << "App(";
                     render(os, a.fn);
                     os << ", ";
                     render(os, a.arg);
                     os << ')';
                 },
                 [&](const Zero&) { os << "Zero"; },
                 [&](const Succ& s) {
                     os << "Succ(";
                     render(os, s.pred);
                     os << ')';
                 },
                 [&](const NatInd& n) {
                     os << "NatInd(";
                     render(os, n.scrutinee);
                     os << ", ";
                     render(os, n.motive);
                     os << ", ";
                     render(os, n.zcase);
                     os << ", ";
                     render(os, n.scase);
                     os << ')';
                 },
                 [&](const TmConst& c) {
                     os << "TmConst(";
                     render_args(os, c.name, c.args);
                     os << ')';
                 },
             });
}

void render(std::ostream& os, const Ty& t) {
    visit(t, overloaded{
                 [&](const Pi& p) {
                     os << "Pi(";
                     render(os, p.domain);
                     os << ", ";
                     render(os, p.codomain);
                     os << ')';
                 },
                 [&](const Nat&) { os << "Nat"; },
                 [&](const TyConst& c) {
                     os << "TyConst(";
                     render_args(os, c.name, c.args);
                     os << ')';
                 },
             });
}

} // namespace

std::string to_string(const Term& t) {
    std::ostringstream os;
    render(os, t);
    return os.str();
}

std::string to_string(const Ty& t) {
    std::ostringstream os;
    render(os, t);
    return os.str();
}

// Generic traversal: `on_var(index, depth)` rewrites a variable found under
// `depth` local binders.
namespace {

using VarRewrite = std::function<Term(std::size_t index, std::size_t depth)>;

Term traverse(const Term& t, const VarRewrite& on_var, std::size_t depth);
Ty traverse(const Ty& t, const VarRewrite& on_var, std::size_t depth);

std::vector<Term> traverse_all(const std::vector<Term>& ts, const VarRewrite& on_var,
                               std::size_t depth) {
    std::vector<Term> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(traverse(t, on_var, depth));
    return out;
}

Term traverse(const Term& t, const VarRewrite& on_var, std::size_t depth) {
    return visit(t, overloaded{
                        [&](const Var& v) { return on_var(v.index, depth); },
                        [&](const Lam& l) { return lam(traverse(l.body, on_var, depth + 1)); },
                        [&](const App& a) {
                            return app(traverse(a.fn, on_var, depth),
                                       traverse(a.arg, on_var, depth));
                        },
                        [&](const Zero&) { return t; },
                        [&](const Succ& s) { return succ(traverse(s.pred, on_var, depth)); },
                        [&](const NatInd& n) {
                            return nat_ind(traverse(n.scrutinee, on_var, depth),
                                           traverse(n.motive, on_var, depth + 1),
                                           traverse(n.zcase, on_var, depth),
                                           traverse(n.scase, on_var, depth + 2));
                        },
                        [&](const TmConst& c) {
                            return tm_const(c.name, traverse_all(c.args, on_var, depth));
                        },
                    });
}

Ty traverse(const Ty& t, const VarRewrite& on_var, std::size_t depth) {
    return visit(t, overloaded{
                        [&](const Pi& p) {
                            return pi(traverse(p.domain, on_var, depth),
                                      traverse(p.codomain, on_var, depth + 1));
                        },
                        [&](const Nat&) { return t; },
                        [&](const TyConst& c) {
                            return ty_const(c.name, traverse_all(c.args, on_var, depth));
                        },
                    });
}

VarRewrite map_rewrite(const VarMap& f) {
    return [&f](std::size_t index, std::size_t depth) -> Term {
        if (index < depth) return var(index);
        return var(f(index - depth) + depth);
    };
}

VarRewrite subst_rewrite(std::span<const Term> args) {
    return [args](std::size_t index, std::size_t depth) -> Term {
        if (index < depth) return var(index);
        const std::size_t free = index - depth;
        if (free < args.size()) return shift(args[free], depth);
        return var(index - args.size());
    };
}

template <class T>
bool scoped(const T& t, std::size_t depth) {
    bool ok = true;
    traverse(
        t,
        [&](std::size_t index, std::size_t local) -> Term {
            if (index >= local + depth) ok = false;
            return var(index);
        },
        0);
    return ok;
}

template <class T>
bool occurs_free(const T& t, std::size_t target) {
    bool found = false;
    traverse(
        t,
        [&](std::size_t index, std::size_t local) -> Term {
            if (index >= local && index - local == target) found = true;
            return var(index);
        },
        0);
    return found;
}

} // namespace

Term map_vars(const Term& t, const VarMap& f) { return traverse(t, map_rewrite(f), 0); }
Ty map_vars(const Ty& t, const VarMap& f) { return traverse(t, map_rewrite(f), 0); }

Term shift(const Term& t, std::size_t amount, std::size_t cutoff) {
    if (amount == 0) return t;
    return traverse(
        t,
        [=](std::size_t index, std::size_t depth) {
            return index >= depth + cutoff ? var(index + amount) : var(index);
        },
        0);
}

Ty shift(const Ty& t, std::size_t amount, std::size_t cutoff) {
    if (amount == 0) return t;
    return traverse(
        t,
        [=](std::size_t index, std::size_t depth) {
            return index >= depth + cutoff ? var(index + amount) : var(index);
        },
        0);
}

Term substitute(const Term& t, std::span<const Term> args) {
    if (args.empty()) return t;
    return traverse(t, subst_rewrite(args), 0);
}
Ty substitute(const Ty& t, std::span<const Term> args) {
    if (args.empty()) return t;
    return traverse(t, subst_rewrite(args), 0);
}

Term subst1(const Term& body, const Term& arg) { return substitute(body, std::span(&arg, 1)); }
Ty subst1(const Ty& body, const Term& arg) { return substitute(body, std::span(&arg, 1)); }

Ty instantiate_params(const Ty& t, std::span<const Term> args) {
    std::vector<Term> reversed(args.rbegin(), args.rend());
    return substitute(t, reversed);
}

bool well_scoped(const Term& t, std::size_t depth) { return scoped(t, depth); }
bool well_scoped(const Ty& t, std::size_t depth) { return scoped(t, depth); }

bool occurs(const Term& t, std::size_t index) { return occurs_free(t, index); }
bool occurs(const Ty& t, std::size_t index) { return occurs_free(t, index); }

Ty Context::type_of(std::size_t index) const {
    if (index >= entries_.size())
        throw InvariantError("variable index " + std::to_string(index) + " out of scope");
    return shift(entries_[entries_.size() - 1 - index], index + 1);
}

Context Context::extend(Ty ty) const {
    auto entries = entries_;
    entries.push_back(std::move(ty));
    return Context(std::move(entries));
}

Context Context::extend(std::initializer_list<Ty> tys) const {
    auto entries = entries_;
    entries.insert(entries.end(), tys.begin(), tys.end());
    return Context(std::move(entries));
}

bool Context::well_scoped() const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!tt::well_scoped(entries_[i], i)) return false;
    return true;
}

Renaming Renaming::identity(const Context& ctx) {
    std::vector<std::size_t> map(ctx.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    return {ctx, ctx, std::move(map)};
}

Renaming Renaming::weakening(const Context& ctx, const std::vector<Ty>& extra) {
    auto entries = ctx.entries();
    entries.insert(entries.end(), extra.begin(), extra.end());
    std::vector<std::size_t> map(ctx.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i + extra.size();
    return {ctx, Context(std::move(entries)), std::move(map)};
}

VarMap Renaming::as_function() const {
    return [this](std::size_t i) -> std::size_t {
        if (i >= map.size())
            throw InvariantError("renaming applied to out-of-scope index " + std::to_string(i));
        return map[i];
    };
}

bool Renaming::valid() const {
    if (map.size() != source.size()) return false;
    if (!source.well_scoped() || !target.well_scoped()) return false;
    for (auto m : map)
        if (m >= target.size()) return false;
    const auto f = as_function();
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map_vars(source.type_of(i), f) != target.type_of(map[i])) return false;
    }
    return true;
}

Renaming Renaming::lift(const Ty& ty) const {
    std::vector<std::size_t> lifted;
    lifted.reserve(map.size() + 1);
    lifted.push_back(0);
    for (auto m : map) lifted.push_back(m + 1);
    return {source.extend(ty), target.extend(rename(*this, ty)), std::move(lifted)};
}

Renaming compose(const Renaming& second, const Renaming& first) {
    if (first.target.size() != second.source.size())
        throw InvariantError("renaming composition: context mismatch");
    std::vector<std::size_t> map(first.map.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = second.map.at(first.map[i]);
    return {first.source, second.target, std::move(map)};
}

Term rename(const Renaming& r, const Term& t) {
    if (!well_scoped(t, r.source.size())) throw InvariantError("rename: term escapes source");
    return map_vars(t, r.as_function());
}

Ty rename(const Renaming& r, const Ty& t) {
    if (!well_scoped(t, r.source.size())) throw InvariantError("rename: type escapes source");
    return map_vars(t, r.as_function());
}

} // namespace tt
