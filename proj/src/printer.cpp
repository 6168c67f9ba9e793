#include "tt/printer.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace tt {

namespace {

enum class Prec { Term = 0, AppHead = 1, Atom = 2 };

class Printer {
public:
    explicit Printer(std::vector<std::string> names) : names_(std::move(names)), ctx_len_(names_.size()) {}

    std::string term(const Term& t, Prec prec) {
        return visit(
            t,
            overloaded{
                [&](const Var& v) -> std::string {
                    if (v.index >= names_.size()) return "#" + std::to_string(v.index);
                    return names_[names_.size() - 1 - v.index];
                },
                [&](const Lam& l) {
                    const std::string x = bind();
                    std::string s = "\\" + x + ". " + term(l.body, Prec::Term);
                    unbind(1);
                    return wrap(s, prec != Prec::Term);
                },
                [&](const App& a) {
                    std::string s = term(a.fn, Prec::AppHead) + " " + term(a.arg, Prec::Atom);
                    return wrap(s, prec == Prec::Atom);
                },
                [](const Zero&) -> std::string { return "0"; },
                [&](const Succ& s) -> std::string {
                    if (auto n = as_numeral(t)) return std::to_string(*n);
                    return wrap("succ " + term(s.pred, Prec::Atom), prec == Prec::Atom);
                },
                [&](const NatInd& n) {
                    std::string s = "ind(" + term(n.scrutinee, Prec::Term) + "; ";
                    const std::string m = bind();
                    s += m + ". " + type(n.motive, false) + "; ";
                    unbind(1);
                    s += term(n.zcase, Prec::Term) + "; ";
                    const std::string p = bind();
                    const std::string r = bind();
                    s += p + " " + r + ". " + term(n.scase, Prec::Term) + ")";
                    unbind(2);
                    return wrap(s, prec != Prec::Term);
                },
                [&](const TmConst& c) { return applied(c.name, c.args, prec); },
            });
    }

    // `arrow_lhs`: printing the domain of an arrow, where arrows need parens.
    std::string type(const Ty& t, bool arrow_lhs) {
        return visit(t, overloaded{
                            [&](const Pi& p) {
                                std::string s;
                                if (occurs(p.codomain, 0)) {
                                    std::string dom = type(p.domain, false);
                                    const std::string x = bind();
                                    s = "(" + x + " : " + dom + ") -> " + type(p.codomain, false);
                                    unbind(1);
                                } else {
                                    std::string dom = type(p.domain, true);
                                    bind();
                                    s = dom + " -> " + type(p.codomain, false);
                                    unbind(1);
                                }
                                return wrap(s, arrow_lhs);
                            },
                            [](const Nat&) -> std::string { return "Nat"; },
                            [&](const TyConst& c) {
                                return applied(c.name, c.args, arrow_lhs ? Prec::AppHead : Prec::Term);
                            },
                        });
    }

private:
    static std::optional<std::size_t> as_numeral(const Term& t) {
        std::size_t n = 0;
        Term cur = t;
        while (const auto* s = cur.as<Succ>()) {
            ++n;
            cur = s->pred;
        }
        if (!cur.is<Zero>()) return std::nullopt;
        return n;
    }

    static std::string wrap(const std::string& s, bool parens) { return parens ? "(" + s + ")" : s; }

    std::string applied(const std::string& name, const std::vector<Term>& args, Prec prec) {
        std::string s = name;
        for (const auto& a : args) s += " " + term(a, Prec::Atom);
        return wrap(s, !args.empty() && prec == Prec::Atom);
    }

    std::string bind() {
        const std::size_t depth = names_.size() - ctx_len_;
        std::string x = "x" + std::to_string(depth);
        const auto begin = names_.begin();
        const auto end = names_.begin() + static_cast<std::ptrdiff_t>(ctx_len_);
        while (std::find(begin, end, x) != end) x += "'";
        names_.push_back(x);
        return x;
    }

    void unbind(std::size_t n) { names_.resize(names_.size() - n); }

    std::vector<std::string> names_;
    std::size_t ctx_len_;
};

} // namespace

std::string print_term(const Term& t, const std::vector<std::string>& names) {
    return Printer(names).term(t, Prec::Term);
}

std::string print_ty(const Ty& t, const std::vector<std::string>& names) {
    return Printer(names).type(t, false);
}

std::string print_nf(const NfTm& n, const std::vector<std::string>& names) {
    return print_term(erase(n), names);
}

std::string print_nf(const NfTy& n, const std::vector<std::string>& names) {
    return print_ty(erase(n), names);
}

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
    return out;
}

} // namespace tt
