#include "tt/domain.hpp"

#include <sstream>

#include "tt/nbe.hpp"

namespace tt {

Value var_value(const SemTy& ty, std::size_t level) { return reflect(ty, NVar{level}); }

namespace {

void render(std::ostream& os, const SemTy& t);
void render(std::ostream& os, const Value& v);
void render(std::ostream& os, const Neutral& n);

void render_env(std::ostream& os, const Env& env) {
    os << '[';
    for (std::size_t i = 0; i < env.size(); ++i) {
        if (i) os << ", ";
        render(os, env[i]);
    }
    os << ']';
}

void render_values(std::ostream& os, const std::vector<Value>& vs) { render_env(os, vs); }

void render(std::ostream& os, const TyClosure& c) {
    os << "clo(";
    render_env(os, c.env);
    os << ", " << to_string(c.body) << ')';
}

void render(std::ostream& os, const SemTy& t) {
    visit(t, overloaded{
                 [&](const DPi& p) {
                     os << "DPi(";
                     render(os, p.domain);
                     os << ", ";
                     render(os, p.codomain);
                     os << ')';
                 },
                 [&](const DNat&) { os << "DNat"; },
                 [&](const DConst& c) {
                     os << "DConst(" << c.name << ", ";
                     render_values(os, c.args);
                     os << ')';
                 },
             });
}

void render(std::ostream& os, const Value& v) {
    visit(v, overloaded{
                 [&](const VLam& l) {
                     os << "VLam(";
                     std::visit(overloaded{
                                    [&](const TmClosure& c) {
                                        os << "clo(";
                                        render_env(os, c.env);
                                        os << ", " << to_string(c.body) << ')';
                                    },
                                    [&](const ReflectClosure& c) {
                                        os << "reflecting(";
                                        render(os, c.head);
                                        os << ", ";
                                        render(os, c.domain);
                                        os << ", ";
                                        render(os, c.codomain);
                                        os << ')';
                                    },
                                },
                                l.closure);
                     os << ')';
                 },
                 [&](const VZero&) { os << "VZero"; },
                 [&](const VSucc& s) {
                     os << "VSucc(";
                     render(os, s.pred);
                     os << ')';
                 },
                 [&](const VNe& n) {
                     os << "VNe(";
                     render(os, n.type);
                     os << ", ";
                     render(os, n.ne);
                     os << ')';
                 },
             });
}

void render(std::ostream& os, const Neutral& n) {
    visit(n, overloaded{
                 [&](const NVar& v) { os << "NVar " << v.level; },
                 [&](const NApp& a) {
                     os << "NApp(";
                     render(os, a.fn);
                     os << ", ";
                     render(os, a.arg);
                     os << ", ";
                     render(os, a.arg_type);
                     os << ')';
                 },
                 [&](const NNatInd& i) {
                     os << "NNatInd(";
                     render(os, i.scrutinee);
                     os << ", ";
                     render(os, i.motive);
                     os << ", ";
                     render(os, i.zcase);
                     os << ", bi";
                     render_env(os, i.scase.env);
                     os << ' ' << to_string(i.scase.body) << ')';
                 },
                 [&](const NConst& c) {
                     os << "NConst(" << c.name << ", ";
                     render_values(os, c.args);
                     os << ')';
                 },
             });
}

bool audit_ty(const SemTy& t, std::size_t depth);
bool audit_ne(const Neutral& n, std::size_t depth);

bool audit_env(const Env& env, std::size_t depth) {
    for (const auto& v : env)
        if (!audit(v, depth)) return false;
    return true;
}

bool audit_ty(const SemTy& t, std::size_t depth) {
    return visit(t, overloaded{
                        [&](const DPi& p) {
                            return audit_ty(p.domain, depth) && audit_env(p.codomain.env, depth);
                        },
                        [](const DNat&) { return true; },
                        [&](const DConst& c) { return audit_env(c.args, depth); },
                    });
}

bool audit_ne(const Neutral& n, std::size_t depth) {
    return visit(n, overloaded{
                        [&](const NVar& v) { return v.level < depth; },
                        [&](const NApp& a) {
                            return audit_ne(a.fn, depth) && audit(a.arg, depth) &&
                                   audit_ty(a.arg_type, depth);
                        },
                        [&](const NNatInd& i) {
                            return audit_ne(i.scrutinee, depth) && audit_env(i.motive.env, depth) &&
                                   audit(i.zcase, depth) && audit_env(i.scase.env, depth);
                        },
                        [&](const NConst& c) { return audit_env(c.args, depth); },
                    });
}

} // namespace

std::string to_string(const SemTy& t) {
    std::ostringstream os;
    render(os, t);
    return os.str();
}
std::string to_string(const Value& v) {
    std::ostringstream os;
    render(os, v);
    return os.str();
}
std::string to_string(const Neutral& n) {
    std::ostringstream os;
    render(os, n);
    return os.str();
}

bool audit(const Value& v, std::size_t depth) {
    return visit(v, overloaded{
                        [&](const VLam& l) {
                            return std::visit(
                                overloaded{
                                    [&](const TmClosure& c) { return audit_env(c.env, depth); },
                                    [&](const ReflectClosure& c) {
                                        return audit_ne(c.head, depth) && audit_ty(c.domain, depth) &&
                                               audit_env(c.codomain.env, depth);
                                    },
                                },
                                l.closure);
                        },
                        [](const VZero&) { return true; },
                        [&](const VSucc& s) { return audit(s.pred, depth); },
                        [&](const VNe& n) {
                            return !n.type.is<DPi>() && audit_ty(n.type, depth) &&
                                   audit_ne(n.ne, depth);
                        },
                    });
}

} // namespace tt
