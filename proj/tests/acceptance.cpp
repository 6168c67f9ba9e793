// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "tt/checker.hpp"
#include "tt/elaborate.hpp"
#include "tt/nbe.hpp"
#include "tt/oracle.hpp"
#include "tt/printer.hpp"
#include "tt/properties.hpp"
#include "tt/testkit.hpp"

using namespace tt;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(std::string why) {
        pass = false;
        if (failures.size() < 5) failures.push_back(std::move(why));
    }
};

// Counters shared by criteria 3, 4 and 7.
struct EtaStats {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;
} eta;

void record_eta(const std::string& what, bool ok) {
    ++eta.cases;
    if (!ok) {
        ++eta.failures;
        if (eta.notes.size() < 5) eta.notes.push_back(what);
    }
}

// η-long output, oracle output normal, and both outputs α-equal.
bool eta_and_agreement(const Signature& sig, const Context& ctx, const Ty& ty, const Term& t, const NfTm& n) {
    const auto reread = read_normal(sig, ctx, ty, erase(n));
    const Term oracle = rw_normalize(sig, ctx, ty, t);
    return reread && *reread == n && is_normal(sig, ctx, ty, oracle) && alpha_eq(oracle, erase(n));
}

namespace nf {
NfTm lam(NfTm b) { return LamNf{std::move(b)}; }
NfTm zero() { return ZeroNf{}; }
NfTm succ(NfTm p) { return SuccNf{std::move(p)}; }
NfTm num(std::size_t n) { return n == 0 ? zero() : succ(num(n - 1)); }
NfTm nat(NeTm e) { return NeNat{std::move(e)}; }
NfTm at(std::string c, std::vector<NfTm> idx, NeTm e) { return NeConst{std::move(c), std::move(idx), std::move(e)}; }
NeTm var(std::size_t i) { return VarNe{i}; }
NeTm app(NeTm f, NfTm a) { return AppNe{std::move(f), std::move(a)}; }
NeTm ind(NeTm s, NfTy m, NfTm z, NfTm sc) { return NatIndNe{std::move(s), std::move(m), std::move(z), std::move(sc)}; }
NeTm konst(std::string c, std::vector<NfTm> args) { return TmConstNe{std::move(c), std::move(args)}; }
NfTy natty() { return NatNf{}; }
NfTy fun(NfTy a, NfTy b) { return FunNf{std::move(a), std::move(b)}; }
NfTy tyc(std::string c, std::vector<NfTm> args = {}) { return TyConstNf{std::move(c), std::move(args)}; }
NfTm a_at(std::size_t i) { return at("A", {}, var(i)); }
} // namespace nf

// 1. β/ι golden cases with hand-written expected trees.
Result golden() {
    const Signature sig = testkit::example_signature();
    const Ty A = ty_const("A");
    const Ty Nat = nat();
    const Ty NN = pi(nat(), nat());
    struct Golden {
        std::string name;
        Context ctx;
        Ty ty;
        Term term;
        NfTm expected;
    };
    const Term plus1 = succ(var(0));
    const NfTm f_a = nf::at("B", {nf::a_at(0)}, nf::konst("f", {nf::a_at(0)}));
    const std::vector<Golden> cases = {
        {"ind zero returns the zero case", {}, Nat, nat_ind(zero(), nat(), numeral(1), plus1), nf::num(1)},
        {"ind succ unfolds once", {}, Nat, nat_ind(numeral(1), nat(), zero(), plus1), nf::num(1)},
        {"ind succ sees the predecessor", {}, Nat, nat_ind(numeral(2), nat(), zero(), var(1)), nf::num(1)},
        {"2 + 1 by recursion", {}, Nat, nat_ind(numeral(2), nat(), numeral(1), plus1), nf::num(3)},
        {"function beta", {}, Nat, app(lam(succ(var(0))), zero()), nf::num(1)},
        {"beta onto a variable", Context({Nat}), Nat, app(lam(var(0)), var(0)), nf::nat(nf::var(0))},
        {"beta with a function argument", Context({NN}), Nat, app(lam(app(var(0), zero())), var(0)),
         nf::nat(nf::app(nf::var(0), nf::zero()))},
        {"stuck ind is neutral", Context({Nat}), Nat, nat_ind(var(0), nat(), zero(), plus1),
         nf::nat(nf::ind(nf::var(0), nf::natty(), nf::zero(), nf::succ(nf::nat(nf::var(0)))))},
        {"ind on succ of a neutral", Context({Nat}), Nat, nat_ind(succ(var(0)), nat(), zero(), plus1),
         nf::succ(nf::nat(nf::ind(nf::var(0), nf::natty(), nf::zero(), nf::succ(nf::nat(nf::var(0))))))},
        {"ind at a function motive", {}, NN,
         nat_ind(numeral(1), NN, lam(var(0)), lam(succ(app(var(1), var(0))))), nf::lam(nf::succ(nf::nat(nf::var(0))))},
        {"eta at a function variable", Context({NN}), NN, var(0),
         nf::lam(nf::nat(nf::app(nf::var(1), nf::nat(nf::var(0)))))},
        {"variable of constant type", Context({A}), A, var(0), nf::a_at(0)},
        {"term constant", Context({A}), ty_const("B", {var(0)}), tm_const("f", {var(0)}), f_a},
        {"term constant over a redex", Context({A}), ty_const("B", {var(0)}),
         tm_const("f", {app(lam(var(0)), var(0))}), f_a},
        {"ind at a constant family", Context({A, Nat}), ty_const("B", {var(1)}),
         nat_ind(var(0), ty_const("B", {var(2)}), tm_const("f", {var(1)}), var(0)),
         nf::at("B", {nf::a_at(1)},
                nf::ind(nf::var(0), nf::tyc("B", {nf::a_at(2)}),
                        nf::at("B", {nf::a_at(1)}, nf::konst("f", {nf::a_at(1)})),
                        nf::at("B", {nf::a_at(3)}, nf::var(0))))},
    };
    Result r;
    std::size_t passed = 0;
    for (const auto& c : cases) {
        if (!checks(sig, c.ctx, c.term, c.ty)) {
            r.fail(c.name + ": ill typed");
            continue;
        }
        const NfTm got = normalize_tm(sig, c.ctx, c.ty, c.term);
        if (got == c.expected) ++passed;
        else r.fail(c.name + ": got " + to_string(got));
    }
    if (cases.size() != 15) r.fail("expected 15 cases");
    r.detail = std::to_string(passed) + "/" + std::to_string(cases.size()) + " cases";
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 2. add and mul against numerals, with the oracle confirming each value.
Result arithmetic() {
    Result r;
    const Signature sig = load_signature(read_file(std::string(TT_SAMPLES_DIR) + "/arith.tt"));
    std::size_t n_cases = 0;
    for (std::size_t m = 0; m <= 8; ++m)
        for (std::size_t n = 0; n <= 8; ++n)
            for (const auto& [op, value] : {std::pair{std::string("add"), m + n}, std::pair{std::string("mul"), m * n}}) {
                const std::string src = op + " " + std::to_string(m) + " " + std::to_string(n);
                const Term t = elaborate_expr(sig, parse_expr(src));
                const Term oracle = rw_normalize(sig, {}, nat(), t);
                if (!alpha_eq(oracle, numeral(value))) r.fail(src + ": oracle gives " + print_term(oracle));
                if (!(normalize_tm(sig, {}, nat(), t) == nf::num(value))) r.fail(src);
                ++n_cases;
            }
    r.detail = std::to_string(n_cases) + " cases";
    return r;
}

// 3. Soundness, idempotence and type preservation on generated terms.
Result generated() {
    Result r;
    const Signature sigs[] = {Signature{}, testkit::example_signature()};
    std::size_t n_cases = 0;
    for (const auto& sig : sigs)
        for (std::uint64_t seed = 0; seed < 600; ++seed) {
            const auto c = testkit::gen_case(sig, 0x5eed0000 + seed, 12);
            if (c.ctx.size() > 3 || size(c.term) > 12) r.fail("generator out of bounds");
            const NfTm n = normalize_tm(sig, c.ctx, c.ty, c.term);
            const Term back = erase(n);
            if (!oracle_equal(sig, c.ctx, c.ty, back, c.term)) r.fail("soundness: " + to_string(c.term));
            if (!(normalize_tm(sig, c.ctx, c.ty, back) == n)) r.fail("idempotence: " + to_string(c.term));
            if (!checks(sig, c.ctx, back, c.ty)) r.fail("type preservation: " + to_string(c.term));
            record_eta(to_string(c.term), eta_and_agreement(sig, c.ctx, c.ty, c.term, n));
            ++n_cases;
        }
    r.detail = std::to_string(n_cases) + " terms";
    return r;
}

// 4. Exhaustive uniqueness: oracle classes and NbE normal forms coincide.
Result uniqueness() {
    Result r;
    const Signature sig = testkit::example_signature();
    const Context ctx({nat()});
    const auto terms = testkit::enum_terms(sig, ctx, nat(), 6);
    std::map<std::string, std::pair<Term, NfTm>> classes; // oracle output -> representative
    std::map<std::string, std::string> nf_owner;           // NbE output -> oracle class
    for (const auto& t : terms) {
        const Term o = rw_normalize(sig, ctx, nat(), t);
        const NfTm n = normalize_tm(sig, ctx, nat(), t);
        const std::string key = to_string(o);
        auto [it, fresh] = classes.try_emplace(key, t, n);
        if (!fresh && !(it->second.second == n))
            r.fail("class " + key + " splits: " + to_string(t) + " vs " + to_string(it->second.first));
        auto [own, new_nf] = nf_owner.try_emplace(to_string(n), key);
        if (!new_nf && own->second != key) r.fail("normal form " + own->first + " shared by two classes");
        record_eta(to_string(t), eta_and_agreement(sig, ctx, nat(), t, n));
    }
    if (terms.empty()) r.fail("no terms enumerated");
    r.detail = std::to_string(terms.size()) + " terms, " + std::to_string(classes.size()) + " classes";
    return r;
}

// 5. Renaming stability.
Result renaming() {
    Result r;
    const Signature sigs[] = {Signature{}, testkit::example_signature()};
    std::size_t n_cases = 0;
    std::map<std::string, std::size_t> kinds;
    for (const auto& sig : sigs)
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto c = testkit::gen_renaming_case(sig, 0xabc000 + seed, 12);
            if (!c.renaming.valid()) r.fail("invalid renaming");
            if (const auto f = testkit::renaming_case(sig, c)) r.fail(f->detail);
            ++n_cases;
        }
    r.detail = std::to_string(n_cases) + " pairs";
    return r;
}

// 6. Each equation of the normalization structure on generated inputs.
Result equations() {
    Result r;
    const Signature sig = testkit::example_signature();
    const SemTy dnat = DNat{};
    const SemTy da = DConst{"A", {}};
    std::map<std::string, std::size_t> count;
    auto eq = [&](const std::string& name, bool ok, const std::string& what) {
        ++count[name];
        if (!ok) r.fail(name + ": " + what);
    };

    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        testkit::Generator g(sig, 0xe9000 + seed);
        // every context has a : A, x : Nat and h : Nat -> Nat available
        Context ctx = Context({ty_const("A"), nat(), pi(nat(), nat())});
        const Context extra = g.context(2);
        for (const auto& e : extra.entries()) ctx = ctx.extend(e);
        const std::size_t d = ctx.size();
        const Env env = id_env(sig, ctx);
        auto value_at = [&](const Ty& ty, std::size_t budget) -> std::optional<Value> {
            auto t = g.check(ctx, ty, budget);
            if (!t) return std::nullopt;
            return eval(sig, env, *t);
        };

        eq("nfty(Nat) = Nat", nfty(sig, d, dnat) == NfTy(NatNf{}), "");
        eq("reify(zero) = zero", reify(sig, d, dnat, Value(VZero{})) == nf::zero(), "");
        if (auto v = value_at(nat(), 8))
            eq("reify(succ n) = succ(reify n)",
               reify(sig, d, dnat, Value(VSucc{*v})) == nf::succ(reify(sig, d, dnat, *v)), to_string(*v));

        // neutrals at Nat and at A, from stuck generated terms
        if (auto v = value_at(nat(), 10)) {
            if (const auto* ne = v->as<VNe>())
                eq("reify(reflect(Nat, e)) = NeNat(e)",
                   reify(sig, d, dnat, reflect(dnat, ne->ne)) == nf::nat(reify_ne(sig, d, ne->ne)), to_string(*v));
        }
        if (auto v = value_at(ty_const("A"), 8)) {
            const Neutral e = v->as<VNe>()->ne;
            eq("reify(reflect(A, e)) = NeConst(A, e)",
               reify(sig, d, da, reflect(da, e)) == nf::at("A", {}, reify_ne(sig, d, e)), to_string(e));
            const SemTy db = DConst{"B", {*v}};
            eq("nfty(B b) = B(reify b)", nfty(sig, d, db) == nf::tyc("B", {reify(sig, d, da, *v)}), to_string(e));
            // ConstTm: f b evaluates to reflect(B b, f(b))
            const Term fb = tm_const("f", {*g.check(ctx, ty_const("A"), 1)});
            const Value vf = eval(sig, env, fb);
            const Value a0 = eval(sig, env, std::get<TmConst>(fb.view()).args[0]);
            const Neutral nc = NConst{"f", {a0}};
            eq("f(b) = reflect(B b, f(reify b))",
               reify(sig, d, DConst{"B", {a0}}, vf) ==
                       reify(sig, d, DConst{"B", {a0}}, reflect(DConst{"B", {a0}}, nc)) &&
                   reify_ne(sig, d, nc) == nf::konst("f", {reify(sig, d, da, a0)}),
               to_string(fb));
            // B-neutrals: variables of type B b
            const Neutral be = NConst{"f", {*v}};
            eq("reify(reflect(B b, e)) = NeConst(B, reify b, e)",
               reify(sig, d, db, reflect(db, be)) ==
                   nf::at("B", {reify(sig, d, da, *v)}, reify_ne(sig, d, be)),
               to_string(be));
        }

        // abs clause: reify at Pi applies to a fresh variable
        if (auto ty = g.type(ctx, 4, 1)) {
            const Ty fn_ty = pi(*ty, shift(g.type(ctx, 3, 0).value_or(nat()), 1));
            if (auto v = value_at(fn_ty, 9)) {
                const SemTy s = eval_ty(sig, env, fn_ty);
                const auto& p = *s.as<DPi>();
                const Value x = var_value(p.domain, d);
                eq("reify(abs b) = abs(reify(b x))",
                   reify(sig, d, s, *v) ==
                       nf::lam(reify(sig, d + 1, instantiate(sig, p.codomain, x), apply(sig, *v, x))),
                   to_string(*v));
            }
        }

        // app clause: reflect at Pi applied to v
        {
            const SemTy s = eval_ty(sig, env, pi(nat(), nat()));
            const Neutral h = NVar{2};
            if (auto v = value_at(nat(), 8)) {
                const Value lhs = apply(sig, reflect(s, h), *v);
                const Value rhs = reflect(dnat, NApp{h, *v, dnat});
                eq("reflect(Pi, e) v = reflect(K v, e v)",
                   reify(sig, d, dnat, lhs) == reify(sig, d, dnat, rhs) &&
                       reify_ne(sig, d, NApp{h, *v, dnat}) ==
                           nf::app(reify_ne(sig, d, h), reify(sig, d, dnat, *v)),
                   to_string(*v));
            }
        }

        // ind_Nat_netm clause
        {
            Context under = ctx.extend(nat());
            auto motive = g.type(under, 4, 1);
            if (motive) {
                const TyClosure m{env, *motive};
                auto z = g.check(ctx, subst1(*motive, zero()), 6);
                auto sc = g.check(under.extend(*motive), subst1(shift(*motive, 2, 1), succ(var(1))), 6);
                if (z && sc) {
                    const Neutral scrut = NVar{1};
                    const Value vz = eval(sig, env, *z);
                    const BiClosure bs{env, *sc};
                    const Neutral n = NNatInd{scrut, m, vz, bs};
                    const Value p = var_value(dnat, d);
                    const Value rec = var_value(instantiate(sig, m, p), d + 1);
                    const NeTm expected = nf::ind(
                        reify_ne(sig, d, scrut), nfty(sig, d + 1, instantiate(sig, m, var_value(dnat, d))),
                        reify(sig, d, instantiate(sig, m, Value(VZero{})), vz),
                        reify(sig, d + 2, instantiate(sig, m, Value(VSucc{p})), instantiate(sig, bs, p, rec)));
                    eq("reify_ne(ind e) = ind_ne(...)", reify_ne(sig, d, n) == expected, to_string(*motive));
                }
            }
        }
    }
    std::size_t least = SIZE_MAX;
    for (const auto& [name, n] : count) least = std::min(least, n);
    if (count.size() < 11) r.fail("only " + std::to_string(count.size()) + " equations exercised");
    if (least < 20) r.fail("an equation has fewer than 20 instances");
    r.detail = std::to_string(count.size()) + " equations, >= " + std::to_string(least) + " instances each";
    return r;
}

// 7. η-longness and NbE/oracle agreement on the cases of 3 and 4.
Result eta_long() {
    Result r;
    for (const auto& n : eta.notes) r.fail(n);
    if (eta.failures > 0) r.pass = false;
    if (eta.cases == 0) r.fail("no cases recorded");
    r.detail = std::to_string(eta.cases) + " cases, " + std::to_string(eta.failures) + " failures";
    return r;
}

struct Proc {
    int code;
    std::string out;
};

Proc run_tt(const std::string& args) {
    const std::string cmd = std::string(TT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    while (std::size_t k = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), k);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool valid_record(const nlohmann::json& j) {
    if (!j.is_object() || j.size() != 3) return false;
    if (!j.contains("status") || !j["status"].is_string()) return false;
    if (!j.contains("output") || !j["output"].is_string()) return false;
    if (!j.contains("error")) return false;
    const auto& e = j["error"];
    if (e.is_null()) return true;
    if (!e.is_object() || !e.contains("code") || !e["code"].is_string()) return false;
    for (const char* k : {"line", "col"})
        if (!e.contains(k) || !(e[k].is_null() || e[k].is_number_unsigned())) return false;
    return true;
}

// 8. CLI walkthrough over the sample files.
Result cli() {
    Result r;
    const std::string dir = TT_SAMPLES_DIR;
    const std::string constants = dir + "/constants.tt";
    const std::string arith = dir + "/arith.tt";
    const std::string families = dir + "/families.tt";
    struct Step {
        std::string args;
        int code;
        std::string output; // expected stdout line, empty to skip
    };
    const std::vector<Step> steps = {
        {"check " + constants, 0, ""},
        {"check " + arith, 0, ""},
        {"check " + families, 0, ""},
        {"check " + dir + "/bad_type.tt", 1, ""},
        {"check " + dir + "/bad_parse.tt", 2, ""},
        {"check " + dir + "/missing.tt", 2, ""},
        {"normalize " + arith + " -e 'add 2 3'", 0, "5\n"},
        {"normalize " + arith + " -e 'mul 3 4' --oracle", 0, "12\n"},
        {"normalize " + arith + " -e add --oracle", 0, "\\x0. \\x1. ind(x0; x2. Nat; x1; x2 x3. succ x3)\n"},
        {"normalize " + constants + " -e f -t '(x : A) -> B x' --oracle", 0, "\\x0. f x0\n"},
        {"normalize " + families + " -e 'iter (\\x. succ (succ x)) 3' --oracle", 0, "6\n"},
        {"normalize " + families + " -e '\\x. x'", 1, ""},
        {"normalize " + families + " -e '\\x. x' -t 'Nat -> Nat'", 0, "\\x0. x0\n"},
        {"normalize " + families + " -e 'ind(' ", 2, ""},
        {"equal " + arith + " -e 'add 2 2' -e 'mul 2 2'", 0, "equal\n"},
        {"equal " + arith + " -e 'add 2 2' -e 5 -t Nat", 3, "not equal\n"},
        {"equal " + families + " -e apply_f -e f -t '(x : A) -> B x'", 0, "equal\n"},
        {"fuzz " + constants + " --count 20 --seed 5 --size 10", 0, ""},
    };
    for (const auto& s : steps) {
        const Proc p = run_tt(s.args);
        if (p.code != s.code) r.fail("tt " + s.args + ": exit " + std::to_string(p.code));
        else if (!s.output.empty() && p.out != s.output) r.fail("tt " + s.args + ": printed " + p.out);
        // same command as a JSON record
        const Proc j = run_tt("--json " + s.args);
        try {
            const auto rec = nlohmann::json::parse(j.out);
            if (!valid_record(rec)) r.fail("schema: " + j.out);
            if (nlohmann::json::parse(rec.dump()) != rec) r.fail("round trip: " + j.out);
            if (j.code != s.code) r.fail("json exit for " + s.args);
            if ((s.code == 1 || s.code == 2) && rec["error"].is_null()) r.fail("missing error: " + j.out);
        } catch (const nlohmann::json::exception&) {
            r.fail("not JSON: " + j.out);
        }
    }
    r.detail = std::to_string(steps.size()) + " commands, text and JSON";
    return r;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        std::function<Result()> run;
        double limit_s;
    };
    const std::vector<Criterion> criteria = {
        {1, "beta/iota golden suite", golden, 1},
        {2, "arithmetic add/mul up to 8", arithmetic, 5},
        {3, "soundness, idempotence, type preservation", generated, 60},
        {4, "exhaustive uniqueness at size <= 6", uniqueness, 120},
        {5, "renaming stability", renaming, 30},
        {6, "normalization structure equations", equations, 60},
        {7, "eta-longness and oracle agreement", eta_long, 60},
        {8, "CLI walkthrough", cli, 120},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_s) r.fail("took " + std::to_string(secs) + " s");
        all = all && r.pass;
        std::printf("[%s] %d %s: %s (%.3f s)\n", r.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    r.detail.c_str(), secs);
        for (const auto& f : r.failures) std::printf("       %s\n", f.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
