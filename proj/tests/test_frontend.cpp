#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "tt/cli.hpp"
#include "tt/elaborate.hpp"
#include "tt/nbe.hpp"
#include "tt/printer.hpp"
#include "tt/properties.hpp"
#include "tt/surface.hpp"
#include "tt/testkit.hpp"

using namespace tt;

namespace {

constexpr const char* kConstants = "postulate A\npostulate B (x : A)\npostulate f : (x : A) -> B x\n";
constexpr const char* kAdd = "def add : Nat -> Nat -> Nat := \\m. \\n. ind(m; _. Nat; n; _ r. succ r)";

ParseError parse_error(std::string_view src) {
    try {
        parse(src);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("parsed");
    return ParseError("", {}, {});
}

} // namespace

TEST_CASE("parse the running constants") {
    const auto decls = parse(kConstants);
    REQUIRE(decls.size() == 3);
    const auto& a = std::get<SurfaceDecl::Postulate>(decls[0].v);
    CHECK(a.name == "A");
    CHECK(a.params.empty());
    CHECK_FALSE(a.type.has_value());
    CHECK(std::get<SurfaceDecl::Postulate>(decls[1].v).params.size() == 1);
    CHECK(std::get<SurfaceDecl::Postulate>(decls[2].v).type.has_value());

    const Signature sig = elaborate(decls);
    CHECK(sig.lookup("A") == Declaration(PostulateTy{"A", {}}));
    CHECK(sig.lookup("B") == Declaration(PostulateTy{"B", {ty_const("A")}}));
    CHECK(sig.lookup("f") == Declaration(PostulateTm{"f", {ty_const("A")}, ty_const("B", {var(0)})}));
}

TEST_CASE("numerals and definitions") {
    const auto decls = parse("def two : Nat := 2");
    REQUIRE(decls.size() == 1);
    const Signature sig = elaborate(decls);
    CHECK(std::get<Define>(sig.lookup("two")).body == succ(succ(zero())));

    const Signature arith = load_signature(kAdd);
    const auto& add = std::get<Define>(arith.lookup("add"));
    CHECK(add.type == pi(nat(), pi(nat(), nat())));
    CHECK(add.body == lam(lam(nat_ind(var(1), nat(), var(0), succ(var(0))))));
}

TEST_CASE("definitions expand at use sites") {
    const Signature sig = load_signature(std::string(kAdd) + "\ndef three : Nat := add 2 1");
    const Term three = std::get<Define>(sig.lookup("three")).body;
    CHECK(normalize_tm(sig, {}, nat(), three) == nf::succ(nf::succ(nf::succ(nf::zero()))));
    // the expansion mentions no definition names
    CHECK(to_string(three).find("add") == std::string::npos);
}

TEST_CASE("surface sugar") {
    CHECK(elaborate_expr({}, parse_expr("fun x y => x")) == lam(lam(var(1))));
    CHECK(elaborate_expr({}, parse_expr("λx. x")) == lam(var(0)));
    CHECK(elaborate_type({}, parse_type("Nat → Nat")) == pi(nat(), nat()));
    CHECK(elaborate_expr({}, parse_expr("succ (succ zero) -- two")) == numeral(2));
    CHECK(elaborate_type({}, parse_type("(x : Nat) -> Nat -> Nat")) == pi(nat(), pi(nat(), nat())));
}

TEST_CASE("partial application of term constants is η-expanded") {
    const Signature sig = load_signature("postulate g : Nat -> Nat -> Nat");
    CHECK(elaborate_expr(sig, parse_expr("g")) == lam(lam(tm_const("g", {var(1), var(0)}))));
    CHECK(elaborate_expr(sig, parse_expr("g 1")) == lam(tm_const("g", {numeral(1), var(0)})));
    CHECK(elaborate_expr(sig, parse_expr("g 1 2")) == tm_const("g", {numeral(1), numeral(2)}));
}

TEST_CASE("parse errors carry positions and expected tokens") {
    const auto e = parse_error("postulate A\ndef x : Nat := ind(0; _. Nat; 0)");
    CHECK(e.pos().line == 2);
    CHECK(e.pos().col == 32);
    CHECK(std::find(e.expected().begin(), e.expected().end(), "';'") != e.expected().end());
    const auto e2 = parse_error("def : Nat := 0");
    CHECK(e2.pos() == SourcePos{1, 5});
    CHECK_FALSE(e2.expected().empty());
}

TEST_CASE("elaboration errors carry spans inside the input") {
    const std::string src = "postulate A\ndef y : Nat := q";
    try {
        load_signature(src);
        FAIL("accepted");
    } catch (const TypeError& e) {
        CHECK(e.code() == ErrorCode::UnknownName);
        REQUIRE(e.span().has_value());
        CHECK(e.span()->start == SourcePos{2, 16});
        CHECK(e.span()->end <= src.size());
    }
    try {
        load_signature("def z : Nat := \\x. x");
        FAIL("accepted");
    } catch (const TypeError& e) {
        CHECK(e.code() == ErrorCode::Mismatch);
        REQUIRE(e.span().has_value());
        CHECK(e.span()->start.line == 1);
    }
}

TEST_CASE("print_nf") {
    CHECK(print_nf(nf::succ(nf::succ(nf::zero()))) == "2");
    CHECK(print_nf(nf::lam(nf::nat(nf::app(nf::var(1), nf::nat(nf::var(0))))), {"g"}) == "\\x0. g x0");
    CHECK(print_nf(nf::fun(nf::nat_ty(), nf::nat_ty())) == "Nat -> Nat");
    CHECK(print_nf(nf::fun(nf::ty_const("A"), nf::ty_const("B", {nf::at_const("A", {}, nf::var(0))}))) ==
          "(x0 : A) -> B x0");
    CHECK(print_nf(nf::succ(nf::nat(nf::var(0))), {"n"}) == "succ n");
    CHECK(print_term(lam(var(1)), {"x0"}) == "\\x0'. x0");
}

TEST_CASE("print then parse is the identity on normal forms") {
    const Signature sigs[] = {Signature{}, testkit::example_signature()};
    for (const auto& sig : sigs)
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const auto c = testkit::gen_case(sig, seed, 12);
            const auto names = default_names(c.ctx.size());
            const NfTm n = normalize_tm(sig, c.ctx, c.ty, c.term);
            const std::string text = print_nf(n, names);
            CHECK_MESSAGE(elaborate_expr(sig, parse_expr(text), names) == erase(n), text);
            const NfTy nt = normalize_ty(sig, c.ctx, c.ty);
            CHECK(elaborate_type(sig, parse_type(print_nf(nt, names)), names) == erase(nt));
            // arbitrary terms too
            CHECK(elaborate_expr(sig, parse_expr(print_term(c.term, names)), names) == c.term);
        }
}

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "tt");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli usage errors") {
    CHECK(run({}).code == kExitParseError);
    CHECK(run({"check"}).code == kExitParseError);
    CHECK(run({"check", "/nonexistent/file.tt"}).code == kExitParseError);
    CHECK(run({"--help"}).code == kExitOk);
}
