#include <doctest.h>

#include "support.hpp"
#include "tt/checker.hpp"
#include "tt/nbe.hpp"
#include "tt/properties.hpp"
#include "tt/testkit.hpp"

using namespace tt;

TEST_CASE("erase") {
    CHECK(erase(nf::succ(nf::zero())) == succ(zero()));
    CHECK(erase(nf::nat(nf::var(0))) == var(0));
    CHECK(erase(nf::lam(nf::nat(nf::app(nf::var(1), nf::nat(nf::var(0)))))) == lam(app(var(1), var(0))));
    CHECK(erase(nf::at_const("B", {nf::at_const("A", {}, nf::var(0))}, nf::konst("f", {nf::at_const("A", {}, nf::var(0))}))) ==
          tm_const("f", {var(0)}));
    CHECK(erase(nf::fun(nf::nat_ty(), nf::ty_const("B", {nf::zero()}))) == pi(nat(), ty_const("B", {zero()})));
    CHECK(erase(nf::ind(nf::var(0), nf::nat_ty(), nf::zero(), nf::succ(nf::nat(nf::var(0))))) ==
          nat_ind(var(0), nat(), zero(), succ(var(0))));
}

TEST_CASE("rename_nf") {
    const Context one({nat()});
    const NfTm x = nf::nat(nf::var(0));
    CHECK(rename_nf(Renaming::identity(one), x) == x);
    CHECK(rename_nf(Renaming::weakening(one, {nat()}), x) == nf::nat(nf::var(1)));

    // (f : Nat -> Nat, x : Nat) onto (x : Nat, f : Nat -> Nat)
    const Renaming sw{Context({pi(nat(), nat()), nat()}), Context({nat(), pi(nat(), nat())}), {1, 0}};
    REQUIRE(sw.valid());
    const NfTm fx = nf::nat(nf::app(nf::var(1), nf::nat(nf::var(0))));
    CHECK(rename_nf(sw, fx) == nf::nat(nf::app(nf::var(0), nf::nat(nf::var(1)))));
    // binders are respected
    const NfTm under = nf::lam(nf::nat(nf::app(nf::var(2), nf::nat(nf::var(0)))));
    CHECK(rename_nf(sw, under) == nf::lam(nf::nat(nf::app(nf::var(1), nf::nat(nf::var(0))))));
}

TEST_CASE("is_normal") {
    const Signature sig;
    CHECK(is_normal(sig, {}, nat(), succ(zero())));
    CHECK_FALSE(is_normal(sig, {}, nat(), app(lam(var(0)), zero())));
    const Context g({pi(nat(), nat())});
    CHECK_FALSE(is_normal(sig, g, pi(nat(), nat()), var(0)));
    CHECK(is_normal(sig, g, pi(nat(), nat()), lam(app(var(1), var(0)))));
    CHECK_FALSE(is_normal(sig, {}, nat(), nat_ind(zero(), nat(), zero(), zero())));
    CHECK(is_normal(sig, Context({nat()}), nat(), nat_ind(var(0), nat(), zero(), succ(var(0)))));
    // a neutral eliminator whose motive is not normal
    CHECK_FALSE(is_normal(sig, Context({nat()}), nat(),
                          nat_ind(var(0), pi(nat(), nat()), lam(zero()), lam(app(var(1), var(0))))));
    CHECK(is_normal_ty(sig, {}, pi(nat(), nat())));
}

TEST_CASE("is_normal with constants") {
    const Signature sig = testkit::example_signature();
    const Context a({ty_const("A")});
    CHECK(is_normal(sig, a, ty_const("B", {var(0)}), tm_const("f", {var(0)})));
    CHECK_FALSE(is_normal(sig, a, ty_const("B", {var(0)}), tm_const("f", {app(lam(var(0)), var(0))})));
    CHECK(is_normal_ty(sig, a, ty_const("B", {var(0)})));
    CHECK_FALSE(is_normal_ty(sig, a, ty_const("B", {app(lam(var(0)), var(0))})));
}

TEST_CASE("read_normal reconstructs every NbE output") {
    const Signature sigs[] = {Signature{}, testkit::example_signature()};
    for (const auto& sig : sigs)
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto c = testkit::gen_case(sig, seed, 12);
            const NfTm n = normalize_tm(sig, c.ctx, c.ty, c.term);
            const auto back = read_normal(sig, c.ctx, c.ty, erase(n));
            REQUIRE(back.has_value());
            CHECK(*back == n);
            const NfTy nt = normalize_ty(sig, c.ctx, c.ty);
            const auto back_ty = read_normal_ty(sig, c.ctx, erase(nt));
            REQUIRE(back_ty.has_value());
            CHECK(*back_ty == nt);
        }
}

TEST_CASE("erase commutes with rename_nf") {
    const Signature sig = testkit::example_signature();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto c = testkit::gen_renaming_case(sig, seed, 10);
        const NfTm n = normalize_tm(sig, c.renaming.source, c.ty, c.term);
        CHECK(erase(rename_nf(c.renaming, n)) == rename(c.renaming, erase(n)));
    }
}

TEST_CASE("erase is injective on enumerated normal forms") {
    const Signature sig = testkit::example_signature();
    const Context ctx({nat()});
    std::vector<std::pair<NfTm, Term>> seen;
    for (const auto& t : testkit::enum_terms(sig, ctx, nat(), 5)) {
        const NfTm n = normalize_tm(sig, ctx, nat(), t);
        seen.push_back({n, erase(n)});
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (std::size_t j = i + 1; j < seen.size(); ++j)
            CHECK((seen[i].first == seen[j].first) == (seen[i].second == seen[j].second));
}
