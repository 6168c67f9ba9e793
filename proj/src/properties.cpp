#include "tt/properties.hpp"

#include "tt/checker.hpp"
#include "tt/nbe.hpp"
#include "tt/normal_form.hpp"
#include "tt/testkit.hpp"

namespace tt::testkit {

Case gen_case(const Signature& sig, std::uint64_t seed, std::size_t max_size) {
    Generator g(sig, seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const Context ctx = g.context(3);
        const auto ty = g.type(ctx, 5, 2);
        if (!ty) continue;
        const std::size_t budget = 1 + g.rng().below(max_size);
        auto t = g.check(ctx, *ty, budget);
        // prefer terms that use most of their budget
        if (t && (2 * size(*t) >= budget || attempt >= 32)) return {ctx, *ty, *t};
    }
    throw GenerationStuck("no case for seed " + std::to_string(seed));
}

RenamingCase gen_renaming_case(const Signature& sig, std::uint64_t seed, std::size_t max_size) {
    Generator g(sig, seed ^ 0x9e3779b97f4a7c15ULL);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const Renaming r = gen_renaming(sig, seed + static_cast<std::uint64_t>(attempt));
        const auto ty = g.type(r.source, 5, 2);
        if (!ty) continue;
        const std::size_t budget = 1 + g.rng().below(max_size);
        auto t = g.check(r.source, *ty, budget);
        if (t && (2 * size(*t) >= budget || attempt >= 32)) return {r, *ty, *t};
    }
    throw GenerationStuck("no renaming case for seed " + std::to_string(seed));
}

namespace {

std::string show(const Case& c) { return to_string(c.term) + " : " + to_string(c.ty); }

} // namespace

std::optional<Failure> normalization_case(const Signature& sig, const Case& c, std::size_t fuel) {
    const NfTm nf = normalize_tm(sig, c.ctx, c.ty, c.term);
    const Term back = erase(nf);
    if (!checks(sig, c.ctx, back, c.ty)) return Failure{"type preservation", show(c)};
    if (!oracle_equal(sig, c.ctx, c.ty, back, c.term, fuel)) return Failure{"soundness", show(c)};
    if (!(normalize_tm(sig, c.ctx, c.ty, back) == nf)) return Failure{"idempotence", show(c)};
    const auto reread = read_normal(sig, c.ctx, c.ty, back);
    if (!reread || !(*reread == nf)) return Failure{"eta-long", show(c)};
    const Term oracle = rw_normalize(sig, c.ctx, c.ty, c.term, fuel);
    if (!is_normal(sig, c.ctx, c.ty, oracle)) return Failure{"oracle output normal", show(c)};
    if (!alpha_eq(oracle, back))
        return Failure{"nbe/oracle agreement", show(c) + " nbe " + to_string(back) + " oracle " + to_string(oracle)};
    return std::nullopt;
}

std::optional<Failure> renaming_case(const Signature& sig, const RenamingCase& c) {
    const Renaming& r = c.renaming;
    const NfTm before = rename_nf(r, normalize_tm(sig, r.source, c.ty, c.term));
    const NfTm after = normalize_tm(sig, r.target, rename(r, c.ty), rename(r, c.term));
    if (!(before == after))
        return Failure{"renaming stability", to_string(c.term) + ": " + to_string(before) + " vs " + to_string(after)};
    return std::nullopt;
}

} // namespace tt::testkit
