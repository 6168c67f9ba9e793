#pragma once

// Generators and enumerators of well-typed terms, contexts and renamings
// for the property suites. Deterministic per seed on every platform.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tt/signature.hpp"
#include "tt/syntax.hpp"

namespace tt::testkit {

class GenerationStuck : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The running example's constants: A, B (x : A), f : (x : A) -> B x.
Signature example_signature();

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, n); n > 0.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    bool chance(std::size_t num, std::size_t den) { return below(den) < num; }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Typed synthesis of terms. Sizes are node counts, binders included.
class Generator {
public:
    Generator(const Signature& sig, std::uint64_t seed) : sig_(sig), rng_(seed) {}

    /// A term of size <= `budget` that checks at `ty`, or nullopt.
    std::optional<Term> check(const Context& ctx, const Ty& ty, std::size_t budget);
    /// A term of size <= `budget` together with a type it checks at.
    std::optional<std::pair<Term, Ty>> infer(const Context& ctx, std::size_t budget);
    /// A well-formed type with at most `max_pi` nested function types.
    std::optional<Ty> type(const Context& ctx, std::size_t budget, std::size_t max_pi);
    /// A well-formed context of length <= `max_len`.
    Context context(std::size_t max_len);

    Rng& rng() { return rng_; }

private:
    std::optional<Term> spine(const Context& ctx, const Ty& target, std::size_t budget);
    std::optional<Term> induction(const Context& ctx, const Ty& target, std::size_t budget);
    std::optional<Term> redex(const Context& ctx, const Ty& target, std::size_t budget);
    std::optional<std::pair<Term, Ty>> apply_args(const Context& ctx, Term head, Ty head_ty,
                                                  std::size_t nargs, std::size_t budget);
    std::optional<std::vector<Term>> telescope_args(const Context& ctx, const std::vector<Ty>& params,
                                                    std::size_t budget);
    std::vector<std::size_t> split(std::size_t total, std::size_t parts);

    const Signature& sig_;
    Rng rng_;
};

/// Throws GenerationStuck when no term is found.
Term gen_term(const Signature& sig, const Context& ctx, const Ty& ty, std::size_t size,
              std::uint64_t seed);

/// All well-typed terms at `ty` of size <= `max_size`, duplicate-free,
/// ordered by size.
std::vector<Term> enum_terms(const Signature& sig, const Context& ctx, const Ty& ty,
                             std::size_t max_size);

/// A type-respecting renaming between generated contexts. Covers
/// identities, weakenings, exchanges and contractions.
Renaming gen_renaming(const Signature& sig, std::uint64_t seed);

/// Number of nested function types along the codomain spine and domains.
std::size_t pi_depth(const Ty& ty);

} // namespace tt::testkit
