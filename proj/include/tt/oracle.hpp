#pragma once

// Independent definitional-equality judge: leftmost-outermost β/ι
// rewriting followed by type-directed η-expansion. Shares no code with the
// evaluator.

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "tt/signature.hpp"
#include "tt/syntax.hpp"

namespace tt {

inline constexpr std::size_t kDefaultFuel = 100000;

class FuelExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Contracts the leftmost-outermost redex, or nullopt if `t` is β/ι-normal.
std::optional<Term> step(const Signature& sig, const Term& t);
std::optional<Ty> step(const Signature& sig, const Ty& t);

/// β/ι normal form by iterated `step`; each contraction costs one unit.
Term reduce(const Signature& sig, const Term& t, std::size_t& fuel);
Ty reduce(const Signature& sig, const Ty& t, std::size_t& fuel);

Term rw_normalize(const Signature& sig, const Context& ctx, const Ty& ty, const Term& t,
                  std::size_t fuel = kDefaultFuel);
Ty rw_normalize_ty(const Signature& sig, const Context& ctx, const Ty& ty,
                   std::size_t fuel = kDefaultFuel);

bool oracle_equal(const Signature& sig, const Context& ctx, const Ty& ty, const Term& t,
                  const Term& u, std::size_t fuel = kDefaultFuel);

} // namespace tt
