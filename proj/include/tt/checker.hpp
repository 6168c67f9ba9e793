#pragma once

// Bidirectional typechecker. Conversion compares NbE normal forms.
// All entry points throw TypeError on failure.

#include "tt/errors.hpp"
#include "tt/signature.hpp"
#include "tt/syntax.hpp"

namespace tt {

void check_ctx(const Signature& sig, const Context& ctx);
void check_ty(const Signature& sig, const Context& ctx, const Ty& ty);

/// Synthesizes a type. Lambdas synthesize only at the head of an
/// application spine, taking their domain from the argument.
Ty infer(const Signature& sig, const Context& ctx, const Term& t);

void check(const Signature& sig, const Context& ctx, const Term& t, const Ty& ty);

bool conv_ty(const Signature& sig, const Context& ctx, const Ty& a, const Ty& b);
bool conv_tm(const Signature& sig, const Context& ctx, const Ty& ty, const Term& t, const Term& u);

/// Non-throwing convenience wrappers.
bool checks(const Signature& sig, const Context& ctx, const Term& t, const Ty& ty);
bool well_formed_ty(const Signature& sig, const Context& ctx, const Ty& ty);

} // namespace tt
