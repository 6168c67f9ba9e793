#pragma once

// Normalization by evaluation: evaluate syntax into the semantic domain,
// read values back as η-long normal forms.

#include <cstddef>

#include "tt/domain.hpp"
#include "tt/normal_form.hpp"
#include "tt/signature.hpp"
#include "tt/syntax.hpp"

namespace tt {

SemTy eval_ty(const Signature& sig, const Env& env, const Ty& ty);
Value eval(const Signature& sig, const Env& env, const Term& t);

/// Throws InvariantError when `fn` is not a function value.
Value apply(const Signature& sig, const Value& fn, const Value& arg);

SemTy instantiate(const Signature& sig, const TyClosure& clo, const Value& arg);
Value instantiate(const Signature& sig, const BiClosure& clo, const Value& pred,
                  const Value& rec);

Value reflect(const SemTy& ty, Neutral ne);

/// Read-back at `depth` enclosing variables. Levels >= depth throw
/// InvariantError (scope escape).
NfTm reify(const Signature& sig, std::size_t depth, const SemTy& ty, const Value& v);
NeTm reify_ne(const Signature& sig, std::size_t depth, const Neutral& ne);
NfTy nfty(const Signature& sig, std::size_t depth, const SemTy& ty);

/// Reflected variables for every entry of `ctx`.
Env id_env(const Signature& sig, const Context& ctx);

NfTm normalize_tm(const Signature& sig, const Context& ctx, const Ty& ty, const Term& t);
NfTy normalize_ty(const Signature& sig, const Context& ctx, const Ty& ty);

} // namespace tt
