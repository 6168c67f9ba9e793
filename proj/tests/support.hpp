#pragma once

#include <ostream>

#include "tt/domain.hpp"
#include "tt/normal_form.hpp"
#include "tt/syntax.hpp"

// Lets doctest print kernel objects in failure messages.
namespace tt {
inline std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const Ty& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const NfTm& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const NfTy& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const NeTm& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const Value& v) { return os << to_string(v); }
inline std::ostream& operator<<(std::ostream& os, const SemTy& v) { return os << to_string(v); }
inline std::ostream& operator<<(std::ostream& os, const Neutral& v) { return os << to_string(v); }
} // namespace tt

namespace tt::nf {
inline NfTm lam(NfTm body) { return LamNf{std::move(body)}; }
inline NfTm zero() { return ZeroNf{}; }
inline NfTm succ(NfTm p) { return SuccNf{std::move(p)}; }
inline NfTm nat(NeTm ne) { return NeNat{std::move(ne)}; }
inline NfTm at_const(std::string name, std::vector<NfTm> index, NeTm ne) {
    return NeConst{std::move(name), std::move(index), std::move(ne)};
}
inline NeTm var(std::size_t i) { return VarNe{i}; }
inline NeTm app(NeTm f, NfTm a) { return AppNe{std::move(f), std::move(a)}; }
inline NeTm ind(NeTm s, NfTy m, NfTm z, NfTm sc) {
    return NatIndNe{std::move(s), std::move(m), std::move(z), std::move(sc)};
}
inline NeTm konst(std::string name, std::vector<NfTm> args = {}) { return TmConstNe{std::move(name), std::move(args)}; }
inline NfTy fun(NfTy a, NfTy b) { return FunNf{std::move(a), std::move(b)}; }
inline NfTy nat_ty() { return NatNf{}; }
inline NfTy ty_const(std::string name, std::vector<NfTm> args = {}) { return TyConstNf{std::move(name), std::move(args)}; }
} // namespace tt::nf
