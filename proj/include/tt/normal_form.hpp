#pragma once

// Normal types, normal terms and neutral terms: β/ι-free, η-long at
// function types. Trees carry the minimal constructor arguments, except
// NeConst which keeps the normal forms of its type's arguments.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tt/handle.hpp"
#include "tt/signature.hpp"
#include "tt/syntax.hpp"

namespace tt {

struct NfTyNode;
struct NfTmNode;
struct NeTmNode;
using NfTy = Handle<NfTyNode>;
using NfTm = Handle<NfTmNode>;
using NeTm = Handle<NeTmNode>;

struct FunNf {
    NfTy domain;
    NfTy codomain; // binds 1
    friend bool operator==(const FunNf&, const FunNf&) = default;
};
struct NatNf {
    friend bool operator==(const NatNf&, const NatNf&) = default;
};
struct TyConstNf {
    std::string name;
    std::vector<NfTm> args;
    friend bool operator==(const TyConstNf&, const TyConstNf&) = default;
};

struct LamNf {
    NfTm body; // binds 1
    friend bool operator==(const LamNf&, const LamNf&) = default;
};
struct ZeroNf {
    friend bool operator==(const ZeroNf&, const ZeroNf&) = default;
};
struct SuccNf {
    NfTm pred;
    friend bool operator==(const SuccNf&, const SuccNf&) = default;
};
/// A neutral at type Nat.
struct NeNat {
    NeTm ne;
    friend bool operator==(const NeNat&, const NeNat&) = default;
};
/// A neutral at the type constant `name` applied to `index`.
struct NeConst {
    std::string name;
    std::vector<NfTm> index;
    NeTm ne;
    friend bool operator==(const NeConst&, const NeConst&) = default;
};

struct VarNe {
    std::size_t index;
    friend bool operator==(const VarNe&, const VarNe&) = default;
};
struct AppNe {
    NeTm fn;
    NfTm arg;
    friend bool operator==(const AppNe&, const AppNe&) = default;
};
struct NatIndNe {
    NeTm scrutinee;
    NfTy motive; // binds 1
    NfTm zcase;
    NfTm scase; // binds 2: predecessor (Var 1), recursive result (Var 0)
    friend bool operator==(const NatIndNe&, const NatIndNe&) = default;
};
struct TmConstNe {
    std::string name;
    std::vector<NfTm> args;
    friend bool operator==(const TmConstNe&, const TmConstNe&) = default;
};

struct NfTyNode {
    std::variant<FunNf, NatNf, TyConstNf> v;
};
struct NfTmNode {
    std::variant<LamNf, ZeroNf, SuccNf, NeNat, NeConst> v;
};
struct NeTmNode {
    std::variant<VarNe, AppNe, NatIndNe, TmConstNe> v;
};

Ty erase(const NfTy& n);
Term erase(const NfTm& n);
Term erase(const NeTm& n);

std::string to_string(const NfTy& n);
std::string to_string(const NfTm& n);
std::string to_string(const NeTm& n);

NfTy rename_nf(const Renaming& r, const NfTy& n);
NfTm rename_nf(const Renaming& r, const NfTm& n);
NeTm rename_nf(const Renaming& r, const NeTm& n);

/// Raw variable-map action (no context bookkeeping).
NfTy map_vars(const NfTy& n, const VarMap& f);
NfTm map_vars(const NfTm& n, const VarMap& f);
NeTm map_vars(const NeTm& n, const VarMap& f);

/// Reconstructs the normal-form tree whose erasure is `t` at type `ty`, or
/// nullopt when `t` is not normal. Precondition: `t` checks at `ty`.
std::optional<NfTm> read_normal(const Signature& sig, const Context& ctx, const Ty& ty,
                                const Term& t);
std::optional<NfTy> read_normal_ty(const Signature& sig, const Context& ctx, const Ty& ty);

bool is_normal(const Signature& sig, const Context& ctx, const Ty& ty, const Term& t);
bool is_normal_ty(const Signature& sig, const Context& ctx, const Ty& ty);

} // namespace tt
