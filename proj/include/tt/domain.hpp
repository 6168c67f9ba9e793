#pragma once

// Semantic domain of the normalization model. Variables are de Bruijn
// levels here; closures are defunctionalized so values stay printable and
// comparable.

#include <string>
#include <variant>
#include <vector>

#include "tt/handle.hpp"
#include "tt/syntax.hpp"

namespace tt {

struct SemTyNode;
struct ValueNode;
struct NeutralNode;
using SemTy = Handle<SemTyNode>;
using Value = Handle<ValueNode>;
using Neutral = Handle<NeutralNode>;

/// Values of the enclosing binders, outermost first: position i holds the
/// variable of level i, so index k reads `env[env.size() - 1 - k]`.
using Env = std::vector<Value>;

struct TyClosure {
    Env env;
    Ty body; // binds 1
    friend bool operator==(const TyClosure&, const TyClosure&) = default;
};

struct TmClosure {
    Env env;
    Term body; // binds 1
    friend bool operator==(const TmClosure&, const TmClosure&) = default;
};

/// λd. reflect(codomain(d), NApp(head, d, domain)): the value of a neutral
/// at a function type.
struct ReflectClosure {
    Neutral head;
    SemTy domain;
    TyClosure codomain;
    friend bool operator==(const ReflectClosure&, const ReflectClosure&) = default;
};

using Closure = std::variant<TmClosure, ReflectClosure>;

struct BiClosure {
    Env env;
    Term body; // binds 2
    friend bool operator==(const BiClosure&, const BiClosure&) = default;
};

struct DPi {
    SemTy domain;
    TyClosure codomain;
    friend bool operator==(const DPi&, const DPi&) = default;
};
struct DNat {
    friend bool operator==(const DNat&, const DNat&) = default;
};
struct DConst {
    std::string name;
    std::vector<Value> args;
    friend bool operator==(const DConst&, const DConst&) = default;
};

struct VLam {
    Closure closure;
    friend bool operator==(const VLam&, const VLam&) = default;
};
struct VZero {
    friend bool operator==(const VZero&, const VZero&) = default;
};
struct VSucc {
    Value pred;
    friend bool operator==(const VSucc&, const VSucc&) = default;
};
/// A neutral at Nat or at a type constant; never at a function type.
struct VNe {
    SemTy type;
    Neutral ne;
    friend bool operator==(const VNe&, const VNe&) = default;
};

struct NVar {
    std::size_t level;
    friend bool operator==(const NVar&, const NVar&) = default;
};
struct NApp {
    Neutral fn;
    Value arg;
    SemTy arg_type;
    friend bool operator==(const NApp&, const NApp&) = default;
};
struct NNatInd {
    Neutral scrutinee;
    TyClosure motive;
    Value zcase;
    BiClosure scase;
    friend bool operator==(const NNatInd&, const NNatInd&) = default;
};
struct NConst {
    std::string name;
    std::vector<Value> args;
    friend bool operator==(const NConst&, const NConst&) = default;
};

struct SemTyNode {
    std::variant<DPi, DNat, DConst> v;
};
struct ValueNode {
    std::variant<VLam, VZero, VSucc, VNe> v;
};
struct NeutralNode {
    std::variant<NVar, NApp, NNatInd, NConst> v;
};

/// The value of the variable at `level`, i.e. reflect(ty, NVar level).
Value var_value(const SemTy& ty, std::size_t level);

std::string to_string(const SemTy& t);
std::string to_string(const Value& v);
std::string to_string(const Neutral& n);

/// Structural audit: no VNe carries a function type, and every variable
/// level is below `depth`. Closure bodies are not entered.
bool audit(const Value& v, std::size_t depth);

} // namespace tt
