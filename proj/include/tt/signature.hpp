#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tt/syntax.hpp"

namespace tt {

/// Type constant `name (x0 : P0) ... (xn : Pn)`; each Pi is scoped over the
/// parameters before it.
struct PostulateTy {
    std::string name;
    std::vector<Ty> params;
    friend bool operator==(const PostulateTy&, const PostulateTy&) = default;
};

/// Term constant with a parameter telescope and a result type scoped over
/// all parameters.
struct PostulateTm {
    std::string name;
    std::vector<Ty> params;
    Ty result;
    friend bool operator==(const PostulateTm&, const PostulateTm&) = default;
};

/// Transparent abbreviation for a closed term. Kernel terms never refer to
/// definitions; the elaborator substitutes the body.
struct Define {
    std::string name;
    Ty type;
    Term body;
    friend bool operator==(const Define&, const Define&) = default;
};

using Declaration = std::variant<PostulateTy, PostulateTm, Define>;

const std::string& name_of(const Declaration& d);

class Signature {
public:
    const std::vector<Declaration>& decls() const { return decls_; }
    std::size_t size() const { return decls_.size(); }
    bool contains(std::string_view name) const;

    const Declaration* find(std::string_view name) const;
    /// Throws TypeError(UnknownName).
    const Declaration& lookup(std::string_view name) const;
    /// Throws TypeError(UnknownConstant) when absent or of another kind.
    const PostulateTy& type_constant(std::string_view name) const;
    const PostulateTm& term_constant(std::string_view name) const;

    /// Appends without checking. Prefer `declare`.
    Signature with(Declaration d) const;

    /// Definition-free copy (definitions are already expanded in every
    /// kernel term, so dropping them changes nothing else).
    Signature without_definitions() const;

private:
    std::vector<Declaration> decls_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Checks `d` against `sig` and appends it. Throws TypeError
/// (DuplicateName or the checker's error).
Signature declare(const Signature& sig, Declaration d);

/// Re-checks every declaration against its prefix.
bool well_formed(const Signature& sig);

} // namespace tt
