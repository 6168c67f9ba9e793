#pragma once

// Name resolution from surface syntax to the core, with definition
// expansion and checking of every declaration.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tt/signature.hpp"
#include "tt/surface.hpp"
#include "tt/syntax.hpp"

namespace tt {

/// `locals` are the names of the enclosing variables, outermost first.
Term elaborate_expr(const Signature& sig, const SExpr& e, const std::vector<std::string>& locals = {});
Ty elaborate_type(const Signature& sig, const SType& t, const std::vector<std::string>& locals = {});

/// Resolves and checks every declaration in order. Term constants take the
/// leading binders of their declared type as parameters. Errors carry the
/// span of the offending declaration or name.
Signature elaborate(const std::vector<SurfaceDecl>& decls, const Signature& base = {});

/// parse + elaborate.
Signature load_signature(std::string_view source);

struct TypedTerm {
    Term term;
    Ty type;
};

/// A closed expression checked at `type`, or at its inferred type when
/// `type` is absent.
TypedTerm elaborate_closed(const Signature& sig, std::string_view expr,
                           std::optional<std::string_view> type = std::nullopt);

} // namespace tt
