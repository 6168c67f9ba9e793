#include "tt/signature.hpp"

#include "tt/checker.hpp"
#include "tt/errors.hpp"

namespace tt {

const std::string& name_of(const Declaration& d) {
    return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

bool Signature::contains(std::string_view name) const { return find(name) != nullptr; }

const Declaration* Signature::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : &decls_[it->second];
}

const Declaration& Signature::lookup(std::string_view name) const {
    if (const auto* d = find(name)) return *d;
    throw TypeError(ErrorCode::UnknownName, "unknown name '" + std::string(name) + "'");
}

const PostulateTy& Signature::type_constant(std::string_view name) const {
    if (const auto* d = find(name))
        if (const auto* c = std::get_if<PostulateTy>(d)) return *c;
    throw TypeError(ErrorCode::UnknownConstant, "unknown type constant '" + std::string(name) + "'");
}

const PostulateTm& Signature::term_constant(std::string_view name) const {
    if (const auto* d = find(name))
        if (const auto* c = std::get_if<PostulateTm>(d)) return *c;
    throw TypeError(ErrorCode::UnknownConstant, "unknown term constant '" + std::string(name) + "'");
}

Signature Signature::with(Declaration d) const {
    Signature out = *this;
    out.index_.emplace(name_of(d), out.decls_.size());
    out.decls_.push_back(std::move(d));
    return out;
}

Signature Signature::without_definitions() const {
    Signature out;
    for (const auto& d : decls_)
        if (!std::holds_alternative<Define>(d)) out = out.with(d);
    return out;
}

namespace {

void check_telescope(const Signature& sig, const std::vector<Ty>& params, Context& ctx) {
    for (const auto& p : params) {
        check_ty(sig, ctx, p);
        ctx = ctx.extend(p);
    }
}

} // namespace

Signature declare(const Signature& sig, Declaration d) {
    const auto& name = name_of(d);
    if (sig.contains(name))
        throw TypeError(ErrorCode::DuplicateName, "'" + name + "' is already declared");
    std::visit(overloaded{
                   [&](const PostulateTy& c) {
                       Context ctx;
                       check_telescope(sig, c.params, ctx);
                   },
                   [&](const PostulateTm& c) {
                       Context ctx;
                       check_telescope(sig, c.params, ctx);
                       check_ty(sig, ctx, c.result);
                   },
                   [&](const Define& def) {
                       check_ty(sig, Context{}, def.type);
                       check(sig, Context{}, def.body, def.type);
                   },
               },
               d);
    return sig.with(std::move(d));
}

bool well_formed(const Signature& sig) {
    try {
        Signature rebuilt;
        for (const auto& d : sig.decls()) rebuilt = declare(rebuilt, d);
        return true;
    } catch (const TypeError&) {
        return false;
    }
}

} // namespace tt
