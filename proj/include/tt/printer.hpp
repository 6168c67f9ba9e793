#pragma once

// Surface rendering of core terms and normal forms. Output re-parses to
// the same de Bruijn structure. Free variables take their names from
// `names` (outermost first); binders get fresh names x0, x1, ... by depth.

#include <string>
#include <vector>

#include "tt/normal_form.hpp"
#include "tt/syntax.hpp"

namespace tt {

std::string print_term(const Term& t, const std::vector<std::string>& names = {});
std::string print_ty(const Ty& t, const std::vector<std::string>& names = {});

std::string print_nf(const NfTm& n, const std::vector<std::string>& names = {});
std::string print_nf(const NfTy& n, const std::vector<std::string>& names = {});

/// Default names for a context of `n` unnamed variables.
std::vector<std::string> default_names(std::size_t n);

} // namespace tt
