#pragma once

// Per-case property checks shared by `tt fuzz`, the unit suites and the
// acceptance runner. Each returns nullopt on success.

#include <cstdint>
#include <optional>
#include <string>

#include "tt/oracle.hpp"
#include "tt/signature.hpp"
#include "tt/syntax.hpp"

namespace tt::testkit {

struct Failure {
    std::string property;
    std::string detail;
};

struct Case {
    Context ctx;
    Ty ty;
    Term term;
};

/// A generated well-typed case: context of length <= 3, a type, and a term
/// of size <= `max_size` at it. Throws GenerationStuck after many retries.
Case gen_case(const Signature& sig, std::uint64_t seed, std::size_t max_size);

struct RenamingCase {
    Renaming renaming;
    Ty ty;
    Term term; // scoped in renaming.source
};

RenamingCase gen_renaming_case(const Signature& sig, std::uint64_t seed, std::size_t max_size);

/// Soundness against the oracle, idempotence, type preservation,
/// η-longness, normality of the oracle output and agreement of both.
std::optional<Failure> normalization_case(const Signature& sig, const Case& c,
                                          std::size_t fuel = kDefaultFuel);

/// rename_nf after normalize equals normalize after rename.
std::optional<Failure> renaming_case(const Signature& sig, const RenamingCase& c);

} // namespace tt::testkit
