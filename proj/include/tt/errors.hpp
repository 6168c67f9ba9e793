#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tt {

/// Breach of a kernel invariant (scope escape, applying a non-function
/// value, ...). Never caused by user input that passed the checker.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class ErrorCode {
    UnboundVariable,
    NotAFunction,
    CannotInfer,
    MotiveMismatch,
    UnknownConstant,
    UnknownName,
    ArityMismatch,
    Mismatch,
    DuplicateName,
    IllFormedDeclaration,
};

std::string_view error_code_name(ErrorCode code);

/// 1-based position in a source text.
struct SourcePos {
    std::size_t line = 1;
    std::size_t col = 1;
    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct Span {
    std::size_t begin = 0; // byte offsets, half open
    std::size_t end = 0;
    SourcePos start;
    friend bool operator==(const Span&, const Span&) = default;
};

class TypeError : public std::runtime_error {
public:
    TypeError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    const std::optional<Span>& span() const { return span_; }

    /// Printed normal forms of the two sides of a failed comparison.
    const std::string& expected() const { return expected_; }
    const std::string& actual() const { return actual_; }
    TypeError& with_types(std::string expected, std::string actual) {
        expected_ = std::move(expected);
        actual_ = std::move(actual);
        return *this;
    }

    /// Attach a span unless a more precise one is already present.
    TypeError& at(const Span& span) {
        if (!span_) span_ = span;
        return *this;
    }

private:
    ErrorCode code_;
    std::optional<Span> span_;
    std::string expected_;
    std::string actual_;
};

} // namespace tt
