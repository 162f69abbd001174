#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strata {

/// Error categories surfaced by the library. The CLI maps each category to a
/// machine-parsable one-line message on stderr and exit code 2.
enum class ErrorKind {
    syntax,      ///< malformed notation (carries a 1-based position)
    order,       ///< a singularity order violates the flavor's range
    sum,         ///< the order sum violates the flavor's congruence/bound
    flavor,      ///< operation applied to the wrong differential flavor
    domain,      ///< argument outside an operation's domain
    degenerate,  ///< degenerate intersection form
    overflow,    ///< exact arithmetic exceeded 64-bit reporting range
};

inline std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::syntax: return "syntax";
        case ErrorKind::order: return "order";
        case ErrorKind::sum: return "sum";
        case ErrorKind::flavor: return "flavor";
        case ErrorKind::domain: return "domain";
        case ErrorKind::degenerate: return "degenerate";
        case ErrorKind::overflow: return "overflow";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    Error(ErrorKind kind, const std::string& message, std::size_t position)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message + " at position " +
                             std::to_string(position)),
          kind_(kind),
          position_(position) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// 1-based character position for syntax errors, 0 otherwise.
    std::size_t position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::size_t position_ = 0;
};

}  // namespace strata
