#pragma once

#include <stdexcept>
#include <string>

namespace zpc {

// Precondition / range / ordering violations (CLI exit code 3).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input that fails to parse; carries a 1-based line number.
struct ParseError : DomainError {
    ParseError(const std::string& msg, std::size_t line)
        : DomainError(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::size_t line_number;
};

// Numerical failures: quadrature non-convergence, zero-count reconciliation
// failure after rescan (CLI exit code 4).
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace zpc
