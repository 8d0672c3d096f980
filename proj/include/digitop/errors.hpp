#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace digitop {

/// Malformed textual input (graph6, adjacency lists, catalog files).
/// `offset` is a byte offset within the offending line; `line` is the
/// 1-based line number when the source is a multi-line file, else 0.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset = 0, long line = 0)
        : std::runtime_error(what), offset_(offset), line_(line) {}

    std::size_t offset() const { return offset_; }
    long line() const { return line_; }

private:
    std::size_t offset_;
    long line_;
};

/// A bounded search or enumeration ran out of its configured budget.
/// Callers that promise three-valued answers catch this and report
/// "undecided" instead of guessing.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Exact integer arithmetic would have overflowed the fixed-width carrier.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace digitop
