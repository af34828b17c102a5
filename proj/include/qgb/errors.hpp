#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgb {

/// Structural rule violation in a Circuit, pointing at the first bad op.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::size_t op_index, std::string rule, const std::string& what)
        : std::runtime_error(what), op_index_(op_index), rule_(std::move(rule)) {}

    std::size_t op_index() const noexcept { return op_index_; }
    const std::string& rule() const noexcept { return rule_; }

private:
    std::size_t op_index_;
    std::string rule_;
};

/// Syntax or semantic error in QASM text, with 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

/// Output bitstring is not a one-hot pattern on the measured register.
class DecodeError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Branch-enumeration budget exceeded in the exact distribution pass.
class BranchBudgetError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qgb
