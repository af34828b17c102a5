#pragma once

#include <string>
#include <vector>

#include "qgb/circuit.hpp"
#include "qgb/errors.hpp"

namespace qgb::qasm {

/// 1-based source position of a statement.
struct SourceSpan {
    int line = 0;
    int column = 0;
};

struct RegisterDecl {
    std::string name;
    int size = 0;
};

/// Parsed statement with operands already resolved against the declared
/// registers.
struct Statement {
    SourceSpan span;
    GateKind kind;
    std::vector<int> qubits;
    std::optional<int> clbit;
    std::optional<Angle> angle;
};

/// OpenQASM 2.0 program restricted to the subset this project emits:
/// exactly one qreg and one creg, and statements over
/// h/x/rx/cx/swap/cswap/reset/barrier/measure.
struct QasmProgram {
    std::string version = "2.0";
    std::vector<std::string> includes;
    RegisterDecl qreg;
    RegisterDecl creg;
    std::vector<Statement> statements;
};

struct Token {
    enum class Kind { Identifier, Integer, Real, Symbol, String, End };
    Kind kind;
    std::string text;
    int line = 0;
    int column = 0;
};

/// Lexes QASM text; comments (`//` to end of line) and whitespace are
/// dropped. Throws ParseError on an unexpected character.
std::vector<Token> tokenize(const std::string& text);

/// True when both texts lex to identical token streams. This is the
/// conformance relation used against the reference listings, whose line
/// breaks are typographic.
bool token_equal(const std::string& a, const std::string& b);

/// Recursive-descent parser for the subset grammar. Angle expressions
/// allow signed integer/decimal literals, `pi`, `*`, `/` and parentheses;
/// a rational-multiple-of-pi result keeps its exact form. Errors carry
/// line/column.
QasmProgram parse(const std::string& text);

/// Maps register-indexed operands onto a flat Circuit.
Circuit lower(const QasmProgram& program);

/// Parses an angle expression on its own (the grammar shared with the
/// CLI flags, which also accepts `2pi/3`-style implicit multiplication).
Angle parse_angle_expr(const std::string& text);

/// One statement per line: header, include "qelib1.inc", declarations,
/// then ops in order. Exact angles print as `2*pi/3`-style expressions,
/// others as decimals with 12 significant digits.
std::string emit(const Circuit& circuit, const std::string& qreg_name = "q",
                 const std::string& creg_name = "c");

} // namespace qgb::qasm
