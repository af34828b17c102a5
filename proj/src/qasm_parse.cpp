#include "qgb/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>

namespace qgb::qasm {

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    const std::size_t n = text.size();

    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };

    while (i < n) {
        const char ch = text[i];
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
            advance(1);
            continue;
        }
        if (ch == '/' && i + 1 < n && text[i + 1] == '/') {
            while (i < n && text[i] != '\n') advance(1);
            continue;
        }

        const int tok_line = line;
        const int tok_col = col;

        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t len = 1;
            while (i + len < n && (std::isalnum(static_cast<unsigned char>(text[i + len])) ||
                                   text[i + len] == '_'))
                ++len;
            tokens.push_back({Token::Kind::Identifier, text.substr(i, len), tok_line, tok_col});
            advance(len);
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(ch)) ||
            (ch == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            std::size_t len = 0;
            bool real = false;
            while (i + len < n && std::isdigit(static_cast<unsigned char>(text[i + len]))) ++len;
            if (i + len < n && text[i + len] == '.') {
                real = true;
                ++len;
                while (i + len < n && std::isdigit(static_cast<unsigned char>(text[i + len])))
                    ++len;
            }
            if (i + len < n && (text[i + len] == 'e' || text[i + len] == 'E')) {
                std::size_t e = len + 1;
                if (i + e < n && (text[i + e] == '+' || text[i + e] == '-')) ++e;
                if (i + e < n && std::isdigit(static_cast<unsigned char>(text[i + e]))) {
                    real = true;
                    len = e;
                    while (i + len < n && std::isdigit(static_cast<unsigned char>(text[i + len])))
                        ++len;
                }
            }
            tokens.push_back({real ? Token::Kind::Real : Token::Kind::Integer,
                              text.substr(i, len), tok_line, tok_col});
            advance(len);
            continue;
        }

        if (ch == '"') {
            std::size_t len = 1;
            while (i + len < n && text[i + len] != '"' && text[i + len] != '\n') ++len;
            if (i + len >= n || text[i + len] != '"')
                throw ParseError(tok_line, tok_col, "unterminated string literal");
            ++len;
            tokens.push_back({Token::Kind::String, text.substr(i, len), tok_line, tok_col});
            advance(len);
            continue;
        }

        if (ch == '-' && i + 1 < n && text[i + 1] == '>') {
            tokens.push_back({Token::Kind::Symbol, "->", tok_line, tok_col});
            advance(2);
            continue;
        }

        if (std::string(";,[]()*/-").find(ch) != std::string::npos) {
            tokens.push_back({Token::Kind::Symbol, std::string(1, ch), tok_line, tok_col});
            advance(1);
            continue;
        }

        throw ParseError(tok_line, tok_col, std::string("unexpected character '") + ch + "'");
    }

    tokens.push_back({Token::Kind::End, "", line, col});
    return tokens;
}

bool token_equal(const std::string& a, const std::string& b) {
    const auto ta = tokenize(a);
    const auto tb = tokenize(b);
    if (ta.size() != tb.size()) return false;
    for (std::size_t i = 0; i < ta.size(); ++i)
        if (ta[i].kind != tb[i].kind || ta[i].text != tb[i].text) return false;
    return true;
}

namespace {

// Value tracked as rational * pi^pi_pow while every step stays exact;
// the double mirror is always maintained.
struct ExprValue {
    double value = 0.0;
    bool exact = false;
    std::int64_t num = 0;
    std::int64_t den = 1;
    int pi_pow = 0;
};

bool mul_overflows(std::int64_t a, std::int64_t b) {
    const __int128 wide = static_cast<__int128>(a) * b;
    return wide > INT64_MAX || wide < INT64_MIN;
}

void normalize(ExprValue& v) {
    if (!v.exact) return;
    if (v.den < 0) {
        v.num = -v.num;
        v.den = -v.den;
    }
    const std::int64_t g = std::gcd(v.num < 0 ? -v.num : v.num, v.den);
    if (g > 1) {
        v.num /= g;
        v.den /= g;
    }
}

class ExprParser {
public:
    ExprParser(const std::vector<Token>& tokens, std::size_t& pos) : tokens_(tokens), pos_(pos) {}

    ExprValue parse() { return parse_term(); }

private:
    const Token& peek() const { return tokens_[pos_]; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(peek().line, peek().column, message);
    }

    bool is_symbol(const char* s) const {
        return peek().kind == Token::Kind::Symbol && peek().text == s;
    }

    ExprValue parse_term() {
        ExprValue lhs = parse_factor();
        for (;;) {
            if (is_symbol("*")) {
                ++pos_;
                combine(lhs, parse_factor(), true);
            } else if (is_symbol("/")) {
                ++pos_;
                combine(lhs, parse_factor(), false);
            } else if (peek().kind == Token::Kind::Identifier && peek().text == "pi") {
                // implicit multiplication, e.g. `2pi/3` from the CLI flags
                combine(lhs, parse_factor(), true);
            } else {
                break;
            }
        }
        return lhs;
    }

    ExprValue parse_factor() {
        if (is_symbol("-")) {
            ++pos_;
            ExprValue v = parse_factor();
            v.value = -v.value;
            v.num = -v.num;
            return v;
        }
        return parse_primary();
    }

    ExprValue parse_primary() {
        const Token& tok = peek();
        if (tok.kind == Token::Kind::Identifier && tok.text == "pi") {
            ++pos_;
            ExprValue v;
            v.value = std::numbers::pi;
            v.exact = true;
            v.num = 1;
            v.den = 1;
            v.pi_pow = 1;
            return v;
        }
        if (tok.kind == Token::Kind::Integer || tok.kind == Token::Kind::Real) {
            ++pos_;
            return literal(tok);
        }
        if (is_symbol("(")) {
            ++pos_;
            ExprValue v = parse_term();
            if (!is_symbol(")")) fail("expected ')'");
            ++pos_;
            return v;
        }
        fail("expected a number, 'pi' or '('");
    }

    ExprValue literal(const Token& tok) const {
        ExprValue v;
        v.value = std::stod(tok.text);
        if (tok.text.find('e') != std::string::npos || tok.text.find('E') != std::string::npos)
            return v; // scientific notation stays numeric-only
        const auto dot = tok.text.find('.');
        std::string digits = tok.text;
        std::size_t frac_len = 0;
        if (dot != std::string::npos) {
            frac_len = tok.text.size() - dot - 1;
            digits.erase(dot, 1);
        }
        if (digits.size() > 18) return v;
        std::int64_t num = 0;
        for (char c : digits) num = num * 10 + (c - '0');
        std::int64_t den = 1;
        for (std::size_t k = 0; k < frac_len; ++k) den *= 10;
        v.exact = true;
        v.num = num;
        v.den = den;
        normalize(v);
        return v;
    }

    void combine(ExprValue& lhs, const ExprValue& rhs, bool multiply) const {
        if (multiply) {
            lhs.value *= rhs.value;
        } else {
            if (rhs.value == 0.0) fail("division by zero in angle expression");
            lhs.value /= rhs.value;
        }
        if (!lhs.exact || !rhs.exact) {
            lhs.exact = false;
            return;
        }
        const std::int64_t rn = multiply ? rhs.num : rhs.den;
        const std::int64_t rd = multiply ? rhs.den : rhs.num;
        if (rd == 0) fail("division by zero in angle expression");
        if (mul_overflows(lhs.num, rn) || mul_overflows(lhs.den, rd)) {
            lhs.exact = false;
            return;
        }
        lhs.num *= rn;
        lhs.den *= rd;
        lhs.pi_pow += multiply ? rhs.pi_pow : -rhs.pi_pow;
        normalize(lhs);
    }

    const std::vector<Token>& tokens_;
    std::size_t& pos_;
};

Angle to_angle(const ExprValue& v) {
    // An exact zero is the same angle whatever the pi power.
    if (v.exact && (v.pi_pow == 1 || v.num == 0)) return Angle::pi_ratio(v.num, v.den);
    return Angle::radians(v.value);
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    QasmProgram run() {
        expect_identifier("OPENQASM");
        const Token version = expect(Token::Kind::Real, "version number");
        if (version.text != "2.0")
            throw ParseError(version.line, version.column,
                             "unsupported version '" + version.text + "', expected 2.0");
        expect_symbol(";");

        QasmProgram program;
        while (peek().kind != Token::Kind::End) parse_statement(program);
        if (program.qreg.size == 0)
            throw ParseError(peek().line, peek().column, "missing qreg declaration");
        return program;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    Token next() { return tokens_[pos_++]; }

    Token expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind)
            throw ParseError(peek().line, peek().column,
                             "expected " + what + ", found '" + peek().text + "'");
        return next();
    }

    Token expect_symbol(const std::string& sym) {
        if (peek().kind != Token::Kind::Symbol || peek().text != sym)
            throw ParseError(peek().line, peek().column,
                             "expected '" + sym + "', found '" + peek().text + "'");
        return next();
    }

    Token expect_identifier(const std::string& name) {
        if (peek().kind != Token::Kind::Identifier || peek().text != name)
            throw ParseError(peek().line, peek().column,
                             "expected '" + name + "', found '" + peek().text + "'");
        return next();
    }

    int expect_index(int size, const std::string& reg_name) {
        expect_symbol("[");
        const Token idx = expect(Token::Kind::Integer, "register index");
        expect_symbol("]");
        const long value = std::stol(idx.text);
        if (value < 0 || value >= size)
            throw ParseError(idx.line, idx.column,
                             "index " + idx.text + " out of range for " + reg_name + "[" +
                                 std::to_string(size) + "]");
        return static_cast<int>(value);
    }

    int parse_qubit(const QasmProgram& program) {
        const Token name = expect(Token::Kind::Identifier, "register name");
        if (name.text != program.qreg.name)
            throw ParseError(name.line, name.column,
                             "unknown quantum register '" + name.text + "'");
        return expect_index(program.qreg.size, name.text);
    }

    int parse_clbit(const QasmProgram& program) {
        const Token name = expect(Token::Kind::Identifier, "register name");
        if (name.text != program.creg.name)
            throw ParseError(name.line, name.column,
                             "unknown classical register '" + name.text + "'");
        return expect_index(program.creg.size, name.text);
    }

    void parse_register_decl(QasmProgram& program, bool quantum, const Token& kw) {
        const Token name = expect(Token::Kind::Identifier, "register name");
        expect_symbol("[");
        const Token size = expect(Token::Kind::Integer, "register size");
        expect_symbol("]");
        expect_symbol(";");
        RegisterDecl& slot = quantum ? program.qreg : program.creg;
        if (slot.size != 0)
            throw ParseError(kw.line, kw.column,
                             std::string("multiple ") + (quantum ? "qreg" : "creg") +
                                 " declarations are unsupported");
        slot.name = name.text;
        slot.size = static_cast<int>(std::stol(size.text));
        if (slot.size <= 0)
            throw ParseError(size.line, size.column, "register size must be positive");
    }

    void parse_statement(QasmProgram& program) {
        const Token tok = expect(Token::Kind::Identifier, "statement");
        const std::string& word = tok.text;

        if (word == "include") {
            const Token file = expect(Token::Kind::String, "include file name");
            expect_symbol(";");
            program.includes.push_back(file.text.substr(1, file.text.size() - 2));
            return;
        }
        if (word == "qreg" || word == "creg") {
            parse_register_decl(program, word == "qreg", tok);
            return;
        }

        Statement stmt;
        stmt.span = {tok.line, tok.column};

        if (word == "h" || word == "x" || word == "reset") {
            stmt.kind = word == "h" ? GateKind::H
                        : word == "x" ? GateKind::X
                                      : GateKind::Reset;
            stmt.qubits.push_back(parse_qubit(program));
        } else if (word == "rx") {
            stmt.kind = GateKind::Rx;
            expect_symbol("(");
            ExprParser expr(tokens_, pos_);
            stmt.angle = to_angle(expr.parse());
            expect_symbol(")");
            stmt.qubits.push_back(parse_qubit(program));
        } else if (word == "cx" || word == "swap") {
            stmt.kind = word == "cx" ? GateKind::Cx : GateKind::Swap;
            stmt.qubits.push_back(parse_qubit(program));
            expect_symbol(",");
            stmt.qubits.push_back(parse_qubit(program));
        } else if (word == "cswap") {
            stmt.kind = GateKind::Cswap;
            stmt.qubits.push_back(parse_qubit(program));
            expect_symbol(",");
            stmt.qubits.push_back(parse_qubit(program));
            expect_symbol(",");
            stmt.qubits.push_back(parse_qubit(program));
        } else if (word == "barrier") {
            stmt.kind = GateKind::Barrier;
            stmt.qubits.push_back(parse_qubit(program));
            while (peek().kind == Token::Kind::Symbol && peek().text == ",") {
                next();
                stmt.qubits.push_back(parse_qubit(program));
            }
        } else if (word == "measure") {
            stmt.kind = GateKind::Measure;
            stmt.qubits.push_back(parse_qubit(program));
            expect_symbol("->");
            stmt.clbit = parse_clbit(program);
        } else {
            throw ParseError(tok.line, tok.column,
                             "unknown gate '" + word + "' (not in the supported subset)");
        }

        expect_symbol(";");
        program.statements.push_back(std::move(stmt));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

QasmProgram parse(const std::string& text) { return Parser(text).run(); }

Circuit lower(const QasmProgram& program) {
    Circuit circuit(program.qreg.size, program.creg.size);
    circuit.ops.reserve(program.statements.size());
    for (const Statement& stmt : program.statements)
        circuit.ops.push_back({stmt.kind, stmt.qubits, stmt.clbit, stmt.angle});
    return circuit;
}

Angle parse_angle_expr(const std::string& text) {
    const auto tokens = tokenize(text);
    std::size_t pos = 0;
    ExprParser parser(tokens, pos);
    const ExprValue value = parser.parse();
    if (tokens[pos].kind != Token::Kind::End)
        throw ParseError(tokens[pos].line, tokens[pos].column,
                         "trailing input after angle expression");
    return to_angle(value);
}

} // namespace qgb::qasm
