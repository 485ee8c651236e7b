#include "fracleib/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

#include "fracleib/errors.hpp"

namespace fracleib {

namespace {

constexpr int kMaxDepth = 256;
constexpr size_t kMaxTerms = 4096;

enum class Tok {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Equal,
    End,
};

struct Token {
    Tok kind = Tok::End;
    double num = 0.0;
    std::string text;
    size_t pos = 0;
};

const char* token_name(Tok t) {
    switch (t) {
        case Tok::Number: return "number";
        case Tok::Ident: return "identifier";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Equal: return "'='";
        case Tok::End: return "end of input";
    }
    return "token";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (c >= 0x80) {
            throw ParseError("non-ASCII byte in input", i);
        }
        const size_t start = i;
        if (std::isdigit(c) || (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i < n && text[i] == '.') {
                ++i;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            }
            if (i < n && (text[i] == 'e' || text[i] == 'E')) {
                size_t j = i + 1;
                if (j < n && (text[j] == '+' || text[j] == '-')) ++j;
                if (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) {
                    i = j;
                    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                }
            }
            double value = 0.0;
            const char* first = text.data() + start;
            const char* last = text.data() + i;
            const auto res = std::from_chars(first, last, value);
            if (res.ec != std::errc() || res.ptr != last || !std::isfinite(value)) {
                throw ParseError("bad numeric literal '" +
                                     std::string(text.substr(start, i - start)) + "'",
                                 start);
            }
            out.push_back({Tok::Number, value, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            out.push_back({Tok::Ident, 0.0, std::string(text.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case ',': kind = Tok::Comma; break;
            case '=': kind = Tok::Equal; break;
            default:
                throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'",
                                 i);
        }
        out.push_back({kind, 0.0, std::string(text.substr(i, 1)), i});
        ++i;
    }
    out.push_back({Tok::End, 0.0, "", n});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    PowerSum run_function() {
        const PowerSum p = parse_fn_expr();
        expect(Tok::End);
        return p;
    }

    OperatorSpec run_operator() {
        OperatorSpec spec = parse_op_expr();
        expect(Tok::End);
        return spec;
    }

private:
    const Token& peek() const { return tokens_[index_]; }

    Token next() { return tokens_[index_++]; }

    void expect(Tok kind) {
        if (peek().kind != kind) {
            throw ParseError(std::string("expected ") + token_name(kind) + ", found " +
                                 token_name(peek().kind),
                             peek().pos);
        }
        if (kind != Tok::End) {
            ++index_;
        }
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : p_(p) {
            if (++p_.depth_ > kMaxDepth) {
                throw ParseError("expression nesting too deep", p_.peek().pos);
            }
        }
        ~DepthGuard() { --p_.depth_; }
        Parser& p_;
    };

    static void check_size(const PowerSum& p, size_t pos) {
        if (p.terms().size() > kMaxTerms) {
            throw ParseError("expression expands to more than " + std::to_string(kMaxTerms) +
                                 " terms",
                             pos);
        }
    }

    // Folding constants can overflow to non-finite values, which the
    // algebra rejects; surface that as a parse error at the operator.
    template <typename F>
    static PowerSum checked(size_t pos, F op) {
        try {
            return op();
        } catch (const DomainError& e) {
            throw ParseError(e.what(), pos);
        }
    }

    // expr := term (('+' | '-') term)*
    PowerSum parse_fn_expr() {
        DepthGuard guard(*this);
        PowerSum acc = parse_fn_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token op = next();
            const PowerSum rhs = parse_fn_term();
            acc = checked(op.pos,
                          [&] { return add(acc, op.kind == Tok::Plus ? rhs : scale(-1.0, rhs)); });
            check_size(acc, op.pos);
        }
        return acc;
    }

    // term := factor (('*' | '/') factor)*
    PowerSum parse_fn_term() {
        PowerSum acc = parse_fn_factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Token op = next();
            const PowerSum rhs = parse_fn_factor();
            if (op.kind == Tok::Star) {
                acc = checked(op.pos, [&] { return multiply(acc, rhs); });
            } else {
                if (!rhs.is_constant()) {
                    throw ParseError("division by a non-constant is not supported", op.pos);
                }
                const double d = rhs.constant_value();
                if (d == 0.0) {
                    throw ParseError("division by zero", op.pos);
                }
                acc = checked(op.pos, [&] { return scale(1.0 / d, acc); });
            }
            check_size(acc, op.pos);
        }
        return acc;
    }

    // factor := '-' factor | primary
    PowerSum parse_fn_factor() {
        DepthGuard guard(*this);
        if (peek().kind == Tok::Minus) {
            next();
            return scale(-1.0, parse_fn_factor());
        }
        return parse_fn_primary();
    }

    // primary := number | 'x' ['^' exponent] | '(' expr ')'
    PowerSum parse_fn_primary() {
        const Token t = peek();
        switch (t.kind) {
            case Tok::Number:
                next();
                return PowerSum::constant(t.num);
            case Tok::Ident: {
                if (t.text != "x") {
                    throw ParseError("unexpected identifier '" + t.text + "'", t.pos);
                }
                next();
                double e = 1.0;
                if (peek().kind == Tok::Caret) {
                    next();
                    e = parse_exponent();
                }
                return PowerSum::monomial(1.0, e);
            }
            case Tok::LParen: {
                next();
                DepthGuard guard(*this);
                const PowerSum inner = parse_fn_expr();
                expect(Tok::RParen);
                return inner;
            }
            default:
                throw ParseError(std::string("expected a number, 'x', or '(', found ") +
                                     token_name(t.kind),
                                 t.pos);
        }
    }

    // exponent := number | '(' ['-'] number ')'
    double parse_exponent() {
        const Token t = peek();
        if (t.kind == Tok::Number) {
            next();
            return t.num;
        }
        if (t.kind == Tok::LParen) {
            next();
            double sign = 1.0;
            if (peek().kind == Tok::Minus) {
                next();
                sign = -1.0;
            }
            const Token num = peek();
            expect(Tok::Number);
            expect(Tok::RParen);
            return sign * num.num;
        }
        if (t.kind == Tok::Minus) {
            throw ParseError("negative exponent must be parenthesized, e.g. x^(-0.5)", t.pos);
        }
        throw ParseError(std::string("expected an exponent literal, found ") +
                             token_name(t.kind),
                         t.pos);
    }

    // opexpr := ['-'] opterm (('+' | '-') opterm)*
    OperatorSpec parse_op_expr() {
        DepthGuard guard(*this);
        std::vector<double> coeffs;
        std::vector<OperatorSpec> ops;
        double sign = 1.0;
        if (peek().kind == Tok::Minus) {
            next();
            sign = -1.0;
        }
        while (true) {
            auto [coeff, op] = parse_op_term(sign);
            coeffs.push_back(coeff);
            ops.push_back(std::move(op));
            if (peek().kind == Tok::Plus) {
                next();
                sign = 1.0;
            } else if (peek().kind == Tok::Minus) {
                next();
                sign = -1.0;
            } else {
                break;
            }
        }
        if (coeffs.size() == 1 && coeffs[0] == 1.0) {
            return std::move(ops[0]);
        }
        return OperatorSpec::combo(std::move(coeffs), std::move(ops));
    }

    // opterm := [number '*'] opatom
    std::pair<double, OperatorSpec> parse_op_term(double sign) {
        double coeff = sign;
        if (peek().kind == Tok::Number) {
            const Token num = next();
            if (peek().kind != Tok::Star) {
                throw ParseError("a coefficient must be followed by '*' and an operator",
                                 peek().pos);
            }
            next();
            coeff *= num.num;
        }
        return {coeff, parse_op_atom()};
    }

    // opatom := 'D' | 'RL' '(' number ')' | 'caputo' '(' number ')'
    //         | 'GL' '(' number ',' 'h' '=' number ')'
    //         | 'local' '(' 'a' '=' expr ',' 'b' '=' expr ')'
    //         | '(' opexpr ')'
    OperatorSpec parse_op_atom() {
        const Token t = peek();
        if (t.kind == Tok::LParen) {
            next();
            DepthGuard guard(*this);
            OperatorSpec inner = parse_op_expr();
            expect(Tok::RParen);
            return inner;
        }
        if (t.kind != Tok::Ident) {
            throw ParseError(std::string("expected an operator name, found ") +
                                 token_name(t.kind),
                             t.pos);
        }
        next();
        if (t.text == "D") {
            return OperatorSpec::classical();
        }
        if (t.text == "RL" || t.text == "caputo") {
            expect(Tok::LParen);
            const double alpha = parse_signed_number();
            expect(Tok::RParen);
            return build(t, [&] {
                return t.text == "RL" ? OperatorSpec::rl(alpha) : OperatorSpec::caputo(alpha);
            });
        }
        if (t.text == "GL") {
            expect(Tok::LParen);
            const double alpha = parse_signed_number();
            expect(Tok::Comma);
            expect_ident("h");
            expect(Tok::Equal);
            const double h = parse_signed_number();
            expect(Tok::RParen);
            return build(t, [&] { return OperatorSpec::gl(alpha, h); });
        }
        if (t.text == "local") {
            expect(Tok::LParen);
            expect_ident("a");
            expect(Tok::Equal);
            PowerSum a = parse_fn_expr();
            expect(Tok::Comma);
            expect_ident("b");
            expect(Tok::Equal);
            PowerSum b = parse_fn_expr();
            expect(Tok::RParen);
            return OperatorSpec::local_form(std::move(a), std::move(b));
        }
        throw ParseError("unknown operator '" + t.text + "'", t.pos);
    }

    // Range violations (e.g. RL(2.5)) surface as parse errors at the
    // operator's position, with the factory's range message.
    template <typename F>
    OperatorSpec build(const Token& t, F make) {
        try {
            return make();
        } catch (const DomainError& e) {
            throw ParseError(e.what(), t.pos);
        }
    }

    double parse_signed_number() {
        double sign = 1.0;
        if (peek().kind == Tok::Minus) {
            next();
            sign = -1.0;
        }
        const Token num = peek();
        expect(Tok::Number);
        return sign * num.num;
    }

    void expect_ident(const char* name) {
        if (peek().kind != Tok::Ident || peek().text != name) {
            throw ParseError(std::string("expected '") + name + "'", peek().pos);
        }
        next();
    }

    std::vector<Token> tokens_;
    size_t index_ = 0;
    int depth_ = 0;
};

void append_term(std::string& out, const PowerTerm& t, bool first) {
    double c = t.coeff;
    if (first) {
        if (c < 0.0) {
            out += "-";
            c = -c;
        }
    } else {
        out += c < 0.0 ? " - " : " + ";
        if (c < 0.0) {
            c = -c;
        }
    }
    const bool is_const = t.exponent == 0.0;
    if (is_const) {
        out += format_real(c);
        return;
    }
    if (c != 1.0) {
        out += format_real(c);
        out += "*";
    }
    out += "x";
    if (t.exponent != 1.0) {
        out += "^";
        if (t.exponent < 0.0) {
            out += "(" + format_real(t.exponent) + ")";
        } else {
            out += format_real(t.exponent);
        }
    }
}

void append_operator(std::string& out, const OperatorSpec& spec, bool parenthesize_combo);

void append_combo_term(std::string& out, double coeff, const OperatorSpec& op, bool first) {
    double c = coeff;
    if (first) {
        if (c < 0.0) {
            out += "-";
            c = -c;
        }
    } else {
        out += c < 0.0 ? " - " : " + ";
        if (c < 0.0) {
            c = -c;
        }
    }
    if (c != 1.0) {
        out += format_real(c);
        out += "*";
    }
    append_operator(out, op, true);
}

void append_operator(std::string& out, const OperatorSpec& spec, bool parenthesize_combo) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Classical>) {
                out += "D";
            } else if constexpr (std::is_same_v<T, RL>) {
                out += "RL(" + format_real(node.alpha) + ")";
            } else if constexpr (std::is_same_v<T, Caputo>) {
                out += "caputo(" + format_real(node.alpha) + ")";
            } else if constexpr (std::is_same_v<T, GL>) {
                out += "GL(" + format_real(node.alpha) + ", h=" + format_real(node.h) + ")";
            } else if constexpr (std::is_same_v<T, LocalForm>) {
                out += "local(a=" + format_power_sum(node.a) + ", b=" + format_power_sum(node.b) +
                       ")";
            } else {
                if (parenthesize_combo) {
                    out += "(";
                }
                for (size_t i = 0; i < node.ops.size(); ++i) {
                    append_combo_term(out, node.coeffs[i], node.ops[i], i == 0);
                }
                if (parenthesize_combo) {
                    out += ")";
                }
            }
        },
        spec.node());
}

}  // namespace

PowerSum parse_function(std::string_view text) {
    return Parser(text).run_function();
}

OperatorSpec parse_operator(std::string_view text) {
    return Parser(text).run_operator();
}

std::string format_power_sum(const PowerSum& f) {
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const PowerTerm& t : f.terms()) {
        append_term(out, t, first);
        first = false;
    }
    return out;
}

std::string format_operator(const OperatorSpec& spec) {
    std::string out;
    append_operator(out, spec, false);
    return out;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace fracleib
