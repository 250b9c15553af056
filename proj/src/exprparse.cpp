#include "gb/exprparse.hpp"

#include <cctype>
#include <stdexcept>

namespace gb {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    static RationalFunction add(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction::of(a.num * b.den + b.num * a.den, a.den * b.den);
    }

    RationalFunction expr() {
        RationalFunction v = eat('-') ? RationalFunction::constant(-1) * term() : term();
        while (true) {
            if (eat('+'))
                v = add(v, term());
            else if (eat('-'))
                v = add(v, RationalFunction::constant(-1) * term());
            else
                return v;
        }
    }

    RationalFunction term() {
        RationalFunction v = factor();
        while (true) {
            if (eat('*')) {
                v = v * factor();
            } else if (eat('/')) {
                RationalFunction d = factor();
                if (d.is_zero()) fail("division by zero");
                v = v * d.inverse();
            } else {
                return v;
            }
        }
    }

    RationalFunction factor() {
        RationalFunction base = atom();
        if (eat('^')) {
            bool negexp = eat('-');
            long e = integer_literal();
            if (negexp && base.is_zero()) fail("division by zero");
            return base.pow(negexp ? -e : e);
        }
        return base;
    }

    RationalFunction atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RationalFunction v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos;
            return RationalFunction::constant(-1) * atom();
        }
        if (c == 'x') {
            ++pos;
            return RationalFunction::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RationalFunction::constant(Rat(Int(digits())));
        fail(std::string("unexpected character '") + c + "'");
    }

    long integer_literal() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected an integer");
        return std::stol(digits());
    }

    std::string digits() {
        std::string out;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            out += s[pos++];
        return out;
    }

    void expect_end() {
        skip_ws();
        if (pos != s.size()) fail("trailing input");
    }
};

}  // namespace

RationalFunction parse_rational_function(const std::string& text) {
    Parser p(text);
    RationalFunction v = p.expr();
    p.expect_end();
    return v;
}

std::pair<RationalFunction, RationalFunction> parse_symbol_pair(const std::string& text) {
    // split "(u, v)" at the top-level comma
    std::size_t start = text.find('(');
    std::size_t end = text.rfind(')');
    if (start == std::string::npos || end == std::string::npos || end <= start)
        throw std::invalid_argument("symbol must have the form (u, v)");
    int depth = 0;
    std::size_t comma = std::string::npos;
    for (std::size_t i = start + 1; i < end; ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == ',' && depth == 0) {
            comma = i;
            break;
        }
    }
    if (comma == std::string::npos) throw std::invalid_argument("symbol must have the form (u, v)");
    RationalFunction u = parse_rational_function(text.substr(start + 1, comma - start - 1));
    RationalFunction v = parse_rational_function(text.substr(comma + 1, end - comma - 1));
    if (u.is_zero() || v.is_zero()) throw std::invalid_argument("symbol entries must be nonzero");
    return {u, v};
}

GeometricPlace parse_place(const std::string& text) {
    Parser p(text);
    p.skip_ws();
    if (text.compare(p.pos, 3, "inf") == 0) return GeometricPlace::infinity();
    RationalFunction f = parse_rational_function(text);
    if (f.den.degree() != 0 || f.num.degree() < 1)
        throw std::invalid_argument("place must be a nonconstant polynomial or 'inf'");
    QPoly pi = f.num;
    // normalize to monic before the irreducibility check
    Rat lc = pi.lc();
    if (lc != 1) pi = pi * QPoly::constant(1 / lc);
    return GeometricPlace::of(pi);
}

}  // namespace gb
