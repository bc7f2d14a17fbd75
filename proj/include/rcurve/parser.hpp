#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "rcurve/mpoly.hpp"

namespace rcurve {

class ParseError : public InvalidInput {
public:
    ParseError(const std::string& what, std::size_t pos)
        : InvalidInput(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (('*' | '/') factor)*      (divisors must be nonzero constants)
// factor := primary ['^' integer]
// primary:= integer | variable | '(' expr ')'
class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    MPoly parse() {
        MPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly constant(const Rat& c) const { return MPoly(vars_.size(), c); }

    MPoly expr() {
        skip();
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        MPoly acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        while (true) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                MPoly d = factor();
                if (d.total_degree() > 0) throw ParseError("division by a non-constant", at);
                if (d.is_zero_poly()) throw ParseError("zero denominator", at);
                acc = (Rat(1) / d.terms().begin()->second) * acc;
            } else {
                break;
            }
        }
        return acc;
    }

    MPoly factor() {
        MPoly base = primary();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            std::string digits(s_.substr(start, pos_ - start));
            if (digits.size() > 4) throw ParseError("exponent too large", start);
            base = pow(base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    MPoly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(Rat(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            for (std::size_t v = 0; v < vars_.size(); ++v)
                if (vars_[v] == name) return MPoly::var(vars_.size(), v);
            throw ParseError("undeclared variable '" + name + "'", start);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial expression over the declared variables.
inline MPoly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
    return detail::PolyParser(text, variables).parse();
}

/// Parses a univariate polynomial in `var`.
inline UPoly parse_upoly(std::string_view text, const std::string& var = "t") {
    MPoly p = parse_poly(text, {var});
    std::vector<Rat> c(static_cast<std::size_t>(std::max(p.total_degree(), 0)) + 1, Rat(0));
    for (const auto& [e, v] : p.terms()) c[e.empty() ? 0 : e[0]] = v;
    return UPoly(std::move(c));
}

}  // namespace rcurve
