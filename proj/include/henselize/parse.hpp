#pragma once

// Whitespace-insensitive parser for ring elements and polynomials:
//
//   expr   := ['+' | '-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/' | juxtaposition) factor)*
//   factor := '-' factor | atom ['^' integer]
//   atom   := integer | identifier | '(' expr ')'
//
// Values are built through a Syntax object that knows the ring's variables
// and how to divide.

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "basering.hpp"
#include "errors.hpp"
#include "ratfunc.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace henselize {

template <class V>
struct Syntax {
    std::function<V(const Rational&)> constant;
    std::map<std::string, V> variables;
    /// a / b, or a parse_error when b is not invertible.
    std::function<V(const V&, const V&)> divide;
};

namespace detail {

template <class V>
class Parser {
public:
    Parser(const std::string& text, const Syntax<V>& syn) : syn_(syn) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    V parse() {
        if (s_.empty()) throw parse_error("empty expression");
        V v = expr();
        if (pos_ != s_.size()) throw parse_error("unexpected '" + std::string(1, s_[pos_]) + "' at offset " + std::to_string(pos_));
        return v;
    }

private:
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    bool starts_atom() const {
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    V expr() {
        V acc;
        if (accept('-')) acc = V(-term());
        else {
            accept('+');
            acc = term();
        }
        while (true) {
            if (accept('+')) acc = V(acc + term());
            else if (accept('-')) acc = V(acc - term());
            else return acc;
        }
    }

    V term() {
        V acc = factor();
        while (true) {
            if (accept('*')) acc = V(acc * factor());
            else if (accept('/')) acc = syn_.divide(acc, factor());
            else if (starts_atom()) acc = V(acc * factor());
            else return acc;
        }
    }

    V factor() {
        if (accept('-')) return V(-factor());
        V base = atom();
        if (accept('^')) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw parse_error("exponent must be a nonnegative integer");
            unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            if (e > 64) throw parse_error("exponent too large");
            V r = syn_.constant(Rational(1));
            for (unsigned long i = 0; i < e; ++i) r = V(r * base);
            return r;
        }
        return base;
    }

    V atom() {
        if (accept('(')) {
            V v = expr();
            if (!accept(')')) throw parse_error("missing ')'");
            return v;
        }
        if (pos_ >= s_.size()) throw parse_error("unexpected end of expression");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return syn_.constant(Rational(Integer(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            // "uw" reads as u*w: take the longest known prefix, leave the rest
            for (std::size_t len = name.size(); len > 0; --len) {
                auto it = syn_.variables.find(name.substr(0, len));
                if (it == syn_.variables.end()) continue;
                pos_ = start + len;
                return it->second;
            }
            throw parse_error("unknown variable '" + name + "'");
        }
        throw parse_error("unexpected '" + std::string(1, c) + "' at offset " + std::to_string(pos_));
    }

    std::string s_;
    std::size_t pos_ = 0;
    const Syntax<V>& syn_;
};

} // namespace detail

template <class V>
V parse_with(const std::string& text, const Syntax<V>& syntax) {
    return detail::Parser<V>(text, syntax).parse();
}

/// Polynomials in `var` over a coefficient syntax; division only by constants.
template <class R>
Syntax<UniPoly<R>> polynomial_syntax(const Syntax<R>& coeffs, const std::string& var = "X") {
    using P = UniPoly<R>;
    Syntax<P> s;
    s.constant = [c = coeffs.constant](const Rational& r) { return P::constant(c(r)); };
    for (const auto& [name, value] : coeffs.variables) s.variables.emplace(name, P::constant(value));
    s.variables[var] = P::x();
    s.divide = [div = coeffs.divide](const P& a, const P& b) {
        if (b.degree() != 0) throw parse_error("division by a non-constant polynomial");
        const R d = b.coeff(0);
        return a.map([&](const R& c) { return div(c, d); });
    };
    return s;
}

template <class R>
UniPoly<R> parse_polynomial(const std::string& text, const Syntax<R>& coeffs, const std::string& var = "X") {
    return parse_with(text, polynomial_syntax(coeffs, var));
}

// ---------------------------------------------------------------------------
// Coefficient syntaxes of the shipped rings

inline Syntax<Rational> rational_syntax() {
    return {[](const Rational& r) { return r; }, {}, [](const Rational& a, const Rational& b) {
                if (b == 0) throw parse_error("division by zero");
                return Rational(a / b);
            }};
}

inline Syntax<RatFunc> ratfunc_syntax(const std::string& var = "t") {
    return {[](const Rational& r) { return RatFunc(r); }, {{var, RatFunc::t()}}, [](const RatFunc& a, const RatFunc& b) {
                if (b.is_zero()) throw parse_error("division by zero");
                return a * b.inverse();
            }};
}

inline Syntax<MultiFrac> multifrac_syntax() {
    return {[](const Rational& r) { return MultiFrac(r); },
            {{"u", MultiFrac(MultiPoly::u())}, {"w", MultiFrac(MultiPoly::w())}},
            [](const MultiFrac& a, const MultiFrac& b) {
                if (b.num().is_zero()) throw parse_error("division by zero");
                return a * b.inverse();
            }};
}

template <class Spec>
Syntax<LocalElement<Spec>> local_syntax() {
    using L = LocalElement<Spec>;
    return {[](const Rational& r) { return L(r); }, {{"u", L::u()}, {"w", L::w()}}, [](const L& a, const L& b) {
                auto inv = try_invert(b);
                if (!inv) throw parse_error("division by a non-unit of the local ring: " + b.to_string());
                return a * *inv;
            }};
}

} // namespace henselize
