#pragma once

// Dense univariate polynomials over a commutative ring, quotient rings
// R[X]/<f> for monic f, and the division-free characteristic polynomial of
// multiplication in R[X]/<f>.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ring_traits.hpp"

namespace henselize {

template <class R>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const R& a) { return UniPoly(std::vector<R>{a}); }
    static UniPoly monomial(const R& a, std::size_t n) {
        std::vector<R> c(n + 1);
        c[n] = a;
        return UniPoly(std::move(c));
    }
    static UniPoly x() { return monomial(R(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<R>& coeffs() const { return c_; }

    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(); }
    const R& leading() const {
        if (c_.empty()) throw precondition_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && is_zero_rep(R(c_.back() - R(1))); }

    /// Index of the lowest coefficient that is not a zero representative.
    std::size_t trailing_zero_count() const {
        std::size_t k = 0;
        while (k < c_.size() && is_zero_rep(c_[k])) ++k;
        return k;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = R(c_[i] + o.c_[i]);
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = R(c_[i] - o.c_[i]);
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(const UniPoly& a) {
        std::vector<R> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = R(-a.c_[i]);
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<R> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_rep(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = R(c[i + j] + a.c_[i] * b.c_[j]);
        }
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const R& s, const UniPoly& a) {
        std::vector<R> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = R(s * a.c_[i]);
        return UniPoly(std::move(c));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    /// Representation-level equality.
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return (a - b).is_zero(); }

    /// Multiply by X^k.
    UniPoly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<R> c(k);
        c.insert(c.end(), c_.begin(), c_.end());
        return UniPoly(std::move(c));
    }
    /// Drop the k lowest coefficients (exact division by X^k when they vanish).
    UniPoly unshifted(std::size_t k) const {
        if (k >= c_.size()) return {};
        return UniPoly(std::vector<R>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }
    /// Coefficients below X^k.
    UniPoly truncated(std::size_t k) const {
        if (k >= c_.size()) return *this;
        return UniPoly(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k)));
    }

    template <class F>
    auto map(F&& fn) const {
        using S = std::decay_t<decltype(fn(std::declval<const R&>()))>;
        std::vector<S> c;
        c.reserve(c_.size());
        for (const auto& a : c_) c.push_back(fn(a));
        return UniPoly<S>(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && is_zero_rep(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

template <class R>
UniPoly<R> derivative(const UniPoly<R>& p) {
    if (p.degree() < 1) return {};
    std::vector<R> c(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) c[i - 1] = R(R(static_cast<int>(i)) * p.coeffs()[i]);
    return UniPoly<R>(std::move(c));
}

/// Horner evaluation; the point may live in any ring S that accepts R scalars.
template <class R, class S>
S eval(const UniPoly<R>& p, const S& at) {
    S acc{};
    for (std::size_t i = p.size(); i-- > 0;) acc = S(acc * at + S(p.coeffs()[i]));
    return acc;
}

template <class R>
R eval(const UniPoly<R>& p, const R& at) {
    R acc{};
    for (std::size_t i = p.size(); i-- > 0;) acc = R(acc * at + p.coeffs()[i]);
    return acc;
}

/// p(q(X)).
template <class R>
UniPoly<R> compose(const UniPoly<R>& p, const UniPoly<R>& q) {
    UniPoly<R> acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * q + UniPoly<R>::constant(p.coeffs()[i]);
    return acc;
}

template <class R>
UniPoly<R> pow(const UniPoly<R>& p, unsigned n) {
    UniPoly<R> r = UniPoly<R>::constant(R(1));
    for (unsigned i = 0; i < n; ++i) r *= p;
    return r;
}

/// X^d p(1/X) with d supplied by the caller (d >= deg p).
template <class R>
UniPoly<R> reversed(const UniPoly<R>& p, std::size_t d) {
    if (p.degree() > static_cast<int>(d)) throw precondition_error("reversal degree below polynomial degree");
    std::vector<R> c(d + 1);
    for (std::size_t i = 0; i < p.size(); ++i) c[d - i] = p.coeffs()[i];
    return UniPoly<R>(std::move(c));
}

template <class R>
struct DivRem {
    UniPoly<R> quotient;
    UniPoly<R> remainder;
};

/// Division by a monic polynomial; valid over any commutative ring.
template <class R>
DivRem<R> divrem_monic(const UniPoly<R>& a, const UniPoly<R>& f) {
    if (!f.is_monic()) throw precondition_error("divisor is not monic");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    std::vector<R> r = a.coeffs();
    if (r.size() <= n) return {UniPoly<R>(), a};
    std::vector<R> q(r.size() - n);
    for (std::size_t i = r.size(); i-- > n;) {
        R lead = r[i];
        if (is_zero_rep(lead)) continue;
        q[i - n] = lead;
        for (std::size_t j = 0; j <= n; ++j) r[i - n + j] = R(r[i - n + j] - lead * f.coeffs()[j]);
    }
    r.resize(n);
    return {UniPoly<R>(std::move(q)), UniPoly<R>(std::move(r))};
}

template <class R>
UniPoly<R> mod_monic(const UniPoly<R>& a, const UniPoly<R>& f) {
    return divrem_monic(a, f).remainder;
}

/// Euclidean division over a field; `inverse` inverts nonzero scalars.
template <class R, class Inv>
DivRem<R> divrem_field(const UniPoly<R>& a, const UniPoly<R>& b, Inv&& inverse) {
    if (b.is_zero()) throw precondition_error("division by the zero polynomial");
    const R inv_lead = inverse(b.leading());
    const std::size_t n = static_cast<std::size_t>(b.degree());
    std::vector<R> r = a.coeffs();
    if (r.size() <= n) return {UniPoly<R>(), a};
    std::vector<R> q(r.size() - n);
    for (std::size_t i = r.size(); i-- > n;) {
        if (is_zero_rep(r[i])) continue;
        R c = R(r[i] * inv_lead);
        q[i - n] = c;
        for (std::size_t j = 0; j <= n; ++j) r[i - n + j] = R(r[i - n + j] - c * b.coeffs()[j]);
    }
    r.resize(n);
    return {UniPoly<R>(std::move(q)), UniPoly<R>(std::move(r))};
}

template <class R>
std::string to_string(const UniPoly<R>& p, const std::string& var = "X",
                      const std::function<std::string(const R&)>& fmt = nullptr) {
    if (p.is_zero()) return "0";
    auto show = [&](const R& c) { return fmt ? fmt(c) : format(c); };
    auto needs_parens = [](const std::string& s) {
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] == '+' || s[i] == '-') return true;
        return false;
    };
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        const R& c = p.coeffs()[i];
        if (is_zero_rep(c)) continue;
        std::string cs = show(c);
        bool negative = !cs.empty() && cs[0] == '-' && !needs_parens(cs);
        if (negative) cs = cs.substr(1);
        if (needs_parens(cs)) cs = "(" + cs + ")";
        std::string term;
        if (i == 0) {
            term = cs;
        } else {
            std::string mono = var + (i > 1 ? "^" + std::to_string(i) : "");
            term = cs == "1" ? mono : cs + "*" + mono;
        }
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += negative ? " - " + term : " + " + term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// R[X]/<f>

/// The monic modulus shared by all classes of one quotient ring.
template <class R>
struct Modulus {
    UniPoly<R> f;
    std::string var = "x";
};

/// Class of a polynomial in R[X]/<f>. A null modulus marks an element of R
/// itself; such constants combine with classes of any modulus.
template <class R>
class ModElement {
public:
    using modulus_ptr = std::shared_ptr<const Modulus<R>>;

    ModElement() = default;
    ModElement(int c) : rep_(UniPoly<R>::constant(R(c))) {}
    explicit ModElement(const R& c) : rep_(UniPoly<R>::constant(c)) {}
    ModElement(UniPoly<R> rep, modulus_ptr mod) : rep_(std::move(rep)), mod_(std::move(mod)) {
        if (mod_) rep_ = mod_monic(rep_, mod_->f);
        else if (rep_.degree() > 0) throw precondition_error("non-constant class without a modulus");
    }

    static modulus_ptr make_modulus(const UniPoly<R>& f, std::string var = "x") {
        if (!f.is_monic() || f.degree() < 1) throw precondition_error("modulus must be monic of degree >= 1");
        return std::make_shared<const Modulus<R>>(Modulus<R>{f, std::move(var)});
    }
    /// The class of X.
    static ModElement generator(const modulus_ptr& mod) { return ModElement(UniPoly<R>::x(), mod); }

    const UniPoly<R>& rep() const { return rep_; }
    const modulus_ptr& modulus() const { return mod_; }
    R constant_term() const { return rep_.coeff(0); }

    friend ModElement operator+(const ModElement& a, const ModElement& b) {
        return ModElement(a.rep_ + b.rep_, join(a, b), raw_tag{});
    }
    friend ModElement operator-(const ModElement& a, const ModElement& b) {
        return ModElement(a.rep_ - b.rep_, join(a, b), raw_tag{});
    }
    friend ModElement operator-(const ModElement& a) { return ModElement(-a.rep_, a.mod_, raw_tag{}); }
    friend ModElement operator*(const ModElement& a, const ModElement& b) {
        auto m = join(a, b);
        UniPoly<R> p = a.rep_ * b.rep_;
        if (m) p = mod_monic(p, m->f);
        return ModElement(std::move(p), m, raw_tag{});
    }
    ModElement& operator+=(const ModElement& o) { return *this = *this + o; }
    ModElement& operator-=(const ModElement& o) { return *this = *this - o; }
    ModElement& operator*=(const ModElement& o) { return *this = *this * o; }

private:
    struct raw_tag {};
    ModElement(UniPoly<R> rep, modulus_ptr mod, raw_tag) : rep_(std::move(rep)), mod_(std::move(mod)) {}

    static modulus_ptr join(const ModElement& a, const ModElement& b) {
        if (!a.mod_) return b.mod_;
        if (!b.mod_ || a.mod_ == b.mod_) return a.mod_;
        throw precondition_error("elements of different quotient rings");
    }

    UniPoly<R> rep_;
    modulus_ptr mod_;
};

template <class R>
struct ring_traits<ModElement<R>> {
    static bool is_zero(const ModElement<R>& x) { return x.rep().is_zero(); }
    static std::string to_string(const ModElement<R>& x) {
        return henselize::to_string(x.rep(), x.modulus() ? x.modulus()->var : "x");
    }
};

template <class R>
ModElement<R> pow(const ModElement<R>& a, unsigned n) {
    ModElement<R> r(1);
    for (unsigned i = 0; i < n; ++i) r *= a;
    return r;
}

// ---------------------------------------------------------------------------
// Characteristic polynomials

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Coefficients (low degree first) of det(T*I - M), computed with the
/// Samuelson-Berkowitz recurrence: only ring operations, no divisions, so it
/// is valid over rings with zero divisors.
template <class R>
std::vector<R> berkowitz(const Matrix<R>& m) {
    const std::size_t n = m.size();
    // p holds the char poly of the leading r x r block, highest degree first.
    std::vector<R> p{R(1)};
    for (std::size_t r = 0; r < n; ++r) {
        // Block [[A, c], [row, a]] with A the leading r x r part.
        std::vector<R> toeplitz;
        toeplitz.reserve(r + 2);
        toeplitz.push_back(R(1));
        toeplitz.push_back(R(-m[r][r]));
        std::vector<R> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = m[i][r];
        for (std::size_t k = 0; k < r; ++k) {
            R acc{};
            for (std::size_t i = 0; i < r; ++i) acc = R(acc + m[r][i] * v[i]);
            toeplitz.push_back(R(-acc));
            if (k + 1 < r) {
                std::vector<R> next(r);
                for (std::size_t i = 0; i < r; ++i) {
                    R s{};
                    for (std::size_t j = 0; j < r; ++j) s = R(s + m[i][j] * v[j]);
                    next[i] = s;
                }
                v = std::move(next);
            }
        }
        std::vector<R> q(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i) {
            R acc{};
            for (std::size_t j = 0; j <= std::min(i, r); ++j) acc = R(acc + toeplitz[i - j] * p[j]);
            q[i] = acc;
        }
        p = std::move(q);
    }
    return std::vector<R>(p.rbegin(), p.rend());
}

/// Matrix of multiplication by q(x) on the basis 1, x, ..., x^{n-1} of R[X]/<f>.
template <class R>
Matrix<R> multiplication_matrix(const UniPoly<R>& f, const UniPoly<R>& q) {
    if (!f.is_monic()) throw precondition_error("char_poly_mod: f is not monic");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    Matrix<R> m(n, std::vector<R>(n));
    UniPoly<R> col = mod_monic(q, f);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coeff(i);
        col = mod_monic(col.shifted(1), f);
    }
    return m;
}

/// Characteristic polynomial of multiplication by q(x) in R[X]/<f>.
template <class R>
UniPoly<R> char_poly_mod(const UniPoly<R>& f, const UniPoly<R>& q) {
    return UniPoly<R>(berkowitz(multiplication_matrix(f, q)));
}

/// Evaluates char_poly_mod(f, q) at q(x) in R[X]/<f> and tests for zero.
template <class R>
bool cayley_hamilton_check(const UniPoly<R>& f, const UniPoly<R>& q) {
    const UniPoly<R> g = char_poly_mod(f, q);
    const UniPoly<R> y = mod_monic(q, f);
    UniPoly<R> acc;
    for (std::size_t i = g.size(); i-- > 0;) acc = mod_monic(acc * y + UniPoly<R>::constant(g.coeffs()[i]), f);
    return acc.is_zero();
}

} // namespace henselize
