#pragma once

// Value groups realized inside Q^rank with the lexicographic order, and the
// extension by a top element used for v(0).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace henselize {

class ValueVector {
public:
    ValueVector() = default;
    explicit ValueVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    ValueVector(std::initializer_list<long> coords) {
        for (long c : coords) coords_.emplace_back(c);
    }

    static ValueVector zero(std::size_t rank) { return ValueVector(std::vector<Rational>(rank, Rational(0))); }

    std::size_t rank() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
    }
    /// Lies in Z^rank, as opposed to the strict divisible hull.
    bool is_integral() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.get_den() == 1; });
    }

    friend ValueVector operator+(const ValueVector& a, const ValueVector& b) {
        check_rank(a, b);
        std::vector<Rational> r(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) r[i] = a.coords_[i] + b.coords_[i];
        return ValueVector(std::move(r));
    }
    friend ValueVector operator-(const ValueVector& a) {
        std::vector<Rational> r(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) r[i] = -a.coords_[i];
        return ValueVector(std::move(r));
    }
    friend ValueVector operator-(const ValueVector& a, const ValueVector& b) { return a + (-b); }

    friend ValueVector operator*(long n, const ValueVector& a) {
        std::vector<Rational> r(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) r[i] = a.coords_[i] * n;
        return ValueVector(std::move(r));
    }

    friend std::strong_ordering operator<=>(const ValueVector& a, const ValueVector& b) {
        check_rank(a, b);
        for (std::size_t i = 0; i < a.rank(); ++i) {
            int c = cmp(a.coords_[i], b.coords_[i]);
            if (c < 0) return std::strong_ordering::less;
            if (c > 0) return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const ValueVector& a, const ValueVector& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ", ";
            s += coords_[i].get_str();
        }
        return s + "]";
    }

private:
    static void check_rank(const ValueVector& a, const ValueVector& b) {
        if (a.rank() != b.rank())
            throw precondition_error("value rank mismatch: " + std::to_string(a.rank()) + " vs " +
                                     std::to_string(b.rank()));
    }

    std::vector<Rational> coords_;
};

/// Exact division in the divisible hull; n * result == a.
inline ValueVector div_by_int(const ValueVector& a, long n) {
    if (n <= 0) throw precondition_error("div_by_int requires a positive divisor");
    std::vector<Rational> r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) r[i] = a[i] / Rational(n);
    return ValueVector(std::move(r));
}

/// Element of Gamma extended by infinity.
class ExtendedValue {
public:
    ExtendedValue() : infinite_(true) {}
    ExtendedValue(ValueVector v) : infinite_(false), value_(std::move(v)) {}

    static ExtendedValue infinity() { return ExtendedValue(); }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    const ValueVector& value() const {
        if (infinite_) throw precondition_error("value() of infinity");
        return value_;
    }

    friend ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtendedValue(a.value_ + b.value_);
    }

    /// Total order with infinity on top. Finite operands must share a rank.
    friend std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }
    friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

    bool is_zero() const { return !infinite_ && value_.is_zero(); }
    bool is_positive() const { return infinite_ || value_ > ValueVector::zero(value_.rank()); }
    bool is_nonnegative() const { return infinite_ || value_ >= ValueVector::zero(value_.rank()); }

    std::string to_string() const { return infinite_ ? "inf" : value_.to_string(); }

private:
    bool infinite_;
    ValueVector value_;
};

inline std::strong_ordering compare(const ExtendedValue& a, const ExtendedValue& b) { return a <=> b; }

template <class Range>
ExtendedValue min_value(const Range& values) {
    auto it = std::begin(values);
    if (it == std::end(values)) throw precondition_error("min of an empty multiset");
    ExtendedValue m = *it;
    for (++it; it != std::end(values); ++it)
        if (*it < m) m = *it;
    return m;
}

/// Parses "[1/2, 3]" or "inf".
inline ExtendedValue parse_extended_value(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    if (s == "inf") return ExtendedValue::infinity();
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw parse_error("bad value: " + text);
    std::vector<Rational> coords;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        Rational r;
        if (tok.empty() || r.set_str(tok, 10) != 0) throw parse_error("bad value coordinate: " + tok);
        r.canonicalize();
        coords.push_back(r);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return ExtendedValue(ValueVector(std::move(coords)));
}

} // namespace henselize
