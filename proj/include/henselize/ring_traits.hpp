#pragma once

#include <concepts>
#include <string>

#include "rational.hpp"

namespace henselize {

/// Customization point for coefficient rings.
///
/// `is_zero` is the representation-level zero test. For the base rings it is
/// exact; for quotient extensions such as K[beta] it is only sound (a zero
/// representative is zero, the converse may fail), and the semantic test lives
/// with the valued field.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <class R>
concept commutative_ring = std::default_initializable<R> && std::constructible_from<R, int> &&
    requires(const R& a, const R& b) {
        { a + b } -> std::convertible_to<R>;
        { a - b } -> std::convertible_to<R>;
        { a * b } -> std::convertible_to<R>;
        { -a } -> std::convertible_to<R>;
        { ring_traits<R>::is_zero(a) } -> std::same_as<bool>;
        { ring_traits<R>::to_string(a) } -> std::convertible_to<std::string>;
    };

template <class R>
bool is_zero_rep(const R& x) {
    return ring_traits<R>::is_zero(x);
}

template <class R>
std::string format(const R& x) {
    return ring_traits<R>::to_string(x);
}

} // namespace henselize
