#pragma once

// Shared generators and independent reference computations for the tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "henselize/henselize.hpp"
#include "henselize/sampling.hpp"

namespace henselize::fixtures {

inline Rational Q(long n, long d = 1) { return make_rational(n, d); }

/// Leibniz expansion of det(T*I - M) over R[T]: a sum over all permutations,
/// unrelated to the Berkowitz recurrence.
template <class R>
UniPoly<R> leibniz_char_poly(const Matrix<R>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    UniPoly<R> total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        UniPoly<R> term = UniPoly<R>::constant(R(inversions % 2 ? -1 : 1));
        for (std::size_t i = 0; i < n; ++i) {
            UniPoly<R> entry = UniPoly<R>::constant(R(-m[i][perm[i]]));
            if (perm[i] == i) entry = entry + UniPoly<R>::x();
            term = term * entry;
        }
        total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// prod (X - r_i) for integer roots r_i.
inline QPoly from_roots(const std::vector<Integer>& roots) {
    QPoly p = QPoly::constant(Rational(1));
    for (const Integer& r : roots) p = p * QPoly{Rational(-r), Rational(1)};
    return p;
}

/// Integer p^k * u with u a unit, or 0.
inline Integer random_integer_with_valuation(Rng& rng, unsigned long p, long k) {
    long u;
    do u = uniform(rng, -20, 20);
    while (u == 0 || u % static_cast<long>(p) == 0);
    return ipow(Integer(p), static_cast<unsigned long>(k)) * u;
}

/// Monic polynomial of degree 1..5 splitting over Z with roots of known
/// valuations; roots are kept distinct.
inline QPoly random_split_poly(Rng& rng, unsigned long p, std::vector<ExtendedValue>& expected) {
    const int d = static_cast<int>(uniform(rng, 1, 5));
    std::vector<Integer> roots;
    expected.clear();
    while (static_cast<int>(roots.size()) < d) {
        Integer r;
        ExtendedValue v;
        if (coin(rng, 0.08)) {
            r = 0;
            v = ExtendedValue::infinity();
        } else {
            long k = uniform(rng, 0, 4);
            r = random_integer_with_valuation(rng, p, k);
            v = ValueVector{k};
        }
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        roots.push_back(r);
        expected.push_back(v);
    }
    std::sort(expected.begin(), expected.end());
    return from_roots(roots);
}

/// A random Nagata polynomial over A, pushed into K[X] through theta.
template <class Preset>
UniPoly<typename Preset::field_type::element_type> field_nagata(Rng& rng, const Preset& ring, const Sampler<Preset>& s,
                                                                int degree) {
    using E = typename Preset::field_type::element_type;
    return random_nagata(rng, s, degree).map([&ring](const typename Preset::element_type& a) { return E(ring.theta(a)); });
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace henselize::fixtures
