#pragma once

// Brute-force references used to validate the exact algorithms: digit-by-digit
// p-adic root search and ground-truth K[beta] contexts whose zero test is a
// plain divisibility check.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "completion.hpp"
#include "errors.hpp"
#include "hensel.hpp"
#include "kbeta.hpp"
#include "newton.hpp"
#include "ratfunc.hpp"
#include "unipoly.hpp"
#include "valuedfield.hpp"

namespace henselize {

/// Yun's square-free decomposition over Q: p = lc * prod_i parts[i]^(i+1),
/// every part monic and square-free.
inline std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<QPoly> parts;
    QPoly a = monic_part(p);
    QPoly b = derivative(a);
    QPoly c = gcd(a, b);
    QPoly w = divrem_field(a, c, rational_inverse).quotient;
    while (w.degree() > 0) {
        QPoly y = gcd(w, c);
        parts.push_back(monic_part(divrem_field(w, y, rational_inverse).quotient));
        w = y;
        c = divrem_field(c, y, rational_inverse).quotient;
    }
    while (!parts.empty() && parts.back().degree() < 1) parts.pop_back();
    return parts;
}

inline bool is_rational_square(const Rational& r) {
    if (r < 0) return false;
    return mpz_perfect_square_p(r.get_num().get_mpz_t()) && mpz_perfect_square_p(r.get_den().get_mpz_t());
}

/// c * S(t)^2 with c a rational square.
inline bool is_square(const QPoly& p) {
    if (p.is_zero()) return true;
    if (!is_rational_square(p.leading())) return false;
    auto parts = squarefree_decomposition(p);
    for (std::size_t i = 0; i < parts.size(); i += 2)
        if (parts[i].degree() > 0) return false;
    return true;
}

inline bool is_square(const Rational& r) { return is_rational_square(r); }
inline bool is_square(const RatFunc& r) { return is_square(r.num() * r.den()); }

struct OracleRoots {
    std::vector<ExtendedValue> valuations;  ///< roots found in Z_p, with multiplicity
    std::size_t unresolved = 0;             ///< degree not accounted for by Z_p roots
};

namespace detail {

inline long content_order(const std::vector<Integer>& c, unsigned long p) {
    long best = -1;
    for (const Integer& x : c) {
        if (x == 0) continue;
        const long k = padic_order(x, p);
        if (best < 0 || k < best) best = k;
    }
    return best;
}

/// g(y0 + p Y), exact.
inline std::vector<Integer> shift_and_scale(const std::vector<Integer>& g, const Integer& y0, unsigned long p) {
    std::vector<Integer> c = g;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) c[j - 1] += y0 * c[j];
    Integer scale = 1;
    for (Integer& x : c) {
        x *= scale;
        scale *= p;
    }
    return c;
}

/// Roots of P in Z_p modulo p^level, one digit at a time. Each node keeps
/// g(Y) = P(r + p^j Y) / p^content; a digit survives iff it is a root of g
/// mod p, so every level holds at most deg P residues.
inline void digit_search(std::vector<Integer> g, const Integer& r, const Integer& pj, unsigned j, unsigned long p,
                         unsigned level, std::vector<Integer>& out) {
    const long k = content_order(g, p);
    if (k < 0) throw hard_fault("oracle polynomial vanished during the digit search");
    const Integer pk = ipow(Integer(p), static_cast<unsigned long>(k));
    for (Integer& x : g) x /= pk;
    if (j == level) {
        out.push_back(r);
        return;
    }
    for (unsigned long d = 0; d < p; ++d) {
        Integer acc = 0;
        for (std::size_t i = g.size(); i-- > 0;) acc = mod_floor(acc * d + g[i], Integer(p));
        if (acc != 0) continue;
        digit_search(shift_and_scale(g, Integer(d), p), r + Integer(d) * pj, pj * p, j + 1, p, level, out);
    }
}

inline std::vector<Integer> digit_roots(const std::vector<Integer>& c, unsigned long p, unsigned level) {
    std::vector<Integer> out;
    digit_search(c, Integer(0), Integer(1), 0, p, level, out);
    return out;
}

/// P scaled by the lcm of its denominators, a p-adic unit.
inline std::vector<Integer> integer_coefficients(const QPoly& p, unsigned long prime) {
    Integer l = 1;
    for (const Rational& x : p.coeffs()) {
        if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), prime))
            throw precondition_error("oracle polynomial is not p-integral");
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    }
    std::vector<Integer> c;
    for (const Rational& x : p.coeffs()) c.push_back(x.get_num() * (l / x.get_den()));
    return c;
}

} // namespace detail

/// Valuations of the Z_p-roots of a monic p-integral polynomial, read to
/// precision p^N (a root congruent to 0 mod p^N reads as infinity).
///
/// Each square-free part P is searched separately. Distinct roots of P lie at
/// distance at least p^-delta with delta <= v(disc P)/2, so past level delta
/// every surviving residue disc holds exactly one root, and it lies in Z_p
/// because the disc is stable under conjugation.
inline OracleRoots exhaustive_root_valuations(const QPoly& poly, unsigned long prime, unsigned N) {
    if (!is_probable_prime(prime) || prime > 13) throw precondition_error("oracle prime must be a prime <= 13");
    if (poly.degree() < 1 || poly.degree() > 6) throw precondition_error("oracle degree must be between 1 and 6");
    if (N == 0 || N > 40) throw precondition_error("oracle precision must be between 1 and 40");
    if (poly.leading() != 1) throw precondition_error("oracle polynomial must be monic");

    OracleRoots out;
    const auto parts = squarefree_decomposition(poly);
    for (std::size_t mult = 1; mult <= parts.size(); ++mult) {
        const QPoly& P = parts[mult - 1];
        if (P.degree() < 1) continue;
        const std::size_t d = static_cast<std::size_t>(P.degree());
        long delta = 0;
        if (d > 1) {
            const Rational disc_norm = char_poly_mod(P, derivative(P)).coeff(0);
            delta = padic_order(disc_norm, prime) / 2;
        }
        const unsigned precision = std::max<unsigned>(N, static_cast<unsigned>(delta) + 1);
        const Integer m_read = ipow(Integer(prime), precision);
        const auto coeffs = detail::integer_coefficients(P, prime);

        std::set<Integer> clusters;
        for (const Integer& r : detail::digit_roots(coeffs, prime, precision)) clusters.insert(mod_floor(r, m_read));
        if (clusters.size() > d) throw hard_fault("oracle found more root clusters than the degree");
        for (const Integer& r : clusters) {
            ExtendedValue v = ExtendedValue::infinity();
            if (r != 0) {
                long k = padic_order(r, prime);
                if (k < static_cast<long>(N)) v = ValueVector({k});
            }
            for (std::size_t i = 0; i < mult; ++i) out.valuations.push_back(v);
        }
        out.unresolved += (d - clusters.size()) * mult;
    }
    std::sort(out.valuations.begin(), out.valuations.end());
    return out;
}

/// A K[beta] context whose beta has known minimal polynomial f1: q(beta) = 0
/// iff f1 divides q.
template <class Field>
struct GroundTruth {
    using E = typename Field::element_type;
    std::shared_ptr<const BetaContext<Field>> context;
    UniPoly<E> f1;
    UniPoly<E> f2;

    bool vanishes(const UniPoly<E>& q) const {
        const Field& k = context->field();
        return divrem_field(q, f1, [&k](const E& x) { return k.inverse(x); }).remainder.is_zero();
    }
};

/// f1 must be Nagata and irreducible over K (degree 1, or degree 2 with a
/// non-square discriminant); f2 monic over V with a unit constant term, so
/// all its roots are units.
template <class Field>
GroundTruth<Field> build_ground_truth_context(const Field& field, const UniPoly<typename Field::element_type>& f1,
                                              const UniPoly<typename Field::element_type>& f2) {
    using E = typename Field::element_type;
    const auto lp = valuation_ring_predicates(field);
    auto monic = [&field](const UniPoly<E>& p) { return p.degree() >= 1 && field.is_zero(E(p.leading() - E(1))); };
    if (!monic(f1) || !monic(f2)) throw precondition_error("ground-truth factors must be monic");
    CheckResult ng = check_nagata(f1, lp);
    if (!ng.ok) throw precondition_error("f1 is not Nagata: " + ng.diagnostics.front());
    if (f1.degree() > 2) throw precondition_error("f1 of degree above 2 has no irreducibility certificate");
    if (f1.degree() == 2) {
        const E disc = E(f1.coeff(1) * f1.coeff(1) - E(4) * f1.coeff(0));
        if (is_square(disc)) throw precondition_error("f1 splits over K: its discriminant is a square");
    }
    for (const auto& c : f2.coeffs())
        if (!lp.in_ring(c)) throw precondition_error("f2 has a coefficient outside V");
    if (!field.valuation(f2.coeff(0)).is_zero()) throw precondition_error("f2 has a root in the maximal ideal");
    auto positive = 0;
    for (const auto& v : root_valuations(f1, field))
        if (v.is_positive()) ++positive;
    if (positive != 1) throw precondition_error("f1 must have exactly one root in the maximal ideal");
    return {std::make_shared<const BetaContext<Field>>(field, f1 * f2), f1, f2};
}

} // namespace henselize
