#pragma once

// Newton polygons over a valued field: lower convex hull of the points
// (i, v(p_i)), root-valuation multisets, and isolated slopes.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "unipoly.hpp"
#include "valgroup.hpp"

namespace henselize {

struct PolygonPoint {
    std::size_t index;
    ValueVector value;
};

struct PolygonEdge {
    std::size_t from;
    std::size_t to;
    ValueVector slope;

    std::size_t length() const { return to - from; }
};

struct NewtonPolygon {
    std::vector<PolygonPoint> points;    ///< one per nonzero coefficient
    std::vector<PolygonPoint> vertices;  ///< lower hull, increasing abscissa
    std::vector<PolygonEdge> edges;
    std::size_t trailing_zero_count = 0;
};

namespace detail {

inline ValueVector slope_between(const PolygonPoint& a, const PolygonPoint& b) {
    return div_by_int(b.value - a.value, static_cast<long>(b.index - a.index));
}

} // namespace detail

/// Lower hull of the points of a nonzero polynomial, collinear points dropped.
template <class Field>
NewtonPolygon polygon(const UniPoly<typename Field::element_type>& p, const Field& field) {
    if (p.is_zero()) throw precondition_error("Newton polygon of the zero polynomial");
    NewtonPolygon np;
    for (std::size_t i = 0; i < p.size(); ++i) {
        ExtendedValue v = field.valuation(p.coeffs()[i]);
        if (v.is_finite()) np.points.push_back({i, v.value()});
    }
    if (np.points.empty()) throw precondition_error("Newton polygon of a polynomial with no nonzero coefficient");
    np.trailing_zero_count = np.points.front().index;

    std::vector<PolygonPoint>& hull = np.vertices;
    for (const PolygonPoint& pt : np.points) {
        while (hull.size() >= 2) {
            const PolygonPoint& a = hull[hull.size() - 2];
            const PolygonPoint& b = hull.back();
            if (detail::slope_between(a, b) >= detail::slope_between(b, pt)) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    for (std::size_t i = 0; i + 1 < hull.size(); ++i)
        np.edges.push_back({hull[i].index, hull[i + 1].index, detail::slope_between(hull[i], hull[i + 1])});
    return np;
}

/// Valuations of the roots of a monic polynomial, sorted ascending with the
/// infinite entries (roots at 0) last.
template <class Field>
std::vector<ExtendedValue> root_valuations(const UniPoly<typename Field::element_type>& p, const Field& field) {
    using E = typename Field::element_type;
    if (p.is_zero() || !field.is_zero(E(p.leading() - E(1))))
        throw precondition_error("root_valuations requires a monic polynomial");
    NewtonPolygon np = polygon(p, field);
    std::vector<ExtendedValue> out;
    out.reserve(static_cast<std::size_t>(p.degree()));
    for (const PolygonEdge& e : np.edges)
        for (std::size_t i = 0; i < e.length(); ++i) out.emplace_back(-e.slope);
    for (std::size_t i = 0; i < np.trailing_zero_count; ++i) out.push_back(ExtendedValue::infinity());
    std::sort(out.begin(), out.end());
    return out;
}

/// Every k such that (k, v(p_k)) and (k+1, v(p_{k+1})) are consecutive hull vertices.
inline std::vector<std::size_t> isolated_slopes(const NewtonPolygon& np) {
    std::vector<std::size_t> ks;
    for (const PolygonEdge& e : np.edges)
        if (e.length() == 1) ks.push_back(e.from);
    return ks;
}

template <class Field>
std::vector<std::size_t> isolated_slopes(const UniPoly<typename Field::element_type>& p, const Field& field) {
    return isolated_slopes(polygon(p, field));
}

inline std::string to_string(const std::vector<ExtendedValue>& multiset) {
    std::string s = "{";
    for (std::size_t i = 0; i < multiset.size(); ++i) {
        if (i) s += ", ";
        s += multiset[i].to_string();
    }
    return s + "}";
}

} // namespace henselize
