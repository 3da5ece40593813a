#pragma once

/**
 * @file curves.hpp
 * @brief Elliptic curves N_{a,b} = {(a x, b phi(x)) : x in E1} on X.
 *
 * Without complex multiplication every elliptic curve on X is a translate of
 * some N_{a,b}, so curve searches range over integer pairs only.
 */

#include "isoprod/bqf.hpp"
#include "isoprod/error.hpp"
#include "isoprod/integer.hpp"
#include "isoprod/surface.hpp"

#include <ostream>

namespace isoprod {

namespace detail {
template <exact_integer Int>
void require_nonzero_pair(const Int& a, const Int& b) {
    if (a == Int(0) && b == Int(0))
        throw precondition_error(error_kind::zero_pair, "(a, b) must not be (0, 0)");
}
}  // namespace detail

/// Degree of sigma_{a,b}: E1 -> N_{a,b}, x -> (a x, b phi(x)).
template <exact_integer Int>
Int sigma_degree(const SurfaceContext<Int>& ctx, const Int& a, const Int& b) {
    detail::require_nonzero_pair(a, b);
    return igcd(Int(a * a), Int(b * b * ctx.d()), Int(a * b));
}

/// Numerical class (b^2 d F1 + a^2 F2 + ab nabla) / deg(sigma_{a,b}).
template <exact_integer Int>
NSClass<Int> curve_class(const SurfaceContext<Int>& ctx, const Int& a, const Int& b) {
    Int g = sigma_degree(ctx, a, b);
    return {Int(b * b * ctx.d() / g), Int(a * a / g), Int(a * b / g)};
}

/// An elliptic curve N_{a,b}, stored with (a, b) coprime and canonical in
/// sign. N_{a,b} = N_{la,lb}, so non-coprime input is divided by its gcd.
template <exact_integer Int>
class CurveClass {
public:
    CurveClass(const SurfaceContext<Int>& ctx, const Int& a, const Int& b) {
        detail::require_nonzero_pair(a, b);
        Int g = igcd(a, b);
        pair_ = canonical(Pair<Int>{Int(a / g), Int(b / g)});
        deg_sigma_ = igcd(pair_.x, ctx.d());
        class_ = curve_class(ctx, pair_.x, pair_.y);
    }

    const Int& a() const { return pair_.x; }
    const Int& b() const { return pair_.y; }
    const Pair<Int>& pair() const { return pair_; }
    const Int& deg_sigma() const { return deg_sigma_; }
    const NSClass<Int>& ns_class() const { return class_; }

    friend bool operator==(const CurveClass& l, const CurveClass& r) { return l.pair_ == r.pair_; }
    friend std::ostream& operator<<(std::ostream& os, const CurveClass& c) {
        return os << "N" << c.pair_;
    }

private:
    Pair<Int> pair_;
    Int deg_sigma_;
    NSClass<Int> class_;
};

/// L . N_{a,b} = M_L(a, b) / gcd(a, d) for coprime (a, b).
template <exact_integer Int>
Int intersect_bundle(const SurfaceContext<Int>& ctx, const NSClass<Int>& l, const Int& a,
                     const Int& b) {
    detail::require_nonzero_pair(a, b);
    if (igcd(a, b) != Int(1))
        throw precondition_error(error_kind::non_coprime, "(a, b) must be coprime");
    return evaluate(matrix_of(ctx, l), a, b) / igcd(a, ctx.d());
}

template <exact_integer Int>
Int intersect_bundle(const SurfaceContext<Int>& ctx, const NSClass<Int>& l, const Pair<Int>& p) {
    return intersect_bundle(ctx, l, p.x, p.y);
}

}  // namespace isoprod
