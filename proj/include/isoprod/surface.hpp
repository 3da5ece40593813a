#pragma once

/**
 * @file surface.hpp
 * @brief Néron–Severi lattice of X = E1 x E2 for isogenous elliptic curves
 *        without complex multiplication and minimal isogeny degree d.
 *
 * Classes are stored in the basis (F1, F2, nabla) with nabla = Delta - d F1 - F2,
 * in which the intersection form is
 *
 *     ( 0 1  0  )
 *     ( 1 0  0  )
 *     ( 0 0 -2d )
 *
 * The (F1, F2, Delta) basis appears only in from_delta_basis / to_delta_basis.
 */

#include "isoprod/bqf.hpp"
#include "isoprod/error.hpp"
#include "isoprod/integer.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace isoprod {

template <exact_integer Int>
class SurfaceContext {
public:
    explicit SurfaceContext(Int d) : d_(std::move(d)) {
        if (d_ < Int(1))
            throw precondition_error(error_kind::invalid_argument,
                                     "isogeny degree d must be >= 1, got " + to_decimal(d_));
    }

    const Int& d() const { return d_; }

private:
    Int d_;
};

/// a1 F1 + a2 F2 + a3 nabla.
template <exact_integer Int>
struct NSClass {
    Int a1{0};
    Int a2{0};
    Int a3{0};

    friend NSClass operator+(const NSClass& l, const NSClass& m) {
        return {l.a1 + m.a1, l.a2 + m.a2, l.a3 + m.a3};
    }
    friend NSClass operator-(const NSClass& l, const NSClass& m) {
        return {l.a1 - m.a1, l.a2 - m.a2, l.a3 - m.a3};
    }
    friend NSClass operator*(const Int& k, const NSClass& l) { return {k * l.a1, k * l.a2, k * l.a3}; }

    friend bool operator==(const NSClass&, const NSClass&) = default;
    friend bool operator<(const NSClass& l, const NSClass& m) {
        if (l.a1 != m.a1) return l.a1 < m.a1;
        if (l.a2 != m.a2) return l.a2 < m.a2;
        return l.a3 < m.a3;
    }
    friend std::ostream& operator<<(std::ostream& os, const NSClass& l) {
        return os << '(' << l.a1 << ',' << l.a2 << ',' << l.a3 << ')';
    }
};

/// Coefficients (c1, c2, c3) of c1 F1 + c2 F2 + c3 Delta.
template <exact_integer Int>
struct DeltaCoords {
    Int c1{0};
    Int c2{0};
    Int c3{0};

    friend bool operator==(const DeltaCoords&, const DeltaCoords&) = default;
};

template <exact_integer Int>
Int intersect(const SurfaceContext<Int>& ctx, const NSClass<Int>& l, const NSClass<Int>& m) {
    return l.a1 * m.a2 + l.a2 * m.a1 - Int(2) * ctx.d() * l.a3 * m.a3;
}

/// L^2 = 2 (a1 a2 - d a3^2).
template <exact_integer Int>
Int self_intersection(const SurfaceContext<Int>& ctx, const NSClass<Int>& l) {
    return intersect(ctx, l, l);
}

template <exact_integer Int>
NSClass<Int> fiber_f1() {
    return {Int(1), Int(0), Int(0)};
}
template <exact_integer Int>
NSClass<Int> fiber_f2() {
    return {Int(0), Int(1), Int(0)};
}

/// Class of the graph of the isogeny: Delta = nabla + d F1 + F2.
template <exact_integer Int>
NSClass<Int> delta_class(const SurfaceContext<Int>& ctx) {
    return {ctx.d(), Int(1), Int(1)};
}

template <exact_integer Int>
NSClass<Int> from_delta_basis(const SurfaceContext<Int>& ctx, const Int& c1, const Int& c2,
                              const Int& c3) {
    return {c1 + ctx.d() * c3, c2 + c3, c3};
}

template <exact_integer Int>
NSClass<Int> from_delta_basis(const SurfaceContext<Int>& ctx, const DeltaCoords<Int>& c) {
    return from_delta_basis(ctx, c.c1, c.c2, c.c3);
}

template <exact_integer Int>
DeltaCoords<Int> to_delta_basis(const SurfaceContext<Int>& ctx, const NSClass<Int>& l) {
    return {l.a1 - ctx.d() * l.a3, l.a2 - l.a3, l.a3};
}

/// Graph of the dual isogeny. From F2 + Delta^ = (1-d) F1 + d F2 + Delta this
/// is (1, d, 1) in the nabla basis; it equals Delta exactly when d == 1.
template <exact_integer Int>
NSClass<Int> delta_hat_class(const SurfaceContext<Int>& ctx) {
    return {Int(1), ctx.d(), Int(1)};
}

/// Which of the two ampleness inequalities fails, if any.
enum class ample_failure { none, a1_not_positive, half_square_not_positive };

template <exact_integer Int>
ample_failure ampleness_check(const SurfaceContext<Int>& ctx, const NSClass<Int>& l) {
    if (!(l.a1 > Int(0))) return ample_failure::a1_not_positive;
    if (!(l.a1 * l.a2 - ctx.d() * l.a3 * l.a3 > Int(0))) return ample_failure::half_square_not_positive;
    return ample_failure::none;
}

template <exact_integer Int>
bool is_ample(const SurfaceContext<Int>& ctx, const NSClass<Int>& l) {
    return ampleness_check(ctx, l) == ample_failure::none;
}

namespace detail {
template <exact_integer Int>
void require_ample(const SurfaceContext<Int>& ctx, const NSClass<Int>& l) {
    switch (ampleness_check(ctx, l)) {
        case ample_failure::none:
            return;
        case ample_failure::a1_not_positive:
            throw precondition_error(error_kind::not_ample,
                                     "class is not ample: requires 0 < a1");
        case ample_failure::half_square_not_positive:
            throw precondition_error(error_kind::not_ample,
                                     "class is not ample: requires 0 < a1*a2 - d*a3^2 = L^2/2");
    }
}
}  // namespace detail

/// The form attached to L through its intersections with elliptic curves:
/// matrix (a1, -d a3; -d a3, d a2), i.e. the form (a1, -2d a3, d a2).
template <exact_integer Int>
QuadForm<Int> matrix_of(const SurfaceContext<Int>& ctx, const NSClass<Int>& l) {
    return {l.a1, Int(-Int(2) * ctx.d() * l.a3), ctx.d() * l.a2};
}

template <exact_integer Int>
NSClass<Int> class_of_matrix(const SurfaceContext<Int>& ctx, const QuadForm<Int>& q) {
    const Int& d = ctx.d();
    if (q.B % Int(2) != Int(0))
        throw precondition_error(error_kind::divisibility_violation, "middle coefficient is odd");
    Int half_b = q.B / Int(2);
    if (half_b % d != Int(0))
        throw precondition_error(error_kind::divisibility_violation, "B/2 is not divisible by d");
    if (q.C % d != Int(0))
        throw precondition_error(error_kind::divisibility_violation, "C is not divisible by d");
    return {q.A, q.C / d, Int(-(half_b / d))};
}

/// Seshadri constant of an ample class with non-negative coefficients in
/// the (F1, F2, Delta) basis: the minimum of L.F1, L.F2, L.Delta.
template <exact_integer Int>
Int eps_positive_cone(const SurfaceContext<Int>& ctx, const Int& c1, const Int& c2, const Int& c3) {
    if (c1 < Int(0) || c2 < Int(0) || c3 < Int(0))
        throw precondition_error(error_kind::not_in_cone, "coefficients must be non-negative");
    if (!is_ample(ctx, from_delta_basis(ctx, c1, c2, c3)))
        throw precondition_error(error_kind::not_in_cone, "class is not ample");
    const Int& d = ctx.d();
    Int m = c2 + c3;
    if (Int v = c1 + d * c3; v < m) m = v;
    if (Int v = c1 + d * c2; v < m) m = v;
    return m;
}

}  // namespace isoprod
