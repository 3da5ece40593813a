#pragma once

/**
 * @file bqf.hpp
 * @brief Integral binary quadratic forms Ax^2 + Bxy + Cy^2.
 *
 * Forms are stored with the full middle coefficient B; half-integer Gram
 * matrices are never built. Reduction follows the classical Gauss algorithm
 * and records the proper unimodular substitution it applied, so that
 *
 *     reduce(Q).form(x, y) == Q(T * (x, y))     with det(T) == +1.
 */

#include "isoprod/error.hpp"
#include "isoprod/integer.hpp"

#include <algorithm>
#include <ostream>
#include <utility>
#include <vector>

namespace isoprod {

/// An integer pair (x, y), used both for lattice points and for the
/// coprime pairs (a, b) labelling elliptic curves.
template <exact_integer Int>
struct Pair {
    Int x{0};
    Int y{0};

    friend bool operator==(const Pair&, const Pair&) = default;
    friend bool operator<(const Pair& p, const Pair& q) {
        return p.x < q.x || (p.x == q.x && p.y < q.y);
    }
    friend std::ostream& operator<<(std::ostream& os, const Pair& p) {
        return os << '(' << p.x << ',' << p.y << ')';
    }
};

/// Representative of {p, -p} with x > 0, or x == 0 and y > 0.
template <exact_integer Int>
Pair<Int> canonical(const Pair<Int>& p) {
    if (p.x < Int(0) || (p.x == Int(0) && p.y < Int(0))) return {Int(-p.x), Int(-p.y)};
    return p;
}

template <exact_integer Int>
bool is_coprime(const Pair<Int>& p) {
    return igcd(p.x, p.y) == Int(1);
}

template <exact_integer Int>
struct QuadForm {
    Int A{0};
    Int B{0};
    Int C{0};

    friend bool operator==(const QuadForm&, const QuadForm&) = default;
    friend std::ostream& operator<<(std::ostream& os, const QuadForm& q) {
        return os << '(' << q.A << ',' << q.B << ',' << q.C << ')';
    }
};

/// 2x2 integer matrix (alpha beta; gamma delta) acting on column vectors.
template <exact_integer Int>
struct UnimodularMap {
    Int alpha{1};
    Int beta{0};
    Int gamma{0};
    Int delta{1};

    static UnimodularMap identity() { return {}; }

    Int det() const { return alpha * delta - beta * gamma; }

    Pair<Int> operator()(const Pair<Int>& v) const {
        return {alpha * v.x + beta * v.y, gamma * v.x + delta * v.y};
    }

    friend UnimodularMap operator*(const UnimodularMap& s, const UnimodularMap& t) {
        return {s.alpha * t.alpha + s.beta * t.gamma, s.alpha * t.beta + s.beta * t.delta,
                s.gamma * t.alpha + s.delta * t.gamma, s.gamma * t.beta + s.delta * t.delta};
    }

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
    friend std::ostream& operator<<(std::ostream& os, const UnimodularMap& m) {
        return os << '(' << m.alpha << ' ' << m.beta << "; " << m.gamma << ' ' << m.delta << ')';
    }
};

template <exact_integer Int>
struct Reduction {
    QuadForm<Int> form;
    UnimodularMap<Int> transform;
};

// ---------------------------------------------------------------------------

template <exact_integer Int>
Int evaluate(const QuadForm<Int>& q, const Int& x, const Int& y) {
    return q.A * x * x + q.B * x * y + q.C * y * y;
}

template <exact_integer Int>
Int evaluate(const QuadForm<Int>& q, const Pair<Int>& p) {
    return evaluate(q, p.x, p.y);
}

/// B^2 - 4AC.
template <exact_integer Int>
Int discriminant(const QuadForm<Int>& q) {
    return q.B * q.B - Int(4) * q.A * q.C;
}

template <exact_integer Int>
bool is_positive_definite(const QuadForm<Int>& q) {
    return q.A > Int(0) && discriminant(q) < Int(0);
}

/// The form (x, y) -> q(S * (x, y)).
template <exact_integer Int>
QuadForm<Int> pullback(const QuadForm<Int>& q, const UnimodularMap<Int>& s) {
    return {evaluate(q, s.alpha, s.gamma),
            Int(2) * q.A * s.alpha * s.beta + q.B * (s.alpha * s.delta + s.beta * s.gamma) +
                Int(2) * q.C * s.gamma * s.delta,
            evaluate(q, s.beta, s.delta)};
}

namespace detail {
template <exact_integer Int>
void require_positive_definite(const QuadForm<Int>& q) {
    if (!is_positive_definite(q))
        throw precondition_error(error_kind::not_positive_definite,
                                 "form is not positive definite");
}
}  // namespace detail

template <exact_integer Int>
bool is_reduced(const QuadForm<Int>& q) {
    detail::require_positive_definite(q);
    if (iabs(q.B) > q.A || q.A > q.C) return false;
    if ((iabs(q.B) == q.A || q.A == q.C) && q.B < Int(0)) return false;
    return true;
}

/// Gauss reduction to the unique properly equivalent reduced form.
template <exact_integer Int>
Reduction<Int> reduce(const QuadForm<Int>& q) {
    detail::require_positive_definite(q);
    Int A = q.A, B = q.B, C = q.C;
    UnimodularMap<Int> t;
    const Int two(2);
    for (;;) {
        // x -> x + k y brings B into (-A, A].
        Int k = floor_div(Int(A - B), Int(two * A));
        if (k != Int(0)) {
            C = A * k * k + B * k + C;
            B = B + two * A * k;
            t = t * UnimodularMap<Int>{Int(1), k, Int(0), Int(1)};
        }
        // (x, y) -> (-y, x) sends (A, B, C) to (C, -B, A).
        if (A > C || (A == C && B < Int(0))) {
            std::swap(A, C);
            B = -B;
            t = t * UnimodularMap<Int>{Int(0), Int(-1), Int(1), Int(0)};
            continue;
        }
        break;
    }
    return {{A, B, C}, t};
}

/// Canonical representative under GL2(Z): the reduced form with its middle
/// coefficient made non-negative via (x, y) -> (x, -y).
template <exact_integer Int>
QuadForm<Int> reduce_gl2(const QuadForm<Int>& q) {
    QuadForm<Int> r = reduce(q).form;
    r.B = iabs(r.B);
    return r;
}

/// All coprime (x, y) with q(x, y) <= bound, one per antipodal pair, in
/// lexicographic order of the canonical representatives.
template <exact_integer Int>
std::vector<Pair<Int>> enumerate_coprime_below(const QuadForm<Int>& q, const Int& bound) {
    detail::require_positive_definite(q);
    if (bound < Int(0))
        throw precondition_error(error_kind::invalid_argument, "bound must be non-negative");
    std::vector<Pair<Int>> out;
    // 4A q(x,y) = (2Ax + By)^2 + |disc| y^2
    const Int neg_disc = -discriminant(q);
    const Int four_a_m = Int(4) * q.A * bound;
    const Int y_max = isqrt(Int(four_a_m / neg_disc));
    const Int two_a = Int(2) * q.A;
    for (Int y = -y_max; y <= y_max; y = y + Int(1)) {
        Int rest = four_a_m - neg_disc * y * y;
        if (rest < Int(0)) continue;
        Int s = isqrt(rest);
        Int lo = ceil_div(Int(-q.B * y - s), two_a);
        Int hi = floor_div(Int(-q.B * y + s), two_a);
        if (lo < Int(0)) lo = Int(0);
        for (Int x = lo; x <= hi; x = x + Int(1)) {
            if (x == Int(0) && y <= Int(0)) continue;
            if (igcd(x, y) != Int(1)) continue;
            out.push_back({x, y});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The two smallest values of a reduced form on coprime pairs: q(1,0) = A
/// and, over pairs not proportional to (1,0), q(0,1) = C.
template <exact_integer Int>
std::pair<Int, Int> minimum_coprime_values(const QuadForm<Int>& q) {
    if (!is_reduced(q)) throw precondition_error(error_kind::not_reduced, "form is not reduced");
    return {q.A, q.C};
}

}  // namespace isoprod
