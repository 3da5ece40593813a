#pragma once

/**
 * @file seshadri.hpp
 * @brief Minimal intersection with elliptic curves, weakly submaximal curves
 *        and the integrality question for Seshadri constants on E1 x E2.
 *
 * eps*(L) = min { L.N : N elliptic } is computed from the reduced form of
 * M_L: if M_L(T v) = R(v) with R = (A, B, C) reduced, the curve attached to
 * T v meets L in R(v) / gcd((T v)_1, d). The pair (1, 0) already gives a
 * value <= A, and any v with R(v) > d A gives a value > A, so only the
 * finitely many coprime v with R(v) <= d A need to be inspected.
 *
 * All square-root comparisons are done on squares.
 */

#include "isoprod/bqf.hpp"
#include "isoprod/curves.hpp"
#include "isoprod/error.hpp"
#include "isoprod/integer.hpp"
#include "isoprod/rational.hpp"
#include "isoprod/surface.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace isoprod {

template <exact_integer Int>
struct EpsStar {
    Int value;
    Pair<Int> witness;  // coprime, canonical sign
};

template <exact_integer Int>
EpsStar<Int> eps_star(const SurfaceContext<Int>& ctx, const NSClass<Int>& l) {
    detail::require_ample(ctx, l);
    const Int& d = ctx.d();
    const auto [form, t] = reduce(matrix_of(ctx, l));
    std::optional<EpsStar<Int>> best;
    for (const auto& v : enumerate_coprime_below(form, Int(d * form.A))) {
        Pair<Int> w = canonical(t(v));
        Int value = evaluate(form, v) / igcd(w.x, d);
        if (!best || value < best->value || (value == best->value && w < best->witness))
            best = EpsStar<Int>{std::move(value), std::move(w)};
    }
    return *best;  // (1, 0) is always enumerated
}

/// Independent oracle for eps_star: scans the box |a|, |b| <= radius on M_L
/// directly. Outside the box, 4 max(A, C) M_L(a, b) >= |disc| (radius + 1)^2,
/// and each intersection number is at least M_L(a, b) / d; if that lower
/// bound cannot beat the best value found, the box is too small and
/// radius_insufficient is thrown.
template <exact_integer Int>
Int eps_star_bruteforce(const SurfaceContext<Int>& ctx, const NSClass<Int>& l, const Int& radius) {
    detail::require_ample(ctx, l);
    if (radius < Int(1))
        throw precondition_error(error_kind::radius_insufficient, "radius must be >= 1");
    const Int& d = ctx.d();
    const QuadForm<Int> q = matrix_of(ctx, l);
    std::optional<Int> best;
    for (Int a = Int(0); a <= radius; a = a + Int(1)) {
        for (Int b = -radius; b <= radius; b = b + Int(1)) {
            if (a == Int(0) && b <= Int(0)) continue;
            if (igcd(a, b) != Int(1)) continue;
            Int value = evaluate(q, a, b) / igcd(a, d);
            if (!best || value < *best) best = std::move(value);
        }
    }
    const Int max_ac = q.A > q.C ? q.A : q.C;
    const Int r1 = radius + Int(1);
    if (-discriminant(q) * r1 * r1 < Int(4) * max_ac * d * *best)
        throw precondition_error(error_kind::radius_insufficient,
                                 "radius " + to_decimal(radius) + " does not certify the minimum");
    return *best;
}

/// Smallest power-of-two radius (from 4) accepted by eps_star_bruteforce.
template <exact_integer Int>
Int eps_star_bruteforce(const SurfaceContext<Int>& ctx, const NSClass<Int>& l) {
    for (Int radius(4);; radius = radius * Int(2)) {
        try {
            return eps_star_bruteforce(ctx, l, radius);
        } catch (const precondition_error& e) {
            if (e.kind() != error_kind::radius_insufficient) throw;
        }
    }
}

template <exact_integer Int>
bool has_weakly_submaximal(const SurfaceContext<Int>& ctx, const NSClass<Int>& l) {
    Int e = eps_star(ctx, l).value;
    return e * e <= self_intersection(ctx, l);
}

/// eps(L) when no weakly submaximal curve exists: only bracketed. The lower
/// end 4/3 is a display floor (the value for irreducible principal
/// polarizations), not a proven bound for this bundle; the upper end is
/// sqrt(upper_square).
template <exact_integer Int>
struct EpsInterval {
    Fraction<Int> lower;
    Int upper_square;
};

template <exact_integer Int>
struct SeshadriReport {
    Int eps_star;
    Pair<Int> eps_star_witness;
    Int L_squared;
    bool sqrt_is_integer = false;
    bool has_submaximal = false;
    std::variant<Fraction<Int>, EpsInterval<Int>> eps;
    std::optional<Pair<Int>> witness_pair;
    // eps == eps* is taken per bundle from the existence of a weakly
    // submaximal curve; set whenever that reading is used.
    bool per_bundle_assumption = false;

    bool eps_is_exact() const { return std::holds_alternative<Fraction<Int>>(eps); }
};

template <exact_integer Int>
SeshadriReport<Int> seshadri_report(const SurfaceContext<Int>& ctx, const NSClass<Int>& l) {
    auto star = eps_star(ctx, l);
    SeshadriReport<Int> r;
    r.eps_star = star.value;
    r.eps_star_witness = star.witness;
    r.L_squared = self_intersection(ctx, l);
    r.sqrt_is_integer = is_perfect_square(r.L_squared);
    r.has_submaximal = star.value * star.value <= r.L_squared;
    if (r.has_submaximal) {
        r.eps = Fraction<Int>(star.value);
        r.witness_pair = star.witness;
        r.per_bundle_assumption = true;
    } else {
        r.eps = EpsInterval<Int>{Fraction<Int>(Int(4), Int(3)), r.L_squared};
    }
    return r;
}

namespace detail {
template <exact_integer Int>
void require_d_at_least_3(const Int& d) {
    if (d < Int(3))
        throw precondition_error(error_kind::d_too_small, "requires d >= 3, got " + to_decimal(d));
}
}  // namespace detail

/// An ample class with no weakly submaximal elliptic curve, for d >= 3.
///
/// Its form is 2d (2, 1, d) pulled back along S^-1 = (1 -c; 0 1), c = ceil(d/2),
/// so a curve pair (x, y) = S (a, b) meets it in 2d Q(a, b) / gcd(a + b c, d)
/// with Q = (2, 1, d); no_submaximal_certificate bounds exactly these
/// quotients. Explicitly L = 4d F1 + (4c^2 - 2c + 2d) F2 + (4c - 1) nabla and
/// L^2 = 16 d^2 - 2d.
///
/// Pulling back along S instead gives 4d F1 + (4c^2 + 2c + 2d) F2 - (4c + 1) nabla,
/// which has the same L^2 but pairs with gcd(a - b c, d); for d = 3 that class
/// meets N_{3,-1} in 8 < sqrt(138).
template <exact_integer Int>
NSClass<Int> counterexample_bundle(const SurfaceContext<Int>& ctx) {
    const Int& d = ctx.d();
    detail::require_d_at_least_3(d);
    const Int c = (d + Int(1)) / Int(2);
    const QuadForm<Int> scaled{Int(4) * d, Int(2) * d, Int(2) * d * d};
    return class_of_matrix(ctx, pullback(scaled, UnimodularMap<Int>{Int(1), Int(-c), Int(0), Int(1)}));
}

/// Evidence that Q = (2, 1, d) with S = (1 c; 0 1), c = ceil(d/2), satisfies
/// Q(a, b) / gcd(a + b c, d) >= 2 > sqrt((8d - 1) / (2d)) for every coprime
/// pair.
template <exact_integer Int>
struct NoSubmaximalCertificate {
    Int d;
    Int shift;                             // c = ceil(d/2)
    std::size_t pairs_checked = 0;         // coprime pairs with Q <= 2d
    std::vector<Pair<Int>> exceptional;    // coprime pairs != (1,0) with Q < 2d
    std::optional<Pair<Int>> counterexample;
    bool holds = false;
};

template <exact_integer Int>
NoSubmaximalCertificate<Int> no_submaximal_certificate(const Int& d) {
    detail::require_d_at_least_3(d);
    NoSubmaximalCertificate<Int> cert;
    cert.d = d;
    cert.shift = (d + Int(1)) / Int(2);
    const QuadForm<Int> q{Int(2), Int(1), d};
    const Int two_d = Int(2) * d;
    const Int rhs = Int(8) * d - Int(1);
    // Pairs with Q > 2d have ratio > 2 because the gcd is at most d.
    for (const auto& p : enumerate_coprime_below(q, two_d)) {
        ++cert.pairs_checked;
        Int value = evaluate(q, p);
        if (value < two_d && p != Pair<Int>{Int(1), Int(0)}) cert.exceptional.push_back(p);
        Int g = igcd(Int(p.x + p.y * cert.shift), d);
        // value/g >= 2 and (value/g)^2 > (8d-1)/(2d), both cleared of denominators
        bool ok = value >= Int(2) * g && value * value * two_d > rhs * g * g;
        if (!ok && !cert.counterexample) cert.counterexample = p;
    }
    cert.holds = !cert.counterexample.has_value();
    return cert;
}

template <exact_integer Int>
bool verify_no_submaximal_form(const Int& d) {
    return no_submaximal_certificate(d).holds;
}

template <exact_integer Int>
struct SurveySummary {
    Int bound;
    std::size_t ample_classes = 0;
    std::size_t with_submaximal = 0;
    std::size_t without_submaximal = 0;
    std::map<Int, std::size_t> eps_star_histogram;
    std::vector<NSClass<Int>> no_submaximal;  // lexicographic in (a1, a2, a3)
};

/// Every ample class with |a1|, |a2|, |a3| <= bound, in lexicographic order.
template <exact_integer Int>
SurveySummary<Int> survey(const SurfaceContext<Int>& ctx, const Int& bound) {
    SurveySummary<Int> s;
    s.bound = bound;
    // ampleness forces a1 > 0 and then a2 > 0
    for (Int a1(1); a1 <= bound; a1 = a1 + Int(1)) {
        for (Int a2(1); a2 <= bound; a2 = a2 + Int(1)) {
            for (Int a3 = -bound; a3 <= bound; a3 = a3 + Int(1)) {
                NSClass<Int> l{a1, a2, a3};
                if (!is_ample(ctx, l)) continue;
                ++s.ample_classes;
                Int e = eps_star(ctx, l).value;
                if (e * e <= self_intersection(ctx, l)) {
                    ++s.with_submaximal;
                } else {
                    ++s.without_submaximal;
                    s.no_submaximal.push_back(l);
                }
                ++s.eps_star_histogram[e];
            }
        }
    }
    return s;
}

template <exact_integer Int>
struct IntegralityVerdict {
    enum class kind { all_integer, non_integer_exists };
    kind verdict = kind::all_integer;

    // all_integer: exhaustive check of ample classes with |coefficients| <= sample_bound.
    Int sample_bound;
    std::size_t classes_checked = 0;
    bool all_have_submaximal = false;
    std::optional<NSClass<Int>> first_failure;

    // non_integer_exists: a bundle with no weakly submaximal curve and a
    // non-square self-intersection. It forces some non-integer Seshadri
    // constant on X; its own constant need not be the non-integer one.
    std::optional<NSClass<Int>> witness;
    Int witness_L_squared;
    Int witness_eps_star;
    Int witness_sqrt_floor;
    bool witness_ample = false;
    bool witness_no_submaximal = false;
    bool witness_non_square = false;
    std::optional<NoSubmaximalCertificate<Int>> form_certificate;
};

template <exact_integer Int>
IntegralityVerdict<Int> integrality_verdict(const SurfaceContext<Int>& ctx, const Int& sample_bound) {
    IntegralityVerdict<Int> v;
    v.sample_bound = sample_bound;
    if (ctx.d() <= Int(2)) {
        v.verdict = IntegralityVerdict<Int>::kind::all_integer;
        auto s = survey(ctx, sample_bound);
        v.classes_checked = s.ample_classes;
        v.all_have_submaximal = s.without_submaximal == 0;
        if (!s.no_submaximal.empty()) v.first_failure = s.no_submaximal.front();
        return v;
    }
    v.verdict = IntegralityVerdict<Int>::kind::non_integer_exists;
    NSClass<Int> l = counterexample_bundle(ctx);
    v.witness = l;
    v.witness_ample = is_ample(ctx, l);
    v.witness_L_squared = self_intersection(ctx, l);
    v.witness_sqrt_floor = isqrt(v.witness_L_squared);
    v.witness_non_square = !is_perfect_square(v.witness_L_squared);
    v.witness_eps_star = eps_star(ctx, l).value;
    v.witness_no_submaximal = v.witness_eps_star * v.witness_eps_star > v.witness_L_squared;
    v.form_certificate = no_submaximal_certificate(ctx.d());
    return v;
}

}  // namespace isoprod
