#pragma once

/**
 * @file polarizations.hpp
 * @brief Principal polarizations on X = E1 x E2.
 *
 * Isomorphism classes of principal polarizations correspond to principally
 * reduced matrices (A B; B C) with 0 <= 2B <= A <= C, gcd(A, B, C) = 1 and
 * AC - B^2 = d. A class is reducible (a sum of two elliptic curves meeting
 * once) exactly when B = 0.
 *
 * PPClass stores the matrix entries (half middle coefficient). The
 * corresponding quadratic form is (A, 2B, C); to_quad_form and
 * pp_class_of_form are the only places where the two conventions meet.
 */

#include "isoprod/bqf.hpp"
#include "isoprod/curves.hpp"
#include "isoprod/error.hpp"
#include "isoprod/integer.hpp"
#include "isoprod/rational.hpp"
#include "isoprod/surface.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace isoprod {

template <exact_integer Int>
class PPClass {
public:
    PPClass(Int A, Int B, Int C) : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)) {
        if (!(Int(0) < A_))
            throw precondition_error(error_kind::not_positive_definite, "A must be positive");
        if (!(Int(0) <= B_ && Int(2) * B_ <= A_ && A_ <= C_))
            throw precondition_error(error_kind::invalid_argument,
                                     "principally reduced form needs 0 <= 2B <= A <= C");
        if (igcd(A_, B_, C_) != Int(1))
            throw precondition_error(error_kind::invalid_argument, "gcd(A, B, C) must be 1");
    }

    const Int& A() const { return A_; }
    const Int& B() const { return B_; }
    const Int& C() const { return C_; }
    Int det() const { return A_ * C_ - B_ * B_; }

    friend bool operator==(const PPClass&, const PPClass&) = default;
    friend bool operator<(const PPClass& p, const PPClass& q) {
        if (p.A_ != q.A_) return p.A_ < q.A_;
        if (p.B_ != q.B_) return p.B_ < q.B_;
        return p.C_ < q.C_;
    }
    friend std::ostream& operator<<(std::ostream& os, const PPClass& p) {
        return os << '(' << p.A_ << ',' << p.B_ << ',' << p.C_ << ')';
    }

private:
    Int A_, B_, C_;
};

/// (A B; B C) -> the form (A, 2B, C).
template <exact_integer Int>
QuadForm<Int> to_quad_form(const PPClass<Int>& p) {
    return {p.A(), Int(2) * p.B(), p.C()};
}

/// Inverse of to_quad_form; the form must be GL2-reduced with even middle.
template <exact_integer Int>
PPClass<Int> pp_class_of_form(const QuadForm<Int>& q) {
    if (q.B % Int(2) != Int(0))
        throw precondition_error(error_kind::divisibility_violation, "middle coefficient is odd");
    return PPClass<Int>(q.A, q.B / Int(2), q.C);
}

enum class pp_kind { reducible, irreducible };

inline const char* to_string(pp_kind k) {
    return k == pp_kind::reducible ? "reducible" : "irreducible";
}

template <exact_integer Int>
pp_kind classify(const PPClass<Int>& p) {
    return p.B() == Int(0) ? pp_kind::reducible : pp_kind::irreducible;
}

namespace detail {
template <exact_integer Int>
void require_positive_d(const Int& d) {
    if (d < Int(1))
        throw precondition_error(error_kind::invalid_argument, "d must be >= 1, got " + to_decimal(d));
}

/// Calls f(A, C) for every factorization n = A C with lo <= A <= C, A ascending.
template <exact_integer Int, typename F>
bool for_each_factorization(const Int& n, const Int& lo, F&& f) {
    for (Int a = lo < Int(1) ? Int(1) : lo; a * a <= n; a = a + Int(1)) {
        if (n % a != Int(0)) continue;
        if (!f(a, Int(n / a))) return false;
    }
    return true;
}
}  // namespace detail

/// All principally reduced forms of determinant d, lexicographic in (A, B, C).
/// A >= 2B and C >= A give d = AC - B^2 >= 3B^2, so B <= sqrt(d/3).
template <exact_integer Int>
std::vector<PPClass<Int>> enumerate_pp_forms(const Int& d) {
    detail::require_positive_d(d);
    std::vector<PPClass<Int>> out;
    const Int b_max = isqrt(Int(d / Int(3)));
    for (Int b(0); b <= b_max; b = b + Int(1)) {
        detail::for_each_factorization(Int(d + b * b), Int(Int(2) * b), [&](const Int& a, const Int& c) {
            if (igcd(a, b, c) == Int(1)) out.emplace_back(a, b, c);
            return true;
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Existence of a principally reduced form of determinant d with B != 0.
template <exact_integer Int>
bool exists_irreducible(const Int& d) {
    detail::require_positive_d(d);
    const Int b_max = isqrt(Int(d / Int(3)));
    for (Int b(1); b <= b_max; b = b + Int(1)) {
        bool none = detail::for_each_factorization(
            Int(d + b * b), Int(Int(2) * b),
            [&](const Int& a, const Int& c) { return igcd(a, b, c) != Int(1); });
        if (!none) return true;
    }
    return false;
}

/// Grube's criterion: n is idoneal iff every n + B^2 = AC with
/// 1 <= B <= sqrt(n/3), 2B <= A <= C, gcd(A, 2B, C) = 1 has A = C or A = 2B.
template <exact_integer Int>
bool is_idoneal(const Int& n) {
    detail::require_positive_d(n);
    const Int b_max = isqrt(Int(n / Int(3)));
    for (Int b(1); b <= b_max; b = b + Int(1)) {
        const Int two_b = Int(2) * b;
        bool degenerate = detail::for_each_factorization(
            Int(n + b * b), two_b, [&](const Int& a, const Int& c) {
                if (igcd(a, two_b, c) != Int(1)) return true;
                return a == c || a == two_b;
            });
        if (!degenerate) return false;
    }
    return true;
}

/// No irreducible principal polarization exists iff d = 1 or d is an even
/// idoneal number not divisible by 8.
template <exact_integer Int>
bool kani_predicate(const Int& d) {
    detail::require_positive_d(d);
    if (d == Int(1)) return true;
    return d % Int(2) == Int(0) && d % Int(8) != Int(0) && is_idoneal(d);
}

inline constexpr const char* kKaniCaveat =
    "the list is complete only up to the scan limit; one further value d* > 462 "
    "is not excluded unconditionally";

template <exact_integer Int>
struct KaniList {
    Int limit;
    std::vector<Int> values;
    std::string caveat = kKaniCaveat;
};

template <exact_integer Int>
KaniList<Int> kani_list(const Int& limit) {
    detail::require_positive_d(limit);
    KaniList<Int> out{limit, {}};
    for (Int d(1); d <= limit; d = d + Int(1))
        if (kani_predicate(d)) out.values.push_back(d);
    return out;
}

template <exact_integer Int>
std::vector<Int> idoneal_numbers(const Int& limit) {
    std::vector<Int> out;
    for (Int n(1); n <= limit; n = n + Int(1))
        if (is_idoneal(n)) out.push_back(n);
    return out;
}

namespace detail {
/// Calls f(L) for every class L = (a1, a2, a3) with L^2 = 2, a1 > 0 and
/// |a3| <= search_bound: a1 ranges over the divisors of 1 + d a3^2. Order:
/// a3 = 0, 1, -1, 2, -2, ...; a1 ascending. Stops when f returns false.
template <exact_integer Int, typename F>
void for_each_principal_class(const SurfaceContext<Int>& ctx, const Int& search_bound, F&& f) {
    const Int& d = ctx.d();
    for (Int m(0); m <= search_bound; m = m + Int(1)) {
        for (const Int& a3 : m == Int(0) ? std::vector<Int>{m} : std::vector<Int>{m, Int(-m)}) {
            const Int n = Int(1) + d * a3 * a3;
            std::vector<Int> small, large;
            for (Int a(1); a * a <= n; a = a + Int(1)) {
                if (n % a != Int(0)) continue;
                small.push_back(a);
                if (a * a != n) large.push_back(Int(n / a));
            }
            small.insert(small.end(), large.rbegin(), large.rend());
            for (const Int& a1 : small)
                if (!f(NSClass<Int>{a1, Int(n / a1), a3})) return;
        }
    }
}

template <exact_integer Int>
void require_matches(const SurfaceContext<Int>& ctx, const PPClass<Int>& p) {
    if (p.det() != ctx.d())
        throw precondition_error(error_kind::invalid_argument,
                                 "form has determinant " + to_decimal(p.det()) + ", expected d = " +
                                     to_decimal(ctx.d()));
}
}  // namespace detail

/// A principal polarization L (ample, L^2 = 2) whose form M_L reduces to p.
template <exact_integer Int>
NSClass<Int> realize_pp(const SurfaceContext<Int>& ctx, const PPClass<Int>& p, const Int& search_bound) {
    detail::require_matches(ctx, p);
    const QuadForm<Int> target = to_quad_form(p);
    std::optional<NSClass<Int>> found;
    detail::for_each_principal_class(ctx, search_bound, [&](const NSClass<Int>& l) {
        if (reduce_gl2(matrix_of(ctx, l)) != target) return true;
        found = l;
        return false;
    });
    if (!found)
        throw precondition_error(error_kind::not_found,
                                 "no principal polarization with |a3| <= " + to_decimal(search_bound));
    return *found;
}

/// Distinct reduced forms of M_L over the principal polarizations reached
/// with |a3| <= search_bound.
template <exact_integer Int>
std::vector<PPClass<Int>> enumerate_pp_classes(const SurfaceContext<Int>& ctx, const Int& search_bound) {
    std::set<QuadForm<Int>, bool (*)(const QuadForm<Int>&, const QuadForm<Int>&)> seen(
        [](const QuadForm<Int>& p, const QuadForm<Int>& q) {
            if (p.A != q.A) return p.A < q.A;
            if (p.B != q.B) return p.B < q.B;
            return p.C < q.C;
        });
    detail::for_each_principal_class(ctx, search_bound, [&](const NSClass<Int>& l) {
        seen.insert(reduce_gl2(matrix_of(ctx, l)));
        return true;
    });
    std::vector<PPClass<Int>> out;
    for (const auto& q : seen) out.push_back(pp_class_of_form(q));
    std::sort(out.begin(), out.end());
    return out;
}

/// Splits a reducible principal polarization as L = N_p + N_q with
/// N_p . N_q = 1. Every such N meets L once, so both curves come from the
/// coprime pairs v with R(v) <= d for the reduced form R of M_L.
template <exact_integer Int>
std::pair<CurveClass<Int>, CurveClass<Int>> decompose_reducible(const SurfaceContext<Int>& ctx,
                                                                const NSClass<Int>& l) {
    detail::require_ample(ctx, l);
    if (self_intersection(ctx, l) != Int(2))
        throw precondition_error(error_kind::invalid_argument, "L^2 must be 2");
    const Int& d = ctx.d();
    const auto [form, t] = reduce(matrix_of(ctx, l));
    if (form.B != Int(0))
        throw precondition_error(error_kind::irreducible_input,
                                 "principal polarization is irreducible");
    std::vector<CurveClass<Int>> ones;
    for (const auto& v : enumerate_coprime_below(form, d)) {
        Pair<Int> w = canonical(t(v));
        if (evaluate(form, v) == igcd(w.x, d)) ones.emplace_back(ctx, w.x, w.y);
    }
    std::sort(ones.begin(), ones.end(),
              [](const CurveClass<Int>& p, const CurveClass<Int>& q) { return p.pair() < q.pair(); });
    for (std::size_t i = 0; i < ones.size(); ++i)
        for (std::size_t j = i + 1; j < ones.size(); ++j)
            if (ones[i].ns_class() + ones[j].ns_class() == l &&
                intersect(ctx, ones[i].ns_class(), ones[j].ns_class()) == Int(1))
                return {ones[i], ones[j]};
    throw precondition_error(error_kind::not_found, "no splitting into elliptic curves found");
}

/// 4/3 for irreducible classes, 1 for reducible ones.
template <exact_integer Int>
Fraction<Int> seshadri_of_pp(const PPClass<Int>& p) {
    return classify(p) == pp_kind::irreducible ? Fraction<Int>(Int(4), Int(3)) : Fraction<Int>(Int(1));
}

}  // namespace isoprod
