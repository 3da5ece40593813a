#pragma once

/**
 * @file acceptance.hpp
 * @brief Desk-scale verification suites, shared by the acceptance test
 *        binary and `isoprod verify`.
 *
 * Each criterion is exact (no tolerances) and returns a pass flag plus a
 * one-line detail string. Random inputs come from fixed seeds.
 */

#include "isoprod/bqf.hpp"
#include "isoprod/curves.hpp"
#include "isoprod/integer.hpp"
#include "isoprod/polarizations.hpp"
#include "isoprod/seshadri.hpp"
#include "isoprod/surface.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace isoprod::acceptance {

using I64 = Checked64;

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// The 21 values of d without irreducible principal polarization below 2000.
inline const std::vector<long long> kKaniValues = {1,  2,  4,  6,   10,  12,  18,  22,  28,  30, 42,
                                                   58, 60, 70, 78, 102, 130, 190, 210, 330, 462};

namespace detail {

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline NSClass<I64> random_ample(const SurfaceContext<I64>& ctx, std::mt19937_64& rng, std::int64_t bound) {
    for (;;) {
        NSClass<I64> l{uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
        if (is_ample(ctx, l)) return l;
    }
}

inline UnimodularMap<I64> random_proper_unimodular(std::mt19937_64& rng, std::int64_t bound) {
    for (;;) {
        UnimodularMap<I64> u{uniform(rng, -bound, bound), uniform(rng, -bound, bound),
                             uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
        if (u.det() == I64(1)) return u;
    }
}

template <typename F>
CriterionResult timed(int id, std::string title, F&& body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace detail

/// Pairwise products of F1, F2, Delta equal (0 1 1; 1 0 d; 1 d 0).
inline CriterionResult intersection_matrix() {
    return detail::timed(1, "intersection matrix of (F1, F2, Delta)", [](CriterionResult& r) {
        bool ok = true;
        for (long long dv : {1, 2, 3, 5, 12}) {
            SurfaceContext<I64> ctx(dv);
            const std::vector<NSClass<I64>> basis = {fiber_f1<I64>(), fiber_f2<I64>(), delta_class(ctx)};
            const I64 d(dv);
            const I64 expected[3][3] = {{0, 1, 1}, {1, 0, d}, {1, d, 0}};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (intersect(ctx, basis[i], basis[j]) != expected[i][j]) ok = false;
        }
        r.passed = ok;
        r.detail = "d in {1,2,3,5,12}";
    });
}

/// Gauss reduction on 10,000 random positive definite forms.
inline CriterionResult reduction_suite() {
    return detail::timed(2, "reduction of random positive definite forms", [](CriterionResult& r) {
        std::mt19937_64 rng(20240101);
        const std::int64_t bound = 1'000'000;
        int failures = 0;
        const int count = 10'000;
        for (int n = 0; n < count; ++n) {
            QuadForm<I64> q;
            do {
                q = {detail::uniform(rng, 1, bound), detail::uniform(rng, -bound, bound),
                     detail::uniform(rng, 1, bound)};
            } while (!is_positive_definite(q));
            auto [red, t] = reduce(q);
            bool ok = is_reduced(red) && t.det() == I64(1);
            for (int k = 0; k < 20 && ok; ++k) {
                Pair<I64> p{detail::uniform(rng, -50, 50), detail::uniform(rng, -50, 50)};
                ok = evaluate(red, p) == evaluate(q, t(p));
            }
            for (int k = 0; k < 3 && ok; ++k) {
                auto u = detail::random_proper_unimodular(rng, 9);
                ok = reduce(pullback(red, u)).form == red;
            }
            ok = ok && I64(3) * red.A * red.A <= I64(4) * red.A * red.C - red.B * red.B;
            if (!ok) ++failures;
        }
        r.passed = failures == 0;
        r.detail = std::to_string(count) + " forms, " + std::to_string(failures) + " failures";
    });
}

/// eps_star against the box-scan oracle, 500 random ample classes per d.
inline CriterionResult eps_star_oracle() {
    return detail::timed(3, "eps* equals brute-force oracle", [](CriterionResult& r) {
        std::mt19937_64 rng(7);
        int mismatches = 0;
        for (long long dv = 1; dv <= 10; ++dv) {
            SurfaceContext<I64> ctx(dv);
            for (int n = 0; n < 500; ++n) {
                auto l = detail::random_ample(ctx, rng, 30);
                if (eps_star(ctx, l).value != eps_star_bruteforce(ctx, l)) ++mismatches;
            }
        }
        r.passed = mismatches == 0;
        r.detail = "5000 classes, " + std::to_string(mismatches) + " mismatches";
    });
}

/// For d in {1, 2} every ample class with |coefficients| <= 40 has a weakly
/// submaximal elliptic curve.
inline CriterionResult integrality_small_d() {
    return detail::timed(4, "d in {1,2}: weakly submaximal curve for every ample class", [](CriterionResult& r) {
        std::ostringstream out;
        bool ok = true;
        for (long long dv : {1, 2}) {
            SurfaceContext<I64> ctx(dv);
            auto s = survey(ctx, I64(40));
            ok = ok && s.without_submaximal == 0 && s.ample_classes > 0;
            out << "d=" << dv << ": " << s.ample_classes << " ample, " << s.without_submaximal
                << " without; ";
        }
        r.passed = ok;
        r.detail = out.str();
    });
}

/// The counterexample family for 3 <= d <= 200.
inline CriterionResult counterexample_family() {
    return detail::timed(5, "d >= 3: bundle without weakly submaximal curve, non-square L^2", [](CriterionResult& r) {
        int failures = 0;
        for (long long dv = 3; dv <= 200; ++dv) {
            SurfaceContext<I64> ctx(dv);
            auto l = counterexample_bundle(ctx);
            I64 d(dv);
            I64 sq = self_intersection(ctx, l);
            I64 e = eps_star(ctx, l).value;
            bool ok = is_ample(ctx, l) && e * e > sq && sq == I64(16) * d * d - I64(2) * d &&
                      !is_perfect_square(sq) && verify_no_submaximal_form(d);
            if (!ok) ++failures;
        }
        auto cert = no_submaximal_certificate(I64(3));
        const std::vector<Pair<I64>> z3 = {{0, 1}, {1, -1}};
        bool z3_ok = cert.exceptional == z3;
        r.passed = failures == 0 && z3_ok;
        r.detail = "198 values of d, " + std::to_string(failures) + " failures; Z_3 " +
                   (z3_ok ? "= {(0,1),(1,-1)}" : "mismatch");
    });
}

/// Two independent routes to the set of d without irreducible principal
/// polarizations, against the known list.
inline CriterionResult kani_reproduction() {
    return detail::timed(6, "Kani list for d <= 2000", [](CriterionResult& r) {
        std::vector<long long> by_predicate, by_forms;
        for (long long dv = 1; dv <= 2000; ++dv) {
            if (kani_predicate(I64(dv))) by_predicate.push_back(dv);
            if (!exists_irreducible(I64(dv))) by_forms.push_back(dv);
        }
        r.passed = by_predicate == kKaniValues && by_forms == kKaniValues;
        r.detail = std::to_string(by_predicate.size()) + " by idoneal criterion, " +
                   std::to_string(by_forms.size()) + " by form enumeration";
    });
}

/// Idoneal numbers up to 50,000.
inline CriterionResult idoneal_scan() {
    return detail::timed(7, "idoneal numbers up to 50000", [](CriterionResult& r) {
        auto all = idoneal_numbers(I64(50'000));
        auto upto = std::count_if(all.begin(), all.end(), [](I64 n) { return n <= I64(1848); });
        bool ok = upto == 65 && !all.empty() && all.back() == I64(1848);
        r.passed = ok;
        r.detail = std::to_string(all.size()) + " found, largest " +
                   (all.empty() ? std::string("-") : to_decimal(all.back()));
    });
}

/// Principal polarization classification and the bijection for d <= 50.
inline CriterionResult polarization_classification() {
    return detail::timed(8, "principal polarization classification", [](CriterionResult& r) {
        std::ostringstream out;
        bool ok = true;
        using PP = PPClass<I64>;
        auto f1 = enumerate_pp_forms(I64(1));
        ok = ok && f1 == std::vector<PP>{PP(1, 0, 1)} && classify(f1[0]) == pp_kind::reducible &&
             seshadri_of_pp(f1[0]) == Fraction<I64>(1);
        auto f2 = enumerate_pp_forms(I64(2));
        ok = ok && f2 == std::vector<PP>{PP(1, 0, 2)} && classify(f2[0]) == pp_kind::reducible;
        auto f3 = enumerate_pp_forms(I64(3));
        ok = ok && f3 == std::vector<PP>{PP(1, 0, 3), PP(2, 1, 2)} &&
             classify(f3[1]) == pp_kind::irreducible && seshadri_of_pp(f3[1]) == Fraction<I64>(4, 3);

        int bijection_failures = 0, decomposition_failures = 0, max_bound = 0;
        for (long long dv = 1; dv <= 50; ++dv) {
            SurfaceContext<I64> ctx(dv);
            auto forms = enumerate_pp_forms(I64(dv));
            // escalate the search until both sides agree
            std::vector<PP> found;
            int bound = 4;
            for (; bound <= 4096; bound *= 2) {
                found = enumerate_pp_classes(ctx, I64(bound));
                if (found == forms) break;
            }
            if (found != forms) {
                ++bijection_failures;
                continue;
            }
            max_bound = std::max(max_bound, bound);
            for (const auto& p : forms) {
                if (classify(p) != pp_kind::reducible) continue;
                auto l = realize_pp(ctx, p, I64(bound));
                auto [e1, e2] = decompose_reducible(ctx, l);
                bool good = e1.ns_class() + e2.ns_class() == l &&
                            intersect(ctx, e1.ns_class(), e2.ns_class()) == I64(1) &&
                            self_intersection(ctx, e1.ns_class()) == I64(0) &&
                            self_intersection(ctx, e2.ns_class()) == I64(0);
                if (!good) ++decomposition_failures;
            }
        }
        ok = ok && bijection_failures == 0 && decomposition_failures == 0;
        out << "d<=50: " << bijection_failures << " bijection failures, " << decomposition_failures
            << " decomposition failures, max search bound " << max_bound;
        r.passed = ok;
        r.detail = out.str();
    });
}

inline std::vector<std::function<CriterionResult()>> all_criteria() {
    return {intersection_matrix, reduction_suite,    eps_star_oracle,   integrality_small_d,
            counterexample_family, kani_reproduction, idoneal_scan, polarization_classification};
}

inline std::string format_line(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << "  AC" << r.id << "  " << r.title << "  [" << r.detail << "]  ("
        << static_cast<long long>(r.seconds * 1000) << " ms)";
    return out.str();
}

}  // namespace isoprod::acceptance
