#include "isoprod/curves.hpp"

#include <gtest/gtest.h>

#include <random>

namespace isoprod {
namespace {

template <typename Int>
class CurvesTyped : public ::testing::Test {};
using IntTypes = ::testing::Types<Checked64, BigInt>;
TYPED_TEST_SUITE(CurvesTyped, IntTypes);

using I = Checked64;

TYPED_TEST(CurvesTyped, SigmaDegreeExamples) {
    using Int = TypeParam;
    SurfaceContext<Int> c6{Int(6)};
    EXPECT_EQ(sigma_degree(c6, Int(0), Int(1)), Int(6));
    EXPECT_EQ(sigma_degree(c6, Int(2), Int(1)), Int(2));
    EXPECT_EQ(sigma_degree(c6, Int(1), Int(0)), Int(1));
    EXPECT_EQ(sigma_degree(c6, Int(3), Int(-1)), Int(3));
    EXPECT_THROW(sigma_degree(c6, Int(0), Int(0)), precondition_error);
}

TYPED_TEST(CurvesTyped, CurveClassExamples) {
    using Int = TypeParam;
    SurfaceContext<Int> c3{Int(3)};
    EXPECT_EQ(curve_class(c3, Int(1), Int(0)), fiber_f2<Int>());
    EXPECT_EQ(curve_class(c3, Int(0), Int(1)), fiber_f1<Int>());
    EXPECT_EQ(curve_class(c3, Int(1), Int(1)), delta_class(c3));
    EXPECT_EQ(curve_class(c3, Int(3), Int(-1)), (NSClass<Int>{Int(1), Int(3), Int(-1)}));
}

TYPED_TEST(CurvesTyped, CurveClassObject) {
    using Int = TypeParam;
    SurfaceContext<Int> c4{Int(4)};
    CurveClass<Int> n(c4, Int(-4), Int(-2));
    EXPECT_EQ(n.a(), Int(2));
    EXPECT_EQ(n.b(), Int(1));
    EXPECT_EQ(n.deg_sigma(), Int(2));
    EXPECT_EQ(n.ns_class(), curve_class(c4, Int(2), Int(1)));
    EXPECT_EQ(n, (CurveClass<Int>(c4, Int(2), Int(1))));
    EXPECT_THROW((CurveClass<Int>(c4, Int(0), Int(0))), precondition_error);
}

TYPED_TEST(CurvesTyped, IntersectBundleExamples) {
    using Int = TypeParam;
    SurfaceContext<Int> c2{Int(2)};
    NSClass<Int> l{Int(2), Int(3), Int(1)};
    EXPECT_EQ(intersect_bundle(c2, l, Int(1), Int(1)), Int(4));
    EXPECT_EQ(intersect_bundle(c2, l, Int(1), Int(0)), Int(2));
    EXPECT_EQ(intersect_bundle(c2, l, Pair<Int>{Int(0), Int(1)}), Int(3));
    EXPECT_THROW(intersect_bundle(c2, l, Int(0), Int(0)), precondition_error);
    EXPECT_THROW(intersect_bundle(c2, l, Int(2), Int(2)), precondition_error);
    try {
        intersect_bundle(c2, l, Int(2), Int(4));
    } catch (const precondition_error& e) {
        EXPECT_EQ(e.kind(), error_kind::non_coprime);
    }
}

TEST(Curves, ClassesAreEllipticAndPrimitive) {
    for (long long d = 1; d <= 30; ++d) {
        SurfaceContext<I> ctx{I(d)};
        for (long long a = -15; a <= 15; ++a)
            for (long long b = -15; b <= 15; ++b) {
                if (a == 0 && b == 0) continue;
                auto n = curve_class(ctx, I(a), I(b));
                ASSERT_EQ(self_intersection(ctx, n), I(0)) << d << ' ' << a << ' ' << b;
                ASSERT_EQ(igcd(n.a1, n.a2, n.a3), I(1));
                ASSERT_EQ(curve_class(ctx, I(-a), I(-b)), n);
            }
    }
}

TEST(Curves, IntersectBundleAgreesWithPairing) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long long> c(-40, 40), ab(-25, 25), dd(1, 30);
    int checked = 0;
    while (checked < 5000) {
        SurfaceContext<I> ctx{I(dd(rng))};
        NSClass<I> l{c(rng), c(rng), c(rng)};
        Pair<I> p{ab(rng), ab(rng)};
        if (!is_coprime(p)) continue;
        ++checked;
        ASSERT_EQ(intersect_bundle(ctx, l, p), intersect(ctx, l, curve_class(ctx, p.x, p.y)));
    }
}

TEST(Curves, EllipticCurvesMeetNonNegatively) {
    for (long long d = 1; d <= 12; ++d) {
        SurfaceContext<I> ctx{I(d)};
        for (long long a = -8; a <= 8; ++a)
            for (long long b = -8; b <= 8; ++b)
                for (long long x = -8; x <= 8; ++x)
                    for (long long y = -8; y <= 8; ++y) {
                        if ((a == 0 && b == 0) || (x == 0 && y == 0)) continue;
                        auto n = curve_class(ctx, I(a), I(b));
                        auto m = curve_class(ctx, I(x), I(y));
                        ASSERT_GE(intersect(ctx, n, m), I(0));
                    }
    }
}

TEST(Curves, AmpleClassesMeetEveryCurvePositively) {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long long> c(-30, 30), ab(-20, 20), dd(1, 20);
    int checked = 0;
    while (checked < 5000) {
        SurfaceContext<I> ctx{I(dd(rng))};
        NSClass<I> l{c(rng), c(rng), c(rng)};
        Pair<I> p{ab(rng), ab(rng)};
        if (!is_ample(ctx, l) || !is_coprime(p)) continue;
        ++checked;
        ASSERT_GT(intersect_bundle(ctx, l, p), I(0)) << l << ' ' << p;
    }
}

}  // namespace
}  // namespace isoprod
