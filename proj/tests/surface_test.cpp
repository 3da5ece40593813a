#include "isoprod/surface.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace isoprod {
namespace {

template <typename Int>
class SurfaceTyped : public ::testing::Test {};
using IntTypes = ::testing::Types<Checked64, BigInt>;
TYPED_TEST_SUITE(SurfaceTyped, IntTypes);

template <typename Int>
NSClass<Int> ns(long long a1, long long a2, long long a3) {
    return {Int(a1), Int(a2), Int(a3)};
}

// Gram matrix of (F1, F2, nabla), written out by hand.
long long gram_pairing(long long d, const NSClass<Checked64>& l, const NSClass<Checked64>& m) {
    const long long g[3][3] = {{0, 1, 0}, {1, 0, 0}, {0, 0, -2 * d}};
    const long long x[3] = {l.a1.value(), l.a2.value(), l.a3.value()};
    const long long y[3] = {m.a1.value(), m.a2.value(), m.a3.value()};
    long long s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += x[i] * g[i][j] * y[j];
    return s;
}

TEST(SurfaceContext, RejectsNonPositiveDegree) {
    EXPECT_THROW(SurfaceContext<Checked64>(Checked64(0)), precondition_error);
    EXPECT_THROW(SurfaceContext<BigInt>(BigInt(-3)), precondition_error);
}

TYPED_TEST(SurfaceTyped, IntersectExamples) {
    using Int = TypeParam;
    SurfaceContext<Int> c3(Int(3));
    EXPECT_EQ(intersect(c3, fiber_f1<Int>(), fiber_f2<Int>()), Int(1));
    EXPECT_EQ(intersect(c3, ns<Int>(0, 0, 1), ns<Int>(0, 0, 1)), Int(-6));
    EXPECT_EQ(self_intersection(c3, ns<Int>(12, 26, -9)), Int(138));
    SurfaceContext<Int> c2(Int(2));
    EXPECT_EQ(self_intersection(c2, delta_class(c2)), Int(0));
}

TYPED_TEST(SurfaceTyped, DeltaBasisIntersectionMatrix) {
    using Int = TypeParam;
    for (long long dv : {1, 2, 3, 7, 40}) {
        SurfaceContext<Int> ctx{Int(dv)};
        const std::vector<NSClass<Int>> basis = {fiber_f1<Int>(), fiber_f2<Int>(), delta_class(ctx)};
        const long long expected[3][3] = {{0, 1, 1}, {1, 0, dv}, {1, dv, 0}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) EXPECT_EQ(intersect(ctx, basis[i], basis[j]), Int(expected[i][j]));
    }
}

TEST(Surface, PairingMatchesGramMatrix) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> c(-50, 50), dd(1, 30);
    for (int n = 0; n < 2000; ++n) {
        long long d = dd(rng);
        SurfaceContext<Checked64> ctx{Checked64(d)};
        NSClass<Checked64> l{c(rng), c(rng), c(rng)}, m{c(rng), c(rng), c(rng)};
        ASSERT_EQ(intersect(ctx, l, m).value(), gram_pairing(d, l, m));
        ASSERT_EQ(intersect(ctx, l, m), intersect(ctx, m, l));
    }
}

TYPED_TEST(SurfaceTyped, DeltaBasisConversion) {
    using Int = TypeParam;
    SurfaceContext<Int> ctx{Int(3)};
    EXPECT_EQ(from_delta_basis(ctx, Int(1), Int(1), Int(1)), ns<Int>(4, 2, 1));
    EXPECT_EQ(from_delta_basis(ctx, Int(0), Int(0), Int(1)), delta_class(ctx));
    auto c = to_delta_basis(ctx, ns<Int>(12, 26, -9));
    EXPECT_EQ(from_delta_basis(ctx, c), ns<Int>(12, 26, -9));
}

TEST(Surface, DeltaBasisRoundTrip) {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long long> c(-1000, 1000), dd(1, 500);
    for (int n = 0; n < 2000; ++n) {
        SurfaceContext<Checked64> ctx{Checked64(dd(rng))};
        NSClass<Checked64> l{c(rng), c(rng), c(rng)};
        ASSERT_EQ(from_delta_basis(ctx, to_delta_basis(ctx, l)), l);
    }
}

TYPED_TEST(SurfaceTyped, DeltaHat) {
    using Int = TypeParam;
    SurfaceContext<Int> c1{Int(1)};
    EXPECT_EQ(delta_hat_class(c1), delta_class(c1));
    for (long long dv : {2, 3, 11}) {
        SurfaceContext<Int> ctx{Int(dv)};
        auto h = delta_hat_class(ctx);
        EXPECT_NE(h, delta_class(ctx));
        EXPECT_EQ(self_intersection(ctx, h), Int(0));
        EXPECT_EQ(intersect(ctx, h, fiber_f1<Int>()), Int(dv));
        EXPECT_EQ(intersect(ctx, h, fiber_f2<Int>()), Int(1));
        // F2 + Delta^ = (1 - d) F1 + d F2 + Delta
        EXPECT_EQ(fiber_f2<Int>() + h,
                  Int(1 - dv) * fiber_f1<Int>() + Int(dv) * fiber_f2<Int>() + delta_class(ctx));
    }
}

TYPED_TEST(SurfaceTyped, AmplenessExamples) {
    using Int = TypeParam;
    SurfaceContext<Int> ctx{Int(3)};
    EXPECT_TRUE(is_ample(ctx, ns<Int>(12, 26, -9)));
    EXPECT_TRUE(is_ample(ctx, ns<Int>(1, 1, 0)));
    EXPECT_FALSE(is_ample(ctx, fiber_f1<Int>()));
    EXPECT_FALSE(is_ample(ctx, ns<Int>(-1, -1, 0)));
    EXPECT_EQ(ampleness_check(ctx, ns<Int>(0, 5, 0)), ample_failure::a1_not_positive);
    EXPECT_EQ(ampleness_check(ctx, ns<Int>(3, 3, 2)), ample_failure::half_square_not_positive);
    EXPECT_EQ(ampleness_check(ctx, ns<Int>(3, 5, 2)), ample_failure::none);
}

// Independent criterion: L^2 > 0 and L.H > 0 for the ample class H = F1 + F2.
TEST(Surface, AmplenessMatchesSquareAndDegreeCriterion) {
    for (long long d : {1, 2, 3, 6}) {
        SurfaceContext<Checked64> ctx{Checked64(d)};
        const NSClass<Checked64> h{1, 1, 0};
        for (long long a1 = -12; a1 <= 12; ++a1)
            for (long long a2 = -12; a2 <= 12; ++a2)
                for (long long a3 = -12; a3 <= 12; ++a3) {
                    NSClass<Checked64> l{a1, a2, a3};
                    bool expected = self_intersection(ctx, l) > Checked64(0) && intersect(ctx, l, h) > Checked64(0);
                    ASSERT_EQ(is_ample(ctx, l), expected) << l;
                }
    }
}

TYPED_TEST(SurfaceTyped, MatrixOfExamples) {
    using Int = TypeParam;
    SurfaceContext<Int> c3{Int(3)};
    auto q = matrix_of(c3, ns<Int>(12, 26, -9));
    EXPECT_EQ(q, (QuadForm<Int>{Int(12), Int(54), Int(78)}));
    EXPECT_EQ(q.A * q.C - (q.B / Int(2)) * (q.B / Int(2)), Int(207));
    SurfaceContext<Int> c1{Int(1)};
    EXPECT_EQ(matrix_of(c1, ns<Int>(1, 1, 0)), (QuadForm<Int>{Int(1), Int(0), Int(1)}));
}

TEST(Surface, MatrixOfDeterminantAndDefiniteness) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long long> c(-60, 60), dd(1, 40);
    for (int n = 0; n < 5000; ++n) {
        long long d = dd(rng);
        SurfaceContext<Checked64> ctx{Checked64(d)};
        NSClass<Checked64> l{c(rng), c(rng), c(rng)};
        auto q = matrix_of(ctx, l);
        ASSERT_EQ(-discriminant(q), Checked64(2 * d) * self_intersection(ctx, l));
        ASSERT_EQ(is_ample(ctx, l), is_positive_definite(q)) << l;
        ASSERT_EQ(class_of_matrix(ctx, q), l);
    }
}

TYPED_TEST(SurfaceTyped, ClassOfMatrixExamples) {
    using Int = TypeParam;
    SurfaceContext<Int> c2{Int(2)};
    EXPECT_EQ(class_of_matrix(c2, QuadForm<Int>{Int(4), Int(-4), Int(2)}), ns<Int>(4, 1, 1));
    EXPECT_THROW(class_of_matrix(c2, QuadForm<Int>{Int(1), Int(1), Int(1)}), precondition_error);
    EXPECT_THROW(class_of_matrix(c2, QuadForm<Int>{Int(1), Int(2), Int(2)}), precondition_error);
    EXPECT_THROW(class_of_matrix(c2, QuadForm<Int>{Int(1), Int(4), Int(3)}), precondition_error);
    try {
        class_of_matrix(c2, QuadForm<Int>{Int(1), Int(1), Int(1)});
    } catch (const precondition_error& e) {
        EXPECT_EQ(e.kind(), error_kind::divisibility_violation);
    }
}

TYPED_TEST(SurfaceTyped, EpsPositiveConeExamples) {
    using Int = TypeParam;
    SurfaceContext<Int> c3{Int(3)};
    EXPECT_EQ(eps_positive_cone(c3, Int(1), Int(1), Int(1)), Int(2));
    SurfaceContext<Int> c1{Int(1)};
    EXPECT_EQ(eps_positive_cone(c1, Int(1), Int(1), Int(0)), Int(1));
    EXPECT_EQ(eps_positive_cone(c1, Int(5), Int(2), Int(3)), Int(5));
    EXPECT_THROW(eps_positive_cone(c3, Int(-1), Int(2), Int(2)), precondition_error);
    EXPECT_THROW(eps_positive_cone(c3, Int(1), Int(0), Int(0)), precondition_error);
}

TEST(Surface, EpsPositiveConeIsMinimumOverBasisCurves) {
    for (long long d = 1; d <= 6; ++d) {
        SurfaceContext<Checked64> ctx{Checked64(d)};
        const std::vector<NSClass<Checked64>> curves = {fiber_f1<Checked64>(), fiber_f2<Checked64>(),
                                                        delta_class(ctx)};
        for (long long c1 = 0; c1 <= 8; ++c1)
            for (long long c2 = 0; c2 <= 8; ++c2)
                for (long long c3 = 0; c3 <= 8; ++c3) {
                    auto l = from_delta_basis(ctx, Checked64(c1), Checked64(c2), Checked64(c3));
                    if (!is_ample(ctx, l)) continue;
                    Checked64 m = intersect(ctx, l, curves[0]);
                    for (const auto& e : curves) m = std::min(m, intersect(ctx, l, e));
                    ASSERT_EQ(eps_positive_cone(ctx, Checked64(c1), Checked64(c2), Checked64(c3)), m);
                }
    }
}

TEST(Surface, PositiveConeClassesAreAmpleWhenAllCoefficientsPositive) {
    for (long long d = 1; d <= 10; ++d) {
        SurfaceContext<Checked64> ctx{Checked64(d)};
        for (long long c1 = 1; c1 <= 6; ++c1)
            for (long long c2 = 1; c2 <= 6; ++c2)
                for (long long c3 = 1; c3 <= 6; ++c3)
                    ASSERT_TRUE(is_ample(ctx, from_delta_basis(ctx, Checked64(c1), Checked64(c2), Checked64(c3))));
    }
}

}  // namespace
}  // namespace isoprod
