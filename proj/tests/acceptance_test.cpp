// Acceptance suite: one test per criterion, plus a summary line for each.

#include "isoprod/acceptance.hpp"

#include <gtest/gtest.h>

#include <iostream>
#include <vector>

namespace {

using isoprod::acceptance::CriterionResult;

std::vector<CriterionResult>& results() {
    static std::vector<CriterionResult> r;
    return r;
}

void run(CriterionResult r) {
    std::cout << isoprod::acceptance::format_line(r) << std::endl;
    results().push_back(r);
    EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Acceptance, AC1_IntersectionMatrix) { run(isoprod::acceptance::intersection_matrix()); }
TEST(Acceptance, AC2_ReductionSuite) {
    auto r = isoprod::acceptance::reduction_suite();
    EXPECT_LT(r.seconds, 10.0);
    run(r);
}
TEST(Acceptance, AC3_EpsStarOracle) {
    auto r = isoprod::acceptance::eps_star_oracle();
    EXPECT_LT(r.seconds, 60.0);
    run(r);
}
TEST(Acceptance, AC4_IntegralityForSmallD) {
    auto r = isoprod::acceptance::integrality_small_d();
    EXPECT_LT(r.seconds, 120.0);
    run(r);
}
TEST(Acceptance, AC5_CounterexampleFamily) {
    auto r = isoprod::acceptance::counterexample_family();
    EXPECT_LT(r.seconds, 60.0);
    run(r);
}
TEST(Acceptance, AC6_KaniList) {
    auto r = isoprod::acceptance::kani_reproduction();
    EXPECT_LT(r.seconds, 30.0);
    run(r);
}
TEST(Acceptance, AC7_IdonealScan) {
    auto r = isoprod::acceptance::idoneal_scan();
    EXPECT_LT(r.seconds, 60.0);
    run(r);
}
TEST(Acceptance, AC8_PolarizationClassification) {
    auto r = isoprod::acceptance::polarization_classification();
    EXPECT_LT(r.seconds, 60.0);
    run(r);
}

}  // namespace

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    int rc = RUN_ALL_TESTS();
    std::cout << "\nAcceptance summary\n";
    for (const auto& r : results()) std::cout << "  " << isoprod::acceptance::format_line(r) << '\n';
    return rc;
}
