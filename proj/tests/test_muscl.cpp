#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "sodflux/muscl.hpp"
#include "test_support.hpp"

namespace sodflux {
namespace {

TEST(Muscl, GradientRatiosExample)
{
  const GradientRatios r = gradient_ratios({0.0, 1.0, 0.5, 2.0});
  EXPECT_DOUBLE_EQ(r.r_left, -0.5);
  EXPECT_DOUBLE_EQ(r.r_right, -1.0 / 3.0);
}

TEST(Muscl, FlatNeighbourGivesZeroRatio)
{
  const GradientRatios r = gradient_ratios({1.0, 1.0, 2.0, 2.0});
  EXPECT_EQ(r.r_left, 0.0);
  EXPECT_EQ(r.r_right, 0.0);
}

TEST(Muscl, FacePairExampleFallsBackToFirstOrder)
{
  const FacePair f = muscl_face_pair({0.0, 1.0, 0.5, 2.0});
  EXPECT_DOUBLE_EQ(f.left, 1.0);
  EXPECT_DOUBLE_EQ(f.right, 0.5);
}

TEST(Muscl, VanLeerLimiterIdentities)
{
  EXPECT_DOUBLE_EQ(van_leer_limiter(1.0), 1.0);
  EXPECT_DOUBLE_EQ(van_leer_limiter(0.0), 0.0);
  testing::StateGenerator gen(31);
  for (int i = 0; i < 1000; ++i) {
    const double r = gen.uniform(1e-3, 1e3);
    EXPECT_EQ(van_leer_limiter(-r), 0.0);
    EXPECT_NEAR(van_leer_limiter(r) / r, van_leer_limiter(1.0 / r), 1e-14);
    EXPECT_GE(van_leer_limiter(r), 0.0);
    EXPECT_LT(van_leer_limiter(r), 2.0);
    EXPECT_LE(van_leer_limiter(r), 2.0 * r + 1e-15);
  }
}

TEST(Muscl, ZeroLimiterCopiesNearestCell)
{
  const auto zero = [](double) { return 0.0; };
  const FacePair f = muscl_face_pair({3.0, 1.0, 7.0, -2.0}, zero);
  EXPECT_EQ(f.left, 1.0);
  EXPECT_EQ(f.right, 7.0);
}

TEST(Muscl, UnitLimiterIsLinearExtrapolation)
{
  const auto one = [](double) { return 1.0; };
  const FacePair f = muscl_face_pair({1.0, 2.0, 4.0, 5.0}, one);
  EXPECT_DOUBLE_EQ(f.left, 2.5);
  EXPECT_DOUBLE_EQ(f.right, 3.5);
}

TEST(Muscl, LinearDataIsReconstructedExactly)
{
  // Equal slopes give r = 1 and phi = 1, so both face values hit the midpoint.
  const FacePair f = muscl_face_pair({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(f.left, 2.5);
  EXPECT_DOUBLE_EQ(f.right, 2.5);
}

TEST(Muscl, FaceValuesStayWithinNeighbours)
{
  testing::StateGenerator gen(32);
  for (int i = 0; i < 2000; ++i) {
    const Stencil4 s{gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1)};
    const FacePair f = muscl_face_pair(s);
    const double lo_l = std::min(s.v_mm, s.v_m);
    const double hi_l = std::max(s.v_mm, s.v_m);
    const double lo_c = std::min(s.v_m, s.v_p);
    const double hi_c = std::max(s.v_m, s.v_p);
    // Left value lies between the cell value and the face neighbour.
    EXPECT_GE(f.left, std::min(lo_c, lo_l) - 1e-14);
    EXPECT_LE(f.left, std::max(hi_c, hi_l) + 1e-14);
    EXPECT_GE(f.left, lo_c - 1e-14);
    EXPECT_LE(f.left, hi_c + 1e-14);
    EXPECT_GE(f.right, lo_c - 1e-14);
    EXPECT_LE(f.right, hi_c + 1e-14);
  }
}

TEST(Muscl, MonotoneFieldGivesMonotoneFaces)
{
  std::vector<PrimitiveState> cells;
  for (int i = 0; i < 40; ++i) {
    const double x = i / 39.0;
    cells.push_back({1.0 + x * x, 0.1 * x, 2.0 - std::sqrt(x)});
  }
  const std::vector<FaceStates> faces = reconstruct_faces(std::span<const PrimitiveState>(cells));
  ASSERT_EQ(faces.size(), 41u);
  // Inside each cell the reconstruction follows the trend of the data.
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const double rho_lo = faces[i].right.rho;
    const double rho_hi = faces[i + 1].left.rho;
    EXPECT_LE(rho_lo, cells[i].rho + 1e-14);
    EXPECT_GE(rho_hi, cells[i].rho - 1e-14);
    EXPECT_GE(faces[i].right.p, cells[i].p - 1e-14);
    EXPECT_LE(faces[i + 1].left.p, cells[i].p + 1e-14);
  }
  for (std::size_t f = 1; f + 1 < faces.size(); ++f) {
    EXPECT_GE(faces[f].left.rho, cells[f - 1].rho - 1e-14);
    EXPECT_LE(faces[f].right.rho, cells[f].rho + 1e-14);
  }
}

TEST(Muscl, UniformFieldReconstructsExactly)
{
  const std::vector<PrimitiveState> cells(8, PrimitiveState{0.5, -0.2, 3.0});
  for (const FaceStates& f : reconstruct_faces(std::span<const PrimitiveState>(cells))) {
    EXPECT_EQ(f.left, cells[0]);
    EXPECT_EQ(f.right, cells[0]);
  }
}

TEST(Muscl, SodJumpFaces)
{
  std::vector<PrimitiveState> cells(10, PrimitiveState{1.0, 0.0, 1.0});
  std::fill(cells.begin() + 5, cells.end(), PrimitiveState{0.125, 0.0, 0.1});
  const auto faces = reconstruct_faces(std::span<const PrimitiveState>(cells));
  ASSERT_EQ(faces.size(), 11u);
  // Every ratio is zero or undefined at a single jump: first order everywhere.
  EXPECT_EQ(faces[5].left, cells[4]);
  EXPECT_EQ(faces[5].right, cells[5]);
  EXPECT_EQ(faces[0].left, cells[0]);
  EXPECT_EQ(faces[10].right, cells[9]);
}

TEST(Muscl, BoundaryFacesSeeZeroGradientGhosts)
{
  std::vector<PrimitiveState> cells;
  for (int i = 0; i < 6; ++i) {
    cells.push_back({1.0 + i, 0.0, 1.0 + i});
  }
  const auto faces = reconstruct_faces(std::span<const PrimitiveState>(cells));
  EXPECT_EQ(faces.front().left, cells.front());
  EXPECT_EQ(faces.front().right.rho, 1.0);
  EXPECT_EQ(faces.back().right, cells.back());
  EXPECT_EQ(faces.back().left.rho, 6.0);
  // Interior faces of a linear ramp sit at the midpoint.
  EXPECT_DOUBLE_EQ(faces[3].left.rho, 3.5);
  EXPECT_DOUBLE_EQ(faces[3].right.rho, 3.5);
}

TEST(Muscl, EmptyFieldRejected)
{
  const std::vector<PrimitiveState> none;
  EXPECT_THROW(reconstruct_faces(std::span<const PrimitiveState>(none)), InvalidConfig);
}

} // namespace
} // namespace sodflux
