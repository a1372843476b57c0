#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "isobound/errors.hpp"
#include "isobound/geometry.hpp"
#include "oracles.hpp"

using namespace isobound;
using oracle::kPi;

namespace {

bool in(const Domain& d, std::vector<double> p) { return contains(d, p); }
bool in_open(const Domain& d, std::vector<double> p) { return contains_interior(d, p); }

}  // namespace

TEST(Contains, UnitDisk) {
  const auto disk = oracle::unit_disk();
  EXPECT_TRUE(in(disk, {0.0, 0.0}));
  EXPECT_TRUE(in(disk, {1.0, 0.0}));
  EXPECT_FALSE(in(disk, {1.0001, 0.0}));
  EXPECT_TRUE(in_open(disk, {0.0, 0.0}));
  EXPECT_FALSE(in_open(disk, {1.0, 0.0}));
  EXPECT_FALSE(in_open(disk, {0.0, -1.0}));
}

TEST(Contains, LPolygonRemovedQuadrant) {
  const auto l = oracle::l_polygon();
  EXPECT_FALSE(in(l, {1.5, 1.5}));
  EXPECT_TRUE(in(l, {0.5, 1.5}));
  EXPECT_TRUE(in(l, {1.5, 0.5}));
  EXPECT_TRUE(in(l, {1.0, 1.5}));
  EXPECT_FALSE(in_open(l, {1.0, 1.5}));
  EXPECT_FALSE(in_open(l, {1.0, 1.0}));
  EXPECT_TRUE(in_open(l, {0.5, 0.5}));
}

TEST(Contains, IntervalBoxEllipse) {
  const auto iv = oracle::unit_interval();
  EXPECT_TRUE(in(iv, {0.0}));
  EXPECT_FALSE(in_open(iv, {0.0}));
  EXPECT_TRUE(in_open(iv, {0.25}));
  EXPECT_FALSE(in(iv, {1.25}));

  const auto cube = oracle::unit_cube();
  EXPECT_TRUE(in_open(cube, {0.5, 0.5, 0.5}));
  EXPECT_TRUE(in(cube, {1.0, 0.5, 0.5}));
  EXPECT_FALSE(in_open(cube, {1.0, 0.5, 0.5}));

  const auto e = Domain::ellipse({2.0, 1.0});
  EXPECT_TRUE(in(e, {2.0, 0.0}));
  EXPECT_FALSE(in_open(e, {2.0, 0.0}));
  EXPECT_TRUE(in_open(e, {1.9, 0.0}));
  EXPECT_FALSE(in(e, {1.5, 0.9}));
}

TEST(Contains, RasterMask) {
  // Two cells side by side plus one on top of the left one.
  const auto m = oracle::raster_from_rows({"#.", "##"}, 1.0);
  EXPECT_TRUE(in_open(m, {0.5, 0.5}));
  EXPECT_TRUE(in_open(m, {1.0, 0.5}));   // shared face between two filled cells
  EXPECT_TRUE(in(m, {1.0, 1.0}));
  EXPECT_FALSE(in_open(m, {1.0, 1.0}));  // reentrant corner
  EXPECT_FALSE(in(m, {1.5, 1.5}));
  EXPECT_TRUE(in(m, {2.0, 0.5}));
  EXPECT_FALSE(in_open(m, {2.0, 0.5}));
}

TEST(Contains, DimensionMismatchThrows) {
  EXPECT_THROW(in(oracle::unit_disk(), {0.0}), InputError);
  EXPECT_THROW(in_open(oracle::unit_interval(), {0.0, 0.0}), InputError);
}

TEST(Metrics, UnitBall3) {
  const auto m = metrics(Domain::ball(3, 1.0));
  EXPECT_NEAR(m.volume.value, 4.0 * kPi / 3.0, 1e-14);
  EXPECT_DOUBLE_EQ(m.diameter.value, 2.0);
  EXPECT_FALSE(m.perimeter.has_value());
  EXPECT_EQ(m.volume.exactness, Exactness::closed_form);
}

TEST(Metrics, UnitSquare) {
  const auto m = metrics(oracle::unit_square());
  EXPECT_DOUBLE_EQ(m.area(), 1.0);
  EXPECT_NEAR(m.diameter.value, std::sqrt(2.0), 1e-15);
  ASSERT_TRUE(m.perimeter.has_value());
  EXPECT_DOUBLE_EQ(m.perimeter->value, 4.0);
  const double l = m.perimeter->value;
  EXPECT_GE(l * l, 4.0 * kPi * m.area());
  EXPECT_NEAR(*m.isoperimetric_deficit(), 16.0 - 4.0 * kPi, 1e-13);
}

TEST(Metrics, LPolygon) {
  const auto m = metrics(oracle::l_polygon());
  EXPECT_NEAR(m.area(), 3.0, 1e-14);
  EXPECT_NEAR(m.diameter.value, 2.0 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(m.perimeter->value, 8.0, 1e-14);
  EXPECT_TRUE(m.connected);
  EXPECT_EQ(m.simply_connected, true);
}

TEST(Metrics, DiskIsoperimetricEquality) {
  const auto m = metrics(oracle::unit_disk());
  EXPECT_NEAR(m.area(), kPi, 1e-14);
  EXPECT_NEAR(m.perimeter->value, 2.0 * kPi, 1e-13);
  EXPECT_NEAR(*m.isoperimetric_deficit(), 0.0, 1e-12);
}

TEST(Metrics, EllipsePerimeterMatchesQuadrature) {
  const double a = 2.0, b = 1.0;
  const auto m = metrics(Domain::ellipse({a, b}));
  const double reference = oracle::simpson(
      [&](double t) { return std::hypot(a * std::sin(t), b * std::cos(t)); }, 0.0, 2.0 * kPi);
  EXPECT_NEAR(m.perimeter->value, reference, 1e-10);
  EXPECT_NEAR(m.area(), kPi * a * b, 1e-13);
  EXPECT_DOUBLE_EQ(m.diameter.value, 2.0 * a);
}

TEST(Metrics, EllipsoidVolume) {
  const auto m = metrics(Domain::ellipse({1.0, 2.0, 3.0}));
  EXPECT_NEAR(m.volume.value, 4.0 * kPi / 3.0 * 6.0, 1e-12);
  EXPECT_DOUBLE_EQ(m.diameter.value, 6.0);
}

TEST(Metrics, RasterMaskCountsCellsAndFaces) {
  const auto m = metrics(oracle::raster_from_rows({"#.", "##"}, 0.5));
  EXPECT_EQ(m.volume.exactness, Exactness::estimated);
  EXPECT_NEAR(m.area(), 3 * 0.25, 1e-15);
  EXPECT_NEAR(m.perimeter->value, 8 * 0.5, 1e-15);
  EXPECT_NEAR(m.diameter.value, std::sqrt(2.0), 1e-15);
  EXPECT_GT(m.volume.error_bound, 0.0);
  EXPECT_TRUE(m.connected);
  EXPECT_EQ(m.simply_connected, true);
}

TEST(Metrics, RasterMaskWithHoleIsFlagged) {
  const auto m = metrics(oracle::raster_from_rows({"###", "#.#", "###"}, 1.0));
  EXPECT_TRUE(m.connected);
  EXPECT_EQ(m.simply_connected, false);
  EXPECT_NEAR(m.area(), 8.0, 1e-15);
  EXPECT_NEAR(m.perimeter->value, 16.0, 1e-15);
}

TEST(Metrics, DisconnectedRasterMask) {
  const auto m = metrics(oracle::raster_from_rows({"#.#"}, 1.0));
  EXPECT_FALSE(m.connected);
}

TEST(UnitBallVolume, LowDimensions) {
  EXPECT_DOUBLE_EQ(unit_ball_volume(1), 2.0);
  EXPECT_NEAR(unit_ball_volume(2), kPi, 1e-15);
  EXPECT_NEAR(unit_ball_volume(3), 4.0 * kPi / 3.0, 1e-15);
  for (int n = 1; n <= 8; ++n)
    EXPECT_NEAR(unit_ball_volume(n),
                std::pow(kPi, n / 2.0) / std::tgamma(n / 2.0 + 1.0), 1e-13)
        << "n=" << n;
  EXPECT_THROW(unit_ball_volume(0), InputError);
}

TEST(GammaHalfInteger, MatchesTgamma) {
  for (int k = 1; k <= 20; ++k)
    EXPECT_NEAR(gamma_half_integer(k / 2.0) / std::tgamma(k / 2.0), 1.0, 1e-14);
  EXPECT_THROW(gamma_half_integer(0.3), InputError);
  EXPECT_THROW(gamma_half_integer(0.0), InputError);
}

TEST(Domain, RejectsInvalidParameters) {
  EXPECT_THROW(Domain::interval(1.0, 1.0), InputError);
  EXPECT_THROW(Domain::ball(2, -1.0), InputError);
  EXPECT_THROW(Domain::ball(4, 1.0), InputError);
  EXPECT_THROW(Domain::ball(2, 1.0, {0.0}), InputError);
  EXPECT_THROW(Domain::box({0.0, 0.0}, {1.0, 0.0}), InputError);
  EXPECT_THROW(Domain::ellipse({1.0, 0.0}), InputError);
  // Clockwise, self-intersecting, too few vertices.
  EXPECT_THROW(Domain::polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Domain::polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), InputError);
  EXPECT_THROW(Domain::polygon({{0, 0}, {1, 0}}), InputError);
  RasterMaskShape empty;
  empty.shape = {2, 2};
  empty.cells.assign(4, 0);
  EXPECT_THROW(Domain::raster_mask(empty), InputError);
}

TEST(Domain, BoundingBoxes) {
  EXPECT_EQ(oracle::unit_disk().bounding_box().lower, (std::vector<double>{-1.0, -1.0}));
  EXPECT_EQ(oracle::l_polygon().bounding_box().upper, (std::vector<double>{2.0, 2.0}));
  const auto m = oracle::raster_from_rows({"...", ".#.", "..."}, 0.5);
  EXPECT_EQ(m.bounding_box().lower, (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(m.bounding_box().upper, (std::vector<double>{1.0, 1.0}));
}

TEST(Domain, KindNames) {
  EXPECT_EQ(parse_domain_kind("raster-mask"), DomainKind::raster_mask);
  EXPECT_EQ(to_string(DomainKind::polygon), "polygon");
  EXPECT_THROW(parse_domain_kind("torus"), InputError);
}
