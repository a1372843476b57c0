#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "isobound/discretize.hpp"
#include "isobound/errors.hpp"
#include "oracles.hpp"

using namespace isobound;

TEST(BuildGrid, IntervalQuarterSpacing) {
  const Grid g = build_grid(oracle::unit_interval(), 0.25);
  ASSERT_EQ(g.point_count(), 3u);
  EXPECT_DOUBLE_EQ(g.coordinates(0)[0], 0.25);
  EXPECT_DOUBLE_EQ(g.coordinates(1)[0], 0.5);
  EXPECT_DOUBLE_EQ(g.coordinates(2)[0], 0.75);
  EXPECT_DOUBLE_EQ(g.cell_volume(), 0.25);
  EXPECT_EQ(g.lattice_size(), 5u);
}

TEST(BuildGrid, UnitSquareThirdSpacing) {
  const Grid g = build_grid(oracle::unit_square(), 1.0 / 3.0);
  EXPECT_EQ(g.point_count(), 4u);
}

// Brute-force enumeration of the lattice anchored at the lower bounding-box
// corner, keeping points strictly inside x^2 + y^2 < 1.
TEST(BuildGrid, UnitDiskMatchesEnumeration) {
  for (double h : {0.5, 0.25, 0.2, 0.125}) {
    std::size_t expected = 0;
    const int m = static_cast<int>(std::floor(2.0 / h + 1e-9));
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) {
        const double x = -1.0 + i * h, y = -1.0 + j * h;
        if (x * x + y * y < 1.0 - 1e-12) ++expected;
      }
    EXPECT_EQ(build_grid(oracle::unit_disk(), h).point_count(), expected) << "h=" << h;
  }
  // Center plus eight neighbours; the four axis points on the circle are omitted.
  EXPECT_EQ(build_grid(oracle::unit_disk(), 0.5).point_count(), 9u);
}

TEST(BuildGrid, PointsAreInteriorAndIndexed) {
  const Grid g = build_grid(oracle::l_polygon(), 0.25);
  for (std::size_t i = 0; i < g.point_count(); ++i) {
    const auto x = g.coordinates(i);
    EXPECT_TRUE(contains_interior(oracle::l_polygon(), std::vector<double>{x[0], x[1]}));
    EXPECT_EQ(g.index_of(g.lattice_index(i)), i);
  }
  // 7x7 open-square lattice minus the 4x4 block on or inside the removed quadrant.
  EXPECT_EQ(g.point_count(), 49u - 16u);
}

TEST(BuildGrid, RejectsBadSpacing) {
  EXPECT_THROW(build_grid(oracle::unit_square(), 0.0), InputError);
  EXPECT_THROW(build_grid(oracle::unit_square(), -0.1), InputError);
  EXPECT_THROW(build_grid(oracle::unit_square(), 0.6), InputError);
  EXPECT_THROW(build_grid(oracle::unit_cube(), 1.0 / 64, 1000), InputError);
}

TEST(Assemble, IntervalTridiagonal) {
  const auto a = assemble(build_grid(oracle::unit_interval(), 0.25));
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(a.entry(i, i), 32.0);
  EXPECT_DOUBLE_EQ(a.entry(0, 1), -16.0);
  EXPECT_DOUBLE_EQ(a.entry(1, 2), -16.0);
  EXPECT_DOUBLE_EQ(a.entry(0, 2), 0.0);
}

TEST(Assemble, SinglePointTwoDimensions) {
  // Only (0.9, 0.9) lies strictly inside the triangle.
  const double h = 0.9;
  const auto a = assemble(build_grid(Domain::polygon({{0, 0}, {2, 0}, {0, 2}}), h));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_DOUBLE_EQ(a.entry(0, 0), 4.0 / (h * h));
  EXPECT_EQ(a.off_diagonal_count(), 0u);
}

TEST(Assemble, UnitSquareThirdSpacing) {
  const auto a = assemble(build_grid(oracle::unit_square(), 1.0 / 3.0));
  ASSERT_EQ(a.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(a.entry(i, i), 36.0, 1e-12);
    int off = 0;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i && a.entry(i, j) != 0.0) {
        EXPECT_NEAR(a.entry(i, j), -9.0, 1e-12);
        ++off;
      }
    EXPECT_EQ(off, 2);
  }
  const auto ev = oracle::dense_eigenvalues(
      oracle::dense_laplacian(build_grid(oracle::unit_square(), 1.0 / 3.0)));
  EXPECT_NEAR(ev(0), 18.0, 1e-12);
}

TEST(Assemble, MatchesDenseOracleAndIsSymmetric) {
  const std::vector<std::pair<Domain, double>> cases = {
      {oracle::unit_disk(), 0.2},       {oracle::l_polygon(), 0.25},
      {oracle::unit_cube(), 0.25},      {Domain::ellipse({2.0, 1.0}), 0.25},
      {oracle::raster_from_rows({"##..", "####", ".###"}, 0.5), 0.25}};
  for (const auto& [domain, h] : cases) {
    const Grid g = build_grid(domain, h);
    const auto a = assemble(g);
    const auto dense = oracle::dense_laplacian(g);
    ASSERT_EQ(static_cast<Eigen::Index>(a.size()), dense.rows());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        EXPECT_EQ(a.entry(i, j), a.entry(j, i));
        const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
        EXPECT_NEAR(a.entry(i, j), dense(ii, jj), 1e-12 / (h * h));
      }
    EXPECT_LE(a.off_diagonal_count(), 2u * static_cast<std::size_t>(g.dim()) * a.size());
  }
}

TEST(Assemble, IntervalSpectrumClosedForm) {
  for (int n : {4, 16, 65}) {
    const double h = 1.0 / n;
    const auto ev =
        oracle::dense_eigenvalues(oracle::dense_laplacian(build_grid(oracle::unit_interval(), h)));
    ASSERT_EQ(ev.size(), n - 1);
    for (int k = 1; k < n; ++k)
      EXPECT_NEAR(ev(k - 1) / oracle::interval_eigenvalue(k, h), 1.0, 1e-10) << n << " " << k;
  }
}

TEST(Assemble, MultiplyMatchesDenseReference) {
  const Grid g = build_grid(oracle::unit_disk(), 0.125);
  const auto a = assemble(g);
  const auto dense = oracle::dense_laplacian(g);
  const auto x = oracle::random_vector(a.size(), 7);
  const auto y = a.multiply(x);
  const Eigen::VectorXd ref =
      dense * Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
  const double scale = ref.cwiseAbs().maxCoeff();
  for (std::size_t i = 0; i < y.size(); ++i)
    EXPECT_NEAR(y[i], ref(static_cast<Eigen::Index>(i)), 1e-13 * scale);
  EXPECT_NEAR(a.quadratic_form(x),
              Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()))
                  .dot(ref),
              1e-12 * std::abs(a.quadratic_form(x)));
}

TEST(Assemble, CoordinateDumpIsSortedTriplets) {
  const auto a = assemble(build_grid(oracle::unit_interval(), 0.25));
  std::ostringstream out;
  a.write_coordinate(out);
  EXPECT_EQ(out.str(), "0 0 32\n0 1 -16\n1 0 -16\n1 1 32\n1 2 -16\n2 1 -16\n2 2 32\n");
}

TEST(Grid, NeighborLookup) {
  const Grid g = build_grid(oracle::unit_square(), 0.25);
  ASSERT_EQ(g.point_count(), 9u);
  const std::size_t center = *g.index_of({2, 2, 0});
  for (int axis = 0; axis < 2; ++axis)
    for (int step : {-1, 1}) {
      const auto nb = g.neighbor(center, axis, step);
      ASSERT_TRUE(nb.has_value());
      EXPECT_NEAR(std::abs(g.coordinates(*nb)[axis] - g.coordinates(center)[axis]), 0.25, 1e-15);
    }
  const std::size_t corner = *g.index_of({1, 1, 0});
  EXPECT_FALSE(g.neighbor(corner, 0, -1).has_value());
}
