#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ennomp/core.hpp"
#include "ennomp/rng.hpp"
#include "support.hpp"

using namespace ennomp;

TEST_CASE("normalize_columns scales each column to unit norm") {
  Matrix raw(2, 2);
  raw << 3.0, 0.0, 4.0, 1.0;
  const Dictionary d = normalize_columns(raw);
  CHECK(d.atoms()(0, 0) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(d.atoms()(1, 0) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(d.atoms()(0, 1) == doctest::Approx(0.0));
  CHECK(d.atoms()(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("normalize_columns keeps already-unit columns") {
  Matrix raw(3, 4);
  Rng rng(7);
  for (Index c = 0; c < 4; ++c) {
    for (Index r = 0; r < 3; ++r) raw(r, c) = rng.gaussian();
    raw.col(c) /= raw.col(c).norm();
  }
  const Dictionary d = normalize_columns(raw);
  CHECK((d.atoms() - raw).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("normalize_columns rejects a zero column") {
  Matrix raw = Matrix::Zero(3, 2);
  raw(0, 0) = 1.0;
  CHECK_THROWS_AS(normalize_columns(raw), ZeroColumn);
  try {
    normalize_columns(raw);
  } catch (const ZeroColumn& e) {
    CHECK(e.index == 1);
  }
}

TEST_CASE("dictionary constructor validates unit norms and finiteness") {
  Matrix bad(2, 1);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS(Dictionary{bad}, ValidationError);
  Matrix nan_col(2, 1);
  nan_col << 1.0, std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Dictionary{nan_col}, ValidationError);
}

TEST_CASE("distance basics") {
  Vector a(2), b(2);
  a << 1.0, 0.0;
  b << 0.0, 1.0;
  CHECK(distance(a, a) == 0.0);
  CHECK(distance(a, b) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(distance(a, b) == distance(b, a));
  Vector c(3);
  CHECK_THROWS_AS(distance(a, c), DimensionMismatch);
}

TEST_CASE("distance matches an elementwise oracle on random pairs") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Index m = 1 + static_cast<Index>(rng.below(40));
    Vector a(m), b(m);
    for (Index i = 0; i < m; ++i) {
      a[i] = rng.gaussian();
      b[i] = rng.gaussian();
    }
    double acc = 0.0;
    for (Index i = 0; i < m; ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
    CHECK(distance(a, b) == doctest::Approx(std::sqrt(acc)).epsilon(1e-12));
  }
}

TEST_CASE("distance-argmin equals correlation-argmax for unit atoms") {
  // d^2 = 1 + ||q||^2 - 2 phi' q links nearest-atom search to the
  // most-correlated-atom selection the pursuit needs.
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Dictionary d = gen_random_dictionary(12, 40, 1000 + trial);
    Vector q(12);
    for (Index i = 0; i < 12; ++i) q[i] = rng.gaussian();
    q *= rng.uniform(0.1, 3.0);  // any query norm

    Index best_dist = 0, best_corr = 0;
    double bd = std::numeric_limits<double>::infinity(), bc = -bd;
    for (Index i = 0; i < d.n(); ++i) {
      const double dist = distance(d.atom(i), q);
      const double corr = d.atom(i).dot(q);
      if (dist < bd) {
        bd = dist;
        best_dist = i;
      }
      if (corr > bc) {
        bc = corr;
        best_corr = i;
      }
    }
    CHECK(best_dist == best_corr);
  }
}

TEST_CASE("triangle inequality holds on random triples") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Index m = 2 + static_cast<Index>(rng.below(20));
    Vector a(m), b(m), c(m);
    for (Index i = 0; i < m; ++i) {
      a[i] = rng.gaussian();
      b[i] = rng.gaussian();
      c[i] = rng.gaussian();
    }
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-10);
  }
}
