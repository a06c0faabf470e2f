#include <cmath>
#include <vector>

#include <doctest.h>

#include "core/errors.hpp"
#include "core/normal.hpp"
#include "core/rng.hpp"

using vesselmc::DomainError;
using vesselmc::standard_normal_cdf;
using vesselmc::standard_normal_quantile;

namespace {

// Independent reference for Phi^-1: bisection on the long-double CDF.
// Never touches the rational approximation under test. Upper-tail
// arguments reflect through the exact identity Phi^-1(p) = -Phi^-1(1-p)
// (1-p is exact for p >= 0.5), because the CDF representation near 1
// cannot resolve the tail.
double quantile_reference(double p) {
  if (p > 0.5) {
    long double lo = -40.0L;
    long double hi = 0.0L;
    const auto tail = static_cast<long double>(1.0 - p);
    for (int i = 0; i < 200; ++i) {
      const long double mid = 0.5L * (lo + hi);
      if (0.5L * erfcl(-mid / sqrtl(2.0L)) < tail) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return -static_cast<double>(0.5L * (lo + hi));
  }
  long double lo = -40.0L;
  long double hi = 0.5L;
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (0.5L * erfcl(-mid / sqrtl(2.0L)) < static_cast<long double>(p)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return static_cast<double>(0.5L * (lo + hi));
}

}  // namespace

TEST_CASE("quantile matches fixed reference points") {
  CHECK(standard_normal_quantile(0.5) == 0.0);  // symmetry
  // Reference: bisection oracle / high-precision evaluation.
  CHECK(std::abs(standard_normal_quantile(0.975) - 1.959963984540054) < 1e-9);
  CHECK(std::abs(standard_normal_quantile(0.975) - 1.959964) < 1e-6);
  CHECK(std::abs(standard_normal_quantile(0.024) - (-1.9773684281819467)) <
        1e-9);
}

TEST_CASE("quantile rejects arguments outside (0,1)") {
  CHECK_THROWS_AS(standard_normal_quantile(0.0), DomainError);
  CHECK_THROWS_AS(standard_normal_quantile(1.0), DomainError);
  CHECK_THROWS_AS(standard_normal_quantile(-0.3), DomainError);
  CHECK_THROWS_AS(standard_normal_quantile(1.7), DomainError);
  CHECK_THROWS_AS(standard_normal_quantile(std::nan("")), DomainError);
}

TEST_CASE("quantile absolute error below 1e-9 across [1e-12, 1-1e-12]") {
  std::vector<double> grid = {1e-12, 1e-10, 1e-8,  1e-6, 1e-4, 1e-3,
                              0.01,  0.024, 0.05,  0.1,  0.25, 0.424,
                              0.426, 0.5,   0.7,   0.9,  0.975};
  for (double p : std::vector<double>(grid)) grid.push_back(1.0 - p);
  // Plus seeded random probes across the central and tail regions.
  vesselmc::RngStream stream(2024, 0);
  for (int i = 0; i < 400; ++i) {
    const double u = stream.next_uniform();
    grid.push_back(1e-12 + u * (1.0 - 2e-12));
    grid.push_back(std::pow(10.0, -12.0 * stream.next_uniform()));
  }
  for (double p : grid) {
    const double got = standard_normal_quantile(p);
    const double want = quantile_reference(p);
    CHECK_MESSAGE(std::abs(got - want) < 1e-9, "p=", p, " got=", got,
                  " want=", want);
  }
}

TEST_CASE("cdf matches fixed reference points and rejects non-finite input") {
  CHECK(standard_normal_cdf(0.0) == 0.5);
  // Reference: high-precision evaluation of Phi(-2.21).
  CHECK(std::abs(standard_normal_cdf(-2.21) - 0.013552581146419982) < 1e-13);
  CHECK(std::abs(standard_normal_cdf(-2.21) - 0.01355) < 1e-4);
  CHECK_THROWS_AS(standard_normal_cdf(std::nan("")), DomainError);
  CHECK_THROWS_AS(standard_normal_cdf(INFINITY), DomainError);
}

TEST_CASE("cdf is monotone nondecreasing") {
  double prev = 0.0;
  for (double z = -12.0; z <= 12.0; z += 0.01) {
    const double v = standard_normal_cdf(z);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("cdf(quantile(p)) round-trips within 1e-8") {
  CHECK(std::abs(standard_normal_cdf(standard_normal_quantile(0.024)) -
                 0.024) < 1e-8);
  for (double p = 0.001; p < 0.9995; p += 0.0007) {
    const double back = standard_normal_cdf(standard_normal_quantile(p));
    CHECK_MESSAGE(std::abs(back - p) < 1e-8, "p=", p, " back=", back);
  }
}
