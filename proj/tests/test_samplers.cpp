#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kdebw/errors.hpp"
#include "kdebw/samplers.hpp"
#include "oracles.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

using namespace kdebw;

namespace {

double mean(std::span<const double> xs)
{
  double s = 0.0;
  for (double x : xs)
    s += x;
  return s / xs.size();
}

double variance(std::span<const double> xs)
{
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs)
    s += (x - m) * (x - m);
  return s / (xs.size() - 1);
}

// Pearson statistic on equal-width bins over [lo, hi]; draws outside are
// pooled into the two end bins.
bool chi_square_ok(std::span<const double> xs,
                   const std::function<double(double)>& cdf,
                   double lo,
                   double hi,
                   std::size_t bins = 50)
{
  std::vector<double> counts(bins, 0.0);
  const double width = (hi - lo) / bins;
  for (double x : xs) {
    const auto b = static_cast<std::ptrdiff_t>(std::floor((x - lo) / width));
    counts[std::clamp<std::ptrdiff_t>(b, 0, bins - 1)] += 1.0;
  }
  double stat = 0.0;
  for (std::size_t b = 0; b < bins; ++b) {
    const double a = b == 0 ? 0.0 : cdf(lo + b * width);
    const double c = b + 1 == bins ? 1.0 : cdf(lo + (b + 1) * width);
    const double expect = (c - a) * xs.size();
    stat += (counts[b] - expect) * (counts[b] - expect) / expect;
  }
  const boost::math::chi_squared dist(static_cast<double>(bins - 1));
  const double critical = boost::math::quantile(dist, 0.999);
  CAPTURE(stat);
  CAPTURE(critical);
  return stat < critical;
}

double tsc_cdf(double x)
{
  if (x <= -1.5)
    return 0.0;
  if (x >= 1.5)
    return 1.0;
  return oracle::simpson([](double t) { return oracle::tsc(t); }, -1.5, x, 2000);
}

double trimodal_cdf(double x)
{
  return (oracle::normal_cdf(x) + oracle::normal_cdf(x, -4.0, 2.0) + oracle::normal_cdf(x, 4.0, 0.5)) / 3.0;
}

double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf)
{
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({ d, f - i / n, (i + 1) / n - f });
  }
  return d;
}

} // namespace

TEST_CASE("uniform variates stay inside the open interval")
{
  Rng rng(RngSeed{ 3 });
  double lo = 1.0, hi = 0.0, sum = 0.0;
  for (int i = 0; i < 200'000; ++i) {
    const double u = rng.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);
  CHECK(std::abs(sum / 200'000 - 0.5) < 0.005);
}

TEST_CASE("Gaussian 1-d draws")
{
  const auto s = sample_gaussian_1d(100'000, RngSeed{ 1 });
  REQUIRE(s.size() == 100'000);
  CHECK(std::abs(mean(s.points())) < 0.02);
  CHECK(std::abs(variance(s.points()) - 1.0) < 0.02);
  CHECK(chi_square_ok(s.points(), [](double x) { return oracle::normal_cdf(x); }, -4.0, 4.0));

  SUBCASE("same seed, same draws")
  {
    const auto t = sample_gaussian_1d(100'000, RngSeed{ 1 });
    CHECK(std::equal(s.points().begin(), s.points().end(), t.points().begin()));
    const auto u = sample_gaussian_1d(100'000, RngSeed{ 2 });
    CHECK_FALSE(std::equal(s.points().begin(), s.points().end(), u.points().begin()));
  }

  SUBCASE("prefix stable in n")
  {
    const auto t = sample_gaussian_1d(1000, RngSeed{ 1 });
    CHECK(std::equal(t.points().begin(), t.points().end(), s.points().begin()));
  }
}

TEST_CASE("TSC-profile draws")
{
  const auto d = sample_tsc_density_counted(100'000, RngSeed{ 11 });
  const auto& s = d.sample;
  REQUIRE(s.size() == 100'000);
  CHECK(s.min() >= -1.5);
  CHECK(s.max() <= 1.5);
  CHECK(std::abs(mean(s.points())) < 0.01);
  CHECK(std::abs(variance(s.points()) - 0.25) < 0.02);
  // area under the envelope is 3 * 0.75, so acceptance is 1 / 2.25
  const double rate = static_cast<double>(s.size()) / d.proposals;
  CHECK(std::abs(rate - 4.0 / 9.0) < 0.02);
  CHECK(chi_square_ok(s.points(), tsc_cdf, -1.5, 1.5));

  const auto again = sample_tsc_density(100'000, RngSeed{ 11 });
  CHECK(std::equal(s.points().begin(), s.points().end(), again.points().begin()));
}

TEST_CASE("trimodal draws")
{
  const std::size_t n = 300'000;
  const auto d = sample_trimodal_labeled(n, RngSeed{ 4 });
  REQUIRE(d.sample.size() == n);
  REQUIRE(d.component.size() == n);
  // overall mean 0, variance (1 + 4 + 0.25 + 16 + 16) / 3
  CHECK(std::abs(mean(d.sample.points())) < 0.03);
  CHECK(std::abs(variance(d.sample.points()) - 37.25 / 3.0) < 0.15);

  std::array<std::size_t, 3> counts{};
  std::array<double, 3> sums{};
  for (std::size_t i = 0; i < n; ++i) {
    counts.at(d.component[i]) += 1;
    sums.at(d.component[i]) += d.sample.points()[i];
  }
  const std::array<double, 3> centres = { 0.0, -4.0, 4.0 };
  for (int c = 0; c < 3; ++c) {
    // 5 binomial standard deviations
    CHECK(std::abs(static_cast<double>(counts[c]) - n / 3.0) < 5.0 * std::sqrt(n * 2.0 / 9.0));
    CHECK(std::abs(sums[c] / counts[c] - centres[c]) < 0.02);
  }
  CHECK(chi_square_ok(d.sample.points(), trimodal_cdf, -10.0, 10.0));

  const auto plain = sample_trimodal(n, RngSeed{ 4 });
  CHECK(std::equal(plain.points().begin(), plain.points().end(), d.sample.points().begin()));
}

TEST_CASE("Gaussian 3-d draws")
{
  const auto s = sample_gaussian_3d(100'000, RngSeed{ 9 });
  REQUIRE(s.size() == 100'000);
  std::array<double, 3> m{};
  double r2 = 0.0;
  for (const auto& p : s.points()) {
    for (int k = 0; k < 3; ++k)
      m[k] += p[k];
    r2 += p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  }
  for (int k = 0; k < 3; ++k)
    CHECK(std::abs(m[k] / s.size()) < 0.02);
  CHECK(std::abs(r2 / s.size() - 3.0) < 0.05);

  std::vector<double> xs;
  for (const auto& p : s.points())
    xs.push_back(p[1]);
  CHECK(chi_square_ok(xs, [](double x) { return oracle::normal_cdf(x); }, -4.0, 4.0));
}

TEST_CASE("Hernquist radii")
{
  SUBCASE("untruncated median is (1 + sqrt 2) r_c")
  {
    HernquistParams p;
    p.scale_length = 2.0;
    p.min_r_over_rc = 0.0;
    p.max_r_over_rc = std::numeric_limits<double>::infinity();
    auto s = sample_hernquist_radii(1'000'000, p, RngSeed{ 21 });
    std::vector<double> r(s.points().begin(), s.points().end());
    std::nth_element(r.begin(), r.begin() + r.size() / 2, r.end());
    const double median = r[r.size() / 2];
    CHECK(std::abs(median / (2.0 * (1.0 + std::sqrt(2.0))) - 1.0) < 0.01);
  }

  SUBCASE("window is respected and the law matches")
  {
    const HernquistParams p;
    const std::size_t n = 200'000;
    const auto s = sample_hernquist_radii(n, p, RngSeed{ 22 });
    CHECK(s.min() >= 0.05);
    CHECK(s.max() <= 1000.0);
    const double f_lo = hernquist_mass_fraction(0.05, 1.0);
    const double f_hi = hernquist_mass_fraction(1000.0, 1.0);
    const auto cdf = [&](double r) { return (hernquist_mass_fraction(r, 1.0) - f_lo) / (f_hi - f_lo); };
    const double d = ks_statistic({ s.points().begin(), s.points().end() }, cdf);
    // 0.1% critical value of the Kolmogorov distribution
    CHECK(d < 1.95 / std::sqrt(static_cast<double>(n)));
  }

  SUBCASE("parameters are validated")
  {
    HernquistParams p;
    p.scale_length = 0.0;
    CHECK_THROWS_AS(sample_hernquist_radii(10, p, RngSeed{ 1 }), InvalidArgument);
    p = {};
    p.min_r_over_rc = 2.0;
    p.max_r_over_rc = 1.0;
    CHECK_THROWS_AS(sample_hernquist_radii(10, p, RngSeed{ 1 }), InvalidArgument);
  }

  CHECK(hernquist_mass_fraction(1.0, 1.0) == 0.25);
  CHECK(hernquist_mass_fraction(0.0, 1.0) == 0.0);
}
