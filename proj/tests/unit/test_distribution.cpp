// Copyright 2026 The properscore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "oracle_helpers.hpp"
#include "properscore/distribution.hpp"

using properscore::DiscreteDistribution;
using properscore::DistKind;
using properscore::Distribution;

namespace {

std::vector<Distribution> continuous_families() {
  return {Distribution::gumbel(0, 1), Distribution::laplace(0, 1),
          Distribution::logistic(0, 1), Distribution::normal(0, 1)};
}

}  // namespace

TEST_CASE("cdf closed forms") {
  CHECK(Distribution::gumbel(0, 1).cdf(0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(Distribution::laplace(0, 1).cdf(0) == doctest::Approx(0.5));
  CHECK(Distribution::logistic(0, 1).cdf(0) == doctest::Approx(0.5));
  CHECK(Distribution::normal(0, 1).cdf(0) == doctest::Approx(0.5));
  CHECK(Distribution::laplace(0, 1).cdf(-1) ==
        doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(Distribution::gumbel(1.5, 2).cdf(1.5) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("left continuity at atoms") {
  const auto d = Distribution::dirac(1.5);
  CHECK(d.cdf(1.5) == 0.0);
  CHECK(d.cdf(std::nextafter(1.5, 2.0)) == 1.0);
  CHECK(d.cdf_right(1.5) == 1.0);
  CHECK(d.survival(1.5) == 1.0);

  const auto e = Distribution::empirical({1.0, 2.0, 2.0, 3.0});
  CHECK(e.cdf(2.0) == doctest::Approx(0.25));
  CHECK(e.cdf_right(2.0) == doctest::Approx(0.75));
  CHECK(e.cdf(2.5) == doctest::Approx(0.75));
}

TEST_CASE("parametric families stay strictly inside (0,1)") {
  // across the range where doubles can still represent the tails
  for (const auto& d : continuous_families()) {
    for (double x : {-6.0, -2.0, 0.0, 2.0, 6.0}) {
      CHECK(d.cdf(x) > 0.0);
      CHECK(d.cdf(x) < 1.0);
    }
    CHECK(d.in_p01());
  }
  for (double x : {-35.0, 35.0}) {
    CHECK(Distribution::logistic(0, 1).cdf(x) > 0.0);
    CHECK(Distribution::logistic(0, 1).cdf(x) < 1.0);
  }
  for (double x : {-8.0, 8.0}) {
    CHECK(Distribution::normal(0, 1).cdf(x) > 0.0);
    CHECK(Distribution::normal(0, 1).cdf(x) < 1.0);
  }
}

TEST_CASE("cdf monotone on a grid for every variant") {
  std::vector<Distribution> all = continuous_families();
  all.push_back(Distribution::dirac(0.3));
  all.push_back(Distribution::empirical({-1, 0, 0, 2.5}));
  all.push_back(Distribution::mixture(
      {{0.25, Distribution::dirac(0)}, {0.75, Distribution::normal(1, 2)}}));
  all.push_back(
      Distribution::odds_power(Distribution::logistic(0.5, 2), 0.37));
  for (const auto& d : all) {
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
      const double x = -8.0 + 16.0 * i / 1000.0;
      const double F = d.cdf(x);
      CHECK(F >= prev);
      CHECK(F >= 0.0);
      CHECK(F <= 1.0);
      CHECK(F + d.survival(x) == doctest::Approx(1.0).epsilon(1e-12));
      prev = F;
    }
  }
}

TEST_CASE("medians") {
  CHECK(Distribution::laplace(0, 1).median() == doctest::Approx(0.0));
  // solves exp(-exp(-m)) = 1/2
  CHECK(Distribution::gumbel(0, 1).median() ==
        doctest::Approx(0.36651292058166432701).epsilon(1e-12));
  CHECK(Distribution::empirical({1, 2, 3, 4}).median() == 2.0);
  CHECK(Distribution::dirac(7).median() == 7.0);
  CHECK(Distribution::mixture({{0.5, Distribution::dirac(0)},
                               {0.5, Distribution::dirac(1)}})
            .median() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("quantile basics and domain") {
  CHECK(Distribution::logistic(0, 1).quantile(0.5) == doctest::Approx(0.0));
  CHECK(Distribution::laplace(0, 1).quantile(0.25) ==
        doctest::Approx(std::log(0.5)).epsilon(1e-14));
  CHECK(Distribution::dirac(2).quantile(0.7) == 2.0);
  CHECK_THROWS_AS((void)Distribution::normal(0, 1).quantile(0.0),
                  std::domain_error);
  CHECK_THROWS_AS((void)Distribution::normal(0, 1).quantile(1.0),
                  std::domain_error);
  CHECK_THROWS_AS((void)Distribution::normal(0, 1).quantile(-0.2),
                  std::domain_error);
}

TEST_CASE("quantile/cdf round trip on the continuous families") {
  std::vector<Distribution> dists = continuous_families();
  dists.push_back(Distribution::gumbel(-2, 0.5));
  dists.push_back(Distribution::normal(3, 2.5));
  dists.push_back(Distribution::mixture({{0.5, Distribution::normal(0, 1)},
                                         {0.5, Distribution::laplace(3, 2)}}));
  for (const auto& d : dists) {
    for (int k = 1; k <= 99; ++k) {
      const double p = k / 100.0;
      CHECK(std::abs(d.cdf(d.quantile(p)) - p) < 1e-8);
    }
  }
}

TEST_CASE("sampling is deterministic and consistent") {
  const auto point = Distribution::dirac(3);
  CHECK(point.sample(7, 5) == std::vector<double>{3, 3, 3, 3, 3});

  const auto a = Distribution::logistic(0, 1).sample(42, 1000);
  const auto b = Distribution::logistic(0, 1).sample(42, 1000);
  CHECK(a == b);
  const auto c = Distribution::logistic(0, 1).sample(43, 1000);
  CHECK(a != c);

  for (const auto& d : continuous_families()) {
    const auto s = d.sample(42, 100000);
    const double ks =
        oracle::ks_distance(s, [&](double x) { return d.cdf(x); });
    CHECK(ks < 0.01);
  }
}

TEST_CASE("density closed values and absence") {
  CHECK(*Distribution::normal(0, 1).density(0) ==
        doctest::Approx(0.39894228040143268).epsilon(1e-14));
  CHECK(*Distribution::laplace(0, 1).density(0) == doctest::Approx(0.5));
  CHECK_FALSE(Distribution::dirac(0).density(0).has_value());
  CHECK_FALSE(Distribution::empirical({0, 1}).density(0.5).has_value());
  CHECK_FALSE(Distribution::mixture({{0.5, Distribution::dirac(0)},
                                     {0.5, Distribution::normal(0, 1)}})
                  .density(0.0)
                  .has_value());
}

TEST_CASE("density matches the cdf derivative") {
  std::vector<Distribution> dists = continuous_families();
  dists.push_back(Distribution::mixture({{0.3, Distribution::gumbel(1, 2)},
                                         {0.7, Distribution::logistic(0, 1)}}));
  const double h = 1e-5;
  for (const auto& d : dists) {
    for (int i = 0; i < 100; ++i) {
      const double x = -5.0 + 10.0 * i / 99.0;
      const double fd = (d.cdf(x + h) - d.cdf(x - h)) / (2.0 * h);
      CHECK(std::abs(fd - *d.density(x)) < 1e-5);
    }
  }
}

TEST_CASE("in_p01 classification") {
  CHECK(Distribution::gumbel(0, 1).in_p01());
  CHECK_FALSE(Distribution::dirac(0).in_p01());
  CHECK_FALSE(Distribution::empirical({0, 1, 2}).in_p01());
  CHECK(Distribution::mixture({{0.5, Distribution::normal(0, 1)},
                               {0.5, Distribution::laplace(3, 2)}})
            .in_p01());
  // one full-support component rescues an atomic one
  CHECK(Distribution::mixture({{0.5, Distribution::dirac(0)},
                               {0.5, Distribution::normal(0, 1)}})
            .in_p01());
  CHECK_FALSE(Distribution::mixture({{0.5, Distribution::dirac(0)},
                                     {0.5, Distribution::dirac(1)}})
                  .in_p01());
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(Distribution::normal(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::logistic(0, -1), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::empirical({}), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::dirac(NAN), std::invalid_argument);
  CHECK_THROWS_AS(
      Distribution::mixture({{0.5, Distribution::normal(0, 1)},
                             {0.2, Distribution::normal(1, 1)}}),
      std::invalid_argument);
  // nesting depth is one
  const auto inner = Distribution::mixture(
      {{0.5, Distribution::normal(0, 1)}, {0.5, Distribution::dirac(0)}});
  CHECK_THROWS_AS(Distribution::mixture({{1.0, inner}}),
                  std::invalid_argument);
}

TEST_CASE("odds-power view basics") {
  const auto base = Distribution::logistic(0.3, 1.2);
  const auto same = Distribution::odds_power(base, 1.0);
  for (double x : {-4.0, -1.0, 0.0, 0.3, 2.0, 6.0}) {
    CHECK(same.cdf(x) == doctest::Approx(base.cdf(x)).epsilon(1e-14));
  }
  const auto view = Distribution::odds_power(base, 0.4);
  // the map fixes cdf level 1/2, so the median is preserved
  CHECK(view.median() == doctest::Approx(base.median()).epsilon(1e-9));
  CHECK(view.in_p01());
  // quantile inverts the composition
  for (double p : {0.05, 0.3, 0.5, 0.9}) {
    CHECK(view.cdf(view.quantile(p)) == doctest::Approx(p).epsilon(1e-9));
  }
  // atomic bases transform their jump heights through the map
  const auto step = Distribution::odds_power(Distribution::empirical({0, 1}), 2.0);
  const auto atoms = step.atom_list();
  REQUIRE(atoms.size() == 2);
  CHECK(atoms[0].second + atoms[1].second == doctest::Approx(1.0));
  CHECK(atoms[0].second == doctest::Approx(1.0 / (1.0 + 1.0)).epsilon(1e-12));
}

TEST_CASE("empirical merges duplicates") {
  const auto e = Distribution::empirical({2, 1, 2, 3});
  const auto atoms = e.atom_list();
  REQUIRE(atoms.size() == 3);
  CHECK(atoms[1].first == 2.0);
  CHECK(atoms[1].second == doctest::Approx(0.5));
  CHECK(e.empirical_points() == std::vector<double>{1, 2, 2, 3});
}

TEST_CASE("discrete distribution validation and lookup") {
  const DiscreteDistribution d({0.0, 1.0}, {0.5, 0.5});
  CHECK(d.mass_at(1.0) == 0.5);
  CHECK(d.mass_at(0.25) == 0.0);
  CHECK_THROWS_AS(DiscreteDistribution({0.0, 0.0}, {0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DiscreteDistribution({0.0, 1.0}, {0.5, 0.4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DiscreteDistribution({0.0, 1.0}, {1.0, 0.0}),
                  std::invalid_argument);
}
