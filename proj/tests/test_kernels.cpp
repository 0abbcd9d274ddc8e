#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "bregcut/kernels.hpp"
#include "bregcut/rng.hpp"
#include "test_util.hpp"

using namespace bregcut;
namespace tu = bregcut::testutil;

TEST_CASE("soft shrinkage") {
  CHECK(soft_shrink_scalar(2.0, 1.0) == 1.0);
  CHECK(soft_shrink_scalar(-0.5, 1.0) == 0.0);
  CHECK(soft_shrink_scalar(-3.0, 1.0) == -2.0);
  CHECK(soft_shrink_scalar(1.0, 0.0) == 1.0);
  const Vec v = soft_shrink({2.5, -0.3, -4.0}, 1.0);
  CHECK(v == Vec{1.5, 0.0, -3.0});
  CHECK_THROWS_AS(soft_shrink_scalar(1.0, -0.1), std::invalid_argument);
}

TEST_CASE("soft shrinkage matches the conjugate gradient") {
  // d/ds (1/2)||S_1(s)||^2 = S_1(s), checked by finite differences at a
  // point in the negative branch.
  const auto conj = [](const Vec& s) {
    const double v = soft_shrink_scalar(s[0], 1.0);
    return 0.5 * v * v;
  };
  const Vec g = tu::fd_gradient(conj, {-3.0});
  CHECK(g[0] == doctest::Approx(-2.0).epsilon(1e-6));
}

TEST_CASE("kernel values") {
  const Kernel en = Kernel::elastic_net(1.0);
  const Kernel quad = Kernel::quadratic();
  CHECK(en.value({2.0, -1.0}) == doctest::Approx(5.5));
  CHECK(quad.value({3.0, 4.0}) == doctest::Approx(12.5));
  CHECK(en.value({0.0, 0.0}) == 0.0);
  CHECK(quad.value({}) == 0.0);
  CHECK(en.mu() == 1.0);
  CHECK(quad.mu() == 1.0);
  CHECK_THROWS_AS(Kernel::elastic_net(-1.0), std::invalid_argument);
}

TEST_CASE("conjugate values") {
  const Kernel en = Kernel::elastic_net(1.0);
  const Kernel quad = Kernel::quadratic();
  CHECK(en.conjugate_value({3.0}) == doctest::Approx(2.0));
  CHECK(en.conjugate_value({0.5}) == 0.0);
  CHECK(quad.conjugate_value({1.0, 1.0}) == doctest::Approx(1.0));
}

TEST_CASE("conjugate agrees with a grid-search supremum") {
  CounterRng rng(11);
  for (int rep = 0; rep < 5; ++rep) {
    const double lambda = rng.uniform(0.0, 2.0);
    const Kernel kernel = Kernel::elastic_net(lambda);
    const Vec x_star = tu::random_vec(rng, 1 + rng.uniform_index(2), -3.0, 3.0);
    const double oracle = tu::conjugate_grid_oracle(lambda, x_star);
    CHECK(kernel.conjugate_value(x_star) == doctest::Approx(oracle).epsilon(1e-6));
  }
}

TEST_CASE("mirror map") {
  const Kernel en = Kernel::elastic_net(1.0);
  CHECK(en.mirror_map({2.5, -0.3, -4.0}) == Vec{1.5, 0.0, -3.0});
  const Kernel quad = Kernel::quadratic();
  CHECK(quad.mirror_map({7.0}) == Vec{7.0});
  const Kernel en0 = Kernel::elastic_net(0.0);
  const Vec v{1.0, -2.5, 0.0};
  CHECK(en0.mirror_map(v) == v);
}

TEST_CASE("mirror map is 1-Lipschitz") {
  CounterRng rng(12);
  for (int rep = 0; rep < 200; ++rep) {
    const Kernel kernel = (rep % 4 == 0)
                              ? Kernel::quadratic()
                              : Kernel::elastic_net(rng.uniform(0.0, 3.0));
    const std::size_t n = 1 + rng.uniform_index(6);
    const Vec a = tu::random_vec(rng, n, -5.0, 5.0);
    const Vec b = tu::random_vec(rng, n, -5.0, 5.0);
    const double lhs = norm2(subtract(kernel.mirror_map(a), kernel.mirror_map(b)));
    CHECK(lhs <= norm2(subtract(a, b)) * (1.0 + 1e-12) + 1e-15);
  }
}

TEST_CASE("fenchel equality along the mirror map") {
  CounterRng rng(13);
  for (int rep = 0; rep < 200; ++rep) {
    const Kernel kernel = (rep % 4 == 0)
                              ? Kernel::quadratic()
                              : Kernel::elastic_net(rng.uniform(0.0, 3.0));
    const Vec x_star = tu::random_vec(rng, 1 + rng.uniform_index(6), -4.0, 4.0);
    const Vec x = kernel.mirror_map(x_star);
    const double lhs = kernel.value(x) + kernel.conjugate_value(x_star);
    const double rhs = dot(x, x_star);
    const double scale = 1.0 + std::abs(lhs) + std::abs(rhs);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("initial subgradient") {
  const Kernel en = Kernel::elastic_net(1.0);
  CHECK(en.initial_subgradient({0.0, 0.0}) == Vec{0.0, 0.0});
  CHECK(en.initial_subgradient({2.0}) == Vec{3.0});
  CHECK(en.initial_subgradient({-2.0, 0.0}) == Vec{-3.0, 0.0});
  const Kernel quad = Kernel::quadratic();
  CHECK(quad.initial_subgradient({5.0}) == Vec{5.0});

  // The returned vector is a genuine subgradient: mirroring it back
  // reproduces the point (up to one rounding of the lambda shift).
  CounterRng rng(14);
  for (int rep = 0; rep < 50; ++rep) {
    const Kernel kernel = Kernel::elastic_net(rng.uniform(0.0, 2.0));
    Vec x0 = tu::random_vec(rng, 4, -3.0, 3.0);
    x0[rng.uniform_index(4)] = 0.0;
    const Vec back = kernel.mirror_map(kernel.initial_subgradient(x0));
    for (std::size_t i = 0; i < x0.size(); ++i) {
      CHECK(std::abs(back[i] - x0[i]) <= 1e-12 * std::max(1.0, std::abs(x0[i])));
    }
  }
}

TEST_CASE("elastic net with zero weight equals the quadratic kernel") {
  const Kernel en0 = Kernel::elastic_net(0.0);
  const Kernel quad = Kernel::quadratic();
  CounterRng rng(15);
  for (int rep = 0; rep < 50; ++rep) {
    const Vec v = tu::random_vec(rng, 1 + rng.uniform_index(5), -4.0, 4.0);
    CHECK(en0.value(v) == quad.value(v));
    CHECK(en0.conjugate_value(v) == quad.conjugate_value(v));
    CHECK(en0.mirror_map(v) == quad.mirror_map(v));
    CHECK(en0.initial_subgradient(v) == quad.initial_subgradient(v));
  }
  CHECK(en0.grad_lipschitz().has_value());
  CHECK(*en0.grad_lipschitz() == 1.0);
  CHECK(*quad.grad_lipschitz() == 1.0);
  CHECK_FALSE(Kernel::elastic_net(0.5).grad_lipschitz().has_value());
}
