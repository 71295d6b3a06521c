#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chow/char_class.hpp"
#include "chow/proj_bundle.hpp"
#include "chow/sampling.hpp"

using namespace chow;

namespace {

std::string cname(int i) { return "c" + std::to_string(i); }

RingHandle chern_ring(int n) {
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({cname(i), i});
  return Ring::make(gens);
}

std::shared_ptr<const ProjBundleGraded> generic(int n) {
  auto ring = chern_ring(n);
  std::vector<GradedElement> chern;
  for (int i = 1; i <= n; ++i) chern.push_back(GradedElement::generator(ring, cname(i)));
  return ProjBundleGraded::make(GradedBundle(GradedElement::constant(ring, 1), chern));
}

// c_i -> e_i(x_1..x_n): the splitting map into the root ring.
std::map<std::string, GradedElement> split_images(const RingHandle& roots, int n) {
  std::map<std::string, GradedElement> images;
  for (int i = 1; i <= n; ++i) images.emplace(cname(i), formal_roots::elementary_symmetric(roots, i));
  return images;
}

// Complete homogeneous symmetric polynomial h_k by enumerating monomials.
GradedElement complete_homogeneous(const RingHandle& roots, int k) {
  GradedElement out(roots);
  for (auto& e : monomials_of_degree(*roots, k)) out += GradedElement::term(roots, e, 1);
  return out;
}

}  // namespace

TEST_CASE("tau rows vanish at every root of the splitting polynomial") {
  // h^n + c_1 h^{n-1} + ... + c_n = prod (h + x_i), so h = -x_k kills
  // h^i - sum_j tau(i, j) h^j for every k.
  for (int n = 1; n <= 4; ++n) {
    auto pb = generic(n);
    auto roots = formal_roots::root_ring(n);
    const auto images = split_images(roots, n);
    const auto tau = pb->tau_table(3 * n);
    for (int i = 0; i <= 3 * n; ++i) {
      for (int k = 1; k <= n; ++k) {
        auto h = -GradedElement::generator(roots, "x" + std::to_string(k));
        GradedElement residue = h.pow(static_cast<unsigned>(i));
        for (int j = 0; j < n; ++j) residue -= substitute(tau(i, j), images, roots) * h.pow(static_cast<unsigned>(j));
        CHECK_MESSAGE(residue.is_zero(), "n=" << n << " i=" << i << " k=" << k);
      }
    }
  }
}

TEST_CASE("tau in low rows") {
  for (int n = 1; n <= 5; ++n) {
    auto pb = generic(n);
    const auto tau = pb->tau_table(2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) CHECK(tau(i, j) == GradedElement::constant(pb->bundle().one().ring(), i == j ? 1 : 0));
    }
    for (int j = 0; j < n; ++j) CHECK(tau(n, j) == -pb->bundle().c(n - j));
    CHECK(pb->hyperplane_power(n - 1) * pb->hyperplane() == pb->hyperplane_power(n));
  }
  auto pb = generic(2);
  auto ring = pb->bundle().one().ring();
  CHECK(pb->tau_table(3)(2, 1) == parse_element(ring, "-c1"));
  CHECK(pb->tau_table(3)(3, 1) == parse_element(ring, "c1^2 - c2"));
  CHECK(pb->tau_table(3)(3, 0) == parse_element(ring, "c1*c2"));
}

TEST_CASE("pushforward of hyperplane powers is the complete homogeneous polynomial") {
  for (int n = 1; n <= 4; ++n) {
    auto pb = generic(n);
    auto roots = formal_roots::root_ring(n);
    const auto images = split_images(roots, n);
    for (int k = 0; k <= n + 4; ++k) {
      const auto pushed = substitute(pb->pushforward_power(k), images, roots);
      const int shift = k - (n - 1);
      const auto expected = shift < 0 ? GradedElement(roots) : complete_homogeneous(roots, shift) * sign_power(shift);
      CHECK(pushed == expected);
      CHECK(pb->pushforward(pb->hyperplane_power(k)) == pb->pushforward_power(k));
    }
  }
}

TEST_CASE("projection formula and module structure") {
  Sampler sampler(11);
  for (int n = 1; n <= 4; ++n) {
    auto pb = generic(n);
    auto ring = pb->bundle().one().ring();
    for (int t = 0; t < 10; ++t) {
      auto a = sampler.element(ring, 3);
      std::vector<GradedElement> coeffs;
      for (int k = 0; k < n + 2; ++k) coeffs.push_back(sampler.element(ring, 2));
      auto x = pb->from_coefficients(coeffs);
      CHECK(pb->pushforward(pb->pullback(a) * x) == a * pb->pushforward(x));
      GradedElement by_powers(ring);
      for (int k = 0; k < n + 2; ++k) by_powers += coeffs[static_cast<std::size_t>(k)] * pb->pushforward_power(k);
      CHECK(pb->pushforward(x) == by_powers);
    }
  }
}

TEST_CASE("relative cotangent bundle") {
  for (int n = 2; n <= 5; ++n) {
    auto pb = generic(n);
    const auto euler = pb->euler_cotangent();
    CHECK(euler.rank() == n - 1);
    for (int i = 0; i <= n; ++i) CHECK(pb->cotangent_chern(i) == euler.c(i));
    const auto c1 = pb->pullback(pb->bundle().c(1));
    CHECK(pb->cotangent_chern(1) == -(pb->hyperplane() * Rational(n) + c1));
    // Euler characteristic of P^{n-1}: the top class pushes to (-1)^{n-1} n.
    CHECK(pb->pushforward(pb->cotangent_chern(n - 1)) == pb->base_one() * Rational(sign_power(n - 1) * n));
    CHECK(pb->cotangent_chern(n).is_zero());
    const auto twisted = tensor_by_line(euler, pb->hyperplane());
    for (int i = 0; i < n; ++i) CHECK(pb->cotangent_twist_chern(i) == twisted.c(i));
  }
  CHECK_THROWS_AS(generic(1)->euler_cotangent(), std::invalid_argument);
}

TEST_CASE("binomial identity") {
  CHECK(binomial_sum(3, 2, 1) == -1);
  CHECK(binomial_sum(0, 0, 0) == 1);
  for (int r = 0; r <= 10; ++r) {
    const auto rep = binomial_identity_check(r);
    CHECK_MESSAGE(rep.ok, rep.first_failure);
    CHECK(rep.cases == (r + 1) * (r + 2) / 2);
  }
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(3, -1) == 0);
}

TEST_CASE("a projective bundle over a projective bundle") {
  auto base = generic(2);
  // G = O(h) + O on P(F), so P(G) satisfies H (H + h) = 0.
  auto h = base->hyperplane();
  BundleClass<PBGraded> g(base->one(), {h, base->zero()});
  auto tower = ProjBundle<PBGraded>::make(g, "H");
  auto H = tower->hyperplane();
  CHECK(H * (H + tower->pullback(h)) == tower->zero());
  CHECK(tower->pushforward(H) == base->one());
  CHECK(tower->pushforward(H * H) == -h);
  CHECK(base->pushforward(tower->pushforward(H * H * tower->pullback(h))) ==
        parse_element(base->bundle().one().ring(), "c1"));

  Sampler sampler(5);
  auto ring = base->bundle().one().ring();
  auto random_el = [&] {
    auto x = tower->zero();
    for (int k = 0; k < 4; ++k) {
      auto coeff = base->from_coefficients({sampler.element(ring, 1), sampler.element(ring, 1)});
      x += tower->pullback(coeff) * H.pow(static_cast<unsigned>(k));
    }
    return x;
  };
  for (int t = 0; t < 5; ++t) {
    auto a = random_el(), b = random_el(), c = random_el();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("elements from mismatched bundles do not mix") {
  auto a = generic(2);
  auto b = generic(3);
  CHECK_THROWS_AS(a->one() + b->one(), RingMismatch);
  CHECK_THROWS_AS(PBGraded(a, {a->base_one()}), std::invalid_argument);
}
