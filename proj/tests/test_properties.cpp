#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chow/blowup.hpp"
#include "chow/char_class.hpp"
#include "chow/proj_bundle.hpp"
#include "chow/sampling.hpp"
#include "chow/suites.hpp"

using namespace chow;

TEST_CASE("ring laws on random triples") {
  Sampler sampler(2024);
  const auto free_ring = Ring::make({{"x", 1}, {"y", 2}, {"z", 3}});
  const auto bounded = Ring::make({{"x", 1}, {"y", 1}, {"w", 2}}, 4);
  int triples = 0;
  for (const auto& ring : {free_ring, bounded}) {
    for (int t = 0; t < 600; ++t) {
      const auto a = sampler.element(ring, 3);
      const auto b = sampler.element(ring, 3);
      const auto c = sampler.element(ring, 2);
      ++triples;
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a - a).is_zero());
      REQUIRE(a * GradedElement::constant(ring, 1) == a);
    }
  }
  CHECK(triples >= 1000);
}

TEST_CASE("serial and parallel kernels agree on random products") {
  Sampler sampler(7);
  const auto ring = Ring::make({{"x", 1}, {"y", 1}, {"z", 2}});
  for (int t = 0; t < 200; ++t) {
    const auto a = sampler.element(ring, 5);
    const auto b = sampler.element(ring, 5);
    REQUIRE(kernels::multiply_serial(a, b) == kernels::multiply_parallel(a, b));
  }
}

TEST_CASE("projective bundle rings are associative and commutative") {
  Sampler sampler(31);
  for (int n = 1; n <= 4; ++n) {
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i) gens.push_back({"c" + std::to_string(i), i});
    const auto ring = Ring::make(gens);
    std::vector<GradedElement> chern;
    for (int i = 1; i <= n; ++i) chern.push_back(GradedElement::generator(ring, "c" + std::to_string(i)));
    const auto pb = ProjBundleGraded::make(GradedBundle(GradedElement::constant(ring, 1), chern));
    auto random_el = [&] {
      std::vector<GradedElement> coeffs;
      for (int k = 0; k < n; ++k) coeffs.push_back(sampler.element(ring, 2));
      return PBGraded(pb, coeffs);
    };
    for (int t = 0; t < 50; ++t) {
      const auto a = random_el(), b = random_el(), c = random_el();
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("blow-up ring is associative on random triples") {
  const Blowup model(linear_blowup(4, 1));
  const auto& d = model.data();
  Sampler sampler(4242);
  auto random_class = [&] {
    std::vector<GradedElement> coeffs;
    for (int k = 0; k < model.codim(); ++k) coeffs.push_back(sampler.element(d.center, 1));
    return model.pull(sampler.element(d.ambient, 4)) + model.exc_push(PBGraded(model.exceptional(), coeffs));
  };
  for (int t = 0; t < 200; ++t) {
    const auto a = random_class(), b = random_class(), c = random_class();
    REQUIRE(model.multiply(model.multiply(a, b), c) == model.multiply(a, model.multiply(b, c)));
    REQUIRE(model.multiply(a, b + c) == model.multiply(a, b) + model.multiply(a, c));
  }
}

TEST_CASE("c(F) s(F) = 1 for random bundles") {
  Sampler sampler(5);
  const auto ring = Ring::make({{"x", 1}, {"y", 2}});
  for (int rank = 1; rank <= 4; ++rank) {
    for (int t = 0; t < 20; ++t) {
      std::vector<GradedElement> chern;
      for (int i = 1; i <= rank; ++i) chern.push_back(sampler.homogeneous(ring, i));
      const GradedBundle f(GradedElement::constant(ring, 1), chern);
      REQUIRE(chern_times_segre(f, 8) == GradedElement::constant(ring, 1));
      REQUIRE(chern_character(whitney_sum(f, f), 4) == chern_character(f, 4) + chern_character(f, 4));
    }
  }
}

TEST_CASE("reports are deterministic apart from timing") {
  for (auto suite : {Suite::binomial, Suite::projbundle, Suite::blowup, Suite::charclass, Suite::flop}) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.r = 2;
    cfg.trials = 10;
    cfg.seed = 77;
    const auto first = run_suite(cfg).to_json(false);
    const auto second = run_suite(cfg).to_json(false);
    cfg.parallel = false;
    const auto serial = run_suite(cfg).to_json(false);
    CHECK(first == second);
    CHECK(first == serial);
  }
  SuiteConfig numeric;
  numeric.suite = Suite::flop;
  numeric.mode = Mode::numeric;
  numeric.trials = 8;
  numeric.seed = 3;
  const auto a = run_suite(numeric).to_json(false);
  numeric.parallel = false;
  CHECK(a == run_suite(numeric).to_json(false));
}
