#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chow/graded_algebra.hpp"
#include "chow/sampling.hpp"

using namespace chow;

namespace {

RingHandle xy(std::optional<int> bound = std::nullopt) { return Ring::make({{"x", 1}, {"y", 2}}, bound); }

}  // namespace

TEST_CASE("ring construction rejects malformed generator lists") {
  CHECK_THROWS_AS(Ring::make({{"x", 1}, {"x", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Ring::make({{"x", -1}}), std::invalid_argument);
  CHECK_THROWS_AS(Ring::make({{"", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Ring::make({{"1x", 1}}), std::invalid_argument);
  CHECK_NOTHROW(Ring::make({{"s0", 0}}));
}

TEST_CASE("canonical order is graded, then earlier generator first") {
  auto r = Ring::make({{"x", 1}, {"y", 1}});
  auto e = parse_element(r, "y^2 + x*y + x^2 + y + x + 1");
  CHECK(to_string(e) == "1 + x + y + x^2 + x*y + y^2");
}

TEST_CASE("printing and parsing round-trip") {
  auto r = xy();
  for (const char* text : {"0", "3 + x - y^2", "1/2 * x*y^2", "-x", "-2/3 - y + 5 * x^3"}) {
    auto e = parse_element(r, text);
    CHECK(to_string(e) == text);
    CHECK(parse_element(r, to_string(e)) == e);
  }
  CHECK(parse_element(r, "(x + 1)*(x - 1)") == parse_element(r, "x^2 - 1"));
  CHECK(parse_element(r, "2*(x + y)^2") == parse_element(r, "2*x^2 + 4*x*y + 2*y^2"));
  CHECK_THROWS(parse_element(r, "x + z"));
  CHECK_THROWS(parse_element(r, "x + (y"));
}

TEST_CASE("weighted degrees and homogeneity") {
  auto r = xy();
  auto e = parse_element(r, "x^2 + y");
  CHECK(e.is_homogeneous(2));
  CHECK(e.homogeneous_degree() == 2);
  CHECK_FALSE(parse_element(r, "x + y").homogeneous_degree().has_value());
  CHECK(GradedElement(r).is_homogeneous(7));
  CHECK(parse_element(r, "x*y + 3").max_degree() == 3);
  CHECK(parse_element(r, "x*y + 3 + x").grade_component(1) == parse_element(r, "x"));
}

TEST_CASE("dimension bound truncates every product") {
  auto r = xy(3);
  auto x = GradedElement::generator(r, "x");
  auto y = GradedElement::generator(r, "y");
  CHECK(x.pow(4).is_zero());
  CHECK((x * y).is_homogeneous(3));
  CHECK((y * y).is_zero());
  const auto one = GradedElement::constant(r, 1);
  CHECK(((one + x) * (one - x + x * x - x.pow(3))).is_constant());
}

TEST_CASE("geometric series inverts 1 + x up to the bound") {
  auto r = Ring::make({{"t", 1}}, 6);
  auto t = GradedElement::generator(r, "t");
  GradedElement inv(r);
  for (int k = 0; k <= 6; ++k) inv += t.pow(static_cast<unsigned>(k)) * sign_power(k);
  CHECK((inv * (GradedElement::constant(r, 1) + t)) == GradedElement::constant(r, 1));
}

TEST_CASE("mixing rings is an error") {
  auto a = GradedElement::generator(xy(), "x");
  auto b = GradedElement::generator(Ring::make({{"x", 1}}), "x");
  CHECK_THROWS_AS(a + b, RingMismatch);
  CHECK_THROWS_AS(a * b, RingMismatch);
  // structurally identical rings are interchangeable
  auto c = GradedElement::generator(xy(), "x");
  CHECK(a * c == a.pow(2));
}

TEST_CASE("substitute evaluates a ring homomorphism") {
  auto src = Ring::make({{"a", 1}, {"b", 2}});
  auto dst = Ring::make({{"u", 1}}, 4);
  std::map<std::string, GradedElement> images{{"a", parse_element(dst, "2*u")}, {"b", parse_element(dst, "u^2")}};
  auto p = parse_element(src, "a*b + a^2 - 3");
  CHECK(substitute(p, images, dst) == parse_element(dst, "2*u^3 + 4*u^2 - 3"));
  CHECK_THROWS(substitute(parse_element(src, "a"), {}, dst));
}

TEST_CASE("monomial enumeration counts weighted partitions") {
  auto r = xy();
  // x^a y^b with a + 2b = d has floor(d/2)+1 solutions
  for (int d = 0; d <= 9; ++d) CHECK(monomials_of_degree(*r, d).size() == static_cast<std::size_t>(d / 2 + 1));
  CHECK_THROWS(monomials_of_degree(*Ring::make({{"s", 0}}), 1));
}

TEST_CASE("serial and parallel kernels agree exactly") {
  auto r = Ring::make({{"x", 1}, {"y", 1}, {"z", 2}});
  Sampler s(11);
  const auto saved = kernels::parallel_threshold();
  kernels::set_parallel_threshold(1);
  for (int t = 0; t < 20; ++t) {
    auto a = s.element(r, 6);
    auto b = s.element(r, 6);
    CHECK(kernels::multiply_serial(a, b) == kernels::multiply_parallel(a, b));
    CHECK(a * b == kernels::multiply_serial(a, b));
  }
  kernels::set_parallel_threshold(saved);
}

TEST_CASE("sampler is reproducible") {
  auto r = xy();
  Sampler a(42), b(42);
  CHECK(a.element(r, 5) == b.element(r, 5));
  Sampler c(42);
  for (int i = 0; i < 1000; ++i) {
    const int v = c.small_int();
    CHECK(v >= -9);
    CHECK(v <= 9);
  }
}

TEST_CASE("integrality assertion") {
  auto r = xy();
  CHECK(parse_element(r, "3*x - 7*y^2").is_integral());
  CHECK_FALSE(parse_element(r, "1/2*x").is_integral());
  CHECK_NOTHROW(require_integral(parse_element(r, "2 + x"), "sample"));
  CHECK_THROWS_AS(require_integral(parse_element(r, "x + 1/3"), "sample"), std::domain_error);
}
