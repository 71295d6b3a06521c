#pragma once

// Deterministic sampling of small-integer test data. The engine is
// std::mt19937_64 (bit-exact across standard libraries); each coefficient
// is `next() % 19 - 9`, so the same seed yields the same data everywhere.

#include "chow/graded_algebra.hpp"

#include <cstdint>
#include <random>

namespace chow {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [-9, 9].
  int small_int() { return static_cast<int>(engine_() % 19) - 9; }
  /// Integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// Random integer combination of every monomial of `degree`.
  GradedElement homogeneous(const RingHandle& ring, int degree) {
    GradedElement out(ring);
    for (auto& exps : monomials_of_degree(*ring, degree)) {
      const int c = small_int();
      if (c != 0) out += GradedElement::term(ring, std::move(exps), c);
    }
    return out;
  }

  /// Sum of homogeneous parts of degrees 0..max_degree.
  GradedElement element(const RingHandle& ring, int max_degree) {
    GradedElement out(ring);
    for (int d = 0; d <= max_degree; ++d) out += homogeneous(ring, d);
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace chow
