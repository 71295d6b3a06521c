#pragma once

// Chern character, Todd class, square roots of unit series and Mukai
// vectors for bundles whose Chern classes live in a GradedElement ring.

#include "chow/bundle.hpp"
#include "chow/graded_algebra.hpp"

#include <optional>

namespace chow {

using GradedBundle = BundleClass<GradedElement>;

/// A possibly inhomogeneous class trusted up to `max_deg`.
struct CharClass {
  GradedElement value;
  int max_deg = 0;

  CharClass(GradedElement v, int max_degree);

  GradedElement component(int d) const { return value.grade_component(d); }
  bool operator==(const CharClass& other) const { return max_deg == other.max_deg && value == other.value; }
};

/// Product truncated at the smaller horizon.
CharClass operator*(const CharClass& a, const CharClass& b);
CharClass operator+(const CharClass& a, const CharClass& b);

/// Uses the ring's dim_bound when `max_deg` is not given; throws if neither exists.
int resolve_horizon(const RingHandle& ring, std::optional<int> max_deg);

CharClass chern_character(const GradedBundle& bundle, std::optional<int> max_deg = std::nullopt);
CharClass todd_class(const GradedBundle& bundle, std::optional<int> max_deg = std::nullopt);
CharClass sqrt_one_series(const CharClass& a, std::optional<int> max_deg = std::nullopt);
CharClass mukai_vector(const GradedBundle& bundle, const GradedBundle& tangent,
                       std::optional<int> max_deg = std::nullopt);
/// exp(x) for x homogeneous of degree 1.
CharClass exp_series(const GradedElement& x, int max_deg);

/// c(F) s(F) as a single element, truncated at `max_deg`; equals 1 exactly.
GradedElement chern_times_segre(const GradedBundle& bundle, int max_deg);

namespace formal_roots {

/// Q[x_1..x_k] with deg x_i = 1 (names x1..xk).
RingHandle root_ring(int k, std::optional<int> dim_bound = std::nullopt);
/// e_i(x_1..x_k) inside `roots`.
GradedElement elementary_symmetric(const RingHandle& roots, int i);
/// Q[e_1..e_k] with deg e_i = i (names e1..ek).
RingHandle elementary_ring(int k);
/// Rewrites a symmetric polynomial in the roots as a polynomial in the
/// elementary symmetric functions. Throws if `p` is not symmetric.
GradedElement to_elementary(const GradedElement& p, const RingHandle& elementary);
/// Power series coefficients of t / (1 - e^{-t}) up to t^max_deg.
std::vector<Rational> todd_series(int max_deg);
/// Universal Todd polynomials td_0..td_max_deg in e_1..e_k, memoised.
const std::vector<GradedElement>& todd_polynomials(int k, int max_deg);

}  // namespace formal_roots

}  // namespace chow
