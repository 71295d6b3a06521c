#pragma once

// Free graded-commutative polynomial rings over Q with an optional
// truncation above a dimension bound. This is the model used for every
// base Chow ring CH(S) in the engine.

#include "chow/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chow {

class RingMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Generator {
  std::string name;
  int degree = 1;
};

/// Immutable description of a ring. Always held through RingHandle.
class Ring {
 public:
  static std::shared_ptr<const Ring> make(std::vector<Generator> generators,
                                          std::optional<int> dim_bound = std::nullopt);

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  std::optional<int> dim_bound() const { return dim_bound_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Structural equality: same generator list and bound.
  bool same_as(const Ring& other) const;

 private:
  Ring(std::vector<Generator> generators, std::optional<int> dim_bound);

  std::vector<Generator> generators_;
  std::optional<int> dim_bound_;
  std::unordered_map<std::string, std::size_t> index_;
};

using RingHandle = std::shared_ptr<const Ring>;

struct Monomial {
  int degree = 0;  // weighted total degree
  std::vector<std::uint32_t> exponents;

  bool operator==(const Monomial&) const = default;
};

/// Graded-lexicographic: lower weighted degree first, then larger exponent
/// of an earlier generator first (x^2 < x*y < y^2 for x before y).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exponents > b.exponents;
  }
};

using TermMap = std::map<Monomial, Rational, MonomialOrder>;

class GradedElement {
 public:
  explicit GradedElement(RingHandle ring);  // zero

  static GradedElement constant(RingHandle ring, const Rational& c);
  static GradedElement generator(RingHandle ring, std::string_view name);
  /// Builds c * monomial; the monomial's degree field is recomputed.
  static GradedElement term(RingHandle ring, std::vector<std::uint32_t> exponents, const Rational& c);

  const RingHandle& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Zero counts as homogeneous of every degree.
  bool is_homogeneous(int degree) const;
  /// Degree of a nonzero homogeneous element; nullopt for zero or mixed degrees.
  std::optional<int> homogeneous_degree() const;
  /// Largest degree present, or -1 for zero.
  int max_degree() const;

  Rational constant_term() const;
  Rational coefficient(const std::vector<std::uint32_t>& exponents) const;
  bool is_constant() const;
  /// Every coefficient is an integer.
  bool is_integral() const;

  GradedElement grade_component(int degree) const;
  /// Drops every component of degree > bound.
  GradedElement truncated(int bound) const;

  GradedElement& operator+=(const GradedElement& other);
  GradedElement& operator-=(const GradedElement& other);
  GradedElement& operator*=(const GradedElement& other);
  GradedElement& operator*=(const Rational& c);

  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
  friend GradedElement operator*(GradedElement a, const Rational& c) { return a *= c; }
  friend GradedElement operator*(const Rational& c, GradedElement a) { return a *= c; }
  GradedElement operator-() const;

  GradedElement pow(unsigned exponent) const;

  bool operator==(const GradedElement& other) const;

  /// Internal: adopts a term table that is already canonical for `ring`.
  static GradedElement from_canonical(RingHandle ring, TermMap terms);

 private:
  void check_same_ring(const GradedElement& other) const;
  void apply_bound();

  RingHandle ring_;
  TermMap terms_;
};

GradedElement zero_like(const GradedElement& a);
GradedElement one_like(const GradedElement& a);
inline bool is_homogeneous(const GradedElement& a, int degree) { return a.is_homogeneous(degree); }

/// Multiplication kernels. `multiply` dispatches between them by size.
namespace kernels {
GradedElement multiply_serial(const GradedElement& a, const GradedElement& b);
GradedElement multiply_parallel(const GradedElement& a, const GradedElement& b);
/// Term-pair count at which `multiply` switches to the parallel kernel.
std::size_t parallel_threshold();
void set_parallel_threshold(std::size_t pairs);
bool openmp_enabled();
}  // namespace kernels

/// Evaluates `a` at `images` (generator name -> element of `target`).
/// Generators that do not occur in `a` may be omitted.
GradedElement substitute(const GradedElement& a, const std::map<std::string, GradedElement>& images,
                         const RingHandle& target);

/// Exponent vectors of weighted degree `degree`, in canonical order.
/// Throws if the ring has a degree-0 generator (the set would be infinite).
std::vector<std::vector<std::uint32_t>> monomials_of_degree(const Ring& ring, int degree);

/// `coeff * gen1^e1*gen2^e2 + ...` in canonical order; "0" for zero.
std::string to_string(const GradedElement& a);

/// Optional integrality assertion for Chow computations that should stay in
/// Z; throws std::domain_error naming `what` and the offending element.
void require_integral(const GradedElement& a, std::string_view what);

/// Parses sums/differences of products of rationals, generators with
/// optional `^e`, and parenthesised subexpressions.
GradedElement parse_element(const RingHandle& ring, std::string_view text);

}  // namespace chow
