#pragma once

// Chow ring of the blow-up X^ of X along a codimension-r centre P.
// Classes are stored as phi^*(alpha) + j_*(eps) with eps in CH(E),
// E = P(N_{P|X}), normalised so that eta_*(eps) = 0; that representative is
// unique, which gives every class a canonical form.
//
// Standing assumptions of the model: N_{E|X^} = O_{P(N)}(-1), so
// j^*j_*(eps) = -xi.eps, and j^*phi^* = eta^*i^*.

#include "chow/bundle.hpp"
#include "chow/graded_algebra.hpp"
#include "chow/proj_bundle.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace chow {

/// CH(X) and CH(P) are free truncated rings (dim_bound required, positive
/// generator degrees). i^* is given by generator images, i_* by its values
/// on the monomial basis of CH(P).
struct EmbeddingData {
  RingHandle ambient;
  RingHandle center;
  int codim = 0;
  std::map<std::string, GradedElement> pull_images;
  std::vector<std::pair<std::vector<std::uint32_t>, GradedElement>> push_table;
  std::vector<GradedElement> normal_chern;  // c_1..c_codim of N_{P|X}
};

/// P^m linearly inside P^n: i^*t = u, i_*(u^k) = t^{k+n-m}, c(N) = (1+u)^{n-m}.
EmbeddingData linear_blowup(int n, int m);

/// Declarative `key = value` description; see README for the keys.
EmbeddingData parse_embedding(std::string_view text);
std::string to_text(const EmbeddingData& data);

struct ValidationReport {
  bool accepted = true;
  int checks = 0;
  std::string witness;
};

/// Structure checks, then the homomorphism property of i^*, the projection
/// formula and the self-intersection formula on every pair of basis
/// elements plus `samples` seeded random pairs.
ValidationReport embedding_validate(const EmbeddingData& data, int samples, std::uint64_t seed);

/// c_{r-1}(W), W = eta^*N / O(-1), on E = P(N):
/// (-1)^{r-1} sum_m (-1)^m xi^m eta^*c_{r-1-m}(N^dual).
template <class Base>
PBElement<Base> cw_top(const ProjBundle<Base>& exceptional) {
  const int r = exceptional.rank();
  const auto dual = dual_bundle(exceptional.bundle());
  auto out = exceptional.zero();
  for (int m = 0; m <= r - 1; ++m) {
    out += exceptional.pullback(dual.c(r - 1 - m)) * exceptional.hyperplane_power(m) * sign_power(m);
  }
  return out * sign_power(r - 1);
}

/// Same class from c(W) = c(eta^*N) (1 - xi)^{-1}.
template <class Base>
PBElement<Base> cw_top_by_quotient(const ProjBundle<Base>& exceptional) {
  const int r = exceptional.rank();
  auto out = exceptional.zero();
  for (int m = 0; m <= r - 1; ++m) {
    out += exceptional.pullback(exceptional.bundle().c(r - 1 - m)) * exceptional.hyperplane_power(m);
  }
  return out;
}

struct BlowupClass {
  GradedElement ambient;
  PBGraded exceptional;

  BlowupClass& operator+=(const BlowupClass& o) {
    ambient += o.ambient;
    exceptional += o.exceptional;
    return *this;
  }
  friend BlowupClass operator+(BlowupClass a, const BlowupClass& b) { return a += b; }
  friend BlowupClass operator-(BlowupClass a, const BlowupClass& b) {
    a.ambient -= b.ambient;
    a.exceptional -= b.exceptional;
    return a;
  }
  friend BlowupClass operator*(BlowupClass a, const Rational& c) {
    a.ambient *= c;
    a.exceptional *= c;
    return a;
  }
  bool operator==(const BlowupClass& o) const = default;
};

std::string to_string(const BlowupClass& a);

class Blowup {
 public:
  /// Throws std::invalid_argument when the data fails the structure checks.
  explicit Blowup(EmbeddingData data);

  const EmbeddingData& data() const { return data_; }
  int codim() const { return data_.codim; }
  const std::shared_ptr<const ProjBundleGraded>& exceptional() const { return exceptional_; }

  GradedElement restrict_to_center(const GradedElement& alpha) const;  // i^*
  GradedElement push_from_center(const GradedElement& gamma) const;    // i_*
  PBGraded eta_pull(const GradedElement& gamma) const { return exceptional_->pullback(gamma); }
  GradedElement eta_push(const PBGraded& eps) const { return exceptional_->pushforward(eps); }
  const PBGraded& cw() const { return cw_; }

  BlowupClass zero() const;
  BlowupClass pull(const GradedElement& alpha) const;  // phi^*
  GradedElement push(const BlowupClass& a) const;      // phi_*
  BlowupClass exc_push(const PBGraded& eps) const;     // j_*, renormalised
  BlowupClass multiply(const BlowupClass& a, const BlowupClass& b) const;
  /// The normalised eps with j_*(eps) = a; requires phi_*(a) = 0.
  PBGraded delta_decompose(const BlowupClass& a) const;

  /// Canonical classes spanning CH^k(X^): phi^* of ambient monomials, then
  /// j_*(eta^*(m) xi^i) for centre monomials m and i <= r-2.
  std::vector<BlowupClass> basis(int degree) const;
  int dimension() const;

 private:
  EmbeddingData data_;
  std::shared_ptr<const ProjBundleGraded> exceptional_;
  PBGraded cw_;
  std::map<std::vector<std::uint32_t>, GradedElement> push_lookup_;
};

}  // namespace chow
