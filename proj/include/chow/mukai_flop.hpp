#pragma once

// The ring tower of a Mukai flop and the symbolic verification of the
// multiplicativity identity for the flop correspondence.
//
//   S            base, F of rank r+1 with Chern classes c_1..c_{r+1}
//   P  = P(F)    hyperplane h
//   P' = P(F^)   hyperplane l
//   E  = P(G)    over P', G = Omega_{P'|S} (x) O(l), hyperplane H
//
// i^*(alpha) = sum_k pi^*(sigma_k) h^k. Every term of the identity is an
// element of CH(P') (the argument of i'_*), and equality is checked there.
//
// The context keeps its own copies of the tau table of P and of the Segre
// classes of G. Every "derived" route reads those copies, so a mutation
// planted in them has to surface in the headline comparison.

#include "chow/bundle.hpp"
#include "chow/graded_algebra.hpp"
#include "chow/proj_bundle.hpp"
#include "chow/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace chow {

using EElement = PBElement<PBGraded>;
using ProjBundleE = ProjBundle<PBGraded>;

enum class SigmaGrading { graded, ungraded };

enum class Mutation {
  none,
  tau_entry,     // tau_{r+1,r} += 1
  segre_class,   // s_1(G) += l
  term_b_sign,   // sign of the (-1)^j l^j sum in the closed form of term B
};

std::string to_string(Mutation m);

/// sigma_0..sigma_r in CH(S).
struct SigmaVector {
  std::vector<GradedElement> values;

  const GradedElement& operator[](std::size_t k) const { return values[k]; }
  std::size_t size() const { return values.size(); }
  SigmaVector operator+(const SigmaVector& o) const;
};

class FlopContext {
 public:
  /// CH(S) = Q[c1..c{r+1}, a0..ar, b0..br]; deg ci = i, deg ak = deg bk = r-k
  /// (graded) or 0 (ungraded). a and b are the formal sigma vectors.
  static FlopContext formal(int r, SigmaGrading grading = SigmaGrading::graded);
  /// User-supplied c_1..c_{r+1}; throws std::invalid_argument on wrong degrees.
  static FlopContext numeric(RingHandle ring, std::vector<GradedElement> chern);

  FlopContext with_mutation(Mutation m) const;
  /// Same base ring, F replaced by its dual (P and P' swap roles).
  FlopContext dual() const;

  int r() const { return r_; }
  Mutation mutation() const { return mutation_; }
  const RingHandle& base_ring() const { return ring_; }
  const BundleClass<GradedElement>& F() const { return P_->bundle(); }
  const std::shared_ptr<const ProjBundleGraded>& P() const { return P_; }
  const std::shared_ptr<const ProjBundleGraded>& P_prime() const { return Pp_; }
  const std::shared_ptr<const ProjBundleE>& E() const { return E_; }
  const BundleClass<PBGraded>& G() const { return E_->bundle(); }

  PBGraded l() const { return Pp_->hyperplane(); }
  PBGraded l_power(int k) const { return Pp_->hyperplane_power(k); }
  EElement H() const { return E_->hyperplane(); }
  EElement L() const { return E_->pullback(l()); }
  PBGraded pp_pull(const GradedElement& s) const { return Pp_->pullback(s); }  // pi'^*
  EElement e_pull(const PBGraded& x) const { return E_->pullback(x); }         // eta'^*

  /// Formal sigma vectors a and b (formal contexts only).
  SigmaVector sigma_a() const;
  SigmaVector sigma_b() const;
  bool formal_mode() const { return formal_; }
  SigmaGrading grading() const { return grading_; }

  /// tau_{i,j} of P, rows 0..2r (possibly mutated).
  const TauTable<GradedElement>& tau() const { return *tau_; }
  /// s_0..s_{r+1} of G (possibly mutated).
  const std::vector<PBGraded>& segre_G() const { return segre_G_; }

 private:
  FlopContext() = default;
  static FlopContext build(RingHandle ring, std::vector<GradedElement> chern);

  int r_ = 0;
  bool formal_ = false;
  SigmaGrading grading_ = SigmaGrading::graded;
  Mutation mutation_ = Mutation::none;
  RingHandle ring_;
  std::shared_ptr<const ProjBundleGraded> P_;
  std::shared_ptr<const ProjBundleGraded> Pp_;
  std::shared_ptr<const ProjBundleE> E_;
  std::optional<TauTable<GradedElement>> tau_;
  std::vector<PBGraded> segre_G_;
};

/// c_i(G) = sum_m (-1)^m l^m pi'^*c_{i-m}(F), i = 1..r.
std::vector<PBGraded> g_chern_formula(const FlopContext& ctx);

/// E_alpha = eta'^*pi'^*(sigma_k) H^k summed and reduced; throws unless size r+1.
EElement e_class(const FlopContext& ctx, const SigmaVector& sigma);
/// eta'_*: the coefficient of H^{r-1}.
PBGraded eta_prime_push(const FlopContext& ctx, const EElement& x);
/// eta'_*(H^k) = s_{k-r+1}(G) from the context's Segre classes.
PBGraded eta_prime_push_power(const FlopContext& ctx, int k);

/// pi'^*(sum_{k,j} sigma_k sigma_j tau_{k+j,r}).
PBGraded sigma_top_product(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b);
/// Same class from the top coefficient of the product in CH(P).
PBGraded sigma_top_product_by_product(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b);

/// Term A in closed form: the top sigma product plus the a_r b_j l^j sum.
PBGraded term_a_closed(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b);
/// Term A before simplification: the double sum over eta'_*(H^{k+j-i-1}).
PBGraded term_a_derived(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b);
/// Term A through E_alpha and products in CH(E).
PBGraded term_a_by_e_ring(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b);

/// T_1(j, r-q) = sum_n c_{r-n}(G) pi'^*(tau_{n+j, r-q}).
PBGraded t1_defining(const FlopContext& ctx, int j, int q);
/// (-1)^j l^j sum_m (-1)^m l^m pi'^*c_{q-m}(F).
PBGraded t1_closed(const FlopContext& ctx, int j, int q);
/// T_2 = sum_n (-1)^{n-1} l^n c_{r-n}(G).
PBGraded t2_defining(const FlopContext& ctx);
/// sum_m (-1)^{m-1} (m+1) l^m pi'^*c_{r-m}(F).
PBGraded t2_closed(const FlopContext& ctx);

/// Term B in closed form.
PBGraded term_b_closed(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b);
/// Term B from T_1 and T_2 in their defining form.
PBGraded term_b_derived(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b);
/// Term B before the help-sum simplification, through eta'_*(H^m).
PBGraded term_b_raw(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b);

/// c_r(Omega_{P'|S}) expanded as sum_m (-1)^m (m+1) pi'^*c_{r-m}(F) l^m.
PBGraded omega_top_expansion(const FlopContext& ctx);
/// Term C: pi'^*(a_r b_r) c_r(Omega_{P'|S}), with c_r read from the cotangent bundle of P'.
PBGraded term_c(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b);
PBGraded term_c_expansion(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b);

/// Both sides of the help-sum identity for (j, k).
PBGraded help_sum_lhs(const FlopContext& ctx, int j, int k);
PBGraded help_sum_rhs(const FlopContext& ctx, int j, int k);

/// pi'^*(sigma_r); the phi'_*phi^* summand of [Z]_* is not modelled.
PBGraded zstar_correction(const FlopContext& ctx, const SigmaVector& sigma);

/// Every route comparison and the headline cancellation for one pair.
std::vector<CheckResult> verify_multiplicativity(const FlopContext& ctx, const SigmaVector& a,
                                                 const SigmaVector& b, const std::string& prefix);
/// Foundational identities of the tower.
std::vector<CheckResult> verify_foundations(const FlopContext& ctx, const std::string& prefix);
/// Help-sum claim for j + k <= 2r, and T_1 / T_2 closed forms for j, q <= r.
std::vector<CheckResult> verify_claims(const FlopContext& ctx, const std::string& prefix);

/// Difference rendered for a witness, or std::nullopt when a == b.
std::optional<std::string> diff_witness(const std::string& what, const PBGraded& a, const PBGraded& b);

}  // namespace chow
