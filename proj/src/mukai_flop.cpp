#include "chow/mukai_flop.hpp"

#include "chow/blowup.hpp"

#include <stdexcept>

namespace chow {

std::string to_string(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::tau_entry: return "tau_entry";
    case Mutation::segre_class: return "segre_class";
    case Mutation::term_b_sign: return "term_b_sign";
  }
  return "unknown";
}

SigmaVector SigmaVector::operator+(const SigmaVector& o) const {
  if (o.size() != size()) throw std::invalid_argument("sigma vectors of different length");
  SigmaVector out = *this;
  for (std::size_t k = 0; k < size(); ++k) out.values[k] += o.values[k];
  return out;
}

namespace {

std::string idx(int k) { return std::to_string(k); }

void require_sigma(const FlopContext& ctx, const SigmaVector& s) {
  if (static_cast<int>(s.size()) != ctx.r() + 1) {
    throw std::invalid_argument("sigma vector needs r+1 = " + idx(ctx.r() + 1) + " entries, got " +
                                idx(static_cast<int>(s.size())));
  }
}

// Shared by the context builder (before the context exists) and g_chern_formula.
std::vector<PBGraded> g_chern_over(const ProjBundleGraded& pp, const BundleClass<GradedElement>& f) {
  const int r = f.rank() - 1;
  std::vector<PBGraded> out;
  for (int i = 1; i <= r; ++i) {
    auto ci = pp.zero();
    for (int m = 0; m <= i; ++m) ci += pp.pullback(f.c(i - m)) * pp.hyperplane_power(m) * sign_power(m);
    out.push_back(std::move(ci));
  }
  return out;
}

PBGraded pp_pull_product(const FlopContext& ctx, const GradedElement& x, const GradedElement& y) {
  return ctx.pp_pull(x * y);
}

}  // namespace

FlopContext FlopContext::build(RingHandle ring, std::vector<GradedElement> chern) {
  if (chern.size() < 2) throw std::invalid_argument("F needs rank r+1 >= 2");
  for (const auto& c : chern) {
    if (!c.ring()->same_as(*ring)) throw RingMismatch("Chern classes must live in the base ring");
  }
  FlopContext ctx;
  ctx.r_ = static_cast<int>(chern.size()) - 1;
  ctx.ring_ = ring;
  BundleClass<GradedElement> f(GradedElement::constant(ring, 1), std::move(chern));
  ctx.P_ = ProjBundleGraded::make(f, "h");
  ctx.Pp_ = ProjBundleGraded::make(dual_bundle(f), "l");
  ctx.E_ = ProjBundleE::make(BundleClass<PBGraded>(ctx.Pp_->one(), g_chern_over(*ctx.Pp_, f)), "H");
  ctx.tau_ = ctx.P_->tau_table(2 * ctx.r_);
  ctx.segre_G_ = segre_classes(ctx.E_->bundle(), ctx.r_ + 1);
  return ctx;
}

FlopContext FlopContext::formal(int r, SigmaGrading grading) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  std::vector<Generator> gens;
  for (int i = 1; i <= r + 1; ++i) gens.push_back({"c" + idx(i), i});
  for (const char* side : {"a", "b"}) {
    for (int k = 0; k <= r; ++k) gens.push_back({side + idx(k), grading == SigmaGrading::graded ? r - k : 0});
  }
  auto ring = Ring::make(std::move(gens));
  std::vector<GradedElement> chern;
  for (int i = 1; i <= r + 1; ++i) chern.push_back(GradedElement::generator(ring, "c" + idx(i)));
  auto ctx = build(ring, std::move(chern));
  ctx.formal_ = true;
  ctx.grading_ = grading;
  return ctx;
}

FlopContext FlopContext::numeric(RingHandle ring, std::vector<GradedElement> chern) {
  return build(std::move(ring), std::move(chern));
}

FlopContext FlopContext::with_mutation(Mutation m) const {
  FlopContext out = *this;
  out.mutation_ = m;
  switch (m) {
    case Mutation::none:
    case Mutation::term_b_sign:
      break;
    case Mutation::tau_entry:
      out.tau_->mutable_entry(r_ + 1, r_) += GradedElement::constant(ring_, 1);
      break;
    case Mutation::segre_class:
      out.segre_G_.at(1) += l();
      break;
  }
  return out;
}

FlopContext FlopContext::dual() const {
  auto out = build(ring_, dual_bundle(F()).chern());
  out.formal_ = formal_;
  out.grading_ = grading_;
  return out;
}

SigmaVector FlopContext::sigma_a() const {
  if (!formal_) throw std::logic_error("formal sigma vectors exist only in formal mode");
  SigmaVector s;
  for (int k = 0; k <= r_; ++k) s.values.push_back(GradedElement::generator(ring_, "a" + idx(k)));
  return s;
}

SigmaVector FlopContext::sigma_b() const {
  if (!formal_) throw std::logic_error("formal sigma vectors exist only in formal mode");
  SigmaVector s;
  for (int k = 0; k <= r_; ++k) s.values.push_back(GradedElement::generator(ring_, "b" + idx(k)));
  return s;
}

std::vector<PBGraded> g_chern_formula(const FlopContext& ctx) { return g_chern_over(*ctx.P_prime(), ctx.F()); }

EElement e_class(const FlopContext& ctx, const SigmaVector& sigma) {
  require_sigma(ctx, sigma);
  auto out = ctx.E()->zero();
  for (int k = 0; k <= ctx.r(); ++k) {
    out += ctx.e_pull(ctx.pp_pull(sigma[static_cast<std::size_t>(k)])) * ctx.E()->hyperplane_power(k);
  }
  return out;
}

PBGraded eta_prime_push(const FlopContext& ctx, const EElement& x) { return ctx.E()->pushforward(x); }

PBGraded eta_prime_push_power(const FlopContext& ctx, int k) {
  const int shift = k - (ctx.r() - 1);
  if (shift < 0) return ctx.P_prime()->zero();
  const auto& s = ctx.segre_G();
  if (shift < static_cast<int>(s.size())) return s[static_cast<std::size_t>(shift)];
  return segre_classes(ctx.G(), shift).back();
}

PBGraded sigma_top_product(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b) {
  require_sigma(ctx, a);
  require_sigma(ctx, b);
  GradedElement acc(ctx.base_ring());
  for (int k = 0; k <= ctx.r(); ++k) {
    for (int j = 0; j <= ctx.r(); ++j) {
      const auto& t = ctx.tau()(k + j, ctx.r());
      if (t.is_zero()) continue;
      acc += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(j)] * t;
    }
  }
  return ctx.pp_pull(acc);
}

PBGraded sigma_top_product_by_product(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b) {
  require_sigma(ctx, a);
  require_sigma(ctx, b);
  const auto& P = *ctx.P();
  const auto product = P.from_coefficients(a.values) * P.from_coefficients(b.values);
  return ctx.pp_pull(P.pushforward(product));
}

PBGraded help_sum_lhs(const FlopContext& ctx, int j, int k) {
  auto out = ctx.P_prime()->zero();
  for (int i = 0; i <= j - 1; ++i) {
    out += ctx.l_power(i) * eta_prime_push_power(ctx, k + j - i - 1) * sign_power(i);
  }
  return out;
}

PBGraded help_sum_rhs(const FlopContext& ctx, int j, int k) {
  const int r = ctx.r();
  return ctx.pp_pull(ctx.tau()(k + j, r)) + ctx.l_power(j) * ctx.pp_pull(ctx.tau()(k, r)) * sign_power(j - 1);
}

PBGraded term_a_closed(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b) {
  const int r = ctx.r();
  auto out = sigma_top_product(ctx, a, b);
  for (int j = 0; j <= r; ++j) {
    out += pp_pull_product(ctx, a[static_cast<std::size_t>(r)], b[static_cast<std::size_t>(j)]) * ctx.l_power(j) *
           sign_power(j - 1);
  }
  return out;
}

PBGraded term_a_derived(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b) {
  require_sigma(ctx, a);
  require_sigma(ctx, b);
  const int r = ctx.r();
  auto out = ctx.P_prime()->zero();
  for (int k = 0; k <= r; ++k) {
    for (int j = 1; j <= r; ++j) {
      const auto coeff = a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(j)];
      if (coeff.is_zero()) continue;
      out += ctx.pp_pull(coeff) * help_sum_lhs(ctx, j, k);
    }
  }
  return out;
}

PBGraded term_a_by_e_ring(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b) {
  require_sigma(ctx, b);
  const int r = ctx.r();
  const auto e_alpha = e_class(ctx, a);
  std::vector<PBGraded> pushed;  // eta'_*(E_alpha H^m), m = 0..r-1
  for (int m = 0; m <= r - 1; ++m) pushed.push_back(eta_prime_push(ctx, e_alpha * ctx.E()->hyperplane_power(m)));
  auto out = ctx.P_prime()->zero();
  for (int j = 1; j <= r; ++j) {
    auto inner = ctx.P_prime()->zero();
    for (int i = 0; i <= j - 1; ++i) {
      inner += ctx.l_power(i) * pushed[static_cast<std::size_t>(j - i - 1)] * sign_power(i);
    }
    out += ctx.pp_pull(b[static_cast<std::size_t>(j)]) * inner;
  }
  return out;
}

PBGraded t1_defining(const FlopContext& ctx, int j, int q) {
  const int r = ctx.r();
  auto out = ctx.P_prime()->zero();
  for (int n = 0; n <= r; ++n) {
    const auto& t = ctx.tau()(n + j, r - q);
    if (t.is_zero()) continue;
    out += ctx.G().c(r - n) * ctx.pp_pull(t);
  }
  return out;
}

PBGraded t1_closed(const FlopContext& ctx, int j, int q) {
  auto inner = ctx.P_prime()->zero();
  for (int m = 0; m <= q; ++m) inner += ctx.l_power(m) * ctx.pp_pull(ctx.F().c(q - m)) * sign_power(m);
  return ctx.l_power(j) * inner * sign_power(j);
}

PBGraded t2_defining(const FlopContext& ctx) {
  const int r = ctx.r();
  auto out = ctx.P_prime()->zero();
  for (int n = 0; n <= r; ++n) out += ctx.l_power(n) * ctx.G().c(r - n) * sign_power(n - 1);
  return out;
}

PBGraded t2_closed(const FlopContext& ctx) {
  const int r = ctx.r();
  auto out = ctx.P_prime()->zero();
  for (int m = 0; m <= r; ++m) {
    out += ctx.l_power(m) * ctx.pp_pull(ctx.F().c(r - m)) * (sign_power(m - 1) * Rational(m + 1));
  }
  return out;
}

PBGraded term_b_closed(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b) {
  require_sigma(ctx, a);
  require_sigma(ctx, b);
  const int r = ctx.r();
  const auto& ar = a[static_cast<std::size_t>(r)];
  const Rational flip = ctx.mutation() == Mutation::term_b_sign ? Rational(-1) : Rational(1);
  auto out = ctx.P_prime()->zero();
  for (int j = 0; j <= r; ++j) {
    out += pp_pull_product(ctx, ar, b[static_cast<std::size_t>(j)]) * ctx.l_power(j) * (sign_power(j) * flip);
  }
  return out + pp_pull_product(ctx, ar, b[static_cast<std::size_t>(r)]) * t2_closed(ctx);
}

PBGraded term_b_derived(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b) {
  require_sigma(ctx, a);
  require_sigma(ctx, b);
  const int r = ctx.r();
  const auto& ar = a[static_cast<std::size_t>(r)];
  auto out = ctx.P_prime()->zero();
  for (int j = 0; j <= r; ++j) out += pp_pull_product(ctx, ar, b[static_cast<std::size_t>(j)]) * t1_defining(ctx, j, 0);
  return out + pp_pull_product(ctx, ar, b[static_cast<std::size_t>(r)]) * t2_defining(ctx);
}

PBGraded term_b_raw(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b) {
  require_sigma(ctx, a);
  require_sigma(ctx, b);
  const int r = ctx.r();
  const auto& ar = a[static_cast<std::size_t>(r)];
  auto out = ctx.P_prime()->zero();
  for (int j = 0; j <= r; ++j) {
    auto inner = ctx.P_prime()->zero();
    for (int n = 1; n <= r; ++n) inner += ctx.G().c(r - n) * help_sum_lhs(ctx, n, j);
    out += pp_pull_product(ctx, ar, b[static_cast<std::size_t>(j)]) * inner;
  }
  return out;
}

PBGraded omega_top_expansion(const FlopContext& ctx) {
  const int r = ctx.r();
  auto out = ctx.P_prime()->zero();
  for (int m = 0; m <= r; ++m) {
    out += ctx.pp_pull(ctx.F().c(r - m)) * ctx.l_power(m) * (sign_power(m) * Rational(m + 1));
  }
  return out;
}

PBGraded term_c(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b) {
  require_sigma(ctx, a);
  require_sigma(ctx, b);
  const auto r = static_cast<std::size_t>(ctx.r());
  return pp_pull_product(ctx, a[r], b[r]) * ctx.P_prime()->cotangent_chern(ctx.r());
}

PBGraded term_c_expansion(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b) {
  require_sigma(ctx, a);
  require_sigma(ctx, b);
  const auto r = static_cast<std::size_t>(ctx.r());
  return pp_pull_product(ctx, a[r], b[r]) * omega_top_expansion(ctx);
}

PBGraded zstar_correction(const FlopContext& ctx, const SigmaVector& sigma) {
  require_sigma(ctx, sigma);
  return ctx.pp_pull(sigma[static_cast<std::size_t>(ctx.r())]);
}

std::optional<std::string> diff_witness(const std::string& what, const PBGraded& a, const PBGraded& b) {
  if (a == b) return std::nullopt;
  return what + ": difference = " + to_string(a - b);
}

namespace {

using Witness = std::optional<std::string>;

Witness first_of(std::initializer_list<Witness> ws) {
  for (const auto& w : ws) {
    if (w) return w;
  }
  return std::nullopt;
}

}  // namespace

std::vector<CheckResult> verify_multiplicativity(const FlopContext& ctx, const SigmaVector& a, const SigmaVector& b,
                                                 const std::string& prefix) {
  std::vector<CheckResult> out;
  const auto rhs = sigma_top_product(ctx, a, b);
  const auto a_closed = term_a_closed(ctx, a, b);
  const auto a_derived = term_a_derived(ctx, a, b);
  const auto b_closed = term_b_closed(ctx, a, b);
  const auto b_derived = term_b_derived(ctx, a, b);
  const auto c_lemma = term_c(ctx, a, b);
  const auto c_expanded = term_c_expansion(ctx, a, b);

  out.push_back(run_check(prefix + ".rhs.routes", "rhs-final-form", [&] {
    return diff_witness("tau route - product route", rhs, sigma_top_product_by_product(ctx, a, b));
  }));
  out.push_back(run_check(prefix + ".term_a.routes", "term-a-final-form", [&] {
    return first_of({diff_witness("closed - derived", a_closed, a_derived),
                     diff_witness("derived - E-ring", a_derived, term_a_by_e_ring(ctx, a, b))});
  }));
  out.push_back(run_check(prefix + ".term_b.routes", "term-b-final-form", [&] {
    return first_of({diff_witness("closed - derived", b_closed, b_derived),
                     diff_witness("derived - raw", b_derived, term_b_raw(ctx, a, b))});
  }));
  out.push_back(run_check(prefix + ".term_c.routes", "term-c-final-form", [&] {
    return diff_witness("cotangent lemma - expansion", c_lemma, c_expanded);
  }));
  if (ctx.formal_mode() && ctx.grading() == SigmaGrading::graded) {
    out.push_back(run_check(prefix + ".homogeneity", "aim", [&]() -> Witness {
      const int r = ctx.r();
      const std::pair<const char*, const PBGraded*> parts[] = {
          {"rhs", &rhs}, {"term_a", &a_closed}, {"term_b", &b_closed}, {"term_c", &c_lemma}};
      for (const auto& [name, value] : parts) {
        if (!is_homogeneous(*value, r)) return std::string(name) + " is not homogeneous of degree " + idx(r);
      }
      return std::nullopt;
    }));
  }
  out.push_back(run_check(prefix + ".headline", "aim", [&] {
    return first_of({diff_witness("closed forms: term_a + term_b + term_c - rhs", a_closed + b_closed + c_lemma, rhs),
                     diff_witness("derived routes: term_a + term_b + term_c - rhs",
                                  a_derived + b_derived + c_expanded, rhs)});
  }));
  return out;
}

std::vector<CheckResult> verify_foundations(const FlopContext& ctx, const std::string& prefix) {
  std::vector<CheckResult> out;
  const int r = ctx.r();
  const auto& Pp = *ctx.P_prime();
  const auto& E = *ctx.E();

  out.push_back(run_check(prefix + ".eta_push_table", "eta-push-table", [&]() -> Witness {
    for (int k = 0; k <= r; ++k) {
      PBGraded expected = Pp.zero();
      if (k == r - 1) expected = Pp.one();
      if (k == r) expected = ctx.l() - ctx.pp_pull(ctx.F().c(1));
      if (auto w = diff_witness("Segre route at k=" + idx(k), eta_prime_push_power(ctx, k), expected)) return w;
      if (auto w = diff_witness("E route at k=" + idx(k), eta_prime_push(ctx, E.hyperplane_power(k)), expected)) return w;
    }
    return std::nullopt;
  }));

  out.push_back(run_check(prefix + ".g_chern", "twist-lemma", [&]() -> Witness {
    const auto formula = g_chern_formula(ctx);
    const auto euler = tensor_by_line(Pp.euler_cotangent(), ctx.l());
    for (int i = 1; i <= r; ++i) {
      const auto& f = formula[static_cast<std::size_t>(i - 1)];
      if (auto w = diff_witness("c_" + idx(i) + "(G): formula - stored", f, ctx.G().c(i))) return w;
      if (auto w = diff_witness("c_" + idx(i) + "(G): formula - Euler sequence", f, euler.c(i))) return w;
      if (auto w = diff_witness("c_" + idx(i) + "(G): formula - cotangent twist", f, Pp.cotangent_twist_chern(i))) return w;
    }
    return std::nullopt;
  }));

  out.push_back(run_check(prefix + ".e_relation", "chern-class-identity", [&]() -> Witness {
    // The class H also comes from P, so it satisfies the relation of h.
    auto rel = E.zero();
    for (int i = 0; i <= r + 1; ++i) rel += ctx.e_pull(ctx.pp_pull(ctx.F().c(i))) * E.hyperplane_power(r + 1 - i);
    if (!rel.is_zero()) return "sum_i c_i(F) H^{r+1-i} = " + to_string(rel);
    E.tau_table(2 * r);  // throws on disagreement of the two reduction routes
    return std::nullopt;
  }));

  out.push_back(run_check(prefix + ".first_chern_zeta", "first-chern-classes", [&]() -> Witness {
    // zeta = H + L is the tautological class of P(Omega_{P'|S}).
    const auto zeta = ctx.H() + ctx.L();
    auto rel = E.zero();
    for (int n = 0; n <= r; ++n) rel += ctx.e_pull(Pp.cotangent_chern(r - n)) * zeta.pow(static_cast<unsigned>(n));
    if (!rel.is_zero()) return "sum_n c_{r-n}(Omega) (H+L)^n = " + to_string(rel);
    return std::nullopt;
  }));

  out.push_back(run_check(prefix + ".cw_unit", "cw-push-unit", [&]() -> Witness {
    const auto zeta = ctx.H() + ctx.L();
    auto cw = E.zero();
    for (int m = 0; m <= r - 1; ++m) cw += ctx.e_pull(Pp.cotangent_chern(r - 1 - m)) * zeta.pow(static_cast<unsigned>(m));
    if (auto w = diff_witness("eta'_*(c_{r-1}(W)) via H+L", eta_prime_push(ctx, cw), Pp.one())) return w;
    return diff_witness("eta'_*(c_{r-1}(W)) via G", eta_prime_push(ctx, cw_top(E)), Pp.one());
  }));

  out.push_back(run_check(prefix + ".fibre_square", "fibre-square", [&]() -> Witness {
    std::vector<SigmaVector> samples;
    for (int k = 0; k <= r; ++k) {
      SigmaVector unit;
      for (int j = 0; j <= r; ++j) {
        unit.values.push_back(j == k ? GradedElement::constant(ctx.base_ring(), 1) : GradedElement(ctx.base_ring()));
      }
      samples.push_back(std::move(unit));
    }
    if (ctx.formal_mode()) samples.push_back(ctx.sigma_a());
    for (const auto& s : samples) {
      GradedElement lhs(ctx.base_ring());
      for (int k = 0; k <= r; ++k) lhs += s[static_cast<std::size_t>(k)] * ctx.P()->pushforward_power(k);
      if (auto w = diff_witness("pi'^*pi_*(i^*alpha) - pi'^*(sigma_r)", ctx.pp_pull(lhs), zstar_correction(ctx, s))) {
        return w;
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(prefix + ".context_tables", "tau-recursion", [&]() -> Witness {
    const auto rows = ctx.P()->tau_by_reduction(2 * r);
    for (int i = 0; i <= 2 * r; ++i) {
      for (int j = 0; j <= r; ++j) {
        if (!(ctx.tau()(i, j) == rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) {
          return "tau(" + idx(i) + "," + idx(j) + ") = " + to_string(ctx.tau()(i, j)) + " but reduction gives " +
                 to_string(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
      }
    }
    const auto& s = ctx.segre_G();
    for (int k = 1; k < static_cast<int>(s.size()); ++k) {
      auto acc = Pp.zero();
      for (int i = 0; i <= k; ++i) acc += ctx.G().c(i) * s[static_cast<std::size_t>(k - i)];
      if (!acc.is_zero()) return "(c(G) s(G))_" + idx(k) + " = " + to_string(acc);
    }
    return std::nullopt;
  }));

  out.push_back(run_check(prefix + ".symmetry", "symmetry", [&]() -> Witness {
    const auto swapped = ctx.dual();
    if (!(swapped.P_prime()->bundle() == ctx.F())) return std::string("P' of the dual context is not P(F)");
    const auto& Pd = *swapped.P_prime();
    for (int k = 0; k <= r; ++k) {
      PBGraded expected = Pd.zero();
      if (k == r - 1) expected = Pd.one();
      if (k == r) expected = swapped.l() + swapped.pp_pull(ctx.F().c(1));
      if (auto w = diff_witness("dual context eta_*(H^" + idx(k) + ")",
                                eta_prime_push(swapped, swapped.E()->hyperplane_power(k)), expected)) {
        return w;
      }
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckResult> verify_claims(const FlopContext& ctx, const std::string& prefix) {
  std::vector<CheckResult> out;
  const int r = ctx.r();
  out.push_back(run_check(prefix + ".help_sum", "help-sum-claim", [&]() -> Witness {
    for (int j = 0; j <= 2 * r; ++j) {
      for (int k = 0; j + k <= 2 * r; ++k) {
        if (auto w = diff_witness("j=" + idx(j) + ", k=" + idx(k), help_sum_lhs(ctx, j, k), help_sum_rhs(ctx, j, k))) {
          return w;
        }
      }
    }
    return std::nullopt;
  }));
  out.push_back(run_check(prefix + ".t1", "t1-claim", [&]() -> Witness {
    for (int j = 0; j <= r; ++j) {
      for (int q = 0; q <= r; ++q) {
        if (auto w = diff_witness("T1(" + idx(j) + ", r-" + idx(q) + ")", t1_defining(ctx, j, q), t1_closed(ctx, j, q))) {
          return w;
        }
      }
    }
    return std::nullopt;
  }));
  out.push_back(run_check(prefix + ".t2", "t2-closed-form", [&] {
    return diff_witness("T2 defining - closed", t2_defining(ctx), t2_closed(ctx));
  }));
  return out;
}

}  // namespace chow
