// Acceptance run: one PASS/FAIL line per criterion, each under a pinned
// wall-clock limit. Exit status is 0 only if every line passes.

#include "chow/blowup.hpp"
#include "chow/char_class.hpp"
#include "chow/mukai_flop.hpp"
#include "chow/proj_bundle.hpp"
#include "chow/sampling.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>

using namespace chow;

namespace {

using Witness = std::optional<std::string>;

struct Criterion {
  int id;
  const char* what;
  double limit_ms;
  std::function<Witness()> body;
};

std::string idx(int k) { return std::to_string(k); }

RingHandle chern_ring(const std::string& prefix, int n) {
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({prefix + idx(i), i});
  return Ring::make(gens);
}

GradedBundle formal_bundle(const RingHandle& ring, const std::string& prefix, int n) {
  std::vector<GradedElement> chern;
  for (int i = 1; i <= n; ++i) chern.push_back(GradedElement::generator(ring, prefix + idx(i)));
  return GradedBundle(GradedElement::constant(ring, 1), chern);
}

const CheckResult* first_failure(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

const CheckResult& headline(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (c.name.size() >= 9 && c.name.compare(c.name.size() - 9, 9, ".headline") == 0) return c;
  }
  throw std::logic_error("no headline check");
}

Witness binomial_claim() {
  for (int r = 0; r <= 12; ++r) {
    const auto rep = binomial_identity_check(r);
    if (!rep.ok) return "r=" + idx(r) + ": " + rep.first_failure;
  }
  return std::nullopt;
}

Witness push_table() {
  for (int n = 1; n <= 6; ++n) {
    const auto ring = chern_ring("c", n);
    const auto pb = ProjBundleGraded::make(formal_bundle(ring, "c", n));
    const auto c1 = GradedElement::generator(ring, "c1");
    if (n >= 2 && !pb->pushforward(pb->hyperplane_power(n - 2)).is_zero()) return "n=" + idx(n) + ": pi_*(h^{n-2}) != 0";
    if (pb->pushforward(pb->hyperplane_power(n - 1)) != GradedElement::constant(ring, 1)) {
      return "n=" + idx(n) + ": pi_*(h^{n-1}) != 1";
    }
    if (pb->pushforward(pb->hyperplane_power(n)) != -c1) return "n=" + idx(n) + ": pi_*(h^n) != -c1";
  }
  return std::nullopt;
}

Witness cw_unit() {
  for (int r = 1; r <= 5; ++r) {
    const auto ring = chern_ring("n", r);
    const auto e = ProjBundleGraded::make(formal_bundle(ring, "n", r), "xi");
    const auto one = GradedElement::constant(ring, 1);
    if (e->pushforward(cw_top(*e)) != one) return "r=" + idx(r) + ": eta_*(c_{r-1}(W)) = " + to_string(e->pushforward(cw_top(*e)));
    if (!(cw_top(*e) == cw_top_by_quotient(*e))) return "r=" + idx(r) + ": the two expressions for c_{r-1}(W) differ";
  }
  return std::nullopt;
}

Witness eta_prime_table() {
  for (int r = 1; r <= 5; ++r) {
    const auto ctx = FlopContext::formal(r);
    const auto c1 = ctx.pp_pull(ctx.F().c(1));
    for (int k = 0; k <= r; ++k) {
      PBGraded expected = ctx.P_prime()->zero();
      if (k == r - 1) expected = ctx.P_prime()->one();
      if (k == r) expected = ctx.l() - c1;
      if (auto w = diff_witness("r=" + idx(r) + " k=" + idx(k), eta_prime_push(ctx, ctx.E()->hyperplane_power(k)), expected)) {
        return w;
      }
    }
  }
  return std::nullopt;
}

Witness claims() {
  for (int r = 1; r <= 4; ++r) {
    const auto checks = verify_claims(FlopContext::formal(r), "r" + idx(r));
    if (const auto* f = first_failure(checks)) return f->name + ": " + f->witness;
  }
  return std::nullopt;
}

Witness headline_all() {
  for (int r = 1; r <= 4; ++r) {
    const auto ctx = FlopContext::formal(r);
    const auto checks = verify_multiplicativity(ctx, ctx.sigma_a(), ctx.sigma_b(), "r" + idx(r));
    if (const auto* f = first_failure(checks)) return f->name + ": " + f->witness;
  }
  return std::nullopt;
}

Witness blowup_instance() {
  const Blowup model(linear_blowup(4, 1));
  const auto& d = model.data();
  for (int k = 0; k <= 1; ++k) {
    const auto gamma = GradedElement::generator(d.center, "u").pow(static_cast<unsigned>(k));
    if (!(model.exc_push(model.cw() * model.eta_pull(gamma)) == model.pull(model.push_from_center(gamma)))) {
      return "key formula fails at u^" + idx(k);
    }
  }
  for (int k = 0; k <= 4; ++k) {
    const auto alpha = GradedElement::generator(d.ambient, "t").pow(static_cast<unsigned>(k));
    if (model.push(model.pull(alpha)) != alpha) return "phi_*phi^* fails at t^" + idx(k);
  }
  Sampler sampler(20240601);
  auto random_class = [&] {
    std::vector<GradedElement> coeffs;
    for (int k = 0; k < model.codim(); ++k) coeffs.push_back(sampler.element(d.center, 1));
    return model.pull(sampler.element(d.ambient, 4)) + model.exc_push(PBGraded(model.exceptional(), coeffs));
  };
  for (int t = 0; t < 200; ++t) {
    const auto a = random_class(), b = random_class(), c = random_class();
    if (!(model.multiply(model.multiply(a, b), c) == model.multiply(a, model.multiply(b, c)))) {
      return "associativity fails on triple " + idx(t);
    }
  }
  return std::nullopt;
}

Witness tau_consistency() {
  for (int r = 1; r <= 5; ++r) {
    const auto ring = chern_ring("c", r + 1);
    const auto pb = ProjBundleGraded::make(formal_bundle(ring, "c", r + 1));
    try {
      pb->tau_table(3 * r);
    } catch (const std::logic_error& e) {
      return "r=" + idx(r) + ": " + e.what();
    }
  }
  return std::nullopt;
}

Witness characteristic_classes() {
  for (int n = 1; n <= 4; ++n) {
    const auto ring = chern_ring("c", n);
    const auto f = formal_bundle(ring, "c", n);
    if (chern_times_segre(f, 8) != GradedElement::constant(ring, 1)) return "c s != 1 for rank " + idx(n);
  }
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    std::vector<Generator> gens;
    for (int i = 1; i <= p; ++i) gens.push_back({"a" + idx(i), i});
    for (int i = 1; i <= q; ++i) gens.push_back({"b" + idx(i), i});
    const auto ring = Ring::make(gens);
    const auto e = formal_bundle(ring, "a", p);
    const auto f = formal_bundle(ring, "b", q);
    const auto sum = whitney_sum(e, f);
    const std::string tag = " for ranks " + idx(p) + "+" + idx(q);
    if (!(chern_character(sum, 6) == chern_character(e, 6) + chern_character(f, 6))) return "ch not additive" + tag;
    if (!(todd_class(sum, 6) == todd_class(e, 6) * todd_class(f, 6))) return "td not multiplicative" + tag;
    const auto td = todd_class(sum, 6);
    const auto root = sqrt_one_series(td);
    if (!(root * root == td)) return "sqrt(td)^2 != td" + tag;
  }
  return std::nullopt;
}

Witness mutation_sensitivity() {
  for (int r = 2; r <= 3; ++r) {
    const auto base = FlopContext::formal(r);
    for (auto m : {Mutation::tau_entry, Mutation::segre_class, Mutation::term_b_sign}) {
      const auto ctx = base.with_mutation(m);
      const auto& h = headline(verify_multiplicativity(ctx, ctx.sigma_a(), ctx.sigma_b(), "m"));
      if (h.passed) return "mutation " + to_string(m) + " at r=" + idx(r) + " went undetected";
      if (h.witness.find("difference = ") == std::string::npos || h.witness.find("difference = 0") != std::string::npos) {
        return "mutation " + to_string(m) + " at r=" + idx(r) + " failed without a nonzero witness: " + h.witness;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "binomial claim, r <= 12", 1000, binomial_claim},
      {2, "pi_* of hyperplane powers, rank <= 6", 1000, push_table},
      {3, "eta_*(c_{r-1}(W)) = 1, r <= 5", 5000, cw_unit},
      {4, "eta'_*(H^k) table, r <= 5", 5000, eta_prime_table},
      {5, "help-sum and T1/T2 closed forms, r <= 4", 30000, claims},
      {6, "headline cancellation, formal r = 1..4", 300000, headline_all},
      {7, "blow-up of P^4 along a line", 10000, blowup_instance},
      {8, "tau recursion = reduction, i <= 3r, r <= 5", 5000, tau_consistency},
      {9, "characteristic class identities", 30000, characteristic_classes},
      {10, "three planted mutations are detected", 300000, mutation_sensitivity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Witness w;
    try {
      w = c.body();
    } catch (const std::exception& e) {
      w = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool over = ms > c.limit_ms;
    const bool ok = !w && !over;
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%.1f ms, limit %.0f ms)\n", ok ? "PASS" : "FAIL", c.id, c.what, ms, c.limit_ms);
    if (w) std::printf("  witness: %s\n", clip_witness(*w, 400).c_str());
    if (over) std::printf("  over the time limit\n");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
