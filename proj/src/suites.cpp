#include "chow/suites.hpp"

#include "chow/blowup.hpp"
#include "chow/char_class.hpp"
#include "chow/mukai_flop.hpp"
#include "chow/proj_bundle.hpp"
#include "chow/sampling.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#ifdef CHOW_HAVE_OPENMP
#include <omp.h>
#endif

namespace chow {

namespace {

using Witness = std::optional<std::string>;

struct Task {
  std::string label;
  std::function<std::vector<CheckResult>()> run;
};

std::string idx(long k) { return std::to_string(k); }

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw UsageError("option '" + key + "' expects an integer, got '" + value + "'");
  }
}

// Deterministic per-task seed, independent of scheduling order.
std::uint64_t task_seed(std::uint64_t base, std::uint64_t suite, std::uint64_t r) {
  return base ^ (0x9E3779B97F4A7C15ull * (suite * 131 + r + 1));
}

RingHandle numeric_ring() { return Ring::make({{"x", 1}, {"y", 2}}); }

std::vector<GradedElement> random_chern(Sampler& s, const RingHandle& ring, int rank) {
  std::vector<GradedElement> out;
  for (int i = 1; i <= rank; ++i) out.push_back(s.homogeneous(ring, i));
  return out;
}

std::vector<GradedElement> formal_chern(const RingHandle& ring, const std::string& prefix, int rank) {
  std::vector<GradedElement> out;
  for (int i = 1; i <= rank; ++i) out.push_back(GradedElement::generator(ring, prefix + idx(i)));
  return out;
}

/// Folds per-trial results with equal names into one check each.
std::vector<CheckResult> fold_trials(const std::vector<std::vector<CheckResult>>& trials) {
  std::map<std::string, CheckResult> merged;
  for (std::size_t t = 0; t < trials.size(); ++t) {
    for (const auto& c : trials[t]) {
      const std::string tag = "trial " + idx(static_cast<long>(t)) + ": ";
      auto [it, inserted] = merged.try_emplace(c.name, c);
      auto& m = it->second;
      if (inserted) {
        if (!c.passed) m.witness = tag + c.witness;
        continue;
      }
      m.millis += c.millis;
      if (!c.passed && m.passed) {
        m.passed = false;
        m.witness = tag + c.witness;
      }
    }
  }
  std::vector<CheckResult> out;
  for (auto& [name, c] : merged) out.push_back(std::move(c));
  return out;
}

// ---------------------------------------------------------------- binomial

void binomial_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  std::vector<int> rs;
  if (cfg.r_max) {
    for (int r = 0; r <= *cfg.r_max; ++r) rs.push_back(r);
  } else {
    rs.push_back(cfg.r);
  }
  for (int r : rs) {
    tasks.push_back({"binomial.r" + idx(r), [r] {
                       return std::vector<CheckResult>{run_check("binomial.r" + idx(r), "binomial-claim", [r]() -> Witness {
                         const auto rep = binomial_identity_check(r);
                         if (rep.ok) return std::nullopt;
                         return rep.first_failure;
                       })};
                     }});
  }
}

// -------------------------------------------------------------- projbundle

std::vector<CheckResult> projbundle_checks(const BundleClass<GradedElement>& f, const std::string& prefix,
                                           Sampler& sampler) {
  const auto P = ProjBundleGraded::make(f, "h");
  const int n = P->rank();
  const auto& ring = f.one().ring();
  std::vector<CheckResult> out;

  out.push_back(run_check(prefix + ".push_table", "segre-pushforward", [&]() -> Witness {
    for (int k = std::max(0, n - 2); k <= n; ++k) {
      GradedElement expected(ring);
      if (k == n - 1) expected = f.one();
      if (k == n) expected = -f.c(1);
      const auto segre = P->pushforward_power(k);
      if (segre != expected) return "pi_*(h^" + idx(k) + ") = " + to_string(segre) + ", expected " + to_string(expected);
    }
    for (int k = 0; k <= 2 * n; ++k) {
      const auto by_segre = P->pushforward_power(k);
      const auto by_reduction = P->pushforward(P->hyperplane_power(k));
      if (by_segre != by_reduction) {
        return "pi_*(h^" + idx(k) + "): Segre " + to_string(by_segre) + " vs reduction " + to_string(by_reduction);
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(prefix + ".tau_routes", "tau-recursion", [&]() -> Witness {
    const auto tau = P->tau_table(3 * n);  // throws on any disagreement
    for (int i = 0; i <= 3 * n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto& t = tau(i, j);
        if (i < n && t != (i == j ? f.one() : GradedElement(ring))) return "tau(" + idx(i) + "," + idx(j) + ") is not delta";
        if (i == n && t != -f.c(n - j)) return "tau(n," + idx(j) + ") != -c_{n-j}";
        if (!t.is_homogeneous(i - j)) return "tau(" + idx(i) + "," + idx(j) + ") not homogeneous of degree i-j";
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(prefix + ".segre", "segre-classes", [&]() -> Witness {
    const auto s = segre_classes(f, 2 * n);
    for (int k = 1; k <= 2 * n; ++k) {
      GradedElement acc(ring);
      for (int i = 0; i <= k; ++i) acc += f.c(i) * s[static_cast<std::size_t>(k - i)];
      if (!acc.is_zero()) return "(c s)_" + idx(k) + " = " + to_string(acc);
    }
    if (s[1] != -f.c(1)) return "s_1 != -c_1";
    return std::nullopt;
  }));

  if (n >= 2) {
    out.push_back(run_check(prefix + ".cotangent", "cotangent-lemma", [&]() -> Witness {
      const auto euler = P->euler_cotangent();
      const auto twisted = tensor_by_line(euler, P->hyperplane());
      for (int i = 0; i <= n - 1; ++i) {
        if (!(P->cotangent_chern(i) == euler.c(i))) {
          return "c_" + idx(i) + "(Omega): lemma " + to_string(P->cotangent_chern(i)) + " vs Euler " + to_string(euler.c(i));
        }
        if (!(P->cotangent_twist_chern(i) == twisted.c(i))) return "c_" + idx(i) + "(Omega(1)) disagrees with the twist";
      }
      return std::nullopt;
    }));
  }

  out.push_back(run_check(prefix + ".cw_unit", "cw-push-unit", [&]() -> Witness {
    const auto cw = cw_top(*P);
    if (!(cw == cw_top_by_quotient(*P))) {
      return "alternating form " + to_string(cw) + " vs quotient form " + to_string(cw_top_by_quotient(*P));
    }
    const auto pushed = P->pushforward(cw);
    if (pushed != f.one()) return "eta_*(c_{r-1}(W)) = " + to_string(pushed);
    return std::nullopt;
  }));

  out.push_back(run_check(prefix + ".projection_formula", "projection-formula", [&]() -> Witness {
    for (int t = 0; t < 4; ++t) {
      const auto a = sampler.element(ring, 2);
      PBGraded x = P->zero();
      for (int k = 0; k < n; ++k) x += P->pullback(sampler.element(ring, 2)) * P->hyperplane_power(k);
      const auto lhs = P->pushforward(P->pullback(a) * x);
      const auto rhs = a * P->pushforward(x);
      if (lhs != rhs) return "pi_*(pi^*a x) = " + to_string(lhs) + " but a pi_*x = " + to_string(rhs);
    }
    return std::nullopt;
  }));
  return out;
}

void projbundle_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  for (int n : r_values(cfg)) {
    const std::string prefix = "projbundle.n" + idx(n);
    if (cfg.mode == Mode::formal) {
      tasks.push_back({prefix, [n, prefix, &cfg] {
                         std::vector<Generator> gens;
                         for (int i = 1; i <= n; ++i) gens.push_back({"c" + idx(i), i});
                         const auto ring = Ring::make(gens);
                         Sampler sampler(task_seed(cfg.seed, 1, static_cast<std::uint64_t>(n)));
                         BundleClass<GradedElement> f(GradedElement::constant(ring, 1), formal_chern(ring, "c", n));
                         return projbundle_checks(f, prefix, sampler);
                       }});
    } else {
      tasks.push_back({prefix, [n, prefix, &cfg] {
                         const auto ring = numeric_ring();
                         Sampler sampler(task_seed(cfg.seed, 1, static_cast<std::uint64_t>(n)));
                         std::vector<std::vector<CheckResult>> trials;
                         for (int t = 0; t < cfg.trials; ++t) {
                           BundleClass<GradedElement> f(GradedElement::constant(ring, 1), random_chern(sampler, ring, n));
                           trials.push_back(projbundle_checks(f, prefix, sampler));
                         }
                         return fold_trials(trials);
                       }});
    }
  }
}

// ------------------------------------------------------------------ blowup

EmbeddingData load_case(const std::string& spec) {
  if (spec.rfind("linear:", 0) == 0) {
    const auto body = spec.substr(7);
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw UsageError("case '" + spec + "' must look like linear:n,m");
    return linear_blowup(parse_int("case", trim(body.substr(0, comma))), parse_int("case", trim(body.substr(comma + 1))));
  }
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw UsageError("cannot read embedding file '" + spec.substr(5) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_embedding(buf.str());
  }
  throw UsageError("unknown case '" + spec + "' (expected linear:n,m or file:path)");
}

BlowupClass random_blowup_class(const Blowup& model, Sampler& s) {
  const auto& d = model.data();
  std::vector<GradedElement> coeffs;
  for (int k = 0; k < model.codim(); ++k) coeffs.push_back(s.element(d.center, *d.center->dim_bound()));
  const auto eps = PBGraded(model.exceptional(), std::move(coeffs));
  return model.pull(s.element(d.ambient, *d.ambient->dim_bound())) + model.exc_push(eps);
}

/// Classical value of int H^a E^b on Bl_{P^m} P^n, a + b = n.
Rational linear_intersection_number(int n, int m, int b) {
  const int r = n - m;
  if (b == 0) return 1;
  return sign_power(r + 1) * Rational(binomial(b - 1, b - r));
}

std::vector<CheckResult> blowup_checks(const std::string& spec, const SuiteConfig& cfg) {
  const std::string prefix = "blowup." + spec;
  const auto data = load_case(spec);
  Sampler sampler(task_seed(cfg.seed, 2, std::hash<std::string>{}(spec)));
  std::vector<CheckResult> out;

  out.push_back(run_check(prefix + ".validate", "embedding-hypotheses", [&]() -> Witness {
    const auto rep = embedding_validate(data, std::min(cfg.trials, 50), cfg.seed);
    if (rep.accepted) return std::nullopt;
    return rep.witness;
  }));
  const Blowup model(data);
  const auto& center = data.center;
  const auto& ambient = data.ambient;

  out.push_back(run_check(prefix + ".key_formula", "key-formula", [&]() -> Witness {
    for (int k = 0; k <= *center->dim_bound(); ++k) {
      for (auto& exps : monomials_of_degree(*center, k)) {
        const auto gamma = GradedElement::term(center, std::move(exps), 1);
        const auto lhs = model.exc_push(model.cw() * model.eta_pull(gamma));
        const auto rhs = model.pull(model.push_from_center(gamma));
        if (!(lhs == rhs)) return "gamma = " + to_string(gamma) + ": j_*(cW eta^*gamma) = " + to_string(lhs) + " but phi^*i_*gamma = " + to_string(rhs);
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(prefix + ".push_pull", "push-pull-identity", [&]() -> Witness {
    for (int k = 0; k <= *ambient->dim_bound(); ++k) {
      for (auto& exps : monomials_of_degree(*ambient, k)) {
        const auto alpha = GradedElement::term(ambient, std::move(exps), 1);
        const auto back = model.push(model.pull(alpha));
        if (back != alpha) return "phi_*phi^*(" + to_string(alpha) + ") = " + to_string(back);
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(prefix + ".ring_laws", "product-rule", [&]() -> Witness {
    for (int t = 0; t < cfg.trials; ++t) {
      const auto a = random_blowup_class(model, sampler);
      const auto b = random_blowup_class(model, sampler);
      const auto c = random_blowup_class(model, sampler);
      const auto left = model.multiply(model.multiply(a, b), c);
      const auto right = model.multiply(a, model.multiply(b, c));
      if (!(left == right)) return "associativity fails on trial " + idx(t) + ": (ab)c - a(bc) = " + to_string(left - right);
      if (!(model.multiply(a, b) == model.multiply(b, a))) return "commutativity fails on trial " + idx(t);
      if (cfg.assert_integral) require_integral(model.push(model.multiply(a, b)), "phi_*(ab) on trial " + idx(t));
      if (!(model.multiply(a, b + c) == model.multiply(a, b) + model.multiply(a, c))) {
        return "distributivity fails on trial " + idx(t);
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(prefix + ".decomposition", "epsilon-lemma", [&]() -> Witness {
    for (int t = 0; t < std::min(cfg.trials, 50); ++t) {
      const auto a = random_blowup_class(model, sampler);
      const BlowupClass pure{GradedElement(ambient), a.exceptional};
      if (!model.eta_push(a.exceptional).is_zero()) return "exceptional part is not normalised";
      if (!(model.delta_decompose(pure) == a.exceptional)) return "delta_decompose does not invert exc_push";
      if (!(model.exc_push(a.exceptional) == pure)) return "normalisation is not idempotent";
      // eta_*eps = 0 and j^*j_*eps = -xi eps = 0 force eps = 0.
      const auto restricted = -(model.exceptional()->hyperplane() * a.exceptional);
      if (restricted.is_zero() && !a.exceptional.is_zero()) return "nonzero eps with eta_*eps = 0 and xi eps = 0";
    }
    return std::nullopt;
  }));

  if (spec.rfind("linear:", 0) == 0) {
    const int n = *ambient->dim_bound();
    const int m = *center->dim_bound();
    out.push_back(run_check(prefix + ".intersection_numbers", "classical-intersection-numbers", [&, n, m]() -> Witness {
      const auto H = model.pull(GradedElement::generator(ambient, "t"));
      const auto E = model.exc_push(model.exceptional()->one());
      const auto top = std::vector<std::uint32_t>{static_cast<std::uint32_t>(n)};
      for (int b = 0; b <= n; ++b) {
        auto product = model.pull(GradedElement::constant(ambient, 1));
        for (int i = 0; i < n - b; ++i) product = model.multiply(product, H);
        for (int i = 0; i < b; ++i) product = model.multiply(product, E);
        if (cfg.assert_integral) require_integral(model.push(product), "phi_*(H^" + idx(n - b) + " E^" + idx(b) + ")");
        const Rational value = model.push(product).coefficient(top);
        const Rational expected = linear_intersection_number(n, m, b);
        if (value != expected) {
          return "H^" + idx(n - b) + " E^" + idx(b) + " = " + to_string(value) + ", expected " + to_string(expected);
        }
      }
      // H - E is pulled back from P^{n-m-1}.
      auto power = model.pull(GradedElement::constant(ambient, 1));
      for (int i = 0; i < n - m; ++i) power = model.multiply(power, H - E);
      if (!(power == model.zero())) return "(H - E)^{n-m} = " + to_string(power);
      return std::nullopt;
    }));
  }
  return out;
}

void blowup_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  std::vector<std::string> cases = cfg.cases;
  if (cases.empty()) cases.push_back("linear:4,1");
  for (const auto& spec : cases) {
    tasks.push_back({"blowup." + spec, [spec, &cfg] { return blowup_checks(spec, cfg); }});
  }
}

// --------------------------------------------------------------- charclass

std::vector<CheckResult> charclass_checks(const BundleClass<GradedElement>& e, const BundleClass<GradedElement>& f,
                                          const GradedElement& line, int horizon, const std::string& prefix) {
  std::vector<CheckResult> out;
  const auto sum = whitney_sum(e, f);
  const auto& ring = line.ring();
  const auto one = GradedElement::constant(ring, 1);

  out.push_back(run_check(prefix + ".chern_segre", "segre-classes", [&]() -> Witness {
    for (const auto* b : {&e, &f, &sum}) {
      const auto product = chern_times_segre(*b, horizon + 2);
      if (product != one) return "c s = " + to_string(product) + " for rank " + idx(b->rank());
    }
    return std::nullopt;
  }));
  out.push_back(run_check(prefix + ".ch_additive", "chern-character", [&]() -> Witness {
    const auto lhs = chern_character(sum, horizon);
    const auto rhs = chern_character(e, horizon) + chern_character(f, horizon);
    if (!(lhs == rhs)) return "ch(E+F) - ch(E) - ch(F) = " + to_string(lhs.value - rhs.value);
    return std::nullopt;
  }));
  out.push_back(run_check(prefix + ".ch_twist", "chern-character", [&]() -> Witness {
    const auto lhs = chern_character(tensor_by_line(f, line), horizon);
    const auto rhs = chern_character(f, horizon) * exp_series(line, horizon);
    if (!(lhs == rhs)) return "ch(F(x)L) - ch(F) exp(l) = " + to_string(lhs.value - rhs.value);
    return std::nullopt;
  }));
  out.push_back(run_check(prefix + ".td_multiplicative", "todd-class", [&]() -> Witness {
    const auto lhs = todd_class(sum, horizon);
    const auto rhs = todd_class(e, horizon) * todd_class(f, horizon);
    if (!(lhs == rhs)) return "td(E+F) - td(E) td(F) = " + to_string(lhs.value - rhs.value);
    return std::nullopt;
  }));
  out.push_back(run_check(prefix + ".sqrt_td", "mukai-vector", [&]() -> Witness {
    const auto td = todd_class(sum, horizon);
    const auto root = sqrt_one_series(td);
    if (!(root * root == td)) return "sqrt(td)^2 - td = " + to_string((root * root).value - td.value);
    return std::nullopt;
  }));
  out.push_back(run_check(prefix + ".mukai_additive", "mukai-vector", [&]() -> Witness {
    const auto lhs = mukai_vector(sum, f, horizon);
    const auto rhs = mukai_vector(e, f, horizon) + mukai_vector(f, f, horizon);
    if (!(lhs == rhs)) return "v(E+F) - v(E) - v(F) = " + to_string(lhs.value - rhs.value);
    return std::nullopt;
  }));
  return out;
}

void charclass_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  const int horizon = cfg.dim_bound.value_or(6);
  for (int r : r_values(cfg)) {
    const std::string prefix = "charclass.r" + idx(r);
    if (cfg.mode == Mode::formal) {
      tasks.push_back({prefix, [r, prefix, horizon] {
                         std::vector<Generator> gens;
                         for (int i = 1; i <= r; ++i) gens.push_back({"c" + idx(i), i});
                         for (int i = 1; i <= r + 1; ++i) gens.push_back({"d" + idx(i), i});
                         gens.push_back({"t", 1});
                         const auto ring = Ring::make(gens);
                         const auto one = GradedElement::constant(ring, 1);
                         return charclass_checks(BundleClass<GradedElement>(one, formal_chern(ring, "c", r)),
                                                 BundleClass<GradedElement>(one, formal_chern(ring, "d", r + 1)),
                                                 GradedElement::generator(ring, "t"), horizon, prefix);
                       }});
    } else {
      tasks.push_back({prefix, [r, prefix, horizon, &cfg] {
                         const auto ring = numeric_ring();
                         const auto one = GradedElement::constant(ring, 1);
                         Sampler sampler(task_seed(cfg.seed, 3, static_cast<std::uint64_t>(r)));
                         std::vector<std::vector<CheckResult>> trials;
                         for (int t = 0; t < cfg.trials; ++t) {
                           BundleClass<GradedElement> e(one, random_chern(sampler, ring, r));
                           BundleClass<GradedElement> f(one, random_chern(sampler, ring, r + 1));
                           trials.push_back(charclass_checks(e, f, sampler.homogeneous(ring, 1), horizon, prefix));
                         }
                         return fold_trials(trials);
                       }});
    }
  }
}

// -------------------------------------------------------------------- flop

std::vector<CheckResult> mutation_checks(const FlopContext& ctx, const std::string& prefix) {
  std::vector<CheckResult> out;
  for (auto m : {Mutation::tau_entry, Mutation::segre_class, Mutation::term_b_sign}) {
    // At r = 1 the tau_{2,1} perturbation shifts both sides equally.
    if (m == Mutation::tau_entry && ctx.r() < 2) continue;
    out.push_back(run_check(prefix + ".mutation." + to_string(m), "mutation-sensitivity", [&]() -> Witness {
      const auto mutated = ctx.with_mutation(m);
      for (const auto& c : verify_multiplicativity(mutated, mutated.sigma_a(), mutated.sigma_b(), "m")) {
        if (c.name == "m.headline") {
          if (c.passed) return "headline still passes after mutation " + to_string(m);
          return std::nullopt;
        }
      }
      return std::string("headline check missing");
    }));
  }
  return out;
}

SigmaVector random_sigma(Sampler& s, const RingHandle& ring, int r) {
  SigmaVector out;
  for (int k = 0; k <= r; ++k) out.values.push_back(s.homogeneous(ring, r - k));
  return out;
}

void flop_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  for (int r : r_values(cfg)) {
    const std::string prefix = "flop.r" + idx(r);
    if (cfg.mode == Mode::formal) {
      tasks.push_back({prefix + ".foundations", [r, prefix] {
                         auto out = verify_foundations(FlopContext::formal(r), prefix + ".foundations");
                         for (auto& c : verify_claims(FlopContext::formal(r), prefix + ".claims")) out.push_back(std::move(c));
                         return out;
                       }});
      tasks.push_back({prefix + ".graded", [r, prefix] {
                         const auto ctx = FlopContext::formal(r);
                         return verify_multiplicativity(ctx, ctx.sigma_a(), ctx.sigma_b(), prefix + ".graded");
                       }});
      tasks.push_back({prefix + ".ungraded", [r, prefix] {
                         const auto ctx = FlopContext::formal(r, SigmaGrading::ungraded);
                         return verify_multiplicativity(ctx, ctx.sigma_a(), ctx.sigma_b(), prefix + ".ungraded");
                       }});
      tasks.push_back({prefix + ".mutation", [r, prefix] { return mutation_checks(FlopContext::formal(r), prefix); }});
    } else {
      tasks.push_back({prefix + ".numeric", [r, prefix, &cfg] {
                         const auto ring = numeric_ring();
                         Sampler sampler(task_seed(cfg.seed, 4, static_cast<std::uint64_t>(r)));
                         std::vector<std::vector<CheckResult>> trials;
                         for (int t = 0; t < cfg.trials; ++t) {
                           const auto ctx = FlopContext::numeric(ring, random_chern(sampler, ring, r + 1));
                           const auto a = random_sigma(sampler, ring, r);
                           const auto b = random_sigma(sampler, ring, r);
                           auto checks = verify_multiplicativity(ctx, a, b, prefix + ".numeric");
                           if (t == 0) {
                             for (auto& c : verify_foundations(ctx, prefix + ".numeric.foundations")) checks.push_back(std::move(c));
                             for (auto& c : verify_claims(ctx, prefix + ".numeric.claims")) checks.push_back(std::move(c));
                           }
                           trials.push_back(std::move(checks));
                         }
                         return fold_trials(trials);
                       }});
    }
  }
}

std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, bool parallel) {
  std::vector<std::vector<CheckResult>> slots(tasks.size());
  auto run_one = [&](std::size_t i) {
    try {
      slots[i] = tasks[i].run();
    } catch (const std::exception& e) {
      slots[i] = {CheckResult{tasks[i].label + ".setup", "setup", false, std::string("exception: ") + e.what(), 0.0}};
    }
  };
#ifdef CHOW_HAVE_OPENMP
  if (parallel) {
    const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) run_one(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
  }
#else
  (void)parallel;
  for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
#endif
  std::vector<CheckResult> out;
  for (auto& s : slots) {
    for (auto& c : s) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Suite parse_suite(const std::string& name) {
  static const std::map<std::string, Suite> table = {{"binomial", Suite::binomial}, {"projbundle", Suite::projbundle},
                                                     {"blowup", Suite::blowup},     {"charclass", Suite::charclass},
                                                     {"flop", Suite::flop},         {"all", Suite::all}};
  auto it = table.find(name);
  if (it == table.end()) throw UsageError("unknown suite '" + name + "'");
  return it->second;
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::binomial: return "binomial";
    case Suite::projbundle: return "projbundle";
    case Suite::blowup: return "blowup";
    case Suite::charclass: return "charclass";
    case Suite::flop: return "flop";
    case Suite::all: return "all";
  }
  return "unknown";
}

Mode parse_mode(const std::string& name) {
  if (name == "formal") return Mode::formal;
  if (name == "numeric") return Mode::numeric;
  throw UsageError("unknown mode '" + name + "' (expected formal or numeric)");
}

std::string to_string(Mode m) { return m == Mode::formal ? "formal" : "numeric"; }

void validate(const SuiteConfig& cfg) {
  if (cfg.r < 1) throw UsageError("--r must be at least 1");
  if (cfg.r_max && *cfg.r_max < 1) throw UsageError("--r-max must be at least 1");
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  if (cfg.dim_bound && *cfg.dim_bound < 0) throw UsageError("--dim-bound must be non-negative");
  if (cfg.format != "text" && cfg.format != "json") throw UsageError("--format must be text or json");
  for (const auto& c : cfg.cases) {
    try {
      load_case(c);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError("case '" + c + "': " + e.what());
    }
  }
}

std::vector<int> r_values(const SuiteConfig& cfg) {
  std::vector<int> out;
  if (cfg.r_max) {
    for (int r = 1; r <= *cfg.r_max; ++r) out.push_back(r);
  } else {
    out.push_back(cfg.r);
  }
  return out;
}

void apply_setting(SuiteConfig& cfg, const std::string& raw_key, const std::string& value) {
  std::string key = raw_key;
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "suite") {
    cfg.suite = parse_suite(value);
  } else if (key == "r") {
    cfg.r = parse_int(key, value);
  } else if (key == "r-max") {
    cfg.r_max = parse_int(key, value);
  } else if (key == "mode") {
    cfg.mode = parse_mode(value);
  } else if (key == "trials") {
    cfg.trials = parse_int(key, value);
  } else if (key == "seed") {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw UsageError("option 'seed' expects an unsigned 64-bit integer, got '" + value + "'");
    }
  } else if (key == "dim-bound") {
    cfg.dim_bound = parse_int(key, value);
  } else if (key == "format") {
    cfg.format = value;
  } else if (key == "out") {
    cfg.output = value;
  } else if (key == "case") {
    cfg.cases.push_back(value);
  } else if (key == "serial") {
    cfg.parallel = !(value == "1" || value == "true" || value == "yes");
  } else if (key == "assert-integral") {
    cfg.assert_integral = value == "1" || value == "true" || value == "yes";
  } else {
    throw UsageError("unknown configuration key '" + raw_key + "'");
  }
}

void apply_config_text(SuiteConfig& cfg, const std::string& text) {
  std::stringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + idx(line_no) + ": expected key=value");
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

Report run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  std::vector<Task> tasks;
  const bool all = cfg.suite == Suite::all;
  if (all || cfg.suite == Suite::binomial) binomial_tasks(cfg, tasks);
  if (all || cfg.suite == Suite::projbundle) projbundle_tasks(cfg, tasks);
  if (all || cfg.suite == Suite::blowup) blowup_tasks(cfg, tasks);
  if (all || cfg.suite == Suite::charclass) charclass_tasks(cfg, tasks);
  if (all || cfg.suite == Suite::flop) flop_tasks(cfg, tasks);

  Report report;
  report.set_meta("suite", to_string(cfg.suite));
  report.set_meta("mode", to_string(cfg.mode));
  report.set_meta("seed", std::to_string(cfg.seed));
  report.set_meta("trials", idx(cfg.trials));
  report.set_meta("r", cfg.r_max ? "1.." + idx(*cfg.r_max) : idx(cfg.r));
  report.merge(run_tasks(tasks, cfg.parallel));
  report.finalize();
  return report;
}

}  // namespace chow
