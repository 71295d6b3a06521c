#include "chow/char_class.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace chow {

CharClass::CharClass(GradedElement v, int max_degree) : value(v.truncated(max_degree)), max_deg(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_deg must be non-negative");
}

CharClass operator*(const CharClass& a, const CharClass& b) {
  const int horizon = std::min(a.max_deg, b.max_deg);
  return CharClass(a.value.truncated(horizon) * b.value.truncated(horizon), horizon);
}

CharClass operator+(const CharClass& a, const CharClass& b) {
  const int horizon = std::min(a.max_deg, b.max_deg);
  return CharClass(a.value + b.value, horizon);
}

int resolve_horizon(const RingHandle& ring, std::optional<int> max_deg) {
  if (max_deg) {
    if (*max_deg < 0) throw std::invalid_argument("max_deg must be non-negative");
    return *max_deg;
  }
  if (auto bound = ring->dim_bound()) return *bound;
  throw std::invalid_argument("max_deg is required when the ring has no dim_bound");
}

CharClass chern_character(const GradedBundle& bundle, std::optional<int> max_deg) {
  const auto& ring = bundle.one().ring();
  const int horizon = resolve_horizon(ring, max_deg);
  // Newton: p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
  std::vector<GradedElement> power_sums{GradedElement::constant(ring, bundle.rank())};
  GradedElement ch = power_sums.front();
  for (int k = 1; k <= horizon; ++k) {
    GradedElement p = bundle.c(k) * (sign_power(k - 1) * k);
    for (int i = 1; i < k; ++i) p += bundle.c(i) * power_sums[static_cast<std::size_t>(k - i)] * sign_power(i - 1);
    ch += p * (Rational(1) / factorial(static_cast<unsigned>(k)));
    power_sums.push_back(std::move(p));
  }
  return CharClass(std::move(ch), horizon);
}

CharClass todd_class(const GradedBundle& bundle, std::optional<int> max_deg) {
  const auto& ring = bundle.one().ring();
  const int horizon = resolve_horizon(ring, max_deg);
  const int roots = std::min(bundle.rank(), horizon);
  if (roots == 0) return CharClass(bundle.one(), horizon);
  const auto& universal = formal_roots::todd_polynomials(roots, horizon);
  std::map<std::string, GradedElement> images;
  for (int i = 1; i <= roots; ++i) images.emplace("e" + std::to_string(i), bundle.c(i));
  GradedElement td(ring);
  for (const auto& component : universal) td += substitute(component, images, ring);
  return CharClass(std::move(td), horizon);
}

CharClass sqrt_one_series(const CharClass& a, std::optional<int> max_deg) {
  const auto& ring = a.value.ring();
  const int horizon = max_deg ? std::min(*max_deg, a.max_deg) : a.max_deg;
  const GradedElement one = GradedElement::constant(ring, 1);
  if (a.value.grade_component(0) != one) {
    throw std::invalid_argument("square root needs a series with degree-0 part equal to 1");
  }
  // s_d = (a_d - sum_{0<i<d} s_i s_{d-i}) / 2
  std::vector<GradedElement> parts{one};
  for (int d = 1; d <= horizon; ++d) {
    GradedElement acc = a.value.grade_component(d);
    for (int i = 1; i < d; ++i) {
      acc -= (parts[static_cast<std::size_t>(i)] * parts[static_cast<std::size_t>(d - i)]).grade_component(d);
    }
    parts.push_back(acc * Rational(1, 2));
  }
  GradedElement out(ring);
  for (const auto& p : parts) out += p;
  return CharClass(std::move(out), horizon);
}

CharClass mukai_vector(const GradedBundle& bundle, const GradedBundle& tangent, std::optional<int> max_deg) {
  const int horizon = resolve_horizon(bundle.one().ring(), max_deg);
  return chern_character(bundle, horizon) * sqrt_one_series(todd_class(tangent, horizon), horizon);
}

CharClass exp_series(const GradedElement& x, int max_deg) {
  if (!x.is_homogeneous(1)) throw std::invalid_argument("exp_series expects a degree-1 class");
  GradedElement term = one_like(x);
  GradedElement out = term;
  for (int k = 1; k <= max_deg; ++k) {
    term = (term * x) * Rational(1, k);
    out += term;
  }
  return CharClass(std::move(out), max_deg);
}

GradedElement chern_times_segre(const GradedBundle& bundle, int max_deg) {
  GradedElement total_segre = zero_like(bundle.one());
  for (const auto& s : segre_classes(bundle, max_deg)) total_segre += s;
  return (bundle.total() * total_segre).truncated(max_deg);
}

namespace formal_roots {

RingHandle root_ring(int k, std::optional<int> dim_bound) {
  std::vector<Generator> gens;
  for (int i = 1; i <= k; ++i) gens.push_back({"x" + std::to_string(i), 1});
  return Ring::make(std::move(gens), dim_bound);
}

RingHandle elementary_ring(int k) {
  std::vector<Generator> gens;
  for (int i = 1; i <= k; ++i) gens.push_back({"e" + std::to_string(i), i});
  return Ring::make(std::move(gens));
}

GradedElement elementary_symmetric(const RingHandle& roots, int i) {
  const int k = static_cast<int>(roots->size());
  if (i < 0 || i > k) return GradedElement(roots);
  // sum over i-subsets, enumerated by bitmask
  GradedElement out(roots);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (__builtin_popcountll(mask) != i) continue;
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(k), 0);
    for (int b = 0; b < k; ++b) exps[static_cast<std::size_t>(b)] = (mask >> b) & 1u;
    out += GradedElement::term(roots, std::move(exps), 1);
  }
  return out;
}

GradedElement to_elementary(const GradedElement& p, const RingHandle& elementary) {
  const auto& roots = p.ring();
  const int k = static_cast<int>(roots->size());
  if (static_cast<int>(elementary->size()) < k) throw std::invalid_argument("elementary ring too small");
  std::vector<GradedElement> e_roots;
  for (int i = 0; i <= k; ++i) e_roots.push_back(elementary_symmetric(roots, i));

  GradedElement rest = p;
  GradedElement out(elementary);
  while (!rest.is_zero()) {
    // Within the lowest remaining degree, begin() is the lex-largest term.
    const auto& [lead, coeff] = *rest.terms().begin();
    const Rational c = coeff;
    std::vector<std::uint32_t> e_exps(elementary->size(), 0);
    GradedElement product = GradedElement::constant(roots, c);
    for (int i = 0; i < k; ++i) {
      const auto here = lead.exponents[static_cast<std::size_t>(i)];
      const auto next = (i + 1 < k) ? lead.exponents[static_cast<std::size_t>(i + 1)] : 0u;
      if (here < next) throw std::invalid_argument("polynomial is not symmetric");
      e_exps[static_cast<std::size_t>(i)] = here - next;
      if (here > next) product = product * e_roots[static_cast<std::size_t>(i + 1)].pow(here - next);
    }
    out += GradedElement::term(elementary, std::move(e_exps), c);
    rest -= product;
  }
  return out;
}

std::vector<Rational> todd_series(int max_deg) {
  // (1 - e^{-t}) / t = sum_k (-1)^k t^k / (k+1)!, then invert
  std::vector<Rational> denom;
  for (int k = 0; k <= max_deg; ++k) denom.push_back(sign_power(k) / factorial(static_cast<unsigned>(k + 1)));
  std::vector<Rational> out{Rational(1)};
  for (int n = 1; n <= max_deg; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i) acc += denom[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(n - i)];
    out.push_back(-acc);
  }
  return out;
}

const std::vector<GradedElement>& todd_polynomials(int k, int max_deg) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<GradedElement>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{k, max_deg}];
  if (slot) return *slot;

  const auto roots = root_ring(k, max_deg);
  const auto series = todd_series(max_deg);
  GradedElement product = GradedElement::constant(roots, 1);
  for (int i = 1; i <= k; ++i) {
    const auto x = GradedElement::generator(roots, "x" + std::to_string(i));
    GradedElement factor(roots);
    GradedElement power = GradedElement::constant(roots, 1);
    for (int d = 0; d <= max_deg; ++d) {
      factor += power * series[static_cast<std::size_t>(d)];
      power = power * x;
    }
    product = product * factor;
  }
  const auto elementary = elementary_ring(k);
  auto table = std::make_unique<std::vector<GradedElement>>();
  for (int d = 0; d <= max_deg; ++d) table->push_back(to_elementary(product.grade_component(d), elementary));
  slot = std::move(table);
  return *slot;
}

}  // namespace formal_roots

}  // namespace chow
