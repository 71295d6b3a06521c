// Polynomial multiplication kernels. The serial kernel is the reference;
// the OpenMP kernel splits the outer operand across threads, accumulates
// into thread-local tables and merges. Exact arithmetic makes the merge
// order irrelevant, so both kernels return identical canonical forms.

#include "chow/graded_algebra.hpp"

#include <atomic>
#include <vector>

#ifdef CHOW_HAVE_OPENMP
#include <omp.h>
#endif

namespace chow::kernels {

namespace {

std::atomic<std::size_t> g_threshold{1u << 12};

inline void accumulate_row(TermMap& acc, const Monomial& ma, const Rational& ca, const TermMap& b,
                           const std::optional<int>& bound) {
  const std::size_t n = ma.exponents.size();
  Monomial product;
  product.exponents.resize(n);
  Rational coeff;
  for (const auto& [mb, cb] : b) {
    const int degree = ma.degree + mb.degree;
    if (bound && degree > *bound) break;  // b is sorted by degree
    product.degree = degree;
    for (std::size_t i = 0; i < n; ++i) product.exponents[i] = ma.exponents[i] + mb.exponents[i];
    coeff = ca * cb;
    auto [it, inserted] = acc.try_emplace(product, coeff);
    if (!inserted) it->second += coeff;
  }
}

void drop_zeros(TermMap& acc) {
  for (auto it = acc.begin(); it != acc.end();) {
    it = (it->second == 0) ? acc.erase(it) : std::next(it);
  }
}

}  // namespace

std::size_t parallel_threshold() { return g_threshold.load(std::memory_order_relaxed); }

void set_parallel_threshold(std::size_t pairs) { g_threshold.store(pairs, std::memory_order_relaxed); }

bool openmp_enabled() {
#ifdef CHOW_HAVE_OPENMP
  return omp_get_max_threads() > 1 && !omp_in_parallel();
#else
  return false;
#endif
}

GradedElement multiply_serial(const GradedElement& a, const GradedElement& b) {
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch("operands belong to different rings");
  const auto bound = a.ring()->dim_bound();
  TermMap acc;
  for (const auto& [ma, ca] : a.terms()) {
    if (bound && !b.is_zero() && ma.degree + b.terms().begin()->first.degree > *bound) break;
    accumulate_row(acc, ma, ca, b.terms(), bound);
  }
  drop_zeros(acc);
  return GradedElement::from_canonical(a.ring(), std::move(acc));
}

GradedElement multiply_parallel(const GradedElement& a, const GradedElement& b) {
#ifdef CHOW_HAVE_OPENMP
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch("operands belong to different rings");
  const auto bound = a.ring()->dim_bound();
  std::vector<std::pair<const Monomial*, const Rational*>> rows;
  rows.reserve(a.size());
  for (const auto& [m, c] : a.terms()) rows.emplace_back(&m, &c);
  const auto count = static_cast<long>(rows.size());

  TermMap result;
#pragma omp parallel
  {
    TermMap local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long i = 0; i < count; ++i) {
      accumulate_row(local, *rows[static_cast<std::size_t>(i)].first, *rows[static_cast<std::size_t>(i)].second,
                     b.terms(), bound);
    }
#pragma omp critical(chow_mul_merge)
    {
      if (result.empty()) {
        result.swap(local);
      } else {
        for (auto& [m, c] : local) {
          auto [it, inserted] = result.try_emplace(m, c);
          if (!inserted) it->second += c;
        }
      }
    }
  }
  drop_zeros(result);
  return GradedElement::from_canonical(a.ring(), std::move(result));
#else
  return multiply_serial(a, b);
#endif
}

}  // namespace chow::kernels
