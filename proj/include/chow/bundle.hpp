#pragma once

// Formal vector bundles presented by their Chern classes. Generic over the
// coefficient algebra so the same calculus runs over CH(S), CH(P(F)) and
// towers of projective bundles.

#include "chow/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace chow {

template <class Elem>
class BundleClass {
 public:
  /// `chern` holds c_1..c_rank; c_i must be homogeneous of degree i.
  BundleClass(Elem one, std::vector<Elem> chern) : one_(std::move(one)), chern_(std::move(chern)) {
    if (chern_.empty()) throw std::invalid_argument("bundle rank must be positive");
    for (std::size_t i = 0; i < chern_.size(); ++i) {
      if (!is_homogeneous(chern_[i], static_cast<int>(i + 1))) {
        throw std::invalid_argument("c_" + std::to_string(i + 1) + " is not homogeneous of degree " +
                                    std::to_string(i + 1));
      }
    }
  }

  static BundleClass trivial(const Elem& one, int rank) {
    if (rank <= 0) throw std::invalid_argument("bundle rank must be positive");
    return BundleClass(one, std::vector<Elem>(static_cast<std::size_t>(rank), zero_like(one)));
  }

  static BundleClass line(const Elem& c1) { return BundleClass(one_like(c1), {c1}); }

  int rank() const { return static_cast<int>(chern_.size()); }
  const Elem& one() const { return one_; }
  const std::vector<Elem>& chern() const { return chern_; }

  /// c_i with c_0 = 1 and c_i = 0 outside [0, rank].
  Elem c(int i) const {
    if (i == 0) return one_;
    if (i < 0 || i > rank()) return zero_like(one_);
    return chern_[static_cast<std::size_t>(i - 1)];
  }

  /// 1 + c_1 + ... + c_rank.
  Elem total() const {
    Elem out = one_;
    for (const auto& ci : chern_) out += ci;
    return out;
  }

  bool operator==(const BundleClass& other) const { return chern_ == other.chern_; }

 private:
  Elem one_;
  std::vector<Elem> chern_;
};

/// s_0..s_{k_max} with sum_{i<=k} s_i c_{k-i} = 0 for k >= 1.
template <class Elem>
std::vector<Elem> segre_classes(const BundleClass<Elem>& bundle, int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be non-negative");
  std::vector<Elem> s;
  s.reserve(static_cast<std::size_t>(k_max) + 1);
  s.push_back(bundle.one());
  for (int k = 1; k <= k_max; ++k) {
    Elem acc = zero_like(bundle.one());
    for (int i = 1; i <= std::min(k, bundle.rank()); ++i) acc += bundle.c(i) * s[static_cast<std::size_t>(k - i)];
    s.push_back(-acc);
  }
  return s;
}

/// c_j(F^dual) = (-1)^j c_j(F).
template <class Elem>
BundleClass<Elem> dual_bundle(const BundleClass<Elem>& bundle) {
  std::vector<Elem> chern;
  chern.reserve(bundle.chern().size());
  for (int j = 1; j <= bundle.rank(); ++j) chern.push_back(bundle.c(j) * sign_power(j));
  return BundleClass<Elem>(bundle.one(), std::move(chern));
}

/// c_i(F (x) L) = sum_j C(rank - j, i - j) c_j(F) l^{i-j}; `line` is c_1(L).
template <class Elem>
BundleClass<Elem> tensor_by_line(const BundleClass<Elem>& bundle, const Elem& line) {
  if (!is_homogeneous(line, 1)) throw std::invalid_argument("line class must be homogeneous of degree 1");
  const int n = bundle.rank();
  std::vector<Elem> line_powers{bundle.one()};
  for (int k = 1; k <= n; ++k) line_powers.push_back(line_powers.back() * line);
  std::vector<Elem> chern;
  for (int i = 1; i <= n; ++i) {
    Elem acc = zero_like(bundle.one());
    for (int j = 0; j <= i; ++j) {
      const Integer b = binomial(n - j, i - j);
      if (b == 0) continue;
      acc += bundle.c(j) * line_powers[static_cast<std::size_t>(i - j)] * Rational(b);
    }
    chern.push_back(std::move(acc));
  }
  return BundleClass<Elem>(bundle.one(), std::move(chern));
}

/// c(E + F) = c(E) c(F).
template <class Elem>
BundleClass<Elem> whitney_sum(const BundleClass<Elem>& a, const BundleClass<Elem>& b) {
  const int n = a.rank() + b.rank();
  std::vector<Elem> chern;
  for (int k = 1; k <= n; ++k) {
    Elem acc = zero_like(a.one());
    for (int i = std::max(0, k - b.rank()); i <= std::min(k, a.rank()); ++i) acc += a.c(i) * b.c(k - i);
    chern.push_back(std::move(acc));
  }
  return BundleClass<Elem>(a.one(), std::move(chern));
}

}  // namespace chow
