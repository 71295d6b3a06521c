#pragma once

// CH(P(F)) for a bundle F of rank n over a base algebra, stored as a free
// module with basis 1, h, ..., h^{n-1}. Products are reduced with the
// tau table (coefficients of h^i in that basis). The base algebra can be a
// GradedElement ring or another projective bundle, which is how the Mukai
// flop tower CH(S) -> CH(P') -> CH(E) is assembled.

#include "chow/bundle.hpp"
#include "chow/graded_algebra.hpp"

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chow {

template <class Base>
class ProjBundle;

template <class Base>
class PBElement {
 public:
  using Bundle = ProjBundle<Base>;

  PBElement(std::shared_ptr<const Bundle> bundle, std::vector<Base> coeffs)
      : bundle_(std::move(bundle)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != bundle_->rank()) {
      throw std::invalid_argument("coefficient vector length must equal the bundle rank");
    }
  }

  const std::shared_ptr<const Bundle>& bundle() const { return bundle_; }
  const std::vector<Base>& coeffs() const { return coeffs_; }
  const Base& operator[](std::size_t k) const { return coeffs_[k]; }
  /// Coefficient of h^{n-1}.
  const Base& top() const { return coeffs_.back(); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  PBElement& operator+=(const PBElement& other) {
    check_same(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
  }
  PBElement& operator-=(const PBElement& other) {
    check_same(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
  }
  PBElement& operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  PBElement& operator*=(const PBElement& other) { return *this = *this * other; }

  friend PBElement operator+(PBElement a, const PBElement& b) { return a += b; }
  friend PBElement operator-(PBElement a, const PBElement& b) { return a -= b; }
  friend PBElement operator*(PBElement a, const Rational& c) { return a *= c; }
  friend PBElement operator*(const Rational& c, PBElement a) { return a *= c; }
  friend PBElement operator*(const PBElement& a, const PBElement& b) {
    a.check_same(b);
    return a.bundle_->multiply(a, b);
  }
  PBElement operator-() const {
    PBElement out(*this);
    for (auto& x : out.coeffs_) x = -x;
    return out;
  }

  PBElement pow(unsigned e) const {
    PBElement out = bundle_->one();
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  bool operator==(const PBElement& other) const {
    return bundle_->same_as(*other.bundle_) && coeffs_ == other.coeffs_;
  }

 private:
  void check_same(const PBElement& other) const {
    if (!bundle_->same_as(*other.bundle_)) throw RingMismatch("elements of different projective bundles");
  }

  std::shared_ptr<const Bundle> bundle_;
  std::vector<Base> coeffs_;
};

template <class Base>
PBElement<Base> zero_like(const PBElement<Base>& a) {
  return a.bundle()->zero();
}
template <class Base>
PBElement<Base> one_like(const PBElement<Base>& a) {
  return a.bundle()->one();
}
/// a_k homogeneous of degree d - k for every slot.
template <class Base>
bool is_homogeneous(const PBElement<Base>& a, int degree) {
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (!is_homogeneous(a[k], degree - static_cast<int>(k))) return false;
  }
  return true;
}

template <class Base>
std::string to_string(const PBElement<Base>& a) {
  std::string out;
  const auto& h = a.bundle()->hyperplane_name();
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string coeff = to_string(a[k]);
    if (k == 0) {
      out += "(" + coeff + ")";
    } else {
      out += "(" + coeff + ") * " + h + (k > 1 ? "^" + std::to_string(k) : "");
    }
  }
  return out.empty() ? "0" : out;
}

/// tau(i, j): coefficient of h^j in h^i, zero for j outside [0, n-1].
template <class Base>
class TauTable {
 public:
  TauTable(Base zero, std::vector<std::vector<Base>> rows) : zero_(std::move(zero)), rows_(std::move(rows)) {}

  int max_row() const { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<Base>& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
  const Base& operator()(int i, int j) const {
    if (j < 0 || i < 0 || i > max_row() || j >= static_cast<int>(rows_[static_cast<std::size_t>(i)].size())) {
      return zero_;
    }
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  Base& mutable_entry(int i, int j) { return rows_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }

 private:
  Base zero_;
  std::vector<std::vector<Base>> rows_;
};

template <class Base>
class ProjBundle : public std::enable_shared_from_this<ProjBundle<Base>> {
 public:
  using Element = PBElement<Base>;

  static std::shared_ptr<const ProjBundle> make(BundleClass<Base> bundle, std::string hyperplane = "h") {
    auto out = std::shared_ptr<ProjBundle>(new ProjBundle(std::move(bundle), std::move(hyperplane)));
    out->tau_rows_ = out->tau_by_recursion(2 * out->rank() - 2);
    return out;
  }

  int rank() const { return bundle_.rank(); }
  const BundleClass<Base>& bundle() const { return bundle_; }
  const std::string& hyperplane_name() const { return hyperplane_; }
  const Base& base_one() const { return bundle_.one(); }
  Base base_zero() const { return zero_like(bundle_.one()); }

  bool same_as(const ProjBundle& other) const {
    return this == &other || (hyperplane_ == other.hyperplane_ && bundle_ == other.bundle_);
  }

  Element zero() const { return Element(self(), std::vector<Base>(static_cast<std::size_t>(rank()), base_zero())); }
  Element one() const { return pullback(base_one()); }

  /// pi^*(a) = (a, 0, ..., 0).
  Element pullback(const Base& a) const {
    std::vector<Base> coeffs(static_cast<std::size_t>(rank()), base_zero());
    coeffs[0] = a;
    return Element(self(), std::move(coeffs));
  }

  /// pi^* of every Chern class of a bundle on the base.
  BundleClass<Element> pullback_bundle(const BundleClass<Base>& b) const {
    std::vector<Element> chern;
    for (const auto& c : b.chern()) chern.push_back(pullback(c));
    return BundleClass<Element>(one(), std::move(chern));
  }

  /// sum_k pi^*(a_k) h^k from an arbitrary-length coefficient list.
  Element from_coefficients(std::vector<Base> coeffs) const { return reduce(std::move(coeffs)); }

  Element hyperplane() const { return hyperplane_power(1); }

  /// h^k read from the tau table (extended by recursion when needed).
  Element hyperplane_power(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    if (k <= static_cast<int>(tau_rows_.size()) - 1) return Element(self(), tau_rows_[static_cast<std::size_t>(k)]);
    return Element(self(), tau_by_recursion(k).back());
  }

  /// pi_*: the coefficient of h^{n-1}.
  Base pushforward(const Element& a) const { return a.top(); }

  /// pi_*(h^k) = s_{k-n+1}(F), zero for k < n-1.
  Base pushforward_power(int k) const {
    const int shift = k - (rank() - 1);
    if (shift < 0) return base_zero();
    return segre_classes(bundle_, shift).back();
  }

  /// Product through the tau table: h^m -> sum_j tau(m, j) h^j for m >= n.
  Element multiply(const Element& a, const Element& b) const {
    const int n = rank();
    std::vector<Base> conv(static_cast<std::size_t>(2 * n - 1), base_zero());
    for (int i = 0; i < n; ++i) {
      if (a[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[static_cast<std::size_t>(j)].is_zero()) continue;
        conv[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
      }
    }
    std::vector<Base> out(conv.begin(), conv.begin() + n);
    for (int m = n; m <= 2 * n - 2; ++m) {
      const auto& cm = conv[static_cast<std::size_t>(m)];
      if (cm.is_zero()) continue;
      const auto& row = tau_rows_[static_cast<std::size_t>(m)];
      for (int j = 0; j < n; ++j) {
        if (!row[static_cast<std::size_t>(j)].is_zero()) out[static_cast<std::size_t>(j)] += cm * row[static_cast<std::size_t>(j)];
      }
    }
    return Element(self(), std::move(out));
  }

  /// Long division by h^n + c_1 h^{n-1} + ... + c_n, highest power first.
  Element reduce(std::vector<Base> coeffs) const {
    const int n = rank();
    while (static_cast<int>(coeffs.size()) < n) coeffs.push_back(base_zero());
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= n; --k) {
      const Base lead = coeffs[static_cast<std::size_t>(k)];
      if (lead.is_zero()) continue;
      for (int j = 1; j <= n; ++j) coeffs[static_cast<std::size_t>(k - j)] -= lead * bundle_.c(j);
    }
    coeffs.resize(static_cast<std::size_t>(n), base_zero());
    return Element(self(), std::move(coeffs));
  }

  /// Rows 0..i_max from tau(i+1, j) = tau(i, j-1) - c_{n-j}(F) tau(i, n-1).
  std::vector<std::vector<Base>> tau_by_recursion(int i_max) const {
    const int n = rank();
    std::vector<std::vector<Base>> rows;
    std::vector<Base> row(static_cast<std::size_t>(n), base_zero());
    row[0] = base_one();
    rows.push_back(row);
    for (int i = 0; i < i_max; ++i) {
      const auto& prev = rows.back();
      std::vector<Base> next(static_cast<std::size_t>(n), base_zero());
      const Base& last = prev[static_cast<std::size_t>(n - 1)];
      for (int j = 0; j < n; ++j) {
        if (j > 0) next[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)];
        if (!last.is_zero()) next[static_cast<std::size_t>(j)] -= bundle_.c(n - j) * last;
      }
      rows.push_back(std::move(next));
    }
    return rows;
  }

  /// Rows 0..i_max by reducing the monomial h^i directly.
  std::vector<std::vector<Base>> tau_by_reduction(int i_max) const {
    std::vector<std::vector<Base>> rows;
    for (int i = 0; i <= i_max; ++i) {
      std::vector<Base> coeffs(static_cast<std::size_t>(std::max(i + 1, rank())), base_zero());
      coeffs[static_cast<std::size_t>(i)] = base_one();
      rows.push_back(reduce(std::move(coeffs)).coeffs());
    }
    return rows;
  }

  /// Both routes; throws std::logic_error naming the first disagreeing entry.
  TauTable<Base> tau_table(int i_max) const {
    if (i_max < 0) throw std::invalid_argument("i_max must be non-negative");
    auto recursion = tau_by_recursion(i_max);
    const auto reduction = tau_by_reduction(i_max);
    for (int i = 0; i <= i_max; ++i) {
      for (int j = 0; j < rank(); ++j) {
        const auto& a = recursion[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        const auto& b = reduction[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!(a == b)) {
          std::ostringstream msg;
          msg << "tau(" << i << "," << j << ") disagrees: recursion " << to_string(a) << " vs reduction "
              << to_string(b);
          throw std::logic_error(msg.str());
        }
      }
    }
    return TauTable<Base>(base_zero(), std::move(recursion));
  }

  /// c_i(Omega_{P(F)|S}) = (-1)^i sum_j C(n-j, i-j) pi^*c_j(F) h^{i-j}.
  Element cotangent_chern(int i) const {
    if (i < 0) throw std::invalid_argument("Chern class index must be non-negative");
    Element out = zero();
    for (int j = 0; j <= i; ++j) {
      const Integer b = binomial(rank() - j, i - j);
      if (b == 0 || bundle_.c(j).is_zero()) continue;
      out += pullback(bundle_.c(j)) * hyperplane_power(i - j) * Rational(b);
    }
    return out * sign_power(i);
  }

  /// Omega_{P(F)|S} from the Euler sequence: c = c(pi^*F^dual (x) O(-1)).
  /// The rank-n class c_n of the middle term must vanish; n >= 2 required.
  BundleClass<Element> euler_cotangent() const {
    if (rank() < 2) throw std::invalid_argument("relative cotangent bundle of a rank-1 projectivisation is zero");
    const auto middle = tensor_by_line(pullback_bundle(dual_bundle(bundle_)), -hyperplane());
    if (!middle.c(rank()).is_zero()) {
      throw std::logic_error("Euler sequence: top Chern class of pi^*F^dual(-1) does not vanish");
    }
    std::vector<Element> chern(middle.chern().begin(), middle.chern().end() - 1);
    return BundleClass<Element>(one(), std::move(chern));
  }

  /// c_i(Omega_{P(F)|S} (x) O(1)) = sum_m (-1)^m h^m pi^*c_{i-m}(F^dual).
  Element cotangent_twist_chern(int i) const {
    if (i < 0) throw std::invalid_argument("Chern class index must be non-negative");
    const auto dual = dual_bundle(bundle_);
    Element out = zero();
    for (int m = 0; m <= i; ++m) {
      if (dual.c(i - m).is_zero()) continue;
      out += pullback(dual.c(i - m)) * hyperplane_power(m) * sign_power(m);
    }
    return out;
  }

 private:
  ProjBundle(BundleClass<Base> bundle, std::string hyperplane)
      : bundle_(std::move(bundle)), hyperplane_(std::move(hyperplane)) {}

  std::shared_ptr<const ProjBundle> self() const { return this->shared_from_this(); }

  BundleClass<Base> bundle_;
  std::string hyperplane_;
  std::vector<std::vector<Base>> tau_rows_;
};

using PBGraded = PBElement<GradedElement>;
using ProjBundleGraded = ProjBundle<GradedElement>;

/// Exact check of sum_{j=k}^{i} (-1)^{j+k} C(r-j, i-j) C(r+1-k, j-k) = (-1)^{i+k}
/// for 0 <= k <= i <= r, plus T_{i+1,k+1} = T_{i,k} for i < r.
struct BinomialReport {
  int r = 0;
  bool ok = true;
  int cases = 0;
  std::string first_failure;
};

Integer binomial_sum(int r, int i, int k);
BinomialReport binomial_identity_check(int r);

}  // namespace chow
