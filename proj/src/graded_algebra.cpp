#include "chow/graded_algebra.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace chow {

Ring::Ring(std::vector<Generator> generators, std::optional<int> dim_bound)
    : generators_(std::move(generators)), dim_bound_(dim_bound) {
  for (std::size_t i = 0; i < generators_.size(); ++i) index_.emplace(generators_[i].name, i);
}

RingHandle Ring::make(std::vector<Generator> generators, std::optional<int> dim_bound) {
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& g : generators) {
    if (g.name.empty()) throw std::invalid_argument("generator names must be non-empty");
    if (g.degree < 0) throw std::invalid_argument("generator '" + g.name + "' has negative degree");
    if (!seen.emplace(g.name, 0).second) {
      throw std::invalid_argument("duplicate generator name '" + g.name + "'");
    }
    if (std::isdigit(static_cast<unsigned char>(g.name.front()))) {
      throw std::invalid_argument("generator '" + g.name + "' must not start with a digit");
    }
  }
  if (dim_bound && *dim_bound < 0) throw std::invalid_argument("dim_bound must be non-negative");
  return RingHandle(new Ring(std::move(generators), dim_bound));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Ring::same_as(const Ring& other) const {
  if (this == &other) return true;
  if (dim_bound_ != other.dim_bound_ || generators_.size() != other.generators_.size()) return false;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name != other.generators_[i].name ||
        generators_[i].degree != other.generators_[i].degree) {
      return false;
    }
  }
  return true;
}

GradedElement::GradedElement(RingHandle ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring handle");
}

GradedElement GradedElement::constant(RingHandle ring, const Rational& c) {
  GradedElement out(std::move(ring));
  if (c != 0) out.terms_.emplace(Monomial{0, std::vector<std::uint32_t>(out.ring_->size(), 0)}, c);
  return out;
}

GradedElement GradedElement::generator(RingHandle ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  std::vector<std::uint32_t> exps(ring->size(), 0);
  exps[*idx] = 1;
  return term(std::move(ring), std::move(exps), 1);
}

GradedElement GradedElement::term(RingHandle ring, std::vector<std::uint32_t> exponents, const Rational& c) {
  GradedElement out(std::move(ring));
  if (exponents.size() != out.ring_->size()) throw std::invalid_argument("exponent vector has wrong length");
  int degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    degree += static_cast<int>(exponents[i]) * out.ring_->generators()[i].degree;
  }
  if (c != 0) out.terms_.emplace(Monomial{degree, std::move(exponents)}, c);
  out.apply_bound();
  return out;
}

GradedElement GradedElement::from_canonical(RingHandle ring, TermMap terms) {
  GradedElement out(std::move(ring));
  out.terms_ = std::move(terms);
  return out;
}

bool GradedElement::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_) {
    if (m.degree != degree) return false;
  }
  return true;
}

std::optional<int> GradedElement::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree;
  if (terms_.rbegin()->first.degree != d) return std::nullopt;
  return d;
}

int GradedElement::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree; }

Rational GradedElement::constant_term() const {
  return coefficient(std::vector<std::uint32_t>(ring_->size(), 0));
}

Rational GradedElement::coefficient(const std::vector<std::uint32_t>& exponents) const {
  int degree = 0;
  for (std::size_t i = 0; i < exponents.size() && i < ring_->size(); ++i) {
    degree += static_cast<int>(exponents[i]) * ring_->generators()[i].degree;
  }
  auto it = terms_.find(Monomial{degree, exponents});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool GradedElement::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (auto e : terms_.begin()->first.exponents) {
    if (e != 0) return false;
  }
  return true;
}

bool GradedElement::is_integral() const {
  for (const auto& [m, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

GradedElement GradedElement::grade_component(int degree) const {
  GradedElement out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.degree == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

GradedElement GradedElement::truncated(int bound) const {
  GradedElement out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.degree > bound) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

void GradedElement::check_same_ring(const GradedElement& other) const {
  if (!ring_->same_as(*other.ring_)) throw RingMismatch("operands belong to different rings");
}

void GradedElement::apply_bound() {
  if (auto bound = ring_->dim_bound()) {
    while (!terms_.empty() && terms_.rbegin()->first.degree > *bound) terms_.erase(std::prev(terms_.end()));
  }
}

GradedElement& GradedElement::operator+=(const GradedElement& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GradedElement& GradedElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

GradedElement& GradedElement::operator*=(const GradedElement& other) {
  *this = *this * other;
  return *this;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return GradedElement(a.ring_);
  const std::size_t pairs = a.size() * b.size();
  if (kernels::openmp_enabled() && pairs >= kernels::parallel_threshold()) {
    return kernels::multiply_parallel(a, b);
  }
  return kernels::multiply_serial(a, b);
}

GradedElement GradedElement::operator-() const {
  GradedElement out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GradedElement GradedElement::pow(unsigned exponent) const {
  GradedElement result = one_like(*this);
  GradedElement base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool GradedElement::operator==(const GradedElement& other) const {
  return ring_->same_as(*other.ring_) && terms_ == other.terms_;
}

GradedElement zero_like(const GradedElement& a) { return GradedElement(a.ring()); }
GradedElement one_like(const GradedElement& a) { return GradedElement::constant(a.ring(), 1); }

GradedElement substitute(const GradedElement& a, const std::map<std::string, GradedElement>& images,
                         const RingHandle& target) {
  const auto& gens = a.ring()->generators();
  std::vector<const GradedElement*> image_of(gens.size(), nullptr);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto it = images.find(gens[i].name);
    if (it == images.end()) continue;
    if (!it->second.ring()->same_as(*target)) {
      throw RingMismatch("image of '" + gens[i].name + "' is not in the target ring");
    }
    image_of[i] = &it->second;
  }
  // powers[i][e] = image_i^e, filled lazily
  std::vector<std::vector<GradedElement>> powers(gens.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const GradedElement& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(GradedElement::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *image_of[i]);
    return cache[e];
  };

  GradedElement out(target);
  for (const auto& [m, c] : a.terms()) {
    GradedElement t = GradedElement::constant(target, c);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (!image_of[i]) throw std::invalid_argument("no image given for generator '" + gens[i].name + "'");
      t = t * power(i, m.exponents[i]);
      if (t.is_zero()) break;
    }
    out += t;
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> monomials_of_degree(const Ring& ring, int degree) {
  for (const auto& g : ring.generators()) {
    if (g.degree == 0) throw std::invalid_argument("monomial enumeration needs positive generator degrees");
  }
  std::vector<std::vector<std::uint32_t>> out;
  if (degree < 0) return out;
  std::vector<std::uint32_t> exps(ring.size(), 0);
  // depth-first over generators, larger exponents of earlier generators first
  auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == ring.size()) {
      if (remaining == 0) out.push_back(exps);
      return;
    }
    const int w = ring.generators()[i].degree;
    for (int e = remaining / w; e >= 0; --e) {
      exps[i] = static_cast<std::uint32_t>(e);
      self(self, i + 1, remaining - e * w);
    }
    exps[i] = 0;
  };
  recurse(recurse, 0, degree);
  return out;
}

namespace {

std::string monomial_string(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.generators()[i].name;
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out;
}

}  // namespace

void require_integral(const GradedElement& a, std::string_view what) {
  if (!a.is_integral()) throw std::domain_error(std::string(what) + " is not integral: " + to_string(a));
}

std::string to_string(const GradedElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_string(*a.ring(), m);
    if (mono.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += to_string(magnitude) + " * " + mono;
    }
  }
  return out;
}

namespace {

class ElementParser {
 public:
  ElementParser(const RingHandle& ring, std::string_view text) : ring_(ring), text_(text) {}

  GradedElement parse() {
    GradedElement value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << what << " at offset " << pos_ << " in '" << text_ << "'";
    throw std::invalid_argument(msg.str());
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  GradedElement expression() {
    GradedElement acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    for (;;) {
      GradedElement t = product();
      if (negate) {
        acc -= t;
      } else {
        acc += t;
      }
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return acc;
      }
    }
  }

  GradedElement product() {
    GradedElement acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  GradedElement factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      GradedElement inner = expression();
      if (!accept(')')) fail("expected ')'");
      return with_power(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string literal(digits());
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        auto den = digits();
        if (den.empty()) fail("expected denominator");
        literal += "/" + std::string(den);
      }
      return GradedElement::constant(ring_, parse_rational(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      auto name = text_.substr(start, pos_ - start);
      if (!ring_->index_of(name)) fail("unknown generator '" + std::string(name) + "'");
      return with_power(GradedElement::generator(ring_, name));
    }
    fail("unexpected character");
  }

  GradedElement with_power(GradedElement base) {
    if (!accept('^')) return base;
    skip_space();
    auto exp = digits();
    if (exp.empty()) fail("expected exponent");
    return base.pow(static_cast<unsigned>(std::stoul(std::string(exp))));
  }

  const RingHandle& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedElement parse_element(const RingHandle& ring, std::string_view text) {
  return ElementParser(ring, text).parse();
}

}  // namespace chow
