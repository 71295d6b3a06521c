#include "chow/blowup.hpp"

#include "chow/sampling.hpp"

#include <sstream>

namespace chow {

namespace {

std::string exps_string(const RingHandle& ring, const std::vector<std::uint32_t>& exps) {
  return to_string(GradedElement::term(ring, exps, 1));
}

/// Every structural requirement; returns an empty string when satisfied.
std::string structure_problem(const EmbeddingData& d) {
  if (!d.ambient || !d.center) return "ambient and center rings are required";
  if (d.codim < 1) return "codimension must be at least 1 (got " + std::to_string(d.codim) + ")";
  if (!d.ambient->dim_bound() || !d.center->dim_bound()) return "ambient and center rings need a dim_bound";
  for (const auto* ring : {d.ambient.get(), d.center.get()}) {
    for (const auto& g : ring->generators()) {
      if (g.degree <= 0) return "generator '" + g.name + "' must have positive degree";
    }
  }
  if (static_cast<int>(d.normal_chern.size()) != d.codim) {
    return "normal bundle needs exactly " + std::to_string(d.codim) + " Chern classes";
  }
  for (std::size_t i = 0; i < d.normal_chern.size(); ++i) {
    const auto& c = d.normal_chern[i];
    if (!c.ring()->same_as(*d.center)) return "normal Chern classes must live in the center ring";
    if (!c.is_homogeneous(static_cast<int>(i + 1))) return "c_" + std::to_string(i + 1) + "(N) is not homogeneous";
  }
  for (const auto& g : d.ambient->generators()) {
    auto it = d.pull_images.find(g.name);
    if (it == d.pull_images.end()) return "no restriction image for ambient generator '" + g.name + "'";
    if (!it->second.ring()->same_as(*d.center)) return "image of '" + g.name + "' is not in the center ring";
    if (!it->second.is_homogeneous(g.degree)) return "restriction of '" + g.name + "' is not degree-preserving";
  }
  std::map<std::vector<std::uint32_t>, const GradedElement*> table;
  for (const auto& [exps, value] : d.push_table) {
    if (exps.size() != d.center->size()) return "push table key has the wrong number of exponents";
    if (!value.ring()->same_as(*d.ambient)) return "push table values must live in the ambient ring";
    table[exps] = &value;
  }
  for (int k = 0; k <= *d.center->dim_bound(); ++k) {
    for (const auto& exps : monomials_of_degree(*d.center, k)) {
      auto it = table.find(exps);
      if (it == table.end()) return "push table is missing basis element " + exps_string(d.center, exps);
      if (!it->second->is_homogeneous(k + d.codim)) {
        return "push of " + exps_string(d.center, exps) + " is not homogeneous of degree " +
               std::to_string(k + d.codim);
      }
    }
  }
  return {};
}

std::vector<GradedElement> full_basis(const RingHandle& ring) {
  std::vector<GradedElement> out;
  for (int k = 0; k <= *ring->dim_bound(); ++k) {
    for (auto& exps : monomials_of_degree(*ring, k)) out.push_back(GradedElement::term(ring, std::move(exps), 1));
  }
  return out;
}

}  // namespace

EmbeddingData linear_blowup(int n, int m) {
  if (m < 0 || m >= n) throw std::invalid_argument("linear_blowup needs 0 <= m < n");
  EmbeddingData d;
  d.ambient = Ring::make({{"t", 1}}, n);
  d.center = Ring::make({{"u", 1}}, m);
  d.codim = n - m;
  const auto u = GradedElement::generator(d.center, "u");
  const auto t = GradedElement::generator(d.ambient, "t");
  d.pull_images.emplace("t", u);
  for (int k = 0; k <= m; ++k) d.push_table.emplace_back(std::vector<std::uint32_t>{static_cast<std::uint32_t>(k)}, t.pow(static_cast<unsigned>(k + n - m)));
  for (int i = 1; i <= d.codim; ++i) d.normal_chern.push_back(u.pow(static_cast<unsigned>(i)) * Rational(binomial(d.codim, i)));
  return d;
}

ValidationReport embedding_validate(const EmbeddingData& d, int samples, std::uint64_t seed) {
  ValidationReport report;
  auto reject = [&](std::string why) {
    report.accepted = false;
    report.witness = std::move(why);
    return report;
  };
  if (auto problem = structure_problem(d); !problem.empty()) return reject("structure: " + problem);

  const Blowup model(d);
  const auto ambient_basis = full_basis(d.ambient);
  const auto center_basis = full_basis(d.center);
  const auto normal_top = d.normal_chern.back();

  auto check_pair_ambient = [&](const GradedElement& a, const GradedElement& b) -> std::string {
    ++report.checks;
    const auto lhs = model.restrict_to_center(a * b);
    const auto rhs = model.restrict_to_center(a) * model.restrict_to_center(b);
    if (lhs != rhs) return "homomorphism: i^*(" + to_string(a) + " * " + to_string(b) + ") = " + to_string(lhs) + " but product of restrictions = " + to_string(rhs);
    return {};
  };
  auto check_projection = [&](const GradedElement& alpha, const GradedElement& gamma) -> std::string {
    ++report.checks;
    const auto lhs = model.push_from_center(model.restrict_to_center(alpha) * gamma);
    const auto rhs = alpha * model.push_from_center(gamma);
    if (lhs != rhs) {
      return "projection formula: alpha = " + to_string(alpha) + ", gamma = " + to_string(gamma) + ": i_*(i^*alpha.gamma) = " + to_string(lhs) + " but alpha.i_*gamma = " + to_string(rhs);
    }
    return {};
  };
  auto check_self = [&](const GradedElement& g1, const GradedElement& g2) -> std::string {
    ++report.checks;
    const auto lhs = model.push_from_center(g1) * model.push_from_center(g2);
    const auto rhs = model.push_from_center(g1 * g2 * normal_top);
    if (lhs != rhs) {
      return "self-intersection: gamma = " + to_string(g1) + ", gamma' = " + to_string(g2) + ": i_*gamma.i_*gamma' = " + to_string(lhs) + " but i_*(gamma.gamma'.c_r(N)) = " + to_string(rhs);
    }
    return {};
  };

  for (const auto& a : ambient_basis) {
    for (const auto& b : ambient_basis) {
      if (auto w = check_pair_ambient(a, b); !w.empty()) return reject(w);
    }
  }
  for (const auto& a : ambient_basis) {
    for (const auto& g : center_basis) {
      if (auto w = check_projection(a, g); !w.empty()) return reject(w);
    }
  }
  for (const auto& g1 : center_basis) {
    for (const auto& g2 : center_basis) {
      if (auto w = check_self(g1, g2); !w.empty()) return reject(w);
    }
  }
  Sampler sampler(seed);
  const int top_ambient = *d.ambient->dim_bound();
  const int top_center = *d.center->dim_bound();
  for (int s = 0; s < samples; ++s) {
    const auto a = sampler.element(d.ambient, top_ambient);
    const auto b = sampler.element(d.ambient, top_ambient);
    const auto g1 = sampler.element(d.center, top_center);
    const auto g2 = sampler.element(d.center, top_center);
    if (auto w = check_pair_ambient(a, b); !w.empty()) return reject(w);
    if (auto w = check_projection(a, g1); !w.empty()) return reject(w);
    if (auto w = check_self(g1, g2); !w.empty()) return reject(w);
  }
  return report;
}

std::string to_string(const BlowupClass& a) {
  return "phi^*(" + to_string(a.ambient) + ") + j_*(" + to_string(a.exceptional) + ")";
}

namespace {

EmbeddingData checked(EmbeddingData d) {
  if (auto problem = structure_problem(d); !problem.empty()) throw std::invalid_argument(problem);
  return d;
}

}  // namespace

Blowup::Blowup(EmbeddingData data)
    : data_(checked(std::move(data))),
      exceptional_(ProjBundleGraded::make(
          BundleClass<GradedElement>(GradedElement::constant(data_.center, 1), data_.normal_chern), "xi")),
      cw_(cw_top(*exceptional_)) {
  for (const auto& [exps, value] : data_.push_table) push_lookup_.insert_or_assign(exps, value);
}

GradedElement Blowup::restrict_to_center(const GradedElement& alpha) const {
  return substitute(alpha, data_.pull_images, data_.center);
}

GradedElement Blowup::push_from_center(const GradedElement& gamma) const {
  if (!gamma.ring()->same_as(*data_.center)) throw RingMismatch("i_* expects an element of CH(P)");
  GradedElement out(data_.ambient);
  for (const auto& [m, c] : gamma.terms()) out += push_lookup_.at(m.exponents) * c;
  return out;
}

BlowupClass Blowup::zero() const { return {GradedElement(data_.ambient), exceptional_->zero()}; }

BlowupClass Blowup::pull(const GradedElement& alpha) const {
  if (!alpha.ring()->same_as(*data_.ambient)) throw RingMismatch("phi^* expects an element of CH(X)");
  return {alpha, exceptional_->zero()};
}

// phi_*(phi^*a + j_*eps) = a + i_*eta_*(eps) = a for normalised eps.
GradedElement Blowup::push(const BlowupClass& a) const {
  return a.ambient + push_from_center(eta_push(a.exceptional));
}

BlowupClass Blowup::exc_push(const PBGraded& eps) const {
  const GradedElement gamma = eta_push(eps);
  return {push_from_center(gamma), eps - cw_ * eta_pull(gamma)};
}

BlowupClass Blowup::multiply(const BlowupClass& a, const BlowupClass& b) const {
  // phi^*a.phi^*b = phi^*(ab); phi^*a.j_*e = j_*(eta^*i^*a.e); j_*e.j_*e' = j_*(-xi.e.e')
  const auto xi = exceptional_->hyperplane();
  PBGraded exceptional_arg = eta_pull(restrict_to_center(a.ambient)) * b.exceptional +
                             eta_pull(restrict_to_center(b.ambient)) * a.exceptional -
                             xi * a.exceptional * b.exceptional;
  return pull(a.ambient * b.ambient) + exc_push(exceptional_arg);
}

PBGraded Blowup::delta_decompose(const BlowupClass& a) const {
  if (!push(a).is_zero()) throw std::invalid_argument("delta_decompose requires phi_*(a) = 0");
  const auto renormalised = exc_push(a.exceptional);
  if (!renormalised.ambient.is_zero()) throw std::invalid_argument("exceptional part is not normalised");
  return renormalised.exceptional;
}

std::vector<BlowupClass> Blowup::basis(int degree) const {
  std::vector<BlowupClass> out;
  for (auto& exps : monomials_of_degree(*data_.ambient, degree)) {
    if (degree > *data_.ambient->dim_bound()) break;
    out.push_back(pull(GradedElement::term(data_.ambient, std::move(exps), 1)));
  }
  for (int i = 0; i <= codim() - 2; ++i) {
    const int base_degree = degree - 1 - i;
    if (base_degree < 0 || base_degree > *data_.center->dim_bound()) continue;
    for (auto& exps : monomials_of_degree(*data_.center, base_degree)) {
      const auto m = GradedElement::term(data_.center, std::move(exps), 1);
      out.push_back({GradedElement(data_.ambient), eta_pull(m) * exceptional_->hyperplane_power(i)});
    }
  }
  return out;
}

int Blowup::dimension() const { return *data_.ambient->dim_bound(); }

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<Generator> parse_generators(const std::string& value) {
  std::vector<Generator> gens;
  std::stringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("generator '" + item + "' needs name:degree");
    gens.push_back({trim(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
  }
  return gens;
}

std::string generators_text(const Ring& ring) {
  std::string out;
  for (const auto& g : ring.generators()) {
    if (!out.empty()) out += ", ";
    out += g.name + ":" + std::to_string(g.degree);
  }
  return out;
}

}  // namespace

EmbeddingData parse_embedding(std::string_view text) {
  std::map<std::string, std::string> fields;
  std::vector<std::pair<std::string, std::string>> ordered;
  std::stringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key = value");
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (!fields.emplace(key, value).second) throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    ordered.emplace_back(key, value);
  }
  auto require = [&](const std::string& key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) throw std::invalid_argument("missing key '" + key + "'");
    return it->second;
  };

  EmbeddingData d;
  d.ambient = Ring::make(parse_generators(require("ambient.generators")), std::stoi(require("ambient.dim_bound")));
  d.center = Ring::make(parse_generators(require("center.generators")), std::stoi(require("center.dim_bound")));
  d.codim = std::stoi(require("codim"));
  for (int i = 1; i <= d.codim; ++i) {
    auto it = fields.find("normal.c" + std::to_string(i));
    d.normal_chern.push_back(it == fields.end() ? GradedElement(d.center) : parse_element(d.center, it->second));
  }
  for (const auto& [key, value] : ordered) {
    if (key.rfind("pull.", 0) == 0) {
      d.pull_images.insert_or_assign(key.substr(5), parse_element(d.center, value));
    } else if (key.rfind("push[", 0) == 0 && key.back() == ']') {
      const auto monomial = parse_element(d.center, key.substr(5, key.size() - 6));
      if (monomial.size() != 1 || monomial.terms().begin()->second != 1) {
        throw std::invalid_argument("push key '" + key + "' must be a single monomial");
      }
      d.push_table.emplace_back(monomial.terms().begin()->first.exponents, parse_element(d.ambient, value));
    } else if (key == "codim" || key == "ambient.generators" || key == "ambient.dim_bound" ||
               key == "center.generators" || key == "center.dim_bound") {
      continue;
    } else if (key.rfind("normal.c", 0) == 0 && key.size() > 8 &&
               key.find_first_not_of("0123456789", 8) == std::string::npos) {
      const int i = std::stoi(key.substr(8));
      if (i < 1 || i > d.codim) throw std::invalid_argument("'" + key + "' is outside c_1..c_codim");
    } else {
      throw std::invalid_argument("unknown key '" + key + "'");
    }
  }
  return d;
}

std::string to_text(const EmbeddingData& d) {
  std::ostringstream out;
  out << "ambient.generators = " << generators_text(*d.ambient) << "\n";
  if (d.ambient->dim_bound()) out << "ambient.dim_bound = " << *d.ambient->dim_bound() << "\n";
  out << "center.generators = " << generators_text(*d.center) << "\n";
  if (d.center->dim_bound()) out << "center.dim_bound = " << *d.center->dim_bound() << "\n";
  out << "codim = " << d.codim << "\n";
  for (const auto& [name, image] : d.pull_images) out << "pull." << name << " = " << to_string(image) << "\n";
  for (const auto& [exps, value] : d.push_table) {
    out << "push[" << exps_string(d.center, exps) << "] = " << to_string(value) << "\n";
  }
  for (std::size_t i = 0; i < d.normal_chern.size(); ++i) {
    out << "normal.c" << i + 1 << " = " << to_string(d.normal_chern[i]) << "\n";
  }
  return out.str();
}

}  // namespace chow
