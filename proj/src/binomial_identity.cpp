#include "chow/proj_bundle.hpp"

namespace chow {

Integer binomial_sum(int r, int i, int k) {
  Integer acc = 0;
  for (int j = k; j <= i; ++j) {
    Integer term = binomial(r - j, i - j) * binomial(r + 1 - k, j - k);
    if ((j + k) % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

BinomialReport binomial_identity_check(int r) {
  if (r < 0) throw std::invalid_argument("r must be non-negative");
  BinomialReport report;
  report.r = r;
  auto fail = [&](const std::string& what) {
    if (report.ok) report.first_failure = what;
    report.ok = false;
  };
  for (int i = 0; i <= r; ++i) {
    for (int k = 0; k <= i; ++k) {
      ++report.cases;
      const Integer value = binomial_sum(r, i, k);
      const Integer expected = ((i + k) % 2 == 0) ? 1 : -1;
      if (value != expected) {
        fail("T^" + std::to_string(r) + "_{" + std::to_string(i) + "," + std::to_string(k) + "} = " +
             value.get_str() + ", expected " + expected.get_str());
      }
      if (i < r && binomial_sum(r, i + 1, k + 1) != value) {
        fail("T^" + std::to_string(r) + "_{" + std::to_string(i + 1) + "," + std::to_string(k + 1) + "} != T^" +
             std::to_string(r) + "_{" + std::to_string(i) + "," + std::to_string(k) + "}");
      }
    }
  }
  return report;
}

}  // namespace chow
