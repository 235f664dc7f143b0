#include "hyperpot/series.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hyperpot/common.hpp"

namespace hyperpot {

SeriesResult alternating_cluster_series(int k, int l, double a, double b,
                                        double tol, int max_terms) {
  if (k < 0 || l < 0) throw std::invalid_argument("series needs k, l >= 0");
  if (!(a >= 0.0 && a < 1.0) || !(b >= 0.0 && b < 1.0))
    throw std::invalid_argument("series needs 0 <= a, b < 1 (Gibbsian regime)");
  if (!(tol > 0.0)) throw std::invalid_argument("series tolerance must be > 0");

  const double c = std::max(k > 0 ? a : 0.0, l > 0 ? b : 0.0);
  SeriesResult out;
  KahanAccumulator acc;
  acc.add(-M_LN2);

  if (k == 0 && l == 0) {
    // every d_j vanishes; S = -log 2 exactly
    out.value = acc.value();
    out.tail_bound = 0.0;
    out.terms = 0;
    return out;
  }

  double aj = 1.0, bj = 1.0;  // a^j, b^j
  int j = 0;
  for (;;) {
    ++j;
    aj *= a;
    bj *= b;
    // d_j = (1/j) (1 - (1-a^j)^k (1-b^j)^l), computed through logs
    const double log_prod = k * std::log1p(-aj) + l * std::log1p(-bj);
    const double d = -std::expm1(log_prod) / static_cast<double>(j);
    acc.add((j % 2 == 1) ? d : -d);

    // remainder envelope: sum_{i>j} d_i <= (k a^{j+1} + l b^{j+1}) / ((j+1)(1-c))
    const double envelope =
        (k * aj * a + l * bj * b) / (static_cast<double>(j + 1) * (1.0 - c));
    if (envelope < tol) {
      out.tail_bound = envelope;
      break;
    }
    if (j >= max_terms)
      throw std::runtime_error("alternating series did not reach tolerance");
  }
  out.value = acc.value();
  out.terms = j;
  return out;
}

SeriesResult phi_n(int n, double alpha, double tol) {
  if (n < 1) throw std::invalid_argument("phi_n needs n >= 1");
  SeriesResult s = alternating_cluster_series(n, 0, alpha, 0.0, tol);
  if (n % 2 == 0) s.value = -s.value;  // prefactor (-1)^{n+1}
  return s;
}

SeriesResult wrm_phi_series(int k, int l, double a, double b, double tol) {
  SeriesResult s = alternating_cluster_series(k, l, a, b, tol);
  if ((k + l) % 2 == 1) s.value = -s.value;  // prefactor (-1)^{k+l}
  return s;
}

double wrm_phi_binomial(int k, int l, double a, double b) {
  if (k < 0 || l < 0) throw std::invalid_argument("binomial form needs k, l >= 0");
  if (k + l > 40)
    throw std::invalid_argument("binomial form limited to k + l <= 40");
  // binomial coefficient tables
  auto binom_row = [](int n) {
    std::vector<double> row(static_cast<std::size_t>(n) + 1, 1.0);
    for (int i = 1; i <= n; ++i)
      row[static_cast<std::size_t>(i)] =
          row[static_cast<std::size_t>(i - 1)] * (n - i + 1) / i;
    return row;
  };
  const auto ck = binom_row(k);
  const auto cl = binom_row(l);
  KahanAccumulator acc;
  for (int kk = 0; kk <= k; ++kk) {
    for (int ll = 0; ll <= l; ++ll) {
      const double kappa = std::log1p(std::pow(a, kk) * std::pow(b, ll));
      const int sign = ((k - kk + l - ll) % 2 == 0) ? 1 : -1;
      acc.add(-sign * ck[static_cast<std::size_t>(kk)] *
              cl[static_cast<std::size_t>(ll)] * kappa);
    }
  }
  return acc.value();
}

SeriesResult wrm_phi_vacuum(int k, int l, double a, double b, double tol) {
  SeriesResult s = wrm_phi_series(k, l, a, b, tol);
  s.value += ((k + l) % 2 == 0) ? M_LN2 : -M_LN2;
  return s;
}

}  // namespace hyperpot
