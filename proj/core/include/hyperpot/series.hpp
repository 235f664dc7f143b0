#ifndef HYPERPOT_SERIES_HPP
#define HYPERPOT_SERIES_HPP

namespace hyperpot {

struct SeriesResult {
  double value = 0.0;
  double tail_bound = 0.0;  // rigorous bound on the truncation error
  int terms = 0;            // number of series terms consumed
};

/// Raw alternating series S(k,l) = sum_{j>=1} (-1)^j (1/j) (1-a^j)^k (1-b^j)^l
/// for 0 <= a, b < 1.  Computed as -log 2 + sum_j (-1)^{j+1} d_j with
/// d_j = (1/j) (1 - (1-a^j)^k (1-b^j)^l), whose terms decay geometrically;
/// the returned tail bound is the geometric envelope of the remainder
/// (first omitted term's envelope).
SeriesResult alternating_cluster_series(int k, int l, double a, double b,
                                        double tol = 1e-12, int max_terms = 2000000);

/// Scalar decay sequence phi(n) = (-1)^{n+1} S(n, 0) at parameter alpha.
/// phi(1) = log((1+alpha)/2).
SeriesResult phi_n(int n, double alpha, double tol = 1e-12);

/// Hyperedge value by counts, as the logarithm expansion of the finite
/// binomial form below: (-1)^{k+l} S(k,l).  Note the binomial form includes
/// the empty-subset term log 2, so this differs from the vacuum-normalized
/// value; see wrm_phi_vacuum.
SeriesResult wrm_phi_series(int k, int l, double a, double b, double tol = 1e-12);

/// Finite double-binomial sum
///   - sum_{k'=0..k} sum_{l'=0..l} C(k,k') C(l,l') (-1)^{k+l-k'-l'}
///       log(1 + a^{k'} b^{l'}),
/// including the (0,0) term log 2.  Exact-arithmetic equal to
/// wrm_phi_series; used as its cross-check (k + l <= 20 keeps the
/// alternating cancellation below 1e-10).
double wrm_phi_binomial(int k, int l, double a, double b);

/// Vacuum-normalized hyperedge value for a connected marked set with k plus
/// and l minus points: wrm_phi_series + (-1)^{k+l} log 2.  Agrees with the
/// subset inclusion-exclusion over cluster weights (the empty set then
/// contributes 0, not log 2).
SeriesResult wrm_phi_vacuum(int k, int l, double a, double b, double tol = 1e-12);

}  // namespace hyperpot

#endif  // HYPERPOT_SERIES_HPP
