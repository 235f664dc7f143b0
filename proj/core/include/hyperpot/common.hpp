#ifndef HYPERPOT_COMMON_HPP
#define HYPERPOT_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hyperpot {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Raised when an evaluated model violates a structural contract it promised
/// (e.g. a weight family that is not hereditarily positive), as opposed to a
/// plain bad argument from the caller.
class ModelError : public std::runtime_error {
public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// Neumaier-compensated accumulator.  Reductions over many small log-terms
// must not depend on accumulation order at the tolerances we assert, so all
// weight/potential sums in the library go through this.
class KahanAccumulator {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline bool close_abs(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= tol;
}

/// |a-b| <= tol * max(1, |b|): relative for large magnitudes, absolute near 0.
inline bool close_rel(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace hyperpot

#endif  // HYPERPOT_COMMON_HPP
