#pragma once

namespace pqtrig {

/// Order a of a power mean. Any finite real; a = 0 is the geometric mean.
class MeanOrder {
 public:
  /// Throws DomainError for a non-finite order.
  explicit MeanOrder(double a);
  double value() const { return a_; }

 private:
  double a_;
};

/// M_a(x, y) = ((x^a + y^a)/2)^(1/a) for a != 0 and sqrt(xy) for a = 0.
///
/// Evaluated in log space so that |a| in the hundreds neither overflows nor
/// underflows; orders with |a| < 1e-13 take the geometric branch. The result
/// is clamped to [min(x,y), max(x,y)]. Throws DomainError unless x, y > 0.
double power_mean(MeanOrder a, double x, double y);

inline double power_mean(double a, double x, double y) { return power_mean(MeanOrder(a), x, y); }

}  // namespace pqtrig
