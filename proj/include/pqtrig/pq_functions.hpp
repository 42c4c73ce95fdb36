#pragma once

#include <atomic>
#include <optional>

#include "pqtrig/numeric_config.hpp"

namespace pqtrig {

/// The exponent pair (p, q), p, q > 1, with lazily cached half-periods.
///
/// Two values of pi_{p,q}/2 are cached independently: the quadrature value
/// returned by pi_pq_half() and the series value used internally by the
/// hypergeometric evaluation path. Caches are filled compute-then-store, so
/// concurrent first use from several threads stores identical values.
class PQParams {
 public:
  /// Throws DomainError unless p > 1 and q > 1 (both finite).
  PQParams(double p, double q);

  PQParams(const PQParams& other);
  PQParams& operator=(const PQParams& other);

  double p() const { return p_; }
  double q() const { return q_; }

  /// Quadrature half-period if pi_pq_half() has already run on this object.
  std::optional<double> cached_half_pi() const;

 private:
  friend double pi_pq_half(const PQParams&, const NumericConfig&);
  friend double pi_pq_half_series(const PQParams&, const NumericConfig&);
  friend double arcsin_split_point(const PQParams&, const NumericConfig&);

  double p_;
  double q_;
  mutable std::atomic<double> half_pi_quad_;
  mutable std::atomic<double> half_pi_series_;
  mutable std::atomic<double> split_arcsin_;
};

// --- constants -------------------------------------------------------------

/// pi_{p,q}/2 = integral_0^1 (1 - t^q)^(-1/p) dt by tanh-sinh quadrature.
/// Cached in P. Throws NonConvergent if quad_tol is not met.
double pi_pq_half(const PQParams& P, const NumericConfig& cfg = {});

/// pi_{p,q}/2 from two hypergeometric series at argument 1/2:
/// arcsin_{p,q}(2^(-1/q)) plus the complementary integral at 2^(-1/p).
double pi_pq_half_series(const PQParams& P, const NumericConfig& cfg = {});

/// arcsin_{p,q}(2^(-1/q)): the point where the series path switches from
/// the direct to the complementary representation.
double arcsin_split_point(const PQParams& P, const NumericConfig& cfg = {});

// --- inverse functions ------------------------------------------------------

/// arcsin_{p,q}(x) on [0, 1). Uses x F(1/p, 1/q; 1+1/q; x^q) while
/// x^q <= 1/2, and pi_{p,q}/2 minus the complementary series beyond.
double arcsin_pq(const PQParams& P, double x, const NumericConfig& cfg = {});

/// x F(1/p, 1/q; 1+1/q; x^q) for 0 <= x < 1, with no range switching.
double arcsin_pq_direct(const PQParams& P, double x, const NumericConfig& cfg = {});

/// arccos_{p,q}(x) = arcsin_{p,q}((1 - x^p)^(1/q)) on (0, 1].
double arccos_pq(const PQParams& P, double x, const NumericConfig& cfg = {});

/// pi_{p,q}/2 - arccos_{p,q}(x) = (p/q) integral_0^x (1-u^p)^(1/q-1) u^(p-2) du
/// on (0, 1], evaluated without subtracting from pi_{p,q}/2 for small x.
double half_pi_minus_arccos_pq(const PQParams& P, double x, const NumericConfig& cfg = {});

/// arsinh_{p,q}(x) = integral_0^x (1 + t^q)^(-1/p) dt on [0, inf).
/// Direct series for x^q <= 1/2, the transformed series up to x^q = 3 and a
/// large-argument expansion in powers of x^(-q) beyond.
double arsinh_pq(const PQParams& P, double x, const NumericConfig& cfg = {});

/// x F(1/p, 1/q; 1+1/q; -x^q), valid for 0 <= x, x^q < 1.
double arsinh_pq_direct(const PQParams& P, double x, const NumericConfig& cfg = {});

/// (x^p/(1+x^q))^(1/p) F(1, 1/p; 1+1/q; x^q/(1+x^q)) for x >= 0. Converges
/// slowly for large x; NonConvergent once the term cap is hit.
double arsinh_pq_transformed(const PQParams& P, double x, const NumericConfig& cfg = {});

/// Inverse of tan_{p,q} on (0, 1).
double arctan_pq(const PQParams& P, double y, const NumericConfig& cfg = {});

// --- forward functions ------------------------------------------------------

struct SinCos {
  double sin = 0.0;
  double cos = 0.0;
};

/// sin_{p,q}(x) and cos_{p,q}(x) for 0 < x < pi_{p,q}/2 by safeguarded
/// Newton inversion. Below the split point the unknown is sin and the
/// equation arcsin_{p,q}(y) = x; above it the unknown is cos, solved from
/// the complementary integral against pi_{p,q}/2 - x, which keeps cos
/// accurate where it is tiny.
SinCos sin_cos_pq(const PQParams& P, double x, const NumericConfig& cfg = {});

double sin_pq(const PQParams& P, double x, const NumericConfig& cfg = {});
double cos_pq(const PQParams& P, double x, const NumericConfig& cfg = {});

/// Throws Overflow when cos_{p,q}(x) underflows to zero.
double tan_pq(const PQParams& P, double x, const NumericConfig& cfg = {});

/// Inverse of arsinh_{p,q} on (0, sup arsinh_{p,q}). The upper bracket is
/// doubled until it encloses the root; DomainError once it passes 1e300
/// (x beyond the bounded range when q > p).
double sinh_pq(const PQParams& P, double x, const NumericConfig& cfg = {});

// --- derivatives --------------------------------------------------------------

/// (sin_{p,q})' = cos_{p,q}
double d_sin_pq(const PQParams& P, double x, const NumericConfig& cfg = {});
/// (cos_{p,q})' = -(q/p) cos^(2-p) sin^(q-1), from cos = (1 - sin^q)^(1/p)
double d_cos_pq(const PQParams& P, double x, const NumericConfig& cfg = {});
/// (tan_{p,q})' = 1 + q sin^q / (p cos^p)
double d_tan_pq(const PQParams& P, double x, const NumericConfig& cfg = {});

double d_arcsin_pq(const PQParams& P, double x);
double d_arccos_pq(const PQParams& P, double x);
double d_half_pi_minus_arccos_pq(const PQParams& P, double x);
double d_arsinh_pq(const PQParams& P, double x);
double d_arctan_pq(const PQParams& P, double y, const NumericConfig& cfg = {});
double d_sinh_pq(const PQParams& P, double x, const NumericConfig& cfg = {});

// --- quadrature oracle ------------------------------------------------------

enum class OracleKind {
  arcsin,             // integral_0^x (1 - t^q)^(-1/p) dt, x in [0, 1]
  arsinh,             // integral_0^x (1 + t^q)^(-1/p) dt, x >= 0
  arccos_complement,  // integral_0^x (1 - u^p)^(1/q-1) u^(p-2) du, x in (0, 1]
};

/// Tanh-sinh evaluation of the defining integrals. Shares no code with the
/// hypergeometric path and is intended for cross-validation.
double quad_oracle(OracleKind kind, const PQParams& P, double x, const NumericConfig& cfg = {});

}  // namespace pqtrig
