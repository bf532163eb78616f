#pragma once

#include <span>
#include <vector>

#include "trailnav/errors.hpp"
#include "trailnav/midline.hpp"

namespace trailnav {

/// Polynomial coefficients beta_0..beta_d, lateral pixels over the
/// normalized forward parameter in [0,1].
struct PolyCoeffs {
  std::vector<double> beta;

  int degree() const { return static_cast<int>(beta.size()) - 1; }
  bool operator==(const PolyCoeffs&) const = default;
};

/// Vandermonde design matrix, row-major: entry(i,k) = params[i]^k,
/// k = 0..degree (the constant column is included).
struct DesignMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> entries;

  double at(int i, int k) const { return entries[static_cast<std::size_t>(i) * cols + k]; }
};

/// Throws UnderdeterminedError if params.size() < degree+1 and
/// DuplicateParamsError if fewer than degree+1 distinct values remain.
DesignMatrix build_design(std::span<const double> params, int degree);

/// Least-squares polynomial fit of values over params (QR factorization).
/// With exactly degree+1 distinct params this reduces to interpolation.
///
/// Throws UnderdeterminedError, DuplicateParamsError, NumericalFailureError.
PolyCoeffs fit_poly(std::span<const double> params, std::span<const double> values, int degree);

/// Fit the accepted midline rows: params are the row offsets normalized by
/// the image height, values are the midpoint columns.
///
/// Throws InvalidMidlineError if the estimate is invalid.
PolyCoeffs fit_poly(const MidlineEstimate& midline, int degree);

/// Horner evaluation of sum_k beta_k * p^k.
double eval_poly(const PolyCoeffs& coeffs, double p);

}  // namespace trailnav
