#include "trailnav/pathfit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace trailnav {
namespace {

int count_distinct(std::span<const double> params) {
  std::vector<double> sorted(params.begin(), params.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return static_cast<int>(sorted.size());
}

}  // namespace

DesignMatrix build_design(std::span<const double> params, int degree) {
  const int m = static_cast<int>(params.size());
  const int cols = degree + 1;
  if (m < cols) {
    throw UnderdeterminedError("need at least " + std::to_string(cols) + " points for degree " +
                               std::to_string(degree) + ", got " + std::to_string(m));
  }
  if (count_distinct(params) < cols) {
    throw DuplicateParamsError("fewer than degree+1 distinct parameters");
  }

  DesignMatrix design;
  design.rows = m;
  design.cols = cols;
  design.entries.resize(static_cast<std::size_t>(m) * cols);
  for (int i = 0; i < m; ++i) {
    double power = 1.0;
    for (int k = 0; k < cols; ++k) {
      design.entries[static_cast<std::size_t>(i) * cols + k] = power;
      power *= params[i];
    }
  }
  return design;
}

PolyCoeffs fit_poly(std::span<const double> params, std::span<const double> values, int degree) {
  const DesignMatrix design = build_design(params, degree);

  Eigen::MatrixXd A = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                                     Eigen::RowMajor>>(
      design.entries.data(), design.rows, design.cols);
  Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                        static_cast<Eigen::Index>(values.size()));

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  if (qr.rank() < design.cols) {
    throw NumericalFailureError("rank-deficient design matrix");
  }
  Eigen::VectorXd beta = qr.solve(b);
  if (!beta.allFinite()) {
    throw NumericalFailureError("non-finite fit result");
  }

  PolyCoeffs out;
  out.beta.assign(beta.data(), beta.data() + beta.size());
  return out;
}

PolyCoeffs fit_poly(const MidlineEstimate& midline, int degree) {
  if (!midline.valid) {
    throw InvalidMidlineError("cannot fit an invalid midline");
  }
  std::vector<double> params;
  std::vector<double> values;
  params.reserve(midline.rows.size());
  values.reserve(midline.rows.size());
  for (const MidlineRow& row : midline.rows) {
    params.push_back(static_cast<double>(row.forward) / midline.height);
    values.push_back(row.mid_x);
  }
  return fit_poly(params, values, degree);
}

double eval_poly(const PolyCoeffs& coeffs, double p) {
  double acc = 0.0;
  for (auto it = coeffs.beta.rbegin(); it != coeffs.beta.rend(); ++it) {
    acc = acc * p + *it;
  }
  return acc;
}

}  // namespace trailnav
