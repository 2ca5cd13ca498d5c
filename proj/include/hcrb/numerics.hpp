// SPDX-License-Identifier: Apache-2.0
//
// hcrb: hybrid Cramer-Rao bound analysis for coherent distributed MIMO radar
// Copyright (C) 2026 the hcrb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "hcrb/errors.hpp"

namespace hcrb {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Tolerances governing the dense-matrix kernel. All thresholds are relative:
/// the information matrices handled here mix entries of order one with
/// entries of order f_c^2 ~ 1e18, so absolute cutoffs are meaningless.
struct TolerancePolicy {
  /// Relative symmetry tolerance: max|A - A^T| <= sym_tol * max|A|.
  double sym_tol = 1e-10;
  /// Eigenvalue floor for semidefiniteness tests, relative to the largest
  /// eigenvalue magnitude of the matrix under test.
  double psd_tol = 1e-9;
  /// Maximum acceptable condition estimate when inverting.
  double inv_cond_max = 1e12;

  void require_valid() const {
    if (!(sym_tol > 0.0) || !(psd_tol > 0.0) || !(inv_cond_max > 0.0)) {
      throw std::invalid_argument("TolerancePolicy: all tolerances must be strictly positive");
    }
  }
};

inline bool is_symmetric(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return true;
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

/// Eigenvalues of a symmetric 2x2 matrix by the closed-form quadratic,
/// ascending. Exact up to rounding; used wherever a semidefiniteness verdict
/// on a 2x2 bound matrix must not depend on iteration behavior.
inline Eigen::Vector2d sym2x2_eigenvalues(const Eigen::Matrix2d& m) {
  const double a = m(0, 0);
  const double c = m(1, 1);
  const double b = 0.5 * (m(0, 1) + m(1, 0));
  const double mean = 0.5 * (a + c);
  const double disc = std::hypot(0.5 * (a - c), b);
  return {mean - disc, mean + disc};
}

/// Eigenvalues of a symmetric matrix, ascending. 2x2 inputs take the
/// closed-form path; anything larger goes through the iterative symmetric
/// solver.
inline Vector symmetric_eigenvalues(const Matrix& m) {
  if (m.rows() == 2 && m.cols() == 2) {
    const Eigen::Vector2d e = sym2x2_eigenvalues(m);
    Vector out(2);
    out << e(0), e(1);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw IllConditioned("symmetric eigensolver failed to converge",
                         std::numeric_limits<double>::infinity());
  }
  return es.eigenvalues();
}

namespace detail {

// Symmetric diagonal equilibration scales. Strongly graded matrices (a prior
// block of order 1/sigma^2 next to O(1) reflectivity terms) would otherwise
// poison both the condition estimate and the inverse.
inline Vector equilibration_scales(const Matrix& m) {
  const double overall = m.cwiseAbs().maxCoeff();
  if (overall == 0.0 || !std::isfinite(overall)) {
    throw IllConditioned("matrix is zero or contains non-finite entries",
                         std::numeric_limits<double>::infinity());
  }
  const double floor = 1e-14 * overall;
  Vector s(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s(i) = 1.0 / std::sqrt(std::max(std::abs(m(i, i)), floor));
  }
  return s;
}

inline void require_square(const Matrix& m, const char* name) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << name << " must be square, got " << m.rows() << "x" << m.cols();
    throw ShapeMismatch(os.str());
  }
}

}  // namespace detail

/// Inverse of a symmetric matrix via the spectral decomposition of the
/// equilibrated matrix. The output is symmetrized as (X + X^T)/2. Throws
/// NotSymmetric when the input fails the relative symmetry test and
/// IllConditioned (with the estimate) when the equilibrated condition
/// estimate exceeds pol.inv_cond_max.
inline Matrix invert_symmetric(const Matrix& m, const TolerancePolicy& pol = {}) {
  pol.require_valid();
  detail::require_square(m, "invert_symmetric: input");
  if (m.size() == 0) return m;
  if (!is_symmetric(m, pol.sym_tol)) {
    throw NotSymmetric("invert_symmetric: input is not symmetric within sym_tol");
  }

  const Vector s = detail::equilibration_scales(m);
  const Matrix sym = 0.5 * (m + m.transpose());
  const Matrix scaled = s.asDiagonal() * sym * s.asDiagonal();

  Eigen::SelfAdjointEigenSolver<Matrix> es(scaled);
  if (es.info() != Eigen::Success) {
    throw IllConditioned("invert_symmetric: eigensolver failed",
                         std::numeric_limits<double>::infinity());
  }
  const Vector ev = es.eigenvalues();
  const double emax = ev.cwiseAbs().maxCoeff();
  const double emin = ev.cwiseAbs().minCoeff();
  const double cond = emin > 0.0 ? emax / emin : std::numeric_limits<double>::infinity();
  if (!std::isfinite(cond) || cond > pol.inv_cond_max) {
    std::ostringstream os;
    os << "invert_symmetric: condition estimate " << cond << " exceeds limit "
       << pol.inv_cond_max;
    throw IllConditioned(os.str(), cond);
  }

  Matrix x = es.eigenvectors() * ev.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
  x = (s.asDiagonal() * x * s.asDiagonal()).eval();
  return 0.5 * (x + x.transpose());
}

/// block_aa - block_ab * block_bb^{-1} * block_ab^T, symmetrized.
inline Matrix schur_complement(const Matrix& block_aa, const Matrix& block_ab,
                               const Matrix& block_bb, const TolerancePolicy& pol = {}) {
  detail::require_square(block_aa, "schur_complement: block_aa");
  detail::require_square(block_bb, "schur_complement: block_bb");
  if (block_ab.rows() != block_aa.rows() || block_ab.cols() != block_bb.rows()) {
    std::ostringstream os;
    os << "schur_complement: coupling block is " << block_ab.rows() << "x" << block_ab.cols()
       << ", expected " << block_aa.rows() << "x" << block_bb.rows();
    throw ShapeMismatch(os.str());
  }
  const Matrix bb_inv = invert_symmetric(block_bb, pol);
  const Matrix r = block_aa - block_ab * bb_inv * block_ab.transpose();
  return 0.5 * (r + r.transpose());
}

/// Loewner-order test a <= b: true iff the smallest eigenvalue of (b - a) is
/// no smaller than -psd_tol times the largest eigenvalue magnitude of (b - a).
inline bool psd_order_leq(const Matrix& a, const Matrix& b, const TolerancePolicy& pol = {}) {
  pol.require_valid();
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("psd_order_leq: operands differ in shape");
  }
  detail::require_square(a, "psd_order_leq: a");
  if (!is_symmetric(a, pol.sym_tol) || !is_symmetric(b, pol.sym_tol)) {
    throw NotSymmetric("psd_order_leq: operands must be symmetric");
  }
  if (a.size() == 0) return true;
  Matrix d = b - a;
  d = 0.5 * (d + d.transpose()).eval();
  const Vector ev = symmetric_eigenvalues(d);
  const double maxabs = ev.cwiseAbs().maxCoeff();
  return ev.minCoeff() >= -pol.psd_tol * maxabs;
}

}  // namespace hcrb
