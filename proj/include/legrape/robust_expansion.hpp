// Copyright 2026 The Legrape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "legrape/quantum_model.hpp"

namespace legrape {

// Closed interval of an uncertain multiplicative parameter. The affine map
// xi(s) = half_width()*s + center() carries the Legendre domain [-1,1]
// onto [lo, hi].
struct UncertainInterval {
  double lo = 1.0;
  double hi = 1.0;
  double center() const { return 0.5 * (hi + lo); }
  double half_width() const { return 0.5 * (hi - lo); }
};

// Orthonormal Legendre polynomial L_p(x) on [-1,1] (int L_p^2 = 1),
// evaluated by the upward three-term recurrence.
double legendre_eval(int p, double x);

// c_p = (p+1)/sqrt((2p+3)(2p+1)); satisfies
// x L_p(x) = c_{p-1} L_{p-1}(x) + c_p L_{p+1}(x).
double recurrence_coeff(int p);

// Symmetric tridiagonal multiplication operator of the parameter in the
// orthonormal Legendre basis: diagonal center, off-diagonals c_p*half_width.
Eigen::MatrixXd build_C(const UncertainInterval& interval, int degree);

// xi(s) = half_width*s + center.
double map_parameter(const UncertainInterval& interval, double s);

// Stacked Legendre expansion coefficients of the parametric state.
// Block (p,q) sits at block index p*(n_beta+1)+q, each block of length 32.
struct CoefficientState {
  Eigen::VectorXd values;
  int n_alpha = 0;
  int n_beta = 0;

  Eigen::Index block_offset(int p, int q) const {
    return static_cast<Eigen::Index>(kVecDim) * (p * (n_beta + 1) + q);
  }
  Eigen::VectorBlock<Eigen::VectorXd> block(int p, int q) {
    return values.segment(block_offset(p, q), kVecDim);
  }
  Eigen::VectorBlock<const Eigen::VectorXd> block(int p, int q) const {
    return values.segment(block_offset(p, q), kVecDim);
  }
};

// Deterministic bilinear system governing the stacked coefficients:
// drift_lifted = C_alpha (x) I_{n_beta+1} (x) drift,
// controls_lifted[c] = I_{n_alpha+1} (x) C_beta (x) controls[c].
struct RobustModel {
  Eigen::MatrixXd drift_lifted;
  std::array<Eigen::MatrixXd, 4> controls_lifted;
  int n_alpha = 0;
  int n_beta = 0;
  UncertainInterval alpha_interval;
  UncertainInterval beta_interval;
  SystemMatrices base;

  Eigen::Index dim() const { return drift_lifted.rows(); }
};

RobustModel lift_system(const SystemMatrices& sys,
                        const UncertainInterval& alpha_interval, int n_alpha,
                        const UncertainInterval& beta_interval, int n_beta);

// Coefficients of a parameter-independent state: block (0,0) = 2*x0
// (the constant polynomial integrates to sqrt(2) on each axis), rest zero.
CoefficientState embed_initial(const VectorizedState& x0, int n_alpha, int n_beta);

// Evaluates the truncated expansion at scaled parameters (a, b) in [-1,1]^2.
VectorizedState reconstruct(const CoefficientState& x, double a, double b);

}  // namespace legrape
