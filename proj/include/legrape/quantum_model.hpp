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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

namespace legrape {

// Two interacting qubits with an Ising coupling and local x/y drives.
// States are 4x4 density matrices; dynamics act on the real split of the
// column-stacked density matrix, a 32-component real vector.
inline constexpr int kHilbertDim = 4;
inline constexpr int kVecDim = 2 * kHilbertDim * kHilbertDim;  // 32

using DensityMatrix = Eigen::Matrix4cd;
using VectorizedState = Eigen::VectorXd;  // length kVecDim

enum class PauliAxis { x, y, z };

// Parses 'x'/'y'/'z'; anything else is an argument error.
PauliAxis pauli_axis_from(char axis);

Eigen::Matrix2cd pauli(PauliAxis axis);

// H = (J/4) s1z s2z + 1/2 (u1x s1x + u1y s1y + u2x s2x + u2y s2y),
// with snm acting on qubit n. Channel order of u: (u1x, u1y, u2x, u2y).
Eigen::Matrix4cd hamiltonian(double coupling_j, const Eigen::Vector4d& u);

// Collective dephasing and raising/lowering operators at uniform rate gamma:
// [0] Gz = sqrt(g)(s1z+s2z)/2, [1] G+ and [2] G- = sqrt(g)(s1x+s2x)/2 -+ ...
std::array<Eigen::Matrix4cd, 3> lindblad_operators(double gamma);

// Column-major stacking of rho into R, split as x = [Re(R); Im(R)].
VectorizedState vectorize(const DensityMatrix& rho);

// Exact inverse of vectorize. Throws if x is not length 32.
DensityMatrix densify(const VectorizedState& x);

// Real 32x32 generators of the vectorized Lindblad dynamics,
// dx/dt = alpha*drift*x + beta*(sum_c u_c * controls[c])*x.
struct SystemMatrices {
  Eigen::MatrixXd drift;                     // kVecDim x kVecDim
  std::array<Eigen::MatrixXd, 4> controls;   // channel order (u1x, u1y, u2x, u2y)
  double coupling_j = 0.0;
  double decoherence_gamma = 0.0;
};

SystemMatrices build_system(double coupling_j, double gamma);

struct ControlSignal;  // propagation.hpp

// Integrates the unexpanded 32-dimensional system with piecewise-constant
// controls via per-step matrix exponentials; returns all K+1 samples.
std::vector<VectorizedState> propagate_exact(const SystemMatrices& sys,
                                             const ControlSignal& u,
                                             const VectorizedState& x0,
                                             double alpha, double beta);

}  // namespace legrape
