// SPDX-License-Identifier: Apache-2.0
//
// lbbsec - secrecy outage analysis for beamformed Rician wiretap channels
// Copyright (C) 2026 lbbsec developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>

#include "lbb/rng.hpp"
#include "lbb/types.hpp"

namespace lbb {

using RowVecC = Eigen::RowVectorXcd;
using VecC = Eigen::VectorXcd;
using MatC = Eigen::MatrixXcd;

/// ULA steering row vector toward angle theta: entry m is
/// exp(j 2 pi m spacing cos(theta)), m = 0..n-1. Entries have unit modulus
/// and the first entry is exactly 1.
RowVecC los_vector(int n, double spacing, double theta);

/// Deterministic component of the transmitter->Eve channel: the rank-1
/// outer product of Eve's receive response (negative-sign phases toward
/// arrival angle phi) with the transmit steering row toward theta.
/// Shape: n_eve x n_tx.
MatC los_matrix_to_eve(int n_tx, int n_eve, double spacing_tx, double spacing_eve,
                       double theta, double phi);

/// Rician draw around a deterministic LOS component:
/// sqrt(K/(1+K)) los + sqrt(1/(1+K)) g, with g i.i.d. CN(0,1).
RowVecC sample_rician_vector(const RowVecC& los, double k_factor, Rng& rng);
MatC sample_rician_matrix(const MatC& los, double k_factor, Rng& rng);

} // namespace lbb
