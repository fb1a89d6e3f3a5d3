// Copyright 2026 The weakreal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WEAKREAL_RANDOM_STATES_H
#define WEAKREAL_RANDOM_STATES_H

#include <cstddef>

#include "weakreal/qcore.h"
#include "weakreal/rng.h"

namespace weakreal {

/// Standard normal via Box-Muller on uniform01, so draws are reproducible
/// across standard library implementations.
double standard_normal(Engine &engine);

PureState random_pure_state(Engine &engine, std::size_t dim);

/// Ginibre-ensemble density matrix G G^dagger / Tr with G of shape dim x rank.
DensityMatrix random_density_matrix(Engine &engine, std::size_t dim, std::size_t rank);
DensityMatrix random_density_matrix(Engine &engine, std::size_t dim);

/// Haar-distributed unitary via Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(Engine &engine, std::size_t dim);

/// Hermitian matrix with standard-normal entries (real and imaginary parts).
ComplexMatrix random_hermitian(Engine &engine, std::size_t dim);

}  // namespace weakreal

#endif
