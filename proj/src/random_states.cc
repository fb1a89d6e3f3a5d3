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

#include "weakreal/random_states.h"

#include <cmath>

namespace weakreal {

double standard_normal(Engine &engine) {
    double u1 = uniform01(engine);
    double u2 = uniform01(engine);
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2 * M_PI * u2);
}

namespace {

Complex complex_normal(Engine &engine) {
    double re = standard_normal(engine);
    double im = standard_normal(engine);
    return {re, im};
}

}  // namespace

PureState random_pure_state(Engine &engine, size_t dim) {
    std::vector<Complex> amps(dim);
    double norm = 0;
    for (auto &a : amps) {
        a = complex_normal(engine);
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto &a : amps) {
        a /= norm;
    }
    return PureState(std::move(amps));
}

DensityMatrix random_density_matrix(Engine &engine, size_t dim, size_t rank) {
    ComplexMatrix m(dim);
    for (size_t k = 0; k < rank; k++) {
        std::vector<Complex> column(dim);
        for (auto &z : column) {
            z = complex_normal(engine);
        }
        for (size_t r = 0; r < dim; r++) {
            for (size_t c = 0; c < dim; c++) {
                m(r, c) += column[r] * std::conj(column[c]);
            }
        }
    }
    m *= 1.0 / m.trace().real();
    return DensityMatrix((m + m.adjoint()) * 0.5);
}

DensityMatrix random_density_matrix(Engine &engine, size_t dim) {
    return random_density_matrix(engine, dim, dim);
}

ComplexMatrix random_unitary(Engine &engine, size_t dim) {
    ComplexMatrix q(dim);
    for (size_t c = 0; c < dim; c++) {
        for (size_t r = 0; r < dim; r++) {
            q(r, c) = complex_normal(engine);
        }
        // Two passes of modified Gram-Schmidt keep orthogonality at 1e-15.
        for (int pass = 0; pass < 2; pass++) {
            for (size_t prev = 0; prev < c; prev++) {
                Complex overlap = 0;
                for (size_t r = 0; r < dim; r++) {
                    overlap += std::conj(q(r, prev)) * q(r, c);
                }
                for (size_t r = 0; r < dim; r++) {
                    q(r, c) -= overlap * q(r, prev);
                }
            }
        }
        double norm = 0;
        for (size_t r = 0; r < dim; r++) {
            norm += std::norm(q(r, c));
        }
        norm = std::sqrt(norm);
        for (size_t r = 0; r < dim; r++) {
            q(r, c) /= norm;
        }
    }
    return q;
}

ComplexMatrix random_hermitian(Engine &engine, size_t dim) {
    ComplexMatrix m(dim);
    for (size_t r = 0; r < dim; r++) {
        m(r, r) = standard_normal(engine);
        for (size_t c = r + 1; c < dim; c++) {
            m(r, c) = complex_normal(engine);
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

}  // namespace weakreal
