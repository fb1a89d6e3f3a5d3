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

#ifndef WEAKREAL_QCORE_H
#define WEAKREAL_QCORE_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "weakreal/error.h"

namespace weakreal {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;
inline constexpr std::size_t kMaxDim = 8;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::initializer_list<double> values);

    std::size_t dim() const noexcept {
        return dim_;
    }
    Complex &operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }
    std::span<const Complex> data() const noexcept {
        return data_;
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_hermitian(double tol = kHermitianTol) const;
    bool is_unitary(double tol = kUnitaryTol) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Kronecker product; `a` is the left (system) factor, so entry
/// (i*db + k, j*db + l) equals a(i,j) * b(k,l).
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

struct EigenSystem {
    /// Sorted descending.
    std::vector<double> values;
    /// Column i is the eigenvector for values[i].
    ComplexMatrix vectors;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix (dim <= 8).
/// Throws NotHermitian / DimensionTooLarge.
EigenSystem eig_hermitian(const ComplexMatrix &m);

/// Normalized state vector.
class PureState {
   public:
    explicit PureState(std::vector<Complex> amplitudes);

    static PureState basis(std::size_t dim, std::size_t index);
    static PureState plus();
    static PureState minus();

    std::size_t dim() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    ComplexMatrix projector() const;

   private:
    std::vector<Complex> amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite operator on a 2-, 4- or
/// 8-dimensional space. Eigenvalues in [kPsdFloor, 0) are clamped to zero at
/// construction; anything more negative is rejected.
class DensityMatrix {
   public:
    explicit DensityMatrix(const ComplexMatrix &m);
    explicit DensityMatrix(const PureState &psi);

    static DensityMatrix maximally_mixed(std::size_t dim);

    std::size_t dim() const noexcept {
        return mat_.dim();
    }
    const ComplexMatrix &matrix() const noexcept {
        return mat_;
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return mat_(row, col);
    }
    /// Spectrum, descending, all >= 0, summing to 1.
    std::span<const double> eigenvalues() const noexcept {
        return eigenvalues_;
    }

   private:
    ComplexMatrix mat_;
    std::vector<double> eigenvalues_;
};

/// Hermitian operator together with a rank-1 spectral decomposition
/// O = sum_k o_k |k><k|. Degenerate spectra keep the eigenbasis as stored.
class Observable {
   public:
    explicit Observable(const ComplexMatrix &hermitian);
    /// Explicit eigenbasis: column k of `basis` is |k>.
    Observable(std::vector<double> eigenvalues, const ComplexMatrix &basis);

    static Observable pauli_x();
    static Observable pauli_y();
    static Observable pauli_z();

    std::size_t dim() const noexcept {
        return mat_.dim();
    }
    std::size_t num_outcomes() const noexcept {
        return eigenvalues_.size();
    }
    const ComplexMatrix &matrix() const noexcept {
        return mat_;
    }
    std::span<const double> eigenvalues() const noexcept {
        return eigenvalues_;
    }
    const std::vector<ComplexMatrix> &projectors() const noexcept {
        return projectors_;
    }
    const ComplexMatrix &projector(std::size_t k) const;

   private:
    ComplexMatrix mat_;
    std::vector<double> eigenvalues_;
    std::vector<ComplexMatrix> projectors_;
};

enum class Subsystem { System, Ancilla };

/// Reduced state of a two-qubit operator (system is the left factor).
ComplexMatrix partial_trace(const ComplexMatrix &m, Subsystem keep);
DensityMatrix partial_trace(const DensityMatrix &rho, Subsystem keep);

/// u * rho * u^dagger. Throws NotUnitary / DimensionMismatch.
DensityMatrix apply_unitary(const DensityMatrix &rho, const ComplexMatrix &u);

/// Convex combination weight*a + (1-weight)*b.
DensityMatrix mix(const DensityMatrix &a, const DensityMatrix &b, double weight);

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

/// Square root of a positive semidefinite Hermitian matrix.
ComplexMatrix psd_sqrt(const ComplexMatrix &m);

/// (1/2) * sum |eig(a - b)|.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2.
double fidelity(const DensityMatrix &a, const DensityMatrix &b);

/// Real part of Tr(a * b).
double trace_product(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace weakreal

#endif
