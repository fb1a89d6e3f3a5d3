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

#include "weakreal/qcore.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace weakreal {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            std::string(what) + ": " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

// Multiplies the first non-negligible component of each column by a phase
// so that it is real and positive. Makes eigenvector output reproducible.
void canonicalize_column_phases(ComplexMatrix &v) {
    size_t n = v.dim();
    for (size_t col = 0; col < n; col++) {
        for (size_t row = 0; row < n; row++) {
            double mag = std::abs(v(row, col));
            if (mag > 1e-8) {
                Complex phase = std::conj(v(row, col)) / mag;
                for (size_t r = 0; r < n; r++) {
                    v(r, col) *= phase;
                }
                break;
            }
        }
    }
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double total = 0;
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            if (r != c) {
                total += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(total);
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t dim) : dim_(dim), data_(dim * dim) {
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()), data_() {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw Error(ErrorKind::InvalidDimension, "matrix literal is not square");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix result(dim);
    for (size_t k = 0; k < dim; k++) {
        result(k, k) = 1.0;
    }
    return result;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix result(values.size());
    for (size_t k = 0; k < values.size(); k++) {
        result(k, k) = values[k];
    }
    return result;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix result(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            result(c, r) = std::conj((*this)(r, c));
        }
    }
    return result;
}

Complex ComplexMatrix::trace() const {
    Complex total = 0;
    for (size_t k = 0; k < dim_; k++) {
        total += (*this)(k, k);
    }
    return total;
}

double ComplexMatrix::frobenius_norm() const {
    double total = 0;
    for (const auto &z : data_) {
        total += std::norm(z);
    }
    return std::sqrt(total);
}

double ComplexMatrix::max_abs() const {
    double best = 0;
    for (const auto &z : data_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = r; c < dim_; c++) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    return max_abs_diff(*this * adjoint(), identity(dim_)) <= tol;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "matrix addition");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "matrix subtraction");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(ComplexMatrix a, Complex scale) {
    a *= scale;
    return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matrix product");
    size_t n = a.dim();
    ComplexMatrix result(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t k = 0; k < n; k++) {
            Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < n; c++) {
                result(r, c) += ark * b(k, c);
            }
        }
    }
    return result;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double best = 0;
    for (size_t k = 0; k < a.data().size(); k++) {
        best = std::max(best, std::abs(a.data()[k] - b.data()[k]));
    }
    return best;
}

ComplexMatrix pauli_x() {
    return {{0, 1}, {1, 0}};
}

ComplexMatrix pauli_y() {
    return {{0, Complex(0, -1)}, {Complex(0, 1), 0}};
}

ComplexMatrix pauli_z() {
    return {{1, 0}, {0, -1}};
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    size_t da = a.dim();
    size_t db = b.dim();
    ComplexMatrix result(da * db);
    for (size_t i = 0; i < da; i++) {
        for (size_t j = 0; j < da; j++) {
            Complex aij = a(i, j);
            for (size_t k = 0; k < db; k++) {
                for (size_t l = 0; l < db; l++) {
                    result(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return result;
}

EigenSystem eig_hermitian(const ComplexMatrix &m) {
    size_t n = m.dim();
    if (n > kMaxDim) {
        throw Error(ErrorKind::DimensionTooLarge, "eig_hermitian supports dim <= 8, got " + std::to_string(n));
    }
    if (!m.is_hermitian(kHermitianTol)) {
        throw Error(ErrorKind::NotHermitian, "eig_hermitian input is not Hermitian");
    }

    ComplexMatrix a = (m + m.adjoint()) * 0.5;
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr int max_sweeps = 100;
    constexpr double off_tol = 1e-14;
    for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(a) >= off_tol; sweep++) {
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                Complex apq = a(p, q);
                double mag = std::abs(apq);
                if (mag < 1e-300) {
                    continue;
                }
                // Phase rotation makes the (p,q) entry real; a real Givens
                // rotation then annihilates it.
                Complex phase = std::conj(apq) / mag;
                double theta = (a(q, q).real() - a(p, p).real()) / (2 * mag);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                }
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                Complex gpp = c;
                Complex gpq = s;
                Complex gqp = -s * phase;
                Complex gqq = c * phase;

                for (size_t k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
                for (size_t k = 0; k < n; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    EigenSystem result{std::vector<double>(n), ComplexMatrix(n)};
    for (size_t k = 0; k < n; k++) {
        result.values[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < n; r++) {
            result.vectors(r, k) = v(r, order[k]);
        }
    }
    canonicalize_column_phases(result.vectors);
    return result;
}

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    double norm = 0;
    for (const auto &z : amplitudes_) {
        norm += std::norm(z);
    }
    if (amplitudes_.empty() || std::abs(norm - 1) > 1e-12) {
        throw Error(ErrorKind::InvalidArgument, "state vector is not normalized");
    }
}

PureState PureState::basis(size_t dim, size_t index) {
    if (index >= dim) {
        throw Error(ErrorKind::OutOfRange, "basis index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1;
    return PureState(std::move(amps));
}

PureState PureState::plus() {
    return PureState({M_SQRT1_2, M_SQRT1_2});
}

PureState PureState::minus() {
    return PureState({M_SQRT1_2, -M_SQRT1_2});
}

ComplexMatrix PureState::projector() const {
    size_t n = dim();
    ComplexMatrix result(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            result(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
        }
    }
    return result;
}

DensityMatrix::DensityMatrix(const ComplexMatrix &m) {
    size_t n = m.dim();
    if (n == 0) {
        throw Error(ErrorKind::InvalidDimension, "empty density matrix");
    }
    if (n > kMaxDim) {
        throw Error(ErrorKind::DimensionTooLarge, "density matrix dim > 8");
    }
    if (!m.is_hermitian(kHermitianTol)) {
        throw Error(ErrorKind::NotHermitian, "density matrix is not Hermitian");
    }
    Complex tr = m.trace();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw Error(ErrorKind::NotDensityMatrix, "trace deviates from 1 by " + std::to_string(std::abs(tr - 1.0)));
    }
    mat_ = (m + m.adjoint()) * 0.5;
    EigenSystem es = eig_hermitian(mat_);
    if (es.values.back() < kPsdFloor) {
        throw Error(
            ErrorKind::NotDensityMatrix, "negative eigenvalue " + std::to_string(es.values.back()));
    }
    if (es.values.back() < 0) {
        double total = 0;
        for (auto &v : es.values) {
            v = std::max(v, 0.0);
            total += v;
        }
        for (auto &v : es.values) {
            v /= total;
        }
        ComplexMatrix rebuilt(n);
        for (size_t k = 0; k < n; k++) {
            if (es.values[k] == 0) {
                continue;
            }
            for (size_t r = 0; r < n; r++) {
                for (size_t c = 0; c < n; c++) {
                    rebuilt(r, c) += es.values[k] * es.vectors(r, k) * std::conj(es.vectors(c, k));
                }
            }
        }
        mat_ = (rebuilt + rebuilt.adjoint()) * 0.5;
    }
    eigenvalues_ = std::move(es.values);
}

DensityMatrix::DensityMatrix(const PureState &psi) : DensityMatrix(psi.projector()) {
}

DensityMatrix DensityMatrix::maximally_mixed(size_t dim) {
    return DensityMatrix(ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(dim)));
}

Observable::Observable(const ComplexMatrix &hermitian) {
    if (!hermitian.is_hermitian(kHermitianTol)) {
        throw Error(ErrorKind::NotHermitian, "observable is not Hermitian");
    }
    EigenSystem es = eig_hermitian(hermitian);
    *this = Observable(std::move(es.values), es.vectors);
}

Observable::Observable(std::vector<double> eigenvalues, const ComplexMatrix &basis)
    : mat_(basis.dim()), eigenvalues_(std::move(eigenvalues)) {
    size_t n = basis.dim();
    if (n == 0 || n > kMaxDim) {
        throw Error(ErrorKind::InvalidDimension, "observable dimension must be in [1, 8]");
    }
    if (eigenvalues_.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "eigenvalue count does not match basis");
    }
    if (max_abs_diff(basis.adjoint() * basis, ComplexMatrix::identity(n)) > 1e-12) {
        throw Error(ErrorKind::InvalidArgument, "observable eigenbasis is not orthonormal");
    }
    projectors_.reserve(n);
    for (size_t k = 0; k < n; k++) {
        ComplexMatrix p(n);
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                p(r, c) = basis(r, k) * std::conj(basis(c, k));
            }
        }
        mat_ += p * eigenvalues_[k];
        projectors_.push_back(std::move(p));
    }
}

Observable Observable::pauli_x() {
    ComplexMatrix basis{{M_SQRT1_2, M_SQRT1_2}, {M_SQRT1_2, -M_SQRT1_2}};
    return Observable({1, -1}, basis);
}

Observable Observable::pauli_y() {
    ComplexMatrix basis{{M_SQRT1_2, M_SQRT1_2}, {Complex(0, M_SQRT1_2), Complex(0, -M_SQRT1_2)}};
    return Observable({1, -1}, basis);
}

Observable Observable::pauli_z() {
    return Observable({1, -1}, ComplexMatrix::identity(2));
}

const ComplexMatrix &Observable::projector(size_t k) const {
    if (k >= projectors_.size()) {
        throw Error(ErrorKind::InvalidOutcome, "outcome index " + std::to_string(k) + " out of range");
    }
    return projectors_[k];
}

ComplexMatrix partial_trace(const ComplexMatrix &m, Subsystem keep) {
    if (m.dim() != 4) {
        throw Error(ErrorKind::InvalidDimension, "partial_trace expects a two-qubit operator");
    }
    ComplexMatrix result(2);
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            for (size_t k = 0; k < 2; k++) {
                if (keep == Subsystem::System) {
                    result(i, j) += m(i * 2 + k, j * 2 + k);
                } else {
                    result(i, j) += m(k * 2 + i, k * 2 + j);
                }
            }
        }
    }
    return result;
}

DensityMatrix partial_trace(const DensityMatrix &rho, Subsystem keep) {
    return DensityMatrix(partial_trace(rho.matrix(), keep));
}

DensityMatrix apply_unitary(const DensityMatrix &rho, const ComplexMatrix &u) {
    if (u.dim() != rho.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "unitary and state dimensions differ");
    }
    if (!u.is_unitary(kUnitaryTol)) {
        throw Error(ErrorKind::NotUnitary, "operator is not unitary");
    }
    return DensityMatrix(u * rho.matrix() * u.adjoint());
}

DensityMatrix mix(const DensityMatrix &a, const DensityMatrix &b, double weight) {
    if (!(weight >= 0 && weight <= 1)) {
        throw Error(ErrorKind::OutOfRange, "mixing weight must lie in [0, 1]");
    }
    return DensityMatrix(a.matrix() * weight + b.matrix() * (1 - weight));
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix(tensor(a.matrix(), b.matrix()));
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m) {
    EigenSystem es = eig_hermitian(m);
    size_t n = m.dim();
    ComplexMatrix result(n);
    for (size_t k = 0; k < n; k++) {
        double root = std::sqrt(std::max(es.values[k], 0.0));
        if (root == 0) {
            continue;
        }
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                result(r, c) += root * es.vectors(r, k) * std::conj(es.vectors(c, k));
            }
        }
    }
    return result;
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    EigenSystem es = eig_hermitian(a.matrix() - b.matrix());
    double total = 0;
    for (double v : es.values) {
        total += std::abs(v);
    }
    return total / 2;
}

double fidelity(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "fidelity dimensions differ");
    }
    ComplexMatrix root = psd_sqrt(a.matrix());
    ComplexMatrix inner = root * b.matrix() * root;
    inner = (inner + inner.adjoint()) * 0.5;
    EigenSystem es = eig_hermitian(inner);
    double total = 0;
    for (double v : es.values) {
        total += std::sqrt(std::max(v, 0.0));
    }
    return std::min(1.0, total * total);
}

double trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "trace_product");
    double total = 0;
    size_t n = a.dim();
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            total += (a(r, c) * b(c, r)).real();
        }
    }
    return total;
}

}  // namespace weakreal
