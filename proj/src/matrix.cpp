// Copyright 2026 The xsim Authors
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

#include "xsim/matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "xsim/errors.hpp"

namespace xsim {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) {
        m(k, k) = diag[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
    return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            m(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out = *this;
    for (auto &z : out.data_) {
        z = std::conj(z);
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) {
        t += (*this)(k, k);
    }
    return t;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw DimensionError("matrix sum: shape mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += o.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw DimensionError("matrix difference: shape mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= o.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols_ != b.rows_) {
        throw DimensionError("matrix product: inner dimensions differ");
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex x = a(r, k);
            if (x == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; ++c) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

std::vector<Complex> operator*(const ComplexMatrix &a, std::span<const Complex> v) {
    if (a.cols_ != v.size()) {
        throw DimensionError("matrix-vector product: dimension mismatch");
    }
    std::vector<Complex> out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) {
            out[r] += a(r, c) * v[c];
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shape mismatch");
    }
    double m = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    }
    return m;
}

double max_abs(const ComplexMatrix &a) {
    double m = 0.0;
    for (const auto &z : a.data()) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (!m.square()) {
        return false;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

const ComplexMatrix &pauli(int index) {
    static const std::array<ComplexMatrix, 4> table = {
        ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, -kI}, {kI, 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    if (index < 0 || index > 3) {
        throw DimensionError("pauli index must be in 0..3");
    }
    return table[static_cast<std::size_t>(index)];
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex x = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

int qubit_count(std::size_t dim) {
    for (int n = 1; n <= 4; ++n) {
        if (dim == (std::size_t{1} << n)) {
            return n;
        }
    }
    throw DimensionError("dimension " + std::to_string(dim) + " is not 2^n for n in 1..4");
}

namespace {

void check_qubits(std::span<const int> qubits, int num_qubits, std::size_t op_dim) {
    if (qubits.empty() || (std::size_t{1} << qubits.size()) != op_dim) {
        throw DimensionError("operator dimension does not match its qubit list");
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] < 0 || qubits[i] >= num_qubits) {
            throw DimensionError("qubit index out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[i] == qubits[j]) {
                throw DimensionError("qubit indices must be distinct");
            }
        }
    }
}

// Basis-index layout for an operator on a subset of qubits. offsets[s] is the full-space
// index contribution of sub-index s; bases enumerates indices with those bits cleared.
struct LocalLayout {
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> bases;
};

LocalLayout local_layout(std::span<const int> qubits, int num_qubits) {
    const std::size_t k = qubits.size();
    const std::size_t dim = std::size_t{1} << num_qubits;
    LocalLayout layout;
    std::size_t mask = 0;
    for (int q : qubits) {
        mask |= std::size_t{1} << (num_qubits - 1 - q);
    }
    layout.offsets.resize(std::size_t{1} << k);
    for (std::size_t s = 0; s < layout.offsets.size(); ++s) {
        std::size_t off = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if ((s >> (k - 1 - j)) & 1U) {
                off |= std::size_t{1} << (num_qubits - 1 - qubits[j]);
            }
        }
        layout.offsets[s] = off;
    }
    for (std::size_t r = 0; r < dim; ++r) {
        if ((r & mask) == 0) {
            layout.bases.push_back(r);
        }
    }
    return layout;
}

}  // namespace

ComplexMatrix embed_operator(const ComplexMatrix &op, std::span<const int> qubits, int num_qubits) {
    check_qubits(qubits, num_qubits, op.rows());
    const auto layout = local_layout(qubits, num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    ComplexMatrix out(dim, dim);
    for (std::size_t base : layout.bases) {
        for (std::size_t s = 0; s < layout.offsets.size(); ++s) {
            for (std::size_t t = 0; t < layout.offsets.size(); ++t) {
                out(base | layout.offsets[s], base | layout.offsets[t]) = op(s, t);
            }
        }
    }
    return out;
}

void apply_left(const ComplexMatrix &op, std::span<const int> qubits, ComplexMatrix &m) {
    const int n = qubit_count(m.rows());
    check_qubits(qubits, n, op.rows());
    const auto layout = local_layout(qubits, n);
    const std::size_t sub = layout.offsets.size();
    std::vector<Complex> gathered(sub);
    for (std::size_t base : layout.bases) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            for (std::size_t t = 0; t < sub; ++t) {
                gathered[t] = m(base | layout.offsets[t], c);
            }
            for (std::size_t s = 0; s < sub; ++s) {
                Complex acc = 0.0;
                for (std::size_t t = 0; t < sub; ++t) {
                    acc += op(s, t) * gathered[t];
                }
                m(base | layout.offsets[s], c) = acc;
            }
        }
    }
}

void apply_right_adjoint(const ComplexMatrix &op, std::span<const int> qubits, ComplexMatrix &m) {
    const int n = qubit_count(m.cols());
    check_qubits(qubits, n, op.rows());
    const auto layout = local_layout(qubits, n);
    const std::size_t sub = layout.offsets.size();
    std::vector<Complex> gathered(sub);
    for (std::size_t base : layout.bases) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t t = 0; t < sub; ++t) {
                gathered[t] = m(r, base | layout.offsets[t]);
            }
            for (std::size_t s = 0; s < sub; ++s) {
                Complex acc = 0.0;
                for (std::size_t t = 0; t < sub; ++t) {
                    acc += gathered[t] * std::conj(op(s, t));
                }
                m(r, base | layout.offsets[s]) = acc;
            }
        }
    }
}

void apply_to_vector(const ComplexMatrix &op, std::span<const int> qubits, std::span<Complex> v) {
    const int n = qubit_count(v.size());
    check_qubits(qubits, n, op.rows());
    const auto layout = local_layout(qubits, n);
    const std::size_t sub = layout.offsets.size();
    std::vector<Complex> gathered(sub);
    for (std::size_t base : layout.bases) {
        for (std::size_t t = 0; t < sub; ++t) {
            gathered[t] = v[base | layout.offsets[t]];
        }
        for (std::size_t s = 0; s < sub; ++s) {
            Complex acc = 0.0;
            for (std::size_t t = 0; t < sub; ++t) {
                acc += op(s, t) * gathered[t];
            }
            v[base | layout.offsets[s]] = acc;
        }
    }
}

ComplexMatrix conjugate(const ComplexMatrix &m, const ComplexMatrix &u) { return u * m * u.adjoint(); }

HermitianEigen herm_eig(const ComplexMatrix &m) {
    if (!m.square()) {
        throw DimensionError("herm_eig: matrix is not square");
    }
    if (!is_hermitian(m, 1e-10)) {
        throw ContractViolation("herm_eig: input is not Hermitian within 1e-10");
    }
    const std::size_t n = m.rows();
    ComplexMatrix a = (m + m.adjoint()) * Complex{0.5};
    ComplexMatrix v = ComplexMatrix::identity(n);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q) {
                if (p != q) {
                    s += std::norm(a(p, q));
                }
            }
        }
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() > 1e-13; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                const double mag = std::abs(g);
                if (mag < 1e-300) {
                    continue;
                }
                // Phase-rotate (p, q) to a real positive coupling, then a real Jacobi rotation.
                const Complex phase = std::conj(g / mag);
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex vpp = c;
                const Complex vpq = s;
                const Complex vqp = -s * phase;
                const Complex vqq = c * phase;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * vpp + akq * vqp;
                    a(k, q) = akp * vpq + akq * vqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
                    a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * vpp + vkq * vqp;
                    v(k, q) = vkp * vpq + vkq * vqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
    HermitianEigen out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

namespace {

ComplexMatrix from_eigen(const HermitianEigen &e, std::span<const Complex> diag) {
    const std::size_t n = e.values.size();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (diag[k] == Complex{}) {
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            const Complex left = e.vectors(r, k) * diag[k];
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += left * std::conj(e.vectors(c, k));
            }
        }
    }
    return out;
}

double floored_sqrt(double x) { return x < kSqrtFloor ? 0.0 : std::sqrt(x); }

}  // namespace

ComplexMatrix psd_sqrt(const ComplexMatrix &m) {
    const auto e = herm_eig(m);
    std::vector<Complex> d(e.values.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        d[k] = floored_sqrt(e.values[k]);
    }
    return from_eigen(e, d);
}

double min_eigenvalue(const ComplexMatrix &m) { return herm_eig(m).values.back(); }

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
    if (!m.square()) {
        throw DimensionError("density matrix must be square");
    }
    qubit_count(m.rows());
    if (!is_hermitian(m, kHermitianTol)) {
        throw ContractViolation("density matrix is not Hermitian within 1e-12");
    }
    const Complex tr = m.trace();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw ContractViolation("density matrix trace deviates from 1 by " + std::to_string(std::abs(tr - 1.0)));
    }
    const double lo = min_eigenvalue(m);
    if (lo < -kPsdTol) {
        throw ContractViolation("density matrix has negative eigenvalue " + std::to_string(lo));
    }
    m = (m + m.adjoint()) * Complex{0.5};
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> psi) {
    double norm2 = 0.0;
    for (const auto &z : psi) {
        norm2 += std::norm(z);
    }
    if (std::abs(norm2 - 1.0) > 1e-10) {
        throw ContractViolation("pure state vector is not normalized");
    }
    return from_matrix(ComplexMatrix::outer(psi));
}

DensityMatrix DensityMatrix::basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionError("basis index out of range");
    }
    std::vector<Complex> psi(dim);
    psi[index] = 1.0;
    return pure(psi);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return from_matrix(ComplexMatrix::identity(dim) * Complex{1.0 / static_cast<double>(dim)});
}

UnitaryMatrix UnitaryMatrix::from_matrix(ComplexMatrix m) {
    if (!m.square()) {
        throw DimensionError("unitary must be square");
    }
    const double err = max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.rows()));
    if (err > kUnitaryTol) {
        throw ContractViolation("matrix is not unitary: |U^dagger U - I|_max = " + std::to_string(err));
    }
    return UnitaryMatrix(std::move(m));
}

ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const int> keep) {
    if (!m.square()) {
        throw DimensionError("partial_trace: matrix is not square");
    }
    const int n = qubit_count(m.rows());
    if (keep.empty() || static_cast<int>(keep.size()) > n) {
        throw DimensionError("partial_trace: invalid subsystem selection");
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= n || (i > 0 && keep[i] <= keep[i - 1])) {
            throw DimensionError("partial_trace: keep must be ascending distinct qubit indices");
        }
    }
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
            traced.push_back(q);
        }
    }
    const auto kept_layout = local_layout(keep, n);
    std::vector<std::size_t> env_offsets{0};
    if (!traced.empty()) {
        env_offsets = local_layout(traced, n).offsets;
    }
    const std::size_t out_dim = kept_layout.offsets.size();
    ComplexMatrix out(out_dim, out_dim);
    for (std::size_t i = 0; i < out_dim; ++i) {
        for (std::size_t j = 0; j < out_dim; ++j) {
            Complex acc = 0.0;
            for (std::size_t e : env_offsets) {
                acc += m(kept_layout.offsets[i] | e, kept_layout.offsets[j] | e);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep) {
    return DensityMatrix::from_matrix(partial_trace(rho.matrix(), keep));
}

UnitaryMatrix expm_oracle(const ComplexMatrix &h, double t) {
    const auto e = herm_eig(h);
    std::vector<Complex> d(e.values.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        d[k] = std::exp(-kI * e.values[k] * t);
    }
    return UnitaryMatrix::from_matrix(from_eigen(e, d));
}

double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw DimensionError("fidelity: dimension mismatch");
    }
    const ComplexMatrix root = psd_sqrt(rho.matrix());
    const auto e = herm_eig(root * sigma.matrix() * root);
    if (e.values.back() < -DensityMatrix::kPsdTol) {
        throw ContractViolation("fidelity: sqrt(rho) sigma sqrt(rho) is not PSD");
    }
    double tr = 0.0;
    for (double lam : e.values) {
        tr += floored_sqrt(lam);
    }
    return tr * tr;
}

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw DimensionError("trace_distance: dimension mismatch");
    }
    const auto e = herm_eig(rho.matrix() - sigma.matrix());
    double s = 0.0;
    for (double lam : e.values) {
        s += std::abs(lam);
    }
    return 0.5 * s;
}

}  // namespace xsim
