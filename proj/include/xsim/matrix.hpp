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

#ifndef XSIM_MATRIX_HPP
#define XSIM_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace xsim {

using Complex = std::complex<double>;
inline constexpr Complex kI{0.0, 1.0};

/// Dense row-major complex matrix. Sized for 1..4 qubit registers (dimension <= 16);
/// nothing here is tuned for anything larger.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
    /// |v><v| for a column vector v.
    static ComplexMatrix outer(std::span<const Complex> v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Complex> data() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conj() const;
    Complex trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &o);
    ComplexMatrix &operator-=(const ComplexMatrix &o);
    ComplexMatrix &operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend std::vector<Complex> operator*(const ComplexMatrix &a, std::span<const Complex> v);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs(const ComplexMatrix &a);
bool is_hermitian(const ComplexMatrix &m, double tol);

/// Single-qubit Pauli: 0 = I, 1 = X, 2 = Y, 3 = Z.
const ComplexMatrix &pauli(int index);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Number of qubits n with dim == 2^n; throws DimensionError otherwise.
int qubit_count(std::size_t dim);

/// Embeds a 2^k x 2^k operator acting on `qubits` (qubit 0 is the most significant
/// bit of the basis index) into the full 2^num_qubits space.
ComplexMatrix embed_operator(const ComplexMatrix &op, std::span<const int> qubits, int num_qubits);

/// m <- E m where E is `op` embedded on `qubits`. Cost O(dim^2 2^k), no full embedding.
void apply_left(const ComplexMatrix &op, std::span<const int> qubits, ComplexMatrix &m);
/// m <- m E^dagger where E is `op` embedded on `qubits`.
void apply_right_adjoint(const ComplexMatrix &op, std::span<const int> qubits, ComplexMatrix &m);
/// v <- E v.
void apply_to_vector(const ComplexMatrix &op, std::span<const int> qubits, std::span<Complex> v);

/// U m U^dagger.
ComplexMatrix conjugate(const ComplexMatrix &m, const ComplexMatrix &u);

struct HermitianEigen {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // orthonormal columns, vectors(:, k) pairs with values[k]
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Sweeps until the off-diagonal
/// Frobenius norm drops below 1e-13. Throws ContractViolation if m deviates from
/// Hermitian by more than 1e-10 entrywise.
HermitianEigen herm_eig(const ComplexMatrix &m);

/// Eigenvalues below this floor are treated as zero wherever a square root is taken.
inline constexpr double kSqrtFloor = 1e-14;

/// Square root of a PSD Hermitian matrix; eigenvalues below kSqrtFloor map to 0.
ComplexMatrix psd_sqrt(const ComplexMatrix &m);

class DensityMatrix {
  public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kPsdTol = 1e-10;

    /// Validates Hermiticity, unit trace and PSD; throws ContractViolation.
    static DensityMatrix from_matrix(ComplexMatrix m);
    static DensityMatrix pure(std::span<const Complex> psi);
    static DensityMatrix basis_state(std::size_t dim, std::size_t index);
    static DensityMatrix maximally_mixed(std::size_t dim);

    const ComplexMatrix &matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.rows(); }
    int qubits() const { return qubit_count(m_.rows()); }
    Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

class UnitaryMatrix {
  public:
    static constexpr double kUnitaryTol = 1e-10;

    /// Validates max|U^dagger U - I| <= 1e-10; throws ContractViolation.
    static UnitaryMatrix from_matrix(ComplexMatrix m);

    const ComplexMatrix &matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.rows(); }

  private:
    explicit UnitaryMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

/// Reduced state on the qubits listed in `keep` (ascending, qubit 0 most significant).
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep);
ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const int> keep);

/// exp(-i h t) through the Hermitian eigendecomposition of h.
UnitaryMatrix expm_oracle(const ComplexMatrix &h, double t);

/// Squared Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);

inline constexpr const char *kFidelityConvention = "uhlmann_squared";

/// 0.5 * trace norm of rho - sigma.
double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix &m);

}  // namespace xsim

#endif
