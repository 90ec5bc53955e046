#pragma once

// Small dense complex linear algebra for one- and two-qubit operators.
// Matrices are square with dimension 2 or 4; storage is row-major and inline.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace orient {

using Complex = std::complex<double>;

/// Thrown when an argument violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative routine fails to converge or a closed form
/// produces an inconsistent intermediate.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A column vector of dimension 2 or 4.
using Ket = std::vector<Complex>;

class CMatrix {
 public:
  static constexpr std::size_t kMaxDim = 4;

  /// Zero matrix. `dim` must be 2 or 4.
  explicit CMatrix(std::size_t dim);

  /// Builds from nested rows; the row count fixes the dimension.
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t dim);
  static CMatrix diagonal(std::initializer_list<Complex> diag);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * kMaxDim + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * kMaxDim + c];
  }

  CMatrix adjoint() const;
  bool all_finite() const noexcept;

  /// Largest entrywise modulus of (this - this^dagger).
  double hermiticity_defect() const noexcept;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(Complex s) noexcept;

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

 private:
  std::size_t dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

CMatrix matmul(const CMatrix& a, const CMatrix& b);
inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return matmul(a, b); }

/// 4x4 Kronecker product of two 2x2 matrices; block (0,0) is a(0,0)*b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

Complex trace(const CMatrix& a) noexcept;

/// max_{r,c} |a(r,c) - b(r,c)|. Dimensions must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

Ket matvec(const CMatrix& a, std::span<const Complex> v);
CMatrix outer(std::span<const Complex> u, std::span<const Complex> v);
/// <u|v>, conjugating the left argument.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

/// Eigen-decomposition of a Hermitian matrix.
///
/// `values` are sorted descending and `vectors[k]` is the unit eigenvector
/// for `values[k]`. Within a degenerate eigenvalue the vectors are an
/// arbitrary orthonormal basis of the eigenspace.
struct Spectrum {
  std::vector<double> values;
  std::vector<Ket> vectors;
};

struct EigenOptions {
  double hermitian_tolerance = 1e-10;
  /// Convergence threshold on the off-diagonal Frobenius norm, scaled by
  /// max(1, ||A||_F).
  double off_diagonal_tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Cyclic complex Jacobi eigensolver.
///
/// Throws InvalidInput for non-finite or non-Hermitian input and
/// NumericalError if the sweep cap is reached.
Spectrum hermitian_eigen(const CMatrix& a, const EigenOptions& options = {});

std::string to_string(const CMatrix& a);

}  // namespace orient
