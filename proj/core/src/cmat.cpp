#include "orient/cmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace orient {

namespace {

void require_dim(std::size_t dim) {
  if (dim != 2 && dim != 4) {
    throw InvalidInput("matrix dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw InvalidInput(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                       " vs " + std::to_string(b.dim()) + ")");
  }
}

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

CMatrix::CMatrix(std::size_t dim) : dim_(dim) { require_dim(dim); }

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  require_dim(dim_);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw InvalidInput("CMatrix: ragged row in initializer");
    std::size_t c = 0;
    for (const auto& v : row) (*this)(r, c++) = v;
    ++r;
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::initializer_list<Complex> diag) {
  CMatrix m(diag.size());
  std::size_t i = 0;
  for (const auto& v : diag) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

bool CMatrix::all_finite() const noexcept {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      const auto& v = (*this)(r, c);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  return true;
}

double CMatrix::hermiticity_defect() const noexcept {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same_dim(*this, o, "operator+");
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) += o(r, c);
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same_dim(*this, o, "operator-");
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) -= o(r, c);
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) noexcept {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) *= s;
  return *this;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "matmul");
  const std::size_t n = a.dim();
  CMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      for (std::size_t c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) throw InvalidInput("kron: both factors must be 2x2");
  CMatrix m(4);
  for (std::size_t ar = 0; ar < 2; ++ar)
    for (std::size_t ac = 0; ac < 2; ++ac)
      for (std::size_t br = 0; br < 2; ++br)
        for (std::size_t bc = 0; bc < 2; ++bc) m(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
  return m;
}

Complex trace(const CMatrix& a) noexcept {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

Ket matvec(const CMatrix& a, std::span<const Complex> v) {
  if (v.size() != a.dim()) throw InvalidInput("matvec: vector length does not match matrix");
  Ket out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out[r] += a(r, c) * v[c];
  return out;
}

CMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw InvalidInput("outer: length mismatch");
  CMatrix m(u.size());
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw InvalidInput("inner: length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

CMatrix pauli_x() { return CMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
CMatrix pauli_y() { return CMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
CMatrix pauli_z() { return CMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

Spectrum hermitian_eigen(const CMatrix& input, const EigenOptions& options) {
  if (!input.all_finite()) throw InvalidInput("hermitian_eigen: non-finite entry");
  if (input.hermiticity_defect() > options.hermitian_tolerance) {
    throw InvalidInput("hermitian_eigen: matrix is not Hermitian");
  }

  const std::size_t n = input.dim();
  CMatrix a = input;
  CMatrix v = CMatrix::identity(n);
  const double threshold = options.off_diagonal_tolerance * std::max(1.0, frobenius_norm(input));

  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep++ >= options.max_sweeps) {
      throw NumericalError("hermitian_eigen: no convergence after " +
                           std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g == 0.0) continue;
        // Phase the (p,q) entry onto the positive real axis, then apply a
        // real Jacobi rotation that annihilates it.
        const Complex phase = std::conj(a(p, q)) / g;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        CMatrix u = CMatrix::identity(n);
        u(p, p) = c;
        u(p, q) = s;
        u(q, p) = -s * phase;
        u(q, q) = c * phase;

        a = matmul(matmul(u.adjoint(), a), u);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = matmul(v, u);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  Spectrum out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(a(k, k).real());
    Ket col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = v(r, k);
    const double len = norm(col);
    for (auto& x : col) x /= len;
    out.vectors.push_back(std::move(col));
  }
  return out;
}

std::string to_string(const CMatrix& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < a.dim(); ++r) {
    os << (r ? " [" : "[");
    for (std::size_t c = 0; c < a.dim(); ++c) os << (c ? ", " : "") << a(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace orient
