#pragma once

// Exact integer linear algebra: fraction-free elimination, characteristic
// polynomials, integer roots, and certified integer spectra.

#include "oddspectra/bigint.hpp"
#include "oddspectra/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace oddspectra {

/// Integer polynomial, coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> ascending);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  const BigInt& coefficient(int power) const { return coeffs_.at(power); }

  BigInt evaluate(const BigInt& t) const;
  /// Synthetic division by (x - root). Returns the quotient and the remainder p(root).
  std::pair<Polynomial, BigInt> divide_linear(const BigInt& root) const;

  std::string to_string(char var = 'x') const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

namespace detail {

template <typename Scalar>
void require_square(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
}

/// One fraction-free update: target = (target * pivot - left * right) / previous.
inline void bareiss_update(BigInt& target, const BigInt& pivot, const BigInt& left,
                           const BigInt& right, const BigInt& previous, BigInt& scratch) {
  mpz_ptr t = scratch.backend().data();
  mpz_mul(t, target.backend().data(), pivot.backend().data());
  mpz_submul(t, left.backend().data(), right.backend().data());
  mpz_divexact(target.backend().data(), t, previous.backend().data());
}

template <typename Scalar>
void bareiss_update(Scalar& target, const Scalar& pivot, const Scalar& left, const Scalar& right,
                    const Scalar& previous, Scalar&) {
  target = (target * pivot - left * right) / previous;
}

/// Fraction-free row echelon reduction in place. Pivots are taken as the
/// first nonzero entry in column order. Returns the rank and the sign of the
/// row permutation applied.
template <typename Scalar>
std::pair<Eigen::Index, int> bareiss_eliminate(DenseMatrix<Scalar>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Scalar previous(1), scratch(0);
  Eigen::Index rank = 0;
  int sign = 1;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (m(r, col) != Scalar(0)) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) {
      for (Eigen::Index j = 0; j < cols; ++j) std::swap(m(pivot_row, j), m(rank, j));
      sign = -sign;
    }
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index j = col + 1; j < cols; ++j)
        bareiss_update(m(r, j), m(rank, col), m(r, col), m(rank, j), previous, scratch);
      m(r, col) = Scalar(0);
    }
    previous = m(rank, col);
    ++rank;
  }
  return {rank, sign};
}

}  // namespace detail

/// Exact rank by fraction-free elimination.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  DenseMatrix<typename Derived::Scalar> work = m;
  return detail::bareiss_eliminate(work).first;
}

/// Exact determinant by fraction-free elimination.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> work = m;
  detail::require_square(work);
  const Eigen::Index n = work.rows();
  if (n == 0) return Scalar(1);
  auto [rank, sign] = detail::bareiss_eliminate(work);
  if (rank < n) return Scalar(0);
  return sign > 0 ? Scalar(work(n - 1, n - 1)) : Scalar(-work(n - 1, n - 1));
}

/// det(xI - M) by the division-free Berkowitz recurrence.
template <typename Derived>
Polynomial char_poly(const Eigen::MatrixBase<Derived>& matrix) {
  const IntMatrix a = matrix.template cast<BigInt>();
  detail::require_square(a);
  const Eigen::Index n = a.rows();
  // Coefficients in descending powers while building.
  std::vector<BigInt> poly{BigInt(1)};
  for (Eigen::Index r = 0; r < n; ++r) {
    // toeplitz = [1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S] for the leading r x r block A.
    std::vector<BigInt> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -a(r, r);
    DenseVector<BigInt> power = a.col(r).head(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      BigInt dot = 0;
      for (Eigen::Index j = 0; j < r; ++j) dot += a(r, j) * power(j);
      toeplitz[i + 2] = -dot;
      if (i + 1 < r) power = (a.topLeftCorner(r, r) * power).eval();
    }
    std::vector<BigInt> next(r + 2, BigInt(0));
    for (Eigen::Index i = 0; i < r + 2; ++i)
      for (Eigen::Index j = 0; j <= std::min<Eigen::Index>(i, r); ++j)
        next[i] += toeplitz[i - j] * poly[j];
    poly = std::move(next);
  }
  return Polynomial(std::vector<BigInt>(poly.rbegin(), poly.rend()));
}

struct RootMultiplicity {
  std::int64_t root = 0;
  std::size_t multiplicity = 0;

  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct IntegerRoots {
  std::vector<RootMultiplicity> roots;  ///< ascending
  int residual_degree = 0;              ///< degree of the cofactor with no roots in range
};

/// Integer roots of a monic polynomial in [-bound, bound], with multiplicities.
IntegerRoots integer_roots(const Polynomial& p, std::int64_t bound);

/// dim ker(M - lambda I) over the rationals.
std::size_t nullity_at(const IntMatrix& m, std::int64_t lambda);

struct Spectrum {
  std::vector<RootMultiplicity> pairs;  ///< (eigenvalue, multiplicity), eigenvalues ascending
  std::size_t residual = 0;             ///< dimension not covered by integer eigenvalues

  bool integral() const { return residual == 0; }
  std::size_t dimension() const;
  std::vector<std::int64_t> eigenvalues() const;
  std::size_t multiplicity(std::int64_t lambda) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Integer eigenvalues of a symmetric integer matrix in [-bound, bound],
/// each multiplicity taken as an exact nullity.
Spectrum integer_spectrum(const IntMatrix& symmetric, std::int64_t bound);
/// Integer part of Spec(g); candidates are bounded by the maximum degree.
Spectrum integral_spectrum(const Graph& g);

}  // namespace oddspectra
