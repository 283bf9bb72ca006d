#include "oddspectra/exact_linalg.hpp"

#include <sstream>

namespace oddspectra {

Polynomial::Polynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::pair<Polynomial, BigInt> Polynomial::divide_linear(const BigInt& root) const {
  if (coeffs_.empty()) return {Polynomial{}, BigInt(0)};
  std::vector<BigInt> quotient(coeffs_.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    carry = carry * root + coeffs_[i];
    if (i > 0) quotient[i - 1] = carry;
  }
  return {Polynomial(std::move(quotient)), carry};
}

std::string Polynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int power = degree(); power >= 0; --power) {
    const BigInt& c = coeffs_[power];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    if (magnitude != 1 || power == 0) out << magnitude;
    if (power >= 1) out << var;
    if (power >= 2) out << '^' << power;
    first = false;
  }
  return out.str();
}

IntegerRoots integer_roots(const Polynomial& p, std::int64_t bound) {
  if (!p.is_monic()) throw std::invalid_argument("integer_roots expects a monic polynomial");
  if (bound < 0) throw std::invalid_argument("root bound must be non-negative");
  IntegerRoots result;
  Polynomial rest = p;
  for (std::int64_t t = -bound; t <= bound && rest.degree() > 0; ++t) {
    std::size_t multiplicity = 0;
    while (rest.degree() > 0) {
      auto [quotient, remainder] = rest.divide_linear(BigInt(t));
      if (remainder != 0) break;
      rest = std::move(quotient);
      ++multiplicity;
    }
    if (multiplicity > 0) result.roots.push_back({t, multiplicity});
  }
  result.residual_degree = rest.degree();
  return result;
}

std::size_t nullity_at(const IntMatrix& m, std::int64_t lambda) {
  detail::require_square(m);
  IntMatrix shifted = m;
  for (Eigen::Index i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lambda;
  return static_cast<std::size_t>(m.rows() - exact_rank(shifted));
}

std::size_t Spectrum::dimension() const {
  std::size_t total = residual;
  for (const auto& p : pairs) total += p.multiplicity;
  return total;
}

std::vector<std::int64_t> Spectrum::eigenvalues() const {
  std::vector<std::int64_t> out;
  for (const auto& p : pairs) out.push_back(p.root);
  return out;
}

std::size_t Spectrum::multiplicity(std::int64_t lambda) const {
  for (const auto& p : pairs)
    if (p.root == lambda) return p.multiplicity;
  return 0;
}

Spectrum integer_spectrum(const IntMatrix& symmetric, std::int64_t bound) {
  detail::require_square(symmetric);
  const auto n = static_cast<std::size_t>(symmetric.rows());
  Spectrum spectrum;
  std::size_t found = 0;
  for (std::int64_t lambda = -bound; lambda <= bound && found < n; ++lambda) {
    const std::size_t m = nullity_at(symmetric, lambda);
    if (m > 0) {
      spectrum.pairs.push_back({lambda, m});
      found += m;
    }
  }
  spectrum.residual = n - found;
  return spectrum;
}

Spectrum integral_spectrum(const Graph& g) {
  return integer_spectrum(g.adjacency_matrix<BigInt>(), static_cast<std::int64_t>(g.max_degree()));
}

}  // namespace oddspectra
