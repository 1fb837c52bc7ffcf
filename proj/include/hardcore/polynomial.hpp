#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace hardcore {

using BigInt = boost::multiprecision::mpz_int;
using Complex = std::complex<double>;

// Dense univariate polynomial with exact integer coefficients, stored low
// degree first.  The zero polynomial has an empty coefficient vector and
// degree -1; otherwise the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coefficients);

  static Polynomial one();
  static Polynomial constant(BigInt c);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  // Multiply by x^k.
  Polynomial shifted(int k) const;

  // Exact division over the integers: returns the quotient only when
  // divisor * quotient reproduces *this exactly, otherwise nullopt.
  std::optional<Polynomial> try_divide(const Polynomial& divisor) const;

  Complex evaluate(Complex x) const;
  // sum_k |c_k| r^k, used for normalized residuals.
  double abs_sum_at(double r) const;

  std::vector<std::string> coefficient_strings() const;
  static Polynomial from_strings(const std::vector<std::string>& decimal);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace hardcore
