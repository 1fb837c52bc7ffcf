#include "hardcore/polynomial.hpp"

#include <algorithm>

#include "hardcore/errors.hpp"

namespace hardcore {

Polynomial::Polynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::one() { return constant(1); }

Polynomial Polynomial::constant(BigInt c) {
  Polynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

const BigInt& Polynomial::coeff(int k) const {
  static const BigInt zero{0};
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[k];
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < coeffs_.size()) out[k] += coeffs_[k];
    if (k < other.coeffs_.size()) out[k] += other.coeffs_[k];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial();
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(int k) const {
  if (k < 0) throw InputError("shift must be non-negative");
  if (is_zero()) return Polynomial();
  std::vector<BigInt> out(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
  return Polynomial(std::move(out));
}

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw InputError("division by the zero polynomial");
  if (is_zero()) return Polynomial();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(degree() - divisor.degree() + 1);
  const BigInt& lead = divisor.coeffs_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const BigInt& top = rem[k + divisor.degree()];
    if (top == 0) continue;
    BigInt q = top / lead;
    if (q * lead != top) return std::nullopt;
    quot[k] = q;
    for (int j = 0; j <= divisor.degree(); ++j)
      rem[k + j] -= q * divisor.coeffs_[j];
  }
  for (const BigInt& r : rem)
    if (r != 0) return std::nullopt;
  return Polynomial(std::move(quot));
}

Complex Polynomial::evaluate(Complex x) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + Complex(it->convert_to<double>(), 0.0);
  return acc;
}

double Polynomial::abs_sum_at(double r) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * r + std::abs(it->convert_to<double>());
  return acc;
}

std::vector<std::string> Polynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const BigInt& c : coeffs_) out.push_back(c.str());
  return out;
}

Polynomial Polynomial::from_strings(const std::vector<std::string>& decimal) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(decimal.size());
  for (const std::string& s : decimal) {
    try {
      coeffs.emplace_back(s);
    } catch (const std::exception&) {
      throw InputError("bad integer literal: " + s);
    }
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace hardcore
