#include "hardcore/roots.hpp"

#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <cstdio>
#include <utility>

#include "hardcore/errors.hpp"

namespace hardcore {

namespace {

using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

// Minimal complex arithmetic over BigFloat; enough for Horner and Aberth.
struct Cx {
  BigFloat re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cx operator/(const Cx& a, const Cx& b) {
  BigFloat d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
BigFloat abs2(const Cx& a) { return a.re * a.re + a.im * a.im; }
BigFloat abs(const Cx& a) { return sqrt(abs2(a)); }

int digits_for_bits(int bits) {
  return static_cast<int>(bits * 0.30103) + 4;
}

// log2 |c| computed without overflowing double.
double log2_abs(const BigInt& c) {
  if (c == 0) return 0.0;
  BigFloat v(boost::multiprecision::abs(c));
  return boost::multiprecision::log2(v).convert_to<double>();
}

// Starting points on circles whose radii come from the upper convex hull of
// (k, log2 |c_k|): each hull edge of horizontal span m contributes m points
// of modulus 2^(-slope).
std::vector<Complex> initial_guesses(const std::vector<BigInt>& c) {
  int n = static_cast<int>(c.size()) - 1;  // degree; c[0] != 0, c[n] != 0
  std::vector<std::pair<int, double>> pts;
  for (int k = 0; k <= n; ++k)
    if (c[k] != 0) pts.emplace_back(k, log2_abs(c[k]));
  std::vector<std::pair<int, double>> hull;  // upper hull, left to right
  for (auto& p : pts) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull[hull.size() - 1];
      double cross = (b.first - a.first) * (p.second - a.second) -
                     (p.first - a.first) * (b.second - a.second);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  std::vector<Complex> guesses;
  guesses.reserve(n);
  const double golden = 0.6180339887498949;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    int k1 = hull[e].first, k2 = hull[e + 1].first;
    double slope = (hull[e + 1].second - hull[e].second) / (k2 - k1);
    double radius = std::exp2(std::clamp(-slope, -500.0, 500.0));
    int m = k2 - k1;
    for (int j = 0; j < m; ++j) {
      double angle = 2.0 * M_PI * (j + golden * (e + 1)) / m + 1.0 / (n + 1);
      guesses.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
    }
  }
  return guesses;
}

struct AberthState {
  std::vector<Cx> z;
  std::vector<char> frozen;
};

// p and p' at x by a joint Horner pass.
void horner_pair(const std::vector<Cx>& c, const Cx& x, Cx& p, Cx& dp) {
  int n = static_cast<int>(c.size()) - 1;
  p = c[n];
  dp = Cx{BigFloat(0), BigFloat(0)};
  for (int k = n - 1; k >= 0; --k) {
    dp = dp * x + p;
    p = p * x + c[k];
  }
}

BigFloat normalized_residual(const std::vector<Cx>& c,
                             const std::vector<BigFloat>& cabs, const Cx& x) {
  Cx p, dp;
  horner_pair(c, x, p, dp);
  BigFloat r = abs(x);
  BigFloat scale = cabs.back();
  for (int k = static_cast<int>(cabs.size()) - 2; k >= 0; --k)
    scale = scale * r + cabs[k];
  return abs(p) / (1 + scale);
}

void run_aberth(const std::vector<Cx>& c, AberthState& st, int bits,
                int max_iterations) {
  int m = static_cast<int>(st.z.size());
  BigFloat stop = ldexp(BigFloat(1), -(bits - 8));
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool moved = false;
    for (int i = 0; i < m; ++i) {
      if (st.frozen[i]) continue;
      Cx p, dp;
      horner_pair(c, st.z[i], p, dp);
      if (p.re == 0 && p.im == 0) {
        st.frozen[i] = 1;
        continue;
      }
      if (dp.re == 0 && dp.im == 0) {
        // Flat spot: nudge deterministically and retry next sweep.
        st.z[i].re += ldexp(BigFloat(1) + abs(st.z[i]), -(bits / 2));
        moved = true;
        continue;
      }
      Cx newton = p / dp;
      Cx sum{BigFloat(0), BigFloat(0)};
      bool collision = false;
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        Cx diff = st.z[i] - st.z[j];
        if (diff.re == 0 && diff.im == 0) {
          collision = true;
          break;
        }
        sum = sum + Cx{BigFloat(1), BigFloat(0)} / diff;
      }
      if (collision) {
        st.z[i].re += ldexp(BigFloat(1) + abs(st.z[i]), -(bits / 2));
        moved = true;
        continue;
      }
      Cx denom = Cx{BigFloat(1), BigFloat(0)} - newton * sum;
      Cx w = (denom.re == 0 && denom.im == 0) ? newton : newton / denom;
      st.z[i] = st.z[i] - w;
      if (abs2(w) > stop * stop * (1 + abs2(st.z[i])))
        moved = true;
      else
        st.frozen[i] = 1;
    }
    if (!moved) return;
  }
}

}  // namespace

std::vector<RootEstimate> polynomial_roots(const Polynomial& p,
                                           const RootFindOptions& options) {
  if (p.degree() < 1)
    throw InputError("root finding needs degree at least 1");
  if (!(options.tolerance > 0))
    throw InputError("root tolerance must be positive");
  const auto& coeffs = p.coefficients();
  int zero_roots = 0;
  while (coeffs[zero_roots] == 0) ++zero_roots;
  std::vector<BigInt> c(coeffs.begin() + zero_roots, coeffs.end());
  int m = static_cast<int>(c.size()) - 1;

  std::vector<RootEstimate> result;
  result.reserve(p.degree());
  for (int i = 0; i < zero_roots; ++i) result.push_back({{0.0, 0.0}, 0.0});

  if (m > 0) {
    std::vector<Complex> seeds = initial_guesses(c);
    double worst = 0.0;
    bool solved = false;
    int bits = options.initial_bits;
    std::vector<Complex> found(m);
    std::vector<double> residuals(m);
    for (int attempt = 0; attempt <= options.max_escalations && !solved;
         ++attempt, bits *= 2) {
      BigFloat::default_precision(digits_for_bits(bits));
      std::vector<Cx> cf(m + 1);
      std::vector<BigFloat> cabs(m + 1);
      for (int k = 0; k <= m; ++k) {
        cf[k] = Cx{BigFloat(c[k]), BigFloat(0)};
        cabs[k] = boost::multiprecision::abs(cf[k].re);
      }
      AberthState st;
      st.z.resize(m);
      st.frozen.assign(m, 0);
      for (int i = 0; i < m; ++i)
        st.z[i] = Cx{BigFloat(seeds[i].real()), BigFloat(seeds[i].imag())};
      run_aberth(cf, st, bits, options.max_iterations);

      // Judge the double-rounded roots, since those are what we return.
      worst = 0.0;
      for (int i = 0; i < m; ++i) {
        found[i] = Complex(st.z[i].re.convert_to<double>(),
                           st.z[i].im.convert_to<double>());
        Cx rounded{BigFloat(found[i].real()), BigFloat(found[i].imag())};
        residuals[i] =
            normalized_residual(cf, cabs, rounded).convert_to<double>();
        worst = std::max(worst, residuals[i]);
      }
      if (worst <= options.tolerance) solved = true;
      // Warm-start the next attempt from the doubles we just extracted.
      seeds = found;
    }
    if (!solved) {
      char msg[96];
      std::snprintf(msg, sizeof msg,
                    "root refinement stalled at residual %.3e", worst);
      throw NumericalError(msg, worst);
    }
    for (int i = 0; i < m; ++i) result.push_back({found[i], residuals[i]});
  }

  std::sort(result.begin(), result.end(), [](const RootEstimate& a,
                                             const RootEstimate& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return result;
}

std::vector<RootEstimate> polynomial_roots(const Polynomial& p,
                                           double tolerance) {
  RootFindOptions options;
  options.tolerance = tolerance;
  return polynomial_roots(p, options);
}

}  // namespace hardcore
