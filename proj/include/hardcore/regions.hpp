#pragma once

#include <string>
#include <vector>

#include "hardcore/parallel.hpp"
#include "hardcore/polynomial.hpp"

namespace hardcore {

// Zero-free and zero-dense domains in the complex activity plane, all
// parametrized by the degree bound Delta (d = Delta - 1 is the branching
// factor).
enum class RegionKind {
  shearer,        // disk |x| <= (D-1)^(D-1)/D^D
  pr_eps,         // sector |x| <= tan(pi/((2+eps)(D-1))), |arg x| <= eps*pi/(2(2+eps))
  pr_union,       // union of pr_eps over eps > 0
  ud,             // {-a d^d/(d+a)^(d+1) : |a| <= 1}
  new_domain,     // traced by (t(beta), s(beta)) for beta in [0, pi/2]
  half_disk_d1,   // Re x >= 0, |x| <= (7/8) tan(pi/2d)
  half_disk_d2,   // Re x >= 0, |x| <= tan(pi/2d)
};

struct RegionSpec {
  RegionKind kind = RegionKind::shearer;
  int delta = 3;
  double eps = 0.0;  // only for pr_eps
  void validate() const;
};

const char* region_kind_name(RegionKind kind);

double shearer_radius(int delta);

// arg(1 + r e^(i angle)) for r >= 0, angle in [0, pi/2].
double beta_prime(double r, double angle);

// Coefficients of the modulus quadratic A x^2 + B x + C with
// u = tan((beta+gamma)/d); the sign pattern A > 0, B >= 0, C < 0 is asserted.
struct QuadraticCoeffs {
  double a, b, c, u;
};

QuadraticCoeffs quadratic_coeffs(double beta, double gamma, int d);

// The unique positive root of the quadratic above: the largest certified
// modulus for the sector with half-angles (beta, gamma).
double s_radius(double beta, double gamma, int d);

// Boundary argument paired with s(beta, pi/2):  pi/2 - d * beta'.
double t_angle(double beta, int d);

struct BoundarySample {
  double beta;
  double t_value;
  double s_value;
};

std::vector<BoundarySample> new_domain_boundary(int d, int samples,
                                                Exec exec = Exec::serial);

// Membership by scanning every grid crossing of t(beta) = |arg lam| and
// comparing |lam| against the largest s there (1e-9 boundary slack).
bool new_domain_contains(Complex lam, int d, int samples = 512);
// Largest admissible modulus at argument alpha, or a negative value when no
// boundary crossing exists.
double new_domain_max_modulus(double alpha, int d, int samples = 512);

bool pr_eps_contains(Complex lam, int delta, double eps);
// Union over eps > 0, reduced to the tightest eps fitting the argument.
bool pr_contains(Complex lam, int delta);
double pr_union_radius(double alpha, int delta);

Complex ud_boundary_point(double theta, int d);

struct UdMembership {
  bool inside = false;
  bool on_boundary = false;
  double boundary_distance = 0.0;
};

UdMembership ud_membership(Complex lam, int d, int samples = 512);
bool ud_contains(Complex lam, int d, int samples = 512);
// Guards the simple-closed-curve assumption behind the winding test.
bool ud_curve_is_simple(int d, int samples = 512);

// Closed-inequality certificate d*gamma' - beta <= arg lam <= gamma - d*beta'.
struct CertificateMargins {
  bool holds = false;
  double left_margin = 0.0;
  double right_margin = 0.0;
};

CertificateMargins certificate_margins(Complex lam, double beta, double gamma,
                                       int d);
bool certificate_check(Complex lam, double beta, double gamma, int d);

struct ContainmentCounterexample {
  std::string relation;
  Complex lam;
};

struct ContainmentReport {
  long checks = 0;
  std::vector<ContainmentCounterexample> counterexamples;
};

// Samples an (argument x modulus) grid and verifies the containment chain:
// half-disk D1 within the traced domain, the traced domain within half-disk
// D2, the eps-union sector within the traced domain, and the Shearer disk
// within the ud domain for the same branching factor.
ContainmentReport region_containment_scan(int d, int samples,
                                          Exec exec = Exec::serial);

// Boundary modulus along the ray at angle |alpha|; zero where the region has
// no points on that ray.  The ud kind is not ray-parameterized and rejects.
double region_radius_at(const RegionSpec& spec, double alpha);

// Membership with the same boundary slack the scans use.
bool region_contains(const RegionSpec& spec, Complex lam);

struct PolarSample {
  double arg;
  double modulus;
};

// Closed boundary of any region kind in polar form, for plotting.
std::vector<PolarSample> region_boundary(const RegionSpec& spec, int samples);

}  // namespace hardcore
