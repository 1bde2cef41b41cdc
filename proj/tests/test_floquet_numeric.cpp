// test_floquet_numeric.cpp — adaptive propagator integration, monodromy
// diagnostics, quasienergy extraction, and Fourier tables
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "floq/floquet_analytic.hpp"
#include "floq/floquet_numeric.hpp"
#include "floq/model.hpp"

using namespace floq;

namespace {

double max_abs(const MatXc& m) { return m.cwiseAbs().maxCoeff(); }

double circ_dist(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 1.0);
  return std::min(d, 1.0 - d);
}

// generic 3-level circularly driven test system, safely non-degenerate
DrivenSystem three_level() {
  MatXc d = MatXc::Zero(3, 3), x = MatXc::Zero(3, 3), y = MatXc::Zero(3, 3);
  d(0, 0) = 0.3;
  d(1, 1) = -0.1;
  d(2, 2) = 0.7;
  x(0, 1) = x(1, 0) = 0.2;
  x(1, 2) = x(2, 1) = 0.4;
  y(0, 2) = Complex(0.0, 0.3);
  y(2, 0) = Complex(0.0, -0.3);
  return DrivenSystem(3, kPeriod, [=](double t) -> MatXc {
    return d + std::cos(t) * x + std::sin(t) * y;
  });
}

// fold to the representative interval (-1/2, 1/2]
double fold(double eps) {
  double e = std::remainder(eps, 1.0);
  if (e <= -0.5) e += 1.0;
  return e;
}

// match numeric quasienergies to folded analytic ones; returns the
// permutation sigma with eps_num[n] ~ fold(eps_an[sigma[n]])
std::array<int, 4> match_states(const VecXr& eps_num, const std::array<double, 4>& eps_an) {
  std::array<int, 4> sigma{};
  std::array<bool, 4> used{};
  for (int n = 0; n < 4; ++n) {
    double best = 1e300;
    int arg = -1;
    for (int m = 0; m < 4; ++m) {
      if (used[m]) continue;
      const double d = circ_dist(eps_num(n), eps_an[m]);
      if (d < best) {
        best = d;
        arg = m;
      }
    }
    REQUIRE(best < 1e-6);
    used[arg] = true;
    sigma[n] = arg;
  }
  return sigma;
}

}  // namespace

TEST_CASE("undriven propagator matches the spectral exponential") {
  const double lambda = 1.4;
  const DrivenSystem sys = twospin_system(lambda, 0.0);
  const StaticSpectrum spec = static_spectrum(lambda);
  const std::vector<double> times = {1.7, kPeriod};
  const IntegrationResult res = integrate_propagator(sys, kPeriod, 1e-10, times);
  REQUIRE(res.times == times);
  REQUIRE(res.propagators.size() == 2);
  for (size_t k = 0; k < times.size(); ++k) {
    Mat4c exact = Mat4c::Zero();
    for (int n = 0; n < 4; ++n)
      exact += std::exp(Complex(0.0, -spec.energies[n] * times[k])) * spec.projectors[n];
    REQUIRE(max_abs(res.propagators[k] - exact) < 1e-8);
  }
}

TEST_CASE("integrated propagator matches the closed form") {
  for (const auto& [lambda, f] : {std::pair{1.0, 1.0}, std::pair{1.3, 0.7}, std::pair{2.6, 2.1}}) {
    const IntegrationResult res =
        integrate_propagator(twospin_system(lambda, f), kPeriod, 1e-10);
    REQUIRE(max_abs(res.propagators.back() - propagator(lambda, f, kPeriod)) < 1e-8);
    REQUIRE(res.unitarity_defect < 1e-8);
    REQUIRE(res.steps > 0);
  }
}

TEST_CASE("numeric monodromy is symmetric") {
  const IntegrationResult res = integrate_propagator(twospin_system(1.7, 1.1), kPeriod, 1e-10);
  const MatXc mono = res.propagators.back();
  REQUIRE(max_abs(mono - mono.transpose()) < 1e-8);
}

TEST_CASE("tightening the tolerance tightens the result") {
  const Mat4c exact = propagator(0.9, 1.6, kPeriod);
  std::vector<double> errs;
  for (const double tol : {1e-6, 1e-8, 1e-10}) {
    const IntegrationResult res = integrate_propagator(twospin_system(0.9, 1.6), kPeriod, tol);
    errs.push_back(max_abs(res.propagators.back() - exact));
  }
  REQUIRE(errs[0] > errs[1]);
  REQUIRE(errs[1] > errs[2]);
  REQUIRE(errs[2] < 1e-8);
}

TEST_CASE("renormalization keeps the propagator unitary to round-off") {
  const IntegrationResult res =
      integrate_propagator(twospin_system(1.2, 2.3), kPeriod, 1e-8, {}, true);
  const MatXc u = res.propagators.back();
  REQUIRE(max_abs(u.adjoint() * u - MatXc::Identity(4, 4)) < 1e-13);
}

TEST_CASE("integration aborts with position information at a Hamiltonian wall") {
  MatXc m = MatXc::Zero(2, 2);
  m(0, 0) = 1.0;
  m(0, 1) = m(1, 0) = 0.5;
  m(1, 1) = -1.0;
  const DrivenSystem spiked(2, kPeriod,
                            [=](double t) -> MatXc { return std::exp(100.0 * std::cos(t - 3.0)) * m; });
  REQUIRE_THROWS_AS(integrate_propagator(spiked, 3.1, 1e-10), IntegrationError);
  try {
    integrate_propagator(spiked, 3.1, 1e-10);
  } catch (const IntegrationError& e) {
    REQUIRE(e.t_reached > 0.0);
    REQUIRE(e.t_reached < 3.1);
  }
}

TEST_CASE("driven system and integrator input validation") {
  const auto flat = [](double) -> MatXc { return MatXc::Identity(2, 2); };
  REQUIRE_THROWS_AS(DrivenSystem(1, kPeriod, flat), std::invalid_argument);
  REQUIRE_THROWS_AS(DrivenSystem(2, 0.0, flat), std::invalid_argument);
  REQUIRE_THROWS_AS(DrivenSystem(2, kPeriod,
                                 [](double) -> MatXc {
                                   MatXc m = MatXc::Zero(2, 2);
                                   m(0, 1) = 1.0;
                                   return m;
                                 }),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(DrivenSystem(2, kPeriod,
                                 [](double t) -> MatXc {
                                   return t * MatXc::Identity(2, 2);
                                 }),
                    std::invalid_argument);

  const DrivenSystem sys = twospin_system(1.0, 0.5);
  REQUIRE_THROWS_AS(integrate_propagator(sys, 0.0, 1e-8), std::invalid_argument);
  REQUIRE_THROWS_AS(integrate_propagator(sys, 1.0, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(integrate_propagator(sys, 1.0, 1e-8, {0.5, 0.5}), std::invalid_argument);
  REQUIRE_THROWS_AS(integrate_propagator(sys, 1.0, 1e-8, {0.0, 0.5}), std::invalid_argument);
  REQUIRE_THROWS_AS(integrate_propagator(sys, 1.0, 1e-8, {0.5, 1.5}), std::invalid_argument);
}

TEST_CASE("extracted quasienergies match the folded closed forms") {
  const NumericFloquet nf = extract_floquet(twospin_system(1.3, 0.7), 64, 1e-10);
  REQUIRE_FALSE(nf.degenerate);
  REQUIRE(nf.dim == 4);
  const auto eps_an = quasienergies(1.3, 0.7);
  const auto sigma = match_states(nf.quasienergies, eps_an);
  for (int n = 0; n < 4; ++n)
    REQUIRE(circ_dist(nf.quasienergies(n), eps_an[sigma[n]]) < 1e-9);
  for (int n = 0; n < 4; ++n) {
    REQUIRE(nf.quasienergies(n) > -0.5);
    REQUIRE(nf.quasienergies(n) <= 0.5);
    if (n > 0) REQUIRE(nf.quasienergies(n) >= nf.quasienergies(n - 1));
  }
  REQUIRE(std::abs(nf.min_gap - 0.038241153011669886) < 1e-6);
}

TEST_CASE("undriven extraction folds the static spectrum and flags degeneracy") {
  const NumericFloquet nf = extract_floquet(twospin_system(1.3, 0.0), 16, 1e-10);
  REQUIRE(nf.degenerate);
  std::vector<double> got(nf.quasienergies.data(), nf.quasienergies.data() + 4);
  std::vector<double> want = {fold(1.325), fold(-0.675), fold(-0.975), fold(0.325)};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  for (int n = 0; n < 4; ++n) REQUIRE(circ_dist(got[n], want[n]) < 1e-9);
}

TEST_CASE("Floquet-function magnitudes match the mixing-matrix columns") {
  const NumericFloquet nf = extract_floquet(twospin_system(1.0, 0.5), 64, 1e-10);
  REQUIRE_FALSE(nf.degenerate);
  const auto sigma = match_states(nf.quasienergies, quasienergies(1.0, 0.5));
  const Mat4r a = mixing_matrix(1.0, 0.5);
  for (const int k : {0, 16, 37, 63}) {
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r)
        REQUIRE(std::abs(std::abs(nf.floquet_functions[k](r, n)) -
                         std::abs(a(r, sigma[n]))) < 1e-9);
  }
}

TEST_CASE("time-shifting the Hamiltonian preserves the quasienergies") {
  const NumericFloquet base = extract_floquet(twospin_system(1.6, 1.2), 32, 1e-11);
  const DrivenSystem shifted(4, kPeriod, [](double t) -> MatXc {
    return driven_hamiltonian(1.6, 1.2, t + 0.5 * kPeriod);
  });
  const NumericFloquet moved = extract_floquet(shifted, 32, 1e-11);
  for (int n = 0; n < 4; ++n)
    REQUIRE(std::abs(base.quasienergies(n) - moved.quasienergies(n)) < 1e-9);
}

TEST_CASE("extraction validates the grid size") {
  const DrivenSystem sys = twospin_system(1.0, 0.5);
  REQUIRE_THROWS_AS(extract_floquet(sys, 2, 1e-8), std::invalid_argument);
  REQUIRE_THROWS_AS(extract_floquet(sys, 48, 1e-8), std::invalid_argument);
}

TEST_CASE("Fourier table of the identity observable is the identity at ell = 0") {
  for (const bool twospin : {true, false}) {
    const NumericFloquet nf = twospin
                                  ? extract_floquet(twospin_system(1.0, 0.5), 64, 1e-10)
                                  : extract_floquet(three_level(), 64, 1e-10);
    const MatXc eye = MatXc::Identity(nf.dim, nf.dim);
    const FourierTable table = fourier_components(nf, eye, 4);
    REQUIRE(max_abs(table.component(0) - eye) < 1e-9);
    // sideband leakage of a constant is bounded by the orthonormality defect
    for (const int ell : {-4, -3, -2, -1, 1, 2, 3, 4})
      REQUIRE(max_abs(table.component(ell)) < 1e-9);
  }
}

TEST_CASE("Fourier components pair up under Hermitian conjugation") {
  for (const bool twospin : {true, false}) {
    const NumericFloquet nf = twospin
                                  ? extract_floquet(twospin_system(1.0, 0.5), 256, 1e-10)
                                  : extract_floquet(three_level(), 256, 1e-10);
    MatXc obs = MatXc::Zero(nf.dim, nf.dim);
    obs(0, 1) = Complex(0.4, 0.1);
    obs(1, 0) = Complex(0.4, -0.1);
    obs(nf.dim - 1, nf.dim - 1) = 0.8;
    const FourierTable table = fourier_components(nf, obs, 4);
    for (int n = 0; n < nf.dim; ++n)
      for (int m = 0; m < nf.dim; ++m)
        for (int ell = -4; ell <= 4; ++ell)
          REQUIRE(std::abs(table(n, m, ell) - std::conj(table(m, n, -ell))) < 1e-11);
  }
}

TEST_CASE("Fourier analysis validates its inputs") {
  const NumericFloquet nf = extract_floquet(twospin_system(1.0, 0.5), 16, 1e-8);
  MatXc skew = MatXc::Zero(4, 4);
  skew(0, 1) = 1.0;
  REQUIRE_THROWS_AS(fourier_components(nf, skew, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(fourier_components(nf, MatXc::Identity(4, 4), 8), std::invalid_argument);
  REQUIRE_THROWS_AS(fourier_components(nf, MatXc::Identity(3, 3), 2), std::invalid_argument);
  const FourierTable table = fourier_components(nf, MatXc::Identity(4, 4), 2);
  REQUIRE_THROWS_AS(table.component(3), std::out_of_range);
}
