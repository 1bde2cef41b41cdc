// dissipation.hpp — golden-rule rates between Floquet states, the master-equation
// generator, and the unique strictly positive stationary state
#pragma once

#include <functional>

#include "floq/floquet_numeric.hpp"
#include "floq/model.hpp"
#include "floq/types.hpp"

namespace floq {

// Thermal bath occupation at signed frequency omega (positive for both signs);
// throws OnBoundaryError when |omega| < boundary_tol, where it diverges.
double bath_occupation(double omega, double beta_bath, double boundary_tol = 1e-9);

// the bath couples to the driven spin's transverse component
Mat4c coupling_operator();

// Closed-form Fourier components (only ell = +-1 are nonzero) of the coupling
// operator between the analytic Floquet states. Requires lambda, f > 0.
FourierTable coupling_fourier_analytic(double lambda, double f);
FourierTable coupling_fourier_analytic(const ModelParams& p);

// optional user-supplied spectral density J(|omega|); default is the constant j0
using SpectralDensity = std::function<double(double)>;

struct RateMatrix {
  MatXr gamma;  // Gamma(f, i): rate from state i into state f, all >= 0
  int lmax = 0;                    // Fourier truncation actually used
  double truncation_defect = 0.0;  // largest partial rate discarded by the truncation
};

// Gamma(f,i) = sum_ell 2*pi |V^(ell)_fi|^2 N(eps_f - eps_i + ell*omega) * J;
// sidebands with exactly zero Fourier weight contribute nothing and are never
// evaluated; a nonzero-weight sideband frequency inside boundary_tol throws an
// OnBoundaryError annotated with (from, to, ell)
RateMatrix transition_rates(const VecXr& quasienergies, const FourierTable& fourier,
                            double beta_bath, double j0, int lmax, double boundary_tol = 1e-9,
                            const SpectralDensity& density = nullptr);

// generator with off-diagonal rates and diagonal = exactly the negated
// ascending-order sum of the other column entries; each column then sums to
// zero up to one rounding of its largest rate
MatXr effective_generator(const RateMatrix& rates);

// strong connectivity of the directed graph with edge i -> f iff gamma(f,i) > threshold
bool check_irreducible(const RateMatrix& rates, double threshold = 1e-14);

struct NessSolution {
  VecXr p;
  double residual = 0.0;  // ||generator * p||_inf after normalization
  bool irreducible = false;
};

// unique strictly positive stationary distribution of the generator, by a dense
// row-replacement solve; enforces residual < 1e-10 * ||gamma||_inf and p > 0
NessSolution solve_ness(const RateMatrix& rates);

// analytic two-spin pipeline: closed-form quasienergies and Fourier components;
// refuses points where the quasienergy ordering degenerates (e.g. f -> 0)
RateMatrix twospin_rates(const ModelParams& p, int lmax = 1, double boundary_tol = 1e-9);

// numeric pipeline for any extracted Floquet system; refuses degenerate monodromy
RateMatrix rates_from_numeric(const NumericFloquet& floquet, const MatXc& observable,
                              double beta_bath, double j0, int lmax = 8,
                              double boundary_tol = 1e-9,
                              const SpectralDensity& density = nullptr);

}  // namespace floq
