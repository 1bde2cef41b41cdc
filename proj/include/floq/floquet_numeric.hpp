// floquet_numeric.hpp — general numerical Floquet pipeline for periodically
// driven N-level systems: propagator integration, quasienergy extraction,
// Floquet functions on a grid, Fourier analysis of periodic matrix elements
#pragma once

#include <functional>
#include <vector>

#include "floq/model.hpp"
#include "floq/types.hpp"

namespace floq {

// T-periodic Hermitian Hamiltonian family. Periodicity and hermiticity are
// spot-checked at construction on a fixed pseudo-random time sample.
struct DrivenSystem {
  int dim;
  double period;
  std::function<MatXc(double)> hamiltonian;

  DrivenSystem(int dim_, double period_, std::function<MatXc(double)> h,
               double periodicity_tol = 1e-10);
};

// the built-in driven two-spin model as a DrivenSystem
DrivenSystem twospin_system(double lambda, double f);
DrivenSystem twospin_system(const ModelParams& p);

struct IntegrationResult {
  std::vector<double> times;
  std::vector<MatXc> propagators;
  double unitarity_defect = 0.0;  // max over outputs of ||U^dag U - I||_max
  long steps = 0;                 // accepted steps
};

// Adaptive embedded Runge-Kutta 5(4) (Dormand-Prince) for dU/dt = -i H(t) U,
// U(0) = I. `output_times` must be strictly increasing in (0, t_end]; empty
// means {t_end}. Per-step error is controlled to `tol` (absolute and relative).
// `renormalize` re-unitarizes after each accepted step (off by default so the
// unitarity defect stays a meaningful diagnostic).
IntegrationResult integrate_propagator(const DrivenSystem& system, double t_end, double tol,
                                       const std::vector<double>& output_times = {},
                                       bool renormalize = false);

struct NumericFloquet {
  int dim = 0;
  double period = 0.0;
  MatXc monodromy;
  VecXr quasienergies;  // ascending representatives in (-omega/2, omega/2]
  MatXc eigenvectors;   // column n pairs with quasienergies[n]; gauge-fixed
  std::vector<double> grid;              // K uniform times in [0, T)
  std::vector<MatXc> floquet_functions;  // column n = u_n(t_k), unit norm
  double unitarity_defect = 0.0;
  double min_gap = 0.0;     // smallest circular quasienergy gap
  bool degenerate = false;  // min_gap < 1e-10: eigenvectors basis-dependent
};

// integrate one period, diagonalize the monodromy, tabulate Floquet functions;
// grid_size must be a power of two >= 4 (it feeds the Fourier step)
NumericFloquet extract_floquet(const DrivenSystem& system, int grid_size, double tol);

// Discrete Fourier components, index ell in [-lmax, lmax]
struct FourierTable {
  int dim = 0;
  int lmax = 0;
  double omega = 1.0;        // drive frequency the sideband index multiplies
  std::vector<MatXc> comps;  // comps[ell + lmax]

  const MatXc& component(int ell) const;
  Complex operator()(int n, int m, int ell) const;  // n, m are 0-based
};

// Fourier coefficients of t -> <u_n(t)|V|u_m(t)>; magnitudes below
// `prune_floor` are set to exact zero
FourierTable fourier_components(const NumericFloquet& floquet, const MatXc& observable,
                                int lmax = 8, double prune_floor = 1e-12);

}  // namespace floq
