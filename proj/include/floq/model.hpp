// model.hpp — two-spin model: parameters, Hamiltonians, static spectrum
#pragma once

#include <array>

#include "floq/types.hpp"

namespace floq {

// Two exchange-coupled spin-1/2's, one driven circularly at unit frequency.
// Basis order: |up,up>, |up,down>, |down,up>, |down,down>.
struct ModelParams {
  double lambda;           // exchange coupling, > 0
  double f;                // drive amplitude, >= 0
  double beta_init = 0.0;  // inverse temperature of the initial Gibbs state, >= 0
  double beta_bath = 1.0;  // inverse temperature of the bath, > 0
  double j0 = 1.0;         // constant bath spectral density, > 0

  ModelParams(double lambda_, double f_, double beta_init_ = 0.0,
              double beta_bath_ = 1.0, double j0_ = 1.0);
};

// undriven Hamiltonian (f = 0); `lambda` may be any real here so limits can be probed
Mat4c static_hamiltonian(double lambda);
Mat4c static_hamiltonian(const ModelParams& p);

// full Hamiltonian at time t in the rotating drive
Mat4c driven_hamiltonian(double lambda, double f, double t);
Mat4c driven_hamiltonian(const ModelParams& p, double t);

// eigenvalues and eigenprojectors of the undriven Hamiltonian, in the fixed order
// (polarized up, polarized down, singlet, triplet-0)
struct StaticSpectrum {
  std::array<double, 4> energies;
  std::array<Mat4c, 4> projectors;
};
StaticSpectrum static_spectrum(double lambda);
StaticSpectrum static_spectrum(const ModelParams& p);

}  // namespace floq
