// model.cpp — two-spin model definitions
#include "floq/model.hpp"

#include <cmath>

namespace floq {

ModelParams::ModelParams(double lambda_, double f_, double beta_init_,
                         double beta_bath_, double j0_)
    : lambda(lambda_), f(f_), beta_init(beta_init_), beta_bath(beta_bath_), j0(j0_) {
  if (!(lambda > 0.0)) throw std::invalid_argument("ModelParams: lambda must be > 0");
  if (!(f >= 0.0)) throw std::invalid_argument("ModelParams: f must be >= 0");
  if (!(beta_init >= 0.0)) throw std::invalid_argument("ModelParams: beta_init must be >= 0");
  if (!(beta_bath > 0.0)) throw std::invalid_argument("ModelParams: beta_bath must be > 0");
  if (!(j0 > 0.0)) throw std::invalid_argument("ModelParams: j0 must be > 0");
}

Mat4c static_hamiltonian(double lambda) {
  Mat4c h = Mat4c::Zero();
  h(0, 0) = (lambda + 4.0) / 4.0;
  h(1, 1) = -lambda / 4.0;
  h(2, 2) = -lambda / 4.0;
  h(3, 3) = (lambda - 4.0) / 4.0;
  h(1, 2) = lambda / 2.0;
  h(2, 1) = lambda / 2.0;
  return h;
}

Mat4c static_hamiltonian(const ModelParams& p) { return static_hamiltonian(p.lambda); }

Mat4c driven_hamiltonian(double lambda, double f, double t) {
  Mat4c h = static_hamiltonian(lambda);
  const Complex drive = 0.5 * f * std::exp(Complex(0.0, -t));
  h(0, 2) = drive;
  h(1, 3) = drive;
  h(2, 0) = std::conj(drive);
  h(3, 1) = std::conj(drive);
  return h;
}

Mat4c driven_hamiltonian(const ModelParams& p, double t) {
  return driven_hamiltonian(p.lambda, p.f, t);
}

StaticSpectrum static_spectrum(double lambda) {
  StaticSpectrum s;
  s.energies = {lambda / 4.0 + 1.0, lambda / 4.0 - 1.0, -3.0 * lambda / 4.0, lambda / 4.0};
  for (auto& pr : s.projectors) pr = Mat4c::Zero();
  s.projectors[0](0, 0) = 1.0;  // both spins up
  s.projectors[1](3, 3) = 1.0;  // both spins down
  // singlet and triplet-0 in the middle block
  s.projectors[2](1, 1) = 0.5;
  s.projectors[2](2, 2) = 0.5;
  s.projectors[2](1, 2) = -0.5;
  s.projectors[2](2, 1) = -0.5;
  s.projectors[3](1, 1) = 0.5;
  s.projectors[3](2, 2) = 0.5;
  s.projectors[3](1, 2) = 0.5;
  s.projectors[3](2, 1) = 0.5;
  return s;
}

StaticSpectrum static_spectrum(const ModelParams& p) { return static_spectrum(p.lambda); }

}  // namespace floq
