// floquet_analytic.hpp — closed-form Floquet solution of the two-spin model
#pragma once

#include <array>

#include "floq/model.hpp"
#include "floq/types.hpp"

namespace floq {

// Quasienergy representatives, in the fixed analytic branch (not folded into a
// symmetric zone): the phase-boundary functions are written against exactly these.
// Strictly increasing for lambda, f > 0.
std::array<double, 4> quasienergies(double lambda, double f);
std::array<double, 4> quasienergies(const ModelParams& p);

// Real orthogonal matrix whose columns are the t = 0 Floquet states.
// Rejects lambda = f = 0 (the mixing angle is 0/0 there).
Mat4r mixing_matrix(double lambda, double f);
Mat4r mixing_matrix(const ModelParams& p);

// Immutable bundle of quasienergies + mixing matrix; construction enforces the
// strict quasienergy ordering that all phase/dissipation machinery relies on.
struct FloquetDecomposition {
  double lambda = 0.0, f = 0.0;
  double alpha = 0.0;  // lambda / sqrt(f^2 + lambda^2)
  std::array<double, 4> eps{};
  Mat4r mixing;
};
FloquetDecomposition make_decomposition(double lambda, double f);
FloquetDecomposition make_decomposition(const ModelParams& p);

// Exact propagator at any time t; identity at t = 0, unitary for all t,
// symmetric at t = one period.
Mat4c propagator(double lambda, double f, double t);
Mat4c propagator(const ModelParams& p, double t);

// n-th Floquet function u_n(t), n in 1..4; 2*pi-periodic, unit norm.
Vec4c floquet_function(double lambda, double f, int n, double t);
Vec4c floquet_function(const ModelParams& p, int n, double t);

}  // namespace floq
