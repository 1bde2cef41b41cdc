// floquet_analytic.cpp — closed-form Floquet solution of the two-spin model
#include "floq/floquet_analytic.hpp"

#include <cmath>

namespace floq {

std::array<double, 4> quasienergies(double lambda, double f) {
  const double r = std::hypot(f, lambda);
  return {-(2.0 * r + lambda) / 4.0, (lambda - 2.0 * f) / 4.0,
          (2.0 * r - lambda) / 4.0, (lambda + 2.0 * f) / 4.0};
}

std::array<double, 4> quasienergies(const ModelParams& p) {
  return quasienergies(p.lambda, p.f);
}

Mat4r mixing_matrix(double lambda, double f) {
  const double r = std::hypot(f, lambda);
  if (r == 0.0) throw std::invalid_argument("mixing_matrix: lambda = f = 0 (mixing angle undefined)");
  const double alpha = lambda / r;
  const double v = 0.5 * std::sqrt(1.0 + alpha);
  const double w = 0.5 * std::sqrt(1.0 - alpha);
  Mat4r a;
  a << -w, 0.5, v, 0.5,
       -v, -0.5, -w, 0.5,
        v, -0.5, w, 0.5,
        w, 0.5, -v, 0.5;
  return a;
}

Mat4r mixing_matrix(const ModelParams& p) { return mixing_matrix(p.lambda, p.f); }

FloquetDecomposition make_decomposition(double lambda, double f) {
  FloquetDecomposition d;
  d.lambda = lambda;
  d.f = f;
  d.eps = quasienergies(lambda, f);
  d.mixing = mixing_matrix(lambda, f);
  d.alpha = lambda / std::hypot(f, lambda);
  for (int n = 0; n < 3; ++n) {
    if (!(d.eps[n] < d.eps[n + 1])) {
      throw DegenerateError(
          "make_decomposition: quasienergies not strictly increasing (requires lambda, f > 0)");
    }
  }
  return d;
}

FloquetDecomposition make_decomposition(const ModelParams& p) {
  return make_decomposition(p.lambda, p.f);
}

Mat4c propagator(double lambda, double f, double t) {
  const Mat4r a = mixing_matrix(lambda, f);
  const auto eps = quasienergies(lambda, f);
  Vec4c delta;
  for (int n = 0; n < 4; ++n) delta(n) = std::exp(Complex(0.0, -eps[n] * t));
  Mat4c psi = a.cast<Complex>() * delta.asDiagonal() * a.transpose().cast<Complex>();
  const Complex rot = std::exp(Complex(0.0, -t));
  psi.row(0) *= rot;
  psi.row(3) *= std::conj(rot);
  return psi;
}

Mat4c propagator(const ModelParams& p, double t) { return propagator(p.lambda, p.f, t); }

Vec4c floquet_function(double lambda, double f, int n, double t) {
  if (n < 1 || n > 4) throw std::invalid_argument("floquet_function: index n must be in 1..4");
  const Mat4r a = mixing_matrix(lambda, f);
  Vec4c u = a.col(n - 1).cast<Complex>();
  u(0) *= std::exp(Complex(0.0, -t));
  u(3) *= std::exp(Complex(0.0, t));
  return u;
}

Vec4c floquet_function(const ModelParams& p, int n, double t) {
  return floquet_function(p.lambda, p.f, n, t);
}

}  // namespace floq
