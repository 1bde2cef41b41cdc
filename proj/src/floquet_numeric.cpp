// floquet_numeric.cpp — numerical Floquet pipeline
#include "floq/floquet_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace floq {

DrivenSystem::DrivenSystem(int dim_, double period_, std::function<MatXc(double)> h,
                           double periodicity_tol)
    : dim(dim_), period(period_), hamiltonian(std::move(h)) {
  if (dim < 2) throw std::invalid_argument("DrivenSystem: dimension must be >= 2");
  if (!(period > 0.0)) throw std::invalid_argument("DrivenSystem: period must be > 0");
  if (!hamiltonian) throw std::invalid_argument("DrivenSystem: hamiltonian must be callable");
  // spot-check periodicity and hermiticity on a fixed pseudo-random sample
  std::mt19937 rng(0x5eedu);
  std::uniform_real_distribution<double> uni(0.0, period);
  for (int k = 0; k < 8; ++k) {
    const double t = uni(rng);
    const MatXc h0 = hamiltonian(t);
    if (h0.rows() != dim || h0.cols() != dim)
      throw std::invalid_argument("DrivenSystem: hamiltonian shape mismatch");
    const double scale = std::max(1.0, h0.cwiseAbs().maxCoeff());
    if ((h0 - h0.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw std::invalid_argument("DrivenSystem: hamiltonian not Hermitian at sampled t");
    if ((hamiltonian(t + period) - h0).cwiseAbs().maxCoeff() > periodicity_tol * scale)
      throw std::invalid_argument("DrivenSystem: hamiltonian not T-periodic at sampled t");
  }
}

DrivenSystem twospin_system(double lambda, double f) {
  return DrivenSystem(4, kPeriod,
                      [lambda, f](double t) -> MatXc { return driven_hamiltonian(lambda, f, t); });
}

DrivenSystem twospin_system(const ModelParams& p) { return twospin_system(p.lambda, p.f); }

namespace {

// Dormand-Prince 5(4) tableau
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// 5th-order weights are row kA[6]; kE = b5 - b4 gives the embedded error
constexpr double kE[7] = {71.0 / 57600,      0.0,        -71.0 / 16695, 71.0 / 1920,
                          -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

// re-unitarize via QR with the diagonal of R forced positive (Q then equals
// the nearest-rotation of a near-unitary input up to O(defect))
MatXc unitarize(const MatXc& u) {
  Eigen::HouseholderQR<MatXc> qr(u);
  MatXc q = qr.householderQ();
  const MatXc r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < u.cols(); ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

double unitarity_defect_of(const MatXc& u) {
  const int n = u.rows();
  return (u.adjoint() * u - MatXc::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace

IntegrationResult integrate_propagator(const DrivenSystem& system, double t_end, double tol,
                                       const std::vector<double>& output_times,
                                       bool renormalize) {
  if (!(t_end > 0.0)) throw std::invalid_argument("integrate_propagator: t_end must be > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_propagator: tol must be > 0");
  std::vector<double> outputs = output_times.empty() ? std::vector<double>{t_end} : output_times;
  for (size_t i = 0; i < outputs.size(); ++i) {
    if (outputs[i] <= 0.0 || outputs[i] > t_end + 1e-12 * t_end ||
        (i > 0 && outputs[i] <= outputs[i - 1]))
      throw std::invalid_argument(
          "integrate_propagator: output times must be strictly increasing in (0, t_end]");
  }

  const int n = system.dim;
  const auto rhs = [&](double t, const MatXc& u) -> MatXc {
    return Complex(0.0, -1.0) * (system.hamiltonian(t) * u);
  };

  IntegrationResult res;
  res.times.reserve(outputs.size());
  res.propagators.reserve(outputs.size());

  MatXc u = MatXc::Identity(n, n);
  double t = 0.0;
  double h = std::min(1e-2 * t_end, outputs.front());
  const double h_min = 1e-14 * std::max(1.0, t_end);
  const long max_steps = 20'000'000;
  size_t oi = 0;
  std::array<MatXc, 7> k;

  while (oi < outputs.size()) {
    if (res.steps >= max_steps)
      throw IntegrationError("integrate_propagator: step budget exhausted", t);
    const double target = outputs[oi];
    double h_try = h;
    bool hits_target = false;
    // stretch slightly-short steps to the target so a step can never land
    // within rounding of an output time
    if (t + 1.01 * h_try >= target) {
      h_try = target - t;
      hits_target = true;
    }

    k[0] = rhs(t, u);
    for (int s = 1; s < 7; ++s) {
      MatXc y = u;
      for (int j = 0; j < s; ++j)
        if (kA[s][j] != 0.0) y += (h_try * kA[s][j]) * k[j];
      k[s] = rhs(t + kC[s] * h_try, y);
    }
    MatXc u5 = u;
    for (int j = 0; j < 6; ++j)
      if (kA[6][j] != 0.0) u5 += (h_try * kA[6][j]) * k[j];
    MatXc err = MatXc::Zero(n, n);
    for (int j = 0; j < 7; ++j)
      if (kE[j] != 0.0) err += (h_try * kE[j]) * k[j];

    // max-norm error relative to the per-component scale tol*(1 + |y|)
    double err_norm = 0.0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const double sc = tol * (1.0 + std::max(std::abs(u(r, c)), std::abs(u5(r, c))));
        err_norm = std::max(err_norm, std::abs(err(r, c)) / sc);
      }

    const double factor =
        err_norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0);
    if (err_norm > 1.0 && h_try <= h_min)
      throw IntegrationError("integrate_propagator: step size underflow", t);
    if (err_norm <= 1.0) {
      t = hits_target ? target : t + h_try;
      u = renormalize ? unitarize(u5) : std::move(u5);
      ++res.steps;
      if (hits_target) {
        res.times.push_back(target);
        res.propagators.push_back(u);
        res.unitarity_defect = std::max(res.unitarity_defect, unitarity_defect_of(u));
        ++oi;
      } else {
        h = std::max(h_try * factor, h_min);
      }
      // a clamped step says nothing about the natural step size: keep h
    } else {
      h = std::max(h_try * factor, h_min);
    }
  }
  return res;
}

NumericFloquet extract_floquet(const DrivenSystem& system, int grid_size, double tol) {
  if (grid_size < 4 || (grid_size & (grid_size - 1)) != 0)
    throw std::invalid_argument("extract_floquet: grid_size must be a power of two >= 4");

  const int n = system.dim;
  const double tt = system.period;
  const double omega = 2.0 * kPi / tt;

  // grid points in [0, T) plus the period end for the monodromy
  std::vector<double> outputs;
  outputs.reserve(grid_size);
  for (int kk = 1; kk < grid_size; ++kk) outputs.push_back(tt * kk / grid_size);
  outputs.push_back(tt);
  const IntegrationResult run = integrate_propagator(system, tt, tol, outputs);

  NumericFloquet out;
  out.dim = n;
  out.period = tt;
  out.monodromy = run.propagators.back();
  out.unitarity_defect = run.unitarity_defect;

  Eigen::ComplexEigenSolver<MatXc> es(out.monodromy);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("extract_floquet: monodromy eigendecomposition failed");

  // eigenvalue exp(-i*eps*T) -> representative eps in (-omega/2, omega/2]
  std::vector<std::pair<double, int>> order(n);
  for (int i = 0; i < n; ++i) {
    double eps = -std::arg(es.eigenvalues()(i)) / tt;  // in [-omega/2, omega/2)
    if (eps <= -omega / 2.0) eps += omega;
    order[i] = {eps, i};
  }
  std::sort(order.begin(), order.end());

  out.quasienergies.resize(n);
  out.eigenvectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.quasienergies(i) = order[i].first;
    VecXc v = es.eigenvectors().col(order[i].second);
    v.normalize();
    // gauge: largest-magnitude entry real positive
    int imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const Complex piv = v(imax);
    if (std::abs(piv) > 0.0) v *= std::conj(piv) / std::abs(piv);
    out.eigenvectors.col(i) = v;
  }

  out.min_gap = omega;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = std::abs(out.quasienergies(i) - out.quasienergies(j));
      out.min_gap = std::min(out.min_gap, std::min(d, omega - d));
    }
  out.degenerate = out.min_gap < 1e-10;

  out.grid.reserve(grid_size);
  out.floquet_functions.reserve(grid_size);
  out.grid.push_back(0.0);
  out.floquet_functions.push_back(out.eigenvectors);  // u_n(0) = v_n
  for (int kk = 1; kk < grid_size; ++kk) {
    const double t = run.times[kk - 1];
    out.grid.push_back(t);
    MatXc f = run.propagators[kk - 1] * out.eigenvectors;
    for (int m = 0; m < n; ++m) f.col(m) *= std::exp(Complex(0.0, out.quasienergies(m) * t));
    out.floquet_functions.push_back(std::move(f));
  }
  return out;
}

const MatXc& FourierTable::component(int ell) const {
  if (std::abs(ell) > lmax) throw std::out_of_range("FourierTable: |ell| exceeds lmax");
  return comps[ell + lmax];
}

Complex FourierTable::operator()(int n, int m, int ell) const {
  const MatXc& c = component(ell);
  if (n < 0 || n >= dim || m < 0 || m >= dim)
    throw std::out_of_range("FourierTable: index out of range");
  return c(n, m);
}

FourierTable fourier_components(const NumericFloquet& floquet, const MatXc& observable,
                                int lmax, double prune_floor) {
  const int n = floquet.dim;
  const int kk = static_cast<int>(floquet.grid.size());
  if (observable.rows() != n || observable.cols() != n)
    throw std::invalid_argument("fourier_components: observable shape mismatch");
  const double scale = std::max(1.0, observable.cwiseAbs().maxCoeff());
  if ((observable - observable.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("fourier_components: observable not Hermitian");
  if (lmax < 0 || lmax > kk / 2 - 1)
    throw std::invalid_argument("fourier_components: lmax must be in [0, K/2 - 1]");

  // matrix elements of the observable between Floquet functions on the grid
  std::vector<MatXc> elems(kk);
  for (int s = 0; s < kk; ++s)
    elems[s] = floquet.floquet_functions[s].adjoint() * observable * floquet.floquet_functions[s];

  FourierTable table;
  table.dim = n;
  table.lmax = lmax;
  table.omega = 2.0 * kPi / floquet.period;
  table.comps.assign(2 * lmax + 1, MatXc::Zero(n, n));
  for (int ell = -lmax; ell <= lmax; ++ell) {
    MatXc acc = MatXc::Zero(n, n);
    for (int s = 0; s < kk; ++s) {
      const double phase = -2.0 * kPi * ell * s / kk;
      acc += std::exp(Complex(0.0, phase)) * elems[s];
    }
    acc /= static_cast<double>(kk);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (std::abs(acc(r, c)) < prune_floor) acc(r, c) = Complex(0.0, 0.0);
    table.comps[ell + lmax] = std::move(acc);
  }
  return table;
}

}  // namespace floq
