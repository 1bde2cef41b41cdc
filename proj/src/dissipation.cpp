// dissipation.cpp — golden-rule rates and stationary-state solver
#include "floq/dissipation.hpp"

#include <cmath>
#include <vector>

#include "floq/floquet_analytic.hpp"

namespace floq {

double bath_occupation(double omega, double beta_bath, double boundary_tol) {
  if (std::abs(omega) < boundary_tol)
    throw OnBoundaryError("bath_occupation: frequency on a rate divergence", omega);
  // 1/(e^{bw} - 1) for w > 0, 1/(1 - e^{bw}) for w < 0, via expm1 for stability
  const double e = std::expm1(beta_bath * omega);
  return omega > 0.0 ? 1.0 / e : -1.0 / e;
}

Mat4c coupling_operator() {
  Mat4c v = Mat4c::Zero();
  v(0, 1) = v(1, 0) = 0.5;
  v(2, 3) = v(3, 2) = 0.5;
  return v;
}

FourierTable coupling_fourier_analytic(double lambda, double f) {
  if (!(lambda > 0.0) || !(f > 0.0))
    throw std::invalid_argument("coupling_fourier_analytic: requires lambda, f > 0");
  const double u = 1.0 / std::hypot(f, lambda);
  const double v = std::sqrt(1.0 + lambda * u);
  const double w = std::sqrt(1.0 - lambda * u);
  Mat4r plus;
  plus << 2.0 * f * u, v + w, -2.0 * lambda * u, v - w,
          -v - w, -2.0, v - w, 0.0,
          -2.0 * lambda * u, w - v, -2.0 * f * u, v + w,
          w - v, 0.0, -v - w, 2.0;
  plus /= 8.0;

  FourierTable table;
  table.dim = 4;
  table.lmax = 1;
  table.omega = 1.0;
  table.comps.assign(3, MatXc::Zero(4, 4));
  table.comps[0] = plus.transpose().cast<Complex>();  // ell = -1
  table.comps[2] = plus.cast<Complex>();              // ell = +1
  return table;
}

FourierTable coupling_fourier_analytic(const ModelParams& p) {
  return coupling_fourier_analytic(p.lambda, p.f);
}

RateMatrix transition_rates(const VecXr& quasienergies, const FourierTable& fourier,
                            double beta_bath, double j0, int lmax, double boundary_tol,
                            const SpectralDensity& density) {
  const int n = static_cast<int>(quasienergies.size());
  if (n != fourier.dim)
    throw std::invalid_argument("transition_rates: quasienergy/Fourier dimension mismatch");
  if (!(beta_bath > 0.0)) throw std::invalid_argument("transition_rates: beta_bath must be > 0");
  if (!(j0 > 0.0)) throw std::invalid_argument("transition_rates: j0 must be > 0");
  if (lmax < 0) throw std::invalid_argument("transition_rates: lmax must be >= 0");

  RateMatrix rates;
  rates.lmax = std::min(lmax, fourier.lmax);
  rates.gamma = MatXr::Zero(n, n);
  rates.truncation_defect = 0.0;

  for (int ell = -fourier.lmax; ell <= fourier.lmax; ++ell) {
    const MatXc& comp = fourier.component(ell);
    for (int to = 0; to < n; ++to) {
      for (int from = 0; from < n; ++from) {
        const double weight = std::norm(comp(to, from));
        if (weight == 0.0) continue;
        const double omega = quasienergies(to) - quasienergies(from) + ell * fourier.omega;
        double partial;
        try {
          const double dens = density ? density(std::abs(omega)) : j0;
          partial = 2.0 * kPi * weight * bath_occupation(omega, beta_bath, boundary_tol) * dens;
        } catch (const OnBoundaryError& e) {
          throw OnBoundaryError(std::string("transition_rates: sideband frequency on a ") +
                                    "boundary (from=" + std::to_string(from + 1) +
                                    ", to=" + std::to_string(to + 1) +
                                    ", ell=" + std::to_string(ell) + ")",
                                e.omega, from + 1, to + 1, ell);
        }
        if (std::abs(ell) <= rates.lmax)
          rates.gamma(to, from) += partial;
        else
          rates.truncation_defect = std::max(rates.truncation_defect, std::abs(partial));
      }
    }
  }
  return rates;
}

MatXr effective_generator(const RateMatrix& rates) {
  const MatXr& g = rates.gamma;
  const int n = static_cast<int>(g.rows());
  MatXr gt = g;
  for (int c = 0; c < n; ++c) {
    // the diagonal is exactly the negated in-order sum of the other column
    // entries; the interleaved column sum is then zero up to one rounding of
    // the largest rate (an exactly-zero interleaved sum is not representable
    // for every column)
    double offsum = 0.0;
    for (int r = 0; r < n; ++r)
      if (r != c) offsum += g(r, c);
    gt(c, c) = -offsum;
  }
  return gt;
}

bool check_irreducible(const RateMatrix& rates, double threshold) {
  const MatXr& g = rates.gamma;
  const int n = static_cast<int>(g.rows());
  // BFS reachability from node 0 along forward and reversed edges
  const auto reaches_all = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<int> queue = {0};
    seen[0] = 1;
    while (!queue.empty()) {
      const int i = queue.back();
      queue.pop_back();
      for (int m = 0; m < n; ++m) {
        const double edge = forward ? g(m, i) : g(i, m);
        if (!seen[m] && edge > threshold) {
          seen[m] = 1;
          queue.push_back(m);
        }
      }
    }
    for (const char s : seen)
      if (!s) return false;
    return true;
  };
  return reaches_all(true) && reaches_all(false);
}

NessSolution solve_ness(const RateMatrix& rates) {
  const int n = static_cast<int>(rates.gamma.rows());
  if (!check_irreducible(rates))
    throw ReducibleError("solve_ness: rate graph not strongly connected");
  const MatXr gt = effective_generator(rates);
  MatXr m = gt;
  m.row(0).setOnes();
  VecXr rhs = VecXr::Zero(n);
  rhs(0) = 1.0;
  VecXr p = m.fullPivLu().solve(rhs);
  const double sum = p.sum();
  if (!(sum > 0.0)) throw SolveError("solve_ness: normalization failed");
  p /= sum;

  NessSolution sol;
  sol.p = p;
  sol.residual = (gt * p).cwiseAbs().maxCoeff();
  sol.irreducible = true;
  const double gnorm = rates.gamma.cwiseAbs().rowwise().sum().maxCoeff();
  if (!(sol.residual < 1e-10 * gnorm))
    throw SolveError("solve_ness: residual contract violated (near-boundary ill-conditioning?)");
  if (!(p.minCoeff() > 0.0))
    throw SolveError("solve_ness: nonpositive stationary component");
  return sol;
}

RateMatrix twospin_rates(const ModelParams& p, int lmax, double boundary_tol) {
  // enforces strict quasienergy ordering (throws DegenerateError otherwise)
  const FloquetDecomposition dec = make_decomposition(p);
  VecXr eps(4);
  for (int i = 0; i < 4; ++i) eps(i) = dec.eps[i];
  const FourierTable fourier = coupling_fourier_analytic(p);
  return transition_rates(eps, fourier, p.beta_bath, p.j0, lmax, boundary_tol);
}

RateMatrix rates_from_numeric(const NumericFloquet& floquet, const MatXc& observable,
                              double beta_bath, double j0, int lmax, double boundary_tol,
                              const SpectralDensity& density) {
  if (floquet.degenerate)
    throw DegenerateError(
        "rates_from_numeric: degenerate monodromy (eigenvectors basis-dependent)");
  // probe a few sidebands past the truncation so the defect report is meaningful
  const int probe = std::min(lmax + 4, static_cast<int>(floquet.grid.size()) / 2 - 1);
  const FourierTable fourier = fourier_components(floquet, observable, std::max(lmax, probe));
  return transition_rates(floquet.quasienergies, fourier, beta_bath, j0, lmax, boundary_tol,
                          density);
}

}  // namespace floq
