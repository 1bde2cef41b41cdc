// phases.cpp — phase machinery for the stationary state
#include "floq/phases.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "floq/floquet_analytic.hpp"
#include "floq/parallel.hpp"

namespace floq {

std::array<double, 5> boundary_values(double lambda, double f) {
  if (!(lambda > 0.0) || !(f > 0.0))
    throw std::invalid_argument("boundary_values: requires lambda, f > 0");
  const auto e = quasienergies(lambda, f);
  return {e[2] - e[0] - 1.0,   // b0: pair (3,1)
          e[1] - e[0] - 1.0,   // b1: pair (2,1)
          e[2] - e[1] - 1.0,   // b2: pair (3,2)
          e[3] - e[0] - 1.0,   // b3: pair (4,1)
          e[3] - e[1] - 1.0};  // b4: pair (4,2), reduces to f - 1
}

std::string PhaseLabel::str() const {
  if (kind == Kind::Phase) return std::string(1, letter);
  std::string s;
  for (const Boundary b : near) {
    if (!s.empty()) s += '|';
    s += kBoundaryNames[static_cast<int>(b)];
  }
  return s;
}

namespace {

char letter_for_mask(unsigned mask) {
  // sign-vector classes anchored by the two scan lines: f = 1/2 crosses
  // A, B, C, D and f = 6/5 crosses E, F, G; H is the remaining class
  switch (mask) {
    case 0b00000: return 'A';
    case 0b01000: return 'B';
    case 0b01001: return 'C';
    case 0b01011: return 'D';
    case 0b11101: return 'E';
    case 0b11001: return 'F';
    case 0b11011: return 'G';
    case 0b11111: return 'H';
    default:
      throw std::logic_error("classify: sign vector outside the eight realizable classes");
  }
}

}  // namespace

PhaseLabel classify(double lambda, double f, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("classify: tol must be > 0");
  const auto b = boundary_values(lambda, f);
  PhaseLabel label;
  for (int i = 0; i < 5; ++i)
    if (std::abs(b[i]) < tol) label.near.push_back(static_cast<Boundary>(i));
  if (!label.near.empty()) {
    label.kind = label.near.size() == 1 ? PhaseLabel::Kind::Boundary : PhaseLabel::Kind::Ambiguous;
    return label;
  }
  unsigned mask = 0;
  for (int i = 0; i < 5; ++i)
    if (b[i] > 0.0) mask |= 1u << i;
  label.kind = PhaseLabel::Kind::Phase;
  label.letter = letter_for_mask(mask);
  return label;
}

double find_boundary(double f_fixed, Boundary which, std::pair<double, double> bracket,
                     double tol) {
  const int bi = static_cast<int>(which);
  const auto value = [&](double lambda) { return boundary_values(lambda, f_fixed)[bi]; };
  double lo = bracket.first, hi = bracket.second;
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("find_boundary: bad bracket");
  double blo = value(lo), bhi = value(hi);
  if (blo == 0.0) return lo;
  if (bhi == 0.0) return hi;
  if ((blo > 0.0) == (bhi > 0.0))
    throw BracketError(std::string("find_boundary: ") + kBoundaryNames[bi] +
                       " does not change sign over the bracket");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double bm = value(mid);
    if (std::abs(bm) < tol) return mid;
    if ((bm > 0.0) == (bhi > 0.0)) {
      hi = mid;
      bhi = bm;
    } else {
      lo = mid;
      blo = bm;
    }
    if (hi - lo < 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, hi))
      return 0.5 * (lo + hi);
  }
  return 0.5 * (lo + hi);
}

std::vector<NessScanRow> ness_scan(double f_fixed, std::pair<double, double> lambda_range,
                                   int steps, double beta_bath, int threads,
                                   double classify_tol) {
  if (steps < 2) throw std::invalid_argument("ness_scan: steps must be >= 2");
  const double lo = lambda_range.first, hi = lambda_range.second;
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("ness_scan: bad lambda range");

  return parallel_map<NessScanRow>(steps, threads, [&](int i) {
    NessScanRow row;
    row.lambda = lo + (hi - lo) * i / (steps - 1);
    try {
      row.label = classify(row.lambda, f_fixed, classify_tol);
      if (!row.label.is_phase()) {
        row.error = "on phase boundary " + row.label.str();
        return row;
      }
      const ModelParams p(row.lambda, f_fixed, 0.0, beta_bath, 1.0);
      const NessSolution sol = solve_ness(twospin_rates(p));
      row.p = sol.p;
      row.residual = sol.residual;
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    return row;
  });
}

namespace detail {

SidedSlopes sided_slopes(const std::function<Vec4r(double)>& p_of_lambda, double lambda_star,
                         const std::vector<double>& offsets) {
  if (offsets.size() < 2)
    throw std::invalid_argument("sided_slopes: need at least two offsets");
  for (size_t i = 0; i < offsets.size(); ++i)
    if (!(offsets[i] > 0.0) || (i > 0 && offsets[i] >= offsets[i - 1]))
      throw std::invalid_argument("sided_slopes: offsets must be positive and decreasing");

  const size_t m = offsets.size();
  std::vector<Vec4r> left(m), right(m);
  for (size_t i = 0; i < m; ++i) {
    left[i] = p_of_lambda(lambda_star - offsets[i]);
    right[i] = p_of_lambda(lambda_star + offsets[i]);
  }

  SidedSlopes out;
  std::vector<Vec4r> sec_left, sec_right;
  std::vector<double> spans;  // secant error scale delta_k + delta_{k+1}
  for (size_t k = 0; k + 1 < m; ++k) {
    const double dd = offsets[k] - offsets[k + 1];
    sec_right.push_back((right[k] - right[k + 1]) / dd);
    sec_left.push_back((left[k + 1] - left[k]) / dd);
    spans.push_back(offsets[k] + offsets[k + 1]);
    out.slope_gaps.push_back((sec_right.back() - sec_left.back()).cwiseAbs().maxCoeff());
  }
  out.slope_gap = out.slope_gaps.back();

  // Richardson extrapolation toward zero offset when two secants exist
  if (sec_right.size() >= 2) {
    const size_t last = sec_right.size() - 1;
    const double w = spans[last] / (spans[last - 1] - spans[last]);
    out.slope_right = sec_right[last] + (sec_right[last] - sec_right[last - 1]) * w;
    out.slope_left = sec_left[last] + (sec_left[last] - sec_left[last - 1]) * w;
  } else {
    out.slope_right = sec_right.back();
    out.slope_left = sec_left.back();
  }
  return out;
}

}  // namespace detail

BoundaryReport boundary_behavior(double f_fixed, Boundary which, double beta_bath,
                                 const std::vector<double>& offsets,
                                 std::pair<double, double> bracket) {
  BoundaryReport report;
  report.which = which;
  report.f_fixed = f_fixed;
  report.beta_bath = beta_bath;
  report.designated_pair = kBoundaryPairs[static_cast<int>(which)];

  // narrow the bracket by scanning for the first sign change, then bisect
  const int bi = static_cast<int>(which);
  const int scan_steps = 128;
  double lo = bracket.first, hi = bracket.second;
  double prev_lambda = lo;
  double prev_value = boundary_values(lo, f_fixed)[bi];
  bool found = prev_value == 0.0;
  if (found) report.lambda_star = lo;
  for (int i = 1; i <= scan_steps && !found; ++i) {
    const double lambda = lo + (hi - lo) * i / scan_steps;
    const double value = boundary_values(lambda, f_fixed)[bi];
    if (value == 0.0 || (value > 0.0) != (prev_value > 0.0)) {
      report.lambda_star = find_boundary(f_fixed, which, {prev_lambda, lambda});
      found = true;
      break;
    }
    prev_lambda = lambda;
    prev_value = value;
  }
  if (!found)
    throw BracketError(std::string("boundary_behavior: ") + kBoundaryNames[bi] +
                       " has no zero in the bracket at this f");

  const auto solve_at = [&](double lambda) -> Vec4r {
    const ModelParams p(lambda, f_fixed, 0.0, beta_bath, 1.0);
    return solve_ness(twospin_rates(p)).p;
  };

  for (const double delta : offsets) {
    BoundaryOffsetSample s;
    s.delta = delta;
    try {
      s.p_left = solve_at(report.lambda_star - delta);
      s.ok_left = true;
      s.p_right = solve_at(report.lambda_star + delta);
      s.ok_right = true;
    } catch (const std::exception& e) {
      s.error = e.what();
    }
    const auto [n1, m1] = report.designated_pair;
    if (s.ok_left) s.pair_gap_left = std::abs(s.p_left(n1 - 1) - s.p_left(m1 - 1));
    if (s.ok_right) s.pair_gap_right = std::abs(s.p_right(n1 - 1) - s.p_right(m1 - 1));
    if (s.ok_left && s.ok_right) s.continuity = (s.p_right - s.p_left).cwiseAbs().maxCoeff();
    report.samples.push_back(std::move(s));
  }

  // coincidence structure at the smallest fully solved offset
  for (auto it = report.samples.rbegin(); it != report.samples.rend(); ++it) {
    if (!(it->ok_left && it->ok_right)) continue;
    report.left_is_uniform = (it->p_left.array() - 0.25).abs().maxCoeff() < 1e-8;
    report.right_is_uniform = (it->p_right.array() - 0.25).abs().maxCoeff() < 1e-8;
    // side-averaged |p_n - p_m| table: a centered estimate of the gap
    // structure at the boundary point itself (cancels the O(delta) side
    // asymmetry; absolute values avoid cancellation when a pair crosses)
    Eigen::Matrix4d gaps = Eigen::Matrix4d::Zero();
    int sides = 0;
    for (const bool use_right : {false, true}) {
      if (use_right ? report.right_is_uniform : report.left_is_uniform) continue;
      const Vec4r& p = use_right ? it->p_right : it->p_left;
      for (int n = 0; n < 4; ++n)
        for (int m = 0; m < 4; ++m) gaps(n, m) += std::abs(p(n) - p(m));
      ++sides;
    }
    if (sides > 0) {
      gaps /= sides;
      std::array<int, 2> pair{};
      double gap = 1e300, next_gap = 1e300;
      for (int n = 0; n < 4; ++n)
        for (int m = n + 1; m < 4; ++m) {
          const double d = gaps(n, m);
          if (d < gap) {
            next_gap = gap;
            gap = d;
            pair = {n + 1, m + 1};
          } else if (d < next_gap) {
            next_gap = d;
          }
        }
      report.observed_pair = pair;
      report.exactly_two = 100.0 * gap <= next_gap;
    }
    break;
  }

  const bool all_solved = std::all_of(report.samples.begin(), report.samples.end(),
                                      [](const auto& s) { return s.ok_left && s.ok_right; });
  if (all_solved && offsets.size() >= 2) {
    const detail::SidedSlopes slopes =
        detail::sided_slopes(solve_at, report.lambda_star, offsets);
    report.slope_left = slopes.slope_left;
    report.slope_right = slopes.slope_right;
    report.slope_gaps = slopes.slope_gaps;
    report.slope_gap = slopes.slope_gap;
  }
  return report;
}

PhaseDiagram phase_diagram(std::pair<double, double> lambda_range,
                           std::pair<double, double> f_range, int n_lambda, int n_f, double tol,
                           int threads) {
  if (n_lambda < 2 || n_f < 2)
    throw std::invalid_argument("phase_diagram: need at least 2 points per axis");
  if (!(lambda_range.first > 0.0 && lambda_range.second > lambda_range.first) ||
      !(f_range.first > 0.0 && f_range.second > f_range.first))
    throw std::invalid_argument("phase_diagram: ranges must be positive and increasing");

  PhaseDiagram diagram;
  diagram.lambdas.resize(n_lambda);
  diagram.fs.resize(n_f);
  for (int i = 0; i < n_lambda; ++i)
    diagram.lambdas[i] =
        lambda_range.first + (lambda_range.second - lambda_range.first) * i / (n_lambda - 1);
  for (int j = 0; j < n_f; ++j)
    diagram.fs[j] = f_range.first + (f_range.second - f_range.first) * j / (n_f - 1);

  diagram.labels = parallel_map<PhaseLabel>(n_lambda * n_f, threads, [&](int idx) {
    const int il = idx % n_lambda;
    const int jf = idx / n_lambda;
    return classify(diagram.lambdas[il], diagram.fs[jf], tol);
  });

  // boundary overlays: bisect each boundary function in f along the lambda grid
  // (every boundary function is strictly monotone in f)
  const int curve_samples = std::max(n_lambda, 129);
  for (int bi = 0; bi < 5; ++bi) {
    auto& curve = diagram.curves[bi];
    for (int i = 0; i < curve_samples; ++i) {
      const double lambda = lambda_range.first +
                            (lambda_range.second - lambda_range.first) * i / (curve_samples - 1);
      double flo = f_range.first, fhi = f_range.second;
      double vlo = boundary_values(lambda, flo)[bi];
      double vhi = boundary_values(lambda, fhi)[bi];
      if (vlo == 0.0) {
        curve.emplace_back(lambda, flo);
        continue;
      }
      if (vhi == 0.0) {
        curve.emplace_back(lambda, fhi);
        continue;
      }
      if ((vlo > 0.0) == (vhi > 0.0)) continue;  // boundary outside the window here
      for (int it = 0; it < 100; ++it) {
        const double fm = 0.5 * (flo + fhi);
        const double vm = boundary_values(lambda, fm)[bi];
        if (vm == 0.0 || fhi - flo < 1e-13) {
          flo = fhi = fm;
          break;
        }
        if ((vm > 0.0) == (vhi > 0.0)) {
          fhi = fm;
          vhi = vm;
        } else {
          flo = fm;
          vlo = vm;
        }
      }
      curve.emplace_back(lambda, 0.5 * (flo + fhi));
    }
  }
  return diagram;
}

}  // namespace floq
