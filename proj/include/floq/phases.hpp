// phases.hpp — phase boundaries, classification, scans, and boundary behavior
// of the stationary state
#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "floq/dissipation.hpp"
#include "floq/model.hpp"
#include "floq/types.hpp"

namespace floq {

// The five boundary functions. Each vanishes where one sideband frequency
// between a pair of Floquet states crosses zero; the sixth candidate pair
// difference never reaches the drive frequency in the studied parameter range.
enum class Boundary : int { b0 = 0, b1 = 1, b2 = 2, b3 = 3, b4 = 4 };
inline constexpr std::array<const char*, 5> kBoundaryNames = {"b0", "b1", "b2", "b3", "b4"};
// 1-based labels of the Floquet pair that degenerates on each boundary
inline constexpr std::array<std::array<int, 2>, 5> kBoundaryPairs = {
    {{3, 1}, {2, 1}, {3, 2}, {4, 1}, {4, 2}}};

// smooth quasienergy-difference forms (no poles anywhere in lambda, f > 0)
std::array<double, 5> boundary_values(double lambda, double f);

struct PhaseLabel {
  enum class Kind { Phase, Boundary, Ambiguous } kind = Kind::Phase;
  char letter = '?';           // A..H when kind == Phase
  std::vector<Boundary> near;  // the vanishing boundary functions otherwise
  bool is_phase() const { return kind == Kind::Phase; }
  std::string str() const;
};

// sign-vector classification; |b_i| < tol for one / several boundaries yields
// Boundary / Ambiguous
PhaseLabel classify(double lambda, double f, double tol = 1e-9);

// bisection in lambda for the zero of the named boundary function at fixed f
double find_boundary(double f_fixed, Boundary which, std::pair<double, double> bracket,
                     double tol = 1e-12);

struct NessScanRow {
  double lambda = 0.0;
  PhaseLabel label;
  Vec4r p = Vec4r::Zero();
  double residual = 0.0;
  bool ok = false;
  std::string error;
};

// stationary state along a lambda line at fixed f; boundary points and solver
// failures are recorded as gap rows, the scan continues
std::vector<NessScanRow> ness_scan(double f_fixed, std::pair<double, double> lambda_range,
                                   int steps, double beta_bath, int threads = 1,
                                   double classify_tol = 1e-9);

struct BoundaryOffsetSample {
  double delta = 0.0;
  bool ok_left = false, ok_right = false;
  std::string error;
  Vec4r p_left = Vec4r::Zero(), p_right = Vec4r::Zero();
  double pair_gap_left = 0.0, pair_gap_right = 0.0;  // designated-pair |p_n - p_m|
  double continuity = 0.0;                           // max_n |p_right_n - p_left_n|
};

struct BoundaryReport {
  Boundary which = Boundary::b0;
  double f_fixed = 0.0, beta_bath = 0.0;
  double lambda_star = 0.0;
  std::array<int, 2> designated_pair{};       // 1-based, from kBoundaryPairs
  std::vector<BoundaryOffsetSample> samples;  // one per offset, descending
  bool left_is_uniform = false;               // all four p equal (phase-A side)
  bool right_is_uniform = false;
  // closest pair of the side-averaged gap table at the smallest offset (1-based);
  // exactly_two certifies its gap is >= 100x smaller than the next-smallest one
  std::array<int, 2> observed_pair{};
  bool exactly_two = false;
  Vec4r slope_left = Vec4r::Zero();    // extrapolated one-sided dp/dlambda
  Vec4r slope_right = Vec4r::Zero();
  std::vector<double> slope_gaps;  // max-norm slope mismatch per secant pair
  double slope_gap = 0.0;          // from the two smallest offsets
};

// locate the boundary at fixed f, then probe the stationary state at
// lambda* +- delta for each offset: coincidence, continuity, and kink data
BoundaryReport boundary_behavior(double f_fixed, Boundary which, double beta_bath,
                                 const std::vector<double>& offsets = {1e-2, 1e-3, 1e-4},
                                 std::pair<double, double> bracket = {1e-3, 3.0});

struct PhaseDiagram {
  std::vector<double> lambdas, fs;
  // labels[il + jf * lambdas.size()]
  std::vector<PhaseLabel> labels;
  // per boundary: (lambda, f) polyline points inside the window
  std::array<std::vector<std::pair<double, double>>, 5> curves;
};

PhaseDiagram phase_diagram(std::pair<double, double> lambda_range,
                           std::pair<double, double> f_range, int n_lambda, int n_f,
                           double tol = 1e-9, int threads = 1);

namespace detail {

// One-sided secant slopes of any lambda -> p curve around lambda_star, with
// per-secant-pair left/right gaps and Richardson extrapolation toward zero
// offset. Shared by boundary_behavior and by smooth negative controls in tests.
struct SidedSlopes {
  Vec4r slope_left = Vec4r::Zero(), slope_right = Vec4r::Zero();
  std::vector<double> slope_gaps;
  double slope_gap = 0.0;
};
SidedSlopes sided_slopes(const std::function<Vec4r(double)>& p_of_lambda, double lambda_star,
                         const std::vector<double>& offsets);

}  // namespace detail

}  // namespace floq
