// test_phases.cpp — boundary functions, sign-vector classification, scans,
// boundary-point behavior of the stationary state, and the phase diagram
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "floq/dissipation.hpp"
#include "floq/floquet_analytic.hpp"
#include "floq/phases.hpp"

using namespace floq;

namespace {

std::vector<char> letter_runs(const std::vector<NessScanRow>& rows) {
  std::vector<char> runs;
  for (const NessScanRow& row : rows) {
    if (!row.ok || !row.label.is_phase()) continue;
    if (runs.empty() || runs.back() != row.label.letter) runs.push_back(row.label.letter);
  }
  return runs;
}

Vec4r ness_at(double lambda, double f, double beta) {
  return solve_ness(twospin_rates(ModelParams(lambda, f, 0.0, beta))).p;
}

}  // namespace

TEST_CASE("boundary functions vanish at their closed-form zeros") {
  REQUIRE(std::abs(boundary_values(0.6, 0.8)[0]) <= 1e-15);
  REQUIRE(std::abs(boundary_values(2.0 / 3.0, 0.5)[3]) <= 4e-16);
  REQUIRE(std::abs(boundary_values(11.0 / 8.0, 6.0 / 5.0)[1]) <= 4e-16);
  REQUIRE(std::abs(boundary_values(0.5, 6.0 / 5.0)[2]) <= 4e-16);
  std::mt19937 rng(5u);
  std::uniform_real_distribution<double> unit(0.05, 3.0);
  for (int k = 0; k < 50; ++k) {
    const double lambda = unit(rng), f = unit(rng);
    REQUIRE(std::abs(boundary_values(lambda, f)[4] - (f - 1.0)) <= 1e-15);
  }
}

TEST_CASE("boundary signs match the rational curve forms below the pole") {
  std::mt19937 rng(23u);
  std::uniform_real_distribution<double> unit(0.05, 3.0);
  int checked = 0;
  while (checked < 200) {
    const double lambda = unit(rng), f = unit(rng);
    const auto b = boundary_values(lambda, f);
    const bool away_from_pole = std::abs(lambda - 2.0) > 0.05;
    if (std::abs(b[1]) < 1e-12 || std::abs(b[2]) < 1e-12 || std::abs(b[3]) < 1e-12) continue;
    ++checked;
    // b1 decreases with f; b2 and b3 increase with f
    REQUIRE(std::signbit(b[2]) == std::signbit(f - 2.0 * (1.0 + lambda) / (2.0 + lambda)));
    if (lambda < 2.0 && away_from_pole) {
      REQUIRE(std::signbit(b[1]) == std::signbit(2.0 * (lambda - 1.0) / (2.0 - lambda) - f));
      REQUIRE(std::signbit(b[3]) == std::signbit(f - 2.0 * (1.0 - lambda) / (2.0 - lambda)));
    }
  }
}

TEST_CASE("classification anchors for all eight phases") {
  const std::vector<std::pair<std::pair<double, double>, char>> anchors = {
      {{0.5, 0.5}, 'A'},  {{0.78, 0.5}, 'B'}, {{1.0, 0.5}, 'C'}, {{1.33, 0.5}, 'D'},
      {{0.3, 1.2}, 'E'},  {{1.0, 1.2}, 'F'},  {{1.6, 1.2}, 'G'}, {{2.5, 2.5}, 'H'}};
  for (const auto& [point, letter] : anchors) {
    const PhaseLabel label = classify(point.first, point.second);
    REQUIRE(label.is_phase());
    REQUIRE(label.letter == letter);
    REQUIRE(label.str() == std::string(1, letter));
  }
}

TEST_CASE("points on boundaries are labelled by the vanishing functions") {
  const PhaseLabel on_circle = classify(0.6, 0.8);
  REQUIRE(on_circle.kind == PhaseLabel::Kind::Boundary);
  REQUIRE(on_circle.str() == "b0");

  const double s = std::sqrt(2.0);
  const PhaseLabel corner = classify(s, s, 1e-6);
  REQUIRE(corner.kind == PhaseLabel::Kind::Ambiguous);
  REQUIRE(corner.str() == "b1|b2");

  REQUIRE_THROWS_AS(classify(1.0, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("a coarse grid realizes exactly the eight letters") {
  std::set<char> letters;
  for (int i = 0; i < 50; ++i)
    for (int j = 0; j < 50; ++j) {
      const double lambda = 0.06 + (3.0 - 0.06) * i / 49.0;
      const double f = 0.06 + (3.0 - 0.06) * j / 49.0;
      const PhaseLabel label = classify(lambda, f);
      if (label.is_phase()) letters.insert(label.letter);
    }
  REQUIRE(letters == std::set<char>{'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H'});
}

TEST_CASE("inside the unit circle below the drive resonance only A and B occur") {
  std::mt19937 rng(31u);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  int checked = 0;
  while (checked < 100) {
    const double lambda = unit(rng), f = unit(rng);
    if (lambda * lambda + f * f > 0.9) continue;
    const PhaseLabel label = classify(lambda, f);
    if (!label.is_phase()) continue;
    ++checked;
    REQUIRE((label.letter == 'A' || label.letter == 'B'));
  }
}

TEST_CASE("bisection locates the boundary crossings on both scan lines") {
  REQUIRE(std::abs(find_boundary(0.5, Boundary::b3, {1e-3, 3.0}) - 2.0 / 3.0) < 1e-9);
  REQUIRE(std::abs(find_boundary(0.5, Boundary::b0, {1e-3, 3.0}) - std::sqrt(3.0) / 2.0) < 1e-9);
  REQUIRE(std::abs(find_boundary(0.5, Boundary::b1, {1e-3, 3.0}) - 1.2) < 1e-9);
  REQUIRE(std::abs(find_boundary(1.2, Boundary::b2, {1e-3, 3.0}) - 0.5) < 1e-9);
  REQUIRE(std::abs(find_boundary(1.2, Boundary::b1, {1e-3, 3.0}) - 1.375) < 1e-9);
  REQUIRE_THROWS_AS(find_boundary(0.5, Boundary::b2, {0.1, 3.0}), BracketError);
  REQUIRE_THROWS_AS(find_boundary(1.5, Boundary::b4, {0.1, 3.0}), BracketError);
  REQUIRE_THROWS_AS(find_boundary(0.5, Boundary::b0, {-1.0, 3.0}), std::invalid_argument);
}

TEST_CASE("scan across the lower line visits A, B, C, D in order") {
  const auto rows = ness_scan(0.5, {0.1, 1.6}, 300, 1.0, 4);
  REQUIRE(rows.size() == 300);
  REQUIRE(letter_runs(rows) == std::vector<char>{'A', 'B', 'C', 'D'});
  for (const NessScanRow& row : rows) {
    if (!row.ok) {
      REQUIRE_FALSE(row.error.empty());
      continue;
    }
    REQUIRE(row.p.minCoeff() > 0.0);
    REQUIRE(std::abs(row.p.sum() - 1.0) <= 1e-12);
    if (row.label.is_phase() && row.label.letter == 'A')
      REQUIRE((row.p - Vec4r::Constant(0.25)).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("scan across the upper line visits E, F, G in order") {
  const auto rows = ness_scan(1.2, {0.1, 1.8}, 300, 1.0, 4);
  REQUIRE(letter_runs(rows) == std::vector<char>{'E', 'F', 'G'});
}

TEST_CASE("a nearly infinite-temperature bath flattens the stationary state") {
  const auto rows = ness_scan(0.5, {0.2, 1.5}, 40, 1e-3, 4);
  for (const NessScanRow& row : rows) {
    if (!row.ok) continue;
    REQUIRE((row.p - Vec4r::Constant(0.25)).cwiseAbs().maxCoeff() < 0.01);
  }
}

TEST_CASE("boundary behavior on the circle: coincidence, kink, and continuity") {
  const BoundaryReport report = boundary_behavior(0.5, Boundary::b0, 1.0);
  REQUIRE(std::abs(report.lambda_star - std::sqrt(3.0) / 2.0) < 1e-9);
  REQUIRE(report.designated_pair == std::array<int, 2>{3, 1});
  REQUIRE(report.samples.size() == 3);
  for (size_t k = 0; k < report.samples.size(); ++k) {
    const BoundaryOffsetSample& s = report.samples[k];
    REQUIRE(s.ok_left);
    REQUIRE(s.ok_right);
    if (k > 0) {
      REQUIRE(s.pair_gap_left < report.samples[k - 1].pair_gap_left);
      REQUIRE(s.pair_gap_right < report.samples[k - 1].pair_gap_right);
      REQUIRE(s.continuity < report.samples[k - 1].continuity);
    }
  }
  REQUIRE_FALSE(report.left_is_uniform);
  REQUIRE_FALSE(report.right_is_uniform);
  REQUIRE(report.slope_gap > 0.1);  // the stationary state has a kink here
  for (size_t k = 1; k < report.slope_gaps.size(); ++k)
    REQUIRE(std::abs(report.slope_gaps[k] - report.slope_gaps[k - 1]) <
            0.1 * report.slope_gaps[k - 1]);
}

TEST_CASE("boundary behavior where one side is the uniform phase") {
  const BoundaryReport report = boundary_behavior(0.5, Boundary::b3, 1.0);
  REQUIRE(std::abs(report.lambda_star - 2.0 / 3.0) < 1e-9);
  REQUIRE(report.left_is_uniform);
  REQUIRE_FALSE(report.right_is_uniform);
}

TEST_CASE("exactly two populations coincide on the upper-line boundaries") {
  const BoundaryReport b2 = boundary_behavior(1.2, Boundary::b2, 1.0);
  REQUIRE(std::abs(b2.lambda_star - 0.5) < 1e-9);
  REQUIRE(b2.exactly_two);
  REQUIRE(b2.observed_pair == std::array<int, 2>{2, 3});

  const BoundaryReport b1 = boundary_behavior(1.2, Boundary::b1, 1.0);
  REQUIRE(std::abs(b1.lambda_star - 1.375) < 1e-9);
  REQUIRE(b1.exactly_two);
}

TEST_CASE("sided slopes report no kink for a smooth curve") {
  const auto smooth = [](double lambda) {
    Vec4r p;
    for (int n = 0; n < 4; ++n) p(n) = 0.25 + 0.1 * std::sin(lambda + n);
    return p;
  };
  const detail::SidedSlopes s = detail::sided_slopes(smooth, 1.0, {1e-2, 1e-3, 1e-4});
  // raw secant mismatch shrinks linearly with the span; the extrapolated
  // one-sided slopes agree to the quadratic remainder
  REQUIRE(s.slope_gaps[1] < 0.15 * s.slope_gaps[0]);
  REQUIRE(s.slope_gap < 2e-4);
  REQUIRE((s.slope_left - s.slope_right).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("no common quasitemperature fits the state near the boundaries") {
  const std::vector<std::pair<double, Boundary>> lines = {
      {0.5, Boundary::b0}, {0.5, Boundary::b1}, {1.2, Boundary::b2}, {1.2, Boundary::b1}};
  for (const auto& [f, which] : lines) {
    const double star = find_boundary(f, which, {1e-3, 3.0});
    for (const double side : {star - 1e-3, star + 1e-3}) {
      const PhaseLabel label = classify(side, f);
      if (!label.is_phase() || label.letter == 'A') continue;
      const Vec4r p = ness_at(side, f, 1.0);
      const auto eps = quasienergies(side, f);
      std::vector<double> x;
      for (int n = 0; n < 4; ++n)
        for (int m = n + 1; m < 4; ++m)
          x.push_back(std::log(p(n) / p(m)) / (eps[m] - eps[n]));
      const double lo = *std::min_element(x.begin(), x.end());
      const double hi = *std::max_element(x.begin(), x.end());
      double mean = 0.0;
      for (const double v : x) mean += v / x.size();
      REQUIRE((hi - lo) / (std::abs(mean) + 1e-300) > 1e-3);
    }
  }
}

TEST_CASE("phase diagram: grid labels, scan-line pattern, and overlay curves") {
  const PhaseDiagram diagram = phase_diagram({0.1, 1.6}, {0.1, 1.7}, 16, 17, 1e-9, 4);
  REQUIRE(diagram.lambdas.size() == 16);
  REQUIRE(diagram.fs.size() == 17);
  REQUIRE(diagram.labels.size() == 16 * 17);

  // (lambda, f) = (1.2, 0.5) sits exactly on one boundary
  const PhaseLabel on_b1 = diagram.labels[11 + 4 * 16];
  REQUIRE(on_b1.kind == PhaseLabel::Kind::Boundary);
  REQUIRE(on_b1.str() == "b1");

  std::vector<char> row_letters;
  for (int il = 0; il < 16; ++il) {
    const PhaseLabel& label = diagram.labels[il + 4 * 16];
    if (!label.is_phase()) continue;
    if (row_letters.empty() || row_letters.back() != label.letter)
      row_letters.push_back(label.letter);
  }
  REQUIRE(row_letters == std::vector<char>{'A', 'B', 'C', 'D'});

  for (int bi = 0; bi <= 3; ++bi) REQUIRE_FALSE(diagram.curves[bi].empty());
  for (const auto& [lambda, f] : diagram.curves[0])
    REQUIRE(std::abs(lambda * lambda + f * f - 1.0) <= 1e-9);
  REQUIRE_FALSE(diagram.curves[4].empty());
  for (const auto& [lambda, f] : diagram.curves[4]) REQUIRE(std::abs(f - 1.0) <= 1e-12);

  REQUIRE_THROWS_AS(phase_diagram({0.1, 1.0}, {0.1, 1.0}, 1, 5), std::invalid_argument);
}

TEST_CASE("a wide window still realizes exactly the eight letters") {
  const PhaseDiagram diagram = phase_diagram({0.015, 3.0}, {0.015, 3.0}, 60, 60, 1e-9, 4);
  std::set<char> letters;
  for (const PhaseLabel& label : diagram.labels)
    if (label.is_phase()) letters.insert(label.letter);
  REQUIRE(letters == std::set<char>{'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H'});
}
