// types.hpp — shared aliases, constants, and error types
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace floq {

using Complex = std::complex<double>;
using Mat4c = Eigen::Matrix4cd;
using Mat4r = Eigen::Matrix4d;
using Vec4c = Eigen::Vector4cd;
using Vec4r = Eigen::Vector4d;
using MatXc = Eigen::MatrixXcd;
using MatXr = Eigen::MatrixXd;
using VecXc = Eigen::VectorXcd;
using VecXr = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi_v<double>;
// drive period; the drive frequency is the unit of energy throughout
inline constexpr double kPeriod = 2.0 * kPi;

// adaptive integration gave up (step size underflow or step budget exhausted)
struct IntegrationError : std::runtime_error {
  double t_reached;
  IntegrationError(const std::string& msg, double t)
      : std::runtime_error(msg), t_reached(t) {}
};

// a transition frequency sits on a bath resonance where the occupation diverges;
// `from`/`to` are 1-based state labels and `ell` the sideband index when known
struct OnBoundaryError : std::runtime_error {
  double omega;
  int from = 0, to = 0, ell = 0;
  OnBoundaryError(const std::string& msg, double w, int f = 0, int t = 0, int l = 0)
      : std::runtime_error(msg), omega(w), from(f), to(t), ell(l) {}
};

// the rate graph is not strongly connected: no unique stationary state
struct ReducibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// the stationary-state solve violated its residual or positivity contract
struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a root bracket does not change sign
struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// quasienergies fail the strict-ordering / non-degeneracy precondition
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace floq
