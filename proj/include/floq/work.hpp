// work.hpp — two-point-measurement work statistics over one driving period
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "floq/model.hpp"
#include "floq/types.hpp"

namespace floq {

// Joint outcome probabilities of the projective measure-drive-measure protocol,
// indexed in the projector order of static_spectrum().
struct WorkDistribution {
  Mat4r joint;                     // p(i, j): first outcome i, second outcome j
  std::array<double, 4> energies;  // static spectrum in the same order
  double beta_init = 0.0;
};

WorkDistribution work_distribution(const ModelParams& p);

// conditional probabilities pi(j|i) = p(i,j)/p(i); symmetric, doubly
// stochastic, and independent of beta_init for this model
Mat4r conditional_matrix(const WorkDistribution& dist);

// closed-form conditional matrix in its own printed outcome convention (see
// outcome_permutation for the mapping to projector order)
Mat4r conditional_closed_form(double lambda, double f);
Mat4r conditional_closed_form(const ModelParams& p);

// closed-form marginals in the printed convention: (e^{2b}, e^{b(1+l)}, e^b, 1)/z
std::array<double, 4> marginals_closed_form(double lambda, double beta_init);

// Permutation aligning the two conventions: projector-order outcome i plays the
// role of printed-order outcome perm[i] (0-based). Determined numerically by
// matching conditionals and marginals over a parameter grid; the match must be
// unique by a wide margin or this throws.
std::array<int, 4> outcome_permutation();

double mean_work(const ModelParams& p);              // direct sum over outcomes
double mean_work_closed_form(const ModelParams& p);  // overflow-safe closed form

// returns the exponential work moment E[exp(-beta_init * w)]; equals 1 here
double jarzynski_moment(const WorkDistribution& dist);

// distinct work values (ascending) with aggregated probabilities; values
// closer than 1e-12 are merged
std::vector<std::pair<double, double>> work_support(const WorkDistribution& dist);

// transition probability from the singlet eigenstate to the down-polarized
// eigenstate under the drive; requires the pair nondegenerate (|lambda-1| >= 1e-9)
double excitation_probability(const ModelParams& p, double t);

}  // namespace floq
