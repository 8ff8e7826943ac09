#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l12glasso/objective.hpp"

namespace l12 {

// The joint objective the alternation minimizes: eval_total with the Theta
// penalty restricted to the off-diagonal (the diagonal is unpenalized by the
// Theta solver, so this is the quantity both block updates provably descend).
// Equals eval_total - lambda2 * tr(Theta).
double fit_objective(const Dataset& data, const DenseMatrix& B,
                     const SpdMatrix& theta, const Hyperparams& hp);

// Which block update opens an outer iteration. B first is the default: with
// the zero B init, a leading Theta step would run an uncoupled glasso.
enum class FitOrder { b_first, theta_first };

// Alternating minimization: B-subproblem (PA-PG) then Theta-subproblem
// (asymmetric glasso BCD), repeated until the relative change of the joint
// objective drops below outer_tol or outer_max_iter is hit. The recorded
// trace holds fit_objective after each completed outer iteration; it is
// non-increasing because each block update descends that quantity exactly.
//
// tau = 0 runs the pure inverse-covariance-fused configuration; there is no
// separate code path for it.
ModelEstimate fit(const Dataset& data, const Hyperparams& hp,
                  const std::optional<ModelEstimate>& init = std::nullopt,
                  FitOrder order = FitOrder::b_first);

struct FitPathEntry {
  ModelEstimate estimate;
  bool ok = false;
  std::string error;
};

// Warm-started fits along a grid sorted by non-increasing lambda1; element
// failures are collected without aborting the path.
std::vector<FitPathEntry> fit_path(const Dataset& data,
                                   const std::vector<Hyperparams>& grid);

}  // namespace l12
