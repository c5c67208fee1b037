#pragma once

#include <span>
#include <utility>
#include <vector>

#include "levystore/path.hpp"

namespace levystore {

// Discrete Skorokhod recursion over timestamped netput increments:
//   W_{k+1} = max(W_k + dX_k, 0),  L_{k+1} = L_k + max(-(W_k + dX_k), 0).
// Returns (W, L) evaluated after each increment, starting from w0.
std::pair<std::vector<double>, std::vector<double>> reflect_increments(
    std::span<const double> increments, double w0);

// One linear-plus-jump element of a netput skeleton: drift at `rate` for
// `duration`, then an instantaneous jump (0 allowed).
struct NetputStep {
  double duration = 0.0;
  double rate = 0.0;
  double jump = 0.0;
};

// Exact reflection of a piecewise-linear-plus-jumps netput. Zero crossings
// inside a descending element are resolved at the analytic hitting time, so
// the result is exact rather than grid-limited. Appends pieces starting at
// absolute time t0 and returns the workload at the end; total regulator
// growth is accumulated into the pieces' reg_increment fields.
double reflect_netput(double w0, double t0, std::span<const NetputStep> steps,
                      bool down_regime, std::vector<PathPiece>& out);

}  // namespace levystore
