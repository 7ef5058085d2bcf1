#pragma once

#include <stdexcept>
#include <string>

namespace warpcone {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two objects living on different spaces were combined.
struct tag_mismatch_error : error {
  using error::error;
};

/// An exact routine was asked to run beyond its size limit.
struct size_limit_error : error {
  using error::error;
};

/// A Monte Carlo estimate had an empty denominator (ball with no samples).
struct undersampling_error : error {
  using error::error;
};

/// All cloud mass landed in a single cell of a multi-cell net.
struct degenerate_cloud_error : error {
  using error::error;
};

/// A statistic that requires positive cell masses met an empty cell.
struct empty_cell_error : error {
  using error::error;
};

/// Scale parameter produced a net too small to carry a graph.
struct scale_too_small_error : error {
  using error::error;
};

/// Two graphs expected to share a vertex set / net do not.
struct net_mismatch_error : error {
  using error::error;
};

/// A randomized construction ran out of retries.
struct retry_exhausted_error : error {
  using error::error;
};

/// Malformed serialized input; carries the 1-based offending line.
struct parse_error : error {
  int line;
  parse_error(const std::string& msg, int line_no)
      : error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

/// Iterative solver did not reach tolerance; carries the best estimate.
struct convergence_error : error {
  double best_estimate;
  int iterations;
  convergence_error(const std::string& msg, double best, int iters)
      : error(msg), best_estimate(best), iterations(iters) {}
};

/// Invalid experiment or CLI configuration.
struct config_error : error {
  using error::error;
};

}  // namespace warpcone
