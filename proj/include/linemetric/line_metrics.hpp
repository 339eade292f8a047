/**
 * @file line_metrics.hpp
 * @brief The embedding map M(x)_{kl} = |x_k - x_l|, cut semimetrics, and
 *        membership tests for line-embeddable and unit-separated metrics.
 *
 * E_n is the image of the hyperplane sum x = 0 under M; E_n^b restricts to
 * points whose coordinates are pairwise at least 1 apart. The separation
 * bound is fixed at 1; other bounds are a dilation.
 */

#ifndef LINEMETRIC_LINE_METRICS_HPP
#define LINEMETRIC_LINE_METRICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "linemetric/core.hpp"

namespace linemetric {

/// A metric with an optional witness x such that M(x) = m.
struct LineMetric {
  SymZMat m;
  std::optional<RatVec> witness;
  bool separated = false;
};

/// Witness and separation flag for m; the witness is absent when m is not in E_n.
LineMetric line_metric(const SymZMat& m);

SymZMat embed(const RatVec& x);
SymZMat embed(const Perm& pi);

/// M(chi^U). Throws std::invalid_argument for the empty or full word.
SymZMat cut_metric(const Word& u);

/**
 * Recovers x with sum x = 0 and M(x) = m, if m lies in E_n.
 *
 * x is unique up to sign; the returned sign makes x_{j0} < x_{j1} for the
 * lexicographically first pair (j0, j1) with distinct coordinates.
 */
std::optional<RatVec> recover_embedding(const SymZMat& m);

struct SeparatedPoint {
  Perm pi;   ///< canonical representative of {pi, pi^-}
  RatVec x;  ///< the point of R_n intersected with N_pi mapping to m
};

/// Membership in E_n^b with the (unique up to antipode) cone it lies in.
std::optional<SeparatedPoint> separated_membership(const SymZMat& m);

/// All pairwise coordinate gaps are at least 1.
bool in_separated_region(const RatVec& x);

/**
 * Self-test of R_n n N_pi = v^pi + N_pi at one point: evaluates both sides
 * independently and reports whether they agree. Throws unless sum x = 0.
 */
bool decomposition_cone_check(const RatVec& x, const Perm& pi);

struct SpreadingViolation {
  int i;               ///< anchor element, 1-based
  std::uint64_t set;   ///< S as a bitmask over [n], bit j-1 for element j
  Rat sum;             ///< sum_{j in S} m(i, j)
  Rat bound;           ///< the right-hand side that was violated
};

struct SpreadingReport {
  std::vector<SpreadingViolation> violations;       ///< floor((|S|+1)^2 / 4) form
  std::vector<SpreadingViolation> weak_violations;  ///< |S|(|S|+2)/4 form
  bool ok() const { return violations.empty() && weak_violations.empty(); }
};

/// Checks both spreading inequality forms for every i and non-empty S avoiding i.
SpreadingReport spreading_check(const SymZMat& m);

/// (all-ones . m) - 2 C(n+1, 3): zero on the permutation-metric face, non-negative on Q_n.
Rat qn_facet_value(const SymZMat& m);

}  // namespace linemetric

#endif  // LINEMETRIC_LINE_METRICS_HPP
