/**
 * @file oracle.hpp
 * @brief Construction-free edge test by exact linear programming.
 *
 * For a pair (pi, U) the oracle asks whether some D in S_0(n) satisfies
 *
 *     D.(M(sigma) - M(pi)) >= 1   for sigma not in {pi, pi^-}
 *     D.M(chi^W)           >= 1   for W not in {U, cU}
 *     D.M(chi^U)            = 0
 *
 * and answers with either such a D or a nonnegative combination of the
 * constraint rows that forces 0 >= 1. Both answers are re-checked exactly
 * before they are returned. Nothing here depends on the ridge criterion.
 */

#ifndef LINEMETRIC_ORACLE_HPP
#define LINEMETRIC_ORACLE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "linemetric/core.hpp"
#include "linemetric/edge_theory.hpp"

namespace linemetric {

struct OracleOptions {
  int max_n = 6;
  int columns_per_round = 12;  ///< permutation rows added per pricing round
};

/// One generator in a conic decomposition of M(chi^U).
struct ConicTerm {
  enum class Kind { permutation, cut } kind;
  std::optional<Perm> sigma;  ///< permutation: the term is coeff * (M(sigma) - M(pi))
  std::optional<Word> cut;    ///< cut: the term is coeff * M(chi^W)
  Rat coeff;
};

struct OracleVerdict {
  HalfLinePair pair;
  bool is_edge = false;
  std::optional<SymZMat> separating;     ///< edges: a matrix meeting the normalized system
  std::vector<ConicTerm> decomposition;  ///< non-edges: M(chi^U) = sum of the terms
  bool verified = false;                 ///< the witness passed its exact re-check
  int lp_rounds = 0;
  int lp_pivots = 0;
};

/// Throws ExhaustionLimitError above opts.max_n and std::invalid_argument for n < 3.
OracleVerdict oracle_classify(const HalfLinePair& pair, const OracleOptions& opts = {});

/// Sum of the terms of a decomposition for base permutation pi.
SymZMat decomposition_sum(const std::vector<ConicTerm>& terms, const Perm& pi);

}  // namespace linemetric

#endif  // LINEMETRIC_ORACLE_HPP
