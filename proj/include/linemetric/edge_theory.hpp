/**
 * @file edge_theory.hpp
 * @brief Unbounded edges of cl(Q_n) = P_n + C_n.
 *
 * A pair (pi, U) names the half-line M(pi) + R_+ M(chi^U). It is an edge
 * exactly when neither U nor its complement is over the ridge from pi.
 * classify() decides this combinatorially; the verifiers below audit an
 * explicit certificate matrix by exhausting S(n) and all cuts, and
 * non_edge_witness() produces the exact conic identity for the other case.
 */

#ifndef LINEMETRIC_EDGE_THEORY_HPP
#define LINEMETRIC_EDGE_THEORY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linemetric/core.hpp"

namespace linemetric {

/// Raised when an exhaustive check would exceed the configured size bound.
class ExhaustionLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exhaustion bound on n; LINEMETRIC_MAX_N overrides the default of 9.
int exhaustion_limit();

struct HalfLinePair {
  Perm pi;
  Word u;

  HalfLinePair(Perm p, Word w);

  /// (pi, U), (pi, cU), (pi^-, U), (pi^-, cU) name one half-line; this picks the
  /// lexicographically smaller permutation and the word containing element 1.
  HalfLinePair canonical() const;
  int size() const { return pi.size(); }

  friend bool operator==(const HalfLinePair&, const HalfLinePair&) = default;
};

/// All canonical pairs for n, sorted by (pi, word).
std::vector<HalfLinePair> canonical_pairs(int n);

enum class Condition { plain, farkas };
const char* to_string(Condition c);

enum class BaseKind {
  path_matrix,  ///< one slope: the exposing path matrix
  table,        ///< two or three slopes: a library matrix plus lifts
  alternating,  ///< four or more slopes: alternating base plus lifts
};

/// Stretch one symbol of a run: the symbol at `position` becomes k+1 copies.
struct LiftStep {
  int position;   ///< 1-based index in the word before this step
  int k;          ///< number of inserted symbols
  bool zero_run;  ///< the stretched symbol is 0 (lift the complement)
};

/// How an edge word at the identity reduces to a certified base word.
struct ReductionPlan {
  Word word;       ///< transported to pi = id and normalized to start with 1
  int slopes = 0;
  BaseKind kind = BaseKind::path_matrix;
  std::string base_name;  ///< "path", "C_1001", ..., or "alternating(m)"
  Word base_word;
  std::string table_row;  ///< run pattern such as "1|0..0|1..1"; empty for other kinds
  std::vector<LiftStep> lifts;
};

/// The alternating word 1010... of length n.
Word alternating_word(int n);

/// Reduction plan for (id, word), or nullopt when the pair is not an edge.
std::optional<ReductionPlan> plan_reduction(const Word& at_identity);

enum class EdgeReason { incident, certified, over_ridge };

struct EdgeVerdict {
  HalfLinePair pair;  ///< canonical form of the classified pair
  bool is_edge = false;
  EdgeReason reason = EdgeReason::over_ridge;
  int ridge_k = 0;                  ///< over_ridge only
  bool ridge_from_antipode = false; ///< over_ridge only: U is over the ridge from pi^-
  std::optional<ReductionPlan> plan;  ///< edges only

  /// "incident", "certified: 2 slopes, base C_1001", "over the ridge from pi, k=3", ...
  std::string describe() const;
};

EdgeVerdict classify(const HalfLinePair& pair);

/// Canonical edge words at pi, ordered by (slopes at the identity frame, word).
std::vector<Word> enumerate_edges_at(const Perm& pi);

struct VerifyOptions {
  int max_n = exhaustion_limit();
};

/// Outcome of an exhaustive certificate audit. All margins are exact.
struct VerificationReport {
  Condition condition = Condition::farkas;
  bool passed = false;
  Rat perm_min;   ///< min over sigma not in {pi, pi^-} of D.M(sigma) - D.M(pi)
  Rat cut_min;    ///< min over U' not in {U, cU} of D.M(chi^U')
  Rat target;     ///< D.M(chi^U)
  std::optional<Perm> perm_argmin;
  std::optional<Word> cut_argmin;
  std::string failure;  ///< empty on success
};

/**
 * Strict system: D.M(sigma) > D.M(pi) for sigma not in {pi, pi^-},
 * D.M(chi^U') > 0 for U' not in {U, cU}, and D.M(chi^U) = 0.
 *
 * Works at any base permutation pi (no transport needed). Throws
 * ExhaustionLimitError above opts.max_n and std::invalid_argument on a
 * dimension mismatch or n < 3.
 */
VerificationReport verify_certificate_plain(const SymZMat& d, const HalfLinePair& pair, const VerifyOptions& opts = {});

/// Mixed system: the two families with >= and D.M(chi^U) < 0.
VerificationReport verify_certificate_farkas(const SymZMat& c, const HalfLinePair& pair, const VerifyOptions& opts = {});

VerificationReport verify_certificate(const SymZMat& m, const HalfLinePair& pair, Condition condition,
                                      const VerifyOptions& opts = {});

/// M(chi^U) = M(chi^W) + (M(pi') - M(base)) with W = base^{-1}([k]) incident to base.
struct NonEdgeWitness {
  HalfLinePair pair;
  Perm base;      ///< pi or pi^-: the vertex U is over the ridge from
  int k = 0;
  Perm neighbor;  ///< <k, k+1> o base
  Word incident_set;
  bool verified = false;  ///< the matrix identity holds exactly
};

/// Throws std::invalid_argument when the pair is an edge.
NonEdgeWitness non_edge_witness(const HalfLinePair& pair);

/// (pi o sigma, sigma^{-1}(U)); certificates move along with conjugate(., sigma).
HalfLinePair transport(const HalfLinePair& pair, const Perm& sigma);

struct Transport {
  Perm sigma;                ///< pi^{-1}
  HalfLinePair at_identity;  ///< (id, pi(U))
};

Transport symmetry_transport(const HalfLinePair& pair);

}  // namespace linemetric

#endif  // LINEMETRIC_EDGE_THEORY_HPP
