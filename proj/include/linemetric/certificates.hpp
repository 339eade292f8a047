/**
 * @file certificates.hpp
 * @brief Certificate library, lifting, the alternating induction, and
 *        end-to-end synthesis of a verified certificate for any edge pair.
 */

#ifndef LINEMETRIC_CERTIFICATES_HPP
#define LINEMETRIC_CERTIFICATES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linemetric/core.hpp"
#include "linemetric/edge_theory.hpp"

namespace linemetric {

/// Raised by synthesize() on a pair that does not define an edge.
class NotAnEdgeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the omega/epsilon search runs out of iterations.
class SynthesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct BaseCertificate {
  std::string name;     ///< "C_1001", ...
  Word word;            ///< target word at the identity
  SymZMat matrix;
  Condition condition;  ///< the condition the matrix is published under
  int size() const { return matrix.size(); }
};

/// C_1001, C_11011, C_10110, C_10010, C_10101, C_101010.
const std::vector<std::string>& base_certificate_names();

/// Throws std::invalid_argument for an unknown name.
BaseCertificate base_certificate(std::string_view name);

/// Stretch the symbol at `position` (1-based) into k+1 copies.
struct LiftPlan {
  int position = 1;
  int k = 1;
  Rat omega = 1;
  Rat epsilon = 1;
  bool swapped_signs = false;  ///< negate both +-1 blocks
};

/**
 * C' = B + epsilon * stretched(base): a heavy path of weight omega along the
 * new run, +-1 couplings from its ends to the rest, and the base matrix with
 * the stretched index split between the two ends of the run.
 *
 * Throws std::invalid_argument on a position outside [1, n], k < 0,
 * omega < 1 or epsilon <= 0. k = 0 returns the base unchanged.
 */
SymZMat lift(const SymZMat& base, const LiftPlan& plan);

/// The word with the symbol at `position` repeated k+1 times.
Word lifted_word(const Word& base, int position, int k);

/// +1 on (j, j+1), -1 on (1, n).
SymZMat path_matrix(int n);

/// The path matrix with entry (max W, max W + 1) raised by one for each W in
/// `incremented`; every W must be a prefix [j] with j < n.
SymZMat exposing_matrix(int n, const std::vector<Word>& incremented);

/// Strict certificate for (id, [k]) or its complement: every other prefix incremented.
SymZMat path_certificate(const Word& u);

/// Mixed-to-strict conversion at the identity. Throws std::invalid_argument
/// unless the matrix has a negative target value on u.
SymZMat to_plain(const SymZMat& c, const Word& u);

/// Strict-to-mixed conversion at the identity: subtract the largest multiple
/// of the all-ones matrix that keeps every other cut non-negative. Throws
/// std::invalid_argument unless the matrix passes the strict check.
SymZMat to_farkas(const SymZMat& d, const Word& u, const VerifyOptions& opts = {});

/// Embed m at rows and columns offset+1 .. offset+m.size() of an n x n zero matrix.
SymZMat pad(const SymZMat& m, int n, int offset);

/// Strict certificate for (id_n, 1010...), n >= 7, built by overlapping
/// strict 5- or 6-point bases two steps apart. Throws std::invalid_argument for n < 7.
SymZMat induct_alternating(int n);

struct SynthesisOptions {
  int max_iterations = 16;  ///< doublings of omega per lift
  VerifyOptions verify;
};

struct EdgeCertificate {
  HalfLinePair pair;
  SymZMat matrix;
  Condition condition = Condition::farkas;
  Rat omega = 1;    ///< of the last lift; 1 when no lift was needed
  Rat epsilon = 1;
  std::vector<std::string> construction;  ///< "base:C_1001", "lift:pos=1,k=1,...", "conjugate:sigma=..."
  VerificationReport margins;
};

/// Certificate for (id, u). Throws NotAnEdgeError, SynthesisError.
EdgeCertificate synthesize_at_identity(const Word& u, const SynthesisOptions& opts = {});

/// Certificate for any edge pair, verified at the pair before it is returned.
EdgeCertificate synthesize(const HalfLinePair& pair, const SynthesisOptions& opts = {});

/// Memoizes identity-frame certificates so sweeps only conjugate and verify.
class Synthesizer {
public:
  explicit Synthesizer(SynthesisOptions opts = {}) : opts_(std::move(opts)) {}

  const EdgeCertificate& at_identity(const Word& u);
  EdgeCertificate certify(const HalfLinePair& pair);

private:
  SynthesisOptions opts_;
  std::map<std::string, EdgeCertificate> cache_;
};

}  // namespace linemetric

#endif  // LINEMETRIC_CERTIFICATES_HPP
