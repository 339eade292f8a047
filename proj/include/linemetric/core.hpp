/**
 * @file core.hpp
 * @brief Permutations, binary words and symmetric zero-diagonal matrices.
 *
 * Elements of [n] = {1..n} are addressed 1-based in every public signature;
 * storage is 0-based. All types are immutable values once built.
 */

#ifndef LINEMETRIC_CORE_HPP
#define LINEMETRIC_CORE_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linemetric/rational.hpp"

namespace linemetric {

using RatVec = std::vector<Rat>;

/// A permutation of [n], stored as its image sequence (pi(1), ..., pi(n)).
class Perm {
public:
  /// Throws std::invalid_argument unless `images` is a bijection of [n].
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  /// Comma-separated images, e.g. "1,3,2".
  static Perm parse(std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  /// pi(j) for j in [n].
  int operator()(int j) const { return images_[static_cast<std::size_t>(j - 1)]; }
  std::span<const int> images() const { return images_; }

  Perm inverse() const;
  /// pi^- with pi^-(j) = n + 1 - pi(j).
  Perm antipode() const;
  bool is_identity() const;
  /// The lexicographically smaller of {pi, pi^-}.
  Perm canonical() const;

  std::string str() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

private:
  std::vector<int> images_;
};

/// (a o b)(j) = a(b(j)).
Perm compose(const Perm& a, const Perm& b);

/// Free-function form of Perm::antipode.
inline Perm antipode(const Perm& pi) { return pi.antipode(); }

/// All permutations of [n] in lexicographic order.
std::vector<Perm> all_perms(int n);

/// A subset U of [n] written as a binary word; bit j is set iff j is in U.
class Word {
public:
  static constexpr int kMaxLength = 63;

  Word(int n, std::uint64_t mask);
  /// A string over {0,1}; position j is element j.
  static Word parse(std::string_view text);
  /// The prefix set [k] = {1..k}.
  static Word prefix(int n, int k);

  int size() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int j) const { return ((mask_ >> (j - 1)) & 1U) != 0; }
  int count() const;
  bool proper() const { return mask_ != 0 && count() < n_; }

  Word complement() const;
  /// { pi(j) : j in U }.
  Word image(const Perm& pi) const;
  /// { j : pi(j) in U }, i.e. the image under pi^{-1}.
  Word preimage(const Perm& pi) const;
  /// Representative of {U, complement U} that contains element 1.
  Word canonical() const { return contains(1) ? *this : complement(); }

  /// The word read in order, e.g. "1001".
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.str() <=> b.str(); }

private:
  int n_;
  std::uint64_t mask_;
};

/// Proper non-empty subsets of [n], ordered by mask value.
std::vector<Word> proper_words(int n);

/// A maximal run [first, last] (1-based, inclusive).
struct Run {
  int first;
  int last;
  int length() const { return last - first + 1; }
  friend bool operator==(const Run&, const Run&) = default;
};

struct WordStructure {
  int slopes = 0;
  std::vector<Run> hills;    // maximal runs of 1s
  std::vector<Run> valleys;  // maximal runs of 0s
  bool alternating = false;
};

/// Throws std::invalid_argument for the empty or full word.
WordStructure word_structure(const Word& u);

/// Lengths of the maximal runs of equal symbols, left to right.
std::vector<int> run_lengths(const Word& u);

/// An element of S_0(n): symmetric n x n rationals with zero diagonal.
class SymZMat {
public:
  explicit SymZMat(int n);

  static SymZMat zero(int n) { return SymZMat(n); }
  /// Ones off the diagonal.
  static SymZMat all_ones(int n);
  /// Build from a full square array; throws unless it is symmetric with zero diagonal.
  static SymZMat from_rows(const std::vector<std::vector<Rat>>& rows);

  int size() const { return n_; }
  /// Entry (k,l), 1-based; the diagonal is zero.
  const Rat& at(int k, int l) const;
  /// Sets (k,l) and (l,k); throws on the diagonal.
  void set(int k, int l, Rat value);

  /// Strict upper triangle in row-major order: (1,2),(1,3),...,(n-1,n).
  std::span<const Rat> upper() const { return upper_; }

  SymZMat& operator+=(const SymZMat& o);
  SymZMat& operator-=(const SymZMat& o);
  SymZMat& operator*=(const Rat& s);
  friend SymZMat operator+(SymZMat a, const SymZMat& b) { return a += b; }
  friend SymZMat operator-(SymZMat a, const SymZMat& b) { return a -= b; }
  friend SymZMat operator*(const Rat& s, SymZMat a) { return a *= s; }

  friend bool operator==(const SymZMat&, const SymZMat&) = default;

private:
  std::size_t index(int k, int l) const;

  int n_;
  std::vector<Rat> upper_;
  static const Rat kZero;
};

/// A . B = tr(A^T B): the sum over all ordered pairs, twice the upper-triangle dot product.
Rat inner_product(const SymZMat& a, const SymZMat& b);

/// The matrix with entry (k,l) = m(sigma(k), sigma(l)); conjugate(M(x), sigma) = M(x o sigma).
SymZMat conjugate(const SymZMat& m, const Perm& sigma);

/// The pair list of the strict upper triangle, matching SymZMat::upper() order (1-based).
std::vector<std::pair<int, int>> upper_pairs(int n);

}  // namespace linemetric

#endif  // LINEMETRIC_CORE_HPP
