// Shared generators and brute-force references for the test suites.
#ifndef LINEMETRIC_TESTS_SUPPORT_HPP
#define LINEMETRIC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "linemetric/core.hpp"
#include "linemetric/line_metrics.hpp"

namespace support {

using namespace linemetric;

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(0x1D5EEDULL + salt); }

inline Rat random_rat(std::mt19937_64& g, long span = 20, long max_den = 6) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rat(mpz_class(num(g)), mpz_class(den(g)));
}

inline RatVec random_vec(std::mt19937_64& g, int n, long span = 20, long max_den = 6) {
  RatVec x;
  for (int j = 0; j < n; ++j) x.push_back(random_rat(g, span, max_den));
  return x;
}

inline RatVec centered(RatVec x) {
  Rat mean;
  for (const auto& v : x) mean += v;
  mean /= Rat(static_cast<long>(x.size()));
  for (auto& v : x) v -= mean;
  return x;
}

inline Perm random_perm(std::mt19937_64& g, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), g);
  return Perm(img);
}

inline Word random_proper_word(std::mt19937_64& g, int n) {
  std::uniform_int_distribution<std::uint64_t> d(1, (std::uint64_t{1} << n) - 2);
  return Word(n, d(g));
}

inline SymZMat random_matrix(std::mt19937_64& g, int n, long span = 9, long max_den = 4) {
  SymZMat m(n);
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) m.set(k, l, random_rat(g, span, max_den));
  }
  return m;
}

// tr(A^T B) over the full square arrays, written independently of inner_product.
inline Rat trace_product(const SymZMat& a, const SymZMat& b) {
  Rat s;
  for (int k = 1; k <= a.size(); ++k) {
    for (int l = 1; l <= a.size(); ++l) s += a.at(k, l) * b.at(k, l);
  }
  return s;
}

inline RatVec permuted(const RatVec& x, const Perm& sigma) {
  RatVec y;
  for (int j = 1; j <= sigma.size(); ++j) y.push_back(x[static_cast<std::size_t>(sigma(j) - 1)]);
  return y;
}

inline RatVec perm_point(const Perm& pi) {
  RatVec x;
  for (int j = 1; j <= pi.size(); ++j) x.push_back(Rat(pi(j)));
  return x;
}

struct BruteMargins {
  Rat perm_min;
  Rat cut_min;
  Rat target;
};

// Reference margins from full-matrix traces over every sigma (both antipodes) and every word.
inline BruteMargins brute_margins(const SymZMat& m, const Perm& pi, const Word& u) {
  const int n = m.size();
  const Rat base = trace_product(m, embed(perm_point(pi)));
  BruteMargins out;
  bool first = true;
  for (const Perm& s : all_perms(n)) {
    if (s == pi || s == pi.antipode()) continue;
    const Rat v = trace_product(m, embed(perm_point(s))) - base;
    if (first || v < out.perm_min) out.perm_min = v;
    first = false;
  }
  first = true;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    const Word w(n, mask);
    if (w == u || w == u.complement()) continue;
    const Rat v = trace_product(m, cut_metric(w));
    if (first || v < out.cut_min) out.cut_min = v;
    first = false;
  }
  out.target = trace_product(m, cut_metric(u));
  return out;
}

}  // namespace support

#endif  // LINEMETRIC_TESTS_SUPPORT_HPP
