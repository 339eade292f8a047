#include "linemetric/permutahedron.hpp"

#include <stdexcept>

namespace linemetric {

namespace {

void require_proper(const Word& u, const char* who) {
  if (!u.proper()) throw std::invalid_argument(std::string(who) + ": word must be proper and non-empty");
}

}  // namespace

PermVertex perm_vertex(const Perm& pi) {
  const int n = pi.size();
  const Rat center(mpz_class(n + 1), mpz_class(2));
  RatVec v;
  v.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) v.push_back(Rat(pi(j)) - center);
  return PermVertex{pi, std::move(v)};
}

Rat facet_rhs(const Word& u) {
  require_proper(u, "facet_rhs");
  return Rat(static_cast<long>(binomial(u.count() + 1, 2)));
}

bool incident(const Perm& pi, const Word& u) {
  if (pi.size() != u.size()) throw std::invalid_argument("incident: dimension mismatch");
  if (!u.proper()) return false;
  return u.image(pi) == Word::prefix(u.size(), u.count());
}

std::optional<int> over_the_ridge(const Perm& pi, const Word& u) {
  if (pi.size() != u.size()) throw std::invalid_argument("over_the_ridge: dimension mismatch");
  if (!u.proper()) return std::nullopt;
  // |[k-1] u {k+1}| = k, so k is forced to be |U|.
  const int n = u.size();
  const int k = u.count();
  if (k > n - 1) return std::nullopt;
  const Word target(n, Word::prefix(n, k - 1).mask() | (std::uint64_t{1} << k));
  if (u.image(pi) == target) return k;
  return std::nullopt;
}

bool in_hyperplane(const RatVec& x) {
  Rat sum;
  for (const auto& e : x) sum += e;
  return sum.is_zero();
}

bool in_normal_cone(const RatVec& x, const Perm& pi) {
  if (static_cast<int>(x.size()) != pi.size()) throw std::invalid_argument("in_normal_cone: dimension mismatch");
  if (!in_hyperplane(x)) throw std::invalid_argument("in_normal_cone: x does not lie in the hyperplane sum x = 0");
  // Sorting by pi reduces the pairwise condition to consecutive ranks.
  const Perm inv = pi.inverse();
  for (int r = 1; r < pi.size(); ++r) {
    if (x[static_cast<std::size_t>(inv(r) - 1)] > x[static_cast<std::size_t>(inv(r + 1) - 1)]) return false;
  }
  return true;
}

PolarVertex polar_vertex(const Word& u) {
  require_proper(u, "polar_vertex");
  const int n = u.size();
  const int k = u.count();
  const Rat outside(mpz_class(2), mpz_class(n * (n - k)));
  const Rat inside(mpz_class(-2), mpz_class(k * n));
  RatVec w;
  w.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) w.push_back(u.contains(j) ? inside : outside);
  return PolarVertex{u, std::move(w)};
}

}  // namespace linemetric
