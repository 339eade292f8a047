/**
 * @file permutahedron.hpp
 * @brief Vertices, facets, polar vertices and normal cones of the centered
 *        permutahedron in the hyperplane { x : sum x = 0 }.
 *
 * The vertex (pi(1), ..., pi(n)) is associated with pi itself, not with its
 * inverse. Facets are indexed by proper non-empty subsets U of [n].
 */

#ifndef LINEMETRIC_PERMUTAHEDRON_HPP
#define LINEMETRIC_PERMUTAHEDRON_HPP

#include <optional>

#include "linemetric/core.hpp"

namespace linemetric {

/// v = pi - (n+1)/2 * 1.
struct PermVertex {
  Perm pi;
  RatVec v;
};

/// The polar vertex (2/(n(n-k))) chi^{complement U} - (2/(kn)) chi^U, k = |U|.
struct PolarVertex {
  Word u;
  RatVec w;
};

PermVertex perm_vertex(const Perm& pi);

/// C(|U|+1, 2): right-hand side of sum_{j in U} x_j >= C(|U|+1,2) for the uncentered permutahedron.
Rat facet_rhs(const Word& u);

/// U = { pi^{-1}(1), ..., pi^{-1}(|U|) }.
bool incident(const Perm& pi, const Word& u);

/// The k in [n-1] with U = pi^{-1}([k-1] u {k+1}), if any.
std::optional<int> over_the_ridge(const Perm& pi, const Word& u);

/// x_k <= x_l whenever pi(k) < pi(l). Throws std::invalid_argument unless sum x = 0.
bool in_normal_cone(const RatVec& x, const Perm& pi);

PolarVertex polar_vertex(const Word& u);

/// Sum of entries is zero.
bool in_hyperplane(const RatVec& x);

}  // namespace linemetric

#endif  // LINEMETRIC_PERMUTAHEDRON_HPP
