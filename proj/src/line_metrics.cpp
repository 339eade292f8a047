#include "linemetric/line_metrics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "linemetric/permutahedron.hpp"

namespace linemetric {

SymZMat embed(const RatVec& x) {
  const int n = static_cast<int>(x.size());
  SymZMat m(n);
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      m.set(k, l, abs(x[static_cast<std::size_t>(k - 1)] - x[static_cast<std::size_t>(l - 1)]));
    }
  }
  return m;
}

SymZMat embed(const Perm& pi) {
  const int n = pi.size();
  SymZMat m(n);
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) m.set(k, l, Rat(std::abs(pi(k) - pi(l))));
  }
  return m;
}

SymZMat cut_metric(const Word& u) {
  if (!u.proper()) throw std::invalid_argument("cut_metric: word must be proper and non-empty");
  const int n = u.size();
  SymZMat m(n);
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      if (u.contains(k) != u.contains(l)) m.set(k, l, Rat(1));
    }
  }
  return m;
}

std::optional<RatVec> recover_embedding(const SymZMat& m) {
  const int n = m.size();
  RatVec x(static_cast<std::size_t>(n));
  // Anchor x_1 = 0; the first element at positive distance fixes the sign.
  int pivot = 0;
  for (int l = 2; l <= n; ++l) {
    if (m.at(1, l).sign() < 0) return std::nullopt;
    if (!m.at(1, l).is_zero()) {
      pivot = l;
      break;
    }
  }
  if (pivot != 0) {
    const Rat& b = m.at(1, pivot);
    x[static_cast<std::size_t>(pivot - 1)] = b;
    for (int l = 2; l <= n; ++l) {
      if (l == pivot) continue;
      const Rat& a = m.at(1, l);
      if (a.sign() < 0) return std::nullopt;
      // |a - b| and |a + b| differ whenever a, b are both non-zero.
      if (abs(a - b) == m.at(pivot, l)) {
        x[static_cast<std::size_t>(l - 1)] = a;
      } else if (abs(a + b) == m.at(pivot, l)) {
        x[static_cast<std::size_t>(l - 1)] = -a;
      } else {
        return std::nullopt;
      }
    }
  }
  Rat mean;
  for (const auto& e : x) mean += e;
  mean /= Rat(n);
  for (auto& e : x) e -= mean;
  if (embed(x) != m) return std::nullopt;
  return x;
}

LineMetric line_metric(const SymZMat& m) {
  LineMetric out{m, recover_embedding(m), false};
  out.separated = out.witness && in_separated_region(*out.witness);
  return out;
}

bool in_separated_region(const RatVec& x) {
  RatVec sorted = x;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 1; j < sorted.size(); ++j) {
    if (sorted[j] - sorted[j - 1] < Rat(1)) return false;
  }
  return true;
}

std::optional<SeparatedPoint> separated_membership(const SymZMat& m) {
  auto x = recover_embedding(m);
  if (!x || !in_separated_region(*x)) return std::nullopt;
  const int n = m.size();
  // pi(j) is the rank of x_j; the coordinates are distinct here.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return (*x)[static_cast<std::size_t>(a)] < (*x)[static_cast<std::size_t>(b)]; });
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) images[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r + 1;
  Perm pi(std::move(images));
  Perm canon = pi.canonical();
  if (canon != pi) {
    for (auto& e : *x) e = -e;
  }
  return SeparatedPoint{std::move(canon), std::move(*x)};
}

bool decomposition_cone_check(const RatVec& x, const Perm& pi) {
  if (!in_hyperplane(x)) throw std::invalid_argument("decomposition_cone_check: x does not lie in the hyperplane");
  const bool lhs = in_separated_region(x) && in_normal_cone(x, pi);
  const PermVertex vertex = perm_vertex(pi);
  RatVec shifted = x;
  for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] -= vertex.v[j];
  const bool rhs = in_normal_cone(shifted, pi);
  return lhs == rhs;
}

SpreadingReport spreading_check(const SymZMat& m) {
  const int n = m.size();
  SpreadingReport report;
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t others = ((std::uint64_t{1} << n) - 1) & ~(std::uint64_t{1} << (i - 1));
    // Enumerate non-empty subsets of `others`.
    for (std::uint64_t s = others; s != 0; s = (s - 1) & others) {
      Rat sum;
      for (int j = 1; j <= n; ++j) {
        if ((s >> (j - 1)) & 1U) sum += m.at(i, j);
      }
      const long size = std::popcount(s);
      const Rat strong((size + 1) * (size + 1) / 4);
      const Rat weak(mpz_class(size * (size + 2)), mpz_class(4));
      if (sum < strong) report.violations.push_back({i, s, sum, strong});
      if (sum < weak) report.weak_violations.push_back({i, s, sum, weak});
    }
  }
  auto by_key = [](const SpreadingViolation& a, const SpreadingViolation& b) {
    return a.i != b.i ? a.i < b.i : a.set < b.set;
  };
  std::sort(report.violations.begin(), report.violations.end(), by_key);
  std::sort(report.weak_violations.begin(), report.weak_violations.end(), by_key);
  return report;
}

Rat qn_facet_value(const SymZMat& m) {
  const int n = m.size();
  return inner_product(SymZMat::all_ones(n), m) - Rat(2 * static_cast<long>(binomial(n + 1, 3)));
}

}  // namespace linemetric
