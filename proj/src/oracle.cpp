#include "linemetric/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "linemetric/line_metrics.hpp"

namespace linemetric {

namespace {

enum class ColumnKind { slack, mu_plus, mu_minus, cut, permutation };

struct Column {
  ColumnKind kind;
  int ref;                 // index into the cut or permutation candidate list
  std::vector<long> entries;  // length rows
  bool priced_in = false;
};

// Revised simplex on
//   max sum(y)  s.t.  sum y_i a_i + (mu+ - mu-) e = 0,  sum(y) + s = 1,  all >= 0.
// The first rows start with implicit artificial variables at level zero; any
// pivot that touches such a row removes the artificial, so they never leave zero.
class DualLp {
public:
  explicit DualLp(int rows)
      : rows_(rows),
        binv_(static_cast<std::size_t>(rows), std::vector<mpq_class>(static_cast<std::size_t>(rows))),
        xb_(static_cast<std::size_t>(rows)),
        basis_(static_cast<std::size_t>(rows), -1) {
    for (int r = 0; r < rows; ++r) binv_[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 1;
    xb_.back() = 1;
  }

  int add(Column c) {
    cols_.push_back(std::move(c));
    in_basis_.push_back(false);
    if (cols_.back().kind == ColumnKind::slack) {
      basis_.back() = static_cast<int>(cols_.size()) - 1;
      in_basis_.back() = true;
    }
    return static_cast<int>(cols_.size()) - 1;
  }

  static bool has_cost(const Column& c) { return c.kind == ColumnKind::cut || c.kind == ColumnKind::permutation; }

  std::vector<mpq_class> duals() const {
    std::vector<mpq_class> pi(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
      const int b = basis_[static_cast<std::size_t>(i)];
      if (b < 0 || !has_cost(cols_[static_cast<std::size_t>(b)])) continue;
      for (int r = 0; r < rows_; ++r) pi[static_cast<std::size_t>(r)] += binv_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
    }
    return pi;
  }

  void optimize() {
    for (;;) {
      const std::vector<mpq_class> pi = duals();
      int entering = -1;
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (in_basis_[j]) continue;
        mpq_class rc = has_cost(cols_[j]) ? 1 : 0;
        for (int r = 0; r < rows_; ++r) {
          const long a = cols_[j].entries[static_cast<std::size_t>(r)];
          if (a != 0) rc -= pi[static_cast<std::size_t>(r)] * a;
        }
        if (sgn(rc) > 0) {
          entering = static_cast<int>(j);
          break;
        }
      }
      if (entering < 0) return;
      pivot_in(entering);
    }
  }

  mpq_class objective() const {
    mpq_class v = 0;
    for (int i = 0; i < rows_; ++i) {
      const int b = basis_[static_cast<std::size_t>(i)];
      if (b >= 0 && has_cost(cols_[static_cast<std::size_t>(b)])) v += xb_[static_cast<std::size_t>(i)];
    }
    return v;
  }

  /// Level of every column (zero when non-basic).
  std::vector<mpq_class> levels() const {
    std::vector<mpq_class> x(cols_.size());
    for (int i = 0; i < rows_; ++i) {
      const int b = basis_[static_cast<std::size_t>(i)];
      if (b >= 0) x[static_cast<std::size_t>(b)] = xb_[static_cast<std::size_t>(i)];
    }
    return x;
  }

  const std::vector<Column>& columns() const { return cols_; }
  int pivots() const { return pivots_; }

private:
  void pivot_in(int j) {
    const auto& a = cols_[static_cast<std::size_t>(j)].entries;
    std::vector<mpq_class> t(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
      mpq_class s = 0;
      for (int r = 0; r < rows_; ++r) {
        if (a[static_cast<std::size_t>(r)] != 0) s += binv_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] * a[static_cast<std::size_t>(r)];
      }
      t[static_cast<std::size_t>(i)] = s;
    }
    int leave = -1;
    for (int i = 0; i < rows_ && leave < 0; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < 0 && sgn(t[static_cast<std::size_t>(i)]) != 0) leave = i;
    }
    if (leave < 0) {
      mpq_class best;
      for (int i = 0; i < rows_; ++i) {
        if (sgn(t[static_cast<std::size_t>(i)]) <= 0) continue;
        mpq_class ratio = xb_[static_cast<std::size_t>(i)] / t[static_cast<std::size_t>(i)];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave < 0) throw std::logic_error("oracle: unbounded direction in a bounded program");

    const std::size_t lr = static_cast<std::size_t>(leave);
    const mpq_class p = t[lr];
    for (auto& v : binv_[lr]) v /= p;
    xb_[lr] /= p;
    for (int i = 0; i < rows_; ++i) {
      const std::size_t ui = static_cast<std::size_t>(i);
      if (ui == lr || sgn(t[ui]) == 0) continue;
      const mpq_class f = t[ui];
      for (int r = 0; r < rows_; ++r) binv_[ui][static_cast<std::size_t>(r)] -= f * binv_[lr][static_cast<std::size_t>(r)];
      xb_[ui] -= f * xb_[lr];
    }
    if (basis_[lr] >= 0) in_basis_[static_cast<std::size_t>(basis_[lr])] = false;
    basis_[lr] = j;
    in_basis_[static_cast<std::size_t>(j)] = true;
    ++pivots_;
  }

  int rows_;
  std::vector<std::vector<mpq_class>> binv_;
  std::vector<mpq_class> xb_;
  std::vector<int> basis_;
  std::vector<Column> cols_;
  std::vector<bool> in_basis_;
  int pivots_ = 0;
};

std::vector<long> upper_entries(const SymZMat& m) {
  std::vector<long> out;
  out.reserve(m.upper().size());
  for (const Rat& e : m.upper()) out.push_back(e.numerator().get_si());
  return out;
}

}  // namespace

SymZMat decomposition_sum(const std::vector<ConicTerm>& terms, const Perm& pi) {
  const int n = pi.size();
  const SymZMat base = embed(pi);
  SymZMat sum(n);
  for (const ConicTerm& t : terms) {
    if (t.kind == ConicTerm::Kind::permutation) {
      sum += t.coeff * (embed(*t.sigma) - base);
    } else {
      sum += t.coeff * cut_metric(*t.cut);
    }
  }
  return sum;
}

OracleVerdict oracle_classify(const HalfLinePair& pair, const OracleOptions& opts) {
  const int n = pair.size();
  if (n < 3) throw std::invalid_argument("oracle_classify: n must be at least 3");
  if (n > opts.max_n) {
    throw ExhaustionLimitError("oracle_classify: n = " + std::to_string(n) + " exceeds the oracle bound " +
                               std::to_string(opts.max_n));
  }
  const Perm& pi = pair.pi;
  const Perm anti = pi.antipode();
  const int dims = static_cast<int>(binomial(n, 2));
  const int rows = dims + 1;
  const std::vector<long> base = upper_entries(embed(pi));
  const std::vector<long> target = upper_entries(cut_metric(pair.u));

  std::vector<Perm> perms;
  std::vector<std::vector<long>> perm_rows;
  for (const Perm& s : all_perms(n)) {
    if (s(1) > s(n) || s == pi || s == anti) continue;
    std::vector<long> row = upper_entries(embed(s));
    for (int p = 0; p < dims; ++p) row[static_cast<std::size_t>(p)] -= base[static_cast<std::size_t>(p)];
    row.push_back(1);
    perms.push_back(s);
    perm_rows.push_back(std::move(row));
  }
  std::vector<Word> cuts;
  const std::uint64_t excluded = pair.u.canonical().mask();
  for (const Word& w : proper_words(n)) {
    if (w.contains(1) && w.mask() != excluded) cuts.push_back(w);
  }

  DualLp lp(rows);
  {
    std::vector<long> slack(static_cast<std::size_t>(rows), 0);
    slack.back() = 1;
    lp.add(Column{ColumnKind::slack, -1, slack});
    std::vector<long> plus = target;
    plus.push_back(0);
    std::vector<long> minus(plus.size());
    std::transform(plus.begin(), plus.end(), minus.begin(), [](long v) { return -v; });
    lp.add(Column{ColumnKind::mu_plus, -1, plus});
    lp.add(Column{ColumnKind::mu_minus, -1, minus});
  }
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    std::vector<long> row = upper_entries(cut_metric(cuts[c]));
    row.push_back(1);
    lp.add(Column{ColumnKind::cut, static_cast<int>(c), std::move(row)});
  }
  std::vector<bool> added(perms.size(), false);
  // Seed with the neighbours of pi along the edges of the permutahedron.
  for (int k = 1; k < n; ++k) {
    std::vector<int> img(pi.images().begin(), pi.images().end());
    for (int& v : img) v = v == k ? k + 1 : (v == k + 1 ? k : v);
    Perm s(std::move(img));
    if (s(1) > s(n)) s = s.antipode();
    const auto it = std::find(perms.begin(), perms.end(), s);
    if (it == perms.end()) continue;
    const std::size_t idx = static_cast<std::size_t>(it - perms.begin());
    if (added[idx]) continue;
    added[idx] = true;
    lp.add(Column{ColumnKind::permutation, static_cast<int>(idx), perm_rows[idx]});
  }

  OracleVerdict verdict{pair, false, std::nullopt, {}, false, 0, 0};
  for (;;) {
    lp.optimize();
    ++verdict.lp_rounds;
    // Price the permutation rows not yet in the program: violated when pi.a < 1.
    const std::vector<mpq_class> duals = lp.duals();
    mpz_class scale = 1;
    for (const auto& v : duals) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> scaled;
    scaled.reserve(duals.size());
    for (const auto& v : duals) scaled.push_back(v.get_num() * (scale / v.get_den()));
    std::vector<std::pair<mpz_class, std::size_t>> violated;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (added[i]) continue;
      mpz_class s = 0;
      for (int r = 0; r < rows; ++r) {
        const long a = perm_rows[i][static_cast<std::size_t>(r)];
        if (a != 0) s += scaled[static_cast<std::size_t>(r)] * a;
      }
      if (s < scale) violated.emplace_back(std::move(s), i);
    }
    if (violated.empty()) break;
    const std::size_t take = std::min(violated.size(), static_cast<std::size_t>(std::max(1, opts.columns_per_round)));
    std::partial_sort(violated.begin(), violated.begin() + static_cast<std::ptrdiff_t>(take), violated.end());
    for (std::size_t t = 0; t < take; ++t) {
      const std::size_t idx = violated[t].second;
      added[idx] = true;
      lp.add(Column{ColumnKind::permutation, static_cast<int>(idx), perm_rows[idx]});
    }
  }
  verdict.lp_pivots = lp.pivots();

  if (sgn(lp.objective()) == 0) {
    const std::vector<mpq_class> duals = lp.duals();
    SymZMat d(n);
    const auto pairs = upper_pairs(n);
    for (int p = 0; p < dims; ++p) {
      d.set(pairs[static_cast<std::size_t>(p)].first, pairs[static_cast<std::size_t>(p)].second,
            Rat(duals[static_cast<std::size_t>(p)]));
    }
    verdict.is_edge = true;
    VerifyOptions vo;
    vo.max_n = std::max(vo.max_n, n);
    verdict.verified = verify_certificate_plain(d, pair, vo).passed;
    verdict.separating = std::move(d);
    return verdict;
  }

  const std::vector<mpq_class> x = lp.levels();
  mpq_class mu = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Column& c = lp.columns()[j];
    if (c.kind == ColumnKind::mu_plus) mu += x[j];
    if (c.kind == ColumnKind::mu_minus) mu -= x[j];
  }
  verdict.is_edge = false;
  if (sgn(mu) < 0) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      const Column& c = lp.columns()[j];
      if (sgn(x[j]) == 0) continue;
      const Rat coeff(mpq_class(x[j] / -mu));
      if (c.kind == ColumnKind::permutation) {
        verdict.decomposition.push_back({ConicTerm::Kind::permutation, perms[static_cast<std::size_t>(c.ref)], std::nullopt, coeff});
      } else if (c.kind == ColumnKind::cut) {
        verdict.decomposition.push_back({ConicTerm::Kind::cut, std::nullopt, cuts[static_cast<std::size_t>(c.ref)], coeff});
      }
    }
    verdict.verified = !verdict.decomposition.empty() && decomposition_sum(verdict.decomposition, pi) == cut_metric(pair.u);
  }
  return verdict;
}

}  // namespace linemetric
