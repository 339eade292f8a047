#include "linemetric/edge_theory.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>

#include "linemetric/line_metrics.hpp"
#include "linemetric/permutahedron.hpp"

namespace linemetric {

int exhaustion_limit() {
  if (const char* env = std::getenv("LINEMETRIC_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= Word::kMaxLength) return static_cast<int>(v);
  }
  return 9;
}

// ---------------------------------------------------------------- pairs

HalfLinePair::HalfLinePair(Perm p, Word w) : pi(std::move(p)), u(w) {
  if (pi.size() != u.size()) throw std::invalid_argument("HalfLinePair: permutation and word lengths differ");
  if (!u.proper()) throw std::invalid_argument("HalfLinePair: word must be proper and non-empty");
}

HalfLinePair HalfLinePair::canonical() const { return HalfLinePair(pi.canonical(), u.canonical()); }

std::vector<HalfLinePair> canonical_pairs(int n) {
  std::vector<Word> words;
  for (const Word& w : proper_words(n)) {
    if (w.contains(1)) words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  std::vector<HalfLinePair> out;
  for (const Perm& pi : all_perms(n)) {
    if (pi.canonical() != pi) continue;
    for (const Word& w : words) out.emplace_back(pi, w);
  }
  return out;
}

const char* to_string(Condition c) { return c == Condition::plain ? "plain" : "farkas"; }

// ---------------------------------------------------------------- reduction taxonomy

namespace {

// Run patterns for two and three slopes, words starting with a hill.
// 'S' is a single symbol, 'L' a run of at least two. Empty base = not an edge.
const std::map<std::string, std::string>& slope_table() {
  static const std::map<std::string, std::string> table = {
      // two slopes: hill, valley, hill
      {"SSS", ""},
      {"SSL", ""},
      {"SLS", "1001"},
      {"SLL", "1001"},
      {"LSS", ""},
      {"LSL", "11011"},
      {"LLS", "1001"},
      {"LLL", "11011"},
      // three slopes: hill, valley, hill, valley
      {"SSSS", ""},
      {"SSSL", ""},
      {"SSLS", "10110"},
      {"SSLL", "10110"},
      {"SLSS", "10010"},
      {"SLSL", "10010"},
      {"SLLS", "10010"},
      {"SLLL", "10110"},
      {"LSSS", ""},
      {"LSSL", ""},
      {"LSLS", "10110"},
      {"LSLL", "10110"},
      {"LLSS", "10010"},
      {"LLSL", "10010"},
      {"LLLS", "10010"},
      {"LLLL", "10010"},
  };
  return table;
}

std::string row_label(const std::vector<int>& runs) {
  std::string label;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) label += '|';
    const char sym = i % 2 == 0 ? '1' : '0';
    label += sym;
    if (runs[i] > 1) {
      label += "..";
      label += sym;
    }
  }
  return label;
}

std::vector<LiftStep> lift_steps(const std::vector<int>& base_runs, const std::vector<int>& target_runs) {
  std::vector<LiftStep> steps;
  int offset = 1;
  for (std::size_t i = 0; i < base_runs.size(); ++i) {
    const int extra = target_runs[i] - base_runs[i];
    if (extra > 0) steps.push_back(LiftStep{offset, extra, i % 2 == 1});
    offset += target_runs[i];
  }
  return steps;
}

}  // namespace

Word alternating_word(int n) {
  std::uint64_t mask = 0;
  for (int j = 1; j <= n; j += 2) mask |= std::uint64_t{1} << (j - 1);
  return Word(n, mask);
}

std::optional<ReductionPlan> plan_reduction(const Word& at_identity) {
  if (!at_identity.proper()) throw std::invalid_argument("plan_reduction: word must be proper and non-empty");
  ReductionPlan plan{at_identity.canonical(), 0, BaseKind::path_matrix, "", at_identity.canonical(), "", {}};
  const std::vector<int> runs = run_lengths(plan.word);
  plan.slopes = static_cast<int>(runs.size()) - 1;

  if (plan.slopes == 1) {
    plan.kind = BaseKind::path_matrix;
    plan.base_name = "path";
    return plan;
  }
  if (plan.slopes <= 3) {
    std::string key;
    for (int r : runs) key += r > 1 ? 'L' : 'S';
    const std::string& base = slope_table().at(key);
    if (base.empty()) return std::nullopt;
    plan.kind = BaseKind::table;
    plan.base_name = "C_" + base;
    plan.base_word = Word::parse(base);
    plan.table_row = row_label(runs);
    plan.lifts = lift_steps(run_lengths(plan.base_word), runs);
    return plan;
  }
  const int m = plan.slopes + 1;
  plan.kind = BaseKind::alternating;
  plan.base_word = alternating_word(m);
  plan.base_name = m == 5 ? "C_10101" : (m == 6 ? "C_101010" : "alternating(" + std::to_string(m) + ")");
  plan.lifts = lift_steps(std::vector<int>(runs.size(), 1), runs);
  return plan;
}

// ---------------------------------------------------------------- classification

std::string EdgeVerdict::describe() const {
  std::ostringstream os;
  switch (reason) {
    case EdgeReason::incident:
      os << "incident";
      break;
    case EdgeReason::certified:
      os << "certified: " << plan->slopes << " slopes, base " << plan->base_name;
      if (!plan->lifts.empty()) os << ", " << plan->lifts.size() << (plan->lifts.size() == 1 ? " lift" : " lifts");
      break;
    case EdgeReason::over_ridge:
      os << "over the ridge from " << (ridge_from_antipode ? "pi^-" : "pi") << ", k=" << ridge_k;
      break;
  }
  return os.str();
}

EdgeVerdict classify(const HalfLinePair& pair) {
  EdgeVerdict verdict{pair.canonical(), false, EdgeReason::over_ridge, 0, false, std::nullopt};
  const Perm& pi = verdict.pair.pi;
  const Word& u = verdict.pair.u;
  if (auto k = over_the_ridge(pi, u)) {
    verdict.ridge_k = *k;
    return verdict;
  }
  if (over_the_ridge(pi, u.complement())) {
    // complement U over the ridge from pi <=> U over the ridge from pi^-
    verdict.ridge_k = over_the_ridge(pi.antipode(), u).value();
    verdict.ridge_from_antipode = true;
    return verdict;
  }
  verdict.is_edge = true;
  verdict.plan = plan_reduction(u.image(pi));
  if (!verdict.plan) throw std::logic_error("classify: reduction table disagrees with the ridge criterion");
  verdict.reason = verdict.plan->kind == BaseKind::path_matrix ? EdgeReason::incident : EdgeReason::certified;
  return verdict;
}

std::vector<Word> enumerate_edges_at(const Perm& pi) {
  if (pi.size() < 3) throw std::invalid_argument("enumerate_edges_at: n must be at least 3");
  std::vector<std::pair<int, Word>> keyed;
  for (const Word& w : proper_words(pi.size())) {
    if (!w.contains(1)) continue;
    if (!classify(HalfLinePair(pi, w)).is_edge) continue;
    keyed.emplace_back(word_structure(w.image(pi)).slopes, w);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first != b.first ? a.first < b.first : a.second < b.second; });
  std::vector<Word> out;
  out.reserve(keyed.size());
  for (auto& [slopes, w] : keyed) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------- verification

namespace {

struct RawMargins {
  Rat perm_min;
  Rat cut_min;
  Rat target;
  std::optional<Perm> perm_argmin;
  std::optional<Word> cut_argmin;
};

// Inner products against M(sigma) and M(chi^U) on a common-denominator copy
// of the matrix. Int is std::int64_t when the scaled entries are provably
// small enough, mpz_class otherwise.
template <class Int>
RawMargins exhaust(const std::vector<Int>& z, const mpz_class& scale, const HalfLinePair& pair) {
  const int n = pair.size();
  const auto pairs = upper_pairs(n);
  const std::size_t np = pairs.size();
  std::vector<int> first(np), second(np);
  for (std::size_t p = 0; p < np; ++p) {
    first[p] = pairs[p].first - 1;
    second[p] = pairs[p].second - 1;
  }
  auto perm_value = [&](const std::vector<int>& img) {
    Int s = 0;
    for (std::size_t p = 0; p < np; ++p) {
      const int d = img[static_cast<std::size_t>(first[p])] - img[static_cast<std::size_t>(second[p])];
      s += z[p] * static_cast<long>(d < 0 ? -d : d);
    }
    return s;
  };
  auto cut_value = [&](std::uint64_t mask) {
    Int s = 0;
    for (std::size_t p = 0; p < np; ++p) {
      if (((mask >> first[p]) & 1U) != ((mask >> second[p]) & 1U)) s += z[p];
    }
    return s;
  };

  const std::vector<int> base(pair.pi.images().begin(), pair.pi.images().end());
  const Perm anti = pair.pi.antipode();
  const std::vector<int> base_anti(anti.images().begin(), anti.images().end());
  const Int base_value = perm_value(base);

  std::optional<Int> perm_min;
  std::vector<int> perm_arg;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = j + 1;
  do {
    if (img.front() > img.back()) continue;  // one representative per antipodal pair
    if (img == base || img == base_anti) continue;
    Int v = perm_value(img);
    v -= base_value;
    if (!perm_min || v < *perm_min) {
      perm_min = v;
      perm_arg = img;
    }
  } while (std::next_permutation(img.begin(), img.end()));

  const std::uint64_t excluded = pair.u.canonical().mask();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::optional<Int> cut_min;
  std::uint64_t cut_arg = 0;
  for (std::uint64_t mask = 1; mask < full; mask += 2) {  // masks containing element 1
    if (mask == excluded) continue;
    Int v = cut_value(mask);
    if (!cut_min || v < *cut_min) {
      cut_min = v;
      cut_arg = mask;
    }
  }

  auto to_rat = [&](const Int& v) {
    if constexpr (std::is_same_v<Int, mpz_class>) {
      return Rat(mpz_class(2 * v), scale);
    } else {
      return Rat(mpz_class(2) * mpz_class(static_cast<long>(v)), scale);
    }
  };
  RawMargins out;
  out.perm_min = to_rat(*perm_min);
  out.perm_argmin = Perm(perm_arg);
  out.cut_min = to_rat(*cut_min);
  out.cut_argmin = Word(n, cut_arg);
  out.target = to_rat(cut_value(pair.u.mask()));
  return out;
}

RawMargins compute_margins(const SymZMat& m, const HalfLinePair& pair, const VerifyOptions& opts) {
  const int n = pair.size();
  if (m.size() != n) throw std::invalid_argument("verify_certificate: dimension mismatch between matrix and pair");
  if (n < 3) throw std::invalid_argument("verify_certificate: n must be at least 3");
  if (n > opts.max_n) {
    throw ExhaustionLimitError("verify_certificate: n = " + std::to_string(n) + " exceeds the exhaustion bound " +
                               std::to_string(opts.max_n) + " (raise LINEMETRIC_MAX_N to override)");
  }
  mpz_class scale = 1;
  for (const Rat& e : m.upper()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.denominator().get_mpz_t());
  std::vector<mpz_class> z;
  z.reserve(m.upper().size());
  mpz_class max_abs = 0;
  for (const Rat& e : m.upper()) {
    z.push_back(e.numerator() * (scale / e.denominator()));
    if (abs(z.back()) > max_abs) max_abs = abs(z.back());
  }
  // |sum| <= max|z| * n * #pairs, plus headroom for the subtraction of the base value.
  const mpz_class bound = max_abs * n * static_cast<long>(z.size()) * 4;
  if (bound < mpz_class(std::numeric_limits<std::int64_t>::max())) {
    std::vector<std::int64_t> small;
    small.reserve(z.size());
    for (const auto& v : z) small.push_back(v.get_si());
    return exhaust(small, scale, pair);
  }
  return exhaust(z, scale, pair);
}

}  // namespace

VerificationReport verify_certificate(const SymZMat& m, const HalfLinePair& pair, Condition condition,
                                      const VerifyOptions& opts) {
  RawMargins raw = compute_margins(m, pair, opts);
  VerificationReport r;
  r.condition = condition;
  r.perm_min = raw.perm_min;
  r.cut_min = raw.cut_min;
  r.target = raw.target;
  r.perm_argmin = raw.perm_argmin;
  r.cut_argmin = raw.cut_argmin;

  std::ostringstream why;
  const bool plain = condition == Condition::plain;
  const bool perm_ok = plain ? r.perm_min.sign() > 0 : r.perm_min.sign() >= 0;
  const bool cut_ok = plain ? r.cut_min.sign() > 0 : r.cut_min.sign() >= 0;
  const bool target_ok = plain ? r.target.is_zero() : r.target.sign() < 0;
  if (!perm_ok) {
    why << "permutation margin " << r.perm_min << " at sigma=" << r.perm_argmin->str() << (plain ? " is not > 0" : " is < 0");
  }
  if (!cut_ok) {
    if (why.tellp() > 0) why << "; ";
    why << "cut margin " << r.cut_min << " at U'=" << r.cut_argmin->str() << (plain ? " is not > 0" : " is < 0");
  }
  if (!target_ok) {
    if (why.tellp() > 0) why << "; ";
    why << "target value " << r.target << (plain ? " is not 0" : " is not < 0");
  }
  r.passed = perm_ok && cut_ok && target_ok;
  r.failure = why.str();
  return r;
}

VerificationReport verify_certificate_plain(const SymZMat& d, const HalfLinePair& pair, const VerifyOptions& opts) {
  return verify_certificate(d, pair, Condition::plain, opts);
}

VerificationReport verify_certificate_farkas(const SymZMat& c, const HalfLinePair& pair, const VerifyOptions& opts) {
  return verify_certificate(c, pair, Condition::farkas, opts);
}

// ---------------------------------------------------------------- non-edges and symmetry

NonEdgeWitness non_edge_witness(const HalfLinePair& pair) {
  const int n = pair.size();
  std::optional<Perm> base;
  std::optional<int> k = over_the_ridge(pair.pi, pair.u);
  if (k) {
    base = pair.pi;
  } else if ((k = over_the_ridge(pair.pi.antipode(), pair.u))) {
    base = pair.pi.antipode();
  } else {
    throw std::invalid_argument("non_edge_witness: (" + pair.pi.str() + ", " + pair.u.str() + ") defines an edge");
  }
  std::vector<int> swap(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) swap[static_cast<std::size_t>(j - 1)] = j;
  std::swap(swap[static_cast<std::size_t>(*k - 1)], swap[static_cast<std::size_t>(*k)]);
  Perm neighbor = compose(Perm(std::move(swap)), *base);
  Word incident_set = Word::prefix(n, *k).preimage(*base);

  NonEdgeWitness w{pair, *base, *k, neighbor, incident_set, false};
  w.verified = cut_metric(pair.u) == cut_metric(incident_set) + embed(neighbor) - embed(*base);
  return w;
}

HalfLinePair transport(const HalfLinePair& pair, const Perm& sigma) {
  return HalfLinePair(compose(pair.pi, sigma), pair.u.preimage(sigma));
}

Transport symmetry_transport(const HalfLinePair& pair) {
  Perm sigma = pair.pi.inverse();
  HalfLinePair moved = transport(pair, sigma);
  return Transport{std::move(sigma), std::move(moved)};
}

}  // namespace linemetric
