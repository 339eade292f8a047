#include "linemetric/certificates.hpp"

#include <sstream>

#include "linemetric/line_metrics.hpp"

namespace linemetric {

namespace {

SymZMat from_ints(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rat>> r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return SymZMat::from_rows(r);
}

struct LibraryEntry {
  const char* name;
  const char* word;
  Condition condition;
  std::vector<std::vector<int>> rows;
};

const std::vector<LibraryEntry>& library() {
  static const std::vector<LibraryEntry> entries = {
      {"C_1001", "1001", Condition::farkas, {{0, 1, -2, 1}, {1, 0, 3, -2}, {-2, 3, 0, 1}, {1, -2, 1, 0}}},
      {"C_11011",
       "11011",
       Condition::farkas,
       {{0, 8, -6, -1, -1}, {8, 0, 2, 9, -3}, {-6, 2, 0, 5, -7}, {-1, 9, 5, 0, 11}, {-1, -3, -7, 11, 0}}},
      // Row 3 is the mirror of column 3; only that reading is symmetric.
      {"C_10110",
       "10110",
       Condition::farkas,
       {{0, 2, 2, 1, -3}, {2, 0, 0, -2, 2}, {2, 0, 0, 2, 0}, {1, -2, 2, 0, 1}, {-3, 2, 0, 1, 0}}},
      {"C_10010",
       "10010",
       Condition::farkas,
       {{0, 2, -2, 2, -2}, {2, 0, 4, -3, 1}, {-2, 4, 0, 1, 1}, {2, -3, 1, 0, 1}, {-2, 1, 1, 1, 0}}},
      {"C_10101",
       "10101",
       Condition::plain,
       {{0, 0, 3, -2, -1}, {0, 0, 1, 1, -2}, {3, 1, 0, 1, 3}, {-2, 1, 1, 0, 0}, {-1, -2, 3, 0, 0}}},
      {"C_101010",
       "101010",
       Condition::plain,
       {{0, 0, 1, -1, 0, 0},
        {0, 0, 1, 1, -2, 0},
        {1, 1, 0, 1, 3, -2},
        {-1, 1, 1, 0, 0, 1},
        {0, -2, 3, 0, 0, 1},
        {0, 0, -2, 1, 1, 0}}},
  };
  return entries;
}

Rat power_of_two(int e) {
  mpz_class p = 1;
  p <<= static_cast<unsigned long>(e < 0 ? -e : e);
  return e >= 0 ? Rat(p) : Rat(mpz_class(1), p);
}

std::string lift_label(const LiftPlan& plan) {
  std::ostringstream os;
  os << "lift:pos=" << plan.position << ",k=" << plan.k << ",omega=" << plan.omega << ",epsilon=" << plan.epsilon
     << ",signs=" << (plan.swapped_signs ? "swapped" : "printed");
  return os.str();
}

}  // namespace

const std::vector<std::string>& base_certificate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : library()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

BaseCertificate base_certificate(std::string_view name) {
  for (const auto& e : library()) {
    if (name == e.name) return BaseCertificate{e.name, Word::parse(e.word), from_ints(e.rows), e.condition};
  }
  throw std::invalid_argument("base_certificate: unknown certificate '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- lifting

Word lifted_word(const Word& base, int position, int k) {
  if (position < 1 || position > base.size()) throw std::invalid_argument("lifted_word: position outside the word");
  if (k < 0) throw std::invalid_argument("lifted_word: k must be non-negative");
  std::string s = base.str();
  s.insert(static_cast<std::size_t>(position - 1), static_cast<std::size_t>(k), s[static_cast<std::size_t>(position - 1)]);
  return Word::parse(s);
}

SymZMat lift(const SymZMat& base, const LiftPlan& plan) {
  const int n = base.size();
  if (plan.position < 1 || plan.position > n) throw std::invalid_argument("lift: position outside the word");
  if (plan.k < 0) throw std::invalid_argument("lift: k must be non-negative");
  if (plan.omega < Rat(1)) throw std::invalid_argument("lift: omega must be at least 1");
  if (plan.epsilon.sign() <= 0) throw std::invalid_argument("lift: epsilon must be positive");
  if (plan.k == 0) return base;
  if (n + plan.k > Word::kMaxLength) throw std::invalid_argument("lift: lifted size too large");

  const int total = n + plan.k;
  const int head = plan.position;              // first index of the stretched run
  const int tail = plan.position + plan.k;     // last index of the stretched run
  const Rat sign = plan.swapped_signs ? Rat(-1) : Rat(1);

  SymZMat out(total);
  for (int j = head; j < tail; ++j) out.set(j, j + 1, plan.omega);
  for (int a = 1; a < head; ++a) {
    out.set(head, a, sign);
    out.set(tail, a, -sign);
  }
  for (int b = tail + 1; b <= total; ++b) {
    out.set(head, b, -sign);
    out.set(tail, b, sign);
  }

  auto moved = [&](int i) { return i < plan.position ? i : i + plan.k; };
  SymZMat stretched(total);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Rat& v = base.at(i, j);
      if (i == plan.position) {
        stretched.set(tail, moved(j), v);
      } else if (j == plan.position) {
        stretched.set(i, head, v);
      } else {
        stretched.set(moved(i), moved(j), v);
      }
    }
  }
  out += plan.epsilon * stretched;
  return out;
}

// ---------------------------------------------------------------- path matrices

SymZMat path_matrix(int n) {
  if (n < 3) throw std::invalid_argument("path_matrix: n must be at least 3");
  SymZMat p(n);
  for (int j = 1; j < n; ++j) p.set(j, j + 1, Rat(1));
  p.set(1, n, Rat(-1));
  return p;
}

SymZMat exposing_matrix(int n, const std::vector<Word>& incremented) {
  SymZMat p = path_matrix(n);
  for (const Word& w : incremented) {
    if (w.size() != n) throw std::invalid_argument("exposing_matrix: dimension mismatch");
    const Word c = w.canonical();
    if (!c.proper() || c != Word::prefix(n, c.count())) {
      throw std::invalid_argument("exposing_matrix: " + w.str() + " is not incident to the identity");
    }
    const int j = c.count();
    p.set(j, j + 1, p.at(j, j + 1) + Rat(1));
  }
  return p;
}

SymZMat path_certificate(const Word& u) {
  const int n = u.size();
  const Word c = u.canonical();
  if (!c.proper() || c != Word::prefix(n, c.count())) {
    throw std::invalid_argument("path_certificate: " + u.str() + " is not incident to the identity");
  }
  std::vector<Word> others;
  for (int j = 1; j < n; ++j) {
    if (j != c.count()) others.push_back(Word::prefix(n, j));
  }
  return exposing_matrix(n, others);
}

// ---------------------------------------------------------------- conversions

SymZMat to_plain(const SymZMat& c, const Word& u) {
  const int n = c.size();
  if (u.size() != n) throw std::invalid_argument("to_plain: dimension mismatch");
  const SymZMat cut = cut_metric(u);
  const Rat target = inner_product(c, cut);
  if (target.sign() >= 0) throw std::invalid_argument("to_plain: target value must be negative");
  const SymZMat ones = SymZMat::all_ones(n);
  const SymZMat path = path_matrix(n);
  const Rat on_ones = inner_product(ones, cut);
  const Rat on_path = inner_product(path, cut);
  // all-ones is constant on permutations; the path matrix separates id, id^- from the rest.
  Rat t;
  Rat s;
  if (on_path.is_zero()) {
    t = -target / on_ones;
    s = 1;
  } else {
    t = -target / (Rat(2) * on_ones);
    s = -target / (Rat(2) * on_path);
  }
  return c + t * ones + s * path;
}

SymZMat to_farkas(const SymZMat& d, const Word& u, const VerifyOptions& opts) {
  const int n = d.size();
  const VerificationReport r = verify_certificate_plain(d, HalfLinePair(Perm::identity(n), u), opts);
  if (!r.passed) throw std::invalid_argument("to_farkas: matrix is not a strict certificate: " + r.failure);
  const std::uint64_t excluded = u.canonical().mask();
  std::optional<Rat> delta;
  for (const Word& w : proper_words(n)) {
    if (!w.contains(1) || w.mask() == excluded) continue;
    const Rat ratio = inner_product(d, cut_metric(w)) / Rat(2L * w.count() * (n - w.count()));
    if (!delta || ratio < *delta) delta = ratio;
  }
  return d - *delta * SymZMat::all_ones(n);
}

SymZMat pad(const SymZMat& m, int n, int offset) {
  if (offset < 0 || offset + m.size() > n) throw std::invalid_argument("pad: block does not fit");
  SymZMat out(n);
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = i + 1; j <= m.size(); ++j) out.set(i + offset, j + offset, m.at(i, j));
  }
  return out;
}

SymZMat induct_alternating(int n) {
  if (n < 7) throw std::invalid_argument("induct_alternating: n must be at least 7; smaller alternating words use library bases");
  if (n > Word::kMaxLength) throw std::invalid_argument("induct_alternating: n too large");
  const BaseCertificate start = base_certificate(n % 2 == 1 ? "C_10101" : "C_101010");
  const SymZMat block = to_plain(start.matrix, start.word);
  SymZMat d = block;
  for (int m = block.size() + 2; m <= n; m += 2) d = pad(d, m, 0) + pad(block, m, m - block.size());
  return d;
}

// ---------------------------------------------------------------- synthesis

EdgeCertificate synthesize_at_identity(const Word& u, const SynthesisOptions& opts) {
  const int n = u.size();
  const Perm id = Perm::identity(n);
  if (n < 3) throw std::invalid_argument("synthesize: n must be at least 3");
  const std::optional<ReductionPlan> plan = plan_reduction(u);
  if (!plan) throw NotAnEdgeError("synthesize: (id, " + u.str() + ") does not define an edge");

  EdgeCertificate cert{HalfLinePair(id, plan->word), SymZMat(n), Condition::farkas, 1, 1, {}, {}};
  if (plan->kind == BaseKind::path_matrix) {
    cert.matrix = path_certificate(plan->word);
    cert.condition = Condition::plain;
    cert.construction.push_back("base:path");
    cert.margins = verify_certificate_plain(cert.matrix, cert.pair, opts.verify);
  } else {
    SymZMat current(n);
    Condition condition = Condition::farkas;
    const int base_size = plan->base_word.size();
    if (base_size >= 7) {
      current = induct_alternating(base_size);
      condition = Condition::plain;
      cert.construction.push_back("base:" + plan->base_name);
      cert.construction.push_back("induct:n=" + std::to_string(base_size));
    } else {
      current = base_certificate(plan->base_name).matrix;
      cert.construction.push_back("base:" + plan->base_name);
    }
    if (!plan->lifts.empty() && condition == Condition::plain) {
      current = to_farkas(current, plan->base_word, opts.verify);
      condition = Condition::farkas;
      cert.construction.push_back("relax:farkas");
    }
    Word word = plan->base_word;
    VerificationReport last = verify_certificate(current, HalfLinePair(Perm::identity(base_size), word), condition, opts.verify);
    for (const LiftStep& step : plan->lifts) {
      const Word target = lifted_word(word, step.position, step.k);
      const HalfLinePair at(Perm::identity(target.size()), target);
      bool done = false;
      for (int it = 0; it <= opts.max_iterations && !done; ++it) {
        for (bool swapped : {false, true}) {
          LiftPlan lp{step.position, step.k, power_of_two(it), power_of_two(-it), swapped};
          SymZMat candidate = lift(current, lp);
          VerificationReport r = verify_certificate_farkas(candidate, at, opts.verify);
          if (r.passed) {
            current = std::move(candidate);
            last = std::move(r);
            cert.omega = lp.omega;
            cert.epsilon = lp.epsilon;
            cert.construction.push_back(lift_label(lp));
            done = true;
            break;
          }
          last = std::move(r);
        }
      }
      if (!done) {
        throw SynthesisError("synthesize: no omega up to 2^" + std::to_string(opts.max_iterations) + " lifts " +
                             word.str() + " to " + target.str() + " (last failure: " + last.failure + ")");
      }
      word = target;
    }
    cert.matrix = std::move(current);
    cert.condition = condition;
    cert.margins = std::move(last);
  }
  if (!cert.margins.passed) {
    throw SynthesisError("synthesize: base certificate " + plan->base_name + " failed: " + cert.margins.failure);
  }
  return cert;
}

namespace {

EdgeCertificate move_to(const EdgeCertificate& at_identity, const HalfLinePair& pair, const VerifyOptions& opts) {
  EdgeCertificate cert = at_identity;
  cert.pair = pair;
  if (!pair.pi.is_identity()) {
    cert.matrix = conjugate(at_identity.matrix, pair.pi);
    cert.construction.push_back("conjugate:sigma=" + pair.pi.str());
  }
  cert.margins = verify_certificate(cert.matrix, pair, cert.condition, opts);
  if (!cert.margins.passed) {
    throw SynthesisError("synthesize: transported certificate failed at (" + pair.pi.str() + ", " + pair.u.str() +
                         "): " + cert.margins.failure);
  }
  return cert;
}

Word identity_word(const HalfLinePair& pair) {
  if (!classify(pair).is_edge) {
    throw NotAnEdgeError("synthesize: (" + pair.pi.str() + ", " + pair.u.str() + ") does not define an edge");
  }
  return symmetry_transport(pair).at_identity.u.canonical();
}

}  // namespace

EdgeCertificate synthesize(const HalfLinePair& pair, const SynthesisOptions& opts) {
  const Word w = identity_word(pair);
  return move_to(synthesize_at_identity(w, opts), pair, opts.verify);
}

const EdgeCertificate& Synthesizer::at_identity(const Word& u) {
  const std::string key = u.canonical().str();
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, synthesize_at_identity(u.canonical(), opts_)).first;
  return it->second;
}

EdgeCertificate Synthesizer::certify(const HalfLinePair& pair) {
  const Word w = identity_word(pair);
  return move_to(at_identity(w), pair, opts_.verify);
}

}  // namespace linemetric
