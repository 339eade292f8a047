#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "linemetric/certificates.hpp"
#include "linemetric/edge_theory.hpp"
#include "linemetric/json_io.hpp"
#include "linemetric/line_metrics.hpp"
#include "linemetric/oracle.hpp"

namespace linemetric::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Common {
  bool json = false;
  bool timing = false;
};

Json run_report(const std::string& command, Json inputs, Json results) {
  return Json{{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}, {"version", kVersion}};
}

void check_size(int n) {
  if (n < 3) throw UsageError("n must be at least 3");
  if (n > exhaustion_limit()) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the bound " + std::to_string(exhaustion_limit()) +
                     " (set LINEMETRIC_MAX_N to raise it)");
  }
}

Perm parse_perm(const std::string& text, int n) {
  if (text.empty()) return Perm::identity(n);
  Perm p = Perm::parse(text);
  if (p.size() != n) throw UsageError("permutation " + text + " does not have " + std::to_string(n) + " entries");
  return p;
}

Word parse_word(const std::string& text, int n) {
  Word w = Word::parse(text);
  if (w.size() != n) throw UsageError("word " + text + " does not have " + std::to_string(n) + " symbols");
  if (!w.proper()) throw UsageError("word " + text + " must be proper and non-empty");
  return w;
}

std::string margins_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "perm_min=" << r.perm_min << ", cut_min=" << r.cut_min << ", target=" << r.target;
  return os.str();
}

std::string identity_text(const NonEdgeWitness& w) {
  std::ostringstream os;
  os << "M(chi^" << w.pair.u.str() << ") = M(chi^" << w.incident_set.str() << ") + M(" << w.neighbor.str() << ") - M("
     << w.base.str() << ")" << (w.verified ? " [verified]" : " [FAILED]");
  return os.str();
}

std::string vector_text(const RatVec& x) {
  std::string s = "(";
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) s += ',';
    s += x[j].str();
  }
  return s + ")";
}

std::string set_text(std::uint64_t mask, int n) {
  std::string s = "{";
  bool first = true;
  for (int j = 1; j <= n; ++j) {
    if ((mask >> (j - 1)) & 1U) {
      if (!first) s += ',';
      s += std::to_string(j);
      first = false;
    }
  }
  return s + "}";
}

// ---------------------------------------------------------------- edges

int cmd_edges(int n, const std::string& at, bool count_only, const Common& c, std::ostream& out) {
  check_size(n);
  const Perm pi = parse_perm(at, n);
  const std::vector<Word> edges = enumerate_edges_at(pi);
  const long formula = (1L << (n - 1)) - n;
  if (c.json) {
    Json list = Json::array();
    for (const Word& w : edges) list.push_back(to_json(classify(HalfLinePair(pi, w))));
    Json results{{"count", edges.size()}, {"edges", std::move(list)}};
    if (n >= 4) results["formula"] = formula;
    out << run_report("edges", Json{{"n", n}, {"at", pi.str()}}, std::move(results)).dump(2) << '\n';
    return kExitPass;
  }
  if (count_only) {
    out << edges.size();
    if (n >= 4) out << " (formula: " << formula << ")";
    out << '\n';
    return kExitPass;
  }
  for (const Word& w : edges) out << w.str() << " (" << classify(HalfLinePair(pi, w)).describe() << ")\n";
  return kExitPass;
}

// ---------------------------------------------------------------- certify

int cmd_certify(int n, const std::string& pi_text, const std::string& u_text, const std::string& emit,
                const std::string& verify_only, const std::string& condition, const Common& c, std::ostream& out) {
  check_size(n);
  const HalfLinePair pair(parse_perm(pi_text, n), parse_word(u_text, n));
  const Json inputs{{"n", n}, {"pair", to_json(pair)}};

  if (!verify_only.empty()) {
    SymZMat m = matrix_from_json(read_json_file(verify_only));
    if (m.size() != n) throw UsageError("matrix in " + verify_only + " is " + std::to_string(m.size()) + "x" +
                                        std::to_string(m.size()) + ", expected n = " + std::to_string(n));
    std::vector<Condition> conditions;
    if (condition == "plain" || condition == "any") conditions.push_back(Condition::plain);
    if (condition == "farkas" || condition == "any") conditions.push_back(Condition::farkas);
    bool passed = false;
    Json reports = Json::array();
    for (Condition cond : conditions) {
      const VerificationReport r = verify_certificate(m, pair, cond);
      passed = passed || r.passed;
      reports.push_back(to_json(r));
      if (!c.json) {
        out << to_string(cond) << ": " << (r.passed ? "pass" : "fail") << " (" << margins_text(r) << ")";
        if (!r.passed) out << "; " << r.failure;
        out << '\n';
      }
    }
    if (c.json) {
      out << run_report("certify", inputs, Json{{"passed", passed}, {"reports", std::move(reports)}}).dump(2) << '\n';
    }
    return passed ? kExitPass : kExitVerificationFailed;
  }

  const EdgeVerdict verdict = classify(pair);
  if (!verdict.is_edge) {
    const NonEdgeWitness w = non_edge_witness(pair);
    if (c.json) {
      out << run_report("certify", inputs, Json{{"verdict", to_json(verdict)}, {"witness", to_json(w)}}).dump(2) << '\n';
    } else {
      out << "non-edge: " << verdict.describe() << '\n' << identity_text(w) << '\n';
    }
    return kExitNotAnEdge;
  }
  EdgeCertificate cert = synthesize(pair);
  if (!emit.empty()) write_json_file(emit, to_json(cert));
  if (c.json) {
    out << run_report("certify", inputs, Json{{"verdict", to_json(verdict)}, {"certificate", to_json(cert)}}).dump(2)
        << '\n';
  } else {
    out << "pass: " << to_string(cert.condition) << " (" << margins_text(cert.margins) << ")\n";
    out << "construction:";
    for (const auto& step : cert.construction) out << ' ' << step;
    out << '\n';
    if (!emit.empty()) out << "written: " << emit << '\n';
  }
  return kExitPass;
}

// ---------------------------------------------------------------- check-metric

int cmd_check_metric(const std::string& path, bool spreading, bool facet, const Common& c, std::ostream& out) {
  const SymZMat m = matrix_from_json(read_json_file(path));
  const int n = m.size();
  const auto x = recover_embedding(m);
  const auto sep = x ? separated_membership(m) : std::nullopt;
  std::ostringstream line;
  Json results;
  results["line"] = x.has_value();
  results["separated"] = sep.has_value();
  if (!x) {
    line << "E_" << n << ": no";
  } else if (sep) {
    line << "E_" << n << "^b: yes, pi=" << sep->pi.str() << ", x=" << vector_text(sep->x);
    results["pi"] = sep->pi.str();
    Json xs = Json::array();
    for (const Rat& v : sep->x) xs.push_back(to_json(v));
    results["x"] = std::move(xs);
  } else {
    line << "E_" << n << ": yes; E_" << n << "^b: no";
    for (const auto& [k, l] : upper_pairs(n)) {
      if (m.at(k, l) < Rat(1)) {
        line << " (entry (" << k << "," << l << ")=" << m.at(k, l) << " < 1)";
        results["short_entry"] = Json::array({k, l, to_json(m.at(k, l))});
        break;
      }
    }
  }
  if (spreading) {
    const SpreadingReport r = spreading_check(m);
    results["spreading_violations"] = r.violations.size();
    results["weak_spreading_violations"] = r.weak_violations.size();
    if (r.ok()) {
      line << "; spreading: ok";
    } else {
      const SpreadingViolation& v = r.violations.empty() ? r.weak_violations.front() : r.violations.front();
      line << "; spreading: " << r.violations.size() << " violations (first: i=" << v.i << ", S=" << set_text(v.set, n)
           << ", sum=" << v.sum << " < " << v.bound << ")";
    }
  }
  if (facet) {
    const Rat slack = qn_facet_value(m);
    results["facet_slack"] = to_json(slack);
    line << "; facet slack: " << slack;
  }
  if (c.json) {
    out << run_report("check-metric", Json{{"matrix", path}}, std::move(results)).dump(2) << '\n';
  } else {
    out << line.str() << '\n';
  }
  return kExitPass;
}

// ---------------------------------------------------------------- crosscheck

int cmd_crosscheck(int n, bool oracle, bool full, const Common& c, std::ostream& out) {
  check_size(n);
  const OracleOptions oracle_opts;
  if (!oracle && !full) {
    oracle = n <= oracle_opts.max_n;
    full = true;
  }
  if (oracle && n > oracle_opts.max_n) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the oracle bound " + std::to_string(oracle_opts.max_n));
  }
  const auto pairs = canonical_pairs(n);
  const auto start = std::chrono::steady_clock::now();
  Json results{{"pairs", pairs.size()}};
  std::vector<std::string> lines;
  bool ok = true;

  std::map<std::string, int> per_vertex;
  for (const HalfLinePair& p : pairs) {
    if (classify(p).is_edge) ++per_vertex[p.pi.str()];
  }
  std::set<int> counts;
  for (const auto& [pi, k] : per_vertex) counts.insert(k);
  std::string count_line = "edges per vertex: ";
  if (counts.size() == 1) {
    count_line += std::to_string(*counts.begin());
    results["edges_per_vertex"] = *counts.begin();
  } else {
    count_line += "not constant";
    results["edges_per_vertex"] = nullptr;
  }

  if (oracle) {
    std::size_t agree = 0;
    Json disagreements = Json::array();
    for (const HalfLinePair& p : pairs) {
      const OracleVerdict o = oracle_classify(p, oracle_opts);
      if (o.verified && o.is_edge == classify(p).is_edge) {
        ++agree;
      } else {
        disagreements.push_back(to_json(o));
      }
    }
    ok = ok && agree == pairs.size();
    lines.push_back("pairs: " + std::to_string(pairs.size()) + " canonical; agree: " + std::to_string(agree) + "/" +
                    std::to_string(pairs.size()));
    results["oracle"] = Json{{"agree", agree}, {"disagreements", std::move(disagreements)}};
  }
  lines.push_back(count_line);

  if (full) {
    Synthesizer synth;
    std::size_t edges = 0, certified = 0, non_edges = 0, witnessed = 0;
    Json failures = Json::array();
    for (const HalfLinePair& p : pairs) {
      if (classify(p).is_edge) {
        ++edges;
        try {
          if (synth.certify(p).margins.passed) ++certified;
        } catch (const std::exception& e) {
          failures.push_back(Json{{"pair", to_json(p)}, {"error", e.what()}});
        }
      } else {
        ++non_edges;
        if (non_edge_witness(p).verified) {
          ++witnessed;
        } else {
          failures.push_back(Json{{"pair", to_json(p)}, {"error", "identity does not hold"}});
        }
      }
    }
    ok = ok && certified == edges && witnessed == non_edges;
    lines.push_back("edges: " + std::to_string(certified) + "/" + std::to_string(edges) +
                    " certified; non-edges: " + std::to_string(witnessed) + "/" + std::to_string(non_edges) +
                    " witnessed");
    results["full"] = Json{{"edges", edges},
                           {"certified", certified},
                           {"non_edges", non_edges},
                           {"witnessed", witnessed},
                           {"failures", std::move(failures)}};
  }
  results["passed"] = ok;
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (c.timing) {
    results["timing_ms"] = ms;
    lines.push_back("time: " + std::to_string(ms) + " ms");
  }
  if (c.json) {
    out << run_report("crosscheck", Json{{"n", n}, {"oracle", oracle}, {"full", full}}, std::move(results)).dump(2)
        << '\n';
  } else {
    for (const auto& l : lines) out << l << '\n';
    out << (ok ? "result: pass" : "result: FAIL") << '\n';
  }
  return ok ? kExitPass : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for line metrics with unit separation and the edges of their closure", "linemetric"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Common common;
  app.add_flag("--json", common.json, "Emit a JSON run report instead of text");
  app.add_flag("--timing", common.timing, "Include wall-clock timing in the output");

  int n = 0;
  std::string at, pi_text, u_text, emit, verify_only, condition = "any", matrix_path;
  bool count_only = false, spreading = false, facet = false, oracle = false, full = false;

  auto* edges = app.add_subcommand("edges", "List the edge words at a vertex");
  edges->add_option("n", n, "Number of points")->required();
  edges->add_option("--at", at, "Vertex permutation, e.g. 1,3,2 (default: identity)");
  edges->add_flag("--count-only", count_only, "Print only the number of edges");
  edges->add_flag("--json", common.json, "Emit a JSON run report");

  auto* certify = app.add_subcommand("certify", "Synthesize or verify a certificate for a pair");
  certify->add_option("n", n, "Number of points")->required();
  certify->add_option("--pi", pi_text, "Vertex permutation (default: identity)");
  certify->add_option("--u", u_text, "Binary word of the cut direction")->required();
  certify->add_option("--emit", emit, "Write the certificate JSON to this path");
  certify->add_option("--verify-only", verify_only, "Verify the matrix in this JSON file instead of synthesizing");
  certify->add_option("--condition", condition, "Condition for --verify-only")
      ->check(CLI::IsMember({"any", "plain", "farkas"}));
  certify->add_flag("--json", common.json, "Emit a JSON run report");

  auto* check = app.add_subcommand("check-metric", "Membership, spreading and facet checks for a matrix");
  check->add_option("--matrix", matrix_path, "Matrix JSON file")->required();
  check->add_flag("--spreading", spreading, "Check the spreading inequalities");
  check->add_flag("--facet", facet, "Report the all-ones facet slack");
  check->add_flag("--json", common.json, "Emit a JSON run report");

  auto* cross = app.add_subcommand("crosscheck", "Sweep all canonical pairs for n");
  cross->add_option("n", n, "Number of points")->required();
  cross->add_flag("--oracle", oracle, "Compare the classifier against the LP oracle");
  cross->add_flag("--full", full, "Certify every edge and witness every non-edge");
  cross->add_flag("--json", common.json, "Emit a JSON run report");
  cross->add_flag("--timing", common.timing, "Report elapsed time");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*edges) return cmd_edges(n, at, count_only, common, out);
    if (*certify) return cmd_certify(n, pi_text, u_text, emit, verify_only, condition, common, out);
    if (*check) return cmd_check_metric(matrix_path, spreading, facet, common, out);
    if (*cross) return cmd_crosscheck(n, oracle, full, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const JsonFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ExhaustionLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SynthesisError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace linemetric::cli
