#include "linemetric/json_io.hpp"

#include <fstream>
#include <map>

namespace linemetric {

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  try {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(std::string("bad rational: ") + e.what());
  }
  throw JsonFormatError("rational must be a string \"p/q\" or an integer");
}

Json to_json(const SymZMat& m) {
  Json entries = Json::array();
  for (int k = 1; k <= m.size(); ++k) {
    for (int l = k + 1; l <= m.size(); ++l) {
      if (!m.at(k, l).is_zero()) entries.push_back(Json::array({k, l, to_json(m.at(k, l))}));
    }
  }
  return Json{{"n", m.size()}, {"entries", std::move(entries)}};
}

SymZMat matrix_from_json(const Json& j) {
  if (!j.is_object()) throw JsonFormatError("matrix document must be an object");
  if (j.contains("matrix")) return matrix_from_json(j.at("matrix"));
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw JsonFormatError("matrix: missing integer \"n\"");
  const long n = j.at("n").get<long>();
  if (n < 1 || n > Word::kMaxLength) throw JsonFormatError("matrix: n out of range");
  if (!j.contains("entries") || !j.at("entries").is_array()) throw JsonFormatError("matrix: missing \"entries\" array");
  SymZMat m(static_cast<int>(n));
  std::map<std::pair<long, long>, Rat> seen;
  for (const Json& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw JsonFormatError("matrix: each entry must be [k, l, value]");
    }
    long k = e[0].get<long>();
    long l = e[1].get<long>();
    const Rat v = rat_from_json(e[2]);
    if (k < 1 || l < 1 || k > n || l > n) throw JsonFormatError("matrix: index out of range");
    if (k == l) {
      if (!v.is_zero()) throw JsonFormatError("matrix: diagonal entries must be zero");
      continue;
    }
    if (k > l) std::swap(k, l);
    auto [it, fresh] = seen.emplace(std::make_pair(k, l), v);
    if (!fresh && it->second != v) {
      throw JsonFormatError("matrix: entries (" + std::to_string(k) + "," + std::to_string(l) + ") and its mirror disagree");
    }
    m.set(static_cast<int>(k), static_cast<int>(l), v);
  }
  return m;
}

Json to_json(const HalfLinePair& p) { return Json{{"pi", p.pi.str()}, {"u", p.u.str()}}; }

HalfLinePair pair_from_json(const Json& j) {
  try {
    return HalfLinePair(Perm::parse(j.at("pi").get<std::string>()), Word::parse(j.at("u").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError(std::string("pair: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(std::string("pair: ") + e.what());
  }
}

Json margins_json(const VerificationReport& r) {
  return Json{{"perm_min", to_json(r.perm_min)}, {"cut_min", to_json(r.cut_min)}, {"target", to_json(r.target)}};
}

Json to_json(const VerificationReport& r) {
  Json j{{"condition", to_string(r.condition)}, {"passed", r.passed}, {"margins", margins_json(r)}};
  if (r.perm_argmin) j["perm_argmin"] = r.perm_argmin->str();
  if (r.cut_argmin) j["cut_argmin"] = r.cut_argmin->str();
  if (!r.passed) j["failure"] = r.failure;
  return j;
}

Json to_json(const EdgeVerdict& v) {
  Json j{{"pair", to_json(v.pair)}, {"is_edge", v.is_edge}, {"reason", v.describe()}};
  if (v.plan) {
    j["slopes"] = v.plan->slopes;
    j["identity_word"] = v.plan->word.str();
    if (!v.plan->table_row.empty()) j["table_row"] = v.plan->table_row;
  }
  return j;
}

Json to_json(const NonEdgeWitness& w) {
  return Json{{"pair", to_json(w.pair)},
              {"base", w.base.str()},
              {"k", w.k},
              {"neighbor", w.neighbor.str()},
              {"incident_set", w.incident_set.str()},
              {"verified", w.verified}};
}

Json to_json(const EdgeCertificate& c) {
  return Json{{"pair", to_json(c.pair)},
              {"matrix", to_json(c.matrix)},
              {"condition", to_string(c.condition)},
              {"omega", to_json(c.omega)},
              {"epsilon", to_json(c.epsilon)},
              {"construction", c.construction},
              {"margins", margins_json(c.margins)}};
}

Json to_json(const OracleVerdict& v) {
  Json j{{"pair", to_json(v.pair)}, {"is_edge", v.is_edge}, {"verified", v.verified}};
  if (v.separating) j["separating"] = to_json(*v.separating);
  if (!v.decomposition.empty()) {
    Json terms = Json::array();
    for (const ConicTerm& t : v.decomposition) {
      if (t.kind == ConicTerm::Kind::permutation) {
        terms.push_back(Json{{"sigma", t.sigma->str()}, {"coeff", to_json(t.coeff)}});
      } else {
        terms.push_back(Json{{"cut", t.cut->str()}, {"coeff", to_json(t.coeff)}});
      }
    }
    j["decomposition"] = std::move(terms);
  }
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonFormatError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace linemetric
