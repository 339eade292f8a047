/**
 * @file json_io.hpp
 * @brief JSON encodings of matrices, pairs, verdicts, reports and certificates.
 *
 * Rationals are always strings ("p/q" or "p"). Parsing accepts integers too.
 */

#ifndef LINEMETRIC_JSON_IO_HPP
#define LINEMETRIC_JSON_IO_HPP

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "linemetric/certificates.hpp"
#include "linemetric/core.hpp"
#include "linemetric/edge_theory.hpp"
#include "linemetric/oracle.hpp"

namespace linemetric {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Raised for structurally invalid input documents.
class JsonFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

/// { "n": n, "entries": [[k, l, "p/q"], ...] } listing the non-zero upper entries.
Json to_json(const SymZMat& m);
/// Accepts the entries form (either triangle, duplicates must agree) or a
/// document with a "matrix" member holding it, such as a certificate.
SymZMat matrix_from_json(const Json& j);

Json to_json(const HalfLinePair& p);
HalfLinePair pair_from_json(const Json& j);

Json margins_json(const VerificationReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const EdgeVerdict& v);
Json to_json(const NonEdgeWitness& w);
Json to_json(const EdgeCertificate& c);
Json to_json(const OracleVerdict& v);

/// Reads and parses a file; throws JsonFormatError on I/O or syntax errors.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace linemetric

#endif  // LINEMETRIC_JSON_IO_HPP
