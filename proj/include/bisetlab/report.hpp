#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bisetlab/algebra.hpp"
#include "bisetlab/burnside.hpp"

namespace bisetlab {

/// Integers stay numbers, everything else is "a/b".
nlohmann::json rational_to_json(const Rational& q);
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json vector_to_json(const RVec& v);

/// Fields every report carries so that it describes its own run.
struct RunContext {
  std::string command;
  std::string catalog_hash;
  int cap = kDefaultOrderCap;
  std::vector<std::string> probes;
};
nlohmann::json report_header(const RunContext& ctx);

nlohmann::json gram_report(const RunContext& ctx, const GroupPtr& h, const GroupPtr& l, const GroupPtr& t,
                           FieldMode mode, const GramReport& g);
nlohmann::json nondegeneracy_report(const RunContext& ctx, const GroupPtr& h, const GroupPtr& l,
                                    const GroupPtr& t, FieldMode mode, const NondegeneracyReport& r);
nlohmann::json radical_report(const RunContext& ctx, const FiniteDimAlgebra& a, const RadicalReport& r);
nlohmann::json certificate_report(const RunContext& ctx, const SemisimplicityCertificate& c);
nlohmann::json essential_report(const RunContext& ctx, const GroupPtr& g, const GroupPtr& t, FieldMode mode,
                                const EssentialReport& r);
nlohmann::json aut_report(const RunContext& ctx, const GroupPtr& l, const GroupPtr& t, const GroupPtr& c,
                          const AutReport& r);

struct OracleReport {
  int pairs = 0;
  int mismatches = 0;
  bool identity_ok = false;
  std::vector<std::string> failures;  // first few mismatching pairs
  bool pass() const { return mismatches == 0 && identity_ok; }
};
/// linearize(b o a) against linearize(b) o linearize(a) for every pair of
/// transitive bisets b : L -> H, a : K -> L, plus the identity of L.
OracleReport linearization_oracle(const GroupPtr& h, const GroupPtr& l, const GroupPtr& k, const GroupPtr& t,
                                  int order_cap = kDefaultOrderCap);
nlohmann::json oracle_report(const RunContext& ctx, const GroupPtr& h, const GroupPtr& l, const GroupPtr& k,
                             const GroupPtr& t, const OracleReport& r);

/// Stable plain-text rendering. Throws InvalidInput on unknown reports.
std::string render_report(const nlohmann::json& report);

}  // namespace bisetlab
