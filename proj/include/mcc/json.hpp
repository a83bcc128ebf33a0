#ifndef MCC_JSON_HPP
#define MCC_JSON_HPP

#include <nlohmann/json.hpp>

#include "mcc/compare.hpp"
#include "mcc/params.hpp"
#include "mcc/sim.hpp"
#include "mcc/validate.hpp"

namespace mcc {

using nlohmann::json;

namespace detail {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

inline json rational_json(const Rational& r) {
  return {{"exact", r.str()}, {"value", r.convert_to<double>()}};
}

inline json opt_rational(const std::optional<Rational>& r) { return r ? rational_json(*r) : json(nullptr); }

}  // namespace detail

inline json to_json(const Violation& v) {
  json j{{"condition", to_string(v.condition)}};
  if (v.column) j["column"] = *v.column;
  if (v.count) j["star_count"] = *v.count;
  if (v.symbol) j["symbol"] = *v.symbol;
  if (!v.cells.empty()) {
    j["cells"] = json::array();
    for (const Cell& c : v.cells) j["cells"].push_back({c.row, c.col});
  }
  return j;
}

inline json to_json(const ValidationReport& r) {
  json j{{"F", r.rows},
         {"K", r.cols},
         {"is_pda", r.is_pda},
         {"Z", detail::opt(r.Z)},
         {"S", r.S},
         {"regular_g", detail::opt(r.regular_g)},
         {"cyclic_t", detail::opt(r.cyclic_t)},
         {"violations", json::array()}};
  for (const Violation& v : r.violations) j["violations"].push_back(to_json(v));
  return j;
}

/// {K, k, L, Z, S, g, t, F} of a constructed array, read off its report.
inline json descriptor_json(const SchemeParams& p, const ValidationReport& r) {
  return {{"K", p.K},
          {"k", p.k},
          {"L", p.L},
          {"Z", detail::opt(r.Z)},
          {"S", r.S},
          {"g", detail::opt(r.regular_g)},
          {"t", detail::opt(r.cyclic_t)},
          {"F", r.rows}};
}

inline json to_json(const SimReport& r) {
  json hist = json::object();
  for (auto [gain, n] : r.gain_histogram) hist[std::to_string(gain)] = n;
  json j{{"K", r.K},
         {"k", r.k},
         {"L", r.L},
         {"N", r.N},
         {"subfile_size", r.subfile_size},
         {"seed", r.seed},
         {"demands", r.demands},
         {"transmissions", r.transmissions},
         {"rate", detail::rational_json(r.rate_measured)},
         {"gain_histogram", hist},
         {"bytes_sent", r.bytes_sent},
         {"decode_ok", r.decode_ok},
         {"all_decoded", r.all_decoded()}};
  json errors = json::object();
  for (std::size_t u = 0; u < r.decode_errors.size(); ++u)
    if (!r.decode_errors[u].empty()) errors[std::to_string(u)] = r.decode_errors[u];
  if (!errors.empty()) j["decode_errors"] = errors;
  return j;
}

inline json to_json(const SchemeRow& row) {
  return {{"scheme", to_string(row.scheme)},
          {"rate", detail::opt_rational(row.rate)},
          {"gain", detail::opt_rational(row.gain)},
          {"subpacketization", row.subpacketization ? json(row.subpacketization->str()) : json(nullptr)},
          {"applicable", row.applicable},
          {"reason", row.reason}};
}

inline json to_json(const std::vector<SchemeRow>& rows) {
  json j = json::array();
  for (const SchemeRow& r : rows) j.push_back(to_json(r));
  return j;
}

inline json to_json(const SweepTable& t) {
  json points = json::array();
  for (const SweepPoint& p : t.points)
    points.push_back({{"k", p.k}, {"L", p.L}, {"trivial", p.trivial}, {"rows", to_json(p.rows)}});
  return {{"K", t.K}, {"points", points}};
}

}  // namespace mcc

#endif  // MCC_JSON_HPP
