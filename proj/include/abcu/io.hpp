#ifndef ABCU_IO_HPP
#define ABCU_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "abcu/decision.hpp"
#include "abcu/model.hpp"
#include "abcu/necessary.hpp"
#include "abcu/representation.hpp"

namespace abcu {

using Json = nlohmann::json;

struct ParsedProfile {
  PartialProfile profile;
  std::optional<int> k;
};

namespace detail {

inline std::vector<std::string> string_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorKind::syntax, where + " must be an array of candidate names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorKind::syntax, where + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

} // namespace detail

/// Profile document: {"candidates": [...], "k": int, "voters": [{"top", "middle",
/// "bottom", "order"}]}. Omitted top/middle are empty; omitted bottom is the
/// complement of top and middle.
inline ParsedProfile parse_profile(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::syntax, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::syntax, "profile document must be a JSON object");
  if (!doc.contains("candidates")) throw Error(ErrorKind::syntax, "missing \"candidates\"");
  if (!doc.contains("voters") || !doc["voters"].is_array()) throw Error(ErrorKind::syntax, "missing \"voters\" array");

  CandidateRegistry registry(detail::string_array(doc["candidates"], "\"candidates\""));
  std::vector<RawBallot> raw;
  int index = 0;
  for (const auto& v : doc["voters"]) {
    const std::string where = "voter " + std::to_string(index++);
    if (!v.is_object()) throw Error(ErrorKind::syntax, where + " must be an object");
    RawBallot b;
    if (v.contains("top")) b.top = detail::string_array(v["top"], where + " \"top\"");
    if (v.contains("middle")) b.middle = detail::string_array(v["middle"], where + " \"middle\"");
    if (v.contains("bottom")) b.bottom = detail::string_array(v["bottom"], where + " \"bottom\"");
    if (v.contains("order")) {
      if (!v["order"].is_array()) throw Error(ErrorKind::syntax, where + " \"order\" must be an array of pairs");
      for (const auto& pair : v["order"]) {
        auto names = detail::string_array(pair, where + " \"order\" entry");
        if (names.size() != 2) throw Error(ErrorKind::syntax, where + " \"order\" entries must be [x, y] pairs");
        b.order.emplace_back(names[0], names[1]);
      }
    }
    raw.push_back(std::move(b));
  }

  ParsedProfile out{validate_partial_profile(raw, registry), std::nullopt};
  if (doc.contains("k")) {
    if (!doc["k"].is_number_integer()) throw Error(ErrorKind::syntax, "\"k\" must be an integer");
    out.k = doc["k"].get<int>();
  }
  return out;
}

inline Json names_json(const CandidateRegistry& reg, CandidateSet s) { return Json(reg.names_of(s)); }

inline Json profile_json(const PartialProfile& p, std::optional<int> k = std::nullopt) {
  Json doc;
  doc["candidates"] = p.registry.names();
  if (k) doc["k"] = *k;
  Json voters = Json::array();
  for (const auto& b : p.ballots) {
    Json v;
    v["top"] = names_json(p.registry, b.top());
    v["middle"] = names_json(p.registry, b.middle());
    v["bottom"] = names_json(p.registry, b.bottom());
    const auto cover = b.cover_pairs();
    if (!cover.empty()) {
      Json order = Json::array();
      for (auto [x, y] : cover) order.push_back({p.registry.name(x), p.registry.name(y)});
      v["order"] = std::move(order);
    }
    voters.push_back(std::move(v));
  }
  doc["voters"] = std::move(voters);
  return doc;
}

/// Canonical text: sorted keys, candidate lists in registry order, precedence
/// as its cover pairs.
inline std::string serialize_profile(const PartialProfile& p, std::optional<int> k = std::nullopt) {
  return profile_json(p, k).dump(2) + "\n";
}

inline Json approval_json(const ApprovalProfile& a) {
  Json out = Json::array();
  for (CandidateSet s : a.ballots) out.push_back(names_json(a.registry, s));
  return out;
}

inline Json group_witness_json(const GroupWitness& g, const CandidateRegistry& reg) {
  Json j;
  j["voters"] = g.voters;
  j["common"] = names_json(reg, g.common);
  j["level"] = g.level;
  if (g.allowed) j["allowed"] = names_json(reg, *g.allowed);
  return j;
}

inline Json result_json(std::string_view query, const Decision& d, const CandidateRegistry& reg) {
  Json j;
  j["query"] = query;
  j["answer"] = d.answer;
  j["method"] = d.method;
  if (d.witness) j["witness"] = approval_json(*d.witness);
  if (d.witness_committee) j["witness_committee"] = names_json(reg, *d.witness_committee);
  if (d.group_witness) j["group_witness"] = group_witness_json(*d.group_witness, reg);
  return j;
}

inline Json result_json(std::string_view query, const AxiomResult& r, std::string_view method,
                        const CandidateRegistry& reg) {
  Json j;
  j["query"] = query;
  j["answer"] = r.satisfied;
  j["method"] = method;
  if (r.witness) j["group_witness"] = group_witness_json(*r.witness, reg);
  return j;
}

inline std::string serialize_result(const Json& result) { return result.dump(2) + "\n"; }

inline std::string serialize_result(std::string_view query, const Decision& d, const CandidateRegistry& reg) {
  return serialize_result(result_json(query, d, reg));
}

inline std::string serialize_result(std::string_view query, const AxiomResult& r, std::string_view method,
                                    const CandidateRegistry& reg) {
  return serialize_result(result_json(query, r, method, reg));
}

} // namespace abcu

#endif // ABCU_IO_HPP
