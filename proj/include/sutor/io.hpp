#pragma once

#include "sutor/engine.hpp"
#include "sutor/error.hpp"
#include "sutor/families.hpp"
#include "sutor/group_ring.hpp"
#include "sutor/words.hpp"

#include "json.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace sutor::io {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 are written as JSON numbers, larger ones as
/// decimal strings; both forms are accepted on input.
inline Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos || s.find('-', 1) != std::string::npos)
      throw Error(ErrorCode::Syntax, "not an integer: '" + s + "'");
    return Integer(s);
  }
  throw Error(ErrorCode::Syntax, "expected an integer, got " + j.dump());
}

inline Json vector_to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

inline IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Syntax, "expected an integer array");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

inline Json group_to_json(const AbelianGroup& g) {
  return Json{{"rank", g.rank}, {"torsion", vector_to_json(g.torsion)}};
}

inline AbelianGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank")) throw Error(ErrorCode::Syntax, "group header needs 'rank'");
  AbelianGroup g{j.at("rank").get<std::size_t>(), j.contains("torsion") ? vector_from_json(j.at("torsion")) : IntVector{}};
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    if (g.torsion[i] < 2) throw Error(ErrorCode::Syntax, "torsion divisors must be >= 2");
    if (i > 0 && !(g.torsion[i] % g.torsion[i - 1]).is_zero()) throw Error(ErrorCode::Syntax, "torsion divisors must form a divisibility chain");
  }
  return g;
}

/// {"group": {...}, "terms": [{"coeff", "free", "tor"}, ...]} in canonical term order.
inline Json element_to_json(const GroupRingElement& p) {
  Json terms = Json::array();
  for (const auto& [h, c] : p.terms())
    terms.push_back(Json{{"coeff", integer_to_json(c)}, {"free", vector_to_json(h.free)}, {"tor", vector_to_json(h.tor)}});
  return Json{{"group", group_to_json(p.group())}, {"terms", terms}};
}

inline GroupRingElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("terms"))
    throw Error(ErrorCode::Syntax, "group ring element needs 'group' and 'terms'");
  AbelianGroup g = group_from_json(j.at("group"));
  GroupRingElement p(g);
  for (const auto& t : j.at("terms")) {
    AbElement h{vector_from_json(t.at("free")), t.contains("tor") ? vector_from_json(t.at("tor")) : IntVector{}};
    if (h.free.size() != g.rank || h.tor.size() != g.torsion.size())
      throw Error(ErrorCode::Syntax, "term shape does not match the group header");
    p.add_term(h, integer_from_json(t.at("coeff")));
  }
  return p;
}

inline Json input_to_json(const SuturedInput& in) {
  Json j;
  if (!in.name.empty()) j["name"] = in.name;
  j["generators"] = in.alphabet->names();
  Json rel = Json::array(), rm = Json::array();
  for (const auto& w : in.relators) rel.push_back(render(w));
  for (const auto& w : in.rminus) rm.push_back(render(w));
  j["relators"] = rel;
  j["rminus"] = rm;
  j["claimed_irreducible"] = in.claimed_irreducible;
  if (!in.notes.empty()) j["notes"] = in.notes;
  return j;
}

/// Words are parsed without reduction so that `validate` can report them.
inline SuturedInput input_from_json(const Json& j) {
  static const std::set<std::string> allowed{"name", "generators", "relators", "rminus", "claimed_irreducible", "notes"};
  if (!j.is_object()) throw Error(ErrorCode::Syntax, "sutured input must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw Error(ErrorCode::Syntax, "unknown key '" + key + "'");
  for (const char* key : {"generators", "relators", "rminus"})
    if (!j.contains(key) || !j.at(key).is_array()) throw Error(ErrorCode::Syntax, std::string("missing array '") + key + "'");
  SuturedInput in;
  in.alphabet = make_alphabet(j.at("generators").get<std::vector<std::string>>());
  for (const auto& w : j.at("relators")) in.relators.push_back(parse_word_unreduced(w.get<std::string>(), in.alphabet));
  for (const auto& w : j.at("rminus")) in.rminus.push_back(parse_word_unreduced(w.get<std::string>(), in.alphabet));
  in.name = j.value("name", "");
  in.notes = j.value("notes", "");
  in.claimed_irreducible = j.value("claimed_irreducible", true);
  return in;
}

inline families::PdCode pd_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::MalformedPd, "pd code must be an array of 4-tuples");
  families::PdCode pd;
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 4) throw Error(ErrorCode::MalformedPd, "each crossing needs 4 labels");
    pd.push_back({x[0].get<long>(), x[1].get<long>(), x[2].get<long>(), x[3].get<long>()});
  }
  return pd;
}

inline std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

inline Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Syntax, origin + ": " + e.what());
  }
}

}  // namespace sutor::io
