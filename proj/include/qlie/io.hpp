#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlie/theorems.hpp"

namespace qlie {

using Json = nlohmann::ordered_json;

// ---- presentation files ----------------------------------------------------
//
// {
//   "field": "Q" | {"Fp": 5},
//   "basis": ["e", "h", "f"],
//   "brackets": [{"i": 0, "j": 1, "value": [[0, "-2"]]}, ...],   // i < j
//   "pmap": [{"i": 0, "value": [[0, "1"]]}, ...]                 // optional
// }

namespace detail {

inline LieElement parse_combo(const Json& value, const LiePresentation& P, const std::string& where) {
  LieElement out = P.zero_element();
  if (!value.is_array()) throw input_error(where + ": 'value' must be an array of [index, scalar] pairs");
  for (const auto& pair : value) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_string())
      throw input_error(where + ": entries must be [index, \"scalar\"] pairs");
    std::uint32_t k = pair[0].get<std::uint32_t>();
    if (k >= P.dim()) throw input_error(where + ": basis index " + std::to_string(k) + " out of range");
    out.coeffs[k] += Scalar::parse(pair[1].get<std::string>(), P.field);
  }
  return out;
}

}  // namespace detail

inline LiePresentation presentation_from_json(const Json& doc, const std::string& name) {
  if (!doc.is_object()) throw input_error("presentation file: top level must be an object");
  LiePresentation P;
  P.name = name;

  if (!doc.contains("field")) throw input_error("presentation file: missing 'field'");
  const Json& field = doc["field"];
  if (field.is_string() && field.get<std::string>() == "Q")
    P.field = FieldSpec::rationals();
  else if (field.is_object() && field.contains("Fp") && field["Fp"].is_number_unsigned())
    P.field = FieldSpec::prime(field["Fp"].get<std::uint64_t>());
  else
    throw input_error("presentation file: 'field' must be \"Q\" or {\"Fp\": p}");

  if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].empty())
    throw input_error("presentation file: 'basis' must be a non-empty array of identifiers");
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) throw input_error("presentation file: basis entries must be strings");
    P.basis_names.push_back(b.get<std::string>());
  }

  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw input_error("presentation file: 'brackets' must be an array");
    for (const auto& entry : doc["brackets"]) {
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") || !entry.contains("value") ||
          !entry["i"].is_number_unsigned() || !entry["j"].is_number_unsigned())
        throw input_error("presentation file: bracket entries must be {i, j, value}");
      std::uint32_t i = entry["i"].get<std::uint32_t>();
      std::uint32_t j = entry["j"].get<std::uint32_t>();
      if (i >= j) throw input_error("presentation file: bracket entry needs i < j (antisymmetry is implied)");
      if (j >= P.dim()) throw input_error("presentation file: bracket index out of range");
      if (P.table.count({i, j})) throw input_error("presentation file: duplicate bracket entry");
      P.table[{i, j}] = detail::parse_combo(entry["value"], P, "bracket [" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
  }

  if (doc.contains("pmap")) {
    if (P.field.kind != FieldKind::Prime)
      throw input_error("presentation file: 'pmap' requires a prime field");
    if (!doc["pmap"].is_array()) throw input_error("presentation file: 'pmap' must be an array");
    std::vector<LieElement> pm(P.dim(), P.zero_element());
    std::vector<bool> seen(P.dim(), false);
    for (const auto& entry : doc["pmap"]) {
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("value") || !entry["i"].is_number_unsigned())
        throw input_error("presentation file: pmap entries must be {i, value}");
      std::uint32_t i = entry["i"].get<std::uint32_t>();
      if (i >= P.dim()) throw input_error("presentation file: pmap index out of range");
      if (seen[i]) throw input_error("presentation file: duplicate pmap entry");
      seen[i] = true;
      pm[i] = detail::parse_combo(entry["value"], P, "pmap [" + std::to_string(i) + "]");
    }
    P.pmap = std::move(pm);
  }
  return P;
}

inline LiePresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open presentation file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const std::exception& e) {
    throw input_error("presentation file '" + path + "': " + e.what());
  }
  return presentation_from_json(doc, std::filesystem::path(path).stem().string());
}

// ---- element and word rendering ---------------------------------------------

inline std::string monomial_str(const LiePresentation& P, const PBWMonomial& m) {
  if (m.is_identity()) return "1";
  std::string s;
  for (std::uint32_t i = 0; i < P.dim(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += P.basis_names[i] + "^" + std::to_string(m.exps[i]);
  }
  return s;
}

inline std::string word_str(const LiePresentation& P, const FPWord& w) {
  if (w.empty()) return "1";
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " | ";
    s += w[i].is_x() ? "x^" + std::to_string(w[i].xexp) : monomial_str(P, w[i].mono);
  }
  return s + "]";
}

inline std::string env_str(const LiePresentation& P, const EnvElement& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : a.terms) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + monomial_str(P, m);
  }
  return s;
}

inline std::string fp_str(const LiePresentation& P, const FPElement& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : a.terms) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + word_str(P, w);
  }
  return s;
}

inline std::string tensor_str(const LiePresentation& P, const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : t.terms) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*(" + word_str(P, k.first) + " (x) " + word_str(P, k.second) + ")";
  }
  return s;
}

// Round-trippable rendering in the expression grammar: words become products
// of powers, terms are joined with '+'.
inline std::string fp_expression_str(const LiePresentation& P, const FPElement& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : a.terms) {
    if (!s.empty()) s += " + ";
    std::string t = c.str();
    for (const auto& letter : w) {
      if (letter.is_x()) {
        t += "*x^" + std::to_string(letter.xexp);
      } else {
        for (std::uint32_t i = 0; i < P.dim(); ++i)
          if (letter.mono.exps[i] > 0) t += "*" + P.basis_names[i] + "^" + std::to_string(letter.mono.exps[i]);
      }
    }
    s += t;
  }
  return s;
}

inline Json env_json(const EnvElement& a) {
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms) terms.push_back(Json::array({m.exps, c.str()}));
  return terms;
}

inline Json fp_json(const LiePresentation& P, const FPElement& a) {
  Json terms = Json::array();
  for (const auto& [w, c] : a.terms) terms.push_back(Json::array({word_str(P, w), c.str()}));
  return terms;
}

// ---- verification reports ----------------------------------------------------

inline Json report_json(const VerificationReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["presentation"] = r.presentation;
  j["mode"] = r.mode;
  j["degree"] = r.degree;
  Json computed = Json::object(), expected = Json::object();
  for (const auto& [k, v] : r.computed) computed[k] = v;
  for (const auto& [k, v] : r.expected) expected[k] = v;
  j["computed"] = computed;
  j["expected"] = expected;
  j["pass"] = r.pass;
  j["witnesses"] = r.witnesses;
  j["notes"] = r.notes;
  return j;
}

inline std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "theorem     : " << r.theorem << "\n";
  os << "presentation: " << r.presentation << "\n";
  os << "mode        : " << r.mode << "\n";
  os << "degree      : " << r.degree << "\n";
  for (const auto& [k, v] : r.computed) os << "computed    : " << k << " = " << v << "\n";
  for (const auto& [k, v] : r.expected) os << "expected    : " << k << " = " << v << "\n";
  for (const auto& w : r.witnesses) os << "witness     : " << w << "\n";
  for (const auto& n : r.notes) os << "note        : " << n << "\n";
  os << "result      : " << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace qlie
