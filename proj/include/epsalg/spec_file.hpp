#pragma once

// Algebra-spec files (JSON):
//
//   {
//     "name": "cex",                                   optional
//     "moduli": [2, 2],                                optional, 0 = free coordinate
//     "generators": [{"name": "x", "grade": [1, 0]}],  precedence order
//     "factor": "counterexample" | {"base": "-1", "form": [[0, 1], [1, 0]]},
//     "rules": ["x*X -> 1"],
//     "h": "symbolic" | "<expression in h>"            optional, default symbolic
//   }

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "epsalg/catalog.hpp"
#include "epsalg/errors.hpp"
#include "epsalg/expr.hpp"
#include "epsalg/presets.hpp"

namespace epsalg {

namespace detail {

inline Grade spec_grade(const nlohmann::json& j, const std::vector<long>& moduli) {
  if (j.is_string()) return Grade::parse(j.get<std::string>(), moduli);
  if (j.is_array()) return Grade(j.get<std::vector<long>>(), moduli);
  throw SpecError("grade must be an integer array or a string like \"(1,0)\"");
}

inline CommutationFactor spec_factor(const nlohmann::json& j, std::size_t dim, const std::vector<long>& moduli) {
  if (j.is_string()) {
    CommutationFactor f = parse_factor(j.get<std::string>(), dim, moduli);
    if (f.moduli() != moduli && j.get<std::string>() != "counterexample") {
      return CommutationFactor(f.name(), f.base(), f.form(), moduli);
    }
    return f;
  }
  if (j.is_object()) {
    const auto& base = j.at("base");
    const Scalar b = base.is_number_integer() ? Scalar(base.get<long>()) : parse_scalar(base.get<std::string>());
    return CommutationFactor(j.value("name", std::string("custom")), b, j.at("form").get<std::vector<std::vector<long>>>(),
                             moduli);
  }
  throw SpecError("factor must be a preset name or an object with base and form");
}

/// x with h replaced by the polynomial p.
inline Element compose_h(const Element& x, const HPoly& p) {
  Element out;
  for (const auto& [w, c] : x.terms()) {
    HPoly v, power(1);
    for (long k = 0; k <= c.degree(); ++k) {
      v += HPoly(c.coeff(static_cast<std::size_t>(k))) * power;
      power = power * p;
    }
    out.add_term(w, v);
  }
  return out;
}

}  // namespace detail

/// Builds an algebra from a parsed spec document. Every malformed field raises SpecError.
inline Algebra load_spec(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw SpecError("spec must be a JSON object");
    const std::vector<long> moduli = doc.contains("moduli") ? doc["moduli"].get<std::vector<long>>() : std::vector<long>{};
    if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty()) {
      throw SpecError("spec needs a nonempty generators list");
    }
    std::vector<Generator> gens;
    for (const auto& g : doc["generators"]) {
      gens.push_back({g.at("name").get<std::string>(), std::nullopt, detail::spec_grade(g.at("grade"), moduli)});
    }
    auto alphabet = std::make_shared<const Alphabet>(std::move(gens));
    const std::size_t dim = alphabet->zero_grade().dim();
    const std::vector<long>& mods = alphabet->zero_grade().moduli();
    const CommutationFactor factor = detail::spec_factor(doc.value("factor", nlohmann::json("trivial")), dim, mods);

    HPoly parameter = HPoly::h();
    if (doc.contains("h")) {
      const auto& h = doc["h"];
      if (h.is_number_integer()) {
        parameter = HPoly(Scalar(h.get<long>()));
      } else if (h.get<std::string>() != "symbolic") {
        parameter = parse_hpoly(h.get<std::string>());
      }
    }

    const Evaluator eval(alphabet);
    std::vector<Rule> rules;
    const auto& rule_list = doc.value("rules", nlohmann::json::array());
    for (std::size_t r = 0; r < rule_list.size(); ++r) {
      const std::string text = rule_list[r].get<std::string>();
      const auto arrow = text.find("->");
      if (arrow == std::string::npos) throw SpecError("rule " + std::to_string(r + 1) + " has no '->': " + text);
      try {
        const Element lhs = eval(std::string_view(text).substr(0, arrow));
        if (lhs.size() != 1 || lhs.terms().begin()->second != HPoly(1)) {
          throw SpecError("rule " + std::to_string(r + 1) + ": left side must be a single word");
        }
        Element rhs = eval(std::string_view(text).substr(arrow + 2));
        if (parameter != HPoly::h()) rhs = detail::compose_h(rhs, parameter);
        rules.push_back({lhs.terms().begin()->first, rhs});
      } catch (const ParseError& e) {
        throw SpecError("rule " + std::to_string(r + 1) + ": " + e.what());
      }
    }
    ReductionSystem sys(alphabet, std::move(rules));
    return Algebra(doc.value("name", std::string("spec")), factor, std::move(sys), parameter);
  } catch (const SpecError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed spec: ") + e.what());
  } catch (const Error& e) {
    throw SpecError(e.what());
  }
}

inline Algebra load_spec_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("spec is not valid JSON: ") + e.what());
  }
  return load_spec(doc);
}

inline Algebra load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_spec_text(ss.str());
}

}  // namespace epsalg
