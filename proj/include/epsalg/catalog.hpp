#pragma once

// Text names for commutation factors and algebra presets:
//   eps_a | eps_a' | eps_c | eps_c' | eps_q:<q> | counterexample | trivial
//   <family>[:n=<n>][,h=<value>] | qplane:<q> | cex | ext:n=<n>[,factor=<factor>]

#include <map>
#include <string>
#include <string_view>

#include "epsalg/errors.hpp"
#include "epsalg/expr.hpp"
#include "epsalg/presets.hpp"

namespace epsalg {

/// Factor preset on a grade group of dimension `dim` (moduli used by `trivial` only).
inline CommutationFactor parse_factor(std::string_view text, std::size_t dim, const std::vector<long>& moduli = {}) {
  const std::string s(text);
  if (s == "eps_a") return factors::eps_a(dim);
  if (s == "eps_a'") return factors::eps_a_prime(dim);
  if (s == "eps_c") return factors::eps_c(dim);
  if (s == "eps_c'") return factors::eps_c_prime(dim);
  if (s == "counterexample") return factors::counterexample();
  if (s == "trivial") return factors::trivial(dim, moduli);
  if (s.rfind("eps_q:", 0) == 0) return factors::eps_q(parse_scalar(s.substr(6)));
  throw InvalidArgument("unknown commutation factor '" + s + "'");
}

namespace detail {

/// Splits "k1=v1,k2=v2" into a map; a leading bare item is stored under "".
inline std::map<std::string, std::string> parse_options(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string item(text.substr(start, end - start));
    if (!item.empty()) {
      const auto eq = item.find('=');
      const std::string key = eq == std::string::npos ? "" : item.substr(0, eq);
      const std::string value = eq == std::string::npos ? item : item.substr(eq + 1);
      if (!out.emplace(key, value).second) throw InvalidArgument("repeated option '" + key + "'");
    }
    start = end + 1;
  }
  return out;
}

inline unsigned parse_count(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 1 || v > 64) throw InvalidArgument(what + " must be an integer in [1, 64], got '" + s + "'");
  return static_cast<unsigned>(v);
}

}  // namespace detail

/// Builds a named preset; `h` in the options is "symbolic" or an expression in h over K.
inline Algebra parse_preset(std::string_view text) {
  const std::string s(text);
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : s.substr(colon + 1);

  if (head == "cex") {
    if (!tail.empty()) throw InvalidArgument("cex takes no options");
    return build_counterexample();
  }
  if (head == "qplane") {
    if (tail.empty()) throw InvalidArgument("qplane needs a parameter, e.g. qplane:2");
    return build_quantum_plane(parse_scalar(tail));
  }
  auto opts = detail::parse_options(tail);
  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = opts.find(key);
    if (it == opts.end()) return std::nullopt;
    std::string v = it->second;
    opts.erase(it);
    return v;
  };
  auto finish = [&] {
    if (!opts.empty()) throw InvalidArgument("unknown option '" + opts.begin()->first + "' in preset '" + s + "'");
  };

  if (head == "ext") {
    const auto n_text = take("n");
    if (!n_text) throw InvalidArgument("ext needs n, e.g. ext:n=3");
    const unsigned n = detail::parse_count(*n_text, "n");
    const std::string factor_name = take("factor").value_or("eps_c'");
    finish();
    const CommutationFactor f = parse_factor(factor_name, factor_name.rfind("eps_q:", 0) == 0 ? 2 : n);
    std::vector<Grade> grades;
    for (unsigned i = 0; i < n; ++i) grades.push_back(Grade::unit(f.dim(), i % f.dim()));
    return build_epsilon_exterior(grades, f);
  }

  const auto family = parse_family(head);
  if (!family) throw InvalidArgument("unknown preset '" + head + "'");
  std::optional<std::string> n_text = take("n");
  if (!n_text) n_text = take("");
  const unsigned n = n_text ? detail::parse_count(*n_text, "n") : 1;
  const std::string h_text = take("h").value_or("symbolic");
  finish();
  const HPoly parameter = h_text == "symbolic" ? HPoly::h() : parse_hpoly(h_text);
  return build_noa(*family, n, parameter);
}

inline std::vector<std::string> preset_names() {
  return {"fermion:n=<n>", "pseudo-fermion:n=<n>", "excl:n=<n>", "excl-dual:n=<n>", "boson:n=<n>",
          "pseudo-boson:n=<n>", "qplane:<q>", "cex", "ext:n=<n>[,factor=<factor>]"};
}

}  // namespace epsalg
