#pragma once

// Graded reduction systems on a free algebra: normal forms, irreducible-word bases and
// diamond-lemma confluence certification.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "epsalg/errors.hpp"
#include "epsalg/free_algebra.hpp"

namespace epsalg {

/// Oriented rule lhs -> rhs.
struct Rule {
  Word lhs;
  Element rhs;
};

/// Which occurrence of a rule to rewrite first. Results agree on confluent systems.
struct Strategy {
  enum class Kind { Leftmost, Rightmost, Random };
  Kind kind = Kind::Leftmost;
  std::uint64_t seed = 0;

  static Strategy leftmost() { return {}; }
  static Strategy rightmost() { return {Kind::Rightmost, 0}; }
  static Strategy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

/// A word admitting two one-step reductions, with both reducts and the difference of
/// their normal forms.
struct Ambiguity {
  enum class Kind { Overlap, Inclusion };
  Kind kind = Kind::Overlap;
  Word word;
  std::size_t first_rule = 0;
  std::size_t second_rule = 0;
  Element first_reduct;
  Element second_reduct;
  Element residual;
  bool resolvable = true;
};

class ReductionSystem {
 public:
  static constexpr std::size_t kDefaultStepBudget = 1'000'000;

  ReductionSystem(std::shared_ptr<const Alphabet> alphabet, std::vector<Rule> rules,
                  std::size_t step_budget = kDefaultStepBudget)
      : alphabet_(std::move(alphabet)), rules_(std::move(rules)), step_budget_(step_budget) {
    if (!alphabet_) throw InvalidArgument("reduction system needs an alphabet");
    by_first_.assign(alphabet_->size(), {});
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      validate(r);
      by_first_[rules_[r].lhs.front()].push_back(r);
    }
  }

  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t step_budget() const { return step_budget_; }

  /// Irreducible form of `x`. Terminates because every step replaces a word by strictly
  /// smaller ones; throws StepBudgetExceeded past the budget.
  Element normalize(const Element& x, const Strategy& strategy = {}) const {
    Element::Terms pending = x.terms();
    Element result;
    std::size_t steps = 0;
    std::mt19937_64 rng(strategy.seed);
    // Largest word first: everything a step produces is smaller, so like terms merge
    // before they are rewritten and each word is visited once.
    while (!pending.empty()) {
      auto last = std::prev(pending.end());
      Word w = last->first;
      HPoly c = std::move(last->second);
      pending.erase(last);

      auto m = find_match(w, strategy, rng);
      if (!m) {
        result.add_term(w, c);
        continue;
      }
      if (++steps > step_budget_) {
        throw StepBudgetExceeded("step budget of " + std::to_string(step_budget_) +
                                 " reductions exceeded while normalizing " + format(*alphabet_, x));
      }
      const Rule& rule = rules_[m->rule];
      for (const auto& [rw, rc] : rule.rhs.terms()) {
        Word nw;
        nw.reserve(w.size() - rule.lhs.size() + rw.size());
        nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m->pos));
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(m->pos + rule.lhs.size()), w.end());
        auto [it, inserted] = pending.try_emplace(std::move(nw), c * rc);
        if (!inserted) {
          it->second += c * rc;
          if (it->second.is_zero()) pending.erase(it);
        } else if (it->second.is_zero()) {
          pending.erase(it);
        }
      }
    }
    return result;
  }

  /// True iff no rule left side occurs as a subword of `w`.
  bool is_irreducible(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (rule_at(w, pos)) return false;
    }
    return true;
  }

  /// All irreducible words of length <= max_len in degree-lexicographic order.
  std::vector<Word> enumerate_basis(std::size_t max_len) const {
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
      std::vector<Word> next;
      for (const Word& w : layer) {
        for (std::size_t l = 0; l < alphabet_->size(); ++l) {
          Word ext = w;
          ext.push_back(static_cast<Letter>(l));
          if (!has_suffix_match(ext)) next.push_back(std::move(ext));
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  /// Number of irreducible words of each length 0..max_len.
  std::vector<std::size_t> basis_counts(std::size_t max_len) const {
    std::vector<std::size_t> counts(max_len + 1, 0);
    for (const Word& w : enumerate_basis(max_len)) ++counts[w.size()];
    return counts;
  }

  /// Every overlap and inclusion ambiguity between rule left sides, resolved or not.
  std::vector<Ambiguity> ambiguities() const {
    std::vector<Ambiguity> out;
    for (std::size_t s = 0; s < rules_.size(); ++s) {
      const Word& ls = rules_[s].lhs;
      for (std::size_t t = 0; t < rules_.size(); ++t) {
        const Word& lt = rules_[t].lhs;
        // Overlap: ls = AB, lt = BC with A, B, C nonempty.
        for (std::size_t k = 1; k < ls.size() && k < lt.size(); ++k) {
          if (!std::equal(ls.end() - static_cast<std::ptrdiff_t>(k), ls.end(), lt.begin())) continue;
          const Word a(ls.begin(), ls.end() - static_cast<std::ptrdiff_t>(k));
          const Word cpart(lt.begin() + static_cast<std::ptrdiff_t>(k), lt.end());
          Ambiguity amb;
          amb.kind = Ambiguity::Kind::Overlap;
          amb.word = concat(ls, cpart);
          amb.first_rule = s;
          amb.second_rule = t;
          amb.first_reduct = rules_[s].rhs * Element::word(cpart);
          amb.second_reduct = Element::word(a) * rules_[t].rhs;
          resolve(amb);
          out.push_back(std::move(amb));
        }
        // Inclusion: lt is a proper subword of ls.
        if (s != t && lt.size() < ls.size()) {
          for (std::size_t p = 0; p + lt.size() <= ls.size(); ++p) {
            if (!std::equal(lt.begin(), lt.end(), ls.begin() + static_cast<std::ptrdiff_t>(p))) continue;
            Ambiguity amb;
            amb.kind = Ambiguity::Kind::Inclusion;
            amb.word = ls;
            amb.first_rule = s;
            amb.second_rule = t;
            amb.first_reduct = rules_[s].rhs;
            amb.second_reduct =
                Element::word(Word(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(p))) * rules_[t].rhs *
                Element::word(Word(ls.begin() + static_cast<std::ptrdiff_t>(p + lt.size()), ls.end()));
            resolve(amb);
            out.push_back(std::move(amb));
          }
        }
      }
    }
    return out;
  }

  /// Unresolved ambiguities only; an empty result certifies confluence.
  std::vector<Ambiguity> check_confluence() const {
    std::vector<Ambiguity> all = ambiguities();
    std::vector<Ambiguity> bad;
    for (auto& a : all) {
      if (!a.resolvable) bad.push_back(std::move(a));
    }
    return bad;
  }

  /// Same rules with every right side mapped through `f` (e.g. substituting h).
  template <class F>
  ReductionSystem map_rhs(F&& f) const {
    std::vector<Rule> rules;
    rules.reserve(rules_.size());
    for (const auto& r : rules_) rules.push_back({r.lhs, f(r.rhs)});
    return ReductionSystem(alphabet_, std::move(rules), step_budget_);
  }

 private:
  struct Match {
    std::size_t pos;
    std::size_t rule;
  };

  void validate(std::size_t r) const {
    const Rule& rule = rules_[r];
    const Alphabet& a = *alphabet_;
    if (rule.lhs.empty()) throw InvalidRule("rule left side must be a nonempty word");
    for (Letter l : rule.lhs) {
      if (l >= a.size()) throw InvalidRule("rule uses a letter outside the alphabet");
    }
    const std::string name = a.format(rule.lhs);
    for (std::size_t q = 0; q < r; ++q) {
      if (rules_[q].lhs == rule.lhs) throw InvalidRule("two rules share the left side " + name);
    }
    const Grade g = a.grade(rule.lhs);
    DegLexLess less;
    for (const auto& [w, c] : rule.rhs.terms()) {
      for (Letter l : w) {
        if (l >= a.size()) throw InvalidRule("rule uses a letter outside the alphabet");
      }
      if (a.grade(w) != g) {
        throw InvalidRule("rule " + name + " -> " + format(a, rule.rhs) + " is not homogeneous");
      }
      if (!less(w, rule.lhs)) {
        throw InvalidRule("rule " + name + " -> " + format(a, rule.rhs) +
                          " does not decrease in the degree-lexicographic order");
      }
    }
  }

  std::optional<std::size_t> rule_at(const Word& w, std::size_t pos) const {
    for (std::size_t r : by_first_[w[pos]]) {
      const Word& lhs = rules_[r].lhs;
      if (pos + lhs.size() <= w.size() &&
          std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
        return r;
      }
    }
    return std::nullopt;
  }

  bool has_suffix_match(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (std::size_t r : by_first_[w[pos]]) {
        const Word& lhs = rules_[r].lhs;
        if (pos + lhs.size() == w.size() &&
            std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
          return true;
        }
      }
    }
    return false;
  }

  std::optional<Match> find_match(const Word& w, const Strategy& strategy, std::mt19937_64& rng) const {
    switch (strategy.kind) {
      case Strategy::Kind::Leftmost:
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
          if (auto r = rule_at(w, pos)) return Match{pos, *r};
        }
        return std::nullopt;
      case Strategy::Kind::Rightmost:
        for (std::size_t pos = w.size(); pos-- > 0;) {
          if (auto r = rule_at(w, pos)) return Match{pos, *r};
        }
        return std::nullopt;
      case Strategy::Kind::Random: {
        std::vector<Match> all;
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
          for (std::size_t r : by_first_[w[pos]]) {
            const Word& lhs = rules_[r].lhs;
            if (pos + lhs.size() <= w.size() &&
                std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
              all.push_back({pos, r});
            }
          }
        }
        if (all.empty()) return std::nullopt;
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        return all[pick(rng)];
      }
    }
    return std::nullopt;
  }

  void resolve(Ambiguity& amb) const {
    amb.residual = normalize(amb.first_reduct) - normalize(amb.second_reduct);
    amb.resolvable = amb.residual.is_zero();
  }

  std::shared_ptr<const Alphabet> alphabet_;
  std::vector<Rule> rules_;
  std::size_t step_budget_;
  std::vector<std::vector<std::size_t>> by_first_;
};

/// One line per ambiguity: `<overlap word> : <residual>`.
inline std::string format_ambiguities(const Alphabet& alphabet, const std::vector<Ambiguity>& ambs) {
  std::string out;
  for (const auto& a : ambs) {
    out += alphabet.format(a.word) + " : " + format(alphabet, a.residual) + "\n";
  }
  return out;
}

}  // namespace epsalg
