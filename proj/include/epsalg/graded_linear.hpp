#pragma once

// Graded matrices over an epsilon-algebra (right modules, column vectors, matrices acting on
// the left), the three ranks of a free module, and invariant-basis-number probes.

#include <map>
#include <string>
#include <vector>

#include "epsalg/errors.hpp"
#include "epsalg/presets.hpp"
#include "epsalg/report.hpp"

namespace epsalg {

/// epsilon-rank n : G -> N, with the derived super-rank p|q and total rank.
struct RankProfile {
  std::map<Grade, std::size_t> epsilon_rank;
  std::size_t even = 0;
  std::size_t odd = 0;

  std::size_t total() const { return even + odd; }
  std::string super_rank() const { return std::to_string(even) + "|" + std::to_string(odd); }

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [g, k] : epsilon_rank) {
      out += (first ? "" : ", ") + g.str() + ":" + std::to_string(k);
      first = false;
    }
    return out + "} super " + super_rank() + " total " + std::to_string(total());
  }

  friend bool operator==(const RankProfile& a, const RankProfile& b) {
    return a.epsilon_rank == b.epsilon_rank && a.even == b.even && a.odd == b.odd;
  }
};

inline RankProfile rank_profile(const CommutationFactor& f, const std::vector<Grade>& basis_grades) {
  RankProfile r;
  for (const auto& g : basis_grades) {
    ++r.epsilon_rank[g];
    (f.parity(g) == Parity::Even ? r.even : r.odd) += 1;
  }
  return r;
}

/// Dense matrix of a grade-gamma morphism between free modules with the given basis grades.
class GradedMatrix {
 public:
  GradedMatrix(std::vector<Grade> rows, std::vector<Grade> cols, Grade degree, std::vector<Element> entries)
      : rows_(std::move(rows)), cols_(std::move(cols)), degree_(std::move(degree)), entries_(std::move(entries)) {
    if (entries_.size() != rows_.size() * cols_.size()) throw InvalidArgument("matrix entry count mismatch");
  }

  static GradedMatrix identity(const std::vector<Grade>& grades, const Grade& zero) {
    std::vector<Element> e(grades.size() * grades.size());
    for (std::size_t i = 0; i < grades.size(); ++i) e[i * grades.size() + i] = Element::one();
    return GradedMatrix(grades, grades, zero, std::move(e));
  }

  const std::vector<Grade>& rows() const { return rows_; }
  const std::vector<Grade>& cols() const { return cols_; }
  const Grade& degree() const { return degree_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }

  const Element& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_.size() + c); }
  Element& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_.size() + c); }

  /// Every word in entry (r, c) has grade k with k + cols[c] = rows[r] + degree.
  bool respects_grading(const Alphabet& alphabet) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        for (const auto& [w, coeff] : at(r, c).terms()) {
          if (alphabet.grade(w) + cols_[c] != rows_[r] + degree_) return false;
        }
      }
    }
    return true;
  }

  bool is_identity() const {
    if (rows_.size() != cols_.size()) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        if (at(r, c) != (r == c ? Element::one() : Element())) return false;
      }
    }
    return true;
  }

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.degree_ == b.degree_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<Grade> rows_;
  std::vector<Grade> cols_;
  Grade degree_;
  std::vector<Element> entries_;
};

/// P * Q with entries normalized in `alg`; P's column grades must equal Q's row grades.
inline GradedMatrix gm_mul(const Algebra& alg, const GradedMatrix& P, const GradedMatrix& Q) {
  if (P.cols() != Q.rows()) throw GradeMismatch("matrix product needs P's column grades to equal Q's row grades");
  std::vector<Element> e(P.row_count() * Q.col_count());
  for (std::size_t r = 0; r < P.row_count(); ++r) {
    for (std::size_t c = 0; c < Q.col_count(); ++c) {
      Element sum;
      for (std::size_t k = 0; k < P.col_count(); ++k) sum += P.at(r, k) * Q.at(k, c);
      e[r * Q.col_count() + c] = alg.normalize(sum);
    }
  }
  return GradedMatrix(P.rows(), Q.cols(), P.degree() + Q.degree(), std::move(e));
}

/// PQ = I and QP = I after normalization.
inline bool invertible_pair(const Algebra& alg, const GradedMatrix& P, const GradedMatrix& Q) {
  if (P.cols() != Q.rows() || Q.cols() != P.rows()) return false;
  return gm_mul(alg, P, Q).is_identity() && gm_mul(alg, Q, P).is_identity();
}

/// Which invariance an augmentation probe establishes, i.e. which graded components the
/// augmentation must kill: nothing, the odd grades, or every nonzero grade.
enum class Augmentation { TotalRank, SuperRank, EpsilonRank };

/// First pair of nonempty irreducible words (length <= max_len) on which the coefficient-of-1
/// projection fails to be multiplicative, as "u*v", or empty if none.
inline std::string augmentation_defect(const Algebra& alg, std::size_t max_len) {
  const auto basis = alg.system().enumerate_basis(max_len);
  for (const Word& u : basis) {
    if (u.empty()) continue;
    for (const Word& v : basis) {
      if (v.empty()) continue;
      const Element uv = alg.normalize(Element::word(concat(u, v)));
      if (!uv.coefficient({}).is_zero()) {
        return alg.alphabet().format(u) + "*" + alg.alphabet().format(v) + " = " + alg.format(uv);
      }
    }
  }
  return {};
}

/// Transfers invariant-basis-number from K along the coefficient-of-1 projection pi:
/// checks that P, Q exchange two homogeneous bases, that pi is multiplicative, that pi(P),
/// pi(Q) are block diagonal for the grade partition of `aug`, that each diagonal block pair is
/// mutually inverse over K, and compares the rank profiles of the two bases.
inline Report ibn_probe(const Algebra& alg, Augmentation aug, const GradedMatrix& P, const GradedMatrix& Q,
                        std::size_t multiplicativity_len = 2) {
  Report report("ibn");
  if (!invertible_pair(alg, P, Q)) {
    report.add("basis-exchange", false, "not a basis exchange");
    return report;
  }
  report.add("basis-exchange", true);

  const std::string defect = augmentation_defect(alg, multiplicativity_len);
  if (!defect.empty()) {
    report.add("augmentation", false, "coefficient-of-1 projection is not multiplicative: " + defect);
    return report;
  }
  report.add("augmentation", true, "coefficient-of-1 projection is multiplicative up to length " +
                                       std::to_string(multiplicativity_len));

  const CommutationFactor& f = alg.factor();
  auto block = [&](const Grade& g) -> std::string {
    switch (aug) {
      case Augmentation::TotalRank: return "all";
      case Augmentation::SuperRank: return f.parity(g) == Parity::Even ? "even" : "odd";
      case Augmentation::EpsilonRank: return g.str();
    }
    return {};
  };
  auto pi = [](const Element& e) { return e.coefficient({}); };

  // pi(P) is (rows = old basis) x (cols = new basis); pi(Q) the reverse.
  bool off_diagonal_zero = true;
  auto scan = [&](const GradedMatrix& M) {
    for (std::size_t r = 0; r < M.row_count(); ++r) {
      for (std::size_t c = 0; c < M.col_count(); ++c) {
        if (block(M.rows()[r]) != block(M.cols()[c]) && !pi(M.at(r, c)).is_zero()) off_diagonal_zero = false;
      }
    }
  };
  scan(P);
  scan(Q);
  report.add("off-diagonal", off_diagonal_zero, "pi kills blocks between different grade classes");

  std::map<std::string, std::vector<std::size_t>> old_idx, new_idx;
  for (std::size_t r = 0; r < P.row_count(); ++r) old_idx[block(P.rows()[r])].push_back(r);
  for (std::size_t c = 0; c < P.col_count(); ++c) new_idx[block(P.cols()[c])].push_back(c);
  std::map<std::string, int> keys;
  for (const auto& [k, v] : old_idx) keys[k] = 0;
  for (const auto& [k, v] : new_idx) keys[k] = 0;

  for (const auto& [key, unused] : keys) {
    const auto& rows = old_idx[key];
    const auto& cols = new_idx[key];
    // pi(P_gg) pi(Q_gg) = I on the old indices, pi(Q_gg) pi(P_gg) = I on the new ones.
    bool ok = true;
    for (std::size_t a = 0; a < rows.size() && ok; ++a) {
      for (std::size_t b = 0; b < rows.size() && ok; ++b) {
        HPoly s;
        for (std::size_t k : cols) s += pi(P.at(rows[a], k)) * pi(Q.at(k, rows[b]));
        ok = s == HPoly(a == b ? 1 : 0);
      }
    }
    for (std::size_t a = 0; a < cols.size() && ok; ++a) {
      for (std::size_t b = 0; b < cols.size() && ok; ++b) {
        HPoly s;
        for (std::size_t k : rows) s += pi(Q.at(cols[a], k)) * pi(P.at(k, cols[b]));
        ok = s == HPoly(a == b ? 1 : 0);
      }
    }
    report.add("diagonal-block " + key, ok,
               std::to_string(rows.size()) + " old vs " + std::to_string(cols.size()) + " new basis vectors");
  }

  const RankProfile old_profile = rank_profile(f, P.rows());
  const RankProfile new_profile = rank_profile(f, P.cols());
  bool equal = false;
  switch (aug) {
    case Augmentation::TotalRank: equal = old_profile.total() == new_profile.total(); break;
    case Augmentation::SuperRank: equal = old_profile.even == new_profile.even && old_profile.odd == new_profile.odd; break;
    case Augmentation::EpsilonRank: equal = old_profile == new_profile; break;
  }
  report.add("profiles", equal, old_profile.str() + " vs " + new_profile.str());
  return report;
}

}  // namespace epsalg
