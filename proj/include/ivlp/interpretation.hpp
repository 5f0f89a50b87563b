#ifndef IVLP_INTERPRETATION_HPP
#define IVLP_INTERPRETATION_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "ivlp/program.hpp"
#include "ivlp/truth_value.hpp"

namespace ivlp {

/// Total map from the Herbrand base to truth values, stored densely in base
/// order. Index i holds the value of program.base[i]. Default-constructed
/// entries are F_0, so Interpretation(n) is the empty interpretation.
using Interpretation = std::vector<TruthValue>;

inline Interpretation empty_interpretation(const Program& p) {
  return Interpretation(p.base.size(), TruthValue::f(0));
}

/// I || v: indices of the atoms mapped to exactly v, ascending.
inline std::vector<std::size_t> restrict_to(const Interpretation& i,
                                            TruthValue v) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < i.size(); ++a)
    if (i[a] == v) out.push_back(a);
  return out;
}

/// The order-level slice I#alpha, split by polarity.
struct OrderSlice {
  std::vector<std::size_t> atoms_true;   // I || T_alpha
  std::vector<std::size_t> atoms_false;  // I || F_alpha
  std::uint64_t level = 0;

  friend bool operator==(const OrderSlice&, const OrderSlice&) = default;

  bool empty() const { return atoms_true.empty() && atoms_false.empty(); }
};

inline OrderSlice slice(const Interpretation& i, std::uint64_t alpha) {
  OrderSlice s;
  s.level = alpha;
  for (std::size_t a = 0; a < i.size(); ++a) {
    if (i[a].order() != alpha) continue;
    if (i[a].polarity() == TruthValue::Polarity::True)
      s.atoms_true.push_back(a);
    else
      s.atoms_false.push_back(a);
  }
  return s;
}

/// Largest finite order used by i, or 0 if i maps everything to Zero.
inline std::uint64_t max_finite_order(const Interpretation& i) {
  std::uint64_t m = 0;
  for (TruthValue v : i)
    if (!v.is_zero()) m = std::max(m, v.order());
  return m;
}

inline TruthValue eval_literal(const Program& p, const Interpretation& i,
                               const Literal& l) {
  switch (l.kind) {
    case Literal::Kind::TrueConst: return TruthValue::t(0);
    case Literal::Kind::FalseConst: return TruthValue::f(0);
    case Literal::Kind::Positive: return i[p.atom_index(l.atom)];
    default: return i[p.atom_index(l.atom)].negate();
  }
}

/// min over the body's literal values.
inline TruthValue eval_body(const Program& p, const Interpretation& i,
                            const std::vector<Literal>& body) {
  if (body.empty()) throw std::invalid_argument("eval_body: empty body");
  TruthValue m = eval_literal(p, i, body.front());
  for (std::size_t k = 1; k < body.size(); ++k) {
    TruthValue v = eval_literal(p, i, body[k]);
    if (v < m) m = v;
  }
  return m;
}

inline bool satisfies(const Program& p, const Interpretation& i,
                      const Clause& c) {
  return i[p.atom_index(c.head)] >= eval_body(p, i, c.body);
}

inline bool is_model(const Program& p, const Interpretation& i) {
  return std::all_of(p.clauses.begin(), p.clauses.end(),
                     [&](const Clause& c) { return satisfies(p, i, c); });
}

/// I =_alpha J: the interpretations agree on every value of order <= alpha.
inline bool eq_alpha(const Interpretation& i, const Interpretation& j,
                     std::uint64_t alpha) {
  for (std::size_t a = 0; a < i.size(); ++a)
    if (i[a] != j[a] && (i[a].order() <= alpha || j[a].order() <= alpha))
      return false;
  return true;
}

/// I <_alpha J (strict): agreement below alpha, and at level alpha the
/// T-part shrinks or the F-part grows, strictly on at least one side.
inline bool lt_alpha(const Interpretation& i, const Interpretation& j,
                     std::uint64_t alpha) {
  if (alpha > 0 && !eq_alpha(i, j, alpha - 1)) return false;
  OrderSlice si = slice(i, alpha);
  OrderSlice sj = slice(j, alpha);
  bool t_sub = std::includes(sj.atoms_true.begin(), sj.atoms_true.end(),
                             si.atoms_true.begin(), si.atoms_true.end());
  bool f_sup = std::includes(si.atoms_false.begin(), si.atoms_false.end(),
                             sj.atoms_false.begin(), sj.atoms_false.end());
  if (!t_sub || !f_sup) return false;
  return si.atoms_true.size() < sj.atoms_true.size() ||
         si.atoms_false.size() > sj.atoms_false.size();
}

inline bool le_alpha(const Interpretation& i, const Interpretation& j,
                     std::uint64_t alpha) {
  return eq_alpha(i, j, alpha) || lt_alpha(i, j, alpha);
}

/// I <=_infty J. The strict part can only hold at the least level where the
/// slices of I and J differ, so the ordinal quantifier collapses to one
/// finite check.
inline bool le_infty(const Interpretation& i, const Interpretation& j) {
  std::uint64_t first_diff = TruthValue::kInfiniteOrder;
  for (std::size_t a = 0; a < i.size(); ++a)
    if (i[a] != j[a])
      first_diff = std::min(first_diff, std::min(i[a].order(), j[a].order()));
  if (first_diff == TruthValue::kInfiniteOrder) return true;  // i == j
  return lt_alpha(i, j, first_diff);
}

/// Natural-number orders admit no limit ordinals, so every representable
/// interpretation is reasonable. Kept as an executable witness.
inline bool is_reasonable(const Interpretation&) { return true; }

}  // namespace ivlp

#endif  // IVLP_INTERPRETATION_HPP
