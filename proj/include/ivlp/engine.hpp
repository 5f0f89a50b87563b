#ifndef IVLP_ENGINE_HPP
#define IVLP_ENGINE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ivlp/interpretation.hpp"
#include "ivlp/program.hpp"
#include "ivlp/truth_value.hpp"

namespace ivlp {

/// Consecutive iterates failed the <=_alpha check. Signals a caller bug:
/// the stage operator was started from an interpretation that does not
/// generate an alpha-chain.
class AlphaChainError : public std::logic_error {
  using std::logic_error::logic_error;
};

/// Immediate consequence operator: T_P(I)(p) is the lub of the body values
/// of p's clauses under I. Atoms heading no clause get lub of nothing, F_0;
/// grounding guarantees this case does not arise.
inline Interpretation tp_step(const Program& p, const Interpretation& i) {
  Interpretation out(i.size(), TruthValue::f(0));
  for (const Clause& c : p.clauses) {
    TruthValue v = eval_body(p, i, c.body);
    std::size_t h = p.atom_index(c.head);
    if (v > out[h]) out[h] = v;
  }
  return out;
}

/// One stage of the approximation sequence: the alpha-chain of T_P iterates
/// from `start` and its limit interpretation.
struct StageRecord {
  std::uint64_t level = 0;
  /// The computed chain prefix, n = 0 (start) through the iterate at which
  /// the order-level slices were detected stable. Populated only when the
  /// caller asked for trace retention.
  std::vector<Interpretation> iterates;
  std::vector<std::size_t> stabilized_true;   // union of iterate || T_alpha
  std::vector<std::size_t> stabilized_false;  // intersection of || F_alpha
  Interpretation result;

  bool stabilized_nothing() const {
    return stabilized_true.empty() && stabilized_false.empty();
  }
};

/** The stage operator: iterates T_P from `start` until the pair of order-
    alpha slices of consecutive iterates is unchanged. Along the chain the
    T_alpha part only grows and the F_alpha part only shrinks, and each
    evolves as a function of the previous slice pair plus the frozen lower
    orders, so one-step stability is a genuine fixpoint of the slice
    dynamics (the higher-order values themselves may oscillate forever).

    The limit interpretation keeps values of order below alpha, assigns
    T_alpha to the slice union, F_alpha to the slice intersection, and
    F_{alpha+1} to everything else. */
inline StageRecord omega_iterate(const Program& p, const Interpretation& start,
                                 std::uint64_t alpha,
                                 bool keep_iterates = false) {
  StageRecord st;
  st.level = alpha;
  if (keep_iterates) st.iterates.push_back(start);

  Interpretation prev = start;
  OrderSlice prev_slice = slice(prev, alpha);
  std::vector<std::size_t> union_t = prev_slice.atoms_true;
  std::vector<std::size_t> inter_f = prev_slice.atoms_false;

  const std::size_t cap = 2 * p.base.size() + 2;
  std::size_t n = 0;
  while (true) {
    if (++n > cap)
      throw std::logic_error(
          "omega_iterate: iteration cap exceeded (engine bug)");
    Interpretation next = tp_step(p, prev);
    if (!le_alpha(prev, next, alpha))
      throw AlphaChainError(
          "omega_iterate: iterates are not an alpha-chain at level " +
          std::to_string(alpha));
    if (keep_iterates) st.iterates.push_back(next);

    OrderSlice ns = slice(next, alpha);
    std::vector<std::size_t> merged;
    std::set_union(union_t.begin(), union_t.end(), ns.atoms_true.begin(),
                   ns.atoms_true.end(), std::back_inserter(merged));
    union_t = std::move(merged);
    std::vector<std::size_t> kept;
    std::set_intersection(inter_f.begin(), inter_f.end(),
                          ns.atoms_false.begin(), ns.atoms_false.end(),
                          std::back_inserter(kept));
    inter_f = std::move(kept);

    bool stable = ns == prev_slice;
    prev = std::move(next);
    prev_slice = std::move(ns);
    if (stable) break;
  }

  st.stabilized_true = std::move(union_t);
  st.stabilized_false = std::move(inter_f);

  st.result.reserve(start.size());
  auto in = [](const std::vector<std::size_t>& v, std::size_t a) {
    return std::binary_search(v.begin(), v.end(), a);
  };
  for (std::size_t a = 0; a < start.size(); ++a) {
    if (start[a].order() < alpha)
      st.result.push_back(start[a]);
    else if (in(st.stabilized_true, a))
      st.result.push_back(TruthValue::t(static_cast<std::uint32_t>(alpha)));
    else if (in(st.stabilized_false, a))
      st.result.push_back(TruthValue::f(static_cast<std::uint32_t>(alpha)));
    else
      st.result.push_back(TruthValue::f(static_cast<std::uint32_t>(alpha) + 1));
  }
  return st;
}

struct SolveOptions {
  bool trace = false;              // retain every iterate of every stage
  bool verify_extra_stage = false; // debug: stage depth+1 must stabilize nothing
};

struct SolveTrace {
  std::vector<StageRecord> stages;  // levels 0 .. depth
  std::uint64_t depth = 0;          // first level stabilizing nothing
  Interpretation model;             // M_P
};

/// Computes the approximation sequence M_0, M_1, ... and the minimum model:
/// stages run until the first level delta stabilizing no atom, and every
/// atom still in flux at that point collapses to Zero.
inline SolveTrace solve(const Program& p, SolveOptions opts = {}) {
  SolveTrace tr;
  Interpretation cur = empty_interpretation(p);
  for (std::uint64_t alpha = 0;; ++alpha) {
    if (alpha > p.base.size())
      throw std::logic_error("solve: depth exceeded |base| (engine bug)");
    StageRecord st = omega_iterate(p, cur, alpha, opts.trace);
    cur = st.result;
    bool done = st.stabilized_nothing();
    tr.stages.push_back(std::move(st));
    if (done) {
      tr.depth = alpha;
      break;
    }
  }

  tr.model.reserve(cur.size());
  for (TruthValue v : cur)
    tr.model.push_back(v.order() < tr.depth ? v : TruthValue::zero());

  if (opts.verify_extra_stage) {
    StageRecord extra = omega_iterate(p, cur, tr.depth + 1, false);
    if (!extra.stabilized_nothing())
      throw std::logic_error("solve: stage beyond depth stabilized atoms");
  }
  return tr;
}

/// Pointwise collapse of M_P to the three-valued (well-founded) model.
inline std::vector<ThreeValued> collapse_model(const Interpretation& m) {
  std::vector<ThreeValued> out;
  out.reserve(m.size());
  for (TruthValue v : m) out.push_back(v.collapse());
  return out;
}

}  // namespace ivlp

#endif  // IVLP_ENGINE_HPP
