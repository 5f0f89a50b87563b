#ifndef IVLP_WFS_HPP
#define IVLP_WFS_HPP

#include <vector>

#include "ivlp/program.hpp"
#include "ivlp/truth_value.hpp"

namespace ivlp {

// Independent well-founded solver via van Gelder's alternating fixpoint.
// Used to cross-validate the collapse of the infinite-valued model; it
// shares no staging logic with the engine.

/// Atoms considered true, as a membership mask over the base.
using TwoValuedSet = std::vector<bool>;

/// Gelfond-Lifschitz reduct: drop every clause whose body negates an atom
/// of s, then drop the remaining negative literals. A body emptied this way
/// becomes `true`.
inline Program reduct(const Program& p, const TwoValuedSet& s) {
  Program out;
  out.base = p.base;
  for (const Clause& c : p.clauses) {
    Clause rc;
    rc.head = c.head;
    bool blocked = false;
    for (const Literal& l : c.body) {
      if (l.kind == Literal::Kind::Negative) {
        if (s[p.atom_index(l.atom)]) {
          blocked = true;
          break;
        }
      } else {
        rc.body.push_back(l);
      }
    }
    if (blocked) continue;
    if (rc.body.empty()) rc.body.push_back(Literal::true_const());
    out.clauses.push_back(std::move(rc));
  }
  return out;
}

/// Least two-valued Herbrand model of a negation-free program, by naive
/// bottom-up saturation.
inline TwoValuedSet least_model(const Program& p) {
  TwoValuedSet truth(p.base.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& c : p.clauses) {
      std::size_t h = p.atom_index(c.head);
      if (truth[h]) continue;
      bool fires = true;
      for (const Literal& l : c.body) {
        if (l.kind == Literal::Kind::TrueConst) continue;
        if (l.kind == Literal::Kind::FalseConst ||
            !truth[p.atom_index(l.atom)]) {
          fires = false;
          break;
        }
      }
      if (fires) {
        truth[h] = true;
        changed = true;
      }
    }
  }
  return truth;
}

/// Gamma(s) = least model of the reduct by s. Antimonotone; Gamma^2 is
/// monotone.
inline TwoValuedSet gamma(const Program& p, const TwoValuedSet& s) {
  return least_model(reduct(p, s));
}

/// Well-founded model: iterate Gamma^2 from the empty set up to its least
/// fixpoint K*. True atoms are K*, false atoms those outside Gamma(K*).
inline std::vector<ThreeValued> well_founded(const Program& p) {
  TwoValuedSet k(p.base.size(), false);
  while (true) {
    TwoValuedSet next = gamma(p, gamma(p, k));
    if (next == k) break;
    k = std::move(next);
  }
  TwoValuedSet upper = gamma(p, k);
  std::vector<ThreeValued> out(p.base.size(), ThreeValued::Undefined);
  for (std::size_t a = 0; a < p.base.size(); ++a) {
    if (k[a])
      out[a] = ThreeValued::True;
    else if (!upper[a])
      out[a] = ThreeValued::False;
  }
  return out;
}

}  // namespace ivlp

#endif  // IVLP_WFS_HPP
