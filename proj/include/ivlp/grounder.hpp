#ifndef IVLP_GROUNDER_HPP
#define IVLP_GROUNDER_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivlp/program.hpp"

namespace ivlp {

class GroundingError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void collect_atom_vars(const Atom& a, std::set<std::string>& vars) {
  for (const auto& t : a.args)
    if (is_variable(t)) vars.insert(t);
}

inline Atom substitute(const Atom& a,
                       const std::map<std::string, std::string>& sub) {
  Atom out;
  out.pred = a.pred;
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) {
    auto it = sub.find(t);
    out.args.push_back(it != sub.end() ? it->second : t);
  }
  return out;
}

}  // namespace detail

/** Ground instantiation P* of a function-free program:

      1. every clause is instantiated over the constants occurring in the
         program (the clause must be safe: each of its variables occurs in
         a positive body literal);
      2. clauses with empty bodies become `head :- true.`;
      3. every base atom heading no clause gains `atom :- false.`.

    The resulting base is the full Herbrand base over the program's
    predicate/arity pairs and constants. Clauses are deduplicated and
    sorted, so grounding is idempotent and rendering is canonical. */
inline Program ground(const Program& input) {
  // Universe: constants textually present anywhere in the program.
  std::set<std::string> constants;
  std::map<std::string, std::size_t> arities;  // pred -> arity
  auto note_atom = [&](const Atom& a) {
    auto [it, inserted] = arities.emplace(a.pred, a.args.size());
    if (!inserted && it->second != a.args.size())
      throw GroundingError("predicate '" + a.pred +
                           "' used with inconsistent arity");
    for (const auto& t : a.args)
      if (!is_variable(t)) constants.insert(t);
  };
  for (const Clause& c : input.clauses) {
    note_atom(c.head);
    for (const Literal& l : c.body)
      if (l.kind == Literal::Kind::Positive || l.kind == Literal::Kind::Negative)
        note_atom(l.atom);
  }

  std::vector<std::string> consts(constants.begin(), constants.end());
  std::vector<Clause> ground_clauses;

  for (const Clause& c : input.clauses) {
    std::set<std::string> vars, safe_vars;
    detail::collect_atom_vars(c.head, vars);
    for (const Literal& l : c.body) {
      if (l.kind == Literal::Kind::Positive) {
        detail::collect_atom_vars(l.atom, safe_vars);
        detail::collect_atom_vars(l.atom, vars);
      } else if (l.kind == Literal::Kind::Negative) {
        detail::collect_atom_vars(l.atom, vars);
      }
    }
    for (const auto& v : vars)
      if (!safe_vars.count(v))
        throw GroundingError("unsafe rule: variable '" + v +
                             "' does not occur in a positive body literal: " +
                             c.to_string());
    if (!vars.empty() && consts.empty())
      throw GroundingError("clause uses variables but the program has no "
                           "constants: " + c.to_string());

    std::vector<std::string> var_list(vars.begin(), vars.end());
    std::vector<std::size_t> pick(var_list.size(), 0);
    while (true) {
      std::map<std::string, std::string> sub;
      for (std::size_t i = 0; i < var_list.size(); ++i)
        sub[var_list[i]] = consts[pick[i]];
      Clause gc;
      gc.head = detail::substitute(c.head, sub);
      for (const Literal& l : c.body) {
        Literal gl = l;
        if (l.kind == Literal::Kind::Positive || l.kind == Literal::Kind::Negative)
          gl.atom = detail::substitute(l.atom, sub);
        gc.body.push_back(std::move(gl));
      }
      if (gc.body.empty()) gc.body.push_back(Literal::true_const());
      ground_clauses.push_back(std::move(gc));

      // next substitution, odometer style
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < consts.size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;  // also exits the var-free single pass
    }
  }

  // Full Herbrand base over the observed predicates and constants.
  std::vector<Atom> base;
  for (const auto& [pred, arity] : arities) {
    std::vector<std::size_t> pick(arity, 0);
    if (arity > 0 && consts.empty()) continue;  // no atoms constructible
    while (true) {
      Atom a;
      a.pred = pred;
      for (std::size_t i = 0; i < arity; ++i) a.args.push_back(consts[pick[i]]);
      base.push_back(std::move(a));
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < consts.size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());

  std::set<Atom> headed;
  for (const Clause& c : ground_clauses) headed.insert(c.head);
  for (const Atom& a : base)
    if (!headed.count(a))
      ground_clauses.push_back(Clause{a, {Literal::false_const()}});

  std::sort(ground_clauses.begin(), ground_clauses.end());
  ground_clauses.erase(
      std::unique(ground_clauses.begin(), ground_clauses.end()),
      ground_clauses.end());

  Program out;
  out.clauses = std::move(ground_clauses);
  out.base = std::move(base);
  return out;
}

}  // namespace ivlp

#endif  // IVLP_GROUNDER_HPP
