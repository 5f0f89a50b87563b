#ifndef IVLP_PROGRAM_HPP
#define IVLP_PROGRAM_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace ivlp {

/// A (possibly non-ground) atom: predicate plus argument terms. Arguments
/// starting with an uppercase letter are variables; after grounding only
/// constants remain.
struct Atom {
  std::string pred;
  std::vector<std::string> args;

  friend auto operator<=>(const Atom&, const Atom&) = default;

  std::string to_string() const {
    if (args.empty()) return pred;
    std::string out = pred + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      out += args[i];
    }
    return out + ")";
  }
};

inline bool is_variable(const std::string& term) {
  return !term.empty() && term[0] >= 'A' && term[0] <= 'Z';
}

/// Body element: a signed atom or one of the distinguished body constants
/// `true` / `false` introduced by the grounding normalization.
struct Literal {
  enum class Kind { Positive, Negative, TrueConst, FalseConst };

  Kind kind = Kind::Positive;
  Atom atom;  // meaningful only for Positive/Negative

  static Literal pos(Atom a) { return {Kind::Positive, std::move(a)}; }
  static Literal neg(Atom a) { return {Kind::Negative, std::move(a)}; }
  static Literal true_const() { return {Kind::TrueConst, {}}; }
  static Literal false_const() { return {Kind::FalseConst, {}}; }

  friend auto operator<=>(const Literal&, const Literal&) = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::TrueConst: return "true";
      case Kind::FalseConst: return "false";
      case Kind::Negative: return "not " + atom.to_string();
      default: return atom.to_string();
    }
  }
};

struct Clause {
  Atom head;
  std::vector<Literal> body;  // empty only before grounding (a fact)

  friend auto operator<=>(const Clause&, const Clause&) = default;

  std::string to_string() const {
    if (body.empty()) return head.to_string() + ".";
    std::string out = head.to_string() + " :- ";
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i) out += ", ";
      out += body[i].to_string();
    }
    return out + ".";
  }
};

/** A normal logic program. Before grounding `base` is empty; a grounded
    program carries its finite Herbrand base (sorted, duplicate-free) and
    guarantees that every base atom heads at least one clause. */
struct Program {
  std::vector<Clause> clauses;
  std::vector<Atom> base;

  bool grounded() const { return !base.empty() || clauses.empty(); }

  std::size_t atom_index(const Atom& a) const {
    auto it = std::lower_bound(base.begin(), base.end(), a);
    if (it == base.end() || *it != a)
      throw std::out_of_range("atom not in Herbrand base: " + a.to_string());
    return static_cast<std::size_t>(it - base.begin());
  }

  bool in_base(const Atom& a) const {
    return std::binary_search(base.begin(), base.end(), a);
  }

  /// Clause indices grouped by head atom index. Post-grounding every entry
  /// is nonempty.
  std::vector<std::vector<std::size_t>> clauses_by_head() const {
    std::vector<std::vector<std::size_t>> idx(base.size());
    for (std::size_t c = 0; c < clauses.size(); ++c)
      idx[atom_index(clauses[c].head)].push_back(c);
    return idx;
  }

  /// Canonical text form: one clause per line, sorted clause order.
  std::string to_string() const {
    std::string out;
    for (const Clause& c : clauses) {
      out += c.to_string();
      out += "\n";
    }
    return out;
  }
};

}  // namespace ivlp

#endif  // IVLP_PROGRAM_HPP
