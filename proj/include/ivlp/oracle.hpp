#ifndef IVLP_ORACLE_HPP
#define IVLP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "ivlp/grounder.hpp"
#include "ivlp/interpretation.hpp"
#include "ivlp/program.hpp"
#include "ivlp/truth_value.hpp"

namespace ivlp {

// Brute-force verification layer. Everything here quantifies over a finite
// truncation of the truth domain; results are certificates "at truncation
// k", not proofs over the full domain.

class ResourceGuardError : public std::runtime_error {
public:
  ResourceGuardError(std::uint64_t candidates, std::uint64_t limit)
      : std::runtime_error("enumeration guard tripped: " +
                           std::to_string(candidates) + " candidates exceed " +
                           std::to_string(limit)),
        candidates_(candidates) {}

  std::uint64_t candidates() const { return candidates_; }

private:
  std::uint64_t candidates_;
};

constexpr std::uint64_t kDefaultCandidateGuard = 5'000'000;

/// Finite projection of the truth domain: F_0..F_k, 0, T_k..T_0 in
/// ascending order (2k+3 values).
struct TruncatedDomain {
  std::uint32_t max_order = 0;
  std::vector<TruthValue> values;

  static TruncatedDomain make(std::uint32_t k) {
    TruncatedDomain d;
    d.max_order = k;
    for (std::uint32_t i = 0; i <= k; ++i) d.values.push_back(TruthValue::f(i));
    d.values.push_back(TruthValue::zero());
    for (std::uint32_t i = k + 1; i-- > 0;) d.values.push_back(TruthValue::t(i));
    return d;
  }
};

struct ModelSet {
  TruncatedDomain domain;
  std::vector<Interpretation> models;  // lexicographic candidate order
};

/// All interpretations over the truncated domain that are models of p.
/// Refuses (ResourceGuardError) rather than hang when the candidate count
/// exceeds the guard.
inline ModelSet enumerate_models(const Program& p, std::uint32_t k,
                                 std::uint64_t max_candidates =
                                     kDefaultCandidateGuard) {
  ModelSet ms;
  ms.domain = TruncatedDomain::make(k);
  const std::size_t n = p.base.size();
  const std::uint64_t dsz = ms.domain.values.size();

  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < n; ++i) {
    // saturating multiply so the guard message can report the true count
    if (candidates > UINT64_MAX / dsz) {
      candidates = UINT64_MAX;
      break;
    }
    candidates *= dsz;
  }
  if (candidates > max_candidates)
    throw ResourceGuardError(candidates, max_candidates);

  std::vector<std::size_t> pick(n, 0);
  Interpretation cand(n, ms.domain.values.empty() ? TruthValue::f(0)
                                                  : ms.domain.values[0]);
  while (true) {
    if (is_model(p, cand)) ms.models.push_back(cand);
    std::size_t i = n;
    while (i-- > 0) {  // rightmost digit fastest: lexicographic over atoms
      if (++pick[i] < dsz) {
        cand[i] = ms.domain.values[pick[i]];
        break;
      }
      pick[i] = 0;
      cand[i] = ms.domain.values[0];
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return ms;
}

struct MinimalityResult {
  bool minimal = false;
  std::optional<Interpretation> counterexample;  // first model not above m
};

/// Checks that m is <=_infty every model in the truncated enumeration.
/// Necessary-condition certificate: passing at truncation k does not bound
/// deeper models, failing produces a concrete witness.
inline MinimalityResult verify_minimum(const Program& p,
                                       const Interpretation& m,
                                       std::uint32_t k,
                                       std::uint64_t max_candidates =
                                           kDefaultCandidateGuard) {
  ModelSet ms = enumerate_models(p, k, max_candidates);
  for (const Interpretation& n : ms.models)
    if (!le_infty(m, n)) return {false, n};
  return {true, std::nullopt};
}

/// The model-filtering sequence S_0 ⊇ S_1 ⊇ ...: at each level keep the
/// models whose level slice has exactly the unanimous T part and the
/// anywhere-seen F part of the previous set. Stops at the first level
/// whose target slice is empty; the survivors, with all deeper values
/// collapsed to Zero, are expected to form the singleton {M_P}.
struct IntersectionResult {
  std::uint32_t k = 0;
  std::size_t model_count = 0;                      // |M_k|
  std::vector<std::vector<Interpretation>> stages;  // S_0 .. S_delta
  std::uint64_t delta = 0;
  std::vector<Interpretation> final_models;         // zeroed, deduplicated

  bool singleton() const { return final_models.size() == 1; }
};

inline IntersectionResult intersection_sequence(const Program& p,
                                                std::uint32_t k,
                                                std::uint64_t max_candidates =
                                                    kDefaultCandidateGuard) {
  ModelSet ms = enumerate_models(p, k, max_candidates);
  IntersectionResult res;
  res.k = k;
  res.model_count = ms.models.size();

  std::vector<Interpretation> pool = std::move(ms.models);
  for (std::uint64_t alpha = 0;; ++alpha) {
    // Target slice at this level over the current pool.
    std::vector<std::size_t> and_t, or_f;
    for (std::size_t a = 0; a < p.base.size(); ++a) {
      bool all_t = !pool.empty(), any_f = false;
      for (const Interpretation& m : pool) {
        if (m[a] != TruthValue::t(static_cast<std::uint32_t>(alpha)))
          all_t = false;
        if (m[a] == TruthValue::f(static_cast<std::uint32_t>(alpha)))
          any_f = true;
      }
      if (all_t) and_t.push_back(a);
      if (any_f) or_f.push_back(a);
    }
    std::vector<Interpretation> next;
    for (const Interpretation& m : pool) {
      OrderSlice s = slice(m, alpha);
      if (s.atoms_true == and_t && s.atoms_false == or_f) next.push_back(m);
    }
    res.stages.push_back(next);
    pool = std::move(next);
    if (and_t.empty() && or_f.empty()) {
      res.delta = alpha;
      break;
    }
    if (alpha > p.base.size() + k + 1)
      throw std::logic_error("intersection_sequence: runaway level");
  }

  for (const Interpretation& m : pool) {
    Interpretation z;
    z.reserve(m.size());
    for (TruthValue v : m)
      z.push_back(v.order() < res.delta ? v : TruthValue::zero());
    res.final_models.push_back(std::move(z));
  }
  std::sort(res.final_models.begin(), res.final_models.end());
  res.final_models.erase(
      std::unique(res.final_models.begin(), res.final_models.end()),
      res.final_models.end());
  return res;
}

/// Deterministic random propositional program: a fixed function of the
/// seed, normalized by the grounder (headless atoms get `:- false.`).
inline Program random_program(std::uint64_t seed, std::uint32_t n_atoms,
                              std::uint32_t n_clauses,
                              std::uint32_t max_body_len, double neg_prob) {
  std::mt19937_64 rng(seed);
  // Draw via modulo on the raw 64-bit stream; std::uniform_int_distribution
  // is implementation-defined and would break the determinism contract.
  auto draw = [&](std::uint64_t bound) { return rng() % bound; };
  auto coin = [&](double prob) {
    return static_cast<double>(draw(1u << 24)) / (1u << 24) < prob;
  };

  auto atom = [](std::uint32_t i) { return Atom{"a" + std::to_string(i), {}}; };

  Program p;
  for (std::uint32_t c = 0; c < n_clauses; ++c) {
    Clause cl;
    cl.head = atom(static_cast<std::uint32_t>(draw(n_atoms)));
    std::uint32_t len = 1 + static_cast<std::uint32_t>(draw(max_body_len));
    for (std::uint32_t l = 0; l < len; ++l) {
      Atom a = atom(static_cast<std::uint32_t>(draw(n_atoms)));
      cl.body.push_back(coin(neg_prob) ? Literal::neg(std::move(a))
                                       : Literal::pos(std::move(a)));
    }
    p.clauses.push_back(std::move(cl));
  }
  // Mention every atom so the grounder's base covers all n_atoms.
  for (std::uint32_t i = 0; i < n_atoms; ++i)
    if (std::none_of(p.clauses.begin(), p.clauses.end(),
                     [&](const Clause& c) { return c.head.pred == "a" + std::to_string(i); })) {
      // covered by adding an explicit `ai :- false.` before grounding
      p.clauses.push_back(Clause{atom(i), {Literal::false_const()}});
    }
  return ground(p);
}

}  // namespace ivlp

#endif  // IVLP_ORACLE_HPP
