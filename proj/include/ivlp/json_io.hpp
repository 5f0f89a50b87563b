#ifndef IVLP_JSON_IO_HPP
#define IVLP_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ivlp/engine.hpp"
#include "ivlp/interpretation.hpp"
#include "ivlp/oracle.hpp"
#include "ivlp/program.hpp"

namespace ivlp {

// JSON encodings used by the CLI and the golden-trace fixtures. Atoms are
// rendered in sorted base order so output is deterministic byte for byte.

using json = nlohmann::ordered_json;

inline json interpretation_to_json(const Program& p, const Interpretation& i) {
  json obj = json::object();
  for (std::size_t a = 0; a < p.base.size(); ++a)
    obj[p.base[a].to_string()] = i[a].to_string();
  return obj;
}

inline json three_valued_to_json(const Program& p,
                                 const std::vector<ThreeValued>& i) {
  json obj = json::object();
  for (std::size_t a = 0; a < p.base.size(); ++a)
    obj[p.base[a].to_string()] = to_string(i[a]);
  return obj;
}

inline json atom_list_to_json(const Program& p,
                              const std::vector<std::size_t>& atoms) {
  json arr = json::array();
  for (std::size_t a : atoms) arr.push_back(p.base[a].to_string());
  return arr;
}

inline json solve_trace_to_json(const Program& p, const SolveTrace& tr,
                                bool with_stages) {
  json obj = json::object();
  obj["depth"] = tr.depth;
  obj["model"] = interpretation_to_json(p, tr.model);
  obj["wfm"] = three_valued_to_json(p, collapse_model(tr.model));
  if (with_stages) {
    json stages = json::array();
    for (const StageRecord& st : tr.stages) {
      json s = json::object();
      s["level"] = st.level;
      json its = json::array();
      for (const Interpretation& it : st.iterates)
        its.push_back(interpretation_to_json(p, it));
      s["iterates"] = its;
      s["stabilized_true"] = atom_list_to_json(p, st.stabilized_true);
      s["stabilized_false"] = atom_list_to_json(p, st.stabilized_false);
      stages.push_back(std::move(s));
    }
    obj["stages"] = std::move(stages);
  }
  return obj;
}

/// Reads an interpretation object {atom: value-string}. The map must be
/// total over the program's base and mention nothing else.
inline Interpretation interpretation_from_json(const Program& p,
                                               const json& obj) {
  if (!obj.is_object())
    throw std::runtime_error("interpretation must be a JSON object");
  Interpretation out(p.base.size(), TruthValue::f(0));
  std::vector<bool> seen(p.base.size(), false);
  for (const auto& [key, val] : obj.items()) {
    Atom a;
    auto paren = key.find('(');
    if (paren == std::string::npos) {
      a.pred = key;
    } else {
      if (key.back() != ')') throw std::runtime_error("bad atom: " + key);
      a.pred = key.substr(0, paren);
      std::string args = key.substr(paren + 1, key.size() - paren - 2);
      std::size_t start = 0;
      while (start <= args.size()) {
        auto comma = args.find(',', start);
        if (comma == std::string::npos) {
          a.args.push_back(args.substr(start));
          break;
        }
        a.args.push_back(args.substr(start, comma - start));
        start = comma + 1;
      }
    }
    if (!p.in_base(a)) throw std::runtime_error("unknown atom: " + key);
    auto v = TruthValue::parse(val.get<std::string>());
    if (!v)
      throw std::runtime_error("bad truth value for " + key + ": " +
                               val.get<std::string>());
    std::size_t idx = p.atom_index(a);
    out[idx] = *v;
    seen[idx] = true;
  }
  for (std::size_t a = 0; a < p.base.size(); ++a)
    if (!seen[a])
      throw std::runtime_error("interpretation misses atom: " +
                               p.base[a].to_string());
  return out;
}

}  // namespace ivlp

#endif  // IVLP_JSON_IO_HPP
