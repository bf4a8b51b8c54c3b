#include "braidlex/export.hpp"

#include <ostream>

#include <json.hpp>

namespace braidlex {

std::string to_json(const Automaton& a, int indent) {
  nlohmann::ordered_json states = nlohmann::ordered_json::array();
  for (const auto& c : a.states()) {
    nlohmann::ordered_json segments = nlohmann::ordered_json::array();
    for (const auto& seg : c.segments) segments.push_back({seg.left, seg.right});
    states.push_back({{"i", c.i},
                      {"j", c.j},
                      {"k", c.k},
                      {"S", segments},
                      {"final_letter", final_letter(c)}});
  }
  nlohmann::ordered_json transitions = nlohmann::ordered_json::array();
  for (StateIndex p = 0; p < static_cast<StateIndex>(a.size()); ++p) {
    for (Letter r = 1; r <= a.n(); ++r) {
      if (auto q = a.step(p, r)) transitions.push_back({p, r, *q});
    }
  }
  nlohmann::ordered_json doc;
  doc["n"] = a.n();
  doc["initial"] = a.initial();
  doc["states"] = std::move(states);
  doc["transitions"] = std::move(transitions);
  return doc.dump(indent);
}

void write_dot(std::ostream& out, const Automaton& a) {
  out << "digraph gamma_" << a.n() << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  out << "  start [shape=point];\n";
  out << "  start -> s" << a.initial() << ";\n";
  for (StateIndex p = 0; p < static_cast<StateIndex>(a.size()); ++p) {
    out << "  s" << p << " [label=\"" << to_string(a.state(p)) << "\"];\n";
  }
  for (StateIndex p = 0; p < static_cast<StateIndex>(a.size()); ++p) {
    for (Letter r = 1; r <= a.n(); ++r) {
      if (auto q = a.step(p, r)) {
        out << "  s" << p << " -> s" << *q << " [label=\"a" << r << "\"];\n";
      }
    }
  }
  out << "}\n";
}

}  // namespace braidlex
