#include "vlcodes/serialize.hpp"

#include <json.hpp>

namespace vlc {

namespace {

using nlohmann::json;

json word_json(const Word& w) { return w.str(); }

json nfa_json(const Nfa& a) {
  json doc;
  doc["alphabet"] = a.alphabet.str();
  doc["states"] = a.state_count;
  doc["initial"] = a.initial;
  doc["final"] = a.accepting;
  json arcs = json::array();
  for (const auto& arc : a.arcs) {
    json item = json::array();
    item.push_back(arc.from);
    item.push_back(arc.symbol == kEpsilon ? "" : a.alphabet.symbol(arc.symbol));
    item.push_back(arc.to);
    arcs.push_back(std::move(item));
  }
  doc["transitions"] = std::move(arcs);
  return doc;
}

json report_json(const ConditionReport& r) {
  json doc;
  doc["condition"] = condition_name(r.condition);
  doc["metric"] = r.metric.name();
  doc["k"] = r.metric.k;
  doc["status"] = status_name(r.status);
  if (r.witness_pair)
    doc["witness"] = {word_json(r.witness_pair->first), word_json(r.witness_pair->second)};
  else if (r.witness_word)
    doc["witness"] = word_json(*r.witness_word);
  else
    doc["witness"] = nullptr;
  doc["notes"] = r.notes;
  return doc;
}

}  // namespace

std::string nfa_to_json(const Nfa& a, int indent) { return nfa_json(a).dump(indent); }

std::string transducer_to_json(const Transducer& t, int indent) {
  json doc;
  doc["alphabet"] = t.alphabet.str();
  doc["states"] = t.state_count;
  doc["initial"] = t.initial;
  doc["final"] = t.accepting;
  json arcs = json::array();
  for (const auto& arc : t.arcs) {
    json item = json::array();
    item.push_back(arc.from);
    item.push_back(arc.in == kEpsilon ? "" : t.alphabet.symbol(arc.in));
    item.push_back(arc.out == kEpsilon ? "" : t.alphabet.symbol(arc.out));
    item.push_back(arc.to);
    arcs.push_back(std::move(item));
  }
  doc["transitions"] = std::move(arcs);
  return doc.dump(indent);
}

std::string report_to_json(const ConditionReport& r, int indent) {
  return report_json(r).dump(indent);
}

std::string recipe_to_json(const CompletionRecipe& r, int indent) {
  json doc;
  doc["flavor"] = flavor_name(r.flavor);
  doc["z0"] = r.z0.str();
  doc["z"] = r.z.str();
  doc["U"] = nfa_json(r.U);
  doc["Y"] = nfa_json(r.Y);
  doc["Z"] = nfa_json(r.Z);
  return doc.dump(indent);
}

}  // namespace vlc
