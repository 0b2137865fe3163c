#ifndef VLCODES_SERIALIZE_HPP
#define VLCODES_SERIALIZE_HPP

#include <string>

#include "vlcodes/completion.hpp"
#include "vlcodes/deciders.hpp"
#include "vlcodes/nfa.hpp"
#include "vlcodes/transducer.hpp"

namespace vlc {

// JSON documents; keys are emitted in sorted order, so equal values
// serialize to identical bytes.
std::string nfa_to_json(const Nfa& a, int indent = -1);
std::string transducer_to_json(const Transducer& t, int indent = -1);
std::string report_to_json(const ConditionReport& r, int indent = -1);
std::string recipe_to_json(const CompletionRecipe& r, int indent = -1);

}  // namespace vlc

#endif  // VLCODES_SERIALIZE_HPP
