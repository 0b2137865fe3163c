#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "vlcodes/codespec.hpp"
#include "vlcodes/completion.hpp"
#include "vlcodes/deciders.hpp"
#include "vlcodes/regex.hpp"
#include "vlcodes/serialize.hpp"

namespace vlc::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kConditionFails = 1;
constexpr int kUsageError = 2;
constexpr int kUnknown = 3;

struct MetricOptions {
  std::string metric;
  unsigned k = 1;
  std::string theta_pairs;
  bool anti = false;
};

void add_metric_options(CLI::App* cmd, MetricOptions& opts, bool required) {
  auto* m = cmd->add_option("--metric", opts.metric, "prefix | suffix | factor | theta")
                ->check(CLI::IsMember({"prefix", "suffix", "factor", "theta"}));
  if (required) m->required();
  cmd->add_option("-k,--k", opts.k, "error tolerance (>= 1)");
  cmd->add_option("--theta", opts.theta_pairs,
                  "letter permutation as x:y pairs, comma separated");
  cmd->add_flag("--anti", opts.anti, "theta is an anti-automorphism");
}

MetricSpec make_metric(const MetricOptions& opts, const Alphabet& alphabet) {
  if (opts.metric == "prefix") return MetricSpec::prefix(opts.k);
  if (opts.metric == "suffix") return MetricSpec::suffix(opts.k);
  if (opts.metric == "factor") return MetricSpec::factor(opts.k);
  return MetricSpec::theta_metric(
      ThetaSpec::parse(alphabet, opts.theta_pairs, opts.anti));
}

json input_json(const CodeSpecFile& spec) {
  json in;
  in["alphabet"] = spec.alphabet.str();
  in["kind"] = spec.is_regex ? "regex" : "words";
  if (spec.is_regex) {
    in["body"] = spec.regex;
  } else {
    json words = json::array();
    for (const auto& w : spec.words) words.push_back(w.str());
    in["body"] = std::move(words);
  }
  return in;
}

json report_json_value(const ConditionReport& r) {
  return json::parse(report_to_json(r));
}

std::string show_word(const Word& w) { return w.empty() ? "eps" : w.str(); }

void print_report_text(std::ostream& out, const ConditionReport& r) {
  out << condition_name(r.condition) << " [" << r.metric.name();
  if (r.metric.kind != MetricSpec::Kind::theta) out << " k=" << r.metric.k;
  out << "]: " << status_name(r.status);
  if (r.witness_pair)
    out << "  witness: (" << show_word(r.witness_pair->first) << ", "
        << show_word(r.witness_pair->second) << ")";
  else if (r.witness_word)
    out << "  witness: " << show_word(*r.witness_word);
  if (!r.notes.empty()) out << "  -- " << r.notes;
  out << "\n";
}

std::size_t sample_bound_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("VLC_SAMPLE_BOUND")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

int emit(std::ostream& out, bool as_json, const json& doc, const std::string& text,
         int code) {
  if (as_json)
    out << doc.dump(2) << "\n";
  else
    out << text;
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"decision toolkit for error detection in variable-length codes"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  // dist
  auto* dist = app.add_subcommand("dist", "distance between two words");
  MetricOptions dist_metric;
  add_metric_options(dist, dist_metric, true);
  std::string dist_alphabet;
  std::vector<std::string> dist_words;
  dist->add_option("--alphabet", dist_alphabet, "alphabet symbols (default: inferred)");
  dist->add_option("words", dist_words, "two words ('eps' for the empty word)")
      ->expected(2);

  // file-based commands
  std::string path;
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("input", path, "code description file")->required();
  };

  auto* is_code = app.add_subcommand("is-code", "decide the code property");
  add_file(is_code);
  auto* measure_cmd = app.add_subcommand("measure", "uniform Bernoulli measure");
  add_file(measure_cmd);
  auto* is_complete_cmd = app.add_subcommand("is-complete", "completeness test");
  add_file(is_complete_cmd);

  auto* check = app.add_subcommand("check", "decide conditions c1..c4");
  std::string which;
  check->add_option("condition", which, "c1 | c2 | c3 | c4 | all")
      ->required()
      ->check(CLI::IsMember({"c1", "c2", "c3", "c4", "all"}));
  MetricOptions check_metric;
  add_metric_options(check, check_metric, true);
  add_file(check);

  auto* embed = app.add_subcommand("embed", "complete a non-maximal independent code");
  MetricOptions embed_metric;
  add_metric_options(embed, embed_metric, true);
  std::size_t sample_bound = sample_bound_from_env(12);
  embed->add_option("--sample-bound", sample_bound,
                    "word-length bound for sampled factor-independence");
  add_file(embed);

  auto* image_cmd = app.add_subcommand("image", "channel image of the code");
  MetricOptions image_metric;
  add_metric_options(image_cmd, image_metric, true);
  bool image_strict = false;
  image_cmd->add_flag("--strict", image_strict,
                      "anti-reflexive image (distinct pairs only)");
  add_file(image_cmd);

  std::vector<const char*> argv;
  argv.push_back("vlcodes");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  bool as_json = format == "json";

  try {
    if (dist->parsed()) {
      std::string letters = dist_alphabet;
      if (letters.empty()) {
        std::set<std::string> symbols;
        for (const auto& w : dist_words)
          if (w != "eps")
            for (const auto& s : utf8_split(w)) symbols.insert(s);
        for (const auto& s : symbols) letters += s;
      }
      Alphabet alphabet(letters);
      MetricSpec metric = make_metric(dist_metric, alphabet);
      Word w1 = Word::parse(alphabet, dist_words[0]);
      Word w2 = Word::parse(alphabet, dist_words[1]);
      std::size_t d = metric.distance(w1, w2);
      json doc;
      doc["command"] = "dist";
      doc["input"] = {{"alphabet", alphabet.str()},
                      {"kind", "pair"},
                      {"body", {w1.str(), w2.str()}}};
      doc["results"] = {{{"distance", d}, {"metric", metric.name()}, {"k", metric.k}}};
      return emit(out, as_json, doc, std::to_string(d) + "\n", kOk);
    }

    CodeSpecFile spec = load_code_spec(path);
    Nfa X = spec.language();
    json doc;
    doc["input"] = input_json(spec);

    if (is_code->parsed()) {
      doc["command"] = "is-code";
      auto sp = sardinas_patterson(X);
      json res;
      res["is_code"] = sp.is_code;
      res["quotient_sets"] = sp.items.size();
      std::string text;
      if (sp.is_code) {
        res["ambiguous_word"] = nullptr;
        text = "code\n";
      } else {
        res["ambiguous_word"] = sp.ambiguous_word->str();
        json f = json::array();
        for (const auto& w : sp.factorizations->first) f.push_back(w.str());
        json g = json::array();
        for (const auto& w : sp.factorizations->second) g.push_back(w.str());
        res["factorizations"] = {std::move(f), std::move(g)};
        text = "not a code; ambiguous word: " + sp.ambiguous_word->str() + "\n";
      }
      doc["results"] = {res};
      return emit(out, as_json, doc, text, sp.is_code ? kOk : kConditionFails);
    }

    if (measure_cmd->parsed()) {
      doc["command"] = "measure";
      auto mu = measure(X);
      json res;
      res["diverges"] = mu.diverges;
      std::string text;
      if (mu.diverges) {
        res["fraction"] = nullptr;
        res["decimal"] = nullptr;
        text = "diverges\n";
      } else {
        res["fraction"] = fraction_string(mu.value);
        res["decimal"] = decimal_string(mu.value, 20);
        text = fraction_string(mu.value) + "\n" + decimal_string(mu.value, 20) + "\n";
      }
      doc["results"] = {res};
      return emit(out, as_json, doc, text, kOk);
    }

    if (is_complete_cmd->parsed()) {
      doc["command"] = "is-complete";
      auto comp = is_complete(X);
      json res;
      res["complete"] = comp.complete;
      res["non_factor"] = comp.complete ? json(nullptr) : json(comp.non_factor->str());
      doc["results"] = {res};
      std::string text = comp.complete
                             ? "complete\n"
                             : "not complete; shortest non-factor: " +
                                   show_word(*comp.non_factor) + "\n";
      return emit(out, as_json, doc, text, comp.complete ? kOk : kConditionFails);
    }

    if (check->parsed()) {
      doc["command"] = "check " + which;
      MetricSpec metric = make_metric(check_metric, spec.alphabet);
      std::vector<ConditionReport> reports;
      if (which == "all") {
        reports = decide_all(X, metric);
      } else if (which == "c1") {
        reports.push_back(decide_c1(X, metric));
      } else if (which == "c2") {
        reports.push_back(decide_c2(X, metric));
      } else if (which == "c3") {
        reports.push_back(decide_c3(X, metric));
      } else {
        reports.push_back(decide_c4(X, metric));
      }
      json results = json::array();
      std::string text;
      for (const auto& r : reports) {
        results.push_back(report_json_value(r));
        std::ostringstream line;
        print_report_text(line, r);
        text += line.str();
      }
      doc["results"] = std::move(results);
      int code = kOk;
      if (which == "all") {
        bool any_unknown =
            std::any_of(reports.begin(), reports.end(), [](const ConditionReport& r) {
              return r.status == Status::unknown_open_problem;
            });
        code = any_unknown ? kUnknown : kOk;
      } else {
        switch (reports[0].status) {
          case Status::holds: code = kOk; break;
          case Status::fails: code = kConditionFails; break;
          case Status::unknown_open_problem: code = kUnknown; break;
        }
      }
      return emit(out, as_json, doc, text, code);
    }

    if (embed->parsed()) {
      doc["command"] = "embed";
      MetricSpec metric = make_metric(embed_metric, spec.alphabet);
      CompletionRecipe recipe = build_completion(X, metric);
      VerificationReport v = verify_completion(recipe, metric, sample_bound);
      json res;
      res["recipe"] = json::parse(recipe_to_json(recipe));
      json ver;
      ver["ok"] = v.ok;
      ver["failed_property"] = v.failed_property;
      ver["measure"] = v.measure_converged ? json(fraction_string(v.measure_value))
                                           : json(nullptr);
      ver["notes"] = v.notes;
      res["verification"] = std::move(ver);
      doc["results"] = {res};
      std::string text = "z0 = " + show_word(recipe.z0) + "\nz  = " +
                         show_word(recipe.z) + "\nflavor = " +
                         flavor_name(recipe.flavor) + "\nverification: " +
                         (v.ok ? "ok" : "FAILED (" + v.failed_property + ")") +
                         "\n" + v.notes + "\n";
      return emit(out, as_json, doc, text, v.ok ? kOk : kConditionFails);
    }

    if (image_cmd->parsed()) {
      doc["command"] = "image";
      MetricSpec metric = make_metric(image_metric, spec.alphabet);
      Nfa img = [&]() -> Nfa {
        switch (metric.kind) {
          case MetricSpec::Kind::prefix: {
            auto kind = image_strict ? RelationSpec::Kind::prefix_k_strict
                                     : RelationSpec::Kind::prefix_k;
            return image(build_relation(X.alphabet, {kind, metric.k, {}}), X);
          }
          case MetricSpec::Kind::suffix: {
            auto kind = image_strict ? RelationSpec::Kind::prefix_k_strict
                                     : RelationSpec::Kind::prefix_k;
            return nfa_reverse(
                image(build_relation(X.alphabet, {kind, metric.k, {}}), nfa_reverse(X)));
          }
          case MetricSpec::Kind::factor:
            if (image_strict)
              throw std::invalid_argument(
                  "no transducer for the strict factor relation is known");
            return image(
                build_relation(X.alphabet, {RelationSpec::Kind::factor_k, metric.k, {}}),
                X);
          case MetricSpec::Kind::theta: {
            const ThetaSpec& t = *metric.theta;
            if (!t.anti) {
              auto kind = image_strict ? RelationSpec::Kind::theta_strict
                                       : RelationSpec::Kind::theta;
              return image(build_relation(X.alphabet, {kind, 1, t}), X);
            }
            if (image_strict)
              throw std::invalid_argument(
                  "the strict image of an anti-automorphism channel is not a "
                  "regular language in general");
            return nfa_union(X, theta_language_image(X, t));
          }
        }
        throw std::logic_error("bad metric kind");
      }();
      json res;
      res["automaton"] = json::parse(nfa_to_json(img));
      json sample = json::array();
      auto words = first_words(img, 20, 12);
      for (const auto& w : words) sample.push_back(w.str());
      res["sample"] = std::move(sample);
      doc["results"] = {res};
      std::string text = "sample (shortlex, up to 20 words):\n";
      for (const auto& w : words) text += "  " + show_word(w) + "\n";
      return emit(out, as_json, doc, text, kOk);
    }

    err << "error: no command\n";
    return kUsageError;
  } catch (const CompletionInconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kUnknown;
  } catch (const SpecParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const RegexError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace vlc::cli
