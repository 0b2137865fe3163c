// Acceptance suite: end-to-end checks with pinned expectations and time
// budgets. Prints one PASS/FAIL line per criterion; the exit code is the
// number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "helpers.hpp"
#include "vlcodes/completion.hpp"
#include "vlcodes/deciders.hpp"
#include "vlcodes/regex.hpp"

using namespace vlc;
using vlctest::all_words;
using vlctest::W;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_budget = elapsed < budget_seconds;
  bool pass = ok && in_budget;
  if (!pass) ++g_failures;
  std::printf("%s  criterion %d: %s (%.2fs of %.0fs budget)%s%s\n",
              pass ? "PASS" : "FAIL", number, label.c_str(), elapsed, budget_seconds,
              detail.empty() ? "" : " -- ", detail.c_str());
}

Nfa words_nfa(const Alphabet& a, std::initializer_list<const char*> ws) {
  std::vector<Word> words;
  for (const char* s : ws) words.push_back(W(a, s));
  return words_language(a, words);
}

bool expect_status(const ConditionReport& r, Status s, std::string& detail) {
  if (r.status == s) return true;
  detail += std::string(condition_name(r.condition)) + " is " +
            status_name(r.status) + " instead of " + status_name(s) + "; ";
  return false;
}

std::string temp_spec(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p);
  f << body;
  return p.string();
}

}  // namespace

int main() {
  Alphabet ab("ab");

  criterion(1, "profile of {a,ba,bb} under the prefix metric, k=1", 1.0,
            [&](std::string& detail) {
              Nfa x = words_nfa(ab, {"a", "ba", "bb"});
              auto reports = decide_all(x, MetricSpec::prefix(1));
              bool ok = expect_status(reports[0], Status::holds, detail) &&
                        expect_status(reports[1], Status::fails, detail) &&
                        expect_status(reports[2], Status::holds, detail) &&
                        expect_status(reports[3], Status::fails, detail);
              if (ok) {
                const auto& pair = *reports[1].witness_pair;
                if (prefix_distance(pair.first, pair.second) > 2) {
                  detail += "c2 witness pair is too far apart; ";
                  ok = false;
                }
                bool in_code = contains(x, pair.first) && contains(x, pair.second);
                if (!in_code || pair.first == pair.second) {
                  detail += "c2 witness pair is not a distinct codeword pair; ";
                  ok = false;
                }
              }
              return ok;
            });

  criterion(2, "bifix code (ab*a)|(ba*b): exact measure one and full profile", 1.0,
            [&](std::string& detail) {
              Nfa z = compile_regex(ab, "(ab*a)|(ba*b)");
              auto mu = measure(z);
              if (mu.diverges || mu.value != Rational(1)) {
                detail += "measure is not exactly 1; ";
                return false;
              }
              auto reports = decide_all(z, MetricSpec::prefix(1));
              return expect_status(reports[0], Status::holds, detail) &&
                     expect_status(reports[1], Status::holds, detail) &&
                     expect_status(reports[2], Status::holds, detail) &&
                     expect_status(reports[3], Status::fails, detail);
            });

  criterion(3, "factor-metric profile of {a,ba,bb}, k=1", 5.0,
            [&](std::string& detail) {
              Nfa x = words_nfa(ab, {"a", "ba", "bb"});
              auto c1 = decide_c1(x, MetricSpec::factor(1));
              auto c4 = decide_c4(x, MetricSpec::factor(1));
              bool ok = expect_status(c1, Status::fails, detail) &&
                        expect_status(c4, Status::fails, detail);
              if (ok) {
                const auto& p = *c1.witness_pair;
                bool involves = (p.first.str() == "a" && p.second.str() == "ba") ||
                                (p.first.str() == "ba" && p.second.str() == "a");
                if (!involves) {
                  detail += "c1 witness is " + p.first.str() + "," + p.second.str() +
                            " rather than the adjacent pair; ";
                  ok = false;
                }
              }
              return ok;
            });

  criterion(4, "automorphism and anti-automorphism profiles", 5.0,
            [&](std::string& detail) {
              ThetaSpec swap = ThetaSpec::parse(ab, "a:b,b:a", false);
              auto r1 = decide_all(compile_regex(ab, "a*b"), MetricSpec::theta_metric(swap));
              bool ok = expect_status(r1[0], Status::holds, detail) &&
                        expect_status(r1[1], Status::holds, detail) &&
                        expect_status(r1[2], Status::holds, detail) &&
                        expect_status(r1[3], Status::fails, detail);

              ThetaSpec anti = ThetaSpec::parse(ab, "a:b,b:a", true);
              auto r3 = decide_all(compile_regex(ab, "aaa*b"), MetricSpec::theta_metric(anti));
              ok = expect_status(r3[0], Status::holds, detail) &&
                   expect_status(r3[1], Status::holds, detail) &&
                   expect_status(r3[2], Status::fails, detail) &&
                   expect_status(r3[3], Status::holds, detail) && ok;

              Alphabet dna("ACGT");
              ThetaSpec wc = ThetaSpec::parse(dna, "A:T,T:A,C:G,G:C", true);
              Nfa z = words_nfa(dna,
                                {"A", "C", "GA", "GG", "GT", "GCA", "GCC", "GCG", "GCT"});
              auto mu = measure(z);
              if (mu.diverges || mu.value != Rational(3, 4)) {
                detail += "Watson-Crick measure is not exactly 3/4; ";
                ok = false;
              }
              auto rz = decide_all(z, MetricSpec::theta_metric(wc));
              ok = expect_status(rz[2], Status::fails, detail) &&
                   expect_status(rz[3], Status::fails, detail) && ok;
              return ok;
            });

  criterion(5, "transducer acceptance equals direct distances on all pairs up to length 5",
            30.0, [&](std::string& detail) {
              auto words = all_words(ab, 5);
              struct Case {
                RelationSpec spec;
                MetricSpec metric;
                unsigned k;
              };
              std::vector<Case> cases = {
                  {{RelationSpec::Kind::prefix_k, 1, {}}, MetricSpec::prefix(1), 1},
                  {{RelationSpec::Kind::prefix_k, 2, {}}, MetricSpec::prefix(2), 2},
                  {{RelationSpec::Kind::suffix_1, 1, {}}, MetricSpec::suffix(1), 1},
                  {{RelationSpec::Kind::factor_k, 1, {}}, MetricSpec::factor(1), 1},
                  {{RelationSpec::Kind::factor_k, 2, {}}, MetricSpec::factor(2), 2},
              };
              std::size_t mismatches = 0, pairs = 0;
              for (const auto& c : cases) {
                Transducer t = build_relation(ab, c.spec);
                for (const auto& x : words)
                  for (const auto& y : words) {
                    ++pairs;
                    bool expected = c.metric.distance(x, y) <= c.k;
                    if (relates(t, x, y) != expected) ++mismatches;
                  }
              }
              detail = std::to_string(pairs) + " pair checks, " +
                       std::to_string(mismatches) + " mismatches";
              return mismatches == 0;
            });

  criterion(6, "doubling and iteration laws verified by brute force", 30.0,
            [&](std::string& detail) {
              auto words = all_words(ab, 5);
              auto candidates = all_words(ab, 7);
              std::size_t violations = 0;
              for (unsigned k = 1; k <= 2; ++k) {
                for (const auto& x : words)
                  for (const auto& y : words) {
                    bool doubled = prefix_distance(x, y) <= 2 * k;
                    bool via_mid = false;
                    for (const auto& mid : candidates) {
                      if (prefix_distance(x, mid) <= k && prefix_distance(mid, y) <= k) {
                        via_mid = true;
                        break;
                      }
                    }
                    if (doubled != via_mid) ++violations;
                  }
              }
              MetricSpec factor1 = MetricSpec::factor(1);
              for (unsigned k = 1; k <= 2; ++k)
                for (const auto& w : words)
                  if (neighborhood(w, factor1, k) != vlctest::iterate_ball(w, factor1, k))
                    ++violations;
              detail = std::to_string(violations) + " violations";
              return violations == 0;
            });

  criterion(7, "completion pipeline on three non-complete codes", 30.0,
            [&](std::string& detail) {
              struct Case {
                const char* label;
                Nfa x;
                MetricSpec m;
              };
              Alphabet dna("ACGT");
              ThetaSpec wc = ThetaSpec::parse(dna, "A:T,T:A,C:G,G:C", true);
              std::vector<Case> cases;
              cases.push_back({"prefix", words_nfa(ab, {"aa"}), MetricSpec::prefix(1)});
              cases.push_back({"factor", words_nfa(ab, {"aa"}), MetricSpec::factor(1)});
              cases.push_back({"theta_anti", words_nfa(dna, {"AC"}),
                               MetricSpec::theta_metric(wc)});
              bool ok = true;
              for (const auto& c : cases) {
                auto start = std::chrono::steady_clock::now();
                auto recipe = build_completion(c.x, c.m);
                auto v = verify_completion(recipe, c.m, 12);
                double secs = std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
                if (!v.ok) {
                  detail += std::string(c.label) + " failed at " + v.failed_property + "; ";
                  ok = false;
                }
                if (v.measure_converged && v.measure_value != Rational(1)) {
                  detail += std::string(c.label) + " has measure " +
                            fraction_string(v.measure_value) + "; ";
                  ok = false;
                }
                if (secs >= 10.0) {
                  detail += std::string(c.label) + " took too long; ";
                  ok = false;
                }
              }
              return ok;
            });

  criterion(8, "quotient-set decision vs brute-force search on 200 random codes", 30.0,
            [&](std::string& detail) {
              std::mt19937 rng(424242);
              auto pool = all_words(ab, 4);
              pool.erase(pool.begin());
              std::size_t disagreements = 0, non_codes = 0;
              for (int round = 0; round < 200; ++round) {
                std::shuffle(pool.begin(), pool.end(), rng);
                std::size_t count = 1 + rng() % 5;
                std::vector<Word> code(pool.begin(), pool.begin() + count);
                auto sp = sardinas_patterson(words_language(ab, code));

                // brute force: expand all products up to length 8
                std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> seen;
                bool ambiguous = false;
                std::vector<std::pair<Word, std::vector<std::size_t>>> frontier{
                    {Word::epsilon(ab), {}}};
                while (!frontier.empty() && !ambiguous) {
                  std::vector<std::pair<Word, std::vector<std::size_t>>> next;
                  for (const auto& [text, parts] : frontier) {
                    for (std::size_t i = 0; i < code.size() && !ambiguous; ++i) {
                      Word grown = text.concat(code[i]);
                      if (grown.size() > 8) continue;
                      auto ps = parts;
                      ps.push_back(i);
                      auto it = seen.find(grown.letters());
                      if (it == seen.end()) {
                        seen.emplace(grown.letters(), ps);
                        next.push_back({grown, ps});
                      } else if (it->second != ps) {
                        ambiguous = true;
                      }
                    }
                    if (ambiguous) break;
                  }
                  frontier = std::move(next);
                }

                if (ambiguous && sp.is_code) ++disagreements;
                if (!sp.is_code) {
                  ++non_codes;
                  // the reconstructed witness must genuinely be ambiguous
                  Word acc1 = Word::epsilon(ab), acc2 = Word::epsilon(ab);
                  for (const auto& w : sp.factorizations->first) acc1 = acc1.concat(w);
                  for (const auto& w : sp.factorizations->second) acc2 = acc2.concat(w);
                  if (acc1 != *sp.ambiguous_word || acc2 != *sp.ambiguous_word ||
                      sp.factorizations->first == sp.factorizations->second)
                    ++disagreements;
                }
              }

              auto bad = sardinas_patterson(words_nfa(ab, {"a", "ab", "ba"}));
              bool named_case = !bad.is_code && bad.ambiguous_word.has_value();
              if (named_case) {
                Word acc1 = Word::epsilon(ab), acc2 = Word::epsilon(ab);
                for (const auto& w : bad.factorizations->first) acc1 = acc1.concat(w);
                for (const auto& w : bad.factorizations->second) acc2 = acc2.concat(w);
                named_case = acc1 == *bad.ambiguous_word && acc2 == *bad.ambiguous_word &&
                             bad.factorizations->first != bad.factorizations->second;
              }
              detail = std::to_string(non_codes) + " non-codes among 200, " +
                       std::to_string(disagreements) + " disagreements";
              return disagreements == 0 && named_case;
            });

  criterion(9, "factor-metric independence of an infinite code surfaces as open", 5.0,
            [&](std::string& detail) {
              auto path = temp_spec("vlc_acc_z.code", "alphabet: ab\nkind: regex\n(ab*a)|(ba*b)\n");
              std::ostringstream out, err;
              int code = vlc::cli::run(
                  {"--format", "json", "check", "c1", "--metric", "factor", "-k", "1", path},
                  out, err);
              if (code != 3) {
                detail = "exit code " + std::to_string(code) + " instead of 3";
                return false;
              }
              if (out.str().find("unknown_open_problem") == std::string::npos) {
                detail = "status missing from the report";
                return false;
              }
              return true;
            });

  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}
