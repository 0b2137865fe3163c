#include "vlcodes/completion.hpp"

#include <algorithm>
#include <stdexcept>

namespace vlc {

const char* flavor_name(CompletionFlavor f) {
  switch (f) {
    case CompletionFlavor::generic_er: return "generic_er";
    case CompletionFlavor::prefix_pk: return "prefix_pk";
    case CompletionFlavor::factor_fk: return "factor_fk";
    case CompletionFlavor::theta_anti: return "theta_anti";
    case CompletionFlavor::theta_auto: return "theta_auto";
  }
  return "?";
}

namespace {

std::uint32_t least_other_letter(const Alphabet& a, std::uint32_t avoid) {
  for (std::uint32_t l = 0; l < a.size(); ++l)
    if (l != avoid) return l;
  throw std::logic_error("alphabet has a single letter");
}

Word pad_seed(Word z0, std::size_t min_len, bool avoid_unary) {
  while (z0.size() < min_len) z0 = z0.append(0);
  if (avoid_unary) {
    bool unary = !z0.empty();
    for (std::size_t i = 1; i < z0.size(); ++i) unary = unary && z0[i] == z0[0];
    if (unary) z0 = z0.append(least_other_letter(z0.alphabet(), z0[0]));
  }
  return z0;
}

Nfa non_factor_language(const Nfa& X) {
  return complement(factor_closure(nfa_star(X)));
}

// z0 · a · b^{|z0|} with a the first letter of z0 and b the least other
// letter; overlapping-free and still outside F(X*).
Word anchor_from_seed(const Word& z0) {
  std::uint32_t a = z0[0];
  std::uint32_t b = least_other_letter(z0.alphabet(), a);
  Word z = z0.append(a);
  for (std::size_t i = 0; i < z0.size(); ++i) z = z.append(b);
  return z;
}

CompletionRecipe assemble(const Nfa& X, Word z0, Word z, CompletionFlavor flavor) {
  const Alphabet& a = X.alphabet;
  Nfa anchor = word_language(z);
  Nfa all = universal_language(a);
  Nfa with_anchor = nfa_concat(nfa_concat(all, anchor), all);
  Nfa u = difference(all, nfa_union(nfa_star(X), with_anchor));
  Nfa y = nfa_concat(anchor, nfa_star(nfa_concat(u, anchor)));
  Nfa z_lang = nfa_union(X, y);
  return CompletionRecipe{std::move(z0), std::move(z), std::move(u), std::move(y),
                          std::move(z_lang), flavor};
}

CompletionRecipe reverse_recipe(const Nfa& X, const CompletionRecipe& r) {
  return CompletionRecipe{r.z0.reversed(),       r.z.reversed(),
                          nfa_reverse(r.U),      nfa_reverse(r.Y),
                          nfa_union(X, nfa_reverse(r.Y)), r.flavor};
}

RelationCheck independence_check(const Nfa& Z, const MetricSpec& m) {
  switch (m.kind) {
    case MetricSpec::Kind::prefix: {
      auto rel = build_relation(Z.alphabet, {RelationSpec::Kind::prefix_k_strict, m.k, {}});
      return restricted_emptiness(rel, Z, Z);
    }
    case MetricSpec::Kind::suffix: {
      Nfa zr = nfa_reverse(Z);
      auto rel = build_relation(Z.alphabet, {RelationSpec::Kind::prefix_k_strict, m.k, {}});
      auto rc = restricted_emptiness(rel, zr, zr);
      if (rc.witness)
        rc.witness = {rc.witness->first.reversed(), rc.witness->second.reversed()};
      return rc;
    }
    case MetricSpec::Kind::theta: {
      const ThetaSpec& t = *m.theta;
      if (!t.anti) {
        auto rel = build_relation(Z.alphabet, {RelationSpec::Kind::theta_strict, 1, t});
        return restricted_emptiness(rel, Z, Z);
      }
      auto fp = all_fixed_points(intersect(Z, theta_language_image(Z, t)), t);
      if (fp.all_fixed) return {true, std::nullopt};
      return {false, std::make_pair(theta_apply_inverse(*fp.witness, t), *fp.witness)};
    }
    case MetricSpec::Kind::factor:
      throw std::logic_error("factor independence is sampled, not decided");
  }
  throw std::logic_error("bad metric kind");
}

}  // namespace

Word find_non_factor(const Nfa& X, std::size_t min_len, bool avoid_unary) {
  auto shortest = shortest_word(non_factor_language(X));
  if (!shortest)
    throw std::invalid_argument("X is complete: every word is a factor of X*");
  return pad_seed(*shortest, min_len, avoid_unary);
}

CompletionRecipe build_completion(const Nfa& X, const MetricSpec& m) {
  {
    auto sp = sardinas_patterson(X);
    if (!sp.is_code)
      throw NotACodeError("completion requires a code; ambiguous word: " +
                          (sp.ambiguous_word ? sp.ambiguous_word->str() : "?"));
  }
  if (is_complete(X).complete)
    throw std::invalid_argument("X is already complete; nothing to embed");
  {
    auto c1 = decide_c1(X, m);
    if (c1.status == Status::fails)
      throw std::invalid_argument(
          "X is not independent for this metric; the embedding premise fails");
    // unknown (factor metric, infinite code): proceed, verification samples
  }

  switch (m.kind) {
    case MetricSpec::Kind::prefix: {
      Word z0 = find_non_factor(X, std::max<std::size_t>(m.k, 1), false);
      return assemble(X, z0, anchor_from_seed(z0), CompletionFlavor::prefix_pk);
    }
    case MetricSpec::Kind::suffix: {
      Nfa xr = nfa_reverse(X);
      Word z0 = find_non_factor(xr, std::max<std::size_t>(m.k, 1), false);
      auto mirrored = assemble(xr, z0, anchor_from_seed(z0), CompletionFlavor::prefix_pk);
      return reverse_recipe(X, mirrored);
    }
    case MetricSpec::Kind::factor: {
      Word z0 = find_non_factor(X, std::max<std::size_t>(m.k, 1), false);
      Word z = anchor_from_seed(z0);
      // a^{|z|} b z, with a the first letter of z0 and b the least other
      std::uint32_t a = z0[0];
      std::uint32_t b = least_other_letter(X.alphabet, a);
      std::vector<std::uint32_t> letters(z.size(), a);
      letters.push_back(b);
      letters.insert(letters.end(), z.letters().begin(), z.letters().end());
      Word z1(X.alphabet, std::move(letters));
      return assemble(X, z0, z1, CompletionFlavor::factor_fk);
    }
    case MetricSpec::Kind::theta: {
      const ThetaSpec& t = *m.theta;
      if (t.anti) {
        Word z0 = find_non_factor(X, 2, true);
        unsigned n = t.order();
        Word z2 = Word::epsilon(X.alphabet);
        for (unsigned i = 0; i < n; ++i) z2 = z2.concat(theta_apply(z0, t, i));
        std::uint32_t a = z0[0];
        std::uint32_t b = least_other_letter(X.alphabet, a);
        z2 = z2.append(a);
        for (std::size_t i = 0; i < static_cast<std::size_t>(n) * z0.size(); ++i)
          z2 = z2.append(b);
        return assemble(X, z0, z2, CompletionFlavor::theta_anti);
      }
      // Automorphism: the generic construction plus exact post-verification,
      // retrying over non-factor seeds in shortlex order.
      Nfa pool = non_factor_language(X);
      auto first = shortest_word(pool);
      if (!first)
        throw std::invalid_argument("X is complete: every word is a factor of X*");
      auto seeds = first_words(pool, 16, first->size() + 8);
      for (const auto& seed : seeds) {
        Word z0 = pad_seed(seed, 1, false);
        auto recipe = assemble(X, z0, anchor_from_seed(z0), CompletionFlavor::theta_auto);
        auto rel = build_relation(X.alphabet, {RelationSpec::Kind::theta_strict, 1, t});
        if (restricted_emptiness(rel, recipe.Z, recipe.Z).empty) return recipe;
      }
      throw CompletionInconclusive(
          "no verified independent completion within 16 seed retries");
    }
  }
  throw std::logic_error("bad metric kind");
}

VerificationReport verify_completion(const CompletionRecipe& r, const MetricSpec& m,
                                     std::size_t sample_bound) {
  VerificationReport report;
  {
    auto mu = measure(r.Z);
    report.measure_converged = !mu.diverges;
    report.measure_value = mu.value;
    report.notes = mu.diverges ? "measure of Z diverges"
                               : "mu(Z) = " + fraction_string(mu.value);
  }

  auto sp = sardinas_patterson(r.Z);
  if (!sp.is_code) {
    report.failed_property = "code";
    report.witness_word = sp.ambiguous_word;
    return report;
  }
  auto comp = is_complete(r.Z);
  if (!comp.complete) {
    report.failed_property = "complete";
    report.witness_word = comp.non_factor;
    return report;
  }
  if (m.kind == MetricSpec::Kind::factor) {
    auto words = enumerate_words(r.Z, sample_bound);
    for (const auto& x : words)
      for (const auto& y : words)
        if (x != y && factor_distance(x, y) <= m.k) {
          report.failed_property = "independent";
          report.witness_pair = {x, y};
          return report;
        }
    report.notes += "; factor independence sampled on all words up to length " +
                    std::to_string(sample_bound);
  } else {
    auto rc = independence_check(r.Z, m);
    if (!rc.empty) {
      report.failed_property = "independent";
      report.witness_pair = rc.witness;
      return report;
    }
  }
  report.ok = true;
  return report;
}

}  // namespace vlc
