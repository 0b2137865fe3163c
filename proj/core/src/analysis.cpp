#include "vlcodes/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace vlc {

std::string fraction_string(const Rational& r) {
  return r.get_num().get_str() + (r.get_den() == 1 ? "" : "/" + r.get_den().get_str());
}

std::string decimal_string(const Rational& r, std::size_t digits) {
  mpz_class num = r.get_num(), den = r.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  mpz_class whole = num / den, rem = num % den;
  std::string out = (negative ? "-" : "") + whole.get_str();
  if (digits == 0) return out;
  out += '.';
  for (std::size_t i = 0; i < digits; ++i) {
    rem *= 10;
    out += (mpz_class(rem / den)).get_str();
    rem %= den;
  }
  return out;
}

namespace {

Nfa plus_language(const Alphabet& a) {
  Nfa n(a);
  auto q0 = n.add_state();
  auto q1 = n.add_state();
  n.mark_initial(q0);
  n.mark_accepting(q1);
  for (std::uint32_t l = 0; l < a.size(); ++l) {
    n.add_arc(q0, l, q1);
    n.add_arc(q1, l, q1);
  }
  return n;
}

Nfa fixed_length_language(const Alphabet& a, std::size_t n) {
  Nfa out(a);
  auto q = out.add_state();
  out.mark_initial(q);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = out.add_state();
    for (std::uint32_t l = 0; l < a.size(); ++l) out.add_arc(q, l, r);
    q = r;
  }
  out.mark_accepting(q);
  return out;
}

struct SpStep {
  bool via_quotient_of_x;  // true: v·u in X; false: x·u in U_{m-1}
  Word v;                  // the element of U_{m-1}
  Word x;                  // the codeword consumed at this step
};

Word concat_all(const std::vector<Word>& words, const Alphabet& a) {
  Word acc = Word::epsilon(a);
  for (const auto& w : words) acc = acc.concat(w);
  return acc;
}

}  // namespace

SpSequence sardinas_patterson(const Nfa& X) {
  const Alphabet& a = X.alphabet;
  Word eps = Word::epsilon(a);
  if (contains(X, eps))
    throw std::invalid_argument("a set containing the empty word is not a code");

  SpSequence result;
  std::vector<Nfa> seq;
  seq.push_back(difference(left_quotient(X, X), epsilon_language(a)));
  result.items.push_back(minimal_dfa(seq[0]));

  std::map<std::string, std::size_t> seen;
  seen.emplace(canonical_key(result.items[0]), 0);

  // every U_n is a union of left quotients of X, so at most 2^|Q| languages
  std::uint32_t q_count = minimal_dfa(X).state_count;
  std::size_t cap = q_count >= 48 ? static_cast<std::size_t>(-1)
                                  : (static_cast<std::size_t>(1) << q_count) + 2;

  std::optional<std::size_t> failure;
  for (std::size_t n = 0; !failure; ++n) {
    Nfa next = nfa_union(left_quotient(seq[n], X), left_quotient(X, seq[n]));
    Dfa d = minimal_dfa(next);
    seq.push_back(next);
    result.items.push_back(d);
    if (contains(next, eps)) {
      failure = n + 1;
      break;
    }
    auto key = canonical_key(d);
    if (seen.count(key)) {
      result.is_code = true;
      return result;
    }
    seen.emplace(std::move(key), n + 1);
    if (n + 1 > cap)
      throw std::logic_error("quotient-set sequence exceeded its termination bound");
  }

  // Not a code: walk the dangling-suffix chain back from the empty word, then
  // replay it into two factorizations of one word.
  result.is_code = false;
  result.failure_index = failure;

  std::vector<SpStep> steps(*failure + 1, SpStep{false, eps, eps});
  Word u = eps;
  for (std::size_t m = *failure; m >= 1; --m) {
    Nfa from_quot = intersect(seq[m - 1], right_quotient_word(X, u));
    if (auto v = shortest_word(from_quot)) {
      steps[m] = {true, *v, v->concat(u)};
    } else {
      Nfa from_x = intersect(X, right_quotient_word(seq[m - 1], u));
      auto x = shortest_word(from_x);
      if (!x) throw std::logic_error("dangling-suffix chain broke during replay");
      steps[m] = {false, x->concat(u), *x};
    }
    u = steps[m].v;
  }
  // u is now in U_0: some pair x0 != y0 in X with x0·u = y0
  auto x0 = shortest_word(intersect(X, right_quotient_word(X, u)));
  if (!x0) throw std::logic_error("dangling-suffix chain broke at U_0");
  std::vector<Word> left{*x0}, right{x0->concat(u)};

  for (std::size_t m = 1; m <= *failure; ++m) {
    if (steps[m].via_quotient_of_x) {
      // v·u_m is a codeword: append it to the short side and swap roles
      left.push_back(steps[m].x);
      std::swap(left, right);
    } else {
      // x·u_m lands back in U_{m-1}: same orientation
      left.push_back(steps[m].x);
    }
  }

  Word w_left = concat_all(left, a), w_right = concat_all(right, a);
  if (w_left != w_right || left == right)
    throw std::logic_error("ambiguous-word reconstruction is inconsistent");
  for (const auto& w : left)
    if (!contains(X, w)) throw std::logic_error("reconstructed factor outside X");
  for (const auto& w : right)
    if (!contains(X, w)) throw std::logic_error("reconstructed factor outside X");

  result.ambiguous_word = w_left;
  result.factorizations = {left, right};
  return result;
}

namespace {

std::vector<bool> coaccessible(const Dfa& d) {
  std::vector<std::vector<std::uint32_t>> rev(d.state_count);
  for (std::uint32_t q = 0; q < d.state_count; ++q)
    for (std::uint32_t l = 0; l < d.alphabet.size(); ++l)
      rev[d.step(q, l)].push_back(q);
  std::vector<bool> alive(d.state_count, false);
  std::deque<std::uint32_t> work;
  for (std::uint32_t q = 0; q < d.state_count; ++q)
    if (d.accepting[q]) {
      alive[q] = true;
      work.push_back(q);
    }
  while (!work.empty()) {
    auto q = work.front();
    work.pop_front();
    for (auto p : rev[q])
      if (!alive[p]) {
        alive[p] = true;
        work.push_back(p);
      }
  }
  return alive;
}

}  // namespace

MeasureResult measure(const Nfa& X) {
  Dfa d = minimal_dfa(X);
  auto alive = coaccessible(d);
  if (!alive[d.initial]) return {false, Rational(0)};

  // Divergence test: the series has no finite value exactly when the trim
  // automaton contains a nonempty subset closed under every letter.
  {
    std::vector<bool> in_s = alive;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t q = 0; q < d.state_count; ++q) {
        if (!in_s[q]) continue;
        for (std::uint32_t l = 0; l < d.alphabet.size(); ++l)
          if (!in_s[d.step(q, l)]) {
            in_s[q] = false;
            changed = true;
            break;
          }
      }
    }
    if (std::any_of(in_s.begin(), in_s.end(), [](bool b) { return b; }))
      return {true, Rational(0)};
  }

  // dense ids for trim states
  std::vector<std::uint32_t> dense(d.state_count, kEpsilon);
  std::vector<std::uint32_t> trim_states;
  for (std::uint32_t q = 0; q < d.state_count; ++q)
    if (alive[q]) {
      dense[q] = static_cast<std::uint32_t>(trim_states.size());
      trim_states.push_back(q);
    }
  const std::size_t n = trim_states.size();
  const Rational inv_a(1, static_cast<unsigned long>(d.alphabet.size()));

  // x_q = [q accepting] + (1/|A|) sum_a x_{delta(q,a)}   over trim states
  std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    auto q = trim_states[i];
    mat[i][i] += 1;
    for (std::uint32_t l = 0; l < d.alphabet.size(); ++l) {
      auto t = d.step(q, l);
      if (alive[t]) mat[i][dense[t]] -= inv_a;
    }
    mat[i][n] = d.accepting[q] ? 1 : 0;
  }
  // Gaussian elimination with exact pivoting
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && mat[pivot][col] == 0) ++pivot;
    if (pivot == n) return {true, Rational(0)};  // singular: treat as divergent
    std::swap(mat[col], mat[pivot]);
    Rational p = mat[col][col];
    for (auto& v : mat[col]) v /= p;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || mat[row][col] == 0) continue;
      Rational f = mat[row][col];
      for (std::size_t c2 = col; c2 <= n; ++c2) mat[row][c2] -= f * mat[col][c2];
    }
  }
  Rational value = mat[dense[d.initial]][n];

  // Guard: the solution must dominate every partial sum (checked up to 2|Q|).
  {
    std::vector<mpz_class> count(n, 0);
    count[dense[d.initial]] = 1;
    Rational partial(0);
    Rational weight(1);
    for (std::size_t len = 0; len <= 2 * n; ++len) {
      for (std::size_t i = 0; i < n; ++i)
        if (d.accepting[trim_states[i]] && count[i] != 0)
          partial += Rational(count[i]) * weight;
      std::vector<mpz_class> nxt(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (count[i] == 0) continue;
        auto q = trim_states[i];
        for (std::uint32_t l = 0; l < d.alphabet.size(); ++l) {
          auto t = d.step(q, l);
          if (alive[t]) nxt[dense[t]] += count[i];
        }
      }
      count = std::move(nxt);
      weight *= inv_a;
    }
    if (value < partial || value < 0) return {true, Rational(0)};
  }
  return {false, value};
}

CompletenessResult is_complete(const Nfa& X) {
  Nfa factors = factor_closure(nfa_star(X));
  auto verdict = check_universal(factors);
  if (verdict.value) return {true, std::nullopt};
  return {false, verdict.witness};
}

CodeShape classify(const Nfa& X) {
  const Alphabet& a = X.alphabet;
  if (contains(X, Word::epsilon(a)))
    throw std::invalid_argument("classification requires a set without the empty word");
  CodeShape shape;
  Nfa plus = plus_language(a);
  shape.is_prefix = is_empty(intersect(X, nfa_concat(X, plus)));
  shape.is_suffix = is_empty(intersect(X, nfa_concat(plus, X)));
  shape.is_bifix = shape.is_prefix && shape.is_suffix;
  auto first = shortest_word(X);
  if (!first) {
    shape.is_uniform = true;  // vacuous
  } else {
    shape.is_uniform =
        is_empty(difference(X, fixed_length_language(a, first->size())));
  }
  return shape;
}

}  // namespace vlc
