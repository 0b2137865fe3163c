#include "vlcodes/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

#include "vlcodes/dfa.hpp"

namespace vlc {

std::uint32_t Transducer::add_state() { return state_count++; }

void Transducer::add_arc(std::uint32_t from, std::uint32_t in, std::uint32_t out,
                         std::uint32_t to) {
  if (in == kEpsilon && out == kEpsilon)
    throw std::logic_error("(eps, eps) arcs are not allowed in normalized transducers");
  arcs.push_back({from, in, out, to});
}

namespace {

void sort_unique(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Copy loop (a, a) on `state` for every letter.
void add_copy_loops(Transducer& t, std::uint32_t state) {
  for (std::uint32_t l = 0; l < t.alphabet.size(); ++l)
    t.add_arc(state, l, l, state);
}

// Divergence gadget realizing pairs (u, u') after a common prefix: chains of
// one-sided emissions with total budget k, plus a bridge with distinct first
// letters feeding a mixed chain. All gadget states accept.
Transducer build_prefix_relation(const Alphabet& a, unsigned k, bool strict) {
  if (k < 1) throw std::invalid_argument("prefix relation needs k >= 1");
  Transducer t(a);
  auto root = t.add_state();
  t.initial.push_back(root);
  if (!strict) t.accepting.push_back(root);
  add_copy_loops(t, root);

  // left-only deletions (u, eps) and right-only insertions (eps, u')
  {
    std::uint32_t prev = root;
    for (unsigned budget = 1; budget <= k; ++budget) {
      auto s = t.add_state();
      t.accepting.push_back(s);
      for (std::uint32_t l = 0; l < a.size(); ++l) t.add_arc(prev, l, kEpsilon, s);
      prev = s;
    }
  }
  {
    std::uint32_t prev = root;
    for (unsigned budget = 1; budget <= k; ++budget) {
      auto s = t.add_state();
      t.accepting.push_back(s);
      for (std::uint32_t l = 0; l < a.size(); ++l) t.add_arc(prev, kEpsilon, l, s);
      prev = s;
    }
  }
  // bridge (a, b) with a != b, then a mixed chain up to the total budget
  if (k >= 2) {
    auto bridge = t.add_state();
    t.accepting.push_back(bridge);
    for (std::uint32_t x = 0; x < a.size(); ++x)
      for (std::uint32_t y = 0; y < a.size(); ++y)
        if (x != y) t.add_arc(root, x, y, bridge);
    std::uint32_t prev = bridge;
    for (unsigned budget = 3; budget <= k; ++budget) {
      auto s = t.add_state();
      t.accepting.push_back(s);
      for (std::uint32_t l = 0; l < a.size(); ++l) {
        t.add_arc(prev, l, kEpsilon, s);
        t.add_arc(prev, kEpsilon, l, s);
      }
      prev = s;
    }
  }
  sort_unique(t.accepting);
  t.prefix_synchronized = true;
  return t;
}

// One optional leading edit, then a copy loop: exactly the pairs at suffix
// distance 1 (plus the diagonal when not strict).
Transducer build_suffix_one(const Alphabet& a, bool strict) {
  Transducer t(a);
  auto entry = t.add_state();
  auto copy = t.add_state();
  t.initial.push_back(entry);
  t.accepting.push_back(copy);
  for (std::uint32_t l = 0; l < a.size(); ++l) {
    t.add_arc(entry, l, kEpsilon, copy);
    t.add_arc(entry, kEpsilon, l, copy);
  }
  add_copy_loops(t, copy);
  if (!strict) {
    auto diag = t.add_state();
    t.initial.push_back(diag);
    t.accepting.push_back(diag);
    add_copy_loops(t, diag);
  }
  sort_unique(t.initial);
  sort_unique(t.accepting);
  t.prefix_synchronized = true;
  return t;
}

Transducer build_theta_relation(const Alphabet& a, const ThetaSpec& theta,
                                bool strict) {
  if (theta.anti)
    throw std::invalid_argument(
        "an anti-automorphism is not a rational relation; no transducer exists");
  if (theta.alphabet != a)
    throw std::invalid_argument("theta alphabet mismatch");
  auto moved = theta.moved_letters();
  Transducer t(a);
  auto root = t.add_state();
  t.initial.push_back(root);
  // the common fixed-letter prefix
  for (std::uint32_t l = 0; l < a.size(); ++l)
    if (theta.map(l) == l) t.add_arc(root, l, l, root);
  if (strict) {
    if (!moved.empty()) {
      auto mapped = t.add_state();
      t.accepting.push_back(mapped);
      for (auto b : moved) t.add_arc(root, b, theta.map(b), mapped);
      for (std::uint32_t l = 0; l < a.size(); ++l)
        t.add_arc(mapped, l, theta.map(l), mapped);
    }
    // root is not accepting: theta(w) = w pairs are excluded
  } else {
    t.accepting.push_back(root);
    if (!moved.empty()) {
      auto copied = t.add_state();
      auto mapped = t.add_state();
      t.accepting.push_back(copied);
      t.accepting.push_back(mapped);
      for (auto b : moved) {
        t.add_arc(root, b, b, copied);
        t.add_arc(root, b, theta.map(b), mapped);
      }
      add_copy_loops(t, copied);
      for (std::uint32_t l = 0; l < a.size(); ++l)
        t.add_arc(mapped, l, theta.map(l), mapped);
    }
  }
  sort_unique(t.accepting);
  t.prefix_synchronized = true;
  return t;
}

// Removes (eps, eps) arcs produced by composition via forward closure.
Transducer drop_silent_arcs(Transducer t,
                            const std::vector<std::tuple<std::uint32_t, std::uint32_t>>& silent) {
  if (silent.empty()) return t;
  std::vector<std::vector<std::uint32_t>> adj(t.state_count);
  for (const auto& [from, to] : silent) adj[from].push_back(to);
  // closure per state
  std::vector<bool> accepting(t.state_count, false);
  for (auto q : t.accepting) accepting[q] = true;
  std::vector<Transducer::Arc> arcs = t.arcs;
  std::vector<Transducer::Arc> out_arcs;
  std::vector<std::vector<std::uint32_t>> reach(t.state_count);
  for (std::uint32_t q = 0; q < t.state_count; ++q) {
    std::vector<bool> seen(t.state_count, false);
    std::deque<std::uint32_t> work{q};
    seen[q] = true;
    while (!work.empty()) {
      auto u = work.front();
      work.pop_front();
      reach[q].push_back(u);
      for (auto v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          work.push_back(v);
        }
    }
  }
  std::vector<std::vector<Transducer::Arc>> by_from(t.state_count);
  for (const auto& arc : arcs) by_from[arc.from].push_back(arc);
  std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>> dedup;
  std::vector<std::uint32_t> new_accepting;
  for (std::uint32_t q = 0; q < t.state_count; ++q) {
    bool acc = false;
    for (auto v : reach[q]) {
      acc = acc || accepting[v];
      for (const auto& arc : by_from[v])
        if (dedup.insert({q, arc.in, arc.out, arc.to}).second)
          out_arcs.push_back({q, arc.in, arc.out, arc.to});
    }
    if (acc) new_accepting.push_back(q);
  }
  t.arcs = std::move(out_arcs);
  t.accepting = std::move(new_accepting);
  sort_unique(t.accepting);
  return t;
}

}  // namespace

Transducer build_relation(const Alphabet& a, const RelationSpec& spec) {
  using Kind = RelationSpec::Kind;
  switch (spec.kind) {
    case Kind::prefix_k:
      return build_prefix_relation(a, spec.k, false);
    case Kind::prefix_k_strict:
      return build_prefix_relation(a, spec.k, true);
    case Kind::suffix_1:
      return build_suffix_one(a, false);
    case Kind::suffix_1_strict:
      return build_suffix_one(a, true);
    case Kind::factor_k: {
      if (spec.k < 1) throw std::invalid_argument("factor relation needs k >= 1");
      Transducer f1 = transducer_union(build_prefix_relation(a, 1, false),
                                       build_suffix_one(a, false));
      Transducer acc = f1;
      for (unsigned i = 1; i < spec.k; ++i) acc = transducer_compose(acc, f1);
      return acc;
    }
    case Kind::theta:
      if (!spec.theta) throw std::invalid_argument("theta relation needs a ThetaSpec");
      return build_theta_relation(a, *spec.theta, false);
    case Kind::theta_strict:
      if (!spec.theta) throw std::invalid_argument("theta relation needs a ThetaSpec");
      return build_theta_relation(a, *spec.theta, true);
  }
  throw std::logic_error("bad relation kind");
}

Transducer transducer_inverse(const Transducer& t) {
  Transducer out = t;
  for (auto& arc : out.arcs) std::swap(arc.in, arc.out);
  return out;
}

Transducer transducer_union(const Transducer& a, const Transducer& b) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("alphabet mismatch between transducers");
  Transducer out(a.alphabet);
  out.state_count = a.state_count + b.state_count;
  out.arcs = a.arcs;
  for (const auto& arc : b.arcs)
    out.arcs.push_back(
        {arc.from + a.state_count, arc.in, arc.out, arc.to + a.state_count});
  out.initial = a.initial;
  for (auto q : b.initial) out.initial.push_back(q + a.state_count);
  out.accepting = a.accepting;
  for (auto q : b.accepting) out.accepting.push_back(q + a.state_count);
  sort_unique(out.initial);
  sort_unique(out.accepting);
  out.prefix_synchronized = a.prefix_synchronized && b.prefix_synchronized;
  return out;
}

Transducer transducer_compose(const Transducer& a, const Transducer& b) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("alphabet mismatch between transducers");
  std::vector<std::vector<Transducer::Arc>> a_from(a.state_count), b_from(b.state_count);
  for (const auto& arc : a.arcs) a_from[arc.from].push_back(arc);
  for (const auto& arc : b.arcs) b_from[arc.from].push_back(arc);

  Transducer out(a.alphabet);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> id;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
  std::vector<std::tuple<std::uint32_t, std::uint32_t>> silent;
  std::vector<bool> a_acc(a.state_count, false), b_acc(b.state_count, false);
  for (auto q : a.accepting) a_acc[q] = true;
  for (auto q : b.accepting) b_acc[q] = true;

  auto intern = [&](std::uint32_t p, std::uint32_t q) {
    auto key = std::make_pair(p, q);
    auto it = id.find(key);
    if (it != id.end()) return it->second;
    auto s = out.add_state();
    id.emplace(key, s);
    work.push_back(key);
    if (a_acc[p] && b_acc[q]) out.accepting.push_back(s);
    return s;
  };
  for (auto p : a.initial)
    for (auto q : b.initial) out.initial.push_back(intern(p, q));

  auto emit = [&](std::uint32_t from, std::uint32_t in, std::uint32_t mid_out,
                  std::uint32_t to) {
    if (in == kEpsilon && mid_out == kEpsilon)
      silent.push_back({from, to});
    else
      out.arcs.push_back({from, in, mid_out, to});
  };

  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    auto from = id.at({p, q});
    for (const auto& arc : a_from[p]) {
      if (arc.out == kEpsilon) {
        emit(from, arc.in, kEpsilon, intern(arc.to, q));
      } else {
        for (const auto& brc : b_from[q])
          if (brc.in == arc.out)
            emit(from, arc.in, brc.out, intern(arc.to, brc.to));
      }
    }
    for (const auto& brc : b_from[q])
      if (brc.in == kEpsilon) emit(from, kEpsilon, brc.out, intern(p, brc.to));
  }
  sort_unique(out.initial);
  sort_unique(out.accepting);
  out.prefix_synchronized = false;
  return drop_silent_arcs(std::move(out), silent);
}

Nfa image(const Transducer& t, const Nfa& language) {
  if (t.alphabet != language.alphabet)
    throw std::invalid_argument("alphabet mismatch between transducer and language");
  std::vector<std::vector<Transducer::Arc>> t_from(t.state_count);
  for (const auto& arc : t.arcs) t_from[arc.from].push_back(arc);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> l_sym(
      language.state_count);
  std::vector<std::vector<std::uint32_t>> l_eps(language.state_count);
  for (const auto& arc : language.arcs) {
    if (arc.symbol == kEpsilon)
      l_eps[arc.from].push_back(arc.to);
    else
      l_sym[arc.from].push_back({arc.symbol, arc.to});
  }
  std::vector<bool> t_acc(t.state_count, false), l_acc(language.state_count, false);
  for (auto q : t.accepting) t_acc[q] = true;
  for (auto q : language.accepting) l_acc[q] = true;

  Nfa out(t.alphabet);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> id;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
  auto intern = [&](std::uint32_t p, std::uint32_t q) {
    auto key = std::make_pair(p, q);
    auto it = id.find(key);
    if (it != id.end()) return it->second;
    auto s = out.add_state();
    id.emplace(key, s);
    work.push_back(key);
    if (t_acc[p] && l_acc[q]) out.mark_accepting(s);
    return s;
  };
  for (auto p : t.initial)
    for (auto q : language.initial) out.mark_initial(intern(p, q));
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    auto from = id.at({p, q});
    for (auto ql : l_eps[q]) out.add_arc(from, kEpsilon, intern(p, ql));
    for (const auto& arc : t_from[p]) {
      if (arc.in == kEpsilon) {
        out.add_arc(from, arc.out, intern(arc.to, q));
      } else {
        for (const auto& [sym, ql] : l_sym[q])
          if (sym == arc.in) out.add_arc(from, arc.out, intern(arc.to, ql));
      }
    }
  }
  return out;
}

RelationCheck restricted_emptiness(const Transducer& t, const Nfa& input_language,
                                   const Nfa& output_language, bool exclude_diagonal) {
  if (t.alphabet != input_language.alphabet || t.alphabet != output_language.alphabet)
    throw std::invalid_argument("alphabet mismatch in restricted emptiness test");
  if (exclude_diagonal && !t.prefix_synchronized)
    throw std::invalid_argument(
        "exclude_diagonal needs a prefix-synchronized transducer");

  Dfa din = minimal_dfa(input_language), dout = minimal_dfa(output_language);
  std::vector<std::vector<Transducer::Arc>> t_from(t.state_count);
  for (const auto& arc : t.arcs) t_from[arc.from].push_back(arc);
  std::vector<bool> t_acc(t.state_count, false);
  for (auto q : t.accepting) t_acc[q] = true;

  struct Key {
    std::size_t len;
    std::vector<std::uint32_t> in, out;
    bool operator>(const Key& o) const {
      return std::tie(len, in, out) > std::tie(o.len, o.in, o.out);
    }
  };
  struct Entry {
    Key key;
    std::uint32_t ts, p, q;
    bool diverged;
    bool operator>(const Entry& o) const { return key > o.key; }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, bool>> done;

  for (auto ts : t.initial)
    heap.push({{0, {}, {}}, ts, din.initial, dout.initial, false});

  while (!heap.empty()) {
    Entry e = heap.top();
    heap.pop();
    auto cfg = std::make_tuple(e.ts, e.p, e.q, e.diverged);
    if (!done.insert(cfg).second) continue;
    bool acceptable = t_acc[e.ts] && din.accepting[e.p] && dout.accepting[e.q] &&
                      (!exclude_diagonal || e.diverged);
    if (acceptable) {
      return {false,
              std::make_pair(Word(t.alphabet, e.key.in), Word(t.alphabet, e.key.out))};
    }
    for (const auto& arc : t_from[e.ts]) {
      Entry n = e;
      n.ts = arc.to;
      n.diverged = e.diverged || arc.in != arc.out;
      if (arc.in != kEpsilon) {
        n.p = din.step(e.p, arc.in);
        n.key.in.push_back(arc.in);
        ++n.key.len;
      }
      if (arc.out != kEpsilon) {
        n.q = dout.step(e.q, arc.out);
        n.key.out.push_back(arc.out);
        ++n.key.len;
      }
      if (!done.count({n.ts, n.p, n.q, n.diverged})) heap.push(std::move(n));
    }
  }
  return {true, std::nullopt};
}

bool relates(const Transducer& t, const Word& w, const Word& w2) {
  auto check = restricted_emptiness(t, word_language(w), word_language(w2), false);
  return !check.empty;
}

}  // namespace vlc
