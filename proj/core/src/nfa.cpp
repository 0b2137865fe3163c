#include "vlcodes/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "vlcodes/dfa.hpp"

namespace vlc {

namespace {

void require_same_alphabet(const Nfa& a, const Nfa& b) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("alphabet mismatch between automata");
}

std::vector<std::vector<std::uint32_t>> epsilon_adjacency(const Nfa& a,
                                                          bool reversed = false) {
  std::vector<std::vector<std::uint32_t>> adj(a.state_count);
  for (const auto& arc : a.arcs)
    if (arc.symbol == kEpsilon) {
      if (reversed)
        adj[arc.to].push_back(arc.from);
      else
        adj[arc.from].push_back(arc.to);
    }
  return adj;
}

void close_over(const std::vector<std::vector<std::uint32_t>>& adj,
                std::vector<std::uint32_t>& set) {
  std::vector<bool> in(adj.size(), false);
  std::deque<std::uint32_t> work(set.begin(), set.end());
  for (auto q : set) in[q] = true;
  while (!work.empty()) {
    auto q = work.front();
    work.pop_front();
    for (auto t : adj[q])
      if (!in[t]) {
        in[t] = true;
        set.push_back(t);
        work.push_back(t);
      }
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

void sort_unique(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Appends a disjoint copy of src, returning the state offset.
std::uint32_t splice(Nfa& dst, const Nfa& src) {
  std::uint32_t offset = dst.state_count;
  dst.state_count += src.state_count;
  for (const auto& arc : src.arcs)
    dst.arcs.push_back({arc.from + offset, arc.symbol, arc.to + offset});
  return offset;
}

// States of a complete DFA from which an accepting state is reachable.
std::vector<bool> alive_states(const Dfa& d) {
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

std::uint32_t Nfa::add_state() { return state_count++; }

void Nfa::add_arc(std::uint32_t from, std::uint32_t symbol, std::uint32_t to) {
  arcs.push_back({from, symbol, to});
}

void Nfa::mark_initial(std::uint32_t q) {
  initial.push_back(q);
  sort_unique(initial);
}

void Nfa::mark_accepting(std::uint32_t q) {
  accepting.push_back(q);
  sort_unique(accepting);
}

void Nfa::check_valid() const {
  for (auto q : initial)
    if (q >= state_count) throw std::logic_error("initial state out of range");
  for (auto q : accepting)
    if (q >= state_count) throw std::logic_error("accepting state out of range");
  for (const auto& arc : arcs) {
    if (arc.from >= state_count || arc.to >= state_count)
      throw std::logic_error("arc endpoint out of range");
    if (arc.symbol != kEpsilon && arc.symbol >= alphabet.size())
      throw std::logic_error("arc symbol out of range");
  }
}

Nfa empty_language(const Alphabet& a) { return Nfa(a); }

Nfa epsilon_language(const Alphabet& a) {
  Nfa n(a);
  auto q = n.add_state();
  n.mark_initial(q);
  n.mark_accepting(q);
  return n;
}

Nfa universal_language(const Alphabet& a) {
  Nfa n(a);
  auto q = n.add_state();
  n.mark_initial(q);
  n.mark_accepting(q);
  for (std::uint32_t l = 0; l < a.size(); ++l) n.add_arc(q, l, q);
  return n;
}

Nfa word_language(const Word& w) {
  Nfa n(w.alphabet());
  auto q = n.add_state();
  n.mark_initial(q);
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto r = n.add_state();
    n.add_arc(q, w[i], r);
    q = r;
  }
  n.mark_accepting(q);
  return n;
}

Nfa words_language(const Alphabet& a, const std::vector<Word>& words) {
  Nfa n(a);
  if (words.empty()) return n;
  auto start = n.add_state();
  n.mark_initial(start);
  for (const auto& w : words) {
    if (w.alphabet() != a)
      throw std::invalid_argument("word alphabet differs from language alphabet");
    auto q = start;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto r = n.add_state();
      n.add_arc(q, w[i], r);
      q = r;
    }
    n.mark_accepting(q);
  }
  return n;
}

Nfa nfa_union(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  Nfa n(a.alphabet);
  auto off_a = splice(n, a);
  auto off_b = splice(n, b);
  for (auto q : a.initial) n.initial.push_back(q + off_a);
  for (auto q : b.initial) n.initial.push_back(q + off_b);
  for (auto q : a.accepting) n.accepting.push_back(q + off_a);
  for (auto q : b.accepting) n.accepting.push_back(q + off_b);
  sort_unique(n.initial);
  sort_unique(n.accepting);
  return n;
}

Nfa nfa_concat(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  Nfa n(a.alphabet);
  auto off_a = splice(n, a);
  auto off_b = splice(n, b);
  for (auto q : a.initial) n.initial.push_back(q + off_a);
  for (auto f : a.accepting)
    for (auto i : b.initial) n.arcs.push_back({f + off_a, kEpsilon, i + off_b});
  for (auto q : b.accepting) n.accepting.push_back(q + off_b);
  sort_unique(n.initial);
  sort_unique(n.accepting);
  return n;
}

Nfa nfa_star(const Nfa& a) {
  Nfa n(a.alphabet);
  auto off = splice(n, a);
  auto hub = n.add_state();
  n.mark_initial(hub);
  n.mark_accepting(hub);
  for (auto q : a.initial) n.arcs.push_back({hub, kEpsilon, q + off});
  for (auto f : a.accepting) n.arcs.push_back({f + off, kEpsilon, hub});
  return n;
}

Nfa nfa_reverse(const Nfa& a) {
  Nfa n(a.alphabet);
  n.state_count = a.state_count;
  n.initial = a.accepting;
  n.accepting = a.initial;
  for (const auto& arc : a.arcs) n.arcs.push_back({arc.to, arc.symbol, arc.from});
  return n;
}

Nfa nfa_trim(const Nfa& a) {
  std::vector<std::vector<std::uint32_t>> fwd_adj(a.state_count), bwd_adj(a.state_count);
  for (const auto& arc : a.arcs) {
    fwd_adj[arc.from].push_back(arc.to);
    bwd_adj[arc.to].push_back(arc.from);
  }
  auto flood = [&](const std::vector<std::uint32_t>& seeds,
                   const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<bool> seen(a.state_count, false);
    std::deque<std::uint32_t> work(seeds.begin(), seeds.end());
    for (auto q : seeds) seen[q] = true;
    while (!work.empty()) {
      auto q = work.front();
      work.pop_front();
      for (auto t : adj[q])
        if (!seen[t]) {
          seen[t] = true;
          work.push_back(t);
        }
    }
    return seen;
  };
  auto fwd = flood(a.initial, fwd_adj);
  auto bwd = flood(a.accepting, bwd_adj);

  std::vector<std::uint32_t> remap(a.state_count, kEpsilon);
  Nfa n(a.alphabet);
  for (std::uint32_t q = 0; q < a.state_count; ++q)
    if (fwd[q] && bwd[q]) remap[q] = n.add_state();
  for (auto q : a.initial)
    if (remap[q] != kEpsilon) n.initial.push_back(remap[q]);
  for (auto q : a.accepting)
    if (remap[q] != kEpsilon) n.accepting.push_back(remap[q]);
  for (const auto& arc : a.arcs)
    if (remap[arc.from] != kEpsilon && remap[arc.to] != kEpsilon)
      n.arcs.push_back({remap[arc.from], arc.symbol, remap[arc.to]});
  sort_unique(n.initial);
  sort_unique(n.accepting);
  return n;
}

Nfa complement(const Nfa& a) {
  Dfa d = minimal_dfa(a);
  for (std::size_t q = 0; q < d.accepting.size(); ++q)
    d.accepting[q] = !d.accepting[q];
  return dfa_to_nfa(d);
}

namespace {

template <typename AcceptFn>
Nfa product_with(const Nfa& a, const Nfa& b, AcceptFn accept) {
  require_same_alphabet(a, b);
  Dfa da = minimal_dfa(a), db = minimal_dfa(b);
  Nfa out(a.alphabet);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> id;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
  auto intern = [&](std::uint32_t p, std::uint32_t q) {
    auto key = std::make_pair(p, q);
    auto it = id.find(key);
    if (it != id.end()) return it->second;
    auto s = out.add_state();
    id.emplace(key, s);
    work.push_back(key);
    if (accept(da.accepting[p], db.accepting[q])) out.mark_accepting(s);
    return s;
  };
  out.mark_initial(intern(da.initial, db.initial));
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    auto from = id.at({p, q});
    for (std::uint32_t l = 0; l < a.alphabet.size(); ++l)
      out.add_arc(from, l, intern(da.step(p, l), db.step(q, l)));
  }
  return out;
}

}  // namespace

Nfa intersect(const Nfa& a, const Nfa& b) {
  return product_with(a, b, [](bool x, bool y) { return x && y; });
}

Nfa difference(const Nfa& a, const Nfa& b) {
  return product_with(a, b, [](bool x, bool y) { return x && !y; });
}

Nfa factor_closure(const Nfa& a) {
  Nfa n = nfa_trim(a);
  n.initial.clear();
  n.accepting.clear();
  for (std::uint32_t q = 0; q < n.state_count; ++q) {
    n.initial.push_back(q);
    n.accepting.push_back(q);
  }
  return n;
}

Nfa prefix_closure(const Nfa& a) {
  Nfa n = nfa_trim(a);
  n.accepting.clear();
  for (std::uint32_t q = 0; q < n.state_count; ++q) n.accepting.push_back(q);
  return n;
}

Nfa suffix_closure(const Nfa& a) {
  Nfa n = nfa_trim(a);
  n.initial.clear();
  for (std::uint32_t q = 0; q < n.state_count; ++q) n.initial.push_back(q);
  return n;
}

Nfa left_quotient(const Nfa& by, const Nfa& of) {
  require_same_alphabet(by, of);
  auto eps_by = epsilon_adjacency(by);
  auto eps_of = epsilon_adjacency(of);

  // symbol adjacency indexed by state for the pair walk
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> sym_by(by.state_count),
      sym_of(of.state_count);
  for (const auto& arc : by.arcs)
    if (arc.symbol != kEpsilon) sym_by[arc.from].push_back({arc.symbol, arc.to});
  for (const auto& arc : of.arcs)
    if (arc.symbol != kEpsilon) sym_of[arc.from].push_back({arc.symbol, arc.to});

  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
  auto push = [&](std::uint32_t p, std::uint32_t q) {
    if (seen.insert({p, q}).second) work.push_back({p, q});
  };
  for (auto p : by.initial)
    for (auto q : of.initial) push(p, q);
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    for (auto t : eps_by[p]) push(t, q);
    for (auto t : eps_of[q]) push(p, t);
    for (const auto& [sb, tb] : sym_by[p])
      for (const auto& [so, to] : sym_of[q])
        if (sb == so) push(tb, to);
  }

  std::vector<bool> by_accepting(by.state_count, false);
  for (auto q : by.accepting) by_accepting[q] = true;
  Nfa out = of;
  out.initial.clear();
  for (const auto& [p, q] : seen)
    if (by_accepting[p]) out.initial.push_back(q);
  sort_unique(out.initial);
  return out;
}

Nfa right_quotient_word(const Nfa& of, const Word& u) {
  if (of.alphabet != u.alphabet())
    throw std::invalid_argument("alphabet mismatch in right quotient");
  auto eps_rev = epsilon_adjacency(of, /*reversed=*/true);
  // good = states from which reading u[i..] can reach acceptance
  std::vector<std::uint32_t> good = of.accepting;
  close_over(eps_rev, good);
  for (std::size_t i = u.size(); i-- > 0;) {
    std::vector<bool> in_good(of.state_count, false);
    for (auto q : good) in_good[q] = true;
    std::vector<std::uint32_t> prev;
    for (const auto& arc : of.arcs)
      if (arc.symbol == u[i] && in_good[arc.to]) prev.push_back(arc.from);
    close_over(eps_rev, prev);
    good = std::move(prev);
  }
  Nfa out = of;
  out.accepting = good;
  return out;
}

Nfa map_letters(const Nfa& a, const std::vector<std::uint32_t>& letter_map) {
  if (letter_map.size() != a.alphabet.size())
    throw std::invalid_argument("letter map size does not match alphabet");
  Nfa n = a;
  for (auto& arc : n.arcs)
    if (arc.symbol != kEpsilon) arc.symbol = letter_map[arc.symbol];
  return n;
}

bool contains(const Nfa& a, const Word& w) {
  if (a.alphabet != w.alphabet())
    throw std::invalid_argument("alphabet mismatch in membership test");
  auto eps = epsilon_adjacency(a);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> sym(a.state_count);
  for (const auto& arc : a.arcs)
    if (arc.symbol != kEpsilon) sym[arc.from].push_back({arc.symbol, arc.to});

  std::vector<std::uint32_t> cur = a.initial;
  close_over(eps, cur);
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<std::uint32_t> next;
    for (auto q : cur)
      for (const auto& [s, t] : sym[q])
        if (s == w[i]) next.push_back(t);
    close_over(eps, next);
    cur = std::move(next);
    if (cur.empty()) return false;
  }
  std::vector<bool> acc(a.state_count, false);
  for (auto q : a.accepting) acc[q] = true;
  return std::any_of(cur.begin(), cur.end(), [&](auto q) { return acc[q]; });
}

std::optional<Word> shortest_word(const Nfa& a) {
  // BFS on the minimal DFA; expanding letters in alphabet order yields the
  // shortlex-least witness.
  Dfa d = minimal_dfa(a);
  if (d.accepting[d.initial]) return Word::epsilon(a.alphabet);
  std::vector<bool> seen(d.state_count, false);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> parent(d.state_count);
  std::deque<std::uint32_t> work;
  seen[d.initial] = true;
  work.push_back(d.initial);
  std::optional<std::uint32_t> hit;
  while (!work.empty() && !hit) {
    auto q = work.front();
    work.pop_front();
    for (std::uint32_t l = 0; l < d.alphabet.size() && !hit; ++l) {
      auto t = d.step(q, l);
      if (seen[t]) continue;
      seen[t] = true;
      parent[t] = {q, l};
      if (d.accepting[t]) hit = t;
      work.push_back(t);
    }
  }
  if (!hit) return std::nullopt;
  std::vector<std::uint32_t> letters;
  for (auto q = *hit; q != d.initial; q = parent[q].first)
    letters.push_back(parent[q].second);
  std::reverse(letters.begin(), letters.end());
  return Word(a.alphabet, std::move(letters));
}

bool is_empty(const Nfa& a) { return !shortest_word(a).has_value(); }

Verdict check_empty(const Nfa& a) {
  auto w = shortest_word(a);
  if (w) return {false, w};
  return {true, std::nullopt};
}

Verdict check_universal(const Nfa& a) {
  auto w = shortest_word(complement(a));
  if (w) return {false, w};
  return {true, std::nullopt};
}

bool equivalent(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  return minimal_dfa(a) == minimal_dfa(b);
}

bool is_subset(const Nfa& a, const Nfa& b) { return is_empty(difference(a, b)); }

bool language_finite(const Nfa& a) {
  Nfa t = nfa_trim(a);
  // finite iff the trim automaton is acyclic
  std::vector<int> mark(t.state_count, 0);  // 0 new, 1 active, 2 done
  std::vector<std::vector<std::uint32_t>> adj(t.state_count);
  for (const auto& arc : t.arcs) adj[arc.from].push_back(arc.to);
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  for (std::uint32_t start = 0; start < t.state_count; ++start) {
    if (mark[start] != 0) continue;
    stack.push_back({start, 0});
    mark[start] = 1;
    while (!stack.empty()) {
      auto& [q, i] = stack.back();
      if (i < adj[q].size()) {
        auto nq = adj[q][i++];
        if (mark[nq] == 1) return false;
        if (mark[nq] == 0) {
          mark[nq] = 1;
          stack.push_back({nq, 0});
        }
      } else {
        mark[q] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

std::vector<Word> enumerate_words(const Nfa& a, std::size_t max_len) {
  Dfa d = minimal_dfa(a);
  auto alive = alive_states(d);
  std::vector<Word> out;
  std::deque<std::pair<std::uint32_t, std::vector<std::uint32_t>>> work;
  if (alive[d.initial]) work.push_back({d.initial, {}});
  while (!work.empty()) {
    auto [q, letters] = std::move(work.front());
    work.pop_front();
    if (d.accepting[q]) out.emplace_back(a.alphabet, letters);
    if (letters.size() == max_len) continue;
    for (std::uint32_t l = 0; l < d.alphabet.size(); ++l) {
      auto t = d.step(q, l);
      if (!alive[t]) continue;
      auto ls = letters;
      ls.push_back(l);
      work.push_back({t, std::move(ls)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> enumerate_finite(const Nfa& a) {
  if (!language_finite(a)) throw std::invalid_argument("language is infinite");
  Nfa t = nfa_trim(a);
  return enumerate_words(a, t.state_count);
}

std::vector<Word> first_words(const Nfa& a, std::size_t count, std::size_t max_len) {
  Dfa d = minimal_dfa(a);
  auto alive = alive_states(d);
  std::vector<Word> out;
  std::deque<std::pair<std::uint32_t, std::vector<std::uint32_t>>> work;
  if (alive[d.initial]) work.push_back({d.initial, {}});
  while (!work.empty() && out.size() < count) {
    auto [q, letters] = std::move(work.front());
    work.pop_front();
    if (d.accepting[q]) out.emplace_back(a.alphabet, letters);
    if (letters.size() == max_len) continue;
    for (std::uint32_t l = 0; l < d.alphabet.size(); ++l) {
      auto t = d.step(q, l);
      if (!alive[t]) continue;
      auto ls = letters;
      ls.push_back(l);
      work.push_back({t, std::move(ls)});
    }
  }
  if (out.size() > count)
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(count), out.end());
  return out;
}

}  // namespace vlc
