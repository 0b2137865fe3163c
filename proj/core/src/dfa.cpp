#include "vlcodes/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace vlc {

namespace {

std::vector<std::vector<std::uint32_t>> eps_adj(const Nfa& a) {
  std::vector<std::vector<std::uint32_t>> adj(a.state_count);
  for (const auto& arc : a.arcs)
    if (arc.symbol == kEpsilon) adj[arc.from].push_back(arc.to);
  return adj;
}

std::vector<std::uint32_t> closure(const std::vector<std::vector<std::uint32_t>>& adj,
                                   std::vector<std::uint32_t> set) {
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
  return set;
}

// Renumbers states in BFS order from the initial state, letters in alphabet
// order. Minimal complete DFAs become structurally canonical.
Dfa bfs_renumber(const Dfa& d) {
  std::vector<std::uint32_t> remap(d.state_count, kEpsilon);
  std::vector<std::uint32_t> order;
  std::deque<std::uint32_t> work{d.initial};
  remap[d.initial] = 0;
  order.push_back(d.initial);
  while (!work.empty()) {
    auto q = work.front();
    work.pop_front();
    for (std::uint32_t l = 0; l < d.alphabet.size(); ++l) {
      auto t = d.step(q, l);
      if (remap[t] == kEpsilon) {
        remap[t] = static_cast<std::uint32_t>(order.size());
        order.push_back(t);
        work.push_back(t);
      }
    }
  }
  Dfa out(d.alphabet);
  out.state_count = static_cast<std::uint32_t>(order.size());
  out.initial = 0;
  out.accepting.resize(out.state_count);
  out.next.resize(static_cast<std::size_t>(out.state_count) * d.alphabet.size());
  for (std::uint32_t nq = 0; nq < out.state_count; ++nq) {
    auto oq = order[nq];
    out.accepting[nq] = d.accepting[oq];
    for (std::uint32_t l = 0; l < d.alphabet.size(); ++l)
      out.next[static_cast<std::size_t>(nq) * d.alphabet.size() + l] =
          remap[d.step(oq, l)];
  }
  return out;
}

}  // namespace

Dfa determinize(const Nfa& a) {
  const std::size_t n_letters = a.alphabet.size();
  auto eps = eps_adj(a);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> sym(a.state_count);
  for (const auto& arc : a.arcs)
    if (arc.symbol != kEpsilon) sym[arc.from].push_back({arc.symbol, arc.to});
  std::vector<bool> acc(a.state_count, false);
  for (auto q : a.accepting) acc[q] = true;

  std::map<std::vector<std::uint32_t>, std::uint32_t> id;
  std::vector<std::vector<std::uint32_t>> subsets;
  std::deque<std::uint32_t> work;
  auto intern = [&](std::vector<std::uint32_t> subset) {
    auto it = id.find(subset);
    if (it != id.end()) return it->second;
    auto s = static_cast<std::uint32_t>(subsets.size());
    id.emplace(subset, s);
    subsets.push_back(std::move(subset));
    work.push_back(s);
    return s;
  };

  Dfa d(a.alphabet);
  d.initial = intern(closure(eps, a.initial));
  std::vector<std::uint32_t> flat_next;
  std::vector<bool> flat_acc;
  while (!work.empty()) {
    auto s = work.front();
    work.pop_front();
    auto subset = subsets[s];  // copy: subsets may reallocate below
    if (flat_acc.size() <= s) flat_acc.resize(s + 1, false);
    flat_acc[s] =
        std::any_of(subset.begin(), subset.end(), [&](auto q) { return acc[q]; });
    for (std::uint32_t l = 0; l < n_letters; ++l) {
      std::vector<std::uint32_t> nxt;
      for (auto q : subset)
        for (const auto& [sm, t] : sym[q])
          if (sm == l) nxt.push_back(t);
      auto t = intern(closure(eps, std::move(nxt)));
      std::size_t idx = static_cast<std::size_t>(s) * n_letters + l;
      if (flat_next.size() <= idx) flat_next.resize(idx + 1, 0);
      flat_next[idx] = t;
    }
  }
  d.state_count = static_cast<std::uint32_t>(subsets.size());
  flat_acc.resize(d.state_count, false);
  flat_next.resize(static_cast<std::size_t>(d.state_count) * n_letters, 0);
  d.accepting = std::move(flat_acc);
  d.next = std::move(flat_next);
  return d;
}

Dfa minimize(const Dfa& d) {
  const std::size_t n_letters = d.alphabet.size();
  // drop unreachable states first
  std::vector<bool> reach(d.state_count, false);
  std::deque<std::uint32_t> work{d.initial};
  reach[d.initial] = true;
  while (!work.empty()) {
    auto q = work.front();
    work.pop_front();
    for (std::uint32_t l = 0; l < n_letters; ++l) {
      auto t = d.step(q, l);
      if (!reach[t]) {
        reach[t] = true;
        work.push_back(t);
      }
    }
  }

  // Moore partition refinement; stops when the class count stabilizes.
  std::vector<std::uint32_t> cls(d.state_count, 0);
  for (std::uint32_t q = 0; q < d.state_count; ++q)
    cls[q] = d.accepting[q] ? 1 : 0;
  std::size_t class_count = 0;
  for (bool changed = true; changed;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig_id;
    std::vector<std::uint32_t> next_cls(d.state_count, 0);
    for (std::uint32_t q = 0; q < d.state_count; ++q) {
      if (!reach[q]) continue;
      std::vector<std::uint32_t> sig{cls[q]};
      for (std::uint32_t l = 0; l < n_letters; ++l) sig.push_back(cls[d.step(q, l)]);
      auto it = sig_id.emplace(std::move(sig),
                               static_cast<std::uint32_t>(sig_id.size())).first;
      next_cls[q] = it->second;
    }
    changed = sig_id.size() != class_count;
    class_count = sig_id.size();
    cls = std::move(next_cls);
  }

  std::uint32_t n_classes = 0;
  {
    std::map<std::uint32_t, std::uint32_t> dense;
    for (std::uint32_t q = 0; q < d.state_count; ++q) {
      if (!reach[q]) continue;
      auto [it, fresh] =
          dense.emplace(cls[q], static_cast<std::uint32_t>(dense.size()));
      cls[q] = it->second;
      (void)fresh;
    }
    n_classes = static_cast<std::uint32_t>(dense.size());
  }

  Dfa out(d.alphabet);
  out.state_count = n_classes;
  out.accepting.assign(n_classes, false);
  out.next.assign(static_cast<std::size_t>(n_classes) * n_letters, 0);
  for (std::uint32_t q = 0; q < d.state_count; ++q) {
    if (!reach[q]) continue;
    auto c = cls[q];
    out.accepting[c] = d.accepting[q];
    for (std::uint32_t l = 0; l < n_letters; ++l)
      out.next[static_cast<std::size_t>(c) * n_letters + l] = cls[d.step(q, l)];
  }
  out.initial = cls[d.initial];
  return bfs_renumber(out);
}

Dfa minimal_dfa(const Nfa& a) { return minimize(determinize(a)); }

Nfa dfa_to_nfa(const Dfa& d) {
  Nfa n(d.alphabet);
  n.state_count = d.state_count;
  n.mark_initial(d.initial);
  for (std::uint32_t q = 0; q < d.state_count; ++q) {
    if (d.accepting[q]) n.mark_accepting(q);
    for (std::uint32_t l = 0; l < d.alphabet.size(); ++l)
      n.add_arc(q, l, d.step(q, l));
  }
  return n;
}

std::string canonical_key(const Dfa& d) {
  std::string key;
  key += std::to_string(d.state_count);
  key += '|';
  for (std::uint32_t q = 0; q < d.state_count; ++q) key += d.accepting[q] ? '1' : '0';
  key += '|';
  for (auto t : d.next) {
    key += std::to_string(t);
    key += ',';
  }
  return key;
}

}  // namespace vlc
