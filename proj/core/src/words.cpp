#include "vlcodes/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace vlc {

std::vector<std::string> utf8_split(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (c >= 0xF0)
      len = 4;
    else if (c >= 0xE0)
      len = 3;
    else if (c >= 0xC0)
      len = 2;
    else if (c >= 0x80)
      throw std::invalid_argument("malformed UTF-8: unexpected continuation byte");
    if (i + len > text.size())
      throw std::invalid_argument("malformed UTF-8: truncated sequence");
    for (std::size_t j = 1; j < len; ++j)
      if ((static_cast<unsigned char>(text[i + j]) & 0xC0) != 0x80)
        throw std::invalid_argument("malformed UTF-8: bad continuation byte");
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Alphabet::Alphabet(std::string_view letters) : Alphabet(utf8_split(letters)) {}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2)
    throw std::invalid_argument("alphabet needs at least two symbols");
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_)
    if (!seen.insert(s).second)
      throw std::invalid_argument("duplicate symbol in alphabet: " + s);
}

std::optional<std::uint32_t> Alphabet::index_of(std::string_view symbol) const {
  for (std::uint32_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == symbol) return i;
  return std::nullopt;
}

std::string Alphabet::str() const {
  std::string out;
  for (const auto& s : symbols_) out += s;
  return out;
}

Word::Word(Alphabet alphabet, std::vector<std::uint32_t> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (std::uint32_t l : letters_)
    if (l >= alphabet_.size())
      throw std::invalid_argument("letter index out of range for alphabet");
}

Word Word::epsilon(const Alphabet& a) { return Word(a, {}); }

Word Word::parse(const Alphabet& a, std::string_view text) {
  if (text.empty() || text == "eps") return epsilon(a);
  std::vector<std::uint32_t> letters;
  for (const auto& sym : utf8_split(text)) {
    auto idx = a.index_of(sym);
    if (!idx)
      throw std::invalid_argument("symbol '" + sym + "' not in alphabet " + a.str());
    letters.push_back(*idx);
  }
  return Word(a, std::move(letters));
}

std::string Word::str() const {
  std::string out;
  for (std::uint32_t l : letters_) out += alphabet_.symbol(l);
  return out;
}

Word Word::reversed() const {
  std::vector<std::uint32_t> r(letters_.rbegin(), letters_.rend());
  return Word(alphabet_, std::move(r));
}

Word Word::prefix(std::size_t n) const {
  return Word(alphabet_, {letters_.begin(), letters_.begin() + std::min(n, size())});
}

Word Word::suffix(std::size_t n) const {
  n = std::min(n, size());
  return Word(alphabet_, {letters_.end() - n, letters_.end()});
}

Word Word::append(std::uint32_t letter) const {
  auto ls = letters_;
  ls.push_back(letter);
  return Word(alphabet_, std::move(ls));
}

Word Word::concat(const Word& other) const {
  if (alphabet_ != other.alphabet_)
    throw std::invalid_argument("alphabet mismatch in word concatenation");
  auto ls = letters_;
  ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
  return Word(alphabet_, std::move(ls));
}

bool Word::operator<(const Word& o) const {
  if (size() != o.size()) return size() < o.size();
  return letters_ < o.letters_;
}

namespace {

void require_same_alphabet(const Word& a, const Word& b) {
  if (a.alphabet() != b.alphabet())
    throw std::invalid_argument("alphabet mismatch between words");
}

std::vector<std::uint32_t> permutation_or_throw(const Alphabet& a,
                                                std::vector<std::uint32_t> map) {
  if (map.size() != a.size())
    throw std::invalid_argument("letter map size does not match alphabet");
  std::vector<bool> hit(a.size(), false);
  for (std::uint32_t v : map) {
    if (v >= a.size() || hit[v])
      throw std::invalid_argument("letter map is not a permutation");
    hit[v] = true;
  }
  return map;
}

}  // namespace

ThetaSpec::ThetaSpec(Alphabet a, std::vector<std::uint32_t> map, bool anti_flag)
    : alphabet(std::move(a)),
      letter_map(permutation_or_throw(alphabet, std::move(map))),
      anti(anti_flag) {}

ThetaSpec ThetaSpec::identity(const Alphabet& a, bool anti_flag) {
  std::vector<std::uint32_t> map(a.size());
  std::iota(map.begin(), map.end(), 0);
  return ThetaSpec(a, std::move(map), anti_flag);
}

ThetaSpec ThetaSpec::parse(const Alphabet& a, std::string_view pairs, bool anti_flag) {
  std::vector<std::uint32_t> map(a.size());
  std::iota(map.begin(), map.end(), 0);
  std::vector<bool> assigned(a.size(), false);
  std::size_t pos = 0;
  while (pos < pairs.size()) {
    std::size_t comma = pairs.find(',', pos);
    std::string_view item = pairs.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    pos = comma == std::string_view::npos ? pairs.size() : comma + 1;
    if (item.empty()) continue;
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("theta pair missing ':' in \"" + std::string(item) + "\"");
    auto from = a.index_of(item.substr(0, colon));
    auto to = a.index_of(item.substr(colon + 1));
    if (!from || !to)
      throw std::invalid_argument("theta pair uses a symbol outside the alphabet");
    if (assigned[*from])
      throw std::invalid_argument("theta maps a letter twice");
    assigned[*from] = true;
    map[*from] = *to;
  }
  return ThetaSpec(a, std::move(map), anti_flag);
}

std::uint32_t ThetaSpec::inverse_map(std::uint32_t letter) const {
  for (std::uint32_t i = 0; i < letter_map.size(); ++i)
    if (letter_map[i] == letter) return i;
  throw std::logic_error("letter map is not a permutation");
}

unsigned ThetaSpec::order() const {
  // lcm of cycle lengths of the letter permutation
  std::vector<bool> seen(letter_map.size(), false);
  unsigned ord = 1;
  for (std::uint32_t i = 0; i < letter_map.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    std::uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = letter_map[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  if (anti && ord % 2 != 0) ord *= 2;
  return ord;
}

std::vector<std::uint32_t> ThetaSpec::moved_letters() const {
  std::vector<std::uint32_t> moved;
  for (std::uint32_t i = 0; i < letter_map.size(); ++i)
    if (letter_map[i] != i) moved.push_back(i);
  return moved;
}

std::string ThetaSpec::str() const {
  std::string out;
  for (std::uint32_t i = 0; i < letter_map.size(); ++i) {
    if (!out.empty()) out += ',';
    out += alphabet.symbol(i) + ":" + alphabet.symbol(letter_map[i]);
  }
  return out;
}

std::size_t prefix_distance(const Word& a, const Word& b) {
  require_same_alphabet(a, b);
  std::size_t lcp = 0;
  while (lcp < a.size() && lcp < b.size() && a[lcp] == b[lcp]) ++lcp;
  return a.size() + b.size() - 2 * lcp;
}

std::size_t suffix_distance(const Word& a, const Word& b) {
  return prefix_distance(a.reversed(), b.reversed());
}

std::size_t factor_distance(const Word& a, const Word& b) {
  require_same_alphabet(a, b);
  // best[j] = longest common suffix of a[..i) and b[..j) while scanning i
  std::size_t best = 0;
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = 0;  // row[j-1] from the previous iteration of i
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = (a[i - 1] == b[j - 1]) ? diag + 1 : 0;
      best = std::max(best, row[j]);
      diag = up;
    }
  }
  return a.size() + b.size() - 2 * best;
}

std::size_t theta_distance(const Word& a, const Word& b, const ThetaSpec& t) {
  require_same_alphabet(a, b);
  if (a.alphabet() != t.alphabet)
    throw std::invalid_argument("alphabet mismatch between word and theta");
  if (a == b) return 0;
  if (theta_apply(a, t) == b) return 1;
  return 2;
}

Word theta_apply(const Word& w, const ThetaSpec& t, unsigned power) {
  if (w.alphabet() != t.alphabet)
    throw std::invalid_argument("alphabet mismatch between word and theta");
  std::vector<std::uint32_t> letters = w.letters();
  for (unsigned p = 0; p < power; ++p) {
    for (auto& l : letters) l = t.map(l);
    if (t.anti) std::reverse(letters.begin(), letters.end());
  }
  return Word(w.alphabet(), std::move(letters));
}

bool is_overlapping_free(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("overlap test is undefined on the empty word");
  // KMP failure function; a nonempty border of the whole word is an overlap.
  std::vector<std::size_t> fail(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  return fail[w.size() - 1] == 0;
}

MetricSpec MetricSpec::prefix(unsigned k) {
  if (k < 1) throw std::invalid_argument("metric parameter k must be >= 1");
  return MetricSpec{Kind::prefix, k, std::nullopt};
}

MetricSpec MetricSpec::suffix(unsigned k) {
  if (k < 1) throw std::invalid_argument("metric parameter k must be >= 1");
  return MetricSpec{Kind::suffix, k, std::nullopt};
}

MetricSpec MetricSpec::factor(unsigned k) {
  if (k < 1) throw std::invalid_argument("metric parameter k must be >= 1");
  return MetricSpec{Kind::factor, k, std::nullopt};
}

MetricSpec MetricSpec::theta_metric(ThetaSpec t) {
  return MetricSpec{Kind::theta, 1, std::move(t)};
}

std::string MetricSpec::name() const {
  switch (kind) {
    case Kind::prefix: return "prefix";
    case Kind::suffix: return "suffix";
    case Kind::factor: return "factor";
    case Kind::theta: return "theta";
  }
  return "?";
}

std::size_t MetricSpec::distance(const Word& a, const Word& b) const {
  switch (kind) {
    case Kind::prefix: return prefix_distance(a, b);
    case Kind::suffix: return suffix_distance(a, b);
    case Kind::factor: return factor_distance(a, b);
    case Kind::theta: return theta_distance(a, b, *theta);
  }
  throw std::logic_error("bad metric kind");
}

namespace {

// Inserts base·u into `out` for every word u of length <= budget.
void extend_all(const Alphabet& a, const Word& base, unsigned budget, WordSet& out) {
  out.insert(base);
  std::vector<Word> frontier{base};
  for (unsigned step = 0; step < budget; ++step) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (std::uint32_t l = 0; l < a.size(); ++l) {
        Word grown = w.append(l);
        out.insert(grown);
        next.push_back(grown);
      }
    frontier = std::move(next);
  }
}

WordSet prefix_ball(const Word& w, unsigned k) {
  WordSet out;
  const Alphabet& a = w.alphabet();
  for (std::size_t plen = 0; plen <= w.size(); ++plen) {
    std::size_t dropped = w.size() - plen;
    if (dropped > k) continue;
    extend_all(a, w.prefix(plen), k - static_cast<unsigned>(dropped), out);
  }
  return out;
}

WordSet factor_ball(const Word& w, unsigned k) {
  WordSet out;
  const Alphabet& a = w.alphabet();
  for (std::size_t start = 0; start <= w.size(); ++start) {
    for (std::size_t len = 0; start + len <= w.size(); ++len) {
      std::size_t dropped = w.size() - len;
      if (dropped > k) continue;
      unsigned budget = k - static_cast<unsigned>(dropped);
      Word f(a, {w.letters().begin() + start, w.letters().begin() + start + len});
      // all u·f·v with |u|+|v| <= budget
      WordSet fronts;
      extend_all(a, Word::epsilon(a), budget, fronts);
      for (const auto& u : fronts) {
        WordSet tails;
        extend_all(a, Word::epsilon(a), budget - static_cast<unsigned>(u.size()), tails);
        for (const auto& v : tails) out.insert(u.concat(f).concat(v));
      }
    }
  }
  return out;
}

}  // namespace

WordSet neighborhood(const Word& w, const MetricSpec& metric, unsigned k) {
  switch (metric.kind) {
    case MetricSpec::Kind::prefix:
      return prefix_ball(w, k);
    case MetricSpec::Kind::suffix: {
      WordSet out;
      for (const auto& r : prefix_ball(w.reversed(), k)) out.insert(r.reversed());
      return out;
    }
    case MetricSpec::Kind::factor:
      return factor_ball(w, k);
    case MetricSpec::Kind::theta: {
      if (k >= 2)
        throw std::invalid_argument("theta neighborhood is infinite for k >= 2");
      WordSet out{w};
      if (k == 1) out.insert(theta_apply(w, *metric.theta));
      return out;
    }
  }
  throw std::logic_error("bad metric kind");
}

}  // namespace vlc
