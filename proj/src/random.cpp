#include "tfg/random.hpp"

#include "tfg/errors.hpp"

#include <algorithm>

namespace tfg {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Word random_word(Rng& rng, std::size_t min_len, std::size_t max_len) {
  std::size_t len = min_len + uniform_index(rng, max_len - min_len + 1);
  std::string bits(len, '0');
  for (char& c : bits) c = static_cast<char>('0' + uniform_index(rng, 2));
  return Word(bits);
}

std::vector<Word> random_split(Rng& rng, std::vector<Word> cells, std::size_t n, std::size_t max_len) {
  while (cells.size() < n) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() < max_len) open.push_back(i);
    if (open.empty()) break;
    std::size_t i = open[uniform_index(rng, open.size())];
    Word w = cells[i];
    cells[i] = w.child(0);
    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.child(1));
  }
  return cells;
}

Sdp random_sdp(Rng& rng, std::size_t leaves, std::size_t max_depth) {
  return Sdp::from_words(random_split(rng, {Word()}, leaves, max_depth));
}

VElement random_v(Rng& rng, std::size_t max_leaves, std::size_t max_depth) {
  std::size_t cap = std::min<std::size_t>(max_leaves, std::size_t{1} << std::min<std::size_t>(max_depth, 20));
  std::size_t n = 1 + uniform_index(rng, cap);
  std::vector<Word> dom = random_split(rng, {Word()}, n, max_depth);
  std::vector<Word> cod = random_split(rng, {Word()}, n, max_depth);
  std::shuffle(cod.begin(), cod.end(), rng);
  std::vector<WordPair> pairs;
  for (std::size_t i = 0; i < dom.size(); ++i) pairs.emplace_back(dom[i], cod[i]);
  return VElement::from_pairs(std::move(pairs));
}

NormalizerElement random_normalizer(Rng& rng, std::size_t max_leaves, std::size_t max_depth) {
  bool flip = uniform_index(rng, 2) == 1;
  return {flip, random_v(rng, max_leaves, max_depth)};
}

CPoint random_cpoint(Rng& rng, std::size_t max_pre, std::size_t max_period) {
  return CPoint(random_word(rng, 0, max_pre), random_word(rng, 1, max_period));
}

CPoint random_dyadic_point(Rng& rng, std::size_t max_len) {
  return CPoint::dyadic(random_word(rng, 0, max_len));
}

namespace {

// Pairs cells of `dom` with cells of `cod` (both covering the same measure
// region) after random splitting to equal counts and a random matching.
void match_randomly(Rng& rng, std::vector<Word> dom, std::vector<Word> cod, std::size_t extra,
                    std::vector<WordPair>& out) {
  if (dom.empty() && cod.empty()) return;
  std::size_t n = std::max(dom.size(), cod.size()) + uniform_index(rng, extra + 1);
  dom = random_split(rng, std::move(dom), n, 64);
  cod = random_split(rng, std::move(cod), n, 64);
  std::shuffle(cod.begin(), cod.end(), rng);
  for (std::size_t i = 0; i < dom.size(); ++i) out.emplace_back(dom[i], cod[i]);
}

}  // namespace

VElement random_v_sending(Rng& rng, const Word& from, const Word& to, std::size_t extra) {
  if (from.empty() || to.empty()) throw PreconditionError("random_v_sending needs proper intervals");
  std::vector<WordPair> pairs{{from, to}};
  match_randomly(rng, SdiUnion::from_words({from}).complement().cells(),
                 SdiUnion::from_words({to}).complement().cells(), extra, pairs);
  return VElement::from_pairs(std::move(pairs));
}

VElement random_fix(Rng& rng, const SdiUnion& u, std::size_t extra) {
  std::vector<WordPair> pairs;
  for (const Word& w : u.cells()) pairs.emplace_back(w, w);
  std::vector<Word> free = u.complement().cells();
  match_randomly(rng, free, free, extra, pairs);
  return VElement::from_pairs(std::move(pairs));
}

}  // namespace tfg
