#include "tfg/thompson.hpp"

#include "tfg/errors.hpp"

#include <algorithm>
#include <map>

namespace tfg {

namespace {

std::string word_text(const Word& w) { return w.empty() ? "e" : w.bits(); }

std::string words_text(const std::vector<Word>& ws) {
  std::string out;
  for (const Word& w : ws) out += (out.empty() ? "" : ",") + word_text(w);
  return "{" + out + "}";
}

// Splits the leftmost shortest cell of the smaller list until both lists
// have the same number of cells.
void balance(std::vector<Word>& a, std::vector<Word>& b) {
  while (a.size() != b.size()) {
    std::vector<Word>& s = a.size() < b.size() ? a : b;
    auto it = std::min_element(s.begin(), s.end(),
                               [](const Word& x, const Word& y) { return x.size() < y.size(); });
    Word w = *it;
    *it = w.child(0);
    s.insert(it + 1, w.child(1));
  }
}

}  // namespace

VElement VElement::reduce(std::vector<WordPair> pairs, const std::vector<std::size_t>* order) {
  std::map<Word, Word> cells;
  std::vector<Word> names;
  for (auto& [d, c] : pairs) cells.emplace(d, c);
  if (order) {
    for (std::size_t i : *order) names.push_back(pairs.at(i).first);
  } else {
    for (auto& [d, c] : cells) names.push_back(d);
  }
  merge_siblings(cells, std::move(names), [](const Word& l, const Word& r) -> std::optional<Word> {
    if (l.empty() || r.empty() || l.back() != 0 || r != l.sibling()) return std::nullopt;
    return l.parent();
  });
  VElement v;
  v.pairs_.assign(cells.begin(), cells.end());
  return v;
}

static void validate_pairs(const std::vector<WordPair>& pairs) {
  std::vector<Word> dom, cod;
  for (auto& [d, c] : pairs) {
    dom.push_back(d);
    cod.push_back(c);
  }
  if (!Sdp::is_valid(dom)) throw ParseError("domain is not a standard dyadic partition: " + words_text(dom));
  if (!Sdp::is_valid(cod)) throw ParseError("codomain is not a standard dyadic partition: " + words_text(cod));
}

VElement VElement::from_pairs(std::vector<WordPair> pairs) {
  validate_pairs(pairs);
  return reduce(std::move(pairs), nullptr);
}

VElement VElement::from_pairs_ordered(std::vector<WordPair> pairs,
                                      const std::vector<std::size_t>& merge_order) {
  validate_pairs(pairs);
  return reduce(std::move(pairs), &merge_order);
}

VElement VElement::parse(std::string_view text) {
  std::vector<WordPair> pairs;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto arrow = token.find("->");
    if (arrow == std::string::npos) throw ParseError("expected dom->cod, got '" + token + "'");
    pairs.emplace_back(Word::parse(token.substr(0, arrow)), Word::parse(token.substr(arrow + 2)));
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t' || c == '\n') flush();
    else token += c;
  }
  flush();
  if (pairs.empty()) throw ParseError("empty table");
  return from_pairs(std::move(pairs));
}

Sdp VElement::domain() const {
  std::vector<Word> ws;
  for (auto& p : pairs_) ws.push_back(p.first);
  return Sdp::from_words(std::move(ws));
}

Sdp VElement::codomain() const {
  std::vector<Word> ws;
  for (auto& p : pairs_) ws.push_back(p.second);
  return Sdp::from_words(std::move(ws));
}

std::optional<std::size_t> VElement::pair_containing(const Word& w) const {
  auto it = std::upper_bound(pairs_.begin(), pairs_.end(), w,
                             [](const Word& x, const WordPair& p) { return x < p.first; });
  if (it == pairs_.begin()) return std::nullopt;
  --it;
  if (!it->first.is_prefix_of(w)) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

std::optional<Word> VElement::image_of(const Word& w) const {
  auto i = pair_containing(w);
  if (!i) return std::nullopt;
  const auto& [d, c] = pairs_[*i];
  return c + w.substr(d.size());
}

CPoint VElement::apply(const CPoint& x) const {
  for (const auto& [d, c] : pairs_)
    if (x.starts_with(d)) return x.drop(d.size()).prepend(c);
  throw PreconditionError("table does not cover point");  // unreachable for valid tables
}

long VElement::slope(const CPoint& x) const {
  for (const auto& [d, c] : pairs_)
    if (x.starts_with(d)) return static_cast<long>(d.size()) - static_cast<long>(c.size());
  throw PreconditionError("table does not cover point");
}

SdiUnion VElement::image(const SdiUnion& u) const {
  std::vector<Word> out;
  for (const Word& w : u.cells()) {
    if (auto img = image_of(w)) {
      out.push_back(*img);
      continue;
    }
    for (const auto& [d, c] : pairs_)
      if (w.is_prefix_of(d)) out.push_back(c);
  }
  return SdiUnion::from_words(std::move(out));
}

std::vector<WordPair> VElement::refined_pairs(const Sdp& p) const {
  std::vector<WordPair> out;
  for (const Word& r : common_refinement(p, domain()).cells()) out.emplace_back(r, *image_of(r));
  return out;
}

VElement VElement::inverse() const {
  std::vector<WordPair> inv;
  for (auto& [d, c] : pairs_) inv.emplace_back(c, d);
  return reduce(std::move(inv), nullptr);
}

VElement VElement::flip_conjugate() const {
  std::vector<WordPair> out;
  for (auto& [d, c] : pairs_) out.emplace_back(d.complemented(), c.complemented());
  return reduce(std::move(out), nullptr);
}

bool VElement::is_in_F() const {
  for (std::size_t i = 0; i + 1 < pairs_.size(); ++i)
    if (!(pairs_[i].second < pairs_[i + 1].second)) return false;
  return true;
}

bool VElement::is_in_T() const {
  const std::size_t n = pairs_.size();
  std::size_t descents = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (pairs_[(i + 1) % n].second < pairs_[i].second) ++descents;
  return descents <= 1;
}

std::string VElement::str() const {
  std::string out;
  for (auto& [d, c] : pairs_) out += (out.empty() ? "" : " ") + word_text(d) + "->" + word_text(c);
  return out;
}

VElement compose(const VElement& v, const VElement& w) {
  std::vector<WordPair> by_cod;
  for (auto& [d, c] : w.pairs()) by_cod.emplace_back(c, d);
  std::sort(by_cod.begin(), by_cod.end());
  std::vector<WordPair> out;
  for (const Word& r : common_refinement(w.codomain(), v.domain()).cells()) {
    auto it = std::upper_bound(by_cod.begin(), by_cod.end(), r,
                               [](const Word& x, const WordPair& p) { return x < p.first; });
    --it;
    out.emplace_back(it->second + r.substr(it->first.size()), *v.image_of(r));
  }
  return VElement::from_pairs(std::move(out));
}

NormalizerElement NormalizerElement::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  NormalizerElement phi;
  if (!text.empty() && text.front() == '~') {
    phi.flip = true;
    text.remove_prefix(1);
  }
  phi.v = VElement::parse(text);
  return phi;
}

CPoint NormalizerElement::apply(const CPoint& x) const {
  CPoint y = v.apply(x);
  return flip ? y.complemented() : y;
}

SdiUnion NormalizerElement::image(const SdiUnion& u) const {
  SdiUnion img = v.image(u);
  if (!flip) return img;
  std::vector<Word> ws;
  for (const Word& w : img.cells()) ws.push_back(w.complemented());
  return SdiUnion::from_words(std::move(ws));
}

NormalizerElement NormalizerElement::inverse() const {
  VElement inv = v.inverse();
  return {flip, flip ? inv.flip_conjugate() : inv};
}

NormalizerElement compose(const NormalizerElement& a, const NormalizerElement& b) {
  const VElement& left = b.flip ? a.v.flip_conjugate() : a.v;
  return {a.flip != b.flip, compose(left, b.v)};
}

VElement normalizer_conjugate(const NormalizerElement& phi, const VElement& v) {
  VElement c = compose(compose(phi.v, v), phi.v.inverse());
  return phi.flip ? c.flip_conjugate() : c;
}

VElement make_contraction(const Word& j, const Word& target) {
  const bool j_shorter = j.size() < target.size();
  const Word& s = j_shorter ? j : target;
  const Word& l = j_shorter ? target : j;
  if (!s.is_proper_prefix_of(l))
    throw PreconditionError("make_contraction: " + word_text(j) + " and " + word_text(target) +
                            " are not in proper prefix relation");
  if (s.empty()) throw PreconditionError("make_contraction: the full space has no enclosing interval");
  SdiUnion region = SdiUnion::from_words({s.parent()});
  std::vector<Word> dom_rest = SdiUnion::from_words({j}).complement().intersect(region).cells();
  std::vector<Word> cod_rest = SdiUnion::from_words({target}).complement().intersect(region).cells();
  balance(dom_rest, cod_rest);
  std::vector<WordPair> pairs{{j, target}};
  for (std::size_t i = 0; i < dom_rest.size(); ++i) pairs.emplace_back(dom_rest[i], cod_rest[i]);
  for (const Word& w : region.complement().cells()) pairs.emplace_back(w, w);
  return VElement::from_pairs(std::move(pairs));
}

VElement make_v_mapping(const SdiUnion& a, const SdiUnion& b) {
  if (a.empty() || b.empty() || a.is_full() != b.is_full())
    throw PreconditionError("make_v_mapping: sets " + a.str() + " and " + b.str() +
                            " cannot be matched by an element of V");
  std::vector<Word> da = a.cells(), db = b.cells();
  std::vector<Word> ca = a.complement().cells(), cb = b.complement().cells();
  balance(da, db);
  if (!ca.empty()) balance(ca, cb);
  std::vector<WordPair> pairs;
  for (std::size_t i = 0; i < da.size(); ++i) pairs.emplace_back(da[i], db[i]);
  for (std::size_t i = 0; i < ca.size(); ++i) pairs.emplace_back(ca[i], cb[i]);
  return VElement::from_pairs(std::move(pairs));
}

VElement make_transposition(const Word& k, const Word& l) {
  if (k.is_prefix_of(l) || l.is_prefix_of(k))
    throw PreconditionError("make_transposition: intervals " + word_text(k) + ", " + word_text(l) +
                            " are not disjoint");
  std::vector<WordPair> pairs{{k, l}, {l, k}};
  for (const Word& w : SdiUnion::from_words({k, l}).complement().cells()) pairs.emplace_back(w, w);
  return VElement::from_pairs(std::move(pairs));
}

std::vector<VElement> fix_generators(const SdiUnion& u, std::size_t depth) {
  SdiUnion free = u.complement();
  if (free.empty()) throw PreconditionError("fix_generators: the set covers the whole space");
  std::vector<Word> cells;
  std::vector<Word> layer{Word()};
  for (std::size_t d = 0; d <= depth; ++d) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      if (free.contains(w)) cells.push_back(w);
      next.push_back(w.child(0));
      next.push_back(w.child(1));
    }
    layer = std::move(next);
  }
  std::sort(cells.begin(), cells.end());
  std::vector<VElement> gens;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      if (!cells[i].is_prefix_of(cells[j])) gens.push_back(make_transposition(cells[i], cells[j]));
  for (const Word& k : cells) {
    std::vector<WordPair> pairs{{k + Word("00"), k + Word("0")},
                                {k + Word("01"), k + Word("10")},
                                {k + Word("1"), k + Word("11")}};
    for (const Word& w : SdiUnion::from_words({k}).complement().cells()) pairs.emplace_back(w, w);
    gens.push_back(VElement::from_pairs(std::move(pairs)));
  }
  return gens;
}

}  // namespace tfg
