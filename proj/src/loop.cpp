#include "tfg/loop.hpp"

#include "tfg/errors.hpp"

namespace tfg {

Loop loop_indicator(const SdiUnion& u, int g) {
  std::vector<Loop::Cell> cells;
  for (const Word& w : u.cells()) cells.emplace_back(w, g);
  for (const Word& w : u.complement().cells()) cells.emplace_back(w, 0);
  return Loop::canonical(std::move(cells));
}

Loop loop_mul(const FiniteGroup& g, const Loop& a, const Loop& b) {
  return zip_with(a, b, [&](int x, int y) { return g.mul(x, y); });
}

Loop loop_inv(const FiniteGroup& g, const Loop& a) {
  return a.map([&](int x) { return g.inv(x); });
}

Loop loop_apply_map(const GroupMap& beta, const Loop& a) {
  return a.map([&](int x) { return beta(x); });
}

Loop loop_push(const Loop& a, const NormalizerElement& phi) {
  std::vector<Loop::Cell> cells;
  for (const Word& q : common_refinement(a.partition(), phi.v.domain()).cells()) {
    Word img = *phi.v.image_of(q);
    cells.emplace_back(phi.flip ? img.complemented() : img, a.at(q));
  }
  return Loop::canonical(std::move(cells));
}

SdiUnion support(const Loop& a) {
  std::vector<Word> ws;
  for (auto& [w, g] : a.cells())
    if (g != 0) ws.push_back(w);
  return SdiUnion::from_words(std::move(ws));
}

GroupMap tau_cells(const Triple& t, const Word& d, const Word& c) {
  t.require_autos("tau");
  std::vector<int> img;
  for (int g = 0; g < t.grp().order(); ++g) img.push_back(t.alpha_word_inv(c, t.alpha_word(d, g)));
  return {t.group(), t.group(), std::move(img)};
}

GroupMap tau(const Triple& t, const VElement& v, const CPoint& x) {
  for (const auto& [d, c] : v.pairs())
    if (x.starts_with(d)) return tau_cells(t, d, c);
  throw PreconditionError("table does not cover point");
}

Loop jones_act(const Triple& t, const VElement& v, const Loop& a) {
  t.require_autos("jones_act");
  std::vector<Loop::Cell> cells;
  for (const Word& q : common_refinement(a.partition(), v.domain()).cells()) {
    const auto& [d, c] = v.pairs()[*v.pair_containing(q)];
    cells.emplace_back(c + q.substr(d.size()), t.alpha_word_inv(c, t.alpha_word(d, a.at(q))));
  }
  return Loop::canonical(std::move(cells));
}

Loop random_loop(Rng& rng, const FiniteGroup& g, std::size_t max_leaves, std::size_t max_depth) {
  std::size_t n = 1 + uniform_index(rng, max_leaves);
  std::vector<Loop::Cell> cells;
  for (const Word& w : random_sdp(rng, n, max_depth).cells())
    cells.emplace_back(w, static_cast<int>(uniform_index(rng, static_cast<std::size_t>(g.order()))));
  return Loop::canonical(std::move(cells));
}

std::string loop_str(const Loop& a) {
  std::string out;
  for (auto& [w, g] : a.cells())
    out += (out.empty() ? "" : "; ") + (w.empty() ? std::string("e") : w.bits()) + ":" + std::to_string(g);
  return out;
}

Loop loop_parse(std::string_view text, const FiniteGroup& g) {
  std::vector<Loop::Cell> cells;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      auto colon = tok.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected word:element, got '" + std::string(tok) + "'");
      std::string val(tok.substr(colon + 1));
      int x = 0;
      try {
        std::size_t used = 0;
        x = std::stoi(val, &used);
        if (used != val.size()) throw std::invalid_argument(val);
      } catch (const std::exception&) {
        throw ParseError("bad element index '" + val + "'");
      }
      if (x < 0 || x >= g.order()) throw ParseError("element index " + val + " out of range");
      cells.emplace_back(Word::parse(tok.substr(0, colon)), x);
    }
    start = end + 1;
  }
  return Loop::from_cells(std::move(cells));
}

}  // namespace tfg
