#include "tfg/fraction.hpp"

#include "tfg/errors.hpp"

#include <algorithm>
#include <map>

namespace tfg {

FractionElement g_mul(const Triple& t, const FractionElement& x, const FractionElement& y) {
  return {loop_mul(t.grp(), x.a, jones_act(t, x.v, y.a)), compose(x.v, y.v)};
}

FractionElement g_inv(const Triple& t, const FractionElement& x) {
  VElement vi = x.v.inverse();
  return {jones_act(t, vi, loop_inv(t.grp(), x.a)), std::move(vi)};
}

bool commutes(const Triple& t, const FractionElement& x, const FractionElement& y) {
  return g_mul(t, x, y) == g_mul(t, y, x);
}

FractionElement random_fraction(Rng& rng, const FiniteGroup& g, std::size_t max_leaves, std::size_t max_depth) {
  Loop a = random_loop(rng, g, max_leaves, max_depth);
  return {std::move(a), random_v(rng, max_leaves, max_depth)};
}

std::vector<FractionElement> center_elements(const Triple& t) {
  t.require_autos("center_elements");
  std::vector<FractionElement> out;
  for (int z : t.grp().center())
    if (t.alpha(0, z) == z && t.alpha(1, z) == z) out.push_back(from_loop(loop_constant(z)));
  return out;
}

std::string fraction_str(const FractionElement& x) {
  return "[" + loop_str(x.a) + "] | [" + x.v.str() + "]";
}

FractionElement fraction_parse(std::string_view text, const FiniteGroup& g) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("fraction element must look like [loop] | [v-table]");
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    return s;
  };
  return {loop_parse(strip(text.substr(0, bar)), g), VElement::parse(strip(text.substr(bar + 1)))};
}

// Labelled trees

LabelledTree phi_forest(const Triple& t, const LabelledTree& lt, const Forest& f) {
  if (f.size() != lt.leaves.size())
    throw PreconditionError("forest has " + std::to_string(f.size()) + " roots but the tree has " +
                            std::to_string(lt.leaves.size()) + " leaves");
  std::vector<Word> cells;
  std::vector<int> labels;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Word& leaf = lt.leaves.cells()[i];
    for (const Word& p : f[i].cells()) {
      cells.push_back(leaf + p);
      labels.push_back(t.alpha_word(p, lt.labels[i]));
    }
  }
  return {Sdp::from_words(std::move(cells)), std::move(labels)};
}

LabelledTree push_to(const Triple& t, const LabelledTree& lt, const Sdp& finer) {
  std::vector<int> labels;
  for (const Word& q : finer.cells()) {
    auto i = lt.leaves.cell_containing(q);
    if (!i) throw PreconditionError("partition does not refine the tree");
    labels.push_back(t.alpha_word(q.substr(lt.leaves.cells()[*i].size()), lt.labels[*i]));
  }
  return {finer, std::move(labels)};
}

bool lt_equiv(const Triple& t, const LabelledTree& x, const LabelledTree& y) {
  const int extra = tanushevski_reduce(t).depth;
  Sdp join = common_refinement(x.leaves, y.leaves);
  std::vector<Word> cells;
  Sdp tail = Sdp::uniform(static_cast<std::size_t>(extra));
  for (const Word& q : join.cells())
    for (const Word& p : tail.cells()) cells.push_back(q + p);
  Sdp target = Sdp::from_words(std::move(cells));
  return push_to(t, x, target).labels == push_to(t, y, target).labels;
}

Loop kappa_t(const Triple& t, const LabelledTree& lt) {
  t.require_autos("kappa_t");
  std::vector<Loop::Cell> cells;
  for (std::size_t i = 0; i < lt.leaves.size(); ++i) {
    const Word& leaf = lt.leaves.cells()[i];
    cells.emplace_back(leaf, t.alpha_word_inv(leaf, lt.labels[i]));
  }
  return Loop::canonical(std::move(cells));
}

std::vector<int> cloning_map(const Triple& t, int k, const std::vector<int>& g) {
  const int n = static_cast<int>(g.size());
  if (k < 1 || k > n) throw PreconditionError("cloning index " + std::to_string(k) + " outside 1.." + std::to_string(n));
  std::vector<int> out(g.begin(), g.begin() + (k - 1));
  out.push_back(t.alpha(0, g[static_cast<std::size_t>(k - 1)]));
  out.push_back(t.alpha(1, g[static_cast<std::size_t>(k - 1)]));
  out.insert(out.end(), g.begin() + k, g.end());
  return out;
}

namespace {

void tree_text(const LabelledTree& lt, const Word& at, std::string& out) {
  if (auto i = lt.leaves.cell_containing(at); i && lt.leaves.cells()[*i] == at) {
    out += std::to_string(lt.labels[*i]);
    return;
  }
  out += "(";
  tree_text(lt, at.child(0), out);
  out += ",";
  tree_text(lt, at.child(1), out);
  out += ")";
}

struct TreeParser {
  std::string_view s;
  std::size_t pos = 0;
  const FiniteGroup& g;
  std::vector<Word> cells;
  std::vector<int> labels;

  void skip() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  void expect(char c) {
    skip();
    if (pos >= s.size() || s[pos] != c) throw ParseError(std::string("expected '") + c + "' in tree text");
    ++pos;
  }
  void node(const Word& at) {
    skip();
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      node(at.child(0));
      expect(',');
      node(at.child(1));
      expect(')');
      return;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("expected a label in tree text");
    int label = std::stoi(std::string(s.substr(start, pos - start)));
    if (label >= g.order()) throw ParseError("tree label out of range");
    cells.push_back(at);
    labels.push_back(label);
  }
};

}  // namespace

std::string tree_str(const LabelledTree& lt) {
  std::string out;
  tree_text(lt, Word(), out);
  return out;
}

LabelledTree tree_parse(std::string_view text, const FiniteGroup& g) {
  TreeParser p{text, 0, g, {}, {}};
  p.node(Word());
  p.skip();
  if (p.pos != text.size()) throw ParseError("trailing characters in tree text");
  return {Sdp::from_words(std::move(p.cells)), std::move(p.labels)};
}

// Wreath elements

WreathElement WreathElement::from_points(std::vector<std::pair<CPoint, int>> pts, const FiniteGroup& g) {
  std::map<CPoint, int> m;
  for (auto& [x, h] : pts) {
    if (!x.is_dyadic()) throw PreconditionError("wreath support point " + x.str() + " is not dyadic");
    auto [it, fresh] = m.emplace(x, h);
    if (!fresh) it->second = g.mul(it->second, h);
  }
  WreathElement a;
  for (auto& [x, h] : m)
    if (h != 0) a.points.emplace_back(x, h);
  return a;
}

int WreathElement::at(const CPoint& x) const {
  for (auto& [y, h] : points)
    if (y == x) return h;
  return 0;
}

std::vector<CPoint> WreathElement::supp() const {
  std::vector<CPoint> out;
  for (auto& p : points) out.push_back(p.first);
  return out;
}

WreathElement wreath_act(const GroupMap& alpha, const VElement& v, const WreathElement& a) {
  if (!alpha.is_automorphism()) throw PreconditionError("wreath_act requires an automorphism");
  GroupMap inv = alpha.inverse();
  std::vector<std::pair<CPoint, int>> out;
  for (auto& [x, h] : a.points) {
    long s = v.slope(x);
    int val = h;
    for (long i = 0; i < std::abs(s); ++i) val = s > 0 ? alpha(val) : inv(val);
    out.emplace_back(v.apply(x), val);
  }
  return WreathElement::from_points(std::move(out), *alpha.source);
}

WreathElement wreath_mul(const FiniteGroup& g, const WreathElement& a, const WreathElement& b) {
  std::vector<std::pair<CPoint, int>> pts = a.points;
  pts.insert(pts.end(), b.points.begin(), b.points.end());
  return WreathElement::from_points(std::move(pts), g);
}

long cocf_exponent(const VElement& v, const CPoint& x) {
  for (const auto& [d, c] : v.pairs())
    if (x.starts_with(d)) return d.digit_sum() - c.digit_sum();
  throw PreconditionError("table does not cover point");
}

}  // namespace tfg
