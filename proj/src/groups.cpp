#include "tfg/groups.hpp"

#include "tfg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace tfg {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul, std::vector<std::string> names)
    : n_(static_cast<int>(mul.size())), names_(std::move(names)) {
  if (n_ == 0) throw ParseError("group table is empty");
  if (!names_.empty() && static_cast<int>(names_.size()) != n_)
    throw ParseError("group names do not match the order");
  mul_.reserve(static_cast<std::size_t>(n_ * n_));
  for (int a = 0; a < n_; ++a) {
    if (static_cast<int>(mul[a].size()) != n_)
      throw ParseError("group table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n_; ++b) {
      int c = mul[a][b];
      if (c < 0 || c >= n_) throw ParseError("group table entry out of range at " + std::to_string(a) + "," + std::to_string(b));
      mul_.push_back(c);
    }
  }
  for (int a = 0; a < n_; ++a)
    if (this->mul(0, a) != a || this->mul(a, 0) != a)
      throw ParseError("index 0 is not the identity (element " + std::to_string(a) + ")");
  inv_.assign(static_cast<std::size_t>(n_), -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (this->mul(a, b) == 0 && this->mul(b, a) == 0) inv_[static_cast<std::size_t>(a)] = b;
    if (inv_[static_cast<std::size_t>(a)] < 0) throw ParseError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
          throw ParseError("group table is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
}

int FiniteGroup::pow(int g, long k) const {
  if (k < 0) {
    g = inv(g);
    k = -k;
  }
  int r = 0;
  for (long i = 0; i < k % element_order(g); ++i) r = mul(r, g);
  return r;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < n_; ++a) {
    bool central = true;
    for (int b = 0; b < n_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::string FiniteGroup::name(int g) const {
  return names_.empty() ? std::to_string(g) : names_[static_cast<std::size_t>(g)];
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[static_cast<std::size_t>(a)].push_back(mul(a, b));
  return t;
}

GroupPtr cyclic_group(int n) {
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a)].push_back((a + b) % n);
  return std::make_shared<const FiniteGroup>(std::move(mul));
}

GroupPtr symmetric_group(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = static_cast<int>(i);
    std::string s;
    for (int x : perms[i]) s += std::to_string(x);
    names.push_back(s);
  }
  std::vector<std::vector<int>> mul(perms.size());
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
      mul[a].push_back(index[c]);
    }
  return std::make_shared<const FiniteGroup>(std::move(mul), std::move(names));
}

GroupPtr dihedral_group(int n) {
  // r^k s^e at index k + n e.
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(2 * n));
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y) {
      int a = x % n, e = x / n, b = y % n, f = y / n;
      int k = ((e ? a - b : a + b) % n + n) % n;
      mul[static_cast<std::size_t>(x)].push_back(k + n * ((e + f) % 2));
    }
  return std::make_shared<const FiniteGroup>(std::move(mul));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int na = a->order(), nb = b->order();
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(na * nb));
  std::vector<std::string> names;
  for (int x = 0; x < na * nb; ++x) {
    names.push_back("(" + a->name(x / nb) + "," + b->name(x % nb) + ")");
    for (int y = 0; y < na * nb; ++y)
      mul[static_cast<std::size_t>(x)].push_back(a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb));
  }
  return std::make_shared<const FiniteGroup>(std::move(mul), std::move(names));
}

// GroupMap

GroupMap GroupMap::identity(const GroupPtr& g) {
  std::vector<int> img(static_cast<std::size_t>(g->order()));
  std::iota(img.begin(), img.end(), 0);
  return {g, g, std::move(img)};
}

GroupMap GroupMap::inner(const GroupPtr& g, int h) {
  std::vector<int> img;
  for (int x = 0; x < g->order(); ++x) img.push_back(g->conj(h, x));
  return {g, g, std::move(img)};
}

GroupMap GroupMap::trivial(const GroupPtr& g) {
  return {g, g, std::vector<int>(static_cast<std::size_t>(g->order()), 0)};
}

GroupMap GroupMap::power(const GroupPtr& g, long k) {
  std::vector<int> img;
  for (int x = 0; x < g->order(); ++x) img.push_back(g->pow(x, k));
  return {g, g, std::move(img)};
}

bool GroupMap::is_hom() const {
  if (static_cast<int>(image.size()) != source->order()) return false;
  for (int x : image)
    if (x < 0 || x >= target->order()) return false;
  for (int a = 0; a < source->order(); ++a)
    for (int b = 0; b < source->order(); ++b)
      if ((*this)(source->mul(a, b)) != target->mul((*this)(a), (*this)(b))) return false;
  return true;
}

bool GroupMap::is_injective() const {
  std::set<int> seen(image.begin(), image.end());
  return seen.size() == image.size();
}

bool GroupMap::is_surjective() const {
  std::set<int> seen(image.begin(), image.end());
  return static_cast<int>(seen.size()) == target->order();
}

bool GroupMap::is_automorphism() const {
  return *source == *target && is_injective() && is_surjective();
}

GroupMap GroupMap::inverse() const {
  if (!is_injective() || !is_surjective()) throw PreconditionError("map is not a bijection");
  std::vector<int> inv(image.size());
  for (std::size_t g = 0; g < image.size(); ++g) inv[static_cast<std::size_t>(image[g])] = static_cast<int>(g);
  return {target, source, std::move(inv)};
}

std::string GroupMap::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < image.size(); ++i) s += (i ? "," : "") + std::to_string(image[i]);
  return s + "]";
}

GroupMap compose(const GroupMap& f, const GroupMap& g) {
  std::vector<int> img;
  img.reserve(g.image.size());
  for (int x : g.image) img.push_back(f(x));
  return {g.source, f.target, std::move(img)};
}

// Triple

Triple::Triple(GroupPtr g, GroupMap a0, GroupMap a1)
    : g_(std::move(g)), a0_(std::move(a0)), a1_(std::move(a1)) {
  for (const GroupMap* a : {&a0_, &a1_}) {
    if (!(*a->source == *g_) || !(*a->target == *g_) || !a->is_hom())
      throw PreconditionError("triple maps must be endomorphisms of the group");
  }
  autos_ = a0_.is_automorphism() && a1_.is_automorphism();
  if (autos_) {
    inv0_ = a0_.inverse().image;
    inv1_ = a1_.inverse().image;
  }
}

bool Triple::untwisted() const {
  return a0_ == GroupMap::identity(g_) && a1_ == GroupMap::identity(g_);
}

void Triple::require_autos(const char* what) const {
  if (!autos_) throw PreconditionError(std::string(what) + " requires both maps to be automorphisms");
}

int Triple::alpha_inv(int i, int g) const {
  require_autos("alpha_inv");
  return (i == 0 ? inv0_ : inv1_)[static_cast<std::size_t>(g)];
}

int Triple::alpha_word(const Word& m, int g) const {
  for (std::size_t i = 0; i < m.size(); ++i) g = alpha(m[i], g);
  return g;
}

int Triple::alpha_word_inv(const Word& m, int g) const {
  for (std::size_t i = m.size(); i-- > 0;) g = alpha_inv(m[i], g);
  return g;
}

GroupMap Triple::alpha_word_map(const Word& m) const {
  std::vector<int> img;
  for (int g = 0; g < g_->order(); ++g) img.push_back(alpha_word(m, g));
  return {g_, g_, std::move(img)};
}

// Enumeration

int max_group_order() {
  if (const char* env = std::getenv("THOMPSON_MAX_GROUP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 24;
}

void check_bound(const FiniteGroup& g) {
  if (g.order() > max_group_order())
    throw BoundError("group of order " + std::to_string(g.order()) + " exceeds the enumeration bound " +
                     std::to_string(max_group_order()));
}

namespace {

std::vector<bool> generated(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  std::deque<int> queue{0};
  in[0] = true;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s : gens) {
      int y = g.mul(x, s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

// All homomorphisms src → dst that are bijective and send gens to
// elements of the same order.
std::vector<GroupMap> bijections_from_gens(const GroupPtr& src, const GroupPtr& dst, bool first_only) {
  std::vector<GroupMap> out;
  if (src->order() != dst->order()) return out;
  std::vector<int> gens = generating_set(*src);
  std::vector<std::vector<int>> cands;
  for (int s : gens) {
    std::vector<int> c;
    for (int y = 0; y < dst->order(); ++y)
      if (dst->element_order(y) == src->element_order(s)) c.push_back(y);
    if (c.empty()) return out;
    cands.push_back(std::move(c));
  }
  std::vector<std::size_t> idx(gens.size(), 0);
  while (true) {
    std::vector<int> images;
    for (std::size_t i = 0; i < gens.size(); ++i) images.push_back(cands[i][idx[i]]);
    if (auto h = extend_hom(src, dst, gens, images); h && h->is_injective()) {
      out.push_back(std::move(*h));
      if (first_only) return out;
    }
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < cands[i].size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return out;
}

}  // namespace

std::vector<int> generating_set(const FiniteGroup& g) {
  const int n = g.order();
  if (n == 1) return {};
  for (int k = 1; k < n; ++k) {
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 1);
    do {
      auto in = generated(g, c);
      if (std::all_of(in.begin(), in.end(), [](bool b) { return b; })) return c;
    } while (next_combination(c, n));
  }
  std::vector<int> all(static_cast<std::size_t>(n - 1));
  std::iota(all.begin(), all.end(), 1);
  return all;
}

std::optional<GroupMap> extend_hom(const GroupPtr& src, const GroupPtr& dst, const std::vector<int>& gens,
                                   const std::vector<int>& images) {
  std::vector<int> map(static_cast<std::size_t>(src->order()), -1);
  map[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      int y = src->mul(x, gens[j]);
      int val = dst->mul(map[static_cast<std::size_t>(x)], images[j]);
      int& slot = map[static_cast<std::size_t>(y)];
      if (slot < 0) {
        slot = val;
        queue.push_back(y);
      } else if (slot != val) {
        return std::nullopt;
      }
    }
  }
  if (std::find(map.begin(), map.end(), -1) != map.end()) return std::nullopt;
  return GroupMap{src, dst, std::move(map)};
}

std::vector<GroupMap> aut_group(const GroupPtr& g) {
  check_bound(*g);
  auto auts = bijections_from_gens(g, g, false);
  std::sort(auts.begin(), auts.end(), [](const GroupMap& a, const GroupMap& b) { return a.image < b.image; });
  return auts;
}

std::vector<GroupMap> inner_auts(const GroupPtr& g) {
  std::set<std::vector<int>> seen;
  std::vector<GroupMap> out;
  for (int h = 0; h < g->order(); ++h) {
    GroupMap a = GroupMap::inner(g, h);
    if (seen.insert(a.image).second) out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), [](const GroupMap& a, const GroupMap& b) { return a.image < b.image; });
  return out;
}

bool is_inner(const GroupMap& a) {
  if (!(*a.source == *a.target)) return false;
  for (int h = 0; h < a.source->order(); ++h)
    if (GroupMap::inner(a.source, h).image == a.image) return true;
  return false;
}

std::vector<int> out_class(const GroupMap& a) {
  std::vector<int> best = a.image;
  for (int h = 0; h < a.source->order(); ++h) {
    std::vector<int> c = compose(a, GroupMap::inner(a.source, h)).image;
    if (c < best) best = std::move(c);
  }
  return best;
}

std::optional<GroupMap> find_isomorphism(const GroupPtr& a, const GroupPtr& b) {
  check_bound(*a);
  check_bound(*b);
  auto found = bijections_from_gens(a, b, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<GroupMap> isomorphisms(const GroupPtr& a, const GroupPtr& b) {
  auto beta0 = find_isomorphism(a, b);
  if (!beta0) return {};
  std::vector<GroupMap> out;
  for (const GroupMap& c : aut_group(b)) out.push_back(compose(c, *beta0));
  std::sort(out.begin(), out.end(), [](const GroupMap& x, const GroupMap& y) { return x.image < y.image; });
  return out;
}

std::vector<int> gamma_alpha_fixed(const Triple& t) {
  std::vector<int> out;
  for (int g = 0; g < t.grp().order(); ++g)
    if (t.alpha(0, g) == g && t.alpha(1, g) == g) out.push_back(g);
  return out;
}

Reduction tanushevski_reduce(const Triple& t) {
  const FiniteGroup& g = t.grp();
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<bool> k(n, false);
  k[0] = true;
  int depth = 0;
  while (true) {
    std::vector<bool> next(n, false);
    for (int x = 0; x < g.order(); ++x)
      next[static_cast<std::size_t>(x)] = k[static_cast<std::size_t>(t.alpha(0, x))] && k[static_cast<std::size_t>(t.alpha(1, x))];
    if (next == k) break;
    k = std::move(next);
    ++depth;
  }
  std::vector<int> kernel;
  for (int x = 0; x < g.order(); ++x)
    if (k[static_cast<std::size_t>(x)]) kernel.push_back(x);
  // Coset representatives: least element of g·N.
  std::vector<int> rep(n);
  for (int x = 0; x < g.order(); ++x) {
    int best = x;
    for (int m : kernel) best = std::min(best, g.mul(x, m));
    rep[static_cast<std::size_t>(x)] = best;
  }
  std::vector<int> reps(rep.begin(), rep.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::map<int, int> index;
  for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<int>(i);
  auto coset = [&](int x) { return index[rep[static_cast<std::size_t>(x)]]; };
  std::vector<std::vector<int>> mul(reps.size());
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) mul[a].push_back(coset(g.mul(reps[a], reps[b])));
  auto q = std::make_shared<const FiniteGroup>(std::move(mul));
  std::vector<int> proj, b0, b1;
  for (int x = 0; x < g.order(); ++x) proj.push_back(coset(x));
  for (int r : reps) {
    b0.push_back(coset(t.alpha(0, r)));
    b1.push_back(coset(t.alpha(1, r)));
  }
  Triple quotient(q, GroupMap{q, q, b0}, GroupMap{q, q, b1});
  return Reduction{std::move(quotient), GroupMap{t.group(), q, std::move(proj)}, std::move(kernel), depth};
}

bool joint_map_injective(const Triple& t) {
  for (int g = 1; g < t.grp().order(); ++g)
    if (t.alpha(0, g) == 0 && t.alpha(1, g) == 0) return false;
  return true;
}

int h_q_alpha(const Triple& t, int h0, int h1, const Word& q) {
  t.require_autos("h_q_alpha");
  const FiniteGroup& g = t.grp();
  int h = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    int letter = q[i];
    h = g.mul(letter ? h1 : h0, t.alpha(letter, h));
  }
  return h;
}

// Fixtures

namespace {

Triple make(const GroupPtr& g, GroupMap a0, GroupMap a1) { return Triple(g, std::move(a0), std::move(a1)); }

}  // namespace

Triple fixture(const std::string& name) {
  auto id = [](const GroupPtr& g) { return GroupMap::identity(g); };
  if (name == "z2") { auto g = cyclic_group(2); return make(g, id(g), id(g)); }
  if (name == "z3") { auto g = cyclic_group(3); return make(g, id(g), id(g)); }
  if (name == "z3inv") { auto g = cyclic_group(3); return make(g, id(g), GroupMap::power(g, -1)); }
  if (name == "z3swap") { auto g = cyclic_group(3); return make(g, GroupMap::power(g, -1), id(g)); }
  if (name == "z3triv") { auto g = cyclic_group(3); return make(g, GroupMap::trivial(g), GroupMap::trivial(g)); }
  if (name == "z4") { auto g = cyclic_group(4); return make(g, id(g), id(g)); }
  if (name == "z4inv") { auto g = cyclic_group(4); return make(g, id(g), GroupMap::power(g, -1)); }
  if (name == "z4dbl") { auto g = cyclic_group(4); return make(g, GroupMap::power(g, 2), GroupMap::trivial(g)); }
  if (name == "s3") { auto g = symmetric_group(3); return make(g, id(g), id(g)); }
  if (name == "s3inner") {
    auto g = symmetric_group(3);
    return make(g, GroupMap::inner(g, 1), GroupMap::inner(g, 3));
  }
  if (name == "z5x2") { auto g = cyclic_group(5); return make(g, id(g), GroupMap::power(g, 2)); }
  if (name == "z5x3") { auto g = cyclic_group(5); return make(g, id(g), GroupMap::power(g, 3)); }
  if (name == "z5x4") { auto g = cyclic_group(5); return make(g, id(g), GroupMap::power(g, 4)); }
  if (name == "z2z2") {
    auto g = direct_product(cyclic_group(2), cyclic_group(2));
    return make(g, id(g), GroupMap{g, g, {0, 2, 1, 3}});
  }
  if (name == "d4") { auto g = dihedral_group(4); return make(g, id(g), id(g)); }
  throw PreconditionError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"z2", "z3", "z3inv", "z3swap", "z3triv", "z4", "z4inv", "z4dbl", "s3", "s3inner",
          "z5x2", "z5x3", "z5x4", "z2z2", "d4"};
}

}  // namespace tfg
