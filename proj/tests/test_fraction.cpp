#include "oracles.hpp"

#include "tfg/errors.hpp"

#include <doctest.h>

using namespace tfg;

namespace {

const VElement A = VElement::parse("00->0 01->10 1->11");
const VElement S = VElement::parse("0->1 1->0");

int tau_oracle(const Triple& t, const VElement& v, const std::string& s, int g) {
  for (const auto& [d, c] : v.pairs())
    if (oracle::starts_with(s, d.bits()))
      return oracle::alpha_path_inv(t, c.bits(), oracle::alpha_path(t, d.bits(), g));
  throw std::logic_error("uncovered");
}

}  // namespace

TEST_CASE("fraction group examples") {
  Triple t = fixture("z2");
  const FiniteGroup& g = t.grp();
  CHECK(g_mul(t, from_v(A), from_v(S)) == from_v(compose(A, S)));
  Loop a = loop_parse("0:1; 1:0", g), b = loop_parse("0:0; 1:1", g);
  CHECK(g_mul(t, from_loop(a), from_loop(b)) == from_loop(loop_mul(g, a, b)));
  FractionElement x{a, S};
  CHECK(g_mul(t, x, x) == from_loop(Loop(1)));
  CHECK_FALSE(commutes(t, from_loop(a), from_v(S)));
  CHECK(commutes(t, from_loop(a), from_loop(loop_parse("0:0; 1:1", g))));
}

TEST_CASE("group laws with the pointwise product oracle") {
  for (const char* name : {"z3inv", "s3inner", "z4inv", "z5x2"}) {
    Triple t = fixture(name);
    const FiniteGroup& g = t.grp();
    for (std::uint64_t i = 0; i < 150; ++i) {
      Rng rng(derive_seed(41, i));
      FractionElement x = random_fraction(rng, g), y = random_fraction(rng, g), z = random_fraction(rng, g);
      FractionElement xy = g_mul(t, x, y);
      CHECK(g_mul(t, xy, z) == g_mul(t, x, g_mul(t, y, z)));
      CHECK(g_mul(t, x, g_inv(t, x)) == from_loop(Loop(0)));
      CHECK(xy.v == compose(x.v, y.v));
      // (a·π_v(b))(v s) = a(v s)·τ(b(s)).
      std::string s = oracle::expand(random_cpoint(rng), 40);
      std::string vs = oracle::apply_table(x.v, s);
      int want = g.mul(oracle::loop_at(x.a, vs), tau_oracle(t, x.v, s, oracle::loop_at(y.a, s)));
      CHECK(oracle::loop_at(xy.a, vs) == want);
      CHECK(fraction_parse(fraction_str(x), g) == x);
    }
  }
}

TEST_CASE("centers") {
  CHECK(center_elements(fixture("z2")).size() == 2);
  CHECK(center_elements(fixture("s3")).size() == 1);
  CHECK(center_elements(fixture("z4inv")).size() == 2);
  CHECK(center_elements(fixture("d4")).size() == 2);
}

TEST_CASE("labelled tree expansion") {
  Triple t = fixture("z4inv");
  const FiniteGroup& g = t.grp();
  LabelledTree root{Sdp(), {1}};
  LabelledTree caret = phi_forest(t, root, {Sdp::parse("0 1")});
  CHECK(caret.labels == std::vector<int>{t.alpha(0, 1), t.alpha(1, 1)});
  CHECK(phi_forest(t, root, {Sdp()}) == root);
  LabelledTree full = phi_forest(t, root, {Sdp::uniform(2)});
  for (std::size_t k = 0; k < 4; ++k)
    CHECK(full.labels[k] == oracle::alpha_path(t, full.leaves.cells()[k].bits(), 1));
  CHECK(kappa_t(t, root) == Loop(1));
  LabelledTree two{Sdp::parse("0 1"), {1, 1}};
  CHECK(kappa_t(t, two) == loop_parse("0:1; 1:3", g));
  CHECK(tree_parse(tree_str(full), g) == full);
  CHECK(tree_parse("((1,2),0)", g).leaves == Sdp::parse("00 01 1"));
}

TEST_CASE("trees agree with forest and cloning oracles") {
  for (const char* name : {"z3inv", "s3inner", "z4dbl", "z2z2"}) {
    Triple t = fixture(name);
    const FiniteGroup& g = t.grp();
    for (std::uint64_t i = 0; i < 100; ++i) {
      Rng rng(derive_seed(42, i));
      Sdp leaves = random_sdp(rng, 1 + uniform_index(rng, 4), 3);
      LabelledTree lt{leaves, {}};
      for (std::size_t k = 0; k < leaves.size(); ++k)
        lt.labels.push_back(static_cast<int>(uniform_index(rng, static_cast<std::size_t>(g.order()))));
      Forest f;
      for (std::size_t k = 0; k < leaves.size(); ++k) f.push_back(random_sdp(rng, 1 + uniform_index(rng, 3), 2));
      LabelledTree big = phi_forest(t, lt, f);
      std::size_t idx = 0;
      for (std::size_t k = 0; k < leaves.size(); ++k)
        for (const Word& p : f[k].cells()) {
          CHECK(big.leaves.cells()[idx] == leaves.cells()[k] + p);
          CHECK(big.labels[idx] == oracle::alpha_path(t, p.bits(), lt.labels[k]));
          ++idx;
        }
      CHECK(lt_equiv(t, lt, big));
      if (t.autos()) CHECK(kappa_t(t, big) == kappa_t(t, lt));
      // A single caret at leaf k is the cloning map.
      std::size_t k = uniform_index(rng, leaves.size());
      Forest caret(leaves.size(), Sdp());
      caret[k] = Sdp::parse("0 1");
      CHECK(phi_forest(t, lt, caret).labels == cloning_map(t, static_cast<int>(k) + 1, lt.labels));
    }
  }
}

TEST_CASE("tree equivalence") {
  Triple t = fixture("z4");
  LabelledTree a{Sdp(), {1}}, b{Sdp(), {2}};
  CHECK(lt_equiv(t, a, a));
  CHECK_FALSE(lt_equiv(t, a, b));
  Triple z = fixture("z3triv");
  CHECK(lt_equiv(z, LabelledTree{Sdp(), {1}}, LabelledTree{Sdp::parse("0 1"), {2, 0}}));
  Triple u = fixture("z2");
  CHECK(kappa_t(u, LabelledTree{Sdp::parse("0 1"), {1, 0}}) == loop_parse("0:1; 1:0", u.grp()));
}

TEST_CASE("cloning map") {
  Triple t = fixture("z3inv");
  CHECK(cloning_map(t, 1, {1}) == std::vector<int>{1, 2});
  Triple u = fixture("z3");
  CHECK(cloning_map(u, 2, {0, 1, 2}) == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("wreath action") {
  auto g = cyclic_group(3);
  GroupMap inv = GroupMap::power(g, -1);
  WreathElement a = WreathElement::from_points({{CPoint(), 1}}, *g);
  WreathElement b = wreath_act(inv, A, a);
  CHECK(b.at(CPoint()) == 2);
  CHECK(b.supp() == std::vector<CPoint>{CPoint()});
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(43, i));
    CPoint x = random_dyadic_point(rng);
    VElement v = random_v(rng, 8, 4);
    WreathElement w = WreathElement::from_points({{x, 1}}, *g);
    WreathElement img = wreath_act(inv, v, w);
    long s = v.slope(x);
    CHECK(img.at(v.apply(x)) == (s % 2 == 0 ? 1 : 2));
    WreathElement y = WreathElement::from_points({{random_dyadic_point(rng), 2}}, *g);
    CHECK(wreath_act(inv, v, wreath_mul(*g, w, y)) == wreath_mul(*g, img, wreath_act(inv, v, y)));
  }
}

TEST_CASE("cocf exponent") {
  CHECK(cocf_exponent(VElement(), CPoint()) == 0);
  CHECK(cocf_exponent(A, CPoint(Word("01"), Word("0"))) == 0);
  CHECK(cocf_exponent(A, CPoint(Word(""), Word("1"))) == -1);
  Triple t = fixture("z5x2");
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(44, i));
    VElement v = random_v(rng, 8, 4);
    CPoint x = random_cpoint(rng);
    long n = cocf_exponent(v, x);
    int want = 1;
    for (long k = 0; k < ((n % 4) + 4) % 4; ++k) want = t.alpha(1, want);
    CHECK(tau(t, v, x)(1) == want);
  }
}
