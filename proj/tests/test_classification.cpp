#include "oracles.hpp"

#include "tfg/classification.hpp"
#include "tfg/errors.hpp"

#include <doctest.h>

#include <set>

using namespace tfg;

namespace {

// (Γ, ad(h0)βα0β⁻¹, ad(h1)βα1β⁻¹), swapped on request.
Triple twisted(const Triple& t, const GroupMap& beta, bool swap, int h0, int h1) {
  GroupMap bi = beta.inverse();
  GroupMap b0 = compose(GroupMap::inner(beta.target, h0), compose(beta, compose(t.a(0), bi)));
  GroupMap b1 = compose(GroupMap::inner(beta.target, h1), compose(beta, compose(t.a(1), bi)));
  return swap ? Triple(beta.target, b1, b0) : Triple(beta.target, b0, b1);
}

// Order of the cyclic subgroup of Out generated by a.
std::size_t out_order_oracle(const FiniteGroup& g, const std::vector<int>& a) {
  std::vector<int> p = a;
  std::size_t k = 1;
  while (!oracle::is_inner(g, p)) {
    std::vector<int> next(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) next[x] = a[static_cast<std::size_t>(p[x])];
    p = next;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("prop24 search") {
  Decision same = prop24_search(fixture("z3inv"), fixture("z3inv"));
  REQUIRE(same.verdict == Verdict::WitnessFound);
  CHECK(same.witness->beta == GroupMap::identity(cyclic_group(3)));
  CHECK_FALSE(same.witness->swap);
  CHECK(same.witness->h0 == 0);
  CHECK(same.witness->h1 == 0);
  Decision sw = prop24_search(fixture("z3inv"), fixture("z3swap"));
  REQUIRE(sw.verdict == Verdict::WitnessFound);
  CHECK(sw.witness->swap);
  CHECK(prop24_search(fixture("z4"), fixture("z4inv")).verdict == Verdict::NotFound);
  CHECK(prop24_search(fixture("z2"), fixture("z3")).verdict == Verdict::NotFound);
}

TEST_CASE("prop24 witnesses are sound and found for constructed twists") {
  for (const char* name : {"z3inv", "s3inner", "z4inv", "z2z2", "z5x2"}) {
    Triple t = fixture(name);
    auto auts = aut_group(t.group());
    for (std::uint64_t i = 0; i < 10; ++i) {
      Rng rng(derive_seed(61, i));
      const GroupMap& b = auts[uniform_index(rng, auts.size())];
      bool swap = uniform_index(rng, 2) == 1;
      int n = t.grp().order();
      int h0 = static_cast<int>(uniform_index(rng, static_cast<std::size_t>(n)));
      int h1 = static_cast<int>(uniform_index(rng, static_cast<std::size_t>(n)));
      Triple u = twisted(t, b, swap, h0, h1);
      CHECK(witness_holds(t, u, {b, swap, h0, h1}));
      Decision d = prop24_search(t, u);
      REQUIRE(d.verdict == Verdict::WitnessFound);
      CHECK(witness_holds(t, u, *d.witness));
      CHECK(cor28_decide(t, u).verdict != Verdict::NotIsomorphic);
    }
  }
}

TEST_CASE("cor28") {
  CHECK(cor28_decide(fixture("s3inner"), fixture("s3")).verdict == Verdict::Isomorphic);
  CHECK(cor28_decide(fixture("s3"), fixture("s3inner")).verdict == Verdict::Isomorphic);
  CHECK(cor28_decide(fixture("z4"), fixture("z4inv")).verdict == Verdict::NotIsomorphic);
  CHECK(cor28_decide(fixture("z4inv"), fixture("z4")).verdict == Verdict::NotIsomorphic);
  CHECK(cor28_decide(fixture("z2"), fixture("z3")).verdict == Verdict::NotIsomorphic);
  CHECK(cor28_decide(fixture("z3inv"), fixture("z3swap")).verdict == Verdict::Inconclusive);
}

TEST_CASE("cor28 against the innerness oracle") {
  auto names = fixture_names();
  for (const auto& l : names)
    for (const auto& r : names) {
      Triple a = fixture(l), b = fixture(r);
      if (!a.autos() || !b.autos()) continue;
      auto all_inner = [](const Triple& t) {
        return oracle::is_inner(t.grp(), t.a(0).image) && oracle::is_inner(t.grp(), t.a(1).image);
      };
      bool iso = find_isomorphism(a.group(), b.group()).has_value();
      Verdict want = !iso                             ? Verdict::NotIsomorphic
                     : all_inner(a) && all_inner(b)   ? Verdict::Isomorphic
                     : all_inner(a) != all_inner(b)   ? Verdict::NotIsomorphic
                                                      : Verdict::Inconclusive;
      CHECK_MESSAGE(cor28_decide(a, b).verdict == want, l << " vs " << r);
    }
}

TEST_CASE("cocf") {
  CHECK(cocf_check(fixture("z5x2"), fixture("z5x2")).verdict == Verdict::Holds);
  CHECK(cocf_check(fixture("z5x2"), fixture("z5x3")).verdict == Verdict::Holds);
  Decision d = cocf_check(fixture("z5x2"), fixture("z5x4"));
  CHECK(d.verdict == Verdict::Fails);
  CHECK(d.reason == "Out-subgroup orders 4 vs 2");
  auto g = cyclic_group(5);
  CHECK(out_order_oracle(*g, GroupMap::power(g, 2).image) == 4);
  CHECK(out_order_oracle(*g, GroupMap::power(g, 4).image) == 2);
  CHECK(out_subgroup(GroupMap::power(g, 2)).size() == 4);
  CHECK(out_subgroup(GroupMap::power(g, 4)).size() == 2);
  CHECK_THROWS_AS(cocf_check(fixture("z3swap"), fixture("z3inv")), PreconditionError);
}

TEST_CASE("out subgroups agree with the brute force order") {
  for (auto g : {cyclic_group(5), cyclic_group(7), symmetric_group(3), dihedral_group(4),
                 direct_product(cyclic_group(2), cyclic_group(2))})
    for (const auto& a : aut_group(g)) CHECK(out_subgroup(a).size() == out_order_oracle(*g, a.image));
}

TEST_CASE("iso maps") {
  Triple t = fixture("z3inv");
  IsoMap id(t, t, {GroupMap::identity(t.group()), false, 0, 0});
  IsoMap flip(t, fixture("z3swap"), {GroupMap::identity(t.group()), true, 0, 0});
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(62, i));
    FractionElement x = random_fraction(rng, t.grp()), y = random_fraction(rng, t.grp());
    CHECK(id.apply(x) == x);
    FractionElement fx = flip.apply(x);
    CHECK(fx.v == x.v.flip_conjugate());
    CHECK(fx.a == loop_push(x.a, NormalizerElement::flip_map()));
    CHECK(flip.apply(g_mul(t, x, y)) == g_mul(flip.target(), fx, flip.apply(y)));
  }
  CHECK_THROWS_AS(IsoMap(t, fixture("z3"), {GroupMap::identity(t.group()), false, 0, 0}), PreconditionError);
}

TEST_CASE("twisted iso maps are homomorphisms with inverses") {
  Triple t = fixture("z3inv");
  auto auts = aut_group(t.group());
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng(derive_seed(63, i));
    const GroupMap& b = auts[uniform_index(rng, auts.size())];
    bool swap = uniform_index(rng, 2) == 1;
    int h0 = static_cast<int>(uniform_index(rng, 3)), h1 = static_cast<int>(uniform_index(rng, 3));
    IsoMap m(t, twisted(t, b, swap, h0, h1), {b, swap, h0, h1});
    FractionElement x = random_fraction(rng, t.grp()), y = random_fraction(rng, t.grp());
    CHECK(m.apply(g_mul(t, x, y)) == g_mul(m.target(), m.apply(x), m.apply(y)));
    CHECK(m.apply_inverse(m.apply(x)) == x);
    FractionElement la = m.apply(from_loop(x.a));
    CHECK(la.v.is_identity());
    CHECK(support(la.a) == m.spatial().image(support(x.a)));
  }
}
