#include "oracles.hpp"

#include "tfg/errors.hpp"

#include <doctest.h>

using namespace tfg;

namespace {

const VElement A = VElement::parse("00->0 01->10 1->11");

// π_v(b) at the sequence s: find the codomain cell c above s, pull back to d.
int jones_oracle(const Triple& t, const VElement& v, const Loop& b, const std::string& s) {
  for (const auto& [d, c] : v.pairs())
    if (oracle::starts_with(s, c.bits())) {
      std::string x = d.bits() + s.substr(c.size());
      return oracle::alpha_path_inv(t, c.bits(), oracle::alpha_path(t, d.bits(), oracle::loop_at(b, x)));
    }
  throw std::logic_error("uncovered");
}

}  // namespace

TEST_CASE("loop products and supports") {
  auto gp = cyclic_group(3);
  const FiniteGroup& g = *gp;
  Loop a = loop_parse("0:1; 1:0", g), b = loop_parse("0:0; 1:1", g);
  CHECK(loop_mul(g, a, b) == Loop(1));
  CHECK(loop_mul(g, a, b) == loop_mul(g, b, a));
  CHECK(loop_mul(g, a, loop_inv(g, a)) == Loop(0));
  CHECK(support(Loop(0)).empty());
  CHECK(support(a) == SdiUnion::parse("0"));
  CHECK(support(loop_parse("00:2; 01:2; 1:0", g)) == SdiUnion::parse("0"));
  CHECK(loop_parse("00:2; 01:2; 1:0", g).cells().size() == 2);
  CHECK_THROWS_AS(loop_parse("0:1", g), ParseError);
  CHECK_THROWS_AS(loop_parse("0:1; 1:3", g), ParseError);
}

TEST_CASE("loop text round trip") {
  auto gp = symmetric_group(3);
  const FiniteGroup& g = *gp;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(31, i));
    Loop a = random_loop(rng, g);
    CHECK(loop_parse(loop_str(a), g) == a);
  }
}

TEST_CASE("twists") {
  Triple t = fixture("s3inner");
  VElement c = make_contraction(Word("00"), Word("0"));
  CHECK(tau(t, c, CPoint()) == t.a(0));
  Triple z = fixture("z3inv");
  CHECK(tau(z, A, CPoint(Word(""), Word("1"))) == z.a(1).inverse());
  CHECK(tau(z, VElement(), CPoint()) == GroupMap::identity(z.group()));
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(34, i));
    VElement v = random_v(rng, 8, 4);
    CPoint x = random_cpoint(rng);
    std::string s = oracle::expand(x, 24);
    for (const auto& [d, c] : v.pairs())
      if (oracle::starts_with(s, d.bits()))
        for (int g = 0; g < 6; ++g)
          CHECK(tau(t, v, x)(g) == oracle::alpha_path_inv(t, c.bits(), oracle::alpha_path(t, d.bits(), g)));
  }
}

TEST_CASE("jones action examples") {
  Triple z = fixture("z3inv");
  const FiniteGroup& g = z.grp();
  Loop a = loop_parse("0:0; 1:1", g);
  CHECK(jones_act(z, A, a) == loop_parse("0:0; 10:0; 11:2", g));
  CHECK(jones_act(z, VElement(), a) == a);
  Triple u = fixture("z4");
  Loop b = loop_parse("00:1; 01:2; 1:3", u.grp());
  CHECK(jones_act(u, A, b) == loop_push(b, {false, A}));
}

TEST_CASE("jones action agrees with the pointwise oracle") {
  for (const char* name : {"z3inv", "z4inv", "s3inner", "z2z2", "z5x2"}) {
    Triple t = fixture(name);
    for (std::uint64_t i = 0; i < 150; ++i) {
      Rng rng(derive_seed(32, i));
      VElement v = random_v(rng, 8, 4);
      Loop b = random_loop(rng, t.grp());
      Loop pb = jones_act(t, v, b);
      CPoint y = random_cpoint(rng);
      std::string s = oracle::expand(y, 24);
      CHECK(oracle::loop_at(pb, s) == jones_oracle(t, v, b, s));
      // Support equivariance.
      CHECK(support(pb) == v.image(support(b)));
    }
  }
}

TEST_CASE("pushforward by normalizer elements") {
  auto gp = cyclic_group(4);
  const FiniteGroup& g = *gp;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(33, i));
    Loop a = random_loop(rng, g);
    NormalizerElement phi = random_normalizer(rng);
    CPoint x = random_cpoint(rng);
    CHECK(loop_push(a, phi).at(phi.apply(x)) == a.at(x));
    CHECK(support(loop_push(a, phi)) == phi.image(support(a)));
  }
}

TEST_CASE("diagonal maps") {
  auto g = cyclic_group(5);
  Loop a = loop_parse("0:1; 10:2; 11:0", *g);
  CHECK(loop_apply_map(GroupMap::power(g, 2), a) == loop_parse("0:2; 10:4; 11:0", *g));
  CHECK(loop_indicator(SdiUnion::parse("10"), 3) == loop_parse("0:0; 10:3; 11:0", *g));
}
