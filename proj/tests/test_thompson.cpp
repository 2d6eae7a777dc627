#include "oracles.hpp"

#include "tfg/errors.hpp"
#include "tfg/random.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tfg;

namespace {

const VElement A = VElement::parse("00->0 01->10 1->11");
const VElement S = VElement::parse("0->1 1->0");

// Codomain order along the domain order: identity for F, a rotation for T.
bool order_oracle(const VElement& v, bool cyclic) {
  std::vector<std::string> cod;
  for (const auto& [d, c] : v.pairs()) cod.push_back(c.bits());
  std::vector<std::string> sorted = cod;
  std::sort(sorted.begin(), sorted.end());
  if (!cyclic) return cod == sorted;
  for (std::size_t r = 0; r < cod.size(); ++r) {
    std::vector<std::string> rot(cod.begin() + static_cast<long>(r), cod.end());
    rot.insert(rot.end(), cod.begin(), cod.begin() + static_cast<long>(r));
    if (rot == sorted) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("composition examples") {
  CHECK(compose(A, A.inverse()).is_identity());
  CHECK(compose(S, S).is_identity());
  CHECK(compose(A, A) == VElement::parse("000->0 001->10 01->110 1->111"));
  CHECK(compose(A, S).str() == "0->11 10->0 11->10");
  CHECK(VElement::parse("0->0 10->10 11->11").str() == "e->e");
}

TEST_CASE("apply and slope examples") {
  CHECK(A.apply(CPoint()) == CPoint());
  CHECK(S.apply(CPoint()) == CPoint(Word("1"), Word("0")));
  CPoint x(Word("01"), Word("10"));
  CHECK(A.apply(x) == CPoint(Word(""), Word("10")));
  CHECK(oracle::expand(A.apply(x), 30) == oracle::apply_table(A, oracle::expand(x, 32)).substr(0, 30));
  CHECK(VElement().slope(x) == 0);
  CHECK(A.slope(CPoint()) == 1);
  CHECK(A.slope(CPoint(Word(""), Word("1"))) == -1);
}

TEST_CASE("membership in F and T") {
  CHECK(A.is_in_F());
  CHECK(A.is_in_T());
  CHECK_FALSE(S.is_in_F());
  CHECK(S.is_in_T());
  CHECK(VElement::parse("00->1 01->00 1->01").is_in_T());
  CHECK_FALSE(VElement::parse("00->1 01->00 1->01").is_in_F());
  CHECK_FALSE(VElement::parse("0->10 10->0 11->11").is_in_T());
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(derive_seed(21, i));
    VElement v = random_v(rng, 8, 4);
    CHECK(v.is_in_F() == order_oracle(v, false));
    CHECK(v.is_in_T() == order_oracle(v, true));
  }
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(VElement::parse("0->0 0->1"), ParseError);
  CHECK_THROWS_AS(VElement::parse("0->0 1->0"), ParseError);
  CHECK_THROWS_AS(VElement::parse("00->0 1->1"), ParseError);
  CHECK_THROWS_AS(VElement::parse("0-1"), ParseError);
}

TEST_CASE("prefix replacement agrees with the string oracle") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng(derive_seed(22, i));
    VElement v = random_v(rng), w = random_v(rng);
    CPoint x = random_cpoint(rng);
    std::string s = oracle::expand(x, 64);
    std::string vs = oracle::apply_table(v, s);
    CHECK(oracle::expand(v.apply(x), 40) == vs.substr(0, 40));
    CHECK(v.slope(x) == oracle::slope_at(v, s));
    CHECK(oracle::expand(compose(v, w).apply(x), 40) == oracle::apply_table(v, oracle::apply_table(w, s)).substr(0, 40));
    CHECK(oracle::expand(v.inverse().apply(v.apply(x)), 40) == s.substr(0, 40));
    CHECK(oracle::expand(v.flip_conjugate().apply(x.complemented()), 40) ==
          oracle::expand(v.apply(x).complemented(), 40));
  }
}

TEST_CASE("group laws in V") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(derive_seed(23, i));
    VElement u = random_v(rng), v = random_v(rng), w = random_v(rng);
    CHECK(compose(compose(u, v), w) == compose(u, compose(v, w)));
    CHECK(compose(u, u.inverse()).is_identity());
    CHECK(compose(u.inverse(), u).is_identity());
    // Chain rule for slopes.
    CPoint x = random_cpoint(rng);
    CHECK(compose(u, v).slope(x) == u.slope(v.apply(x)) + v.slope(x));
  }
}

TEST_CASE("reduction is confluent") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(derive_seed(24, i));
    VElement v = random_v(rng, 8, 4);
    // Expand to a common depth, then reduce in a random merge order.
    std::vector<WordPair> big = v.refined_pairs(Sdp::uniform(v.domain().depth() + 1));
    std::vector<std::size_t> order(big.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(VElement::from_pairs_ordered(big, order) == v);
    std::reverse(order.begin(), order.end());
    CHECK(VElement::from_pairs_ordered(big, order) == v);
  }
}

TEST_CASE("flip conjugation") {
  CHECK(normalizer_conjugate(NormalizerElement(), A) == A);
  CHECK(A.flip_conjugate() == VElement::parse("11->1 10->01 0->00"));
  CHECK(normalizer_conjugate(NormalizerElement::flip_map(), A) == VElement::parse("11->1 10->01 0->00"));
  CHECK(S.flip_conjugate() == S);
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(25, i));
    NormalizerElement p = random_normalizer(rng), q = random_normalizer(rng);
    VElement v = random_v(rng);
    CPoint x = random_cpoint(rng);
    CHECK(normalizer_conjugate(p, v).apply(p.apply(x)) == p.apply(v.apply(x)));
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p, q).apply(x) == p.apply(q.apply(x)));
  }
}

TEST_CASE("contractions") {
  VElement c = make_contraction(Word("00"), Word("0"));
  CHECK(c.image_of(Word("00")) == Word("0"));
  CHECK(c.slope(CPoint()) == 1);
  CHECK(make_contraction(Word("0"), Word("00")) == c.inverse());
  VElement d = make_contraction(Word("010"), Word("01011"));
  CHECK(d.image_of(Word("010")) == Word("01011"));
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(26, i));
    CPoint x = random_cpoint(rng);
    if (!x.starts_with(Word("01"))) CHECK(d.apply(x) == x);
  }
}

TEST_CASE("fix generators fix the given set pointwise") {
  for (const char* u : {"0", "00 01", "1 00"}) {
    SdiUnion su = SdiUnion::parse(u);
    auto gens = fix_generators(su, 3);
    CHECK_FALSE(gens.empty());
    for (const VElement& v : gens)
      for (const std::string& w : oracle::words(4)) {
        CPoint x = CPoint(Word(w), Word("01"));
        if (su.contains(x)) CHECK(v.apply(x) == x);
      }
  }
  auto all = fix_generators(SdiUnion(), 2);
  CHECK(std::find(all.begin(), all.end(), make_transposition(Word("0"), Word("1"))) != all.end());
}

TEST_CASE("v mapping and transpositions") {
  SdiUnion a = SdiUnion::parse("0"), b = SdiUnion::parse("00 11");
  VElement v = make_v_mapping(a, b);
  CHECK(v.image(a) == b);
  CHECK(v.image(a.complement()) == b.complement());
  VElement t = make_transposition(Word("00"), Word("11"));
  CHECK(t.image_of(Word("00")) == Word("11"));
  CHECK(t.image_of(Word("11")) == Word("00"));
  CHECK(compose(t, t).is_identity());
}
