#include "tfg/checks.hpp"

#include "tfg/errors.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace tfg {

namespace {

class Run {
 public:
  Run(SuiteReport& r) : r_(r) {}  // NOLINT(google-explicit-constructor)
  void fail(int i, std::string msg) {
    ++count_;
    if (r_.failures.size() < kMaxStoredFailures) r_.failures.push_back({i, std::move(msg)});
  }
  void expect(bool ok, int i, const std::function<std::string()>& msg) {
    if (!ok) fail(i, msg());
  }
  int count() const { return count_; }

 private:
  SuiteReport& r_;
  int count_ = 0;
};

int random_element(Rng& rng, const FiniteGroup& g) {
  return static_cast<int>(uniform_index(rng, static_cast<std::size_t>(g.order())));
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[uniform_index(rng, xs.size())];
}

std::string fs(const FractionElement& x) { return fraction_str(x); }

int alpha1_power(const Triple& t, long n, int g) {
  Word w = Word("1").repeated(static_cast<std::size_t>(std::abs(n)));
  return n >= 0 ? t.alpha_word(w, g) : t.alpha_word_inv(w, g);
}

GroupMap alpha1_power_map(const Triple& t, long n) {
  std::vector<int> img;
  for (int g = 0; g < t.grp().order(); ++g) img.push_back(alpha1_power(t, n, g));
  return {t.group(), t.group(), std::move(img)};
}

// Target triple reached from t by β, the twisting pair and an optional swap.
Triple twisted_target(const Triple& t, const GroupMap& beta, bool swap, int h0, int h1) {
  GroupMap binv = beta.inverse();
  GroupMap b0 = compose(GroupMap::inner(beta.target, h0), compose(beta, compose(t.a(0), binv)));
  GroupMap b1 = compose(GroupMap::inner(beta.target, h1), compose(beta, compose(t.a(1), binv)));
  return swap ? Triple(beta.target, b1, b0) : Triple(beta.target, b0, b1);
}

std::vector<int> central_elements(const Triple& t) {
  std::vector<int> out;
  for (int z : t.grp().center())
    if (t.alpha(0, z) == z && t.alpha(1, z) == z) out.push_back(z);
  return out;
}

Loop depth_loop(const std::vector<int>& values, std::size_t depth) {
  std::vector<Loop::Cell> cells;
  const auto& ws = Sdp::uniform(depth).cells();
  for (std::size_t i = 0; i < ws.size(); ++i) cells.emplace_back(ws[i], values[i]);
  return Loop::canonical(std::move(cells));
}

std::string values_str(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "(" + out + ")";
}

// Odometer over all arrays of the given length with entries below n.
bool next_array(std::vector<int>& a, int n) {
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    if (++*it < n) return true;
    *it = 0;
  }
  return false;
}

// Suites

SuiteReport group_axioms(const Triple& t, std::uint64_t seed, int iters) {
  SuiteReport r;
  Run run(r);
  const FiniteGroup& g = t.grp();
  for (int i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    VElement u = random_v(rng, 16, 5), v = random_v(rng, 16, 5), w = random_v(rng, 16, 5);
    run.expect(compose(compose(u, v), w) == compose(u, compose(v, w)), i,
               [&] { return "V associativity: u=[" + u.str() + "] v=[" + v.str() + "] w=[" + w.str() + "]"; });
    run.expect(compose(u, u.inverse()).is_identity() && compose(u.inverse(), u).is_identity(), i,
               [&] { return "V inverse: u=[" + u.str() + "]"; });
    run.expect(compose(VElement(), u) == u && compose(u, VElement()) == u, i,
               [&] { return "V identity: u=[" + u.str() + "]"; });

    Loop a = random_loop(rng, g), b = random_loop(rng, g), c = random_loop(rng, g);
    run.expect(loop_mul(g, loop_mul(g, a, b), c) == loop_mul(g, a, loop_mul(g, b, c)), i, [&] {
      return "loop associativity: a=[" + loop_str(a) + "] b=[" + loop_str(b) + "] c=[" + loop_str(c) + "]";
    });
    run.expect(loop_mul(g, a, loop_inv(g, a)) == Loop(0), i, [&] { return "loop inverse: a=[" + loop_str(a) + "]"; });

    if (!t.autos()) continue;
    FractionElement x = random_fraction(rng, g), y = random_fraction(rng, g), z = random_fraction(rng, g);
    run.expect(g_mul(t, g_mul(t, x, y), z) == g_mul(t, x, g_mul(t, y, z)), i,
               [&] { return "G associativity: x=" + fs(x) + " y=" + fs(y) + " z=" + fs(z); });
    FractionElement e{Loop(0), VElement()};
    run.expect(g_mul(t, x, g_inv(t, x)) == e && g_mul(t, g_inv(t, x), x) == e, i,
               [&] { return "G inverse: x=" + fs(x); });
    run.expect(g_mul(t, e, x) == x && g_mul(t, x, e) == x, i, [&] { return "G identity: x=" + fs(x); });
  }
  r.cases = iters;
  r.info["fraction_checked"] = t.autos();
  return r;
}

SuiteReport action_laws(const Triple& t, std::uint64_t seed, int iters) {
  t.require_autos("action-laws suite");
  SuiteReport r;
  Run run(r);
  const FiniteGroup& g = t.grp();
  for (int i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    VElement v = random_v(rng, 8, 4), w = random_v(rng, 8, 4);
    Loop a = random_loop(rng, g), b = random_loop(rng, g);
    CPoint x = random_cpoint(rng);
    auto ctx = [&] { return " v=[" + v.str() + "] w=[" + w.str() + "] a=[" + loop_str(a) + "]"; };
    run.expect(jones_act(t, compose(v, w), a) == jones_act(t, v, jones_act(t, w, a)), i,
               [&] { return "pi_vw != pi_v pi_w:" + ctx(); });
    run.expect(jones_act(t, v, loop_mul(g, a, b)) == loop_mul(g, jones_act(t, v, a), jones_act(t, v, b)), i,
               [&] { return "pi_v not multiplicative:" + ctx() + " b=[" + loop_str(b) + "]"; });
    run.expect(jones_act(t, v, a).at(v.apply(x)) == tau(t, v, x)(a.at(x)), i,
               [&] { return "pointwise law fails at x=" + x.str() + ctx(); });
    const auto& [d, c] = pick(rng, v.pairs());
    Word s = random_word(rng, 0, 3);
    run.expect(tau_cells(t, d + s, c + s) == tau_cells(t, d, c), i,
               [&] { return "tau depends on refinement: " + d.str() + "->" + c.str() + " extended by " + s.str(); });
    run.expect(tau(t, compose(v, w), x) == compose(tau(t, v, w.apply(x)), tau(t, w, x)), i,
               [&] { return "tau composition law fails at x=" + x.str() + ctx(); });
  }
  r.cases = iters;
  return r;
}

SuiteReport cocycle(const Triple& t, std::uint64_t seed, int iters) {
  t.require_autos("cocycle suite");
  SuiteReport r;
  Run run(r);
  const FiniteGroup& g = t.grp();
  const auto zs = central_elements(t);
  const auto centre = g.center();
  for (int i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    std::vector<std::pair<std::string, Cocycle>> cs;
    int h0 = random_element(rng, g), h1 = random_element(rng, g);
    cs.emplace_back("htwist(" + std::to_string(h0) + "," + std::to_string(h1) + ")", Cocycle::htwist(h0, h1));
    int z = pick(rng, zs);
    cs.emplace_back("slope(" + std::to_string(z) + ")", Cocycle::slope(z));
    Loop f = random_loop(rng, g);
    cs.emplace_back("coboundary(" + loop_str(f) + ")", Cocycle::coboundary(NormalizerMap::of_loop(f)));
    if (t.untwisted()) {
      int zc = pick(rng, centre);
      NormalizerElement phi = random_normalizer(rng);
      cs.emplace_back("digit_sum(" + std::to_string(zc) + ")", Cocycle::coboundary(NormalizerMap::digit_sum(zc)));
      cs.emplace_back("zeta_gamma(" + std::to_string(zc) + "," + phi.str() + ")",
                      Cocycle::coboundary(NormalizerMap::zeta_gamma(zc, phi)));
    }
    cs.emplace_back("product", g.is_abelian() ? Cocycle::product({cs[0].second, cs[1].second, cs[2].second})
                                              : Cocycle::product({cs[1].second, cs[0].second}));
    VElement v = random_v(rng, 8, 4), w = random_v(rng, 8, 4);
    for (const auto& [name, c] : cs) {
      Loop lhs = cocycle_eval(t, c, compose(v, w));
      Loop rhs = loop_mul(g, cocycle_eval(t, c, v), jones_act(t, v, cocycle_eval(t, c, w)));
      run.expect(lhs == rhs, i, [&] {
        return name + ": c_vw=[" + loop_str(lhs) + "] c_v*c_w^v=[" + loop_str(rhs) + "] v=[" + v.str() + "] w=[" +
               w.str() + "]";
      });
    }
    // The twisted group and the map between them.
    IsoMap m(t, twisted_target(t, GroupMap::identity(t.group()), false, h0, h1),
             {GroupMap::identity(t.group()), false, h0, h1});
    FractionElement x = random_fraction(rng, g), y = random_fraction(rng, g);
    run.expect(m.apply(g_mul(t, x, y)) == g_mul(m.target(), m.apply(x), m.apply(y)), i,
               [&] { return "h-twist map not multiplicative: x=" + fs(x) + " y=" + fs(y); });
    run.expect(m.apply_inverse(m.apply(x)) == x && m.apply(m.apply_inverse(x)) == x, i,
               [&] { return "h-twist map not invertible: x=" + fs(x); });
  }
  r.cases = iters;
  r.info["untwisted_coboundaries"] = t.untwisted();
  return r;
}

SuiteReport centralizer(const Triple& t, std::uint64_t, int) {
  t.require_autos("centralizer suite");
  SuiteReport r;
  Run run(r);
  const FiniteGroup& g = t.grp();
  const int n = g.order();
  const auto fixed = gamma_alpha_fixed(t);
  const SdiUnion I = SdiUnion::from_words({Word("0")});
  const SdiUnion Ic = I.complement();

  auto fix_gens = fix_generators(I, 3);
  auto stab_gens = fix_gens;
  for (auto& v : fix_generators(Ic, 3)) stab_gens.push_back(v);

  std::set<std::vector<int>> want_fix, want_stab;
  std::vector<int> a(8, 0);
  do {
    auto const_on = [&](int lo) {
      for (int k = lo; k < lo + 4; ++k)
        if (a[static_cast<std::size_t>(k)] != a[static_cast<std::size_t>(lo)]) return false;
      return std::binary_search(fixed.begin(), fixed.end(), a[static_cast<std::size_t>(lo)]);
    };
    if (const_on(4)) {
      want_fix.insert(a);
      if (const_on(0)) want_stab.insert(a);
    }
  } while (next_array(a, n));

  int idx = 0;
  for (const auto& [name, gens, want] : {std::tuple{"fix", &fix_gens, &want_fix},
                                         std::tuple{"stab", &stab_gens, &want_stab}}) {
    auto got = depth3_commutant(t, *gens);
    std::set<std::vector<int>> gs(got.begin(), got.end());
    for (const auto& x : gs)
      if (!want->count(x)) run.fail(idx, std::string(name) + ": unexpected commuting loop " + values_str(x));
    for (const auto& x : *want)
      if (!gs.count(x)) run.fail(idx, std::string(name) + ": expected loop does not commute " + values_str(x));
    r.info[std::string(name) + "_commutant_size"] = gs.size();
    r.info[std::string(name) + "_generators"] = gens->size();
    ++idx;
  }

  // Commutator realization [v, g_J] = g_I.
  const auto& cells = Sdp::uniform(2).cells();
  int realized = 0;
  for (int gv : fixed) {
    for (unsigned mask = 1; mask + 1 < (1u << cells.size()); ++mask) {
      std::vector<Word> ws;
      for (std::size_t k = 0; k < cells.size(); ++k)
        if (mask & (1u << k)) ws.push_back(cells[k]);
      SdiUnion Iu = SdiUnion::from_words(ws);
      Word j = Iu.complement().cells().front().child(0);
      SdiUnion J = SdiUnion::from_words({j});
      VElement v = make_v_mapping(J, Iu.unite(J));
      FractionElement gv_j = from_loop(loop_indicator(J, gv));
      FractionElement fv = from_v(v);
      FractionElement comm = g_mul(t, g_mul(t, fv, gv_j), g_mul(t, g_inv(t, fv), g_inv(t, gv_j)));
      FractionElement want = from_loop(loop_indicator(Iu, gv));
      run.expect(comm == want, idx, [&] {
        return "commutator [v,g_J] != g_I for g=" + std::to_string(gv) + " I=" + Iu.str() + " got " + fs(comm);
      });
      ++realized;
      ++idx;
    }
  }
  r.info["commutators_checked"] = realized;
  r.cases = idx;
  return r;
}

SuiteReport center(const Triple& t, std::uint64_t seed, int iters) {
  t.require_autos("center suite");
  SuiteReport r;
  Run run(r);
  const FiniteGroup& g = t.grp();
  const int n = g.order();
  // Largest depth ≤ 3 with n^(2^depth) ≤ 4096.
  std::size_t depth = 1;
  for (long count = static_cast<long>(n) * n; depth < 3 && count * count <= 4096; count *= count) ++depth;
  std::vector<FractionElement> gens;
  for (const VElement& v : fix_generators(SdiUnion(), depth)) gens.push_back(from_v(v));
  for (const Word& w : Sdp::uniform(depth).cells())
    for (int x = 1; x < n; ++x) gens.push_back(from_loop(loop_indicator(SdiUnion::from_words({w}), x)));
  std::vector<VElement> shifts{VElement(), make_transposition(Word("0"), Word("1")),
                               VElement::parse("00->0 01->10 1->11")};
  std::set<std::pair<std::string, std::string>> found;
  std::vector<int> a(std::size_t{1} << depth, 0);
  do {
    Loop l = depth_loop(a, depth);
    for (const VElement& v : shifts) {
      FractionElement x{l, v};
      bool central = std::all_of(gens.begin(), gens.end(), [&](const FractionElement& y) { return commutes(t, x, y); });
      if (central) found.insert({loop_str(x.a), x.v.str()});
    }
  } while (next_array(a, n));
  std::set<std::pair<std::string, std::string>> want;
  auto zs = center_elements(t);
  for (const auto& z : zs) want.insert({loop_str(z.a), z.v.str()});
  int idx = 0;
  for (const auto& x : found)
    if (!want.count(x)) run.fail(idx, "unexpected central element [" + x.first + "] | [" + x.second + "]");
  for (const auto& x : want)
    if (!found.count(x)) run.fail(idx, "constant [" + x.first + "] is not central");
  ++idx;
  for (int i = 0; i < iters; ++i, ++idx) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    FractionElement y = random_fraction(rng, g);
    for (const auto& z : zs)
      run.expect(commutes(t, z, y), idx, [&] { return "center element " + fs(z) + " fails to commute with " + fs(y); });
  }
  r.cases = idx;
  r.info["center_order"] = zs.size();
  r.info["search_depth"] = depth;
  return r;
}

SuiteReport theorem33(const Triple& t, std::uint64_t seed, int iters) {
  if (!t.untwisted()) throw PreconditionError("theorem33 suite requires an untwisted triple");
  SuiteReport r;
  Run run(r);
  const FiniteGroup& g = t.grp();
  const auto auts = aut_group(t.group());
  const auto centre = g.center();
  for (int i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    NormalizerElement phi;
    switch (i % 3) {
      case 0: phi = NormalizerElement::flip_map(); break;
      case 1: phi = {false, random_v(rng, 8, 4)}; break;
      default: phi = {true, random_v(rng, 8, 4)}; break;
    }
    const GroupMap& beta = pick(rng, auts);
    int zeta = pick(rng, centre);
    Loop f = random_loop(rng, g, 6, 3);
    FractionElement x = random_fraction(rng, g, 6, 3), y = random_fraction(rng, g, 6, 3);
    auto ctx = [&] {
      return " phi=" + phi.str() + " beta=" + beta.str() + " zeta=" + std::to_string(zeta) + " f=[" + loop_str(f) +
             "] x=" + fs(x);
    };

    ElementaryAut A = ElementaryAut::spatial(phi, beta);
    ElementaryAut Ai = inverse_aut(t, A);
    FractionElement lhs1 = apply_chain(t, {Ai, ElementaryAut::adjoint(NormalizerMap::of_loop(f)), A}, x);
    FractionElement rhs1 =
        apply_aut(t, ElementaryAut::adjoint(NormalizerMap::of_loop(loop_push(loop_apply_map(beta, f), phi))), x);
    run.expect(lhs1 == rhs1, i, [&] { return "A ad(f) A^-1 != ad(beta(f)^phi):" + ctx(); });

    ElementaryAut Ab = ElementaryAut::spatial({}, beta);
    FractionElement lhs2 = apply_chain(t, {inverse_aut(t, Ab), ElementaryAut::slope_twist(zeta), Ab}, x);
    FractionElement rhs2 = apply_aut(t, ElementaryAut::slope_twist(beta(zeta)), x);
    run.expect(lhs2 == rhs2, i, [&] { return "A_beta F A_beta^-1 != F_beta(zeta):" + ctx(); });

    ElementaryAut Ap = ElementaryAut::spatial(phi, GroupMap::identity(t.group()));
    FractionElement lhs3 = apply_chain(t, {inverse_aut(t, Ap), ElementaryAut::slope_twist(zeta), Ap}, x);
    FractionElement rhs3 = apply_chain(t,
                                       {ElementaryAut::adjoint(NormalizerMap::zeta_gamma(zeta, phi)),
                                        ElementaryAut::slope_twist(g.pow(zeta, k_phi(phi)))},
                                       x);
    run.expect(lhs3 == rhs3, i, [&] { return "A_phi F A_phi^-1 != F_zeta^k ad(zeta^gamma):" + ctx(); });

    int kg = random_element(rng, g);
    run.expect(xi_apply(t, kernel_quadruple(t, kg), x) == x, i,
               [&] { return "kernel quadruple of " + std::to_string(kg) + " moves x=" + fs(x); });

    std::vector<ElementaryAut> es{A, ElementaryAut::adjoint(NormalizerMap::of_loop(f)),
                                  ElementaryAut::adjoint(NormalizerMap::digit_sum(zeta)),
                                  ElementaryAut::adjoint(NormalizerMap::zeta_gamma(zeta, phi)),
                                  ElementaryAut::slope_twist(zeta)};
    const char* names[] = {"spatial", "adjoint(loop)", "adjoint(digit_sum)", "adjoint(zeta_gamma)", "slope_twist"};
    for (std::size_t k = 0; k < es.size(); ++k) {
      const ElementaryAut& e = es[k];
      run.expect(apply_aut(t, e, g_mul(t, x, y)) == g_mul(t, apply_aut(t, e, x), apply_aut(t, e, y)), i,
                 [&] { return std::string(names[k]) + " not multiplicative:" + ctx() + " y=" + fs(y); });
      run.expect(apply_aut(t, inverse_aut(t, e), apply_aut(t, e, x)) == x, i,
                 [&] { return std::string(names[k]) + " inverse fails:" + ctx(); });
    }
  }
  // Faithfulness witnesses.
  int idx = iters;
  VElement shift = VElement::parse("00->0 01->10 1->11");
  for (int z : centre) {
    if (z == 0) continue;
    FractionElement x = from_v(shift);
    run.expect(!(apply_aut(t, ElementaryAut::slope_twist(z), x) == x), idx,
               [&] { return "F_" + std::to_string(z) + " fixes the shift"; });
  }
  for (const GroupMap& b : auts) {
    if (b == GroupMap::identity(t.group())) continue;
    int moved = 0;
    while (b(moved) == moved) ++moved;
    FractionElement x = from_loop(Loop(moved));
    run.expect(!(apply_aut(t, ElementaryAut::spatial({}, b), x) == x), idx,
               [&] { return "A_" + b.str() + " fixes a constant it should move"; });
  }
  r.cases = iters + 1;
  r.info["automorphisms"] = auts.size();
  r.info["center"] = centre;
  return r;
}

SuiteReport gamma_phi_suite(const Triple&, std::uint64_t seed, int iters) {
  SuiteReport r;
  Run run(r);
  std::vector<NormalizerElement> phis{NormalizerElement::flip_map()};
  {
    Rng rng(derive_seed(seed, ~std::uint64_t{0}));
    for (int k = 0; k < 5; ++k) phis.push_back({false, random_v(rng, 8, 4)});
  }
  for (int i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const NormalizerElement& phi = phis[static_cast<std::size_t>(i) % phis.size()];
    CPoint x = random_dyadic_point(rng);
    Word p = x.preperiod();
    std::size_t a = 1 + uniform_index(rng, 3), b = 1 + uniform_index(rng, 3);
    VElement v1 = v_sending_zero_to(x);
    VElement v2 = random_v_sending(rng, Word("0").repeated(a), p + Word("0").repeated(b));
    long g1 = gamma_phi_via(phi, v1), g2 = gamma_phi_via(phi, v2);
    run.expect(v2.apply(CPoint()) == x && g1 == g2, i, [&] {
      return "gamma depends on the auxiliary element: phi=" + phi.str() + " x=" + x.str() + " v=[" + v1.str() +
             "] v'=[" + v2.str() + "] " + std::to_string(g1) + " vs " + std::to_string(g2);
    });
    VElement v = random_v(rng, 8, 4);
    CPoint y = random_dyadic_point(rng);
    long diff = gamma_phi(phi, v.apply(y)) - gamma_phi(phi, y);
    long law = gamma_difference(phi, v).at(y);
    run.expect(diff == law, i, [&] {
      return "difference law: phi=" + phi.str() + " v=[" + v.str() + "] y=" + y.str() + " direct " +
             std::to_string(diff) + " step map " + std::to_string(law);
    });
    run.expect(gamma_phi(NormalizerElement(), x) == 0, i, [&] { return "identity gives nonzero gamma at " + x.str(); });
    run.expect(k_phi(phi) == 1, i, [&] { return "k_phi != 1 for phi=" + phi.str(); });
    if (!phi.flip) {
      NormalizerElement inv = phi.inverse();
      long want = -phi.v.slope(inv.apply(x)) + phi.v.slope(inv.apply(CPoint()));
      run.expect(gamma_phi(phi, x) == want, i, [&] {
        return "chain rule value: phi=" + phi.str() + " x=" + x.str() + " got " +
               std::to_string(gamma_phi(phi, x)) + " want " + std::to_string(want);
      });
    }
  }
  r.cases = iters;
  return r;
}

SuiteReport spatial_support(const Triple& t, std::uint64_t seed, int iters) {
  t.require_autos("spatial-support suite");
  SuiteReport r;
  Run run(r);
  const FiniteGroup& g = t.grp();
  const auto auts = aut_group(t.group());
  const auto centre = g.center();
  int maps = 0, elementary = 0;
  for (int i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    Loop a = random_loop(rng, g);
    SdiUnion supp = support(a);
    if (!t.untwisted() || i % 2 == 0) {
      const GroupMap& beta = pick(rng, auts);
      bool swap = uniform_index(rng, 2) == 1;
      int h0 = random_element(rng, g), h1 = random_element(rng, g);
      IsoMap m(t, twisted_target(t, beta, swap, h0, h1), {beta, swap, h0, h1});
      FractionElement y = m.apply(from_loop(a));
      run.expect(y.v.is_identity() && support(y.a) == m.spatial().image(supp), i, [&] {
        return "isomorphism moves support: a=[" + loop_str(a) + "] beta=" + beta.str() + (swap ? " swap" : "") +
               " image " + fs(y);
      });
      ++maps;
    } else {
      Quadruple q{pick(rng, centre), NormalizerMap::of_loop(random_loop(rng, g)), random_normalizer(rng),
                  pick(rng, auts).image};
      FractionElement y = xi_apply(t, q, from_loop(a));
      run.expect(y.v.is_identity() && support(y.a) == q.phi.image(supp), i, [&] {
        return "elementary automorphism moves support: a=[" + loop_str(a) + "] q=" + quadruple_to_json(q).dump() +
               " image " + fs(y);
      });
      ++elementary;
    }
  }
  r.cases = iters;
  r.info["isomorphism_cases"] = maps;
  r.info["elementary_cases"] = elementary;
  return r;
}

SuiteReport wreath_containment(const Triple& t, std::uint64_t seed, int iters) {
  t.require_autos("wreath-containment suite");
  SuiteReport r;
  Run run(r);
  const FiniteGroup& g = t.grp();
  const GroupMap& alpha = t.a(0);
  int commuting = 0;
  for (int i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    std::vector<std::pair<CPoint, int>> pts;
    std::size_t npts = 1 + uniform_index(rng, 4);
    for (std::size_t k = 0; k < npts; ++k) pts.emplace_back(random_dyadic_point(rng), random_element(rng, g));
    WreathElement a = WreathElement::from_points(pts, g);
    std::vector<Word> around;
    for (const CPoint& x : a.supp()) around.push_back(x.prefix(x.preperiod().size() + 2));
    SdiUnion u = SdiUnion::from_words(around);
    VElement v = u.is_full() ? VElement() : random_fix(rng, u);
    bool in_w = std::all_of(a.points.begin(), a.points.end(),
                            [&](const auto& p) { return v.apply(p.first) == p.first && v.slope(p.first) == 0; });
    run.expect(in_w && wreath_act(alpha, v, a) == a, i, [&] {
      return std::string(in_w ? "" : "sample outside W: ") + "v=[" + v.str() + "] does not fix the wreath element";
    });

    std::vector<Word> ws;
    for (const Word& w : random_sdp(rng, 2 + uniform_index(rng, 6), 4).cells())
      if (uniform_index(rng, 2) == 0) ws.push_back(w);
    SdiUnion su = SdiUnion::from_words(ws);
    Loop b = loop_indicator(su, random_element(rng, g));
    VElement w;
    if (i % 2 == 0 && !su.empty() && !su.is_full())
      w = compose(random_fix(rng, su), random_fix(rng, su.complement()));
    else
      w = random_v(rng, 8, 4);
    if (commutes(t, from_loop(b), from_v(w))) {
      ++commuting;
      run.expect(w.image(support(b)) == support(b), i,
                 [&] { return "v=[" + w.str() + "] commutes with [" + loop_str(b) + "] but moves its support"; });
    }
  }
  r.cases = iters;
  r.info["commuting_pairs"] = commuting;
  return r;
}

SuiteReport cocf(const Triple& t, std::uint64_t seed, int iters) {
  t.require_autos("cocf suite");
  if (!(t.a(0) == GroupMap::identity(t.group()))) throw PreconditionError("cocf suite requires a0 = id");
  SuiteReport r;
  Run run(r);
  int period = 1;
  while (!(alpha1_power_map(t, period) == GroupMap::identity(t.group()))) ++period;
  for (int i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    VElement v = random_v(rng, 8, 4);
    CPoint x = random_cpoint(rng);
    GroupMap tv = tau(t, v, x);
    long n = cocf_exponent(v, x);
    run.expect(tv == alpha1_power_map(t, n), i,
               [&] { return "tau != alpha1^" + std::to_string(n) + " at v=[" + v.str() + "] x=" + x.str(); });
    int generic = 0;
    while (generic < period && !(alpha1_power_map(t, generic) == tv)) ++generic;
    long m = ((n % period) + period) % period;
    run.expect(generic == m, i, [&] {
      return "generic exponent " + std::to_string(generic) + " vs " + std::to_string(m) + " at v=[" + v.str() +
             "] x=" + x.str();
    });
  }
  r.cases = iters;
  r.info["alpha1_order"] = period;
  return r;
}

SuiteReport zeta_example(const Triple&, std::uint64_t seed, int iters) {
  SuiteReport r;
  Run run(r);
  for (int i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    DElement x = random_delement(rng), y = random_delement(rng), z = random_delement(rng);
    auto ctx = [&] { return " x=" + delement_str(x) + " y=" + delement_str(y); };
    run.expect(d_mul(d_mul(x, y), z) == d_mul(x, d_mul(y, z)), i, [&] { return "associativity:" + ctx(); });
    DElement e{DLoop(), VElement()};
    run.expect(d_mul(x, d_inv(x)) == e, i, [&] { return "inverse:" + ctx(); });
    run.expect(zeta_eval(d_mul(x, y)) == zeta_eval(x) + zeta_eval(y), i, [&] { return "zeta not additive:" + ctx(); });
    DElement w{DLoop(), random_v(rng, 8, 4)};
    run.expect(zeta_eval(d_mul(d_mul(w, x), d_inv(w))) == zeta_eval(x), i,
               [&] { return "zeta not V-invariant: v=[" + w.v.str() + "]" + ctx(); });
    run.expect(zeta_twist(zeta_twist(x, 1), -1) == x && zeta_twist(zeta_twist(x, -1), 1) == x, i,
               [&] { return "twist round trip:" + ctx(); });
    run.expect(zeta_twist(d_mul(x, y), 1) == d_mul(zeta_twist(x, 1), zeta_twist(y, 1)), i,
               [&] { return "twist not multiplicative:" + ctx(); });
  }
  r.cases = iters;
  return r;
}

SuiteReport slope_ratio(const Triple&, std::uint64_t seed, int iters) {
  SuiteReport r;
  Run run(r);
  for (int i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    CPoint x0 = random_cpoint(rng);
    Word lead = x0.preperiod() + x0.period();
    VElement c = make_contraction(lead, lead + x0.period());
    static const long powers[] = {-2, -1, 1, 2, 3};
    long k = powers[uniform_index(rng, 5)];
    VElement ck;
    for (long j = 0; j < std::abs(k); ++j) ck = compose(k > 0 ? c : c.inverse(), ck);
    VElement w = random_v(rng, 8, 4);
    VElement v = compose(compose(w, ck), w.inverse());
    CPoint x = w.apply(x0);
    NormalizerElement phi = i % 2 == 0 ? NormalizerElement::flip_map() : random_normalizer(rng);
    VElement pv = normalizer_conjugate(phi, v);
    CPoint px = phi.apply(x);
    const long mx = static_cast<long>(x.tail_class_word().size());
    const long mpx = static_cast<long>(px.tail_class_word().size());
    const long s = v.slope(x), ps = pv.slope(px);
    auto ctx = [&] { return " x=" + x.str() + " v=[" + v.str() + "] phi=" + phi.str(); };
    run.expect(v.apply(x) == x && s != 0, i, [&] { return "construction does not fix x with nonzero slope:" + ctx(); });
    run.expect(pv.apply(px) == px, i, [&] { return "conjugate does not fix phi(x):" + ctx(); });
    run.expect(ps * mx == s * mpx, i, [&] {
      return "ratio " + std::to_string(ps) + "/" + std::to_string(mpx) + " vs " + std::to_string(s) + "/" +
             std::to_string(mx) + ":" + ctx();
    });
    run.expect(s % mx == 0, i, [&] { return "slope " + std::to_string(s) + " not a multiple of " + std::to_string(mx) + ctx(); });
  }
  r.cases = iters;
  return r;
}

SuiteReport tanushevski(const Triple& t, std::uint64_t seed, int iters) {
  SuiteReport r;
  Run run(r);
  check_bound(t.grp());
  const auto ends = endomorphisms(t.group());
  {
    Triple triv(t.group(), GroupMap::trivial(t.group()), GroupMap::trivial(t.group()));
    Reduction red = tanushevski_reduce(triv);
    run.expect(red.quotient.grp().order() == 1, 0,
               [&] { return "trivial maps leave order " + std::to_string(red.quotient.grp().order()); });
  }
  for (int i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    Triple s = i == 0 ? t : Triple(t.group(), pick(rng, ends), pick(rng, ends));
    Reduction red = tanushevski_reduce(s);
    auto ctx = [&] { return " a0=" + s.a(0).str() + " a1=" + s.a(1).str(); };
    run.expect(joint_map_injective(red.quotient), i, [&] { return "reduced joint map not injective:" + ctx(); });
    run.expect(red.kernel == eventual_kernel(s), i, [&] { return "kernel differs from reachability oracle:" + ctx(); });
    const GroupMap& p = red.projection;
    bool ok = p.is_hom() && p.is_surjective();
    for (int g = 0; g < s.grp().order(); ++g) {
      bool in_n = std::binary_search(red.kernel.begin(), red.kernel.end(), g);
      ok = ok && ((p(g) == 0) == in_n);
      for (int b = 0; b < 2; ++b) ok = ok && p(s.alpha(b, g)) == red.quotient.alpha(b, p(g));
    }
    run.expect(ok, i, [&] { return "projection is not an equivariant quotient map:" + ctx(); });
  }
  r.cases = iters + 1;
  r.info["endomorphisms"] = ends.size();
  return r;
}

using SuiteFn = SuiteReport (*)(const Triple&, std::uint64_t, int);

const std::vector<std::tuple<std::string, SuiteFn, std::string>>& registry() {
  static const std::vector<std::tuple<std::string, SuiteFn, std::string>> r{
      {"group-axioms", group_axioms, "z3inv"},
      {"action-laws", action_laws, "z3inv"},
      {"cocycle", cocycle, "z3inv"},
      {"centralizer", centralizer, "z2"},
      {"center", center, "z4inv"},
      {"theorem33", theorem33, "s3"},
      {"gamma-phi", gamma_phi_suite, "z2"},
      {"spatial-support", spatial_support, "z3inv"},
      {"wreath-containment", wreath_containment, "z3inv"},
      {"cocf", cocf, "z3inv"},
      {"zeta-example", zeta_example, "z2"},
      {"slope-ratio", slope_ratio, "z2"},
      {"tanushevski", tanushevski, "s3"},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.push_back(std::get<0>(e));
  return out;
}

bool has_suite(const std::string& name) {
  for (const auto& e : registry())
    if (std::get<0>(e) == name) return true;
  return false;
}

std::string default_fixture(const std::string& suite) {
  for (const auto& e : registry())
    if (std::get<0>(e) == suite) return std::get<2>(e);
  throw ParseError("unknown suite '" + suite + "'");
}

SuiteReport run_suite(const std::string& name, const std::optional<Triple>& triple, std::uint64_t seed, int iters) {
  for (const auto& [n, fn, fx] : registry()) {
    if (n != name) continue;
    Triple t = triple ? *triple : fixture(fx);
    auto start = std::chrono::steady_clock::now();
    SuiteReport r = fn(t, seed, iters);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.suite = name;
    r.seed = seed;
    std::stable_sort(r.failures.begin(), r.failures.end(),
                     [](const SuiteFailure& a, const SuiteFailure& b) { return a.index < b.index; });
    return r;
  }
  throw ParseError("unknown suite '" + name + "'");
}

Json report_to_json(const SuiteReport& r, bool timing) {
  Json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["cases"] = r.cases;
  j["passed"] = r.passed();
  Json fs = Json::array();
  for (const auto& f : r.failures) fs.push_back(Json{{"case", f.index}, {"message", f.message}});
  j["failures"] = fs;
  j["info"] = r.info;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::vector<GroupMap> endomorphisms(const GroupPtr& g) {
  check_bound(*g);
  auto gens = generating_set(*g);
  std::vector<GroupMap> out;
  std::vector<int> imgs(gens.size(), 0);
  do {
    if (auto h = extend_hom(g, g, gens, imgs)) out.push_back(*h);
  } while (next_array(imgs, g->order()));
  std::sort(out.begin(), out.end(), [](const GroupMap& a, const GroupMap& b) { return a.image < b.image; });
  return out;
}

std::vector<int> eventual_kernel(const Triple& t) {
  const int n = t.grp().order();
  // 0 unvisited, 1 on stack, 2 done; alive = can reach a non-identity cycle.
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  std::vector<char> alive(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> dfs = [&](int g) -> bool {
    auto gi = static_cast<std::size_t>(g);
    if (state[gi] == 1) return true;
    if (state[gi] == 2) return alive[gi];
    state[gi] = 1;
    bool a = false;
    for (int b = 0; b < 2; ++b) {
      int h = t.alpha(b, g);
      if (h != 0 && dfs(h)) a = true;
    }
    state[gi] = 2;
    alive[gi] = a;
    return a;
  };
  std::vector<int> out{0};
  for (int g = 1; g < n; ++g)
    if (!dfs(g)) out.push_back(g);
  return out;
}

std::vector<std::vector<int>> depth3_commutant(const Triple& t, const std::vector<VElement>& gens) {
  const int n = t.grp().order();
  long total = 1;
  for (int k = 0; k < 8; ++k) {
    total *= n;
    if (total > (1L << 20)) throw BoundError("depth-3 commutant search needs |group|^8 <= 2^20");
  }
  std::vector<FractionElement> gs;
  for (const VElement& v : gens) gs.push_back(from_v(v));
  std::vector<std::vector<int>> out;
  std::vector<int> a(8, 0);
  do {
    FractionElement x = from_loop(depth_loop(a, 3));
    if (std::all_of(gs.begin(), gs.end(), [&](const FractionElement& y) { return commutes(t, x, y); }))
      out.push_back(a);
  } while (next_array(a, n));
  return out;
}

}  // namespace tfg
