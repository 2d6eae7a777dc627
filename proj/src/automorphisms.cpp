#include "tfg/automorphisms.hpp"

#include "tfg/errors.hpp"

#include <algorithm>

namespace tfg {

long ell(const VElement& v, const CPoint& x) { return v.slope(v.inverse().apply(x)); }

StepMap<long> ell_map(const VElement& v) {
  std::vector<StepMap<long>::Cell> cells;
  for (const auto& [d, c] : v.pairs())
    cells.emplace_back(c, static_cast<long>(d.size()) - static_cast<long>(c.size()));
  return StepMap<long>::canonical(std::move(cells));
}

namespace {

void require_central(const Triple& t, int zeta, const char* what) {
  auto z = t.grp().center();
  if (!std::binary_search(z.begin(), z.end(), zeta))
    throw PreconditionError(std::string(what) + ": element " + std::to_string(zeta) + " is not central");
}

void require_untwisted(const Triple& t, const char* what) {
  if (!t.untwisted()) throw PreconditionError(std::string(what) + " requires an untwisted triple");
}

// Cells v(q) carrying ζ^{e(q)} for a step map e on the source side of v.
Loop push_exponent(const Triple& t, int zeta, const StepMap<long>& e, const VElement& v) {
  std::vector<Loop::Cell> cells;
  for (const auto& [q, img] : v.refined_pairs(e.partition()))
    cells.emplace_back(img, t.grp().pow(zeta, e.at(q)));
  return Loop::canonical(std::move(cells));
}

StepMap<long> slope_map(const VElement& v) {
  std::vector<StepMap<long>::Cell> cells;
  for (const auto& [d, c] : v.pairs())
    cells.emplace_back(d, static_cast<long>(d.size()) - static_cast<long>(c.size()));
  return StepMap<long>::canonical(std::move(cells));
}

}  // namespace

std::string NormalizerMap::str() const {
  switch (kind) {
    case Kind::Loop: return "loop(" + loop_str(loop) + ")";
    case Kind::DigitSum: return "digit_sum(" + std::to_string(zeta) + ")";
    case Kind::ZetaGamma: return "zeta_gamma(" + std::to_string(zeta) + ", " + phi.str() + ")";
  }
  return "";
}

StepMap<long> gamma_difference(const NormalizerElement& phi, const VElement& v) {
  NormalizerElement phi_inv = phi.inverse();
  VElement u = normalizer_conjugate(phi_inv, v);
  const long k = k_phi(phi);
  // y ∈ φ(r) for a cell r adapted to both u and φ: log2 u'(φ⁻¹y) is the slope of u on r.
  std::vector<StepMap<long>::Cell> cells;
  for (const Word& r : common_refinement(u.domain(), phi.v.domain()).cells()) {
    Word img = *phi.v.image_of(r);
    const auto& [d, c] = u.pairs()[*u.pair_containing(r)];
    cells.emplace_back(phi.flip ? img.complemented() : img,
                       static_cast<long>(d.size()) - static_cast<long>(c.size()));
  }
  StepMap<long> su = StepMap<long>::canonical(std::move(cells));
  return zip_with(su, slope_map(v), [k](long a, long b) { return a - k * b; });
}

Loop coboundary(const Triple& t, const NormalizerMap& f, const VElement& v) {
  switch (f.kind) {
    case NormalizerMap::Kind::Loop:
      return loop_mul(t.grp(), f.loop, loop_inv(t.grp(), jones_act(t, v, f.loop)));
    case NormalizerMap::Kind::DigitSum: {
      require_untwisted(t, "digit-sum normalizer");
      require_central(t, f.zeta, "digit-sum normalizer");
      std::vector<Loop::Cell> cells;
      for (const auto& [d, c] : v.pairs()) cells.emplace_back(c, t.grp().pow(f.zeta, c.digit_sum() - d.digit_sum()));
      return Loop::canonical(std::move(cells));
    }
    case NormalizerMap::Kind::ZetaGamma:
      require_untwisted(t, "zeta-gamma normalizer");
      require_central(t, f.zeta, "zeta-gamma normalizer");
      return push_exponent(t, f.zeta, gamma_difference(f.phi, v), v);
  }
  return Loop(0);
}

Loop conjugate_by(const Triple& t, const NormalizerMap& f, const Loop& a) {
  if (f.kind != NormalizerMap::Kind::Loop) return a;
  const FiniteGroup& g = t.grp();
  return zip_with(f.loop, a, [&](int x, int y) { return g.conj(x, y); });
}

NormalizerMap normalizer_inverse(const Triple& t, const NormalizerMap& f) {
  NormalizerMap out = f;
  if (f.kind == NormalizerMap::Kind::Loop) out.loop = loop_inv(t.grp(), f.loop);
  else out.zeta = t.grp().inv(f.zeta);
  return out;
}

// Cocycles

Loop cocycle_eval(const Triple& t, const Cocycle& c, const VElement& v) {
  const FiniteGroup& g = t.grp();
  switch (c.kind) {
    case Cocycle::Kind::Slope: {
      require_central(t, c.zeta, "slope cocycle");
      if (t.alpha(0, c.zeta) != c.zeta || t.alpha(1, c.zeta) != c.zeta)
        throw PreconditionError("slope cocycle: element is not fixed by both maps");
      return ell_map(v).map([&](long k) { return g.pow(c.zeta, k); });
    }
    case Cocycle::Kind::Coboundary:
      return coboundary(t, c.f, v);
    case Cocycle::Kind::HTwist: {
      t.require_autos("h-twist cocycle");
      std::vector<Loop::Cell> cells;
      for (const auto& [d, cod] : v.pairs()) {
        int hd = h_q_alpha(t, c.h0, c.h1, d);
        int hc = h_q_alpha(t, c.h0, c.h1, cod);
        cells.emplace_back(cod, t.alpha_word_inv(cod, g.mul(g.inv(hc), hd)));
      }
      return Loop::canonical(std::move(cells));
    }
    case Cocycle::Kind::Product: {
      Loop out(0);
      for (const Cocycle& p : c.parts) out = loop_mul(g, out, cocycle_eval(t, p, v));
      return out;
    }
    case Cocycle::Kind::Constant:
      return Loop(c.zeta);
  }
  return Loop(0);
}

std::vector<std::string> cocycle_check(const Triple& t, const Cocycle& c, int trials, std::uint64_t seed) {
  std::vector<std::string> failures;
  for (int i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    VElement v = random_v(rng, 8, 4);
    VElement w = random_v(rng, 8, 4);
    Loop lhs = cocycle_eval(t, c, compose(v, w));
    Loop rhs = loop_mul(t.grp(), cocycle_eval(t, c, v), jones_act(t, v, cocycle_eval(t, c, w)));
    if (!(lhs == rhs))
      failures.push_back("case " + std::to_string(i) + ": v=[" + v.str() + "] w=[" + w.str() + "] c_vw=[" +
                         loop_str(lhs) + "] c_v*c_w^v=[" + loop_str(rhs) + "]");
  }
  return failures;
}

// Elementary automorphisms

FractionElement apply_aut(const Triple& t, const ElementaryAut& e, const FractionElement& x) {
  require_untwisted(t, "elementary automorphisms");
  const FiniteGroup& g = t.grp();
  switch (e.kind) {
    case ElementaryAut::Kind::Spatial: {
      Loop a = x.a;
      if (!e.beta.empty()) {
        GroupMap beta{t.group(), t.group(), e.beta};
        if (!beta.is_hom() || !beta.is_automorphism()) throw PreconditionError("beta is not an automorphism");
        a = loop_apply_map(beta, a);
      }
      return {loop_push(a, e.phi), normalizer_conjugate(e.phi, x.v)};
    }
    case ElementaryAut::Kind::Adjoint:
      return {loop_mul(g, conjugate_by(t, e.f, x.a), coboundary(t, e.f, x.v)), x.v};
    case ElementaryAut::Kind::SlopeTwist: {
      require_central(t, e.zeta, "slope twist");
      Loop z = ell_map(x.v).map([&](long k) { return g.pow(e.zeta, k); });
      return {loop_mul(g, z, x.a), x.v};
    }
  }
  return x;
}

ElementaryAut inverse_aut(const Triple& t, const ElementaryAut& e) {
  ElementaryAut out = e;
  switch (e.kind) {
    case ElementaryAut::Kind::Spatial:
      out.phi = e.phi.inverse();
      if (!e.beta.empty()) out.beta = GroupMap{t.group(), t.group(), e.beta}.inverse().image;
      break;
    case ElementaryAut::Kind::Adjoint:
      out.f = normalizer_inverse(t, e.f);
      break;
    case ElementaryAut::Kind::SlopeTwist:
      out.zeta = t.grp().inv(e.zeta);
      break;
  }
  return out;
}

FractionElement apply_chain(const Triple& t, const AutChain& chain, const FractionElement& x) {
  FractionElement y = x;
  for (const ElementaryAut& e : chain) y = apply_aut(t, e, y);
  return y;
}

AutChain inverse_chain(const Triple& t, const AutChain& chain) {
  AutChain out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.push_back(inverse_aut(t, *it));
  return out;
}

AutChain xi_chain(const Quadruple& q) {
  ElementaryAut a{ElementaryAut::Kind::Spatial, q.phi, q.beta, {}, 0};
  return {a, ElementaryAut::adjoint(q.f), ElementaryAut::slope_twist(q.zeta)};
}

FractionElement xi_apply(const Triple& t, const Quadruple& q, const FractionElement& x) {
  return apply_chain(t, xi_chain(q), x);
}

Quadruple kernel_quadruple(const Triple& t, int g) {
  return {0, NormalizerMap::of_loop(Loop(g)), {}, GroupMap::inner(t.group(), t.grp().inv(g)).image};
}

bool xi_kernel_check(const Triple& t, int g, int samples, std::uint64_t seed) {
  Quadruple q = kernel_quadruple(t, g);
  for (int i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    FractionElement x = random_fraction(rng, t.grp());
    if (!(xi_apply(t, q, x) == x)) return false;
  }
  return true;
}

// k_φ and γ_φ

long k_phi(const NormalizerElement& phi) {
  return static_cast<long>(phi.inverse().apply(CPoint()).tail_class_word().size());
}

long gamma_phi_via(const NormalizerElement& phi, const VElement& v) {
  NormalizerElement phi_inv = phi.inverse();
  VElement u = normalizer_conjugate(phi_inv, v);
  return u.slope(phi_inv.apply(CPoint())) - k_phi(phi) * v.slope(CPoint());
}

VElement v_sending_zero_to(const CPoint& x) {
  if (!x.is_dyadic()) throw PreconditionError("point " + x.str() + " is not a dyadic rational");
  if (x.preperiod().empty()) return VElement();
  return make_v_mapping(SdiUnion::from_words({Word("0")}),
                        SdiUnion::from_words({x.preperiod() + Word("0")}));
}

long gamma_phi(const NormalizerElement& phi, const CPoint& x) {
  return gamma_phi_via(phi, v_sending_zero_to(x));
}

// Z[1/2]² example

DLoop dloop_add(const DLoop& a, const DLoop& b) {
  return zip_with(a, b, [](const DPair& x, const DPair& y) { return x + y; });
}

DLoop dloop_neg(const DLoop& a) {
  return a.map([](const DPair& x) { return -x; });
}

DLoop dyadic_act(const VElement& v, const DLoop& a) {
  std::vector<DLoop::Cell> cells;
  for (const Word& q : common_refinement(a.partition(), v.domain()).cells()) {
    const auto& [d, c] = v.pairs()[*v.pair_containing(q)];
    const DPair& x = a.at(q);
    long shift = static_cast<long>(c.size()) - static_cast<long>(d.size());
    cells.emplace_back(c + q.substr(d.size()), DPair{x.t, x.r.scaled(shift)});
  }
  return DLoop::canonical(std::move(cells));
}

DElement d_mul(const DElement& x, const DElement& y) {
  return {dloop_add(x.a, dyadic_act(x.v, y.a)), compose(x.v, y.v)};
}

DElement d_inv(const DElement& x) {
  VElement vi = x.v.inverse();
  return {dyadic_act(vi, dloop_neg(x.a)), std::move(vi)};
}

Dyadic zeta_eval(const DElement& x) {
  Dyadic total;
  for (const auto& [w, p] : x.a.cells()) total += p.r.scaled(-static_cast<long>(w.size()));
  return total;
}

DElement zeta_twist(const DElement& x, int sign) {
  Dyadic z = zeta_eval(x);
  DLoop c(DPair{sign < 0 ? -z : z, Dyadic()});
  return {dloop_add(x.a, c), x.v};
}

DElement random_delement(Rng& rng, std::size_t max_leaves, std::size_t max_depth) {
  auto rnd = [&] {
    long num = static_cast<long>(uniform_index(rng, 41)) - 20;
    long exp = static_cast<long>(uniform_index(rng, 5));
    return Dyadic(num).scaled(-exp);
  };
  std::vector<DLoop::Cell> cells;
  for (const Word& w : random_sdp(rng, 1 + uniform_index(rng, max_leaves), max_depth).cells())
    cells.emplace_back(w, DPair{rnd(), rnd()});
  DLoop a = DLoop::canonical(std::move(cells));
  return {std::move(a), random_v(rng, max_leaves, max_depth)};
}

std::string delement_str(const DElement& x) {
  std::string out;
  for (const auto& [w, p] : x.a.cells())
    out += (out.empty() ? "" : "; ") + (w.empty() ? std::string("e") : w.bits()) + ":(" + p.t.str() + "," +
           p.r.str() + ")";
  return "[" + out + "] | [" + x.v.str() + "]";
}

}  // namespace tfg
