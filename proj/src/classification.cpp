#include "tfg/classification.hpp"

#include "tfg/automorphisms.hpp"
#include "tfg/errors.hpp"

#include <algorithm>

namespace tfg {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Isomorphic: return "Isomorphic";
    case Verdict::NotIsomorphic: return "NotIsomorphic";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::WitnessFound: return "WitnessFound";
    case Verdict::NotFound: return "NotFound";
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
  }
  return "";
}

namespace {

// β∘a∘β⁻¹.
GroupMap transport(const GroupMap& beta, const GroupMap& beta_inv, const GroupMap& a) {
  return compose(beta, compose(a, beta_inv));
}

GroupMap twisted(const GroupPtr& g, int h, const GroupMap& a) { return compose(GroupMap::inner(g, h), a); }

void require_iso(const GroupMap& beta, const Triple& s, const Triple& t) {
  if (!(*beta.source == s.grp()) || !(*beta.target == t.grp()) || !beta.is_hom() || !beta.is_injective() ||
      !beta.is_surjective())
    throw PreconditionError("beta is not an isomorphism between the coefficient groups");
}

}  // namespace

bool witness_holds(const Triple& source, const Triple& target, const IsoWitness& w) {
  require_iso(w.beta, source, target);
  GroupMap binv = w.beta.inverse();
  for (int i = 0; i < 2; ++i) {
    int h = i == 0 ? w.h0 : w.h1;
    int j = w.swap ? 1 - i : i;
    if (!(twisted(target.group(), h, transport(w.beta, binv, source.a(i))) == target.a(j))) return false;
  }
  return true;
}

IsoMap::IsoMap(Triple source, Triple target, IsoWitness w)
    : source_(std::move(source)),
      mid_(source_),
      target_(std::move(target)),
      w_(std::move(w)),
      beta_inv_(w_.beta) {
  source_.require_autos("isomorphism construction");
  target_.require_autos("isomorphism construction");
  if (!witness_holds(source_, target_, w_)) throw PreconditionError("witness condition fails");
  beta_inv_ = w_.beta.inverse();
  mid_ = Triple(target_.group(), transport(w_.beta, beta_inv_, source_.a(0)),
                transport(w_.beta, beta_inv_, source_.a(1)));
}

NormalizerElement IsoMap::spatial() const { return w_.swap ? NormalizerElement::flip_map() : NormalizerElement(); }

FractionElement IsoMap::apply(const FractionElement& x) const {
  const FiniteGroup& g = target_.grp();
  Loop a = loop_apply_map(w_.beta, x.a);
  Loop c = cocycle_eval(mid_, Cocycle::htwist(w_.h0, w_.h1), x.v);
  FractionElement y{loop_mul(g, a, loop_inv(g, c)), x.v};
  if (!w_.swap) return y;
  NormalizerElement f = NormalizerElement::flip_map();
  return {loop_push(y.a, f), normalizer_conjugate(f, y.v)};
}

FractionElement IsoMap::apply_inverse(const FractionElement& y) const {
  FractionElement z = y;
  if (w_.swap) {
    NormalizerElement f = NormalizerElement::flip_map();
    z = {loop_push(y.a, f), normalizer_conjugate(f, y.v)};
  }
  Loop c = cocycle_eval(mid_, Cocycle::htwist(w_.h0, w_.h1), z.v);
  return {loop_apply_map(beta_inv_, loop_mul(target_.grp(), z.a, c)), z.v};
}

Decision prop24_search(const Triple& t1, const Triple& t2) {
  check_bound(t1.grp());
  check_bound(t2.grp());
  t1.require_autos("prop24 search");
  t2.require_autos("prop24 search");
  auto isos = isomorphisms(t1.group(), t2.group());
  if (isos.empty()) return {Verdict::NotFound, "coefficient groups are not isomorphic", std::nullopt, std::nullopt};
  for (const GroupMap& beta : isos) {
    GroupMap binv = beta.inverse();
    for (bool swap : {false, true}) {
      int hs[2] = {-1, -1};
      for (int i = 0; i < 2; ++i) {
        GroupMap moved = transport(beta, binv, t1.a(i));
        const GroupMap& want = t2.a(swap ? 1 - i : i);
        for (int h = 0; h < t2.grp().order() && hs[i] < 0; ++h)
          if (twisted(t2.group(), h, moved) == want) hs[i] = h;
      }
      if (hs[0] >= 0 && hs[1] >= 0) {
        IsoWitness w{beta, swap, hs[0], hs[1]};
        return {Verdict::WitnessFound, "witness satisfies the twisting condition", w, beta};
      }
    }
  }
  return {Verdict::NotFound, "no coefficient isomorphism, swap and twisting pair satisfies the condition",
          std::nullopt, std::nullopt};
}

Decision cor28_decide(const Triple& t1, const Triple& t2) {
  check_bound(t1.grp());
  check_bound(t2.grp());
  t1.require_autos("cor28 decision");
  t2.require_autos("cor28 decision");
  auto beta = find_isomorphism(t1.group(), t2.group());
  if (!beta) return {Verdict::NotIsomorphic, "coefficient groups are not isomorphic", std::nullopt, std::nullopt};
  const bool inner1 = is_inner(t1.a(0)) && is_inner(t1.a(1));
  const bool inner2 = is_inner(t2.a(0)) && is_inner(t2.a(1));
  if (inner1 && inner2)
    return {Verdict::Isomorphic, "coefficient groups are isomorphic and all four maps are inner", std::nullopt, beta};
  if (inner1 || inner2)
    return {Verdict::NotIsomorphic,
            std::string("the ") + (inner1 ? "right" : "left") + " triple has a non-inner automorphism while the " +
                (inner1 ? "left" : "right") + " triple is inner",
            std::nullopt, std::nullopt};
  return {Verdict::Inconclusive, "neither triple consists of inner automorphisms", std::nullopt, std::nullopt};
}

std::vector<std::vector<int>> out_subgroup(const GroupMap& a) {
  std::vector<std::vector<int>> out;
  GroupMap id = GroupMap::identity(a.source);
  GroupMap p = id;
  do {
    out.push_back(out_class(p));
    p = compose(a, p);
  } while (!(p == id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Decision cocf_check(const Triple& t1, const Triple& t2) {
  check_bound(t1.grp());
  check_bound(t2.grp());
  t1.require_autos("cocf check");
  t2.require_autos("cocf check");
  if (!(t1.a(0) == GroupMap::identity(t1.group())) || !(t2.a(0) == GroupMap::identity(t2.group())))
    throw PreconditionError("cocf check requires the first map of each triple to be the identity");
  auto isos = isomorphisms(t1.group(), t2.group());
  if (isos.empty()) return {Verdict::Fails, "coefficient groups are not isomorphic", std::nullopt, std::nullopt};
  auto want = out_subgroup(t2.a(1));
  std::size_t have = 0;
  for (const GroupMap& beta : isos) {
    auto got = out_subgroup(transport(beta, beta.inverse(), t1.a(1)));
    have = got.size();
    if (got == want)
      return {Verdict::Holds, "beta carries the generated Out subgroup onto the other", std::nullopt, beta};
  }
  std::string reason = "Out-subgroup orders " + std::to_string(have) + " vs " + std::to_string(want.size());
  if (have == want.size()) reason = "no isomorphism carries the generated Out subgroups onto each other (orders " +
                                    std::to_string(have) + " and " + std::to_string(want.size()) + ")";
  return {Verdict::Fails, reason, std::nullopt, std::nullopt};
}

}  // namespace tfg
