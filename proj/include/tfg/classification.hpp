#pragma once

// Explicit isomorphisms between fraction groups built from a coefficient
// isomorphism, a pair of twisting elements and an optional flip, together
// with decision procedures on finite coefficient groups.

#include "tfg/fraction.hpp"

#include <optional>
#include <string>

namespace tfg {

enum class Verdict { Isomorphic, NotIsomorphic, Inconclusive, WitnessFound, NotFound, Holds, Fails };
std::string verdict_str(Verdict v);

struct IsoWitness {
  GroupMap beta;
  bool swap = false;
  int h0 = 0, h1 = 0;
};

// α̃_{σ(i)} = ad(h_i)∘β∘α_i∘β⁻¹ for i = 0, 1.
bool witness_holds(const Triple& source, const Triple& target, const IsoWitness& w);

// Composite of the diagonal β map, the h-twist cocycle map and the flip
// (iff swap). Requires automorphism triples and a valid witness.
class IsoMap {
 public:
  IsoMap(Triple source, Triple target, IsoWitness w);

  FractionElement apply(const FractionElement& x) const;
  FractionElement apply_inverse(const FractionElement& y) const;
  const Triple& source() const { return source_; }
  const Triple& target() const { return target_; }
  const IsoWitness& witness() const { return w_; }
  // The homeomorphism carrying supports: flip if swap, else the identity.
  NormalizerElement spatial() const;

 private:
  Triple source_, mid_, target_;
  IsoWitness w_;
  GroupMap beta_inv_;
};

struct Decision {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  std::optional<IsoWitness> witness;
  std::optional<GroupMap> beta;
};

// Lexicographically least witness by (β, swap, h0, h1); NotFound otherwise.
Decision prop24_search(const Triple& t1, const Triple& t2);
Decision cor28_decide(const Triple& t1, const Triple& t2);
// Both triples must have α0 = id.
Decision cocf_check(const Triple& t1, const Triple& t2);

// Sorted Out classes of the cyclic subgroup generated by a.
std::vector<std::vector<int>> out_subgroup(const GroupMap& a);

}  // namespace tfg
