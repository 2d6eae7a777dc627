#pragma once

// The fraction group LΓ⋊V, the labelled-tree picture for arbitrary
// endomorphism triples, the restricted wreath variant over the dyadic
// rationals, and the coCF exponent.

#include "tfg/loop.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tfg {

// a·v.
struct FractionElement {
  Loop a;
  VElement v;

  friend bool operator==(const FractionElement&, const FractionElement&) = default;
};

inline FractionElement from_loop(Loop a) { return {std::move(a), VElement()}; }
inline FractionElement from_v(VElement v) { return {Loop(0), std::move(v)}; }

// (a,v)(b,w) = (a·π_v(b), vw).
FractionElement g_mul(const Triple& t, const FractionElement& x, const FractionElement& y);
FractionElement g_inv(const Triple& t, const FractionElement& x);
bool commutes(const Triple& t, const FractionElement& x, const FractionElement& y);
FractionElement random_fraction(Rng& rng, const FiniteGroup& g, std::size_t max_leaves = 8,
                                std::size_t max_depth = 4);
// Constant maps with value in Z(Γ)^α.
std::vector<FractionElement> center_elements(const Triple& t);

// "[loop] | [v-table]".
std::string fraction_str(const FractionElement& x);
FractionElement fraction_parse(std::string_view text, const FiniteGroup& g);

// Leaves of a finite rooted binary tree with one label per leaf.
struct LabelledTree {
  Sdp leaves;
  std::vector<int> labels;

  friend bool operator==(const LabelledTree&, const LabelledTree&) = default;
};

// One tree per leaf, each given as a partition of that leaf's subtree.
using Forest = std::vector<Sdp>;

// Leaf ℓ with label g: the leaf ℓ·p of the attached tree gets α_p(g).
LabelledTree phi_forest(const Triple& t, const LabelledTree& lt, const Forest& f);
// Push to the given refinement of lt.leaves.
LabelledTree push_to(const Triple& t, const LabelledTree& lt, const Sdp& finer);
// Equality in the direct limit: compare at the join pushed by the kernel
// stabilization depth.
bool lt_equiv(const Triple& t, const LabelledTree& x, const LabelledTree& y);
// Value α_ℓ⁻¹(g_ℓ) on each leaf ℓ.
Loop kappa_t(const Triple& t, const LabelledTree& lt);
// (g_1..g_n) ↦ (g_1..g_{k-1}, α0(g_k), α1(g_k), g_{k+1}..g_n), 1 ≤ k ≤ n.
std::vector<int> cloning_map(const Triple& t, int k, const std::vector<int>& g);

// "((1,2),0)".
std::string tree_str(const LabelledTree& lt);
LabelledTree tree_parse(std::string_view text, const FiniteGroup& g);

// Finitely supported map on the dyadic points, sorted by point, without
// identity values.
struct WreathElement {
  std::vector<std::pair<CPoint, int>> points;

  static WreathElement from_points(std::vector<std::pair<CPoint, int>> pts, const FiniteGroup& g);
  int at(const CPoint& x) const;
  std::vector<CPoint> supp() const;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

// Each x moves to v(x) carrying α^{log2 v'(x)}(a(x)).
WreathElement wreath_act(const GroupMap& alpha, const VElement& v, const WreathElement& a);
WreathElement wreath_mul(const FiniteGroup& g, const WreathElement& a, const WreathElement& b);

// f(m_I) − f(m_{v(I)}) with f the digit sum.
long cocf_exponent(const VElement& v, const CPoint& x);

}  // namespace tfg
