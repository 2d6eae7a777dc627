#pragma once

// The discrete loop group LΓ: locally constant maps Cantor → Γ with
// pointwise product, supports, the twists τ_{v,x} and the Jones action of V.

#include "tfg/groups.hpp"
#include "tfg/random.hpp"
#include "tfg/step_map.hpp"
#include "tfg/thompson.hpp"

#include <string>
#include <string_view>

namespace tfg {

// Values are element indices of the coefficient group.
using Loop = StepMap<int>;

inline Loop loop_constant(int g) { return Loop(g); }
// g on u, e elsewhere.
Loop loop_indicator(const SdiUnion& u, int g);
Loop loop_mul(const FiniteGroup& g, const Loop& a, const Loop& b);
Loop loop_inv(const FiniteGroup& g, const Loop& a);
// Pointwise image under a group map (the diagonal map β̄).
Loop loop_apply_map(const GroupMap& beta, const Loop& a);
// a∘φ⁻¹.
Loop loop_push(const Loop& a, const NormalizerElement& phi);
// Union of the cells with non-identity value.
SdiUnion support(const Loop& a);

// α_c⁻¹∘α_d: the twist carried by a cell d mapped onto c.
GroupMap tau_cells(const Triple& t, const Word& d, const Word& c);
// τ_{v,x} = α_{v(I)}⁻¹ α_I for the domain cell I of v containing x.
GroupMap tau(const Triple& t, const VElement& v, const CPoint& x);
// π_v(a)(vx) = τ_{v,x}(a(x)).
Loop jones_act(const Triple& t, const VElement& v, const Loop& a);

Loop random_loop(Rng& rng, const FiniteGroup& g, std::size_t max_leaves = 8, std::size_t max_depth = 4);

// "0:1; 10:0; 11:2".
std::string loop_str(const Loop& a);
Loop loop_parse(std::string_view text, const FiniteGroup& g);

}  // namespace tfg
