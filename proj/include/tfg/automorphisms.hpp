#pragma once

// Cocycles V → LΓ, maps normalizing G, the elementary automorphisms
// A_{φ,β}, ad(f), F_ζ and their composite Ξ, the functions k_φ and γ_φ,
// and the Z[1/2]² example with its central morphism ζ.

#include "tfg/dyadic.hpp"
#include "tfg/fraction.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tfg {

// ℓ_v(x) = log2 v'(v⁻¹x).
long ell(const VElement& v, const CPoint& x);
// ℓ_v over the codomain partition of v.
StepMap<long> ell_map(const VElement& v);

struct NormalizerMap {
  enum class Kind { Loop, DigitSum, ZetaGamma };
  Kind kind = Kind::Loop;
  tfg::Loop loop{0};
  int zeta = 0;
  NormalizerElement phi;

  static NormalizerMap of_loop(tfg::Loop a) { return {Kind::Loop, std::move(a), 0, {}}; }
  // x ↦ ζ^{Σ x_i}.
  static NormalizerMap digit_sum(int zeta) { return {Kind::DigitSum, tfg::Loop(0), zeta, {}}; }
  // x ↦ ζ^{γ_φ(x)}.
  static NormalizerMap zeta_gamma(int zeta, NormalizerElement phi) {
    return {Kind::ZetaGamma, tfg::Loop(0), zeta, std::move(phi)};
  }
  std::string str() const;
};

// f·(f^v)⁻¹ with f^v = π_v(f).
Loop coboundary(const Triple& t, const NormalizerMap& f, const VElement& v);
// Pointwise f a f⁻¹.
Loop conjugate_by(const Triple& t, const NormalizerMap& f, const Loop& a);
NormalizerMap normalizer_inverse(const Triple& t, const NormalizerMap& f);

struct Cocycle {
  // Constant(g) is v ↦ g everywhere: not a cocycle unless g = e.
  enum class Kind { Slope, Coboundary, HTwist, Product, Constant };
  Kind kind = Kind::Slope;
  int zeta = 0;
  NormalizerMap f;
  int h0 = 0, h1 = 0;
  std::vector<Cocycle> parts;

  static Cocycle slope(int zeta) { return {Kind::Slope, zeta, {}, 0, 0, {}}; }
  static Cocycle coboundary(NormalizerMap f) { return {Kind::Coboundary, 0, std::move(f), 0, 0, {}}; }
  static Cocycle htwist(int h0, int h1) { return {Kind::HTwist, 0, {}, h0, h1, {}}; }
  static Cocycle product(std::vector<Cocycle> parts) { return {Kind::Product, 0, {}, 0, 0, std::move(parts)}; }
  static Cocycle constant(int g) { return {Kind::Constant, g, {}, 0, 0, {}}; }
};

Loop cocycle_eval(const Triple& t, const Cocycle& c, const VElement& v);
// Checks c_{vw} = c_v·π_v(c_w) on random pairs; returns failure descriptions.
std::vector<std::string> cocycle_check(const Triple& t, const Cocycle& c, int trials, std::uint64_t seed);

struct ElementaryAut {
  enum class Kind { Spatial, Adjoint, SlopeTwist };
  Kind kind = Kind::Spatial;
  NormalizerElement phi;
  std::vector<int> beta;  // automorphism image table; empty means identity
  NormalizerMap f;
  int zeta = 0;

  static ElementaryAut spatial(NormalizerElement phi, const GroupMap& beta) {
    return {Kind::Spatial, std::move(phi), beta.image, {}, 0};
  }
  static ElementaryAut adjoint(NormalizerMap f) { return {Kind::Adjoint, {}, {}, std::move(f), 0}; }
  static ElementaryAut slope_twist(int zeta) { return {Kind::SlopeTwist, {}, {}, {}, zeta}; }
};

// Requires an untwisted triple.
FractionElement apply_aut(const Triple& t, const ElementaryAut& e, const FractionElement& x);
ElementaryAut inverse_aut(const Triple& t, const ElementaryAut& e);

// Applied first to last.
using AutChain = std::vector<ElementaryAut>;
FractionElement apply_chain(const Triple& t, const AutChain& chain, const FractionElement& x);
AutChain inverse_chain(const Triple& t, const AutChain& chain);

struct Quadruple {
  int zeta = 0;
  NormalizerMap f;
  NormalizerElement phi;
  std::vector<int> beta;  // empty means identity
};

// F_ζ∘ad(f)∘A_{φ,β}.
AutChain xi_chain(const Quadruple& q);
FractionElement xi_apply(const Triple& t, const Quadruple& q, const FractionElement& x);
// (e, ḡ, id, ad(g⁻¹)).
Quadruple kernel_quadruple(const Triple& t, int g);
// The kernel quadruple of g fixes `samples` random elements.
bool xi_kernel_check(const Triple& t, int g, int samples, std::uint64_t seed);

// Length of the prime word of the tail class of φ⁻¹(0^∞).
long k_phi(const NormalizerElement& phi);
// log2((φ⁻¹vφ)'(φ⁻¹0^∞)) − k_φ·log2 v'(0^∞): the value γ_φ(v0^∞).
long gamma_phi_via(const NormalizerElement& phi, const VElement& v);
// A fixed element of V sending 0^∞ to the dyadic point x.
VElement v_sending_zero_to(const CPoint& x);
long gamma_phi(const NormalizerElement& phi, const CPoint& x);
// y ↦ γ_φ(vy) − γ_φ(y), as a step map in y.
StepMap<long> gamma_difference(const NormalizerElement& phi, const VElement& v);

// The group Z[1/2]² with α0 = α1 = α, α(t,r) = (t, r/2).
struct DPair {
  Dyadic t, r;
  friend bool operator==(const DPair&, const DPair&) = default;
  friend DPair operator+(const DPair& a, const DPair& b) { return {a.t + b.t, a.r + b.r}; }
  DPair operator-() const { return {-t, -r}; }
};
using DLoop = StepMap<DPair>;
struct DElement {
  DLoop a;
  VElement v;
  friend bool operator==(const DElement&, const DElement&) = default;
};

DLoop dloop_add(const DLoop& a, const DLoop& b);
DLoop dloop_neg(const DLoop& a);
DLoop dyadic_act(const VElement& v, const DLoop& a);
DElement d_mul(const DElement& x, const DElement& y);
DElement d_inv(const DElement& x);
// Σ Leb(I_k)·r_k.
Dyadic zeta_eval(const DElement& x);
// g ↦ g·ζ(g)^sign with ζ(g) embedded as the constant (ζ(g), 0).
DElement zeta_twist(const DElement& x, int sign);
DElement random_delement(Rng& rng, std::size_t max_leaves = 6, std::size_t max_depth = 4);
std::string delement_str(const DElement& x);

}  // namespace tfg
