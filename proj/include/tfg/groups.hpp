#pragma once

// Finite groups given by multiplication tables, homomorphisms between them,
// endomorphism triples (Γ, α0, α1) and the enumeration machinery for
// automorphisms and isomorphisms.

#include "tfg/cantor.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tfg {

class FiniteGroup {
 public:
  // Validates closure, associativity, identity at index 0 and inverses.
  explicit FiniteGroup(std::vector<std::vector<int>> mul, std::vector<std::string> names = {});

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * n_ + b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  // h g h⁻¹.
  int conj(int h, int g) const { return mul(mul(h, g), inv(h)); }
  int pow(int g, long k) const;
  int element_order(int g) const;
  bool is_abelian() const;
  std::vector<int> center() const;
  std::string name(int g) const;
  const std::vector<std::string>& names() const { return names_; }
  std::vector<std::vector<int>> table() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.mul_ == b.mul_; }

 private:
  int n_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr cyclic_group(int n);
// Permutations of {0..n-1} in lexicographic order (identity first).
GroupPtr symmetric_group(int n);
GroupPtr dihedral_group(int n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

struct GroupMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> image;

  static GroupMap identity(const GroupPtr& g);
  // x ↦ h x h⁻¹.
  static GroupMap inner(const GroupPtr& g, int h);
  // x ↦ e.
  static GroupMap trivial(const GroupPtr& g);
  // x ↦ x^k on an abelian group.
  static GroupMap power(const GroupPtr& g, long k);

  int operator()(int g) const { return image[static_cast<std::size_t>(g)]; }
  bool is_hom() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_automorphism() const;
  // Inverse of a bijection.
  GroupMap inverse() const;
  std::string str() const;

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.image == b.image && *a.source == *b.source && *a.target == *b.target;
  }
};

// f∘g.
GroupMap compose(const GroupMap& f, const GroupMap& g);

class Triple {
 public:
  // Throws PreconditionError unless a0, a1 are endomorphisms of g.
  Triple(GroupPtr g, GroupMap a0, GroupMap a1);

  const GroupPtr& group() const { return g_; }
  const FiniteGroup& grp() const { return *g_; }
  const GroupMap& a(int i) const { return i == 0 ? a0_ : a1_; }
  bool autos() const { return autos_; }
  bool untwisted() const;

  int alpha(int i, int g) const { return a(i)(g); }
  int alpha_inv(int i, int g) const;
  // α_m(g) with α_m = α_{m_k}∘…∘α_{m_1}: the first letter acts first.
  int alpha_word(const Word& m, int g) const;
  int alpha_word_inv(const Word& m, int g) const;
  GroupMap alpha_word_map(const Word& m) const;
  // Throws PreconditionError for non-automorphism triples.
  void require_autos(const char* what) const;

 private:
  GroupPtr g_;
  GroupMap a0_, a1_;
  std::vector<int> inv0_, inv1_;
  bool autos_ = false;
};

// Enumeration bound: 24, or the value of THOMPSON_MAX_GROUP.
int max_group_order();
void check_bound(const FiniteGroup& g);

// A minimum-size generating set (lexicographically first of that size).
std::vector<int> generating_set(const FiniteGroup& g);
// Extends gens[i] ↦ images[i] to a homomorphism, if one exists.
std::optional<GroupMap> extend_hom(const GroupPtr& src, const GroupPtr& dst,
                                   const std::vector<int>& gens, const std::vector<int>& images);
// Sorted by image table.
std::vector<GroupMap> aut_group(const GroupPtr& g);
std::vector<GroupMap> inner_auts(const GroupPtr& g);
bool is_inner(const GroupMap& a);
// Least image table in the coset a·Inn(g).
std::vector<int> out_class(const GroupMap& a);
std::optional<GroupMap> find_isomorphism(const GroupPtr& a, const GroupPtr& b);
// All isomorphisms a → b, sorted by image table.
std::vector<GroupMap> isomorphisms(const GroupPtr& a, const GroupPtr& b);

// Elements fixed by both endomorphisms.
std::vector<int> gamma_alpha_fixed(const Triple& t);

struct Reduction {
  Triple quotient;
  GroupMap projection;
  std::vector<int> kernel;  // N as a sorted element list
  int depth = 0;            // first d with K_d = N
};
// Quotient by N = ∪_d K_d, K_0 = {e}, K_{d+1} = {g : α0(g), α1(g) ∈ K_d}.
Reduction tanushevski_reduce(const Triple& t);
// True iff g ↦ (α0(g), α1(g)) is injective.
bool joint_map_injective(const Triple& t);

// h_q^α; satisfies h_{q·m} = h_m · α_m(h_q).
int h_q_alpha(const Triple& t, int h0, int h1, const Word& q);

// Named fixtures: z2, z3, z3inv, z3swap, z3triv, z4, z4inv, z4dbl, s3, s3inner,
// z5x2, z5x3, z5x4, z2z2, d4.
Triple fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace tfg
