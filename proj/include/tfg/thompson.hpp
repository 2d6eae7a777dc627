#pragma once

// Thompson's group V as reduced prefix-replacement tables, and the subgroup
// of its normalizer generated by V and the bit flip.

#include "tfg/cantor.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tfg {

using WordPair = std::pair<Word, Word>;

class VElement {
 public:
  // Identity {ε->ε}.
  VElement() : pairs_{{Word(), Word()}} {}

  // Validates that domains and codomains are sdp, then reduces.
  static VElement from_pairs(std::vector<WordPair> pairs);
  // Same, but sibling merges are attempted in the given order of domain
  // indices (for confluence tests).
  static VElement from_pairs_ordered(std::vector<WordPair> pairs,
                                     const std::vector<std::size_t>& merge_order);
  // "dom->cod" tokens separated by spaces or commas; "e" is the empty word.
  static VElement parse(std::string_view text);

  // Sorted by domain.
  const std::vector<WordPair>& pairs() const& { return pairs_; }
  std::vector<WordPair> pairs() && { return std::move(pairs_); }
  std::size_t size() const { return pairs_.size(); }
  Sdp domain() const;
  Sdp codomain() const;
  bool is_identity() const { return pairs_.size() == 1 && pairs_[0].first.empty(); }

  // Index of the pair whose domain is a prefix of w.
  std::optional<std::size_t> pair_containing(const Word& w) const;
  // v(I_w) when I_w lies inside a domain cell.
  std::optional<Word> image_of(const Word& w) const;
  CPoint apply(const CPoint& x) const;
  // log2 v'(x) = |m_I| - |m_v(I)|.
  long slope(const CPoint& x) const;
  SdiUnion image(const SdiUnion& u) const;
  // The table written over the common refinement of p and the domain.
  std::vector<WordPair> refined_pairs(const Sdp& p) const;

  VElement inverse() const;
  // flip v flip: every letter complemented.
  VElement flip_conjugate() const;

  bool is_in_F() const;
  bool is_in_T() const;

  std::string str() const;

  friend bool operator==(const VElement&, const VElement&) = default;

 private:
  static VElement reduce(std::vector<WordPair> pairs, const std::vector<std::size_t>* order);
  std::vector<WordPair> pairs_;
};

// v∘w, w applied first.
VElement compose(const VElement& v, const VElement& w);
inline VElement operator*(const VElement& v, const VElement& w) { return compose(v, w); }

// flip^a ∘ v.
struct NormalizerElement {
  bool flip = false;
  VElement v;

  static NormalizerElement flip_map() { return {true, VElement()}; }
  static NormalizerElement parse(std::string_view text);

  CPoint apply(const CPoint& x) const;
  SdiUnion image(const SdiUnion& u) const;
  NormalizerElement inverse() const;
  bool is_identity() const { return !flip && v.is_identity(); }
  std::string str() const { return (flip ? "~" : "") + v.str(); }

  friend bool operator==(const NormalizerElement&, const NormalizerElement&) = default;
};

NormalizerElement compose(const NormalizerElement& a, const NormalizerElement& b);
// φ v φ⁻¹.
VElement normalizer_conjugate(const NormalizerElement& phi, const VElement& v);

// v adapted to I_j with v(I_j) = I_target, the identity outside the parent
// of the shorter word. One of j, target must be a proper prefix of the other.
VElement make_contraction(const Word& j, const Word& target);
// v with v(a) = b and v(a^c) = b^c, both pieces order preserving.
VElement make_v_mapping(const SdiUnion& a, const SdiUnion& b);
// v exchanging the disjoint intervals I_k and I_l, the identity elsewhere.
VElement make_transposition(const Word& k, const Word& l);
// Transpositions of disjoint depth-≤depth cells inside u^c, plus the
// contraction k00->k0, k01->k10, k1->k11 for each such cell k.
std::vector<VElement> fix_generators(const SdiUnion& u, std::size_t depth);

}  // namespace tfg
