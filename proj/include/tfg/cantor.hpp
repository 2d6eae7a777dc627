#pragma once

// Finite binary words, standard dyadic intervals and partitions, finite
// unions of intervals, and eventually periodic points of the Cantor space
// {0,1}^N.

#include "tfg/dyadic.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tfg {

class Word {
 public:
  Word() = default;
  // Throws ParseError unless every character is '0' or '1'.
  explicit Word(std::string_view bits);

  // Accepts the raw bit string and the spellings "ε" / "e" for the empty word.
  static Word parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] - '0'; }
  int back() const { return bits_.back() - '0'; }

  const std::string& bits() const { return bits_; }
  // Text form; the empty word prints as "ε".
  std::string str() const { return bits_.empty() ? "ε" : bits_; }

  Word child(int bit) const;
  Word parent() const;
  Word sibling() const;
  Word substr(std::size_t pos, std::size_t n = std::string::npos) const;
  Word complemented() const;
  Word repeated(std::size_t times) const;

  bool is_prefix_of(const Word& other) const;
  bool is_proper_prefix_of(const Word& other) const {
    return size() < other.size() && is_prefix_of(other);
  }
  // Number of 1 letters.
  long digit_sum() const;

  Word& operator+=(const Word& w) {
    bits_ += w.bits_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  friend bool operator==(const Word&, const Word&) = default;
  // Lexicographic with 0 < 1 and prefixes first: the left-to-right order of
  // the leaves of a partition.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::string bits_;
};

class CPoint;

// Standard dyadic interval: all sequences with a given prefix.
struct Sdi {
  Word prefix;

  bool contains(const CPoint& x) const;
  bool contains(const Sdi& other) const { return prefix.is_prefix_of(other.prefix); }
  Dyadic measure() const { return Dyadic::pow2(-static_cast<long>(prefix.size())); }
  friend bool operator==(const Sdi&, const Sdi&) = default;
  friend auto operator<=>(const Sdi&, const Sdi&) = default;
};

// Standard dyadic partition, cells in left-to-right order.
class Sdp {
 public:
  // The one-cell partition {ε}.
  Sdp() : cells_{Word()} {}
  // Throws ParseError unless the words are prefix-free with total measure 1.
  static Sdp from_words(std::vector<Word> words);
  static bool is_valid(std::vector<Word> words);
  // All 2^depth words of the given length.
  static Sdp uniform(std::size_t depth);
  static Sdp parse(std::string_view text);

  const std::vector<Word>& cells() const& { return cells_; }
  std::vector<Word> cells() && { return std::move(cells_); }
  std::size_t size() const { return cells_.size(); }
  std::size_t depth() const;
  // Index of the cell that is a prefix of w, if any.
  std::optional<std::size_t> cell_containing(const Word& w) const;
  bool refines(const Sdp& coarser) const;
  std::string str() const;

  friend bool operator==(const Sdp&, const Sdp&) = default;

 private:
  explicit Sdp(std::vector<Word> cells) : cells_(std::move(cells)) {}
  std::vector<Word> cells_;
};

// Coarsest partition refining both.
Sdp common_refinement(const Sdp& p, const Sdp& q);

// Finite union of standard dyadic intervals in canonical form: pairwise
// prefix-incomparable cells with no sibling pair present.
class SdiUnion {
 public:
  SdiUnion() = default;
  static SdiUnion from_words(std::vector<Word> words);
  static SdiUnion full() { return from_words({Word()}); }
  static SdiUnion parse(std::string_view text);

  const std::vector<Word>& cells() const& { return cells_; }
  std::vector<Word> cells() && { return std::move(cells_); }
  bool empty() const { return cells_.empty(); }
  bool is_full() const { return cells_.size() == 1 && cells_[0].empty(); }

  SdiUnion complement() const;
  SdiUnion unite(const SdiUnion& other) const;
  SdiUnion intersect(const SdiUnion& other) const;

  bool contains(const CPoint& x) const;
  // True iff the whole interval I_w lies inside the union.
  bool contains(const Word& w) const;
  // True iff I_w meets the union.
  bool meets(const Word& w) const;
  Dyadic measure() const;
  std::string str() const;

  friend bool operator==(const SdiUnion&, const SdiUnion&) = default;

 private:
  std::vector<Word> cells_;
};

// Eventually periodic point pre·per^∞, stored canonically: per is primitive
// and pre does not end with the last letter of per.
class CPoint {
 public:
  // 0^∞.
  CPoint() : period_("0") {}
  // Throws PreconditionError for an empty period.
  CPoint(Word pre, Word period);

  static CPoint parse(std::string_view text);
  // The finitely supported point w·0^∞.
  static CPoint dyadic(const Word& w) { return CPoint(w, Word("0")); }

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return period_; }

  int letter(std::size_t i) const;
  Word prefix(std::size_t n) const;
  bool starts_with(const Word& w) const;
  // The point y with x = first k letters · y.
  CPoint drop(std::size_t k) const;
  CPoint prepend(const Word& w) const { return CPoint(w + pre_, period_); }
  CPoint complemented() const { return CPoint(pre_.complemented(), period_.complemented()); }

  // Least rotation of the primitive period: the invariant of the tail class.
  Word tail_class_word() const;
  // Member of the tail class of "0" (finitely supported sequences).
  bool is_dyadic() const { return period_ == Word("0"); }

  std::string str() const;

  friend bool operator==(const CPoint&, const CPoint&) = default;
  friend auto operator<=>(const CPoint&, const CPoint&) = default;

 private:
  Word pre_;
  Word period_;
};

// Primitive root of a nonempty word.
Word primitive_root(const Word& w);
Word least_rotation(const Word& w);

// Merges sibling cells m0, m1 into m whenever try_merge(value(m0), value(m1))
// yields a value, until no merge applies. Entries named in `order` are
// examined first-to-last; newly created parents are appended.
template <class T, class Merge>
void merge_siblings(std::map<Word, T>& cells, std::vector<Word> order, Merge&& try_merge) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Word m = order[i];
    if (m.empty()) continue;
    auto it = cells.find(m);
    if (it == cells.end()) continue;
    auto sib = cells.find(m.sibling());
    if (sib == cells.end()) continue;
    auto left = m.back() == 0 ? it : sib;
    auto right = m.back() == 0 ? sib : it;
    std::optional<T> merged = try_merge(left->second, right->second);
    if (!merged) continue;
    Word parent = m.parent();
    cells.erase(left);
    cells.erase(right);
    cells.emplace(parent, std::move(*merged));
    order.push_back(std::move(parent));
  }
}

}  // namespace tfg

template <>
struct std::hash<tfg::Word> {
  std::size_t operator()(const tfg::Word& w) const noexcept {
    return std::hash<std::string>{}(w.bits()) ^ (w.size() * 0x9e3779b97f4a7c15ULL);
  }
};
