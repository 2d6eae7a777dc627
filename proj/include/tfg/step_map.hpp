#pragma once

// Locally constant maps on the Cantor space with values in T, stored over a
// standard dyadic partition in canonical form (no sibling cells carrying
// equal values).

#include "tfg/cantor.hpp"
#include "tfg/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace tfg {

template <class T>
class StepMap {
 public:
  using Cell = std::pair<Word, T>;

  StepMap() : cells_{{Word(), T{}}} {}
  explicit StepMap(T constant) : cells_{{Word(), std::move(constant)}} {}

  // Validates that the words form an sdp and canonicalizes.
  static StepMap from_cells(std::vector<Cell> cells) {
    std::vector<Word> ws;
    for (auto& c : cells) ws.push_back(c.first);
    if (!Sdp::is_valid(ws)) throw ParseError("cells do not form a standard dyadic partition");
    return canonical(std::move(cells));
  }
  // Skips the partition check; callers guarantee the words form an sdp.
  static StepMap canonical(std::vector<Cell> cells) {
    std::map<Word, T> m;
    std::vector<Word> order;
    for (auto& [w, v] : cells) {
      order.push_back(w);
      m.emplace(w, std::move(v));
    }
    std::sort(order.begin(), order.end());
    merge_siblings(m, std::move(order), [](const T& l, const T& r) -> std::optional<T> {
      if (l == r) return l;
      return std::nullopt;
    });
    StepMap s;
    s.cells_.assign(m.begin(), m.end());
    return s;
  }

  const std::vector<Cell>& cells() const& { return cells_; }
  std::vector<Cell> cells() && { return std::move(cells_); }
  Sdp partition() const {
    std::vector<Word> ws;
    for (auto& c : cells_) ws.push_back(c.first);
    return Sdp::from_words(std::move(ws));
  }
  bool is_constant() const { return cells_.size() == 1; }

  // Value on I_w; I_w must lie inside one cell.
  const T& at(const Word& w) const {
    auto it = std::upper_bound(cells_.begin(), cells_.end(), w,
                               [](const Word& x, const Cell& c) { return x < c.first; });
    if (it == cells_.begin() || !std::prev(it)->first.is_prefix_of(w))
      throw PreconditionError("interval " + w.str() + " is not inside a single cell");
    return std::prev(it)->second;
  }
  const T& at(const CPoint& x) const {
    for (auto& [w, v] : cells_)
      if (x.starts_with(w)) return v;
    throw PreconditionError("point not covered");
  }

  template <class F>
  auto map(F f) const {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<std::pair<Word, U>> out;
    for (auto& [w, v] : cells_) out.emplace_back(w, f(v));
    return StepMap<U>::canonical(std::move(out));
  }

  friend bool operator==(const StepMap&, const StepMap&) = default;

 private:
  std::vector<Cell> cells_;
};

// Pointwise combination over the common refinement.
template <class A, class B, class F>
auto zip_with(const StepMap<A>& a, const StepMap<B>& b, F f) {
  using U = decltype(f(std::declval<const A&>(), std::declval<const B&>()));
  std::vector<std::pair<Word, U>> out;
  for (const Word& w : common_refinement(a.partition(), b.partition()).cells())
    out.emplace_back(w, f(a.at(w), b.at(w)));
  return StepMap<U>::canonical(std::move(out));
}

}  // namespace tfg
