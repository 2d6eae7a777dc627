#include "tfg/cantor.hpp"

#include "tfg/errors.hpp"

#include <algorithm>

namespace tfg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
      if (i > start) out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

// Word

Word::Word(std::string_view bits) : bits_(bits) {
  for (char c : bits_)
    if (c != '0' && c != '1') throw ParseError("not a binary word: '" + bits_ + "'");
}

Word Word::parse(std::string_view text) {
  text = trim(text);
  if (text == "ε" || text == "e") return Word();
  return Word(text);
}

Word Word::child(int bit) const {
  Word w = *this;
  w.bits_.push_back(bit ? '1' : '0');
  return w;
}

Word Word::parent() const {
  Word w = *this;
  w.bits_.pop_back();
  return w;
}

Word Word::sibling() const {
  Word w = *this;
  w.bits_.back() = w.bits_.back() == '0' ? '1' : '0';
  return w;
}

Word Word::substr(std::size_t pos, std::size_t n) const {
  Word w;
  w.bits_ = bits_.substr(pos, n);
  return w;
}

Word Word::complemented() const {
  Word w = *this;
  for (char& c : w.bits_) c = c == '0' ? '1' : '0';
  return w;
}

Word Word::repeated(std::size_t times) const {
  Word w;
  for (std::size_t i = 0; i < times; ++i) w.bits_ += bits_;
  return w;
}

bool Word::is_prefix_of(const Word& other) const {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

long Word::digit_sum() const {
  return static_cast<long>(std::count(bits_.begin(), bits_.end(), '1'));
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Word root = w.substr(0, d);
    if (root.repeated(n / d) == w) return root;
  }
  return w;
}

Word least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word rot = w.substr(r) + w.substr(0, r);
    if (rot < best) best = rot;
  }
  return best;
}

// Sdi

bool Sdi::contains(const CPoint& x) const { return x.starts_with(prefix); }

// Sdp

bool Sdp::is_valid(std::vector<Word> words) {
  if (words.empty()) return false;
  std::sort(words.begin(), words.end());
  for (std::size_t i = 0; i + 1 < words.size(); ++i)
    if (words[i].is_prefix_of(words[i + 1])) return false;
  Dyadic total;
  for (const Word& w : words) total += Dyadic::pow2(-static_cast<long>(w.size()));
  return total == Dyadic(1);
}

Sdp Sdp::from_words(std::vector<Word> words) {
  if (!is_valid(words)) {
    std::string text;
    for (const Word& w : words) text += (text.empty() ? "" : ",") + w.str();
    throw ParseError("not a standard dyadic partition: {" + text + "}");
  }
  std::sort(words.begin(), words.end());
  return Sdp(std::move(words));
}

Sdp Sdp::uniform(std::size_t depth) {
  std::vector<Word> cells{Word()};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Word> next;
    next.reserve(cells.size() * 2);
    for (const Word& w : cells) {
      next.push_back(w.child(0));
      next.push_back(w.child(1));
    }
    cells = std::move(next);
  }
  return Sdp(std::move(cells));
}

Sdp Sdp::parse(std::string_view text) {
  std::vector<Word> words;
  for (auto tok : split_list(text)) words.push_back(Word::parse(tok));
  return from_words(std::move(words));
}

std::size_t Sdp::depth() const {
  std::size_t d = 0;
  for (const Word& w : cells_) d = std::max(d, w.size());
  return d;
}

std::optional<std::size_t> Sdp::cell_containing(const Word& w) const {
  auto it = std::upper_bound(cells_.begin(), cells_.end(), w);
  if (it == cells_.begin()) return std::nullopt;
  --it;
  if (!it->is_prefix_of(w)) return std::nullopt;
  return static_cast<std::size_t>(it - cells_.begin());
}

bool Sdp::refines(const Sdp& coarser) const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [&](const Word& w) { return coarser.cell_containing(w).has_value(); });
}

std::string Sdp::str() const {
  std::string out;
  for (const Word& w : cells_) out += (out.empty() ? "" : ",") + w.str();
  return out;
}

Sdp common_refinement(const Sdp& p, const Sdp& q) {
  const auto& a = p.cells();
  const auto& b = q.cells();
  std::vector<Word> out;
  std::size_t i = 0, j = 0;
  // Both lists are leaf orders of covering partitions, so the current cells
  // are always prefix-comparable.
  while (i < a.size() && j < b.size()) {
    if (a[i].size() <= b[j].size()) {
      out.push_back(b[j]);
      ++j;
      if (j == b.size() || !a[i].is_prefix_of(b[j])) ++i;
    } else {
      out.push_back(a[i]);
      ++i;
      if (i == a.size() || !b[j].is_prefix_of(a[i])) ++j;
    }
  }
  return Sdp::from_words(std::move(out));
}

// SdiUnion

SdiUnion SdiUnion::from_words(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::map<Word, char> cells;
  std::vector<Word> order;
  const Word* kept = nullptr;
  for (const Word& w : words) {
    if (kept && kept->is_prefix_of(w)) continue;
    kept = &w;
    cells.emplace(w, 0);
    order.push_back(w);
  }
  merge_siblings(cells, std::move(order), [](char, char) { return std::optional<char>(0); });
  SdiUnion u;
  for (auto& [w, _] : cells) u.cells_.push_back(w);
  return u;
}

SdiUnion SdiUnion::parse(std::string_view text) {
  text = trim(text);
  std::vector<Word> words;
  if (text == "∅" || text == "{}") return SdiUnion();
  for (auto tok : split_list(text)) words.push_back(Word::parse(tok));
  return from_words(std::move(words));
}

bool SdiUnion::contains(const Word& w) const {
  auto it = std::upper_bound(cells_.begin(), cells_.end(), w);
  if (it == cells_.begin()) return false;
  return std::prev(it)->is_prefix_of(w);
}

bool SdiUnion::meets(const Word& w) const {
  if (contains(w)) return true;
  auto it = std::lower_bound(cells_.begin(), cells_.end(), w);
  return it != cells_.end() && w.is_prefix_of(*it);
}

bool SdiUnion::contains(const CPoint& x) const {
  return std::any_of(cells_.begin(), cells_.end(),
                     [&](const Word& w) { return x.starts_with(w); });
}

SdiUnion SdiUnion::complement() const {
  std::vector<Word> out;
  std::vector<Word> stack{Word()};
  while (!stack.empty()) {
    Word node = std::move(stack.back());
    stack.pop_back();
    if (contains(node)) continue;
    if (!meets(node)) {
      out.push_back(node);
      continue;
    }
    stack.push_back(node.child(1));
    stack.push_back(node.child(0));
  }
  return from_words(std::move(out));
}

SdiUnion SdiUnion::unite(const SdiUnion& other) const {
  std::vector<Word> words = cells_;
  words.insert(words.end(), other.cells_.begin(), other.cells_.end());
  return from_words(std::move(words));
}

SdiUnion SdiUnion::intersect(const SdiUnion& other) const {
  return complement().unite(other.complement()).complement();
}

Dyadic SdiUnion::measure() const {
  Dyadic total;
  for (const Word& w : cells_) total += Dyadic::pow2(-static_cast<long>(w.size()));
  return total;
}

std::string SdiUnion::str() const {
  if (cells_.empty()) return "∅";
  std::string out;
  for (const Word& w : cells_) out += (out.empty() ? "" : ",") + w.str();
  return out;
}

// CPoint

CPoint::CPoint(Word pre, Word period) : pre_(std::move(pre)), period_(std::move(period)) {
  if (period_.empty()) throw PreconditionError("CPoint period must be nonempty");
  period_ = primitive_root(period_);
  while (!pre_.empty() && pre_.back() == period_.back()) {
    pre_ = pre_.parent();
    period_ = period_.substr(period_.size() - 1) + period_.substr(0, period_.size() - 1);
  }
}

CPoint CPoint::parse(std::string_view text) {
  text = trim(text);
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw ParseError("point must look like pre.(period): '" + std::string(text) + "'");
  std::string_view pre = text.substr(0, open);
  if (!pre.empty() && pre.back() == '.') pre.remove_suffix(1);
  std::string_view per = text.substr(open + 1, text.size() - open - 2);
  Word period = Word::parse(per);
  if (period.empty()) throw ParseError("point period must be nonempty");
  return CPoint(Word::parse(pre), period);
}

int CPoint::letter(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return period_[(i - pre_.size()) % period_.size()];
}

Word CPoint::prefix(std::size_t n) const {
  std::string bits(n, '0');
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<char>('0' + letter(i));
  return Word(bits);
}

bool CPoint::starts_with(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (letter(i) != w[i]) return false;
  return true;
}

CPoint CPoint::drop(std::size_t k) const {
  if (k <= pre_.size()) return CPoint(pre_.substr(k), period_);
  std::size_t r = (k - pre_.size()) % period_.size();
  return CPoint(Word(), period_.substr(r) + period_.substr(0, r));
}

Word CPoint::tail_class_word() const { return least_rotation(period_); }

std::string CPoint::str() const {
  if (pre_.empty()) return "(" + period_.bits() + ")";
  return pre_.bits() + ".(" + period_.bits() + ")";
}

}  // namespace tfg
