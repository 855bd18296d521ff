#pragma once

// Words over the free monoid on finite subsets of positive integers,
// quasi-shuffles, and the Lyndon / Hall machinery over ordered alphabets.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ncsym/combinatorics.hpp"
#include "ncsym/integer.hpp"

namespace ncsym {

/// A word whose letters are nonempty finite sets of positive integers.
/// Letters may overlap; quasi-shuffle operands must be disjoint words.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Block> letters);
  explicit Word(const SetComposition& composition) : letters_(composition.parts()) {}

  const std::vector<Block>& letters() const noexcept { return letters_; }
  const Block& letter(std::size_t i) const { return letters_.at(i); }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// First i letters.
  Word prefix(std::size_t i) const;
  /// Letters after position i.
  Word suffix(std::size_t i) const;

  /// Union of all letters.
  IndexSet support() const;

  /// True when letters are pairwise disjoint, i.e. the word is a set composition.
  bool isComposition() const;
  SetComposition toComposition() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Block> letters_;
};

using WordSet = std::set<Word>;

Word parseWord(std::string_view text);
std::string format(const Word& word);

bool disjoint(const Word& u, const Word& v);

/// u ⧢ v; throws DomainError when the operands share an element.
WordSet quasiShuffle(const Word& u, const Word& v);

/// The left quasi-shuffles of nonempty disjoint u and v: outcomes whose first
/// letter is u's first letter, alone or merged with v's first letter.
WordSet leftQuasiShuffle(const Word& u, const Word& v);

/// Restriction of a word whose letters are pairwise disjoint.
Word restrict(const Word& word, const IndexSet& elements);

/// Signed sum of word tensors with exact coefficients; zero terms are dropped.
using TensorWordSum = std::map<std::pair<Word, Word>, Integer>;

/// Sum over compositions gamma of [r] with 1 in the first part of
/// (-1)^len(gamma) restrict(gamma, K) ⊗ restrict(gamma, L). Requires K ⊔ L = [r]
/// with 1 ∈ K ≠ [r]; the result vanishes identically.
TensorWordSum lemmaSum(int r, const IndexSet& k, const IndexSet& l);

/// The sign-reversing pairing on left quasi-shuffles of (u, v): merges the
/// letter v₁ into the letter before it, or splits it back out.
Word pairingPhi(const Word& w, const Word& u, const Word& v);

// ---------------------------------------------------------------------------
// Generic words over an ordered alphabet

template <class Letter>
struct GenericWord {
  std::vector<Letter> letters;
  friend bool operator==(const GenericWord&, const GenericWord&) = default;
};

template <class Letter>
using LetterLess = std::function<bool(const Letter&, const Letter&)>;

namespace detail {
// Lexicographic comparison of letters[a..) and letters[b..) style ranges.
template <class Letter>
bool lexLess(const std::vector<Letter>& x, std::size_t xFrom, std::size_t xTo,
             const std::vector<Letter>& y, std::size_t yFrom, std::size_t yTo,
             const LetterLess<Letter>& less) {
  while (xFrom < xTo && yFrom < yTo) {
    if (less(x[xFrom], y[yFrom])) return true;
    if (less(y[yFrom], x[xFrom])) return false;
    ++xFrom;
    ++yFrom;
  }
  return xFrom == xTo && yFrom < yTo;
}

template <class Letter>
bool isLyndonRange(const std::vector<Letter>& w, std::size_t from, std::size_t to,
                   const LetterLess<Letter>& less) {
  if (from >= to) return false;
  for (std::size_t i = from + 1; i < to; ++i) {
    if (!lexLess(w, from, to, w, i, to, less)) return false;
  }
  return true;
}
}  // namespace detail

/// Nonempty and strictly smaller than every proper suffix.
template <class Letter>
bool isLyndon(const GenericWord<Letter>& w, const LetterLess<Letter>& less) {
  if (w.letters.empty()) throw DomainError("isLyndon: empty word");
  return detail::isLyndonRange(w.letters, 0, w.letters.size(), less);
}

/// w = uv with v the longest proper Lyndon suffix.
template <class Letter>
std::pair<GenericWord<Letter>, GenericWord<Letter>> lyndonFactorize(
    const GenericWord<Letter>& w, const LetterLess<Letter>& less) {
  const auto n = w.letters.size();
  if (n < 2) throw DomainError("lyndonFactorize: word must have at least two letters");
  if (!isLyndon(w, less)) throw DomainError("lyndonFactorize: word is not Lyndon");
  for (std::size_t cut = 1; cut < n; ++cut) {
    if (detail::isLyndonRange(w.letters, cut, n, less)) {
      GenericWord<Letter> u{{w.letters.begin(), w.letters.begin() + cut}};
      GenericWord<Letter> v{{w.letters.begin() + cut, w.letters.end()}};
      return {std::move(u), std::move(v)};
    }
  }
  throw DomainError("lyndonFactorize: no Lyndon suffix");  // unreachable: last letter is Lyndon
}

/// Binary bracket tree; a leaf holds one letter.
template <class Letter>
struct BracketTree {
  struct Node {
    std::shared_ptr<const BracketTree> left;
    std::shared_ptr<const BracketTree> right;
  };
  std::variant<Letter, Node> value;

  bool isLeaf() const { return std::holds_alternative<Letter>(value); }
  const Letter& leaf() const { return std::get<Letter>(value); }
  const BracketTree& left() const { return *std::get<Node>(value).left; }
  const BracketTree& right() const { return *std::get<Node>(value).right; }

  void leaves(std::vector<Letter>& out) const {
    if (isLeaf()) {
      out.push_back(leaf());
    } else {
      left().leaves(out);
      right().leaves(out);
    }
  }

  /// "[a,[[a,b],b]]" using `name` for letters.
  std::string render(const std::function<std::string(const Letter&)>& name) const {
    if (isLeaf()) return name(leaf());
    return "[" + left().render(name) + "," + right().render(name) + "]";
  }

  /// Folds the tree: leaves through `leafFn`, internal nodes through `bracket`.
  template <class T>
  T fold(const std::function<T(const Letter&)>& leafFn,
         const std::function<T(const T&, const T&)>& bracket) const {
    if (isLeaf()) return leafFn(leaf());
    return bracket(left().template fold<T>(leafFn, bracket),
                   right().template fold<T>(leafFn, bracket));
  }
};

/// Hall bracketing from recursive standard factorization.
template <class Letter>
BracketTree<Letter> hallTree(const GenericWord<Letter>& w, const LetterLess<Letter>& less) {
  if (!isLyndon(w, less)) throw DomainError("hallTree: word is not Lyndon");
  if (w.letters.size() == 1) return BracketTree<Letter>{w.letters.front()};
  auto [u, v] = lyndonFactorize(w, less);
  typename BracketTree<Letter>::Node node{
      std::make_shared<const BracketTree<Letter>>(hallTree(u, less)),
      std::make_shared<const BracketTree<Letter>>(hallTree(v, less))};
  return BracketTree<Letter>{std::move(node)};
}

}  // namespace ncsym
