#pragma once

// The Hopf algebra NCSym in the power-sum basis indexed by standard set
// partitions: product, coproduct, counit, antipode, and primitive elements.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "ncsym/combinatorics.hpp"
#include "ncsym/freeword.hpp"
#include "ncsym/integer.hpp"

namespace ncsym {

/// A finitely supported integer combination of standard set partitions.
/// Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<SetPartition, Integer>;

  Element() = default;
  /// The basis vector of a standard partition.
  explicit Element(const SetPartition& partition, Integer coeff = 1);

  static Element unit() { return Element(SetPartition{}); }

  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && noexcept { return std::move(terms_); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool isZero() const noexcept { return terms_.empty(); }
  Integer coefficient(const SetPartition& partition) const;

  /// Adds `coeff * partition`; the partition must be standard.
  void add(const SetPartition& partition, const Integer& coeff);

  /// True when every term has the same weight (the zero element is homogeneous).
  bool isHomogeneous() const;

  /// Sum of absolute values of the coefficients.
  Integer l1Norm() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Integer& scalar);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Integer(-1); }
  friend Element operator*(const Integer& s, Element a) { return a *= s; }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Terms terms_;
};

/// A finitely supported integer combination of ordered pairs of partitions.
class TensorElement {
 public:
  using Key = std::pair<SetPartition, SetPartition>;
  using Terms = std::map<Key, Integer>;

  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && noexcept { return std::move(terms_); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool isZero() const noexcept { return terms_.empty(); }
  Integer coefficient(const SetPartition& left, const SetPartition& right) const;

  void add(const SetPartition& left, const SetPartition& right, const Integer& coeff);

  /// Swaps the two tensor factors.
  TensorElement twist() const;

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  Terms terms_;
};

/// x ⊗ y expanded bilinearly.
TensorElement tensor(const Element& x, const Element& y);

/// Componentwise product of tensors: (a⊗b)(c⊗d) = ac ⊗ bd.
TensorElement product(const TensorElement& x, const TensorElement& y);

/// Bilinear extension of concatenation; the unit is the empty partition.
Element product(const Element& x, const Element& y);

/// Sum over ordered splittings K ⊔ L of the block indices.
TensorElement coproduct(const SetPartition& partition);
TensorElement coproduct(const Element& x);

/// Coefficient of the empty partition.
Integer counit(const Element& x);

/// Δ(x) − x⊗∅ − ∅⊗x; requires counit(x) == 0. Zero exactly when x is primitive.
TensorElement reducedCoproduct(const Element& x);

// ---------------------------------------------------------------------------
// Antipode

/// Signed sum over every set composition of the block indices.
Element antipodeDirect(const SetPartition& partition);

/// Signed sum over refinements of the composition that lists the atoms'
/// block ranges in reverse order.
Element antipodeFactored(const SetPartition& partition);

/// Antipode from the graded-connected recursion S(A) = −A − Σ S(A′)·A″ over
/// the proper coproduct terms. Results are memoized; concurrent callers may
/// duplicate work but see identical values.
class AntipodeOracle {
 public:
  Element operator()(const SetPartition& partition);
  Element operator()(const Element& x);

  std::size_t cacheSize() const;

 private:
  mutable std::mutex mutex_;
  std::map<SetPartition, Element> memo_;
};

Element antipodeOracle(const SetPartition& partition);

enum class AntipodeMethod { Direct, Factored, Oracle };

/// Linear extension of the chosen antipode formula. The empty partition maps
/// to itself under every method.
Element antipode(const Element& x, AntipodeMethod method = AntipodeMethod::Factored);
Element antipode(const SetPartition& partition, AntipodeMethod method = AntipodeMethod::Factored);

/// Number of uncombined terms of the direct formula (the ordered Bell number
/// of the block count).
std::size_t antipodeDirectTermCount(const SetPartition& partition);

/// The largest block count accepted by single-partition operations.
inline constexpr std::size_t kMaxBlocks = 10;

// ---------------------------------------------------------------------------
// Primitives

/// Signed sum over compositions of the block indices whose first part holds 1.
/// Primitive and nonzero for atomic partitions, zero otherwise.
Element primitive(const SetPartition& partition);

/// Total order on atomic partitions: heavier atoms first, ties by extended text.
using AtomOrder = std::function<std::strong_ordering(const SetPartition&, const SetPartition&)>;

AtomOrder atomOrderDefault();

/// Word-lexicographic comparison of atomic factorizations under `order`.
std::strong_ordering extendToPartitions(const AtomOrder& order, const SetPartition& a,
                                        const SetPartition& b);

/// Minimum partition of the support under the extended order.
SetPartition leadingTerm(const Element& x, const AtomOrder& order = atomOrderDefault());

/// Terms sorted by the extended order.
std::vector<std::pair<SetPartition, Integer>> orderedTerms(
    const Element& x, const AtomOrder& order = atomOrderDefault());

/// Commutator xy − yx.
Element bracket(const Element& x, const Element& y);

/// Product of p(atom) over the atomic factorization of a standard partition.
Element primitiveMonomial(const SetPartition& partition);

/// Hall polynomial in the primitives p(atom) for a Lyndon word of atoms.
Element hallPrimitive(const std::vector<SetPartition>& atoms,
                      const AtomOrder& order = atomOrderDefault());

/// Every Lyndon word of atoms whose weights sum to n.
std::vector<std::vector<SetPartition>> lyndonAtomWords(int n,
                                                       const AtomOrder& order = atomOrderDefault());

/// Dimension of the primitive subspace of the weight-n component.
std::size_t primitiveSpaceDimension(int n);

/// The Hall primitives of weight n are primitive, linearly independent, and
/// as many as the primitive subspace's dimension.
bool hallSpanCheck(int n);

}  // namespace ncsym
