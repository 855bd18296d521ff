#pragma once

// Set partitions and set compositions of finite sets of positive integers,
// their shorthand text forms, and the operators used by the NCSym formulas.

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncsym {

/// An ascending list of distinct positive integers.
using Block = std::vector<int>;

/// A set of indices or ground elements; always ascending.
using IndexSet = std::set<int>;

/// Raised when shorthand text cannot be parsed. `token()` names the offender.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string token)
      : std::invalid_argument(message + ": '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Raised when an operation's precondition does not hold.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TextMode { Compact, Extended };

/// A set partition in canonical form: every block ascending, blocks ordered by
/// their minima. The empty partition (no blocks) is the unit of NCSym.
class SetPartition {
 public:
  SetPartition() = default;

  /// Canonicalizes arbitrary blocks. Throws DomainError on empty blocks or
  /// repeated elements, and on non-positive elements.
  explicit SetPartition(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i); }

  std::size_t length() const noexcept { return blocks_.size(); }
  std::size_t weight() const noexcept;
  bool empty() const noexcept { return blocks_.empty(); }

  /// Ground set is exactly {1, ..., weight()}.
  bool isStandard() const noexcept;

  IndexSet groundSet() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

  /// Trusted constructor for blocks already known to be canonical.
  static SetPartition fromCanonical(std::vector<Block> blocks);

 private:
  std::vector<Block> blocks_;
};

/// An ordered sequence of disjoint nonempty blocks.
class SetComposition {
 public:
  SetComposition() = default;

  /// Sorts each part; throws DomainError on empty parts, repeats, or
  /// non-positive elements. Part order is kept.
  explicit SetComposition(std::vector<Block> parts);

  const std::vector<Block>& parts() const noexcept { return parts_; }
  const Block& part(std::size_t i) const { return parts_.at(i); }

  std::size_t length() const noexcept { return parts_.size(); }
  std::size_t weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  IndexSet groundSet() const;

  friend bool operator==(const SetComposition&, const SetComposition&) = default;
  friend auto operator<=>(const SetComposition&, const SetComposition&) = default;

  static SetComposition fromCanonical(std::vector<Block> parts);

 private:
  std::vector<Block> parts_;
};

/// The maximal splitting of a standard partition into atomic pieces.
struct AtomicFactorization {
  std::vector<SetPartition> atoms;

  std::size_t size() const noexcept { return atoms.size(); }
  friend bool operator==(const AtomicFactorization&, const AtomicFactorization&) = default;
};

// ---------------------------------------------------------------------------
// Text forms
//
// Compact:  single digits, blocks joined by '.', e.g. "13.28.4" or "38|12|4".
// Extended: comma-separated integers within a block, e.g. "1,13.2,8.4".
// The empty object is "" (or "∅" on input).

SetPartition parsePartition(std::string_view text);
SetComposition parseComposition(std::string_view text);

/// Shared block-list parser; `separator` is '.' or '|'. Overlap between
/// blocks is an error unless `allowOverlap` (used for general words).
std::vector<Block> parseBlocks(std::string_view text, char separator, bool allowOverlap = false);

std::string format(const SetPartition& partition, TextMode mode = TextMode::Compact);
std::string format(const SetComposition& composition, TextMode mode = TextMode::Compact);

/// Compact when every element is a single digit, extended otherwise.
std::string formatAuto(const SetPartition& partition);
std::string formatAuto(const SetComposition& composition);

std::string formatBlocks(const std::vector<Block>& blocks, char separator, TextMode mode);

// ---------------------------------------------------------------------------
// Set partition operators

SetPartition shift(const SetPartition& partition, int k);
SetPartition standardize(const SetPartition& partition);

/// B|C = B ∪ (C shifted by |B|). Both operands must be standard.
SetPartition concat(const SetPartition& left, const SetPartition& right);

/// Blocks at the given 1-based indices, not standardized.
SetPartition subPartition(const SetPartition& partition, const IndexSet& indices);

bool isAtomic(const SetPartition& partition);
AtomicFactorization atomicFactorization(const SetPartition& partition);

/// Folds concat over the atoms.
SetPartition concatAll(const std::vector<SetPartition>& pieces);

// ---------------------------------------------------------------------------
// Set composition operators

/// Intersects each part with `elements`, dropping empties.
SetComposition restrict(const SetComposition& composition, const IndexSet& elements);

/// Parts at the given 1-based positions, in order.
SetComposition subsequence(const SetComposition& composition, const IndexSet& positions);

/// True iff `finer` refines `coarser` (each part of `coarser` is the union of a
/// contiguous run of parts of `finer`). Reflexive.
bool refines(const SetComposition& finer, const SetComposition& coarser);

/// gamma[A]: concatenation of the standardized sub-partitions of A selected by
/// each part of gamma. Parts of gamma index blocks of A (1-based).
SetPartition evaluate(const SetComposition& gamma, const SetPartition& partition);

// ---------------------------------------------------------------------------
// Enumeration. Each returns a duplicate-free list sorted by extended format.

std::vector<SetPartition> enumeratePartitions(int n);
std::vector<SetPartition> enumerateAtomic(int n);
std::vector<SetComposition> enumerateCompositions(int r);
/// Compositions of [r] whose first part contains 1.
std::vector<SetComposition> enumerateFirstBlockAnchored(int r);
/// All gamma with gamma ≻ rho.
std::vector<SetComposition> enumerateRefinements(const SetComposition& rho);

/// Unsorted visitation of every set composition of `ground`; used on hot paths.
void forEachComposition(const Block& ground,
                        const std::function<void(const std::vector<Block>&)>& visit);

/// Unsorted visitation of every refinement of `rho`.
void forEachRefinement(const SetComposition& rho,
                       const std::function<void(const std::vector<Block>&)>& visit);

}  // namespace ncsym
