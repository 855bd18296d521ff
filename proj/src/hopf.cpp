#include "ncsym/hopf.hpp"

#include <algorithm>
#include <cstdint>

#include "ncsym/linalg.hpp"

namespace ncsym {

namespace {

template <class Map, class Key>
void accumulate(Map& terms, Key&& key, const Integer& coeff) {
  if (coeff == 0) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::forward<Key>(key), coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

void requireStandard(const SetPartition& a, const char* op) {
  if (!a.isStandard()) {
    throw DomainError(std::string(op) + ": partition " + formatAuto(a) + " is not standard");
  }
}

void requireBlockCap(const SetPartition& a, const char* op) {
  if (a.length() > kMaxBlocks) {
    throw DomainError(std::string(op) + ": " + std::to_string(a.length()) +
                      " blocks exceeds the supported maximum of " + std::to_string(kMaxBlocks));
  }
}

Block iota(int from, int to) {
  Block out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

Integer signOf(std::size_t length) { return length % 2 == 0 ? Integer(1) : Integer(-1); }

}  // namespace

// ---------------------------------------------------------------------------

Element::Element(const SetPartition& partition, Integer coeff) { add(partition, coeff); }

Integer Element::coefficient(const SetPartition& partition) const {
  auto it = terms_.find(partition);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Element::add(const SetPartition& partition, const Integer& coeff) {
  requireStandard(partition, "Element");
  accumulate(terms_, partition, coeff);
}

bool Element::isHomogeneous() const {
  if (terms_.empty()) return true;
  const auto w = terms_.begin()->first.weight();
  return std::all_of(terms_.begin(), terms_.end(),
                     [w](const auto& t) { return t.first.weight() == w; });
}

Integer Element::l1Norm() const {
  Integer out = 0;
  for (const auto& [p, c] : terms_) out += abs(c);
  return out;
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [p, c] : other.terms_) accumulate(terms_, p, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [p, c] : other.terms_) accumulate(terms_, p, Integer(-c));
  return *this;
}

Element& Element::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

Integer TensorElement::coefficient(const SetPartition& left, const SetPartition& right) const {
  auto it = terms_.find(Key{left, right});
  return it == terms_.end() ? Integer(0) : it->second;
}

void TensorElement::add(const SetPartition& left, const SetPartition& right,
                        const Integer& coeff) {
  accumulate(terms_, Key{left, right}, coeff);
}

TensorElement TensorElement::twist() const {
  TensorElement out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(Key{key.second, key.first}, c);
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  for (const auto& [key, c] : other.terms_) accumulate(terms_, key, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  for (const auto& [key, c] : other.terms_) accumulate(terms_, key, Integer(-c));
  return *this;
}

TensorElement tensor(const Element& x, const Element& y) {
  TensorElement out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) out.add(a, b, ca * cb);
  }
  return out;
}

TensorElement product(const TensorElement& x, const TensorElement& y) {
  TensorElement out;
  for (const auto& [k1, c1] : x.terms()) {
    for (const auto& [k2, c2] : y.terms()) {
      out.add(concat(k1.first, k2.first), concat(k1.second, k2.second), c1 * c2);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Element product(const Element& x, const Element& y) {
  Element out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) out.add(concat(a, b), ca * cb);
  }
  return out;
}

TensorElement coproduct(const SetPartition& partition) {
  requireStandard(partition, "coproduct");
  const std::size_t r = partition.length();
  if (r > 30) throw DomainError("coproduct: too many blocks");
  TensorElement out;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    IndexSet k;
    IndexSet l;
    for (std::size_t i = 0; i < r; ++i) {
      ((mask >> i) & 1u ? k : l).insert(static_cast<int>(i) + 1);
    }
    out.add(standardize(subPartition(partition, k)), standardize(subPartition(partition, l)), 1);
  }
  return out;
}

TensorElement coproduct(const Element& x) {
  TensorElement out;
  for (const auto& [a, c] : x.terms()) {
    for (const auto& [key, d] : coproduct(a).terms()) out.add(key.first, key.second, c * d);
  }
  return out;
}

Integer counit(const Element& x) { return x.coefficient(SetPartition{}); }

TensorElement reducedCoproduct(const Element& x) {
  if (counit(x) != 0) throw DomainError("reducedCoproduct: counit of the argument is nonzero");
  TensorElement out = coproduct(x);
  const SetPartition unit;
  for (const auto& [a, c] : x.terms()) {
    out.add(a, unit, -c);
    out.add(unit, a, -c);
  }
  return out;
}

// ---------------------------------------------------------------------------

Element antipodeDirect(const SetPartition& partition) {
  requireStandard(partition, "antipodeDirect");
  requireBlockCap(partition, "antipodeDirect");
  Element out;
  forEachComposition(iota(1, static_cast<int>(partition.length())),
                     [&](const std::vector<Block>& parts) {
                       out.add(evaluate(SetComposition::fromCanonical(parts), partition),
                               signOf(parts.size()));
                     });
  return out;
}

Element antipodeFactored(const SetPartition& partition) {
  requireStandard(partition, "antipodeFactored");
  requireBlockCap(partition, "antipodeFactored");
  if (partition.empty()) throw DomainError("antipodeFactored: empty partition");
  const auto atoms = atomicFactorization(partition).atoms;
  // Block-index ranges of the atoms, listed last atom first.
  std::vector<Block> reversed;
  int start = 1;
  for (const auto& atom : atoms) {
    const int len = static_cast<int>(atom.length());
    reversed.push_back(iota(start, start + len - 1));
    start += len;
  }
  std::reverse(reversed.begin(), reversed.end());
  Element out;
  forEachRefinement(SetComposition::fromCanonical(std::move(reversed)),
                    [&](const std::vector<Block>& parts) {
                      out.add(evaluate(SetComposition::fromCanonical(parts), partition),
                              signOf(parts.size()));
                    });
  return out;
}

Element AntipodeOracle::operator()(const SetPartition& partition) {
  requireStandard(partition, "antipodeOracle");
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(partition);
    if (it != memo_.end()) return it->second;
  }
  Element out;
  if (partition.empty()) {
    out = Element::unit();
  } else {
    out.add(partition, -1);
    for (const auto& [key, c] : coproduct(partition).terms()) {
      if (key.first.empty() || key.second.empty()) continue;
      out -= c * product((*this)(key.first), Element(key.second));
    }
  }
  std::lock_guard lock(mutex_);
  return memo_.emplace(partition, std::move(out)).first->second;
}

Element AntipodeOracle::operator()(const Element& x) {
  Element out;
  for (const auto& [a, c] : x.terms()) out += c * (*this)(a);
  return out;
}

std::size_t AntipodeOracle::cacheSize() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

Element antipodeOracle(const SetPartition& partition) {
  AntipodeOracle oracle;
  return oracle(partition);
}

Element antipode(const SetPartition& partition, AntipodeMethod method) {
  if (partition.empty()) return Element::unit();
  switch (method) {
    case AntipodeMethod::Direct:
      return antipodeDirect(partition);
    case AntipodeMethod::Factored:
      return antipodeFactored(partition);
    case AntipodeMethod::Oracle:
      return antipodeOracle(partition);
  }
  return {};
}

Element antipode(const Element& x, AntipodeMethod method) {
  AntipodeOracle oracle;
  Element out;
  for (const auto& [a, c] : x.terms()) {
    out += c * (method == AntipodeMethod::Oracle ? oracle(a) : antipode(a, method));
  }
  return out;
}

std::size_t antipodeDirectTermCount(const SetPartition& partition) {
  std::size_t count = 0;
  forEachComposition(iota(1, static_cast<int>(partition.length())),
                     [&](const std::vector<Block>&) { ++count; });
  return count;
}

// ---------------------------------------------------------------------------

Element primitive(const SetPartition& partition) {
  requireStandard(partition, "primitive");
  requireBlockCap(partition, "primitive");
  if (partition.empty()) throw DomainError("primitive: not defined on the empty partition");
  const int r = static_cast<int>(partition.length());
  Element out;
  // Compositions of [r] with 1 in the first part: 1 ∪ S first, then any
  // composition of the remaining indices.
  const Block rest = iota(2, r);
  const std::uint32_t all = (1u << rest.size()) - 1;
  for (std::uint32_t mask = 0;; mask = (mask - all) & all) {
    Block first{1};
    Block remaining;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      ((mask >> i) & 1u ? first : remaining).push_back(rest[i]);
    }
    forEachComposition(remaining, [&](const std::vector<Block>& tail) {
      std::vector<Block> parts;
      parts.reserve(tail.size() + 1);
      parts.push_back(first);
      parts.insert(parts.end(), tail.begin(), tail.end());
      out.add(evaluate(SetComposition::fromCanonical(std::move(parts)), partition),
              signOf(tail.size()));
    });
    if (mask == all) break;
  }
  return out;
}

AtomOrder atomOrderDefault() {
  return [](const SetPartition& a, const SetPartition& b) -> std::strong_ordering {
    if (a.weight() != b.weight()) return b.weight() <=> a.weight();
    return format(a, TextMode::Extended) <=> format(b, TextMode::Extended);
  };
}

namespace {
std::strong_ordering compareAtomWords(const AtomOrder& order,
                                      const std::vector<SetPartition>& x,
                                      const std::vector<SetPartition>& y) {
  const auto n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = order(x[i], y[i]); c != std::strong_ordering::equal) return c;
  }
  return x.size() <=> y.size();
}
}  // namespace

std::strong_ordering extendToPartitions(const AtomOrder& order, const SetPartition& a,
                                        const SetPartition& b) {
  return compareAtomWords(order, atomicFactorization(a).atoms, atomicFactorization(b).atoms);
}

std::vector<std::pair<SetPartition, Integer>> orderedTerms(const Element& x,
                                                           const AtomOrder& order) {
  struct Keyed {
    std::vector<SetPartition> atoms;
    std::pair<SetPartition, Integer> term;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(x.size());
  for (const auto& [p, c] : x.terms()) keyed.push_back({atomicFactorization(p).atoms, {p, c}});
  std::sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
    return compareAtomWords(order, a.atoms, b.atoms) == std::strong_ordering::less;
  });
  std::vector<std::pair<SetPartition, Integer>> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.term));
  return out;
}

SetPartition leadingTerm(const Element& x, const AtomOrder& order) {
  if (x.isZero()) throw DomainError("leadingTerm: zero element");
  return orderedTerms(x, order).front().first;
}

Element bracket(const Element& x, const Element& y) { return product(x, y) - product(y, x); }

Element primitiveMonomial(const SetPartition& partition) {
  Element out = Element::unit();
  for (const auto& atom : atomicFactorization(partition).atoms) {
    out = product(out, primitive(atom));
  }
  return out;
}

Element hallPrimitive(const std::vector<SetPartition>& atoms, const AtomOrder& order) {
  for (const auto& atom : atoms) {
    if (!atom.isStandard() || !isAtomic(atom)) {
      throw DomainError("hallPrimitive: " + formatAuto(atom) + " is not an atomic partition");
    }
  }
  const LetterLess<SetPartition> less = [&](const SetPartition& a, const SetPartition& b) {
    return order(a, b) == std::strong_ordering::less;
  };
  const GenericWord<SetPartition> word{atoms};
  if (atoms.empty() || !isLyndon(word, less)) {
    throw DomainError("hallPrimitive: atom word is not Lyndon");
  }
  std::map<SetPartition, Element> cache;
  return hallTree(word, less)
      .fold<Element>(
          [&](const SetPartition& atom) {
            auto it = cache.find(atom);
            if (it == cache.end()) it = cache.emplace(atom, primitive(atom)).first;
            return it->second;
          },
          [](const Element& x, const Element& y) { return bracket(x, y); });
}

std::vector<std::vector<SetPartition>> lyndonAtomWords(int n, const AtomOrder& order) {
  std::vector<std::vector<SetPartition>> atomsByWeight(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) atomsByWeight[k] = enumerateAtomic(k);
  const LetterLess<SetPartition> less = [&](const SetPartition& a, const SetPartition& b) {
    return order(a, b) == std::strong_ordering::less;
  };
  std::vector<std::vector<SetPartition>> out;
  std::vector<SetPartition> word;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      if (!word.empty() && isLyndon(GenericWord<SetPartition>{word}, less)) out.push_back(word);
      return;
    }
    for (int k = 1; k <= remaining; ++k) {
      for (const auto& atom : atomsByWeight[k]) {
        word.push_back(atom);
        rec(remaining - k);
        word.pop_back();
      }
    }
  };
  if (n >= 1) rec(n);
  return out;
}

namespace {

// Rows of coordinates of `elements` over the weight-n partition basis.
linalg::Matrix coordinates(const std::vector<Element>& elements, int n) {
  const auto basis = enumeratePartitions(n);
  std::map<SetPartition, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);
  linalg::Matrix rows;
  for (const auto& e : elements) {
    std::vector<Integer> row(basis.size());
    for (const auto& [p, c] : e.terms()) row.at(column.at(p)) = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::size_t primitiveSpaceDimension(int n) {
  if (n < 1) throw DomainError("primitiveSpaceDimension: weight must be positive");
  const auto basis = enumeratePartitions(n);
  // Rows are images of basis vectors; the kernel dimension is Bell(n) − rank.
  std::vector<TensorElement> images;
  std::map<TensorElement::Key, std::size_t> column;
  for (const auto& a : basis) {
    images.push_back(reducedCoproduct(Element(a)));
    for (const auto& [key, c] : images.back().terms()) column.emplace(key, column.size());
  }
  linalg::Matrix rows;
  for (const auto& image : images) {
    std::vector<Integer> row(column.size());
    for (const auto& [key, c] : image.terms()) row[column.at(key)] = c;
    rows.push_back(std::move(row));
  }
  return basis.size() - linalg::rank(std::move(rows));
}

bool hallSpanCheck(int n) {
  std::vector<Element> hall;
  for (const auto& word : lyndonAtomWords(n)) {
    hall.push_back(hallPrimitive(word));
    if (!reducedCoproduct(hall.back()).isZero()) return false;
  }
  if (hall.size() != primitiveSpaceDimension(n)) return false;
  return linalg::rank(coordinates(hall, n)) == hall.size();
}

}  // namespace ncsym
