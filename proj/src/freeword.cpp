#include "ncsym/freeword.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncsym {

namespace {

Block unite(const Block& a, const Block& b) {
  Block out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Word prepend(const Block& letter, const Word& w) {
  std::vector<Block> letters;
  letters.reserve(w.length() + 1);
  letters.push_back(letter);
  letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  return Word(std::move(letters));
}

// Outputs are distinct for disjoint operands; a repeat means a bug upstream.
void insertUnique(WordSet& out, Word w) {
  if (!out.insert(std::move(w)).second) {
    throw std::logic_error("quasi-shuffle produced a repeated word");
  }
}

void requireDisjoint(const Word& u, const Word& v, const char* op) {
  if (!disjoint(u, v)) throw DomainError(std::string(op) + ": operands are not disjoint");
}

}  // namespace

Word::Word(std::vector<Block> letters) : letters_(std::move(letters)) {
  for (auto& letter : letters_) {
    if (letter.empty()) throw DomainError("word: empty letter");
    std::sort(letter.begin(), letter.end());
    letter.erase(std::unique(letter.begin(), letter.end()), letter.end());
    if (letter.front() <= 0) throw DomainError("word: elements must be positive");
  }
}

Word Word::prefix(std::size_t i) const {
  i = std::min(i, letters_.size());
  return Word(std::vector<Block>(letters_.begin(), letters_.begin() + static_cast<long>(i)));
}

Word Word::suffix(std::size_t i) const {
  i = std::min(i, letters_.size());
  return Word(std::vector<Block>(letters_.begin() + static_cast<long>(i), letters_.end()));
}

IndexSet Word::support() const {
  IndexSet out;
  for (const auto& letter : letters_) out.insert(letter.begin(), letter.end());
  return out;
}

bool Word::isComposition() const {
  std::size_t total = 0;
  for (const auto& letter : letters_) total += letter.size();
  return support().size() == total;
}

SetComposition Word::toComposition() const {
  if (!isComposition()) throw DomainError("word letters overlap; not a set composition");
  return SetComposition::fromCanonical(letters_);
}

Word parseWord(std::string_view text) {
  return Word(parseBlocks(text, '|', /*allowOverlap=*/true));
}

std::string format(const Word& word) {
  bool compact = true;
  for (const auto& letter : word.letters()) {
    if (letter.back() > 9) compact = false;
  }
  return formatBlocks(word.letters(), '|', compact ? TextMode::Compact : TextMode::Extended);
}

bool disjoint(const Word& u, const Word& v) {
  const auto a = u.support();
  for (int x : v.support()) {
    if (a.contains(x)) return false;
  }
  return true;
}

WordSet quasiShuffle(const Word& u, const Word& v) {
  requireDisjoint(u, v, "quasiShuffle");
  if (u.empty()) return {v};
  if (v.empty()) return {u};
  const Block& a = u.letters().front();
  const Block& b = v.letters().front();
  const Word uRest = u.suffix(1);
  const Word vRest = v.suffix(1);
  WordSet out;
  for (const auto& w : quasiShuffle(uRest, v)) insertUnique(out, prepend(a, w));
  const Block ab = unite(a, b);
  for (const auto& w : quasiShuffle(uRest, vRest)) insertUnique(out, prepend(ab, w));
  for (const auto& w : quasiShuffle(u, vRest)) insertUnique(out, prepend(b, w));
  return out;
}

WordSet leftQuasiShuffle(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw DomainError("leftQuasiShuffle: operands must be nonempty");
  requireDisjoint(u, v, "leftQuasiShuffle");
  const Block& a = u.letters().front();
  const Block& b = v.letters().front();
  const Word uRest = u.suffix(1);
  WordSet out;
  for (const auto& w : quasiShuffle(uRest, v)) insertUnique(out, prepend(a, w));
  const Block ab = unite(a, b);
  for (const auto& w : quasiShuffle(uRest, v.suffix(1))) insertUnique(out, prepend(ab, w));
  return out;
}

Word restrict(const Word& word, const IndexSet& elements) {
  return Word(restrict(word.toComposition(), elements));
}

TensorWordSum lemmaSum(int r, const IndexSet& k, const IndexSet& l) {
  if (r < 1) throw DomainError("lemmaSum: r must be positive");
  IndexSet all;
  for (int x : k) all.insert(x);
  for (int x : l) {
    if (!all.insert(x).second) throw DomainError("lemmaSum: K and L overlap");
  }
  if (all.size() != static_cast<std::size_t>(r) || *all.begin() != 1 || *all.rbegin() != r) {
    throw DomainError("lemmaSum: K and L must partition [r]");
  }
  if (!k.contains(1)) throw DomainError("lemmaSum: 1 must belong to K");
  if (l.empty()) throw DomainError("lemmaSum: K must be a proper subset of [r]");

  TensorWordSum sum;
  for (const auto& gamma : enumerateFirstBlockAnchored(r)) {
    const Integer sign = gamma.length() % 2 == 0 ? 1 : -1;
    auto key = std::make_pair(Word(restrict(gamma, k)), Word(restrict(gamma, l)));
    auto it = sum.find(key);
    if (it == sum.end()) {
      sum.emplace(std::move(key), sign);
    } else {
      it->second += sign;
      if (it->second == 0) sum.erase(it);
    }
  }
  return sum;
}

Word pairingPhi(const Word& w, const Word& u, const Word& v) {
  const auto shuffles = leftQuasiShuffle(u, v);
  if (!shuffles.contains(w)) {
    throw DomainError("pairingPhi: " + format(w) + " is not a left quasi-shuffle of " +
                      format(u) + " and " + format(v));
  }
  const Block& first = v.letters().front();
  const int probe = first.front();
  std::size_t at = 0;
  while (!std::binary_search(w.letters()[at].begin(), w.letters()[at].end(), probe)) ++at;

  std::vector<Block> letters = w.letters();
  if (letters[at] == first) {
    // u_i | v_1  ->  u_i v_1; at >= 1 since w starts with a letter containing u_1.
    letters[at - 1] = unite(letters[at - 1], first);
    letters.erase(letters.begin() + static_cast<long>(at));
  } else {
    // u_{i+1} v_1  ->  u_{i+1} | v_1
    Block rest;
    std::set_difference(letters[at].begin(), letters[at].end(), first.begin(), first.end(),
                        std::back_inserter(rest));
    letters[at] = std::move(rest);
    letters.insert(letters.begin() + static_cast<long>(at) + 1, first);
  }
  return Word(std::move(letters));
}

}  // namespace ncsym
