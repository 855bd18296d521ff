#include "ncsym/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>

namespace ncsym {

namespace {

constexpr std::string_view kEmptySymbol = "\xE2\x88\x85";  // ∅

std::size_t totalSize(const std::vector<Block>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

IndexSet collect(const std::vector<Block>& blocks) {
  IndexSet out;
  for (const auto& b : blocks) out.insert(b.begin(), b.end());
  return out;
}

// Sorts each block and checks positivity, non-emptiness and disjointness.
void normalizeBlocks(std::vector<Block>& blocks, const char* what) {
  std::size_t total = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw DomainError(std::string(what) + ": empty block");
    std::sort(b.begin(), b.end());
    if (b.front() <= 0) throw DomainError(std::string(what) + ": elements must be positive");
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      throw DomainError(std::string(what) + ": repeated element " +
                        std::to_string(*std::adjacent_find(b.begin(), b.end())));
    }
    total += b.size();
  }
  if (collect(blocks).size() != total) {
    throw DomainError(std::string(what) + ": blocks are not disjoint");
  }
}

void requireStandard(const SetPartition& a, const char* op) {
  if (!a.isStandard()) {
    throw DomainError(std::string(op) + ": partition " + formatAuto(a) + " is not standard");
  }
}

int parseInteger(std::string_view token) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last || value <= 0) {
    throw ParseError("malformed integer", std::string(token));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Elements of a bitmask over `ground`.
Block maskToBlock(const Block& ground, std::uint32_t mask) {
  Block out;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (mask & (1u << i)) out.push_back(ground[i]);
  }
  return out;
}

void compositionsRec(const Block& ground, std::uint32_t remaining, std::vector<Block>& prefix,
                     const std::function<void(const std::vector<Block>&)>& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  // Enumerate nonempty submasks of `remaining`.
  for (std::uint32_t sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
    prefix.push_back(maskToBlock(ground, sub));
    compositionsRec(ground, remaining & ~sub, prefix, visit);
    prefix.pop_back();
  }
}

template <class T>
void sortByExtended(std::vector<T>& items) {
  std::vector<std::pair<std::string, T>> keyed;
  keyed.reserve(items.size());
  for (auto& item : items) keyed.emplace_back(format(item, TextMode::Extended), std::move(item));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  items.clear();
  for (auto& [key, item] : keyed) items.push_back(std::move(item));
}

Block iota(int from, int to) {
  Block out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

SetPartition::SetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  normalizeBlocks(blocks_, "set partition");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::fromCanonical(std::vector<Block> blocks) {
  SetPartition out;
  out.blocks_ = std::move(blocks);
  return out;
}

std::size_t SetPartition::weight() const noexcept { return totalSize(blocks_); }

bool SetPartition::isStandard() const noexcept {
  const std::size_t n = weight();
  for (const auto& b : blocks_) {
    if (static_cast<std::size_t>(b.back()) > n) return false;
  }
  return true;
}

IndexSet SetPartition::groundSet() const { return collect(blocks_); }

SetComposition::SetComposition(std::vector<Block> parts) : parts_(std::move(parts)) {
  normalizeBlocks(parts_, "set composition");
}

SetComposition SetComposition::fromCanonical(std::vector<Block> parts) {
  SetComposition out;
  out.parts_ = std::move(parts);
  return out;
}

std::size_t SetComposition::weight() const noexcept { return totalSize(parts_); }

IndexSet SetComposition::groundSet() const { return collect(parts_); }

// ---------------------------------------------------------------------------

std::vector<Block> parseBlocks(std::string_view text, char separator, bool allowOverlap) {
  text = trim(text);
  if (text.empty() || text == kEmptySymbol) return {};

  const bool extended = text.find(',') != std::string_view::npos;
  std::vector<Block> blocks;
  for (auto piece : split(text, separator)) {
    piece = trim(piece);
    if (piece.empty()) throw ParseError("empty block", std::string(text));
    Block block;
    if (extended) {
      auto items = split(piece, ',');
      // A single trailing comma marks a one-element extended block ("12,").
      if (items.size() > 1 && items.back().empty()) items.pop_back();
      for (auto item : items) block.push_back(parseInteger(trim(item)));
    } else {
      for (char c : piece) {
        if (c < '1' || c > '9') {
          throw ParseError(c == '0' ? "digit 0 is not a valid compact element; use extended form"
                                    : "unexpected character in compact form",
                           std::string(piece));
        }
        block.push_back(c - '0');
      }
    }
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw ParseError("duplicate element", std::to_string(*dup));
    blocks.push_back(std::move(block));
  }
  if (allowOverlap) return blocks;
  IndexSet seen;
  for (const auto& b : blocks) {
    for (int x : b) {
      if (!seen.insert(x).second) throw ParseError("duplicate element", std::to_string(x));
    }
  }
  return blocks;
}

SetPartition parsePartition(std::string_view text) {
  if (text.find('|') != std::string_view::npos) {
    throw ParseError("'|' is not a set partition separator", std::string(text));
  }
  return SetPartition(parseBlocks(text, '.'));
}

SetComposition parseComposition(std::string_view text) {
  if (text.find('.') != std::string_view::npos) {
    throw ParseError("'.' is not a set composition separator", std::string(text));
  }
  return SetComposition(parseBlocks(text, '|'));
}

std::string formatBlocks(const std::vector<Block>& blocks, char separator, TextMode mode) {
  std::string out;
  bool anyComma = false;
  bool anyLarge = false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += separator;
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      const int x = blocks[i][j];
      if (x > 9) anyLarge = true;
      if (mode == TextMode::Compact) {
        if (x > 9) {
          throw DomainError("compact form cannot represent element " + std::to_string(x));
        }
        out += static_cast<char>('0' + x);
      } else {
        if (j) {
          out += ',';
          anyComma = true;
        }
        out += std::to_string(x);
      }
    }
  }
  if (mode == TextMode::Extended && anyLarge && !anyComma) {
    // Without a comma the text would be read back as compact.
    auto cut = out.find(separator);
    out.insert(cut == std::string::npos ? out.size() : cut, ",");
  }
  return out;
}

std::string format(const SetPartition& partition, TextMode mode) {
  return formatBlocks(partition.blocks(), '.', mode);
}

std::string format(const SetComposition& composition, TextMode mode) {
  return formatBlocks(composition.parts(), '|', mode);
}

namespace {
bool fitsCompact(const std::vector<Block>& blocks) {
  for (const auto& b : blocks) {
    if (!b.empty() && b.back() > 9) return false;
  }
  return true;
}
}  // namespace

std::string formatAuto(const SetPartition& partition) {
  return format(partition,
                fitsCompact(partition.blocks()) ? TextMode::Compact : TextMode::Extended);
}

std::string formatAuto(const SetComposition& composition) {
  return format(composition,
                fitsCompact(composition.parts()) ? TextMode::Compact : TextMode::Extended);
}

// ---------------------------------------------------------------------------

SetPartition shift(const SetPartition& partition, int k) {
  if (k < 0) throw DomainError("shift: negative offset");
  auto blocks = partition.blocks();
  for (auto& b : blocks) {
    for (int& x : b) x += k;
  }
  return SetPartition::fromCanonical(std::move(blocks));
}

SetPartition standardize(const SetPartition& partition) {
  Block ground;
  for (const auto& b : partition.blocks()) ground.insert(ground.end(), b.begin(), b.end());
  std::sort(ground.begin(), ground.end());
  auto blocks = partition.blocks();
  for (auto& b : blocks) {
    for (int& x : b) {
      x = static_cast<int>(std::lower_bound(ground.begin(), ground.end(), x) - ground.begin()) + 1;
    }
  }
  return SetPartition::fromCanonical(std::move(blocks));
}

SetPartition concat(const SetPartition& left, const SetPartition& right) {
  requireStandard(left, "concat");
  requireStandard(right, "concat");
  const int m = static_cast<int>(left.weight());
  auto blocks = left.blocks();
  for (auto b : right.blocks()) {
    for (int& x : b) x += m;
    blocks.push_back(std::move(b));
  }
  return SetPartition::fromCanonical(std::move(blocks));
}

SetPartition concatAll(const std::vector<SetPartition>& pieces) {
  SetPartition out;
  for (const auto& piece : pieces) out = concat(out, piece);
  return out;
}

SetPartition subPartition(const SetPartition& partition, const IndexSet& indices) {
  std::vector<Block> blocks;
  for (int k : indices) {
    if (k < 1 || static_cast<std::size_t>(k) > partition.length()) {
      throw DomainError("subPartition: block index " + std::to_string(k) + " out of range");
    }
    blocks.push_back(partition.blocks()[k - 1]);
  }
  return SetPartition::fromCanonical(std::move(blocks));
}

AtomicFactorization atomicFactorization(const SetPartition& partition) {
  requireStandard(partition, "atomicFactorization");
  AtomicFactorization out;
  std::vector<Block> current;
  std::size_t count = 0;
  int maxElement = 0;
  int offset = 0;
  for (const auto& b : partition.blocks()) {
    current.push_back(b);
    count += b.size();
    maxElement = std::max(maxElement, b.back());
    // Distinct elements all <= maxElement, so equality means [offset+1, max] is covered.
    if (static_cast<std::size_t>(maxElement - offset) == count) {
      for (auto& cb : current) {
        for (int& x : cb) x -= offset;
      }
      out.atoms.push_back(SetPartition::fromCanonical(std::move(current)));
      current.clear();
      offset = maxElement;
      count = 0;
    }
  }
  return out;
}

bool isAtomic(const SetPartition& partition) {
  return atomicFactorization(partition).size() == 1;
}

// ---------------------------------------------------------------------------

SetComposition restrict(const SetComposition& composition, const IndexSet& elements) {
  const auto ground = composition.groundSet();
  for (int x : elements) {
    if (!ground.contains(x)) {
      throw DomainError("restrict: element " + std::to_string(x) + " is not in the ground set");
    }
  }
  std::vector<Block> parts;
  for (const auto& p : composition.parts()) {
    Block kept;
    for (int x : p) {
      if (elements.contains(x)) kept.push_back(x);
    }
    if (!kept.empty()) parts.push_back(std::move(kept));
  }
  return SetComposition::fromCanonical(std::move(parts));
}

SetComposition subsequence(const SetComposition& composition, const IndexSet& positions) {
  std::vector<Block> parts;
  for (int k : positions) {
    if (k < 1 || static_cast<std::size_t>(k) > composition.length()) {
      throw DomainError("subsequence: position " + std::to_string(k) + " out of range");
    }
    parts.push_back(composition.parts()[k - 1]);
  }
  return SetComposition::fromCanonical(std::move(parts));
}

bool refines(const SetComposition& finer, const SetComposition& coarser) {
  if (finer.groundSet() != coarser.groundSet()) {
    throw DomainError("refines: compositions have different ground sets");
  }
  std::size_t next = 0;
  for (const auto& target : coarser.parts()) {
    const IndexSet want(target.begin(), target.end());
    std::size_t covered = 0;
    while (covered < want.size()) {
      if (next >= finer.length()) return false;
      for (int x : finer.parts()[next]) {
        if (!want.contains(x)) return false;
      }
      covered += finer.parts()[next].size();
      ++next;
    }
  }
  return next == finer.length();
}

SetPartition evaluate(const SetComposition& gamma, const SetPartition& partition) {
  std::vector<Block> out;
  int offset = 0;
  std::vector<int> ground;
  for (const auto& part : gamma.parts()) {
    ground.clear();
    const std::size_t first = out.size();
    for (int k : part) {
      if (k < 1 || static_cast<std::size_t>(k) > partition.length()) {
        throw DomainError("evaluate: part index " + std::to_string(k) + " out of range");
      }
      const auto& b = partition.blocks()[k - 1];
      ground.insert(ground.end(), b.begin(), b.end());
      out.push_back(b);
    }
    std::sort(ground.begin(), ground.end());
    for (std::size_t i = first; i < out.size(); ++i) {
      for (int& x : out[i]) {
        x = offset + 1 +
            static_cast<int>(std::lower_bound(ground.begin(), ground.end(), x) - ground.begin());
      }
    }
    offset += static_cast<int>(ground.size());
  }
  return SetPartition::fromCanonical(std::move(out));
}

// ---------------------------------------------------------------------------

void forEachComposition(const Block& ground,
                        const std::function<void(const std::vector<Block>&)>& visit) {
  if (ground.size() > 31) throw DomainError("forEachComposition: ground set too large");
  std::vector<Block> prefix;
  const std::uint32_t all =
      ground.empty() ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << ground.size()) - 1);
  compositionsRec(ground, all, prefix, visit);
}

void forEachRefinement(const SetComposition& rho,
                       const std::function<void(const std::vector<Block>&)>& visit) {
  std::vector<Block> prefix;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == rho.length()) {
      visit(prefix);
      return;
    }
    forEachComposition(rho.parts()[i], [&](const std::vector<Block>& piece) {
      const auto mark = prefix.size();
      prefix.insert(prefix.end(), piece.begin(), piece.end());
      rec(i + 1);
      prefix.resize(mark);
    });
  };
  rec(0);
}

std::vector<SetPartition> enumeratePartitions(int n) {
  if (n < 0) throw DomainError("enumeratePartitions: negative size");
  std::vector<SetPartition> out;
  // Restricted growth strings: element i+1 joins block rgs[i] <= max-so-far + 1.
  std::vector<Block> blocks;
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.push_back(SetPartition::fromCanonical(blocks));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(next);
      rec(next + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({next});
    rec(next + 1);
    blocks.pop_back();
  };
  rec(1);
  sortByExtended(out);
  return out;
}

std::vector<SetPartition> enumerateAtomic(int n) {
  if (n < 0) throw DomainError("enumerateAtomic: negative size");
  std::vector<SetPartition> out;
  if (n == 0) return out;
  // Atomic iff every cut point m in [1, n) lies inside the span [min, max) of
  // some block.
  std::vector<Block> blocks;
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      for (int m = 1; m < n; ++m) {
        bool covered = false;
        for (const auto& b : blocks) {
          if (b.front() <= m && m < b.back()) {
            covered = true;
            break;
          }
        }
        if (!covered) return;
      }
      out.push_back(SetPartition::fromCanonical(blocks));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(next);
      rec(next + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({next});
    rec(next + 1);
    blocks.pop_back();
  };
  rec(1);
  sortByExtended(out);
  return out;
}

std::vector<SetComposition> enumerateCompositions(int r) {
  if (r < 0) throw DomainError("enumerateCompositions: negative size");
  std::vector<SetComposition> out;
  forEachComposition(iota(1, r), [&](const std::vector<Block>& parts) {
    out.push_back(SetComposition::fromCanonical(parts));
  });
  sortByExtended(out);
  return out;
}

std::vector<SetComposition> enumerateFirstBlockAnchored(int r) {
  auto all = enumerateCompositions(r);
  std::vector<SetComposition> out;
  for (auto& c : all) {
    if (!c.empty() && c.parts().front().front() == 1) out.push_back(std::move(c));
  }
  return out;
}

std::vector<SetComposition> enumerateRefinements(const SetComposition& rho) {
  std::vector<SetComposition> out;
  forEachRefinement(rho, [&](const std::vector<Block>& parts) {
    out.push_back(SetComposition::fromCanonical(parts));
  });
  sortByExtended(out);
  return out;
}

}  // namespace ncsym
