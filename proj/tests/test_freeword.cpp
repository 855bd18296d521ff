#include <gtest/gtest.h>

#include <functional>
#include <string>

#include "ncsym/freeword.hpp"

using namespace ncsym;

namespace {

Word W(const char* text) { return parseWord(text); }

WordSet words(std::initializer_list<const char*> texts) {
  WordSet out;
  for (const auto* t : texts) out.insert(W(t));
  return out;
}

// u: k singleton letters of odd numbers; v: l letters of even numbers, the
// first of which holds two elements when `wide` is set.
std::pair<Word, Word> operands(int k, int l, bool wide = false) {
  std::vector<Block> u;
  std::vector<Block> v;
  for (int i = 0; i < k; ++i) u.push_back({2 * i + 1});
  for (int j = 0; j < l; ++j) v.push_back({2 * j + 2});
  if (wide && l > 0) v.front().push_back(100);
  return {Word(u), Word(v)};
}

// Independent oracle: every set composition of the joint support whose
// restrictions recover u and v.
WordSet quasiShuffleByFilter(const Word& u, const Word& v, bool leftOnly) {
  const auto su = u.support();
  const auto sv = v.support();
  Block ground(su.begin(), su.end());
  ground.insert(ground.end(), sv.begin(), sv.end());
  std::sort(ground.begin(), ground.end());
  WordSet out;
  std::vector<Block> prefix;
  std::vector<bool> used(ground.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t placed) {
    if (placed == ground.size()) {
      const Word w(prefix);
      const auto ru = restrict(w, su);
      const auto rv = restrict(w, sv);
      if (ru != u || rv != v) return;
      if (leftOnly) {
        const auto& first = w.letters().front();
        if (!std::includes(first.begin(), first.end(), u.letters().front().begin(),
                           u.letters().front().end())) {
          return;
        }
      }
      out.insert(w);
      return;
    }
    // Choose a nonempty subset of unused elements as the next letter.
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (!used[i]) free.push_back(i);
    }
    for (std::uint32_t mask = 1; mask < (1u << free.size()); ++mask) {
      Block letter;
      for (std::size_t i = 0; i < free.size(); ++i) {
        if (mask >> i & 1u) {
          letter.push_back(ground[free[i]]);
          used[free[i]] = true;
        }
      }
      prefix.push_back(letter);
      rec(placed + letter.size());
      prefix.pop_back();
      for (std::size_t i = 0; i < free.size(); ++i) {
        if (mask >> i & 1u) used[free[i]] = false;
      }
    }
  };
  rec(0);
  return out;
}

long delannoy(int k, int l) {
  if (k == 0 || l == 0) return 1;
  return delannoy(k - 1, l) + delannoy(k - 1, l - 1) + delannoy(k, l - 1);
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  return n > 1 ? -result : result;
}

// Necklace formula: (1/n) sum_{d | n} mu(d) 2^(n/d).
long binaryLyndonCount(int n) {
  long sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) sum += mobius(d) * (1L << (n / d));
  }
  return sum / n;
}

const LetterLess<char> charLess = [](char a, char b) { return a < b; };

GenericWord<char> G(const std::string& s) { return {{s.begin(), s.end()}}; }

std::string S(const GenericWord<char>& w) { return {w.letters.begin(), w.letters.end()}; }

}  // namespace

TEST(Word, PrefixSuffixAndParse) {
  const auto u = W("1|3|24");
  EXPECT_EQ(u.prefix(1), W("1"));
  EXPECT_EQ(u.suffix(1), W("3|24"));
  EXPECT_EQ(u.prefix(0), Word{});
  EXPECT_EQ(format(u), "1|3|24");
  EXPECT_EQ(format(W("12|23")), "12|23");  // overlapping letters are allowed in words
  EXPECT_FALSE(W("12|23").isComposition());
  EXPECT_THROW(restrict(W("12|23"), {1}), DomainError);
}

TEST(Disjoint, Examples) {
  EXPECT_TRUE(disjoint(W("1|3"), W("24")));
  EXPECT_FALSE(disjoint(W("12"), W("23")));
  EXPECT_TRUE(disjoint(W("1|3"), Word{}));
}

TEST(QuasiShuffle, Examples) {
  EXPECT_EQ(quasiShuffle(W("1"), W("2")), words({"1|2", "12", "2|1"}));
  EXPECT_EQ(quasiShuffle(W("1|3"), W("24")),
            words({"1|3|24", "1|234", "1|24|3", "124|3", "24|1|3"}));
  EXPECT_EQ(quasiShuffle(W("5|6"), W("1")).size(), 5u);
  EXPECT_EQ(quasiShuffle(W("1|3"), Word{}), words({"1|3"}));
  EXPECT_EQ(quasiShuffle(Word{}, W("2")), words({"2"}));
  EXPECT_THROW(quasiShuffle(W("12"), W("23")), DomainError);
}

TEST(QuasiShuffle, LeftExamples) {
  const auto left = leftQuasiShuffle(W("1|3"), W("24"));
  EXPECT_EQ(left, words({"1|3|24", "1|234", "1|24|3", "124|3"}));
  for (const auto& w : left) {
    EXPECT_EQ(restrict(w, {1, 3}), W("1|3"));
    EXPECT_EQ(restrict(w, {2, 4}), W("24"));
  }
  EXPECT_EQ(leftQuasiShuffle(W("7|8"), W("1")).size(), 4u);
  EXPECT_THROW(leftQuasiShuffle(Word{}, W("1")), DomainError);
  EXPECT_THROW(leftQuasiShuffle(W("1"), Word{}), DomainError);
  EXPECT_THROW(leftQuasiShuffle(W("1"), W("1")), DomainError);
}

TEST(QuasiShuffle, DelannoyCardinality) {
  for (int k = 0; k <= 4; ++k) {
    for (int l = 0; l <= 4; ++l) {
      auto [u, v] = operands(k, l);
      EXPECT_EQ(static_cast<long>(quasiShuffle(u, v).size()), delannoy(k, l)) << k << "," << l;
      if (k > 0 && l > 0) {
        EXPECT_EQ(static_cast<long>(leftQuasiShuffle(u, v).size()),
                  delannoy(k - 1, l) + delannoy(k - 1, l - 1));
      }
    }
  }
}

TEST(QuasiShuffle, MatchesProjectionOracle) {
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 3; ++l) {
      for (bool wide : {false, true}) {
        auto [u, v] = operands(k, l, wide);
        const auto full = quasiShuffle(u, v);
        EXPECT_EQ(full, quasiShuffleByFilter(u, v, false)) << k << "," << l;
        for (const auto& w : full) {
          EXPECT_EQ(restrict(w, u.support()), u);
          EXPECT_EQ(restrict(w, v.support()), v);
        }
        if (k > 0 && l > 0) {
          EXPECT_EQ(leftQuasiShuffle(u, v), quasiShuffleByFilter(u, v, true));
        }
      }
    }
  }
}

TEST(QuasiShuffle, LeftIsSubsetStartingWithFirstLetter) {
  for (int k = 1; k <= 4; ++k) {
    for (int l = 1; l <= 4; ++l) {
      auto [u, v] = operands(k, l, true);
      const auto full = quasiShuffle(u, v);
      for (const auto& w : leftQuasiShuffle(u, v)) {
        EXPECT_TRUE(full.contains(w));
        const auto& a = u.letters().front();
        EXPECT_TRUE(std::includes(w.letters().front().begin(), w.letters().front().end(),
                                  a.begin(), a.end()));
      }
    }
  }
}

TEST(PairingPhi, Examples) {
  EXPECT_EQ(pairingPhi(W("1|3|24"), W("1|3"), W("24")), W("1|234"));
  EXPECT_EQ(pairingPhi(W("1|234"), W("1|3"), W("24")), W("1|3|24"));
  EXPECT_EQ(pairingPhi(W("124|3"), W("1|3"), W("24")), W("1|24|3"));
  EXPECT_THROW(pairingPhi(W("24|1|3"), W("1|3"), W("24")), DomainError);
}

TEST(PairingPhi, SignReversingInvolution) {
  for (int k = 1; k <= 4; ++k) {
    for (int l = 1; l <= 4; ++l) {
      for (bool wide : {false, true}) {
        auto [u, v] = operands(k, l, wide);
        const auto left = leftQuasiShuffle(u, v);
        long signedCount = 0;
        for (const auto& w : left) {
          const auto image = pairingPhi(w, u, v);
          EXPECT_TRUE(left.contains(image));
          EXPECT_NE(image, w);
          EXPECT_EQ(pairingPhi(image, u, v), w);
          EXPECT_EQ(std::abs(static_cast<long>(w.length()) - static_cast<long>(image.length())), 1);
          signedCount += w.length() % 2 == 0 ? 1 : -1;
        }
        EXPECT_EQ(signedCount, 0);
      }
    }
  }
}

TEST(LemmaSum, SmallCases) {
  EXPECT_TRUE(lemmaSum(2, {1}, {2}).empty());
  EXPECT_TRUE(lemmaSum(3, {1, 3}, {2}).empty());
}

TEST(LemmaSum, VanishesForEveryAdmissibleSplit) {
  for (int r = 2; r <= 5; ++r) {
    for (std::uint32_t mask = 0; mask + 1 < (1u << (r - 1)); ++mask) {
      IndexSet k{1};
      IndexSet l;
      for (int i = 2; i <= r; ++i) (mask >> (i - 2) & 1u ? k : l).insert(i);
      EXPECT_TRUE(lemmaSum(r, k, l).empty()) << "r=" << r << " mask=" << mask;
    }
  }
}

TEST(LemmaSum, RejectsInadmissibleSplits) {
  EXPECT_THROW(lemmaSum(2, {2}, {1}), DomainError);
  EXPECT_THROW(lemmaSum(2, {1, 2}, {}), DomainError);
  EXPECT_THROW(lemmaSum(3, {1}, {2}), DomainError);
  EXPECT_THROW(lemmaSum(3, {1, 2}, {2, 3}), DomainError);
}

TEST(Lyndon, Predicate) {
  EXPECT_TRUE(isLyndon(G("aabb"), charLess));
  EXPECT_FALSE(isLyndon(G("aa"), charLess));
  EXPECT_TRUE(isLyndon(G("a"), charLess));
  EXPECT_FALSE(isLyndon(G("ba"), charLess));
  EXPECT_FALSE(isLyndon(G("abab"), charLess));
  EXPECT_THROW(isLyndon(G(""), charLess), DomainError);
}

TEST(Lyndon, Factorization) {
  auto [u1, v1] = lyndonFactorize(G("aabb"), charLess);
  EXPECT_EQ(S(u1), "a");
  EXPECT_EQ(S(v1), "abb");
  auto [u2, v2] = lyndonFactorize(G("abb"), charLess);
  EXPECT_EQ(S(u2), "ab");
  EXPECT_EQ(S(v2), "b");
  auto [u3, v3] = lyndonFactorize(G("ab"), charLess);
  EXPECT_EQ(S(u3), "a");
  EXPECT_EQ(S(v3), "b");
  EXPECT_THROW(lyndonFactorize(G("a"), charLess), DomainError);
  EXPECT_THROW(lyndonFactorize(G("ba"), charLess), DomainError);
}

TEST(Lyndon, HallTree) {
  const auto name = [](char c) { return std::string(1, c); };
  EXPECT_EQ(hallTree(G("aabb"), charLess).render(name), "[a,[[a,b],b]]");
  EXPECT_EQ(hallTree(G("a"), charLess).render(name), "a");
  EXPECT_EQ(hallTree(G("ab"), charLess).render(name), "[a,b]");
  EXPECT_THROW(hallTree(G("ba"), charLess), DomainError);
}

TEST(Lyndon, CountsMatchNecklaceFormulaAndLeavesReadWord) {
  const auto name = [](char c) { return std::string(1, c); };
  for (int n = 1; n <= 6; ++n) {
    long count = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::string s;
      for (int i = n - 1; i >= 0; --i) s += (mask >> i & 1) ? 'b' : 'a';
      const auto w = G(s);
      if (!isLyndon(w, charLess)) continue;
      ++count;
      std::vector<char> leaves;
      const auto tree = hallTree(w, charLess);
      tree.leaves(leaves);
      EXPECT_EQ(leaves, w.letters) << tree.render(name);
      if (n > 1) {
        auto [u, v] = lyndonFactorize(w, charLess);
        EXPECT_TRUE(isLyndon(u, charLess));
        EXPECT_TRUE(isLyndon(v, charLess));
      }
    }
    EXPECT_EQ(count, binaryLyndonCount(n)) << n;
  }
}
