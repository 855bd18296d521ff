// Acceptance criteria, one PASS/FAIL line each. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ncsym/cli.hpp"
#include "ncsym/hopf.hpp"
#include "ncsym/io.hpp"
#include "ncsym/verify.hpp"

using namespace ncsym;

namespace {

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }

  template <class A, class B>
  void expectEq(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) problems_.push_back(what);
  }

  bool ok() const { return problems_.empty(); }
  const std::string& title() const { return title_; }
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::string title_;
  std::vector<std::string> problems_;
};

SetPartition P(const char* text) { return parsePartition(text); }
SetComposition C(const char* text) { return parseComposition(text); }
Element E(const char* text) { return io::parseElement(text); }

void verifyChecks(Criterion& c, int maxWeight, const std::vector<std::string>& names) {
  verify::Options options;
  options.maxWeight = maxWeight;
  options.checks = names;
  for (const auto& r : verify::run(options)) {
    c.expect(r.cases > 0, r.name + " ran no cases");
    for (const auto& f : r.failures) c.expect(false, r.name + ": " + f);
  }
}

void workedExamples(Criterion& c) {
  c.expectEq(format(standardize(P("18.4"))), "13.2", "std(18.4)");
  c.expectEq(format(standardize(P("18.4.67"))), "15.2.34", "std(18.4.67)");
  c.expectEq(format(subPartition(P("17.235.4.68"), {1, 3, 4})), "17.4.68", "A_{1,3,4}");
  c.expectEq(format(restrict(C("38|12|4"), {3, 4, 8})), "38|4", "restriction to {3,4,8}");
  c.expectEq(format(restrict(C("38|12|4"), {1, 3})), "3|1", "restriction to {1,3}");
  c.expectEq(format(subsequence(C("38|12|4"), {1, 3})), "38|4", "subsequence {1,3}");
  c.expect(refines(C("2|4|3|17|9"), C("234|179")), "2|4|3|17|9 refines 234|179");
  c.expect(refines(C("234|179"), C("123479")), "234|179 refines 123479");
  c.expect(!refines(C("234|179"), C("2|4|3|17|9")), "refinement is antisymmetric");

  const std::vector<const char*> columns{"13.29.458.7", "13.28.456.7", "15.28.346.7"};
  const std::vector<std::pair<const char*, std::vector<const char*>>> rows = {
      {"13|2", {"12.345.67", "12.345.67", "14.235.67"}},
      {"2|34", {"12.346.5", "12.345.6", "12.345.6"}},
      // Last entry: A_{2,3,4} = 28.346.7 standardizes to 16.234.5.
      {"1|234", {"12.38.457.6", "12.38.456.7", "12.38.456.7"}},
  };
  for (const auto& [gamma, expected] : rows) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const auto value = evaluate(C(gamma), standardize(P(columns[j])));
      c.expectEq(format(value), std::string(expected[j]),
                 std::string(gamma) + "[" + columns[j] + "]");
    }
  }

  const auto atoms = atomicFactorization(P("12.346.57.8")).atoms;
  c.expectEq(atoms, std::vector<SetPartition>{P("12"), P("124.35"), P("1")}, "maximal splitting");
  c.expect(isAtomic(P("17.235.4.68")), "17.235.4.68 is atomic");
  c.expect(!isAtomic(P("12.346.57.8")), "12.346.57.8 is not atomic");

  const WordSet left = leftQuasiShuffle(parseWord("1|3"), parseWord("24"));
  const WordSet expected = {parseWord("1|3|24"), parseWord("1|234"), parseWord("1|24|3"),
                            parseWord("124|3")};
  c.expectEq(left, expected, "left quasi-shuffle of 1|3 and 24");

  const LetterLess<char> less = [](char a, char b) { return a < b; };
  auto w = [](const char* s) { return GenericWord<char>{{s, s + std::char_traits<char>::length(s)}}; };
  c.expect(isLyndon(w("aabb"), less), "aabb is Lyndon");
  c.expectEq(lyndonFactorize(w("aabb"), less), std::make_pair(w("a"), w("abb")), "aabb");
  c.expectEq(lyndonFactorize(w("abb"), less), std::make_pair(w("ab"), w("b")), "abb");
  c.expectEq(lyndonFactorize(w("ab"), less), std::make_pair(w("a"), w("b")), "ab");
  c.expectEq(hallTree(w("aabb"), less).render([](char x) { return std::string(1, x); }),
             "[a,[[a,b],b]]", "Hall bracketing of aabb");
}

void antipodeValues(Criterion& c) {
  c.expectEq(antipodeDirect(P("12.3")), E("1.23"), "S(12.3) direct");
  c.expectEq(antipodeFactored(P("12.3")), E("1.23"), "S(12.3) factored");
  const auto expected = E("(1.24.3) - (1.23.4) - (1.2.34)");
  c.expectEq(antipodeDirect(P("13.2.4")), expected, "S(13.2.4) direct");
  c.expectEq(antipodeFactored(P("13.2.4")), expected, "S(13.2.4) factored");
  const auto a = P("14.2.3");
  c.expectEq(antipodeDirectTermCount(a), std::size_t{13}, "uncombined term count of S(14.2.3)");
  const auto direct = antipodeDirect(a);
  c.expectEq(direct.l1Norm(), Integer(9), "L1 norm of S(14.2.3)");
  c.expectEq(antipodeFactored(a), direct, "S(14.2.3) factored vs direct");
  c.expectEq(antipodeOracle(a), direct, "S(14.2.3) oracle vs direct");
}

void hopfAxioms(Criterion& c) {
  std::size_t total = 0;
  for (int n = 0; n <= 5; ++n) total += enumeratePartitions(n).size();
  c.expectEq(total, std::size_t{76}, "partitions of weight at most 5");
  verifyChecks(c, 5,
               {"coassociativity", "counit", "cocommutativity", "bialgebra", "antipode-left",
                "antipode-right", "antimorphism", "involution"});
}

void primitives(Criterion& c) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<SetPartition> filtered;
    for (const auto& a : enumeratePartitions(n)) {
      if (isAtomic(a)) filtered.push_back(a);
    }
    c.expectEq(enumerateAtomic(n), filtered, "atomic enumeration at weight " + std::to_string(n));
    for (const auto& a : enumeratePartitions(n)) {
      const auto p = primitive(a);
      const auto name = format(a);
      if (isAtomic(a)) {
        c.expect(reducedCoproduct(p).isZero(), "p(" + name + ") is not primitive");
        c.expectEq(leadingTerm(p), a, "leading term of p(" + name + ")");
        c.expectEq(p.coefficient(a), Integer(1), "leading coefficient of p(" + name + ")");
      } else {
        c.expect(p.isZero(), "p(" + name + ") should vanish");
      }
    }
  }
}

void lemmaIdentity(Criterion& c) { verifyChecks(c, 5, {"lemma", "phi-involution"}); }

// Lyndon words over the atoms, found by brute force: a word is Lyndon when it
// is strictly smaller than each of its proper rotations.
std::size_t countLyndonAtomWords(int n) {
  const auto order = atomOrderDefault();
  std::vector<std::vector<SetPartition>> atomsByWeight(n + 1);
  for (int k = 1; k <= n; ++k) atomsByWeight[k] = enumerateAtomic(k);
  auto less = [&](const std::vector<SetPartition>& x, const std::vector<SetPartition>& y) {
    return std::lexicographical_compare(
        x.begin(), x.end(), y.begin(), y.end(),
        [&](const SetPartition& a, const SetPartition& b) { return order(a, b) < 0; });
  };
  std::size_t count = 0;
  std::vector<SetPartition> word;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      for (std::size_t i = 1; i < word.size(); ++i) {
        std::vector<SetPartition> rotated(word.begin() + i, word.end());
        rotated.insert(rotated.end(), word.begin(), word.begin() + i);
        if (!less(word, rotated)) return;
      }
      ++count;
      return;
    }
    for (int k = 1; k <= remaining; ++k) {
      for (const auto& a : atomsByWeight[k]) {
        word.push_back(a);
        extend(remaining - k);
        word.pop_back();
      }
    }
  };
  extend(n);
  return count;
}

// Dimensions L_n with prod (1 - t^n)^(-L_n) = sum Bell(n) t^n.
std::vector<Integer> primitiveDimensionsFromBell(int limit) {
  std::vector<Integer> bell{1};
  std::vector<Integer> row{1};
  for (int n = 1; n <= limit; ++n) {
    std::vector<Integer> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = std::move(next);
  }
  std::vector<Integer> dims(limit + 1, 0);
  for (int n = 1; n <= limit; ++n) {
    // Series of prod_{k<n} (1 - t^k)^(-L_k), truncated at degree n.
    std::vector<Integer> series(limit + 1, 0);
    series[0] = 1;
    for (int k = 1; k < n; ++k) {
      for (Integer m = 0; m < dims[k]; ++m) {
        for (int d = k; d <= limit; ++d) series[d] += series[d - k];
      }
    }
    dims[n] = bell[n] - series[n];
  }
  return dims;
}

void hallBasis(Criterion& c) {
  verifyChecks(c, 5, {"unitriangularity"});
  const auto fromBell = primitiveDimensionsFromBell(5);
  for (int n = 1; n <= 5; ++n) {
    const auto name = "n=" + std::to_string(n);
    const auto dimension = primitiveSpaceDimension(n);
    const auto lyndon = countLyndonAtomWords(n);
    c.expectEq(dimension, lyndon, "primitive dimension vs Lyndon atom words, " + name);
    c.expectEq(Integer(lyndon), fromBell[n], "Lyndon atom words vs Bell series, " + name);
    c.expectEq(lyndonAtomWords(n).size(), lyndon, "lyndonAtomWords count, " + name);
    c.expect(hallSpanCheck(n), "hallSpanCheck, " + name);
  }
}

void cardinalities(Criterion& c) {
  std::vector<Integer> bell{1};
  for (int n = 1; n <= 8; ++n) {
    // Bell(n) = sum_k C(n-1,k) Bell(k).
    Integer sum = 0;
    Integer binom = 1;
    for (int k = 0; k < n; ++k) {
      sum += binom * bell[k];
      binom = binom * (n - 1 - k) / (k + 1);
    }
    bell.push_back(sum);
  }
  for (int n = 0; n <= 8; ++n) {
    c.expectEq(Integer(enumeratePartitions(n).size()), bell[n], "Bell(" + std::to_string(n) + ")");
  }
  // Fubini(r) = sum_k (-1)^(r-k) k! S(r,k) via the Stirling triangle.
  std::vector<std::vector<Integer>> stirling(8, std::vector<Integer>(8, 0));
  stirling[0][0] = 1;
  for (int r = 1; r < 8; ++r) {
    for (int k = 1; k <= r; ++k) stirling[r][k] = k * stirling[r - 1][k] + stirling[r - 1][k - 1];
  }
  for (int r = 0; r <= 7; ++r) {
    Integer fubini = 0;
    Integer factorial = 1;
    for (int k = 0; k <= r; ++k) {
      if (k > 0) factorial *= k;
      fubini += factorial * stirling[r][k];
    }
    c.expectEq(Integer(enumerateCompositions(r).size()), fubini, "Fubini(" + std::to_string(r) + ")");
  }
  // Delannoy: D(k,l) = sum_j C(k,j) C(l,j) 2^j.
  auto binomial = [](int n, int k) {
    Integer b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
  };
  for (int k = 0; k <= 4; ++k) {
    for (int l = 0; l <= 4; ++l) {
      Integer delannoy = 0;
      for (int j = 0; j <= std::min(k, l); ++j) delannoy += binomial(k, j) * binomial(l, j) * (Integer(1) << j);
      std::vector<Block> ul;
      std::vector<Block> vl;
      for (int i = 1; i <= k; ++i) ul.push_back({i});
      for (int j = 1; j <= l; ++j) vl.push_back({k + j});
      c.expectEq(Integer(quasiShuffle(Word(ul), Word(vl)).size()), delannoy,
                 "D(" + std::to_string(k) + "," + std::to_string(l) + ")");
    }
  }
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void cliGoldens(Criterion& c) {
  const std::string dir = NCSYM_GOLDEN_DIR;
  auto golden = [&](const std::vector<std::string>& args, const std::string& file) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    c.expectEq(code, cli::kOk, file + ": exit code");
    const auto expected = readFile(dir + "/" + file);
    c.expect(!expected.empty(), file + ": missing golden file");
    c.expectEq(out.str(), expected, file + ": output differs");
  };
  golden({"antipode", "12.3"}, "antipode_12.3.txt");
  golden({"antipode", "13.2.4", "--method", "factored"}, "antipode_13.2.4_factored.txt");

  std::ostringstream out;
  std::ostringstream err;
  const auto start = std::chrono::steady_clock::now();
  const int code = cli::run({"verify", "--max-weight", "4"}, out, err);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  c.expectEq(code, cli::kOk, "verify --max-weight 4 exit code");
  c.expect(elapsed.count() < 10.0, "verify --max-weight 4 took over 10 s");
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    void (*body)(Criterion&);
    double seconds;
  };
  const std::vector<Entry> entries = {
      {"1 worked examples", workedExamples, 1},
      {"2 antipode values", antipodeValues, 10},
      {"3 Hopf axioms, weight <= 5", hopfAxioms, 30},
      {"4 primitives p(A), weight <= 5", primitives, 30},
      {"5 cancellation lemma and pairing involution", lemmaIdentity, 30},
      {"6 unitriangularity and Hall basis, weight <= 5", hallBasis, 30},
      {"7 cardinalities", cardinalities, 30},
      {"8 CLI goldens and verify", cliGoldens, 30},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Criterion c(e.title);
    const auto start = std::chrono::steady_clock::now();
    try {
      e.body(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    c.expect(elapsed.count() < e.seconds, "time limit exceeded");
    std::cout << (c.ok() ? "PASS " : "FAIL ") << c.title() << " (" << std::fixed
              << std::setprecision(3) << elapsed.count() << " s)\n";
    for (const auto& p : c.problems()) std::cout << "    " << p << '\n';
    if (!c.ok()) ++failed;
  }
  return failed;
}
