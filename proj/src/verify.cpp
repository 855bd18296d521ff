#include "ncsym/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "ncsym/hopf.hpp"
#include "ncsym/io.hpp"

namespace ncsym::verify {

namespace {

using Triple = std::tuple<SetPartition, SetPartition, SetPartition>;
using TripleTerms = std::map<Triple, Integer>;

void addTriple(TripleTerms& terms, Triple key, const Integer& c) {
  auto [it, inserted] = terms.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

SetPartition randomPartition(int n, std::mt19937_64& rng) {
  // Random restricted growth string; not uniform over partitions.
  std::vector<Block> blocks;
  for (int x = 1; x <= n; ++x) {
    std::uniform_int_distribution<std::size_t> pick(0, blocks.size());
    const auto b = pick(rng);
    if (b == blocks.size()) {
      blocks.push_back({x});
    } else {
      blocks[b].push_back(x);
    }
  }
  return SetPartition::fromCanonical(std::move(blocks));
}

std::string label(const SetPartition& p) { return p.empty() ? "\xE2\x88\x85" : formatAuto(p); }

class Sweep {
 public:
  explicit Sweep(const Options& options) : options_(options) {
    exhaustiveLimit_ = std::min(options.maxWeight, kExhaustiveWeight);
    for (int n = 0; n <= exhaustiveLimit_; ++n) {
      for (auto& p : enumeratePartitions(n)) partitions_.push_back(std::move(p));
    }
    for (int n = kExhaustiveWeight + 1; n <= options.maxWeight; ++n) {
      std::mt19937_64 rng(options.seed * 1000003u + static_cast<std::uint64_t>(n));
      for (int i = 0; i < options.spotChecks; ++i) sampled_.push_back(randomPartition(n, rng));
    }
    all_ = partitions_;
    all_.insert(all_.end(), sampled_.begin(), sampled_.end());
    for (const auto& a : partitions_) {
      for (const auto& b : partitions_) {
        if (static_cast<int>(a.weight() + b.weight()) <= exhaustiveLimit_) pairs_.emplace_back(a, b);
      }
    }
    const SetPartition one(std::vector<Block>{{1}});
    for (const auto& a : sampled_) pairs_.emplace_back(a, one);
  }

  CheckResult run(const std::string& name) {
    CheckResult r{name, 0, {}};
    const std::map<std::string, std::function<void(CheckResult&)>> table = {
        {"coassociativity", [this](CheckResult& c) { coassociativity(c); }},
        {"counit", [this](CheckResult& c) { counitLaws(c); }},
        {"cocommutativity", [this](CheckResult& c) { cocommutativity(c); }},
        {"bialgebra", [this](CheckResult& c) { bialgebra(c); }},
        {"antipode-left", [this](CheckResult& c) { antipodeConvolution(c, true); }},
        {"antipode-right", [this](CheckResult& c) { antipodeConvolution(c, false); }},
        {"antipode-agreement", [this](CheckResult& c) { antipodeAgreement(c); }},
        {"antimorphism", [this](CheckResult& c) { antimorphism(c); }},
        {"involution", [this](CheckResult& c) { involution(c); }},
        {"grading", [this](CheckResult& c) { grading(c); }},
        {"primitives", [this](CheckResult& c) { primitives(c); }},
        {"unitriangularity", [this](CheckResult& c) { unitriangularity(c); }},
        {"lemma", [this](CheckResult& c) { lemma(c); }},
        {"phi-involution", [this](CheckResult& c) { phiInvolution(c); }},
        {"hall-span", [this](CheckResult& c) { hallSpan(c); }},
        {"cardinalities", [this](CheckResult& c) { cardinalities(c); }},
    };
    table.at(name)(r);
    return r;
  }

 private:
  const Element& s(const SetPartition& p) {
    auto it = antipodes_.find(p);
    if (it == antipodes_.end()) it = antipodes_.emplace(p, antipode(p)).first;
    return it->second;
  }

  Element s(const Element& x) {
    Element out;
    for (const auto& [p, c] : x.terms()) out += c * s(p);
    return out;
  }

  static void fail(CheckResult& r, const std::string& where, const std::string& what) {
    r.failures.push_back(where + ": " + what);
  }

  void coassociativity(CheckResult& r) {
    for (const auto& a : all_) {
      ++r.cases;
      TripleTerms left;
      TripleTerms right;
      for (const auto& [key, c] : coproduct(a).terms()) {
        for (const auto& [inner, d] : coproduct(key.first).terms()) {
          addTriple(left, {inner.first, inner.second, key.second}, c * d);
        }
        for (const auto& [inner, d] : coproduct(key.second).terms()) {
          addTriple(right, {key.first, inner.first, inner.second}, c * d);
        }
      }
      if (left != right) fail(r, label(a), "(Δ⊗id)Δ ≠ (id⊗Δ)Δ");
    }
  }

  void counitLaws(CheckResult& r) {
    for (const auto& a : all_) {
      ++r.cases;
      Element left;
      Element right;
      for (const auto& [key, c] : coproduct(a).terms()) {
        if (key.first.empty()) left.add(key.second, c);
        if (key.second.empty()) right.add(key.first, c);
      }
      if (left != Element(a)) fail(r, label(a), "(ε⊗id)Δ ≠ id");
      if (right != Element(a)) fail(r, label(a), "(id⊗ε)Δ ≠ id");
    }
  }

  void cocommutativity(CheckResult& r) {
    for (const auto& a : all_) {
      ++r.cases;
      const auto d = coproduct(a);
      if (d.twist() != d) fail(r, label(a), "twist∘Δ ≠ Δ");
    }
  }

  void bialgebra(CheckResult& r) {
    for (const auto& [a, b] : pairs_) {
      ++r.cases;
      const auto lhs = coproduct(product(Element(a), Element(b)));
      const auto rhs = product(coproduct(a), coproduct(b));
      if (lhs != rhs) fail(r, label(a) + " * " + label(b), "Δ(xy) ≠ Δ(x)Δ(y)");
    }
  }

  void antipodeConvolution(CheckResult& r, bool leftSide) {
    for (const auto& a : all_) {
      ++r.cases;
      Element sum;
      for (const auto& [key, c] : coproduct(a).terms()) {
        sum += c * (leftSide ? product(s(key.first), Element(key.second))
                             : product(Element(key.first), s(key.second)));
      }
      const Element expected = a.empty() ? Element::unit() : Element();
      if (sum != expected) {
        fail(r, label(a), std::string(leftSide ? "m(S⊗id)Δ" : "m(id⊗S)Δ") + " = " +
                              io::formatElement(sum));
      }
    }
  }

  void antipodeAgreement(CheckResult& r) {
    for (const auto& a : all_) {
      if (a.empty()) continue;
      ++r.cases;
      const auto direct = antipodeDirect(a);
      const auto factored = antipodeFactored(a);
      const auto recursive = oracle_(a);
      if (direct != factored) fail(r, label(a), "direct ≠ factored");
      if (direct != recursive) fail(r, label(a), "direct ≠ oracle");
    }
  }

  void antimorphism(CheckResult& r) {
    for (const auto& [a, b] : pairs_) {
      ++r.cases;
      if (s(concat(a, b)) != product(s(b), s(a))) {
        fail(r, label(a) + " * " + label(b), "S(AB) ≠ S(B)S(A)");
      }
    }
  }

  void involution(CheckResult& r) {
    for (const auto& a : all_) {
      ++r.cases;
      if (s(s(a)) != Element(a)) fail(r, label(a), "S(S(A)) ≠ A");
    }
  }

  void grading(CheckResult& r) {
    for (const auto& [a, b] : pairs_) {
      ++r.cases;
      if (concat(a, b).weight() != a.weight() + b.weight()) {
        fail(r, label(a) + " * " + label(b), "product weight not additive");
      }
    }
    for (const auto& a : all_) {
      ++r.cases;
      for (const auto& [key, c] : coproduct(a).terms()) {
        if (key.first.weight() + key.second.weight() != a.weight()) {
          fail(r, label(a), "coproduct term weights do not sum to the input weight");
        }
      }
      for (const auto& [p, c] : s(a).terms()) {
        if (p.weight() != a.weight()) fail(r, label(a), "S changes weight");
      }
    }
  }

  void primitives(CheckResult& r) {
    for (const auto& a : all_) {
      if (a.empty()) continue;
      ++r.cases;
      const auto p = primitive(a);
      if (isAtomic(a)) {
        if (p.isZero()) {
          fail(r, label(a), "p(A) = 0 for atomic A");
          continue;
        }
        if (!reducedCoproduct(p).isZero()) fail(r, label(a), "p(A) is not primitive");
        if (leadingTerm(p) != a || p.coefficient(a) != 1) {
          fail(r, label(a), "leading term of p(A) is not +A");
        }
      } else if (!p.isZero()) {
        fail(r, label(a), "p(A) ≠ 0 for non-atomic A");
      }
    }
  }

  void unitriangularity(CheckResult& r) {
    const auto order = atomOrderDefault();
    for (int n = 1; n <= exhaustiveLimit_; ++n) {
      for (const auto& a : enumeratePartitions(n)) {
        ++r.cases;
        const auto pa = primitiveMonomial(a);
        if (pa.coefficient(a) != 1) fail(r, label(a), "diagonal entry is not 1");
        for (const auto& [b, c] : pa.terms()) {
          if (extendToPartitions(order, b, a) == std::strong_ordering::less) {
            fail(r, label(a), "term " + label(b) + " precedes the diagonal");
          }
        }
      }
    }
  }

  void lemma(CheckResult& r) {
    for (int n = 2; n <= exhaustiveLimit_; ++n) {
      // Subsets K of [n] with 1 ∈ K ≠ [n], as bitmasks over {2..n}.
      const std::uint32_t full = (1u << (n - 1)) - 1;
      for (std::uint32_t mask = 0; mask < full; ++mask) {
        IndexSet k{1};
        IndexSet l;
        for (int i = 2; i <= n; ++i) ((mask >> (i - 2)) & 1u ? k : l).insert(i);
        ++r.cases;
        if (!lemmaSum(n, k, l).empty()) fail(r, "r=" + std::to_string(n), "lemma sum is nonzero");
      }
    }
  }

  void phiInvolution(CheckResult& r) {
    const int limit = std::min(exhaustiveLimit_, 4);
    for (int k = 1; k <= limit; ++k) {
      for (int l = 1; l <= limit; ++l) {
        // u takes odd elements, v even ones, one per letter.
        std::vector<Block> ul;
        std::vector<Block> vl;
        for (int i = 0; i < k; ++i) ul.push_back({2 * i + 1});
        for (int j = 0; j < l; ++j) vl.push_back({2 * j + 2});
        const Word u(ul);
        const Word v(vl);
        Integer parity = 0;
        for (const auto& w : leftQuasiShuffle(u, v)) {
          ++r.cases;
          const auto image = pairingPhi(w, u, v);
          const auto where = format(w);
          if (image == w) fail(r, where, "fixed point");
          if (pairingPhi(image, u, v) != w) fail(r, where, "φ∘φ ≠ id");
          const auto diff = static_cast<long>(w.length()) - static_cast<long>(image.length());
          if (diff != 1 && diff != -1) fail(r, where, "lengths differ by more than one");
          parity += w.length() % 2 == 0 ? 1 : -1;
        }
        if (parity != 0) fail(r, format(u) + " ⧢̃ " + format(v), "signed count is nonzero");
      }
    }
  }

  void hallSpan(CheckResult& r) {
    for (int n = 1; n <= exhaustiveLimit_; ++n) {
      ++r.cases;
      if (!hallSpanCheck(n)) fail(r, "n=" + std::to_string(n), "Hall primitives are not a basis");
    }
  }

  void cardinalities(CheckResult& r) {
    // Bell numbers through the Bell triangle.
    std::vector<Integer> row{1};
    std::vector<Integer> bell{1};
    for (int n = 1; n <= 8; ++n) {
      std::vector<Integer> next{row.back()};
      for (const auto& x : row) next.push_back(next.back() + x);
      bell.push_back(next.front());
      row = std::move(next);
    }
    for (int n = 0; n <= std::min(options_.maxWeight, 8); ++n) {
      ++r.cases;
      if (Integer(enumeratePartitions(n).size()) != bell[n]) {
        fail(r, "Bell(" + std::to_string(n) + ")", "enumeration count mismatch");
      }
    }
    // Fubini: a(n) = sum_k C(n,k) a(n-k).
    std::vector<Integer> fubini{1};
    for (int n = 1; n <= 7; ++n) {
      Integer sum = 0;
      Integer binom = 1;
      for (int k = 1; k <= n; ++k) {
        binom = binom * (n - k + 1) / k;
        sum += binom * fubini[n - k];
      }
      fubini.push_back(sum);
    }
    for (int n = 0; n <= std::min(options_.maxWeight, 7); ++n) {
      ++r.cases;
      if (Integer(enumerateCompositions(n).size()) != fubini[n]) {
        fail(r, "Fubini(" + std::to_string(n) + ")", "enumeration count mismatch");
      }
    }
    const int limit = std::min(options_.maxWeight, 4);
    std::vector<std::vector<Integer>> d(limit + 1, std::vector<Integer>(limit + 1, 1));
    for (int k = 1; k <= limit; ++k) {
      for (int l = 1; l <= limit; ++l) d[k][l] = d[k - 1][l] + d[k - 1][l - 1] + d[k][l - 1];
    }
    for (int k = 0; k <= limit; ++k) {
      for (int l = 0; l <= limit; ++l) {
        std::vector<Block> ul;
        std::vector<Block> vl;
        for (int i = 0; i < k; ++i) ul.push_back({2 * i + 1});
        for (int j = 0; j < l; ++j) vl.push_back({2 * j + 2});
        ++r.cases;
        if (Integer(quasiShuffle(Word(ul), Word(vl)).size()) != d[k][l]) {
          fail(r, "D(" + std::to_string(k) + "," + std::to_string(l) + ")",
               "quasi-shuffle count mismatch");
        }
      }
    }
  }

  Options options_;
  int exhaustiveLimit_ = 0;
  std::vector<SetPartition> partitions_;
  std::vector<SetPartition> sampled_;
  std::vector<SetPartition> all_;
  std::vector<std::pair<SetPartition, SetPartition>> pairs_;
  std::map<SetPartition, Element> antipodes_;
  AntipodeOracle oracle_;
};

}  // namespace

const std::vector<std::string>& checkNames() {
  static const std::vector<std::string> names = {
      "coassociativity", "counit",       "cocommutativity",  "bialgebra",
      "antipode-left",   "antipode-right", "antipode-agreement", "antimorphism",
      "involution",      "grading",      "primitives",       "unitriangularity",
      "lemma",           "phi-involution", "hall-span",        "cardinalities"};
  return names;
}

std::vector<CheckResult> run(const Options& options) {
  if (options.maxWeight < 0) throw std::invalid_argument("verify: max weight must be nonnegative");
  std::vector<std::string> selected = options.checks.empty() ? checkNames() : options.checks;
  for (const auto& name : selected) {
    if (std::find(checkNames().begin(), checkNames().end(), name) == checkNames().end()) {
      throw std::invalid_argument("verify: unknown check '" + name + "'");
    }
  }
  Sweep sweep(options);
  std::vector<CheckResult> out;
  for (const auto& name : selected) out.push_back(sweep.run(name));
  return out;
}

}  // namespace ncsym::verify
