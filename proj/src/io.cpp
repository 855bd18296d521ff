#include "ncsym/io.hpp"

#include <algorithm>
#include <cctype>

namespace ncsym::io {

namespace {

constexpr std::string_view kEmpty = "\xE2\x88\x85";   // ∅
constexpr std::string_view kTensor = "\xE2\x8A\x97";  // ⊗

std::string partitionText(const SetPartition& p) {
  return p.empty() ? std::string(kEmpty) : formatAuto(p);
}

// Appends " + 3(A)" style term text; `first` controls the leading separator.
void appendTerm(std::string& out, const Integer& coeff, const std::string& body, bool first) {
  const bool negative = coeff < 0;
  const Integer magnitude = negative ? Integer(-coeff) : coeff;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (magnitude != 1) out += magnitude.str();
  out += body;
}

class TermScanner {
 public:
  explicit TermScanner(std::string_view text) : text_(text) {}

  bool done() {
    skipSpace();
    return pos_ >= text_.size();
  }

  // Reads "[sign] [digits] (" and returns the signed coefficient.
  Integer readCoefficient(bool first) {
    skipSpace();
    int sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", std::string(rest()));
    }
    skipSpace();
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_++];
    }
    Integer magnitude = digits.empty() ? Integer(1) : Integer(digits);
    if (magnitude == 0) throw ParseError("zero coefficient", digits);
    return sign * magnitude;
  }

  // Reads "( ... )" and returns the inside.
  std::string_view readParenthesized() {
    skipSpace();
    if (pos_ >= text_.size() || text_[pos_] != '(') {
      throw ParseError("expected '('", std::string(rest()));
    }
    const auto close = text_.find(')', pos_);
    if (close == std::string_view::npos) throw ParseError("unbalanced '('", std::string(rest()));
    auto inside = text_.substr(pos_ + 1, close - pos_ - 1);
    pos_ = close + 1;
    return inside;
  }

  void expect(std::string_view token) {
    skipSpace();
    if (text_.substr(pos_, token.size()) != token) {
      throw ParseError("expected '" + std::string(token) + "'", std::string(rest()));
    }
    pos_ += token.size();
  }

 private:
  void skipSpace() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  std::string_view rest() const { return text_.substr(std::min(pos_, text_.size())); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

SetPartition partitionFromText(std::string_view inside) {
  auto p = parsePartition(inside);
  if (!p.isStandard()) throw ParseError("partition is not standard", std::string(inside));
  return p;
}

bool hasTermSyntax(std::string_view text) {
  return text.find('(') != std::string_view::npos;
}

std::strong_ordering compareTensorKeys(const AtomOrder& order, const TensorElement::Key& a,
                                       const TensorElement::Key& b) {
  if (auto c = extendToPartitions(order, a.first, b.first); c != std::strong_ordering::equal) {
    return c;
  }
  return extendToPartitions(order, a.second, b.second);
}

}  // namespace

std::string formatElement(const Element& x) {
  if (x.isZero()) return "0";
  const auto terms = orderedTerms(x);
  if (terms.size() == 1 && terms.front().second == 1) return partitionText(terms.front().first);
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms) {
    appendTerm(out, c, "(" + partitionText(p) + ")", first);
    first = false;
  }
  return out;
}

Element parseElement(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "0") return {};
  if (!hasTermSyntax(text)) return Element(partitionFromText(text));
  TermScanner scan(text);
  Element out;
  bool first = true;
  while (!scan.done()) {
    const Integer coeff = scan.readCoefficient(first);
    out.add(partitionFromText(scan.readParenthesized()), coeff);
    first = false;
  }
  return out;
}

std::string formatTensor(const TensorElement& x) {
  if (x.isZero()) return "0";
  const auto order = atomOrderDefault();
  std::vector<std::pair<TensorElement::Key, Integer>> terms(x.terms().begin(), x.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return compareTensorKeys(order, a.first, b.first) == std::strong_ordering::less;
  });
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    appendTerm(out, c,
               "(" + partitionText(key.first) + ") " + std::string(kTensor) + " (" +
                   partitionText(key.second) + ")",
               first);
    first = false;
  }
  return out;
}

TensorElement parseTensor(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  TensorElement out;
  if (text == "0") return out;
  TermScanner scan(text);
  bool first = true;
  while (!scan.done()) {
    const Integer coeff = scan.readCoefficient(first);
    auto left = partitionFromText(scan.readParenthesized());
    scan.expect(kTensor);
    auto right = partitionFromText(scan.readParenthesized());
    out.add(left, right, coeff);
    first = false;
  }
  return out;
}

json blocksToJson(const std::vector<Block>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) out.push_back(b);
  return out;
}

std::vector<Block> blocksFromJson(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of blocks", j.dump());
  std::vector<Block> out;
  for (const auto& b : j) {
    if (!b.is_array()) throw ParseError("expected an array of integers", b.dump());
    Block block;
    for (const auto& x : b) {
      if (!x.is_number_integer()) throw ParseError("expected an integer", x.dump());
      block.push_back(x.get<int>());
    }
    out.push_back(std::move(block));
  }
  return out;
}

json toJson(const Element& x) {
  std::vector<std::pair<std::string, const Element::Terms::value_type*>> keyed;
  for (const auto& term : x.terms()) {
    keyed.emplace_back(format(term.first, TextMode::Extended), &term);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json terms = json::array();
  for (const auto& [key, term] : keyed) {
    terms.push_back({{"coeff", term->second.str()}, {"partition", blocksToJson(term->first.blocks())}});
  }
  return json{{"terms", terms}};
}

Element elementFromJson(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("expected an object with a \"terms\" array", j.dump());
  }
  Element out;
  for (const auto& t : j["terms"]) {
    if (!t.contains("coeff") || !t["coeff"].is_string()) {
      throw ParseError("term coefficient must be a decimal string", t.dump());
    }
    const auto coeff = t["coeff"].get<std::string>();
    Integer value;
    try {
      value = Integer(coeff);
    } catch (const std::exception&) {
      throw ParseError("malformed coefficient", coeff);
    }
    out.add(SetPartition(blocksFromJson(t.at("partition"))), value);
  }
  return out;
}

json toJson(const TensorElement& x) {
  std::vector<std::pair<std::pair<std::string, std::string>, const TensorElement::Terms::value_type*>>
      keyed;
  for (const auto& term : x.terms()) {
    keyed.push_back({{format(term.first.first, TextMode::Extended),
                      format(term.first.second, TextMode::Extended)},
                     &term});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json terms = json::array();
  for (const auto& [key, term] : keyed) {
    terms.push_back({{"coeff", term->second.str()},
                     {"left", blocksToJson(term->first.first.blocks())},
                     {"right", blocksToJson(term->first.second.blocks())}});
  }
  return json{{"terms", terms}};
}

TensorElement tensorFromJson(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("expected an object with a \"terms\" array", j.dump());
  }
  TensorElement out;
  for (const auto& t : j["terms"]) {
    out.add(SetPartition(blocksFromJson(t.at("left"))), SetPartition(blocksFromJson(t.at("right"))),
            Integer(t.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace ncsym::io
