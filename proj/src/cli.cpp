#include "ncsym/cli.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ncsym/hopf.hpp"
#include "ncsym/io.hpp"
#include "ncsym/verify.hpp"

namespace ncsym::cli {

namespace {

using io::json;

constexpr std::size_t kWarnBlocks = 8;

enum class Format { Text, Json };

struct Emitter {
  std::ostream& out;
  Format format;

  void element(const Element& x) const {
    if (format == Format::Json) {
      out << io::toJson(x).dump() << '\n';
    } else {
      out << io::formatElement(x) << '\n';
    }
  }

  void tensor(const TensorElement& x) const {
    if (format == Format::Json) {
      out << io::toJson(x).dump() << '\n';
    } else {
      out << io::formatTensor(x) << '\n';
    }
  }
};

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream s;
  s << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

SetPartition standardPartition(const std::string& text) {
  auto p = parsePartition(text);
  if (!p.isStandard()) throw ParseError("partition is not standard", text);
  return p;
}

void warnIfLarge(const SetPartition& p, std::ostream& err) {
  if (p.length() > kWarnBlocks) {
    err << "warning: " << p.length() << " blocks; the antipode sums over "
        << antipodeDirectTermCount(p) << " set compositions\n";
  }
}

json wordJson(const Word& w) { return io::blocksToJson(w.letters()); }

std::vector<Word> sortedWords(const WordSet& words) {
  std::vector<std::pair<std::string, Word>> keyed;
  for (const auto& w : words) keyed.emplace_back(formatBlocks(w.letters(), '|', TextMode::Extended), w);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Word> out;
  for (auto& [k, w] : keyed) out.push_back(std::move(w));
  return out;
}

int runVerify(const verify::Options& options, Format format, std::ostream& out,
              std::ostream& err) {
  const auto results = verify::run(options);
  bool ok = true;
  json report = {{"timestamp", timestamp()}, {"max_weight", options.maxWeight},
                 {"seed", options.seed}, {"checks", json::array()}};
  if (format == Format::Text) out << "# ncsym verify " << timestamp() << '\n';
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (format == Format::Text) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases;
      if (!r.passed()) out << " failures=" << r.failures.size();
      out << '\n';
    }
    report["checks"].push_back({{"name", r.name},
                                {"cases", r.cases},
                                {"passed", r.passed()},
                                {"failures", r.failures}});
    for (const auto& f : r.failures) err << json{{"check", r.name}, {"failure", f}}.dump() << '\n';
  }
  if (format == Format::Json) out << report.dump() << '\n';
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in the Hopf algebra NCSym (power-sum basis)", "ncsym"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string formatName = "text";
  app.add_option("--format", formatName, "Output encoding")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> operands;
  std::string single;
  std::string second;

  auto* productCmd = app.add_subcommand("product", "Product of elements, left to right");
  productCmd->add_option("elements", operands, "Elements or partitions")->required();

  auto* coproductCmd = app.add_subcommand("coproduct", "Coproduct of an element");
  coproductCmd->add_option("element", single)->required();

  auto* counitCmd = app.add_subcommand("counit", "Counit of an element");
  counitCmd->add_option("element", single)->required();

  std::string method = "factored";
  auto* antipodeCmd = app.add_subcommand("antipode", "Antipode of an element");
  antipodeCmd->add_option("element", single)->required();
  antipodeCmd->add_option("--method", method, "Formula to use")
      ->check(CLI::IsMember({"direct", "factored", "oracle"}));

  auto* primitiveCmd = app.add_subcommand("primitive", "Primitive element p(A)");
  primitiveCmd->add_option("partition", single)->required();

  auto* atomsCmd = app.add_subcommand("atoms", "Maximal atomic splitting");
  atomsCmd->add_option("partition", single)->required();

  auto* isAtomicCmd = app.add_subcommand("is-atomic", "Whether a partition is atomic");
  isAtomicCmd->add_option("partition", single)->required();

  auto* evalCmd = app.add_subcommand("eval", "Evaluate a set composition on a partition");
  evalCmd->add_option("composition", single)->required();
  evalCmd->add_option("partition", second)->required();

  bool left = false;
  auto* qshuffleCmd = app.add_subcommand("qshuffle", "Quasi-shuffles of two disjoint words");
  qshuffleCmd->add_option("u", single)->required();
  qshuffleCmd->add_option("v", second)->required();
  qshuffleCmd->add_flag("--left", left, "Left quasi-shuffles only");

  auto* lyndonCmd = app.add_subcommand(
      "lyndon", "Lyndon test, standard factorization and Hall bracketing of a character word");
  lyndonCmd->add_option("word", single)->required();

  auto* hallCmd = app.add_subcommand("hall", "Hall primitive of a Lyndon word of atoms");
  hallCmd->add_option("atoms", operands, "Atomic partitions, in word order")->required();

  std::string kind;
  int size = 0;
  bool countOnly = false;
  auto* enumerateCmd = app.add_subcommand("enumerate", "List combinatorial objects");
  enumerateCmd->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"partitions", "atomic", "compositions", "anchored"}));
  enumerateCmd->add_option("n", size)->required()->check(CLI::Range(0, 12));
  enumerateCmd->add_flag("--count", countOnly, "Print the cardinality only");

  verify::Options verifyOptions;
  std::string checkList;
  auto* verifyCmd = app.add_subcommand("verify", "Run the invariant sweeps");
  verifyCmd->add_option("--max-weight", verifyOptions.maxWeight)->required()->check(CLI::Range(0, 8));
  verifyCmd->add_option("--checks", checkList, "Comma-separated check names");
  verifyCmd->add_option("--seed", verifyOptions.seed, "Seed for sampled weights above 5");
  verifyCmd->add_option("--spot-checks", verifyOptions.spotChecks,
                        "Sampled partitions per weight above 5");

  std::vector<std::string> argvStore{"ncsym"};
  argvStore.insert(argvStore.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argvStore) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const Emitter emit{out, formatName == "json" ? Format::Json : Format::Text};
  const bool asJson = emit.format == Format::Json;

  try {
    if (productCmd->parsed()) {
      Element acc = Element::unit();
      for (const auto& text : operands) acc = product(acc, io::parseElement(text));
      emit.element(acc);
    } else if (coproductCmd->parsed()) {
      emit.tensor(coproduct(io::parseElement(single)));
    } else if (counitCmd->parsed()) {
      const auto value = counit(io::parseElement(single));
      if (asJson) {
        out << json{{"counit", value.str()}}.dump() << '\n';
      } else {
        out << value.str() << '\n';
      }
    } else if (antipodeCmd->parsed()) {
      const auto x = io::parseElement(single);
      for (const auto& [p, c] : x.terms()) warnIfLarge(p, err);
      const std::map<std::string, AntipodeMethod> methods = {
          {"direct", AntipodeMethod::Direct},
          {"factored", AntipodeMethod::Factored},
          {"oracle", AntipodeMethod::Oracle}};
      emit.element(antipode(x, methods.at(method)));
    } else if (primitiveCmd->parsed()) {
      const auto p = standardPartition(single);
      warnIfLarge(p, err);
      emit.element(primitive(p));
    } else if (atomsCmd->parsed()) {
      const auto atoms = atomicFactorization(standardPartition(single)).atoms;
      if (asJson) {
        json list = json::array();
        for (const auto& a : atoms) list.push_back(io::blocksToJson(a.blocks()));
        out << json{{"atoms", list}}.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < atoms.size(); ++i) {
          out << (i ? " | " : "") << formatAuto(atoms[i]);
        }
        out << '\n';
      }
    } else if (isAtomicCmd->parsed()) {
      const bool atomic = isAtomic(standardPartition(single));
      if (asJson) {
        out << json{{"atomic", atomic}}.dump() << '\n';
      } else {
        out << (atomic ? "true" : "false") << '\n';
      }
    } else if (evalCmd->parsed()) {
      const auto result = evaluate(parseComposition(single), standardPartition(second));
      if (asJson) {
        out << json{{"partition", io::blocksToJson(result.blocks())}}.dump() << '\n';
      } else {
        out << (result.empty() ? "\xE2\x88\x85" : formatAuto(result)) << '\n';
      }
    } else if (qshuffleCmd->parsed()) {
      const auto u = parseWord(single);
      const auto v = parseWord(second);
      const auto words = sortedWords(left ? leftQuasiShuffle(u, v) : quasiShuffle(u, v));
      if (asJson) {
        json list = json::array();
        for (const auto& w : words) list.push_back(wordJson(w));
        out << json{{"words", list}}.dump() << '\n';
      } else {
        for (const auto& w : words) out << format(w) << '\n';
      }
    } else if (lyndonCmd->parsed()) {
      const GenericWord<char> word{{single.begin(), single.end()}};
      const LetterLess<char> less = [](char a, char b) { return a < b; };
      const auto name = [](char c) { return std::string(1, c); };
      const auto text = [](const GenericWord<char>& w) {
        return std::string(w.letters.begin(), w.letters.end());
      };
      const bool lyndon = isLyndon(word, less);
      json report = {{"word", single}, {"lyndon", lyndon}};
      if (lyndon && word.letters.size() > 1) {
        auto [u, v] = lyndonFactorize(word, less);
        report["factorization"] = {text(u), text(v)};
      }
      if (lyndon) report["hall"] = hallTree(word, less).render(name);
      if (asJson) {
        out << report.dump() << '\n';
      } else {
        out << "lyndon: " << (lyndon ? "true" : "false") << '\n';
        if (report.contains("factorization")) {
          out << "factorization: (" << report["factorization"][0].get<std::string>() << ", "
              << report["factorization"][1].get<std::string>() << ")\n";
        }
        if (lyndon) out << "hall: " << report["hall"].get<std::string>() << '\n';
      }
    } else if (hallCmd->parsed()) {
      std::vector<SetPartition> atoms;
      for (const auto& text : operands) atoms.push_back(standardPartition(text));
      emit.element(hallPrimitive(atoms));
    } else if (enumerateCmd->parsed()) {
      std::vector<std::string> items;
      std::vector<json> jsonItems;
      auto addAll = [&](const auto& objects) {
        for (const auto& o : objects) {
          items.push_back(o.empty() ? "\xE2\x88\x85" : formatAuto(o));
          if (asJson && !countOnly) {
            if constexpr (std::is_same_v<std::decay_t<decltype(o)>, SetPartition>) {
              jsonItems.push_back(io::blocksToJson(o.blocks()));
            } else {
              jsonItems.push_back(io::blocksToJson(o.parts()));
            }
          }
        }
      };
      if (kind == "partitions") addAll(enumeratePartitions(size));
      if (kind == "atomic") addAll(enumerateAtomic(size));
      if (kind == "compositions") addAll(enumerateCompositions(size));
      if (kind == "anchored") addAll(enumerateFirstBlockAnchored(size));
      if (countOnly) {
        if (asJson) {
          out << json{{"count", items.size()}}.dump() << '\n';
        } else {
          out << items.size() << '\n';
        }
      } else if (asJson) {
        out << json{{"items", jsonItems}}.dump() << '\n';
      } else {
        for (const auto& s : items) out << s << '\n';
      }
    } else if (verifyCmd->parsed()) {
      if (!checkList.empty()) {
        std::stringstream s(checkList);
        std::string name;
        while (std::getline(s, name, ',')) {
          if (!name.empty()) verifyOptions.checks.push_back(name);
        }
      }
      return runVerify(verifyOptions, emit.format, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

}  // namespace ncsym::cli
