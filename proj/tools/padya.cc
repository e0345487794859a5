// padya: compose prose into metre, scan verse, or serve the workbench.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "padya/composer.h"
#include "padya/error.h"
#include "padya/report.h"
#include "padya/service.h"

namespace {

constexpr int kExitMatched = 0;
constexpr int kExitError = 1;
constexpr int kExitClosest = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

padya::Catalog load_catalog(const std::string& path) {
  try {
    return padya::Catalog::load(path.empty() ? padya::default_catalog_path() : std::filesystem::path(path));
  } catch (const padya::Error& e) {
    if (e.code() == padya::ErrorCode::kIoError) throw FileError(e.what());
    throw;
  }
}

padya::ProseInput read_prose(const std::string& text, bool spelled) {
  if (!spelled) return padya::tokenize(text);
  padya::ProseInput p = padya::tokenize(padya::decode_spelled(padya::split_spelled_tokens(text)));
  p.source_mode = padya::SourceMode::kSpelledLetters;
  return p;
}

void print_result(const padya::CompositionResult& r, std::ostream& out) {
  if (!r.groups.empty()) {
    for (std::size_t i = 0; i < r.groups.size(); ++i) {
      out << "-- verse " << i + 1 << " --\n";
      print_result(r.groups[i], out);
    }
    return;
  }
  out << r.verse_text << "\n\n";
  for (const auto& p : r.padas) out << p.pattern.grouped() << '\n';
  if (r.metre) {
    out << (r.metre->exact ? "metre: " : "closest: ") << r.metre->name;
    if (!r.metre->exact) out << " (distance " << r.metre->distance << ")";
    out << '\n';
  }
  for (const auto& s : r.suggestions) out << "  " << padya::to_string(s.kind) << ": " << s.detail << '\n';
  for (const auto& n : r.notes) out << "note: " << n << '\n';
}

// Asks each pending question on the terminal and fills the answers.
void ask(const std::vector<padya::PendingQuestion>& qs, padya::DualAnswers& answers) {
  for (const auto& q : qs) {
    std::cerr << q.question << " [y/N] " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) line.clear();
    answers[{q.left_word, q.right_word}] = !line.empty() && (line[0] == 'y' || line[0] == 'Y');
  }
}

int run_compose(const std::string& input, bool spelled, const std::string& catalog_path, std::size_t max_perm,
                const std::vector<std::string>& families, bool interactive, const std::string& report) {
  const padya::Catalog catalog = load_catalog(catalog_path);
  padya::CompositionRequest req;
  req.prose = read_prose(read_input(input), spelled);
  req.max_permutations = max_perm;
  if (!families.empty()) {
    req.families.clear();
    for (const auto& f : families) {
      auto fam = padya::parse_family(f);
      if (!fam) throw CLI::ValidationError("--families", "unknown family '" + f + "'");
      req.families.insert(*fam);
    }
  }
  req.mode = interactive ? padya::Mode::kInteractive : padya::Mode::kBatch;
  const padya::Composer composer(catalog);
  padya::CompositionResult r = composer.compose(req);
  while (r.status == padya::Status::kNeedsInput) {
    ask(r.pending_questions, req.overrides);
    r = composer.compose(req);
  }
  print_result(r, std::cout);
  if (!report.empty()) {
    std::ofstream out(report, std::ios::binary);
    if (!out) throw FileError("cannot write " + report);
    out << padya::to_json(r).dump(2) << '\n';
  }
  return r.status == padya::Status::kMatched ? kExitMatched : kExitClosest;
}

int run_scan(const std::string& input, bool spelled, const std::string& catalog_path) {
  const padya::Catalog catalog = load_catalog(catalog_path);
  std::string text = read_input(input);
  if (spelled) text = padya::decode_spelled(padya::split_spelled_tokens(text));
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  const padya::ScanReport s = padya::scan_lines(lines, padya::CatalogView::all(catalog));
  for (std::size_t i = 0; i < s.lines.size(); ++i) {
    std::cout << s.patterns[i].grouped() << '\t' << s.ganas[i].str() << '\t' << s.lines[i] << '\n';
  }
  if (s.metre) {
    std::cout << (s.metre->exact ? "" : "closest: ") << s.metre->name;
    if (!s.metre->exact) std::cout << " (distance " << s.metre->distance << ")";
    std::cout << '\n';
    return s.metre->exact ? kExitMatched : kExitClosest;
  }
  return kExitClosest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sanskrit prose to metrical verse"};
  app.require_subcommand(1);

  std::string input = "-";
  bool spelled = false;
  std::string catalog_path;
  std::size_t max_perm = padya::kDefaultMaxPermutations;
  std::vector<std::string> families;
  bool interactive = false;
  std::string report;
  int port = 8080;

  auto* compose = app.add_subcommand("compose", "find a metrical arrangement of the input words");
  compose->add_option("--input", input, "prose file, or - for stdin")->required();
  compose->add_flag("--spelled", spelled, "input is spelled letter by letter");
  compose->add_option("--catalog", catalog_path, "metre catalog file");
  compose->add_option("--max-permutations", max_perm, "word orders to try")->check(CLI::PositiveNumber);
  compose->add_option("--families", families, "sama,ardhasama,visama,jati")->delimiter(',');
  compose->add_flag("--interactive", interactive, "ask pragṛhya questions on the terminal");
  compose->add_option("--report", report, "write the JSON report here");

  auto* scan = app.add_subcommand("scan", "scan verse given one pāda per line");
  scan->add_option("--input", input, "verse file, or - for stdin")->required();
  scan->add_flag("--spelled", spelled, "input is spelled letter by letter");
  scan->add_option("--catalog", catalog_path, "metre catalog file");

  auto* serve = app.add_subcommand("serve", "run the session service on loopback");
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve->add_option("--catalog", catalog_path, "metre catalog file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compose) return run_compose(input, spelled, catalog_path, max_perm, families, interactive, report);
    if (*scan) return run_scan(input, spelled, catalog_path);
    if (*serve) {
      const padya::Catalog catalog = load_catalog(catalog_path);
      std::cerr << "listening on 127.0.0.1:" << port << '\n';
      return padya::serve(catalog, port);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const padya::Error& e) {
    std::cerr << "error: " << padya::to_string(e.code()) << ": " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
