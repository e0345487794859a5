// Acceptance run: one PASS/FAIL line per headline criterion, exit status 1
// if any fails. Tolerances and budgets are pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.h"
#include "padya/band.h"
#include "padya/composer.h"
#include "padya/report.h"
#include "padya/sandhi.h"
#include "test_util.h"

using namespace padya;
using padya::testing::seed_catalog;

namespace {

constexpr double kTableTwoBudgetMs = 10.0;
constexpr double kBandSoundnessBudgetS = 60.0;
constexpr int kBandTrials = 200;
constexpr int kBandMaxWords = 7;
constexpr int kOracleTrials = 50;
constexpr int kOracleMaxWords = 6;
constexpr double kMinPruning = 0.85;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double v, int places) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void report(const char* name, const Outcome& o) {
  std::printf("%s %s: %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
  if (!o.ok) ++failures;
}

const char* kTableTwoLines[] = {
    "vande gurūṇāṃ caraṇāravinde",
    "sandarśitasvātmasukhāvabodhe",
    "janasya ye jāṅgalikāyamāne",
    "saṃsārahālāhalamohaśāntyai",
};

Outcome table_two() {
  const std::vector<std::string> want = {"ggl ggl lgl gg", "ggl ggl lgl gg", "lgl ggl lgl gg", "ggl ggl lgl gg"};
  const std::vector<std::string> lines(std::begin(kTableTwoLines), std::end(kTableTwoLines));
  const Catalog& catalog = seed_catalog();
  const Composer composer(catalog);

  const auto t0 = Clock::now();
  const ScanReport scan = scan_lines(lines, CatalogView::all(catalog));
  CompositionRequest req;
  std::string prose;
  for (const auto& l : lines) prose += l + " ";
  req.prose = tokenize(prose);
  const CompositionResult r = composer.compose(req);
  const double ms = seconds_since(t0) * 1e3;

  std::string got;
  bool rows = scan.patterns.size() == want.size();
  for (std::size_t k = 0; k < scan.patterns.size(); ++k) {
    got += (k ? " / " : "") + scan.patterns[k].grouped();
    rows = rows && k < want.size() && scan.patterns[k].grouped() == want[k];
  }
  const bool verdict = scan.metre && scan.metre->exact && scan.metre->name == kUpajatiName;
  const bool composed = r.status == Status::kMatched && r.metre && r.metre->name == kUpajatiName;
  Outcome o;
  o.ok = rows && verdict && composed && ms < kTableTwoBudgetMs;
  o.detail = got + "; scan " + (scan.metre ? scan.metre->name : "-") + ", compose " +
             (r.metre ? r.metre->name : "-") + "; " + fixed(ms, 3) + " ms (limit " + fixed(kTableTwoBudgetMs, 0) + ")";
  return o;
}

Outcome worked_counts() {
  struct Case {
    const char* text;
    SetCounts want;
  };
  const Case cases[] = {
      {"idānīm atra ālasyam tyaktvā aham paṭhāmi ca likhāmi ca", {3, 5, 1, 0, 0}},
      {"ambaraḥ na atra asti parantu ambaraḥ anyatra asti ataḥ aham itaḥ tatra gacchāmi", {1, 4, 4, 4, 0}},
      {"kṛṣṇaḥ idānīm atra ālasyam tyaktvā paṭhati ca likhati ca", {2, 5, 1, 0, 1}},
  };
  Outcome o{true, ""};
  for (const Case& c : cases) {
    const SetCounts got = count_sets(tokenize(c.text).words);
    o.ok = o.ok && got == c.want;
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%d,%d,%d,%d,%d) ", got.n1, got.n2, got.n3, got.n5, got.n7);
    o.detail += buf;
  }
  return o;
}

Outcome sandhi_golden() {
  struct Case {
    const char* left;
    const char* right;
    std::optional<bool> dual;
    const char* text;
    WeightEffect effect;
  };
  const Case cases[] = {
      {"tat", "ṭīkā", std::nullopt, "taṭṭīkā", WeightEffect::kChangesWeight},
      {"phale", "atra", false, "phale'tra", WeightEffect::kRemovesSyllable},
      {"phale", "atra", true, "phale atra", WeightEffect::kNeutral},
      {"itaḥ", "ambaraḥ", std::nullopt, "ito'mbaraḥ", WeightEffect::kRemovesSyllable},
      {"tatra", "ambaraḥ", std::nullopt, "tatrāmbaraḥ", WeightEffect::kRemovesSyllable},
      {"ambaraḥ", "itaḥ", std::nullopt, "ambara itaḥ", WeightEffect::kChangesWeight},
      {"kṛṣṇaḥ", "aham", std::nullopt, "kṛṣṇo'ham", WeightEffect::kRemovesSyllable},
      {"kṛṣṇaḥ", "idānīm", std::nullopt, "kṛṣṇa idānīm", WeightEffect::kChangesWeight},
      {"kau", "ūrudvayam", std::nullopt, "kāvūrudvayam", WeightEffect::kChangesWeight},
      {"ahaḥ", "ahaḥ", std::nullopt, "aharahaḥ", WeightEffect::kChangesWeight},
  };
  Outcome o{true, ""};
  int good = 0;
  for (const Case& c : cases) {
    const JoinResult r = join(tokenize_word(c.left), tokenize_word(c.right), c.dual);
    std::string text;
    for (std::size_t i = 0; i < r.words.size(); ++i) text += (i ? " " : "") + r.words[i].render();
    if (text == c.text && r.resolution.weight_effect == c.effect) {
      ++good;
    } else {
      o.ok = false;
      o.detail += std::string(c.left) + "+" + c.right + " -> " + text + " (" +
                  to_string(r.resolution.weight_effect) + "); ";
    }
  }
  o.detail += std::to_string(good) + "/" + std::to_string(std::size(cases)) + " junctions exact";
  return o;
}

Outcome band_soundness() {
  std::mt19937 rng(2024);
  const auto& lex = padya::testing::seed_lexicon();
  const auto t0 = Clock::now();
  long orders = 0;
  long violations = 0;
  // Every order under both blanket dual answers.
  const DualLookup never = [](const Word&, const Word&) -> std::optional<bool> { return false; };
  const DualLookup always = [](const Word&, const Word&) -> std::optional<bool> { return true; };
  for (int trial = 0; trial < kBandTrials; ++trial) {
    const int n = 1 + static_cast<int>(rng() % kBandMaxWords);
    std::vector<Word> ws;
    for (int k = 0; k < n; ++k) ws.push_back(tokenize_word(lex[rng() % lex.size()]));
    const BandReport b = compute_band(ws);
    std::vector<std::size_t> perm(ws.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Word> ordered(ws.size());
    do {
      for (std::size_t i = 0; i < perm.size(); ++i) ordered[i] = ws[perm[i]];
      for (const DualLookup* look : {&never, &always}) {
        const int v = static_cast<int>(apply_sequence(ordered, *look).vowel_count());
        if (v < b.min_syllables || v > b.max_syllables) ++violations;
      }
      ++orders;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  const double s = seconds_since(t0);
  Outcome o;
  o.ok = violations == 0 && s < kBandSoundnessBudgetS;
  o.detail = std::to_string(kBandTrials) + " inputs, " + std::to_string(orders) + " orders, " +
             std::to_string(violations) + " violations; " + fixed(s, 2) + " s (limit " + fixed(kBandSoundnessBudgetS, 0) + ")";
  return o;
}

Outcome pruning() {
  const Catalog c = padya::testing::synthetic_uniform_catalog();
  const BandReport b = band_from(48, 4);
  const CatalogView kept = band_filter(c, b.pada_min(), b.pada_max());
  bool only_band = true;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const int q = kept[i].syllables_per_pada;
    only_band = only_band && q >= 11 && q <= 12;
  }
  const double reduction = 1.0 - static_cast<double>(kept.size()) / static_cast<double>(c.size());
  Outcome o;
  o.ok = b.pada_min() == 11 && b.pada_max() == 12 && kept.size() == 10 && only_band && reduction >= kMinPruning;
  o.detail = "band [" + std::to_string(b.pada_min()) + "," + std::to_string(b.pada_max()) + "], kept " +
             std::to_string(kept.size()) + "/" + std::to_string(c.size()) + ", reduction " +
             fixed(reduction * 100, 1) + "%";
  return o;
}

// Inputs of up to kOracleMaxWords words: pramāṇikā verses cut into words and
// shuffled, and random distinct lexicon words.
std::vector<std::string> oracle_inputs() {
  std::mt19937 rng(4242);
  const auto& lex = padya::testing::seed_lexicon();
  std::vector<std::string> out;
  const std::string q = "lglglglg";
  for (int trial = 0; trial < kOracleTrials; ++trial) {
    const int n = 2 + static_cast<int>(rng() % (kOracleMaxWords - 1));
    std::vector<std::string> ws;
    if (trial % 2 == 0 && n >= 3) {
      ws = padya::testing::words_for_pattern(q + q + q + q, n, rng);
      std::shuffle(ws.begin(), ws.end(), rng);
    } else {
      while (static_cast<int>(ws.size()) < n) {
        const auto& w = lex[rng() % lex.size()];
        if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
      }
    }
    out.push_back(padya::testing::join_words(ws));
  }
  return out;
}

Outcome oracle_equivalence(std::vector<CompositionResult>& results) {
  const Composer composer(seed_catalog());
  int agree = 0;
  int matched = 0;
  std::string first_bad;
  for (const std::string& text : oracle_inputs()) {
    const auto words = tokenize(text).words;
    const auto oracle = padya::testing::brute_force_compose(seed_catalog(), words);
    CompositionRequest req;
    req.prose = tokenize(text);
    CompositionResult r = composer.compose(req);
    bool same = (r.status == Status::kMatched) == oracle.matched && r.metre.has_value();
    if (same && oracle.matched) same = r.metre->name == oracle.name;
    if (same && !oracle.matched) same = r.metre->distance == oracle.distance;
    if (same) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = "; first mismatch: " + text;
    }
    matched += oracle.matched;
    results.push_back(std::move(r));
  }
  Outcome o;
  o.ok = agree == kOracleTrials;
  o.detail = std::to_string(agree) + "/" + std::to_string(kOracleTrials) + " verdicts agree (" +
             std::to_string(matched) + " exact)" + first_bad;
  return o;
}

// Pāda lines of a result's verse text scanned on their own.
std::vector<LgPattern> rescan(const CompositionResult& r) {
  std::vector<LgPattern> out;
  std::size_t from = 0;
  while (from <= r.verse_text.size()) {
    const auto nl = r.verse_text.find('\n', from);
    const std::string line = r.verse_text.substr(from, nl == std::string::npos ? std::string::npos : nl - from);
    out.push_back(line.empty() ? LgPattern() : scan_pada(line));
    if (nl == std::string::npos) break;
    from = nl + 1;
  }
  return out;
}

Outcome round_trip(std::vector<CompositionResult> results) {
  // Add in-order verses that must match on the first order.
  const Composer composer(seed_catalog());
  std::mt19937 rng(777);
  for (int k = 0; k < 20; ++k) {
    const std::string q = k % 2 ? "lglglglg" : "ggggggggggg";
    CompositionRequest req;
    req.prose = tokenize(padya::testing::join_words(
        padya::testing::words_for_pattern(q + q + q + q, 3 + static_cast<int>(rng() % 5), rng)));
    results.push_back(composer.compose(req));
  }
  CompositionRequest t2;
  std::string prose;
  for (const char* l : kTableTwoLines) prose += std::string(l) + " ";
  t2.prose = tokenize(prose);
  results.push_back(composer.compose(t2));

  int matched = 0;
  int closed = 0;
  for (const auto& r : results) {
    if (r.status != Status::kMatched) continue;
    ++matched;
    const auto lines = rescan(r);
    bool ok = lines.size() == r.metre->padas.size();
    for (std::size_t k = 0; ok && k < lines.size(); ++k) ok = lines[k] == r.metre->padas[k];
    closed += ok;
  }
  Outcome o;
  o.ok = matched > 0 && closed == matched;
  o.detail = std::to_string(closed) + "/" + std::to_string(matched) + " matched verses re-scan to their pattern";
  return o;
}

Outcome formula_consistency() {
  long tuples = 0;
  long agree = 0;
  long gap_disagree = 0;
  long unexplained = 0;
  long s7_unflagged = 0;
  for (int n1 = 0; n1 <= 6; ++n1) {
    for (int n2 = 0; n2 <= 6; ++n2) {
      for (int n3 = 0; n3 <= 6; ++n3) {
        for (int n5 = 0; n5 <= 6; ++n5) {
          for (int n7 = 0; n7 <= 6; ++n7) {
            ++tuples;
            const SetCounts c{n1, n2, n3, n5, n7};
            const FormulaGap gap = classify_gap(c);
            if (n1 == n2 && n5 == 0 && n7 > 0 && gap != FormulaGap::kEqualPairsWithS7) ++s7_unflagged;
            if (compute_r(n1, n2, n3, n5, n7) == compute_r_compositional(c)) {
              ++agree;
            } else if (gap != FormulaGap::kNone) {
              ++gap_disagree;
            } else {
              ++unexplained;
            }
          }
        }
      }
    }
  }
  // The gap must surface in an actual report too.
  const BandReport b = compute_band(tokenize("aham tatra kṛṣṇaḥ").words);
  const bool reported = b.gap == FormulaGap::kEqualPairsWithS7 && !b.diagnostics.empty();
  Outcome o;
  o.ok = unexplained == 0 && s7_unflagged == 0 && reported;
  o.detail = std::to_string(tuples) + " tuples: " + std::to_string(agree) + " agree, " +
             std::to_string(gap_disagree) + " differ inside reported gaps, " + std::to_string(unexplained) +
             " unexplained; n1=n2,n5=0,n7>0 flagged " + (s7_unflagged ? "incompletely" : "everywhere") +
             "; band report " + (reported ? "carries" : "lacks") + " the gap";
  return o;
}

}  // namespace

int main() {
  report("table-two", table_two());
  report("worked-counts", worked_counts());
  report("sandhi-golden", sandhi_golden());
  report("band-soundness", band_soundness());
  report("pruning", pruning());
  std::vector<CompositionResult> results;
  report("oracle-equivalence", oracle_equivalence(results));
  report("round-trip", round_trip(std::move(results)));
  report("formula-consistency", formula_consistency());
  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
