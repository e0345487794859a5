#pragma once

// Prose-to-verse search: band, catalog pruning, word orders, sandhi, scansion,
// quarter splits, matching and repair suggestions.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "padya/band.h"
#include "padya/catalog.h"
#include "padya/matcher.h"
#include "padya/permutations.h"
#include "padya/phonology.h"
#include "padya/sandhi.h"
#include "padya/text_codec.h"

namespace padya {

// A sandhi-applied word stream weighed once for every possible pāda cut.
// inner[i] is syllable i's weight inside a pāda, final[i] its weight when a
// pāda ends right after it.
struct ScannedVerse {
  std::vector<Letter> letters;
  std::vector<std::size_t> word_start;  // letter index of each word's first letter
  std::vector<std::size_t> vowel_at;    // letter index of each syllable's vowel
  std::vector<std::size_t> cut;         // where a pāda ending after syllable i stops
  std::vector<Symbol> inner;
  std::vector<Symbol> final;

  std::size_t size() const { return vowel_at.size(); }
  // Pattern of syllables [start, start + len) read as one pāda.
  LgPattern pada(std::size_t start, std::size_t len) const;
  std::vector<LgPattern> padas(std::span<const int> lengths) const;
  // Text of each pāda; the cut falls on a word boundary when one lies
  // between the two vowels, otherwise right after the vowel and its signs.
  std::vector<std::string> lines(std::span<const int> lengths) const;
};

ScannedVerse scan_verse(std::span<const Word> words);

enum class Mode { kBatch, kInteractive };
enum class Status { kMatched, kClosestOnly, kNeedsInput };

const char* to_string(Mode m);
const char* to_string(Status s);

// Dual-number answers keyed by (left surface, right surface).
using DualAnswers = std::map<std::pair<std::string, std::string>, bool>;

inline constexpr std::size_t kDefaultMaxPermutations = 40320;

struct CompositionRequest {
  ProseInput prose;
  Mode mode = Mode::kBatch;
  std::size_t max_permutations = kDefaultMaxPermutations;
  FamilySet families = all_families();
  DualAnswers overrides;
};

struct Suggestion {
  enum class Kind { kWordSwap, kWordReplace, kSyllableFlipHint };
  Kind kind = Kind::kSyllableFlipHint;
  std::string detail;
  LgPattern required_pattern;
  int pada = -1;      // 0-based, -1 when not tied to one pāda
  int position = -1;  // syllable within the pāda
  std::vector<std::string> words;  // input words the suggestion names
};

const char* to_string(Suggestion::Kind k);

struct SyllableSpan {
  std::size_t offset = 0;  // byte offset into verse_text
  std::size_t length = 0;
  std::string text;
  Symbol weight = Symbol::kLaghu;
};

struct PadaView {
  std::string text;
  LgPattern pattern;
  std::vector<SyllableSpan> syllables;
};

struct CompositionResult {
  Status status = Status::kClosestOnly;
  std::string verse_text;  // pādas separated by '\n'
  std::vector<PadaView> padas;
  std::optional<MatchResult> metre;
  Arrangement permutation;
  std::vector<std::string> permuted_words;
  std::vector<JunctionResolution> sandhi_trace;
  std::vector<PendingQuestion> pending_questions;
  BandReport band;
  std::vector<Suggestion> suggestions;
  std::size_t permutations_tried = 0;
  std::size_t catalog_entries_scanned = 0;           // with the band filter
  std::size_t catalog_entries_scanned_unbanded = 0;  // same search, no filter
  std::size_t closest_rechecks = 0;  // out-of-band records re-scored for closest
  bool budget_exhausted = false;
  std::vector<std::string> notes;
  std::vector<CompositionResult> groups;  // oversize inputs: one per verse
};

// Quarter splits tried for a verse of `total` syllables, in order: equal
// quarters, then (a,b,a,b) with a≠b inside [pada_min, pada_max] by
// ascending a, then the shapes of viṣama records in `view`.
std::vector<std::array<int, 4>> split_quarters(int total, int pada_min, int pada_max,
                                               const CatalogView& view);

// Word pairs that can meet at a pragṛhya-eligible junction under some order.
std::vector<PendingQuestion> pragrhya_pairs(std::span<const Word> words, const DualAnswers& answers);

class Composer {
 public:
  explicit Composer(const Catalog& catalog) : catalog_(&catalog) {}

  // Throws kEmptyInput for empty prose and kInvalidArgument for a zero budget.
  CompositionResult compose(const CompositionRequest& request) const;

  // Max/4 > 26: consecutive word groups of about 32 syllables each, every
  // group composed on its own against Anuṣṭubh-sized and jāti records.
  CompositionResult oversize_strategy(const CompositionRequest& request) const;

  const Catalog& catalog() const { return *catalog_; }

 private:
  CompositionResult compose_one(const CompositionRequest& request, bool allow_oversize) const;

  const Catalog* catalog_;
};

// Builds flip hints, word swaps and word replacements for a non-exact match.
// `words` are the input words in the order that produced `verse`.
// Swaps are kept only when the swapped order re-scans to an exact match of
// some metre in `view`.
std::vector<Suggestion> make_suggestions(const MatchResult& best, std::span<const Word> words,
                                         const ScannedVerse& verse,
                                         std::span<const JunctionResolution> trace,
                                         const DualAnswers& answers, const CatalogView& view);

// Exact match of `verse` against the same metre as `like` (record shape,
// Upajāti mixture, or any jāti segmentation), if there is one.
std::optional<MatchResult> exact_same_metre(const MatchResult& like, const ScannedVerse& verse,
                                            const CatalogView& view);

// Sandhi + scansion of one word order, with batch-default dual answers.
struct RealizedOrder {
  std::vector<Word> words;
  SandhiOutcome outcome;
  ScannedVerse verse;
};
RealizedOrder realize(std::span<const Word> words, const Arrangement& order, const DualAnswers& answers);

}  // namespace padya
