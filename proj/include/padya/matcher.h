#pragma once

// Matching scanned pādas against catalog records: exact wildcard matches,
// the Upajāti mixture, jāti mātrā schemes, and closest-record search.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padya/catalog.h"
#include "padya/kernels/edit_distance.h"
#include "padya/phonology.h"

namespace padya {

inline constexpr std::string_view kUpajatiName = "Upajāti";
inline constexpr std::string_view kIndravajraName = "Indravajrā";
inline constexpr std::string_view kUpendravajraName = "Upendravajrā";

struct MatchResult {
  std::string name;
  Family family = Family::kSama;
  const MetreRecord* record = nullptr;  // null for Upajāti
  bool exact = false;
  int distance = 0;
  int padas_differing = 0;
  std::vector<LgPattern> padas;      // query pattern per pāda (or jāti segment)
  std::vector<LgPattern> templates;  // template per pāda; empty for jāti
  std::vector<LgPattern> resolved;   // padas with * settled by the template
  std::vector<int> matras;           // jāti: mātrā count per segment
  std::vector<int> split;            // syllables per pāda / segment
};

// Orders results exact-first, then by distance, pādas differing and name.
bool better_match(const MatchResult& a, const MatchResult& b);

// Reference Wagner-Fischer distance; '*' on either side matches l and g.
int edit_distance(const LgPattern& a, const LgPattern& b);

// One edit step of an optimal alignment of `query` onto `tmpl`.
struct EditOp {
  enum Kind { kMatch, kSubstitute, kInsert, kDelete } kind;
  int query_pos;     // -1 for an insertion
  int template_pos;  // -1 for a deletion
};
std::vector<EditOp> align(const LgPattern& query, const LgPattern& tmpl);

// True when lengths agree and every position is wildcard-compatible.
bool matches_exactly(const LgPattern& pada, const LgPattern& tmpl);
// `pada` with each * replaced by the template's symbol (kept if both are *).
LgPattern resolve_against(const LgPattern& pada, const LgPattern& tmpl);

// Packs the distinct pāda templates of every varṇa record in a view into a
// kernel bank so one kernel call scores a pāda against all of them.
class TemplateIndex {
 public:
  TemplateIndex() = default;
  explicit TemplateIndex(const CatalogView& view);

  std::size_t slot_count() const { return patterns_.size(); }
  const LgPattern& slot_pattern(std::size_t slot) const { return patterns_[slot]; }
  // Slot per quarter for the record at view position `pos` (empty for jāti).
  std::span<const std::size_t> quarter_slots(std::size_t pos) const { return quarter_slots_[pos]; }

  // `out` must hold slot_count() entries.
  void distances(const LgPattern& pada, std::span<std::int32_t> out) const;

 private:
  kernels::TemplateBank bank_;
  std::vector<LgPattern> patterns_;
  std::vector<std::vector<std::size_t>> quarter_slots_;
};

// Indravajrā and Upendravajrā in the view, when both are present.
struct UpajatiPair {
  const MetreRecord* indravajra = nullptr;
  const MetreRecord* upendravajra = nullptr;
  bool available() const { return indravajra && upendravajra; }
};
UpajatiPair find_upajati_pair(const CatalogView& view);

// Scores one varṇa record against four pādas, quarter by quarter.
MatchResult evaluate_varna(const MetreRecord& record, std::span<const LgPattern> padas);
// Same with per-pāda distances already known (index = quarter).
MatchResult evaluate_varna(const MetreRecord& record, std::span<const LgPattern> padas,
                           std::span<const int> distances);
// Upajāti over four pādas; `dist_i` / `dist_u` are the per-pāda distances to
// the two constituents. A mixture needs at least one pāda of each kind; an
// all-one-kind reading is left to the constituent record.
MatchResult evaluate_upajati(const UpajatiPair& pair, std::span<const LgPattern> padas,
                             std::span<const int> dist_i, std::span<const int> dist_u);
MatchResult evaluate_upajati(const UpajatiPair& pair, std::span<const LgPattern> padas);

struct SegmentFit {
  int lo = 0;         // mātrā range over all * readings
  int hi = 0;
  bool total_ok = false;
  bool groups_ok = false;
  int matras = 0;     // mātrās of the chosen reading
  LgPattern resolved;
};
// Fits one segment against a mātrā target. With a group size the segment
// must also cut into consecutive groups of that many mātrās with no guru
// straddling a cut (a shorter remainder may close the segment).
SegmentFit fit_segment(const LgPattern& segment, int target, int group_size);

// Scores a jāti record against segments already cut to the scheme's count.
MatchResult evaluate_jati(const MetreRecord& record, std::span<const LgPattern> segments);

// Catalog-level queries over a view. Lists are sorted by better_match.
std::vector<MatchResult> match_sama(const LgPattern& pada, const CatalogView& view);
// Empty unless every pāda matches a constituent exactly.
std::vector<MatchResult> match_upajati(std::span<const LgPattern> padas, const CatalogView& view);
std::vector<MatchResult> match_ardhasama(std::span<const LgPattern> padas, const CatalogView& view);
std::vector<MatchResult> match_visama(std::span<const LgPattern> padas, const CatalogView& view);
// Segments may be the scheme's own count, four pādas for a two-half scheme
// (joined pairwise), or a prefix of the scheme (a partial candidate).
std::vector<MatchResult> match_jati(std::span<const LgPattern> segments, const CatalogView& view);

// Record nearest to four pādas (or to one pāda when a single pattern is
// given; only varṇa templates are considered then). Throws
// kEmptyCatalogView when nothing in the view can be compared.
MatchResult closest(std::span<const LgPattern> padas, const CatalogView& view);

}  // namespace padya
