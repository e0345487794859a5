#pragma once

// Metre catalog: records, the line-oriented catalog file, and band views.
//
// File grammar (UTF-8, one record per line, '#' starts a comment line):
//
//   name|family|counts-or-scheme|patterns|aliases
//
//   family    sama | ardhasama | visama | jati
//   counts    varṇa: syllables per template, comma separated (1, 2 or 4)
//   scheme    jāti:  segment mātrā totals joined by '+', optional "/gN"
//             group size, e.g. "30+27/g4"
//   patterns  varṇa: l/g/* templates, comma separated, spaces ignored;
//             jāti: empty
//   aliases   optional, comma separated

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "padya/phonology.h"

namespace padya {

enum class Family { kSama, kArdhasama, kVisama, kJati };

const char* to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

using FamilySet = std::set<Family>;
FamilySet all_families();

inline constexpr int kMaxSyllablesPerPada = 26;

struct MatraScheme {
  std::vector<int> segment_totals;  // 2 halves or 4 quarters
  int group_size = 0;               // 0: no group constraint

  int total() const;
};

struct MetreRecord {
  std::string name;
  Family family = Family::kSama;
  std::vector<LgPattern> pada_patterns;  // sama 1, ardhasama 2, visama 4, jati 0
  int syllables_per_pada = 0;            // sama only
  std::optional<MatraScheme> matra_scheme;
  std::vector<std::string> aliases;

  bool is_varna() const { return family != Family::kJati; }
  // Template for each of the four quarters (empty for jāti).
  std::vector<LgPattern> quarter_templates() const;
  std::vector<int> quarter_lengths() const;
  int total_syllables() const;  // varṇa only
  // Inclusive verse syllable range a record can take.
  std::pair<int, int> syllable_range() const;
};

class Catalog {
 public:
  Catalog() = default;

  static Catalog parse(std::string_view text);
  static Catalog load(const std::filesystem::path& path);

  // Throws kDuplicateEntry on a repeated (name, family).
  void add(MetreRecord record);

  const std::vector<MetreRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  const MetreRecord* find(std::string_view name) const;

  bool operator==(const Catalog& other) const;

 private:
  std::vector<MetreRecord> records_;
};

// Parses one catalog line; `line_no` is reported in errors.
MetreRecord parse_record(std::string_view line, std::size_t line_no);
std::string format_record(const MetreRecord& record);

// Index subset of a catalog. The catalog must outlive the view.
class CatalogView {
 public:
  CatalogView() = default;
  CatalogView(const Catalog* catalog, std::vector<std::size_t> indices)
      : catalog_(catalog), indices_(std::move(indices)) {}

  static CatalogView all(const Catalog& catalog);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  const MetreRecord& operator[](std::size_t i) const { return catalog_->records()[indices_[i]]; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  const Catalog* catalog() const { return catalog_; }
  bool contains(std::size_t catalog_index) const;

  CatalogView restrict_families(const FamilySet& families) const;

 private:
  const Catalog* catalog_ = nullptr;
  std::vector<std::size_t> indices_;
};

// Per-pāda syllable band. Varṇa records pass when their mean pāda length
// lies in [min_syll, max_syll]; jāti records pass when their feasible
// syllable range (a segment of M mātrās spans ceil(M/2)..M syllables)
// meets the band.
CatalogView band_filter(const Catalog& catalog, int min_syll, int max_syll);
CatalogView band_filter(const CatalogView& view, int min_syll, int max_syll);

// Path of the seed catalog shipped with the build.
std::filesystem::path default_catalog_path();

}  // namespace padya
