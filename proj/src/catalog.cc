#include "padya/catalog.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "padya/error.h"

#ifndef PADYA_DATA_DIR
#define PADYA_DATA_DIR "data"
#endif

namespace padya {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view s, std::size_t line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(s) + "'",
                line_no);
  }
  return value;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": " + what, line_no);
}

MatraScheme parse_scheme(std::string_view s, std::size_t line_no) {
  MatraScheme scheme;
  const std::size_t slash = s.find('/');
  std::string_view totals = s.substr(0, slash);
  if (slash != std::string_view::npos) {
    std::string_view group = trim(s.substr(slash + 1));
    if (group.empty() || group.front() != 'g') parse_error(line_no, "group spec must look like g4");
    scheme.group_size = parse_int(group.substr(1), line_no);
    if (scheme.group_size != 4 && scheme.group_size != 6 && scheme.group_size != 8 &&
        scheme.group_size != 10) {
      parse_error(line_no, "mātrā groups are 4, 6, 8 or 10");
    }
  }
  for (std::string_view t : split(totals, '+')) {
    const int v = parse_int(t, line_no);
    if (v <= 0) parse_error(line_no, "segment totals must be positive");
    scheme.segment_totals.push_back(v);
  }
  if (scheme.segment_totals.size() != 2 && scheme.segment_totals.size() != 4) {
    parse_error(line_no, "a jati scheme has 2 halves or 4 quarters");
  }
  return scheme;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::kSama: return "sama";
    case Family::kArdhasama: return "ardhasama";
    case Family::kVisama: return "visama";
    case Family::kJati: return "jati";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  if (s == "sama") return Family::kSama;
  if (s == "ardhasama") return Family::kArdhasama;
  if (s == "visama") return Family::kVisama;
  if (s == "jati") return Family::kJati;
  return std::nullopt;
}

FamilySet all_families() {
  return {Family::kSama, Family::kArdhasama, Family::kVisama, Family::kJati};
}

int MatraScheme::total() const {
  return std::accumulate(segment_totals.begin(), segment_totals.end(), 0);
}

std::vector<LgPattern> MetreRecord::quarter_templates() const {
  switch (family) {
    case Family::kSama:
      return {pada_patterns[0], pada_patterns[0], pada_patterns[0], pada_patterns[0]};
    case Family::kArdhasama:
      return {pada_patterns[0], pada_patterns[1], pada_patterns[0], pada_patterns[1]};
    case Family::kVisama:
      return pada_patterns;
    case Family::kJati:
      return {};
  }
  return {};
}

std::vector<int> MetreRecord::quarter_lengths() const {
  std::vector<int> out;
  for (const auto& t : quarter_templates()) out.push_back(static_cast<int>(t.size()));
  return out;
}

int MetreRecord::total_syllables() const {
  const auto lengths = quarter_lengths();
  return std::accumulate(lengths.begin(), lengths.end(), 0);
}

std::pair<int, int> MetreRecord::syllable_range() const {
  if (is_varna()) {
    const int t = total_syllables();
    return {t, t};
  }
  int lo = 0;
  for (int m : matra_scheme->segment_totals) lo += (m + 1) / 2;
  return {lo, matra_scheme->total()};
}

MetreRecord parse_record(std::string_view line, std::size_t line_no) {
  const auto fields = split(line, '|');
  if (fields.size() < 4 || fields.size() > 5) parse_error(line_no, "expected 4 or 5 '|' separated fields");

  MetreRecord rec;
  rec.name = std::string(fields[0]);
  if (rec.name.empty()) parse_error(line_no, "empty metre name");
  const auto family = parse_family(fields[1]);
  if (!family) parse_error(line_no, "unknown family '" + std::string(fields[1]) + "'");
  rec.family = *family;
  if (fields.size() == 5 && !fields[4].empty()) {
    for (auto a : split(fields[4], ',')) {
      if (!a.empty()) rec.aliases.emplace_back(a);
    }
  }

  if (rec.family == Family::kJati) {
    rec.matra_scheme = parse_scheme(fields[2], line_no);
    if (!fields[3].empty()) parse_error(line_no, "jati records carry no l/g templates");
    return rec;
  }

  const auto counts = split(fields[2], ',');
  const auto patterns = split(fields[3], ',');
  const std::size_t expected = rec.family == Family::kSama ? 1 : rec.family == Family::kArdhasama ? 2 : 4;
  if (counts.size() != expected || patterns.size() != expected) {
    parse_error(line_no, std::string(to_string(rec.family)) + " needs " + std::to_string(expected) +
                             " count(s) and template(s)");
  }
  for (std::size_t i = 0; i < expected; ++i) {
    const int count = parse_int(counts[i], line_no);
    if (count < 1 || count > kMaxSyllablesPerPada) {
      parse_error(line_no, "syllables per pāda must be 1.." + std::to_string(kMaxSyllablesPerPada) +
                               " (daṇḍaka metres are not supported)");
    }
    LgPattern p;
    try {
      p = LgPattern::parse(patterns[i]);
    } catch (const Error& e) {
      parse_error(line_no, e.what());
    }
    if (static_cast<int>(p.size()) != count) {
      throw Error(ErrorCode::kPatternLengthMismatch,
                  "line " + std::to_string(line_no) + ": " + rec.name + " template has " +
                      std::to_string(p.size()) + " symbols, count says " + std::to_string(count),
                  line_no);
    }
    rec.pada_patterns.push_back(std::move(p));
  }
  if (rec.family == Family::kSama) rec.syllables_per_pada = static_cast<int>(rec.pada_patterns[0].size());
  return rec;
}

std::string format_record(const MetreRecord& record) {
  std::string out = record.name + "|" + to_string(record.family) + "|";
  if (record.family == Family::kJati) {
    const auto& s = *record.matra_scheme;
    for (std::size_t i = 0; i < s.segment_totals.size(); ++i) {
      if (i) out += "+";
      out += std::to_string(s.segment_totals[i]);
    }
    if (s.group_size) out += "/g" + std::to_string(s.group_size);
    out += "|";
  } else {
    std::string counts;
    std::string patterns;
    for (const auto& p : record.pada_patterns) {
      if (!counts.empty()) {
        counts += ",";
        patterns += ",";
      }
      counts += std::to_string(p.size());
      patterns += p.grouped();
    }
    out += counts + "|" + patterns;
  }
  out += "|";
  for (std::size_t i = 0; i < record.aliases.size(); ++i) {
    if (i) out += ",";
    out += record.aliases[i];
  }
  return out;
}

Catalog Catalog::parse(std::string_view text) {
  Catalog catalog;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    MetreRecord rec = parse_record(line, line_no);
    try {
      catalog.add(std::move(rec));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return catalog;
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void Catalog::add(MetreRecord record) {
  for (const auto& r : records_) {
    if (r.name == record.name && r.family == record.family) {
      throw Error(ErrorCode::kDuplicateEntry, "duplicate metre " + record.name);
    }
  }
  records_.push_back(std::move(record));
}

const MetreRecord* Catalog::find(std::string_view name) const {
  for (const auto& r : records_) {
    if (r.name == name) return &r;
    if (std::find(r.aliases.begin(), r.aliases.end(), name) != r.aliases.end()) return &r;
  }
  return nullptr;
}

bool Catalog::operator==(const Catalog& other) const {
  if (records_.size() != other.records_.size()) return false;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (format_record(records_[i]) != format_record(other.records_[i])) return false;
  }
  return true;
}

CatalogView CatalogView::all(const Catalog& catalog) {
  std::vector<std::size_t> idx(catalog.size());
  std::iota(idx.begin(), idx.end(), 0);
  return CatalogView(&catalog, std::move(idx));
}

bool CatalogView::contains(std::size_t catalog_index) const {
  return std::find(indices_.begin(), indices_.end(), catalog_index) != indices_.end();
}

CatalogView CatalogView::restrict_families(const FamilySet& families) const {
  std::vector<std::size_t> idx;
  for (std::size_t i : indices_) {
    if (families.count(catalog_->records()[i].family)) idx.push_back(i);
  }
  return CatalogView(catalog_, std::move(idx));
}

CatalogView band_filter(const CatalogView& view, int min_syll, int max_syll) {
  if (min_syll < 1 || max_syll < min_syll) {
    throw Error(ErrorCode::kInvalidArgument, "band must satisfy 1 <= min <= max");
  }
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < view.size(); ++k) {
    const MetreRecord& r = view[k];
    const auto [lo, hi] = r.syllable_range();
    // Compare verse totals against 4 * per-pāda band.
    if (hi >= 4 * min_syll && lo <= 4 * max_syll) idx.push_back(view.indices()[k]);
  }
  return CatalogView(view.catalog(), std::move(idx));
}

CatalogView band_filter(const Catalog& catalog, int min_syll, int max_syll) {
  return band_filter(CatalogView::all(catalog), min_syll, max_syll);
}

std::filesystem::path default_catalog_path() {
  return std::filesystem::path(PADYA_DATA_DIR) / "metres.txt";
}

}  // namespace padya
