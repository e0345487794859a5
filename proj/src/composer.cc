#include "padya/composer.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <tuple>

#include "padya/error.h"

namespace padya {
namespace {

bool is_sign(const Letter& l) {
  const Category c = l.category();
  return c == Category::kAnusvara || c == Category::kVisarga || c == Category::kMark;
}

int lo_of(Symbol s) { return s == Symbol::kGuru ? 2 : 1; }
int hi_of(Symbol s) { return s == Symbol::kLaghu ? 1 : 2; }

std::vector<int> balanced(int total, int parts) {
  std::vector<int> out(static_cast<std::size_t>(parts), total / parts);
  for (int k = 0; k < total % parts; ++k) ++out[static_cast<std::size_t>(k)];
  return out;
}

std::vector<int> starts_of(std::span<const int> lengths) {
  std::vector<int> out;
  int s = 0;
  for (int l : lengths) {
    out.push_back(s);
    s += l;
  }
  return out;
}

std::vector<int> to_vector(const std::array<int, 4>& a) { return {a.begin(), a.end()}; }

// Last syllable index covered by each non-empty pāda.
std::string letters_text(const ScannedVerse& v, std::size_t from, std::size_t to,
                         std::vector<std::size_t>* offsets, std::size_t base) {
  std::string out;
  for (std::size_t p = from; p < to; ++p) {
    if (p != from && std::binary_search(v.word_start.begin(), v.word_start.end(), p)) out.push_back(' ');
    if (offsets) (*offsets)[p] = base + out.size();
    out += v.letters[p].glyph;
  }
  return out;
}

// Letter range [first, end) of syllable i inside a pāda that starts at
// letter `line_from` and ends at letter `line_to`.
std::pair<std::size_t, std::size_t> syllable_letters(const ScannedVerse& v, std::size_t i,
                                                     std::size_t pada_first, std::size_t pada_last,
                                                     std::size_t line_from, std::size_t line_to) {
  auto end_of = [&](std::size_t j) {
    if (j == pada_last) return line_to;
    std::size_t e = v.vowel_at[j] + 1;
    while (e < v.vowel_at[j + 1] && is_sign(v.letters[e])) ++e;
    return e;
  };
  const std::size_t first = i == pada_first ? line_from : end_of(i - 1);
  return {first, end_of(i)};
}

std::string syllable_text(const ScannedVerse& v, std::size_t i) {
  std::size_t first = 0;
  if (i > 0) {
    first = v.vowel_at[i - 1] + 1;
    while (first < v.vowel_at[i] && is_sign(v.letters[first])) ++first;
  }
  std::size_t end = v.vowel_at[i] + 1;
  const std::size_t limit = i + 1 < v.size() ? v.vowel_at[i + 1] : v.letters.size();
  while (end < limit && is_sign(v.letters[end])) ++end;
  if (i + 1 == v.size()) end = v.letters.size();
  std::string s;
  for (std::size_t p = first; p < end; ++p) s += v.letters[p].glyph;
  return s;
}

struct Prefix {
  std::vector<int> lo;
  std::vector<int> hi;
  explicit Prefix(const ScannedVerse& v) : lo(v.size() + 1, 0), hi(v.size() + 1, 0) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      lo[i + 1] = lo[i] + lo_of(v.inner[i]);
      hi[i + 1] = hi[i] + hi_of(v.inner[i]);
    }
  }
  // Mātrā range of syllables [s, s + len) read as one segment.
  std::pair<int, int> range(const ScannedVerse& v, std::size_t s, std::size_t len) const {
    if (len == 0) return {0, 0};
    const std::size_t last = s + len - 1;
    return {lo[last] - lo[s] + lo_of(v.final[last]), hi[last] - hi[s] + hi_of(v.final[last])};
  }
};

int gap_to(int target, std::pair<int, int> r) {
  return target < r.first ? r.first - target : target > r.second ? target - r.second : 0;
}

// First segmentation (shortest leading segments first) that fits a jāti
// scheme exactly.
bool jati_exact_split(const ScannedVerse& v, const Prefix& pre, std::span<const int> targets,
                      int group, std::size_t seg, std::size_t start, std::vector<int>& lengths) {
  const std::size_t n = v.size();
  const std::size_t k = targets.size();
  const std::size_t remaining_segs = k - seg;
  if (remaining_segs == 1) {
    const std::size_t len = n - start;
    if (len == 0 || gap_to(targets[seg], pre.range(v, start, len)) != 0) return false;
    const SegmentFit fit = fit_segment(v.pada(start, len), targets[seg], group);
    if (!fit.groups_ok) return false;
    lengths.push_back(static_cast<int>(len));
    return true;
  }
  for (std::size_t len = 1; start + len + (remaining_segs - 1) <= n; ++len) {
    const auto r = pre.range(v, start, len);
    if (r.first > targets[seg]) break;
    if (r.second < targets[seg]) continue;
    const SegmentFit fit = fit_segment(v.pada(start, len), targets[seg], group);
    if (!fit.groups_ok) continue;
    lengths.push_back(static_cast<int>(len));
    if (jati_exact_split(v, pre, targets, group, seg + 1, start + len, lengths)) return true;
    lengths.pop_back();
  }
  return false;
}

// Closest-reading segmentation of a jāti record: every cut for two-segment
// schemes, the balanced split otherwise.
std::pair<std::pair<int, int>, std::vector<int>> jati_closest(const ScannedVerse& v, const Prefix& pre,
                                                              const MetreRecord& r) {
  const auto& targets = r.matra_scheme->segment_totals;
  const int group = r.matra_scheme->group_size;
  const int n = static_cast<int>(v.size());
  auto score = [&](const std::vector<int>& lengths) {
    int d = 0;
    int differing = 0;
    const auto starts = starts_of(lengths);
    for (std::size_t k = 0; k < lengths.size(); ++k) {
      const auto range = pre.range(v, static_cast<std::size_t>(starts[k]), static_cast<std::size_t>(lengths[k]));
      int dk = gap_to(targets[k], range);
      if (dk == 0) {
        const SegmentFit fit = fit_segment(v.pada(starts[k], lengths[k]), targets[k], group);
        if (!fit.groups_ok) dk = 1;
      }
      d += dk;
      if (dk) ++differing;
    }
    return std::pair(d, differing);
  };
  std::vector<int> best_split = balanced(n, static_cast<int>(targets.size()));
  auto best = score(best_split);
  if (targets.size() == 2 && n >= 2) {
    for (int c = 1; c < n; ++c) {
      std::vector<int> split = {c, n - c};
      const auto s = score(split);
      if (s < best) {
        best = s;
        best_split = split;
      }
    }
  }
  return {best, best_split};
}

struct Key {
  int distance = std::numeric_limits<int>::max();
  int differing = 0;
  std::string name;
  std::size_t rank = 0;
  bool operator<(const Key& o) const {
    return std::tie(distance, differing, name, rank) < std::tie(o.distance, o.differing, o.name, o.rank);
  }
};

struct Candidate {
  Key key;
  const MetreRecord* record = nullptr;  // null: Upajāti
  std::vector<int> split;
  Arrangement order;
  bool have = false;
};

void offer(Candidate& best, const Key& key, const MetreRecord* record, std::vector<int> split,
           const Arrangement& order) {
  if (best.have && !(key < best.key)) return;
  best.key = key;
  best.record = record;
  best.split = std::move(split);
  best.order = order;
  best.have = true;
}

// Per-order memo of pāda distances to every template slot.
class DistanceCache {
 public:
  DistanceCache(const ScannedVerse& v, const TemplateIndex& index) : v_(v), index_(index) {}
  const std::vector<std::int32_t>& at(int start, int len) {
    auto key = std::pair(start, len);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<std::int32_t> d(index_.slot_count());
    index_.distances(v_.pada(static_cast<std::size_t>(start), static_cast<std::size_t>(len)), d);
    return memo_.emplace(key, std::move(d)).first->second;
  }

 private:
  const ScannedVerse& v_;
  const TemplateIndex& index_;
  std::map<std::pair<int, int>, std::vector<std::int32_t>> memo_;
};

// Scores every record of `view` (plus Upajāti) against one word order.
class OrderScorer {
 public:
  OrderScorer(const CatalogView& view, const UpajatiPair& pair)
      : view_(view), index_(view), pair_(pair) {
    for (std::size_t pos = 0; pos < view.size(); ++pos) {
      if (pair.available() && &view[pos] == pair.indravajra) slot_i_ = index_.quarter_slots(pos)[0];
      if (pair.available() && &view[pos] == pair.upendravajra) slot_u_ = index_.quarter_slots(pos)[0];
    }
  }

  std::size_t entries() const { return view_.size() + (pair_.available() ? 1 : 0); }
  const TemplateIndex& index() const { return index_; }

  // Exact match in the contract order, or nothing.
  std::optional<std::pair<const MetreRecord*, std::vector<int>>> exact(
      const ScannedVerse& v, const Prefix& pre, DistanceCache& cache,
      const std::vector<std::array<int, 4>>& splits) const {
    const int n = static_cast<int>(v.size());
    for (const auto& split : splits) {
      const std::vector<int> lengths = to_vector(split);
      const auto starts = starts_of(lengths);
      auto zero_for = [&](std::size_t pos) {
        const auto slots = index_.quarter_slots(pos);
        for (std::size_t k = 0; k < 4; ++k) {
          if (cache.at(starts[k], lengths[k])[slots[k]] != 0) return false;
        }
        return true;
      };
      for (Family fam : {Family::kSama, Family::kArdhasama, Family::kVisama}) {
        for (std::size_t pos = 0; pos < view_.size(); ++pos) {
          const MetreRecord& r = view_[pos];
          if (r.family != fam) continue;
          const auto q = r.quarter_lengths();
          if (!std::equal(q.begin(), q.end(), lengths.begin())) continue;
          if (zero_for(pos)) return std::pair(&r, lengths);
        }
        if (fam == Family::kSama && pair_.available() && upajati_shape(lengths)) {
          if (upajati(v, cache, lengths).exact) return std::pair(nullptr, lengths);
        }
      }
    }
    for (std::size_t pos = 0; pos < view_.size(); ++pos) {
      const MetreRecord& r = view_[pos];
      if (r.family != Family::kJati || n == 0) continue;
      std::vector<int> lengths;
      if (jati_exact_split(v, pre, r.matra_scheme->segment_totals, r.matra_scheme->group_size, 0, 0,
                           lengths)) {
        return std::pair(&r, lengths);
      }
    }
    return std::nullopt;
  }

  // Offers every record's closest reading of this order to `best`.
  void closest(const ScannedVerse& v, const Prefix& pre, DistanceCache& cache, const Arrangement& order,
               std::size_t rank, Candidate& best, const std::vector<bool>* only = nullptr,
               std::size_t* evaluated = nullptr, bool with_upajati = true) const {
    const int n = static_cast<int>(v.size());
    for (std::size_t pos = 0; pos < view_.size(); ++pos) {
      if (only && !(*only)[pos]) continue;
      if (evaluated) ++*evaluated;
      const MetreRecord& r = view_[pos];
      if (r.family == Family::kJati) {
        auto [score, split] = jati_closest(v, pre, r);
        offer(best, Key{score.first, score.second, r.name, rank}, &r, std::move(split), order);
        continue;
      }
      const auto q = r.quarter_lengths();
      const std::vector<int> lengths = r.total_syllables() == n ? q : balanced(n, 4);
      const auto starts = starts_of(lengths);
      const auto slots = index_.quarter_slots(pos);
      Key key{0, 0, r.name, rank};
      for (std::size_t k = 0; k < 4; ++k) {
        const int d = cache.at(starts[k], lengths[k])[slots[k]];
        key.distance += d;
        if (d) ++key.differing;
      }
      offer(best, key, &r, lengths, order);
    }
    if (pair_.available() && with_upajati) {
      const int q = static_cast<int>(pair_.indravajra->pada_patterns[0].size());
      const std::vector<int> lengths = n == 4 * q ? std::vector<int>(4, q) : balanced(n, 4);
      const MatchResult m = upajati(v, cache, lengths);
      offer(best, Key{m.distance, m.padas_differing, m.name, rank}, nullptr, lengths, order);
    }
  }

 private:
  bool upajati_shape(const std::vector<int>& lengths) const {
    const int q = static_cast<int>(pair_.indravajra->pada_patterns[0].size());
    return std::all_of(lengths.begin(), lengths.end(), [q](int l) { return l == q; }) &&
           static_cast<int>(pair_.upendravajra->pada_patterns[0].size()) == q;
  }

  MatchResult upajati(const ScannedVerse& v, DistanceCache& cache, const std::vector<int>& lengths) const {
    const auto starts = starts_of(lengths);
    std::vector<int> di;
    std::vector<int> du;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& d = cache.at(starts[k], lengths[k]);
      di.push_back(d[slot_i_]);
      du.push_back(d[slot_u_]);
    }
    return evaluate_upajati(pair_, v.padas(lengths), di, du);
  }

  const CatalogView& view_;
  TemplateIndex index_;
  UpajatiPair pair_;
  std::size_t slot_i_ = 0;
  std::size_t slot_u_ = 0;
};

MatchResult describe(const Candidate& c, const ScannedVerse& v, const UpajatiPair& pair) {
  const auto padas = v.padas(c.split);
  if (!c.record) return evaluate_upajati(pair, padas);
  MatchResult m = c.record->is_varna() ? evaluate_varna(*c.record, padas) : evaluate_jati(*c.record, padas);
  return m;
}

void fill_verse(CompositionResult& out, const RealizedOrder& ro, const std::vector<int>& split) {
  const ScannedVerse& v = ro.verse;
  const auto starts = starts_of(split);
  std::vector<std::size_t> offsets(v.letters.size(), 0);
  std::size_t from = 0;
  out.verse_text.clear();
  out.padas.clear();
  for (std::size_t k = 0; k < split.size(); ++k) {
    if (k) out.verse_text.push_back('\n');
    PadaView pv;
    const std::size_t len = static_cast<std::size_t>(split[k]);
    const std::size_t first = static_cast<std::size_t>(starts[k]);
    std::size_t to = from;
    if (len) {
      const std::size_t last = first + len - 1;
      to = last + 1 == v.size() ? v.letters.size() : v.cut[last];
    }
    pv.text = letters_text(v, from, to, &offsets, out.verse_text.size());
    pv.pattern = v.pada(first, len);
    for (std::size_t i = first; i < first + len; ++i) {
      const auto [a, b] = syllable_letters(v, i, first, first + len - 1, from, to);
      SyllableSpan s;
      s.offset = offsets[a];
      s.length = offsets[b - 1] + v.letters[b - 1].glyph.size() - offsets[a];
      s.weight = pv.pattern[i - first];
      pv.syllables.push_back(std::move(s));
    }
    out.verse_text += pv.text;
    for (auto& s : pv.syllables) s.text = out.verse_text.substr(s.offset, s.length);
    out.padas.push_back(std::move(pv));
    from = to;
  }
}

std::vector<std::string> surfaces(std::span<const Word> words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.surface);
  return out;
}

// Syllable range [first, end) contributed by each word of a realized order;
// a removed syllable is charged to the left word of its junction.
std::vector<std::pair<int, int>> word_spans(std::span<const Word> words,
                                            std::span<const JunctionResolution> trace) {
  std::vector<std::pair<int, int>> out;
  int pos = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    int count = static_cast<int>(words[i].vowel_count());
    if (i < trace.size() && trace[i].applied_rule && trace[i].weight_effect == WeightEffect::kRemovesSyllable) {
      --count;
    }
    count = std::max(count, 0);
    out.emplace_back(pos, pos + count);
    pos += count;
  }
  return out;
}

LgPattern standalone_pattern(const Word& w) {
  if (w.vowel_count() == 0) return {};
  return weigh(syllabify(w.lexeme));
}

}  // namespace

// ---------------------------------------------------------------------------

LgPattern ScannedVerse::pada(std::size_t start, std::size_t len) const {
  std::vector<Symbol> s;
  s.reserve(len);
  for (std::size_t i = start; i < start + len; ++i) s.push_back(i + 1 == start + len ? final[i] : inner[i]);
  return LgPattern(std::move(s));
}

std::vector<LgPattern> ScannedVerse::padas(std::span<const int> lengths) const {
  std::vector<LgPattern> out;
  std::size_t s = 0;
  for (int l : lengths) {
    out.push_back(pada(s, static_cast<std::size_t>(l)));
    s += static_cast<std::size_t>(l);
  }
  return out;
}

std::vector<std::string> ScannedVerse::lines(std::span<const int> lengths) const {
  std::vector<std::string> out;
  std::size_t from = 0;
  std::size_t first = 0;
  for (int l : lengths) {
    const std::size_t len = static_cast<std::size_t>(l);
    std::size_t to = from;
    if (len) {
      const std::size_t last = first + len - 1;
      to = last + 1 == size() ? letters.size() : cut[last];
    }
    out.push_back(letters_text(*this, from, to, nullptr, 0));
    from = to;
    first += len;
  }
  return out;
}

ScannedVerse scan_verse(std::span<const Word> words) {
  ScannedVerse v;
  for (const auto& w : words) {
    if (w.lexeme.empty()) continue;
    v.word_start.push_back(v.letters.size());
    v.letters.insert(v.letters.end(), w.lexeme.begin(), w.lexeme.end());
  }
  for (std::size_t p = 0; p < v.letters.size(); ++p) {
    if (is_vowel(v.letters[p].phoneme)) v.vowel_at.push_back(p);
  }
  const std::size_t n = v.vowel_at.size();
  v.inner.resize(n);
  v.final.resize(n);
  v.cut.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t vp = v.vowel_at[i];
    const std::size_t next = i + 1 < n ? v.vowel_at[i + 1] : v.letters.size();
    const Phoneme vowel = v.letters[vp].phoneme;
    v.inner[i] = weigh_vowel(vowel, std::span(v.letters).subspan(vp + 1, next - vp - 1), false);

    std::size_t cut = v.letters.size();
    if (i + 1 < n) {
      auto it = std::upper_bound(v.word_start.begin(), v.word_start.end(), vp);
      if (it != v.word_start.end() && *it <= next) {
        cut = *it;
      } else {
        cut = vp + 1;
        while (cut < next && is_sign(v.letters[cut])) ++cut;
      }
    }
    v.cut[i] = cut;
    v.final[i] = weigh_vowel(vowel, std::span(v.letters).subspan(vp + 1, cut - vp - 1), true);
  }
  return v;
}

const char* to_string(Mode m) { return m == Mode::kBatch ? "batch" : "interactive"; }

const char* to_string(Status s) {
  switch (s) {
    case Status::kMatched: return "matched";
    case Status::kClosestOnly: return "closest-only";
    case Status::kNeedsInput: return "needs-input";
  }
  return "?";
}

const char* to_string(Suggestion::Kind k) {
  switch (k) {
    case Suggestion::Kind::kWordSwap: return "word-swap";
    case Suggestion::Kind::kWordReplace: return "word-replace";
    case Suggestion::Kind::kSyllableFlipHint: return "syllable-flip-hint";
  }
  return "?";
}

std::vector<std::array<int, 4>> split_quarters(int total, int pada_min, int pada_max,
                                               const CatalogView& view) {
  std::vector<std::array<int, 4>> out;
  auto add = [&out](std::array<int, 4> s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  if (total >= 4 && total % 4 == 0) add({total / 4, total / 4, total / 4, total / 4});

  // Ardhasama shapes: inside the band, plus any shape a record in the view
  // asks for (a record can pass the band on its total alone).
  std::set<std::pair<int, int>> shapes;
  for (int a = 1; 2 * a < total; ++a) {
    if ((total - 2 * a) % 2) continue;
    const int b = (total - 2 * a) / 2;
    if (a != b && a >= pada_min && a <= pada_max && b >= pada_min && b <= pada_max) shapes.emplace(a, b);
  }
  for (std::size_t i = 0; i < view.size(); ++i) {
    const MetreRecord& r = view[i];
    if (r.family != Family::kArdhasama) continue;
    const auto q = r.quarter_lengths();
    if (q[0] != q[1] && r.total_syllables() == total) shapes.emplace(q[0], q[1]);
  }
  for (const auto& [a, b] : shapes) add({a, b, a, b});

  for (std::size_t i = 0; i < view.size(); ++i) {
    const MetreRecord& r = view[i];
    if (r.family != Family::kVisama || r.total_syllables() != total) continue;
    const auto q = r.quarter_lengths();
    add({q[0], q[1], q[2], q[3]});
  }
  return out;
}

std::vector<PendingQuestion> pragrhya_pairs(std::span<const Word> words, const DualAnswers& answers) {
  std::vector<PendingQuestion> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].dual_number) continue;
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j || !is_pragrhya_candidate(words[i], words[j])) continue;
      auto key = std::pair(words[i].surface, words[j].surface);
      if (answers.count(key) || !seen.insert(key).second) continue;
      // Junction index in the given order when the pair is adjacent there.
      const std::size_t junction = j == i + 1 ? i : static_cast<std::size_t>(-1);
      out.push_back(PendingQuestion{junction, key.first, key.second,
                                    pragrhya_question(words[i], words[j])});
    }
  }
  return out;
}

RealizedOrder realize(std::span<const Word> words, const Arrangement& order, const DualAnswers& answers) {
  RealizedOrder ro;
  for (std::size_t idx : order) ro.words.push_back(words[idx]);
  const DualLookup lookup = [&answers](const Word& l, const Word& r) -> std::optional<bool> {
    auto it = answers.find({l.surface, r.surface});
    return it == answers.end() ? false : it->second;
  };
  ro.outcome = apply_sequence(ro.words, lookup);
  ro.verse = scan_verse(ro.outcome.words);
  return ro;
}

std::optional<MatchResult> exact_same_metre(const MatchResult& like, const ScannedVerse& verse,
                                            const CatalogView& view) {
  const int n = static_cast<int>(verse.size());
  if (!like.record) {
    const UpajatiPair pair = find_upajati_pair(view);
    if (!pair.available()) return std::nullopt;
    const int q = static_cast<int>(pair.indravajra->pada_patterns[0].size());
    if (n != 4 * q) return std::nullopt;
    const std::vector<int> lengths(4, q);
    auto m = match_upajati(verse.padas(lengths), view);
    if (!m.empty() && m[0].name == kUpajatiName) return m[0];
    return std::nullopt;
  }
  const MetreRecord& r = *like.record;
  if (r.is_varna()) {
    if (r.total_syllables() != n) return std::nullopt;
    MatchResult m = evaluate_varna(r, verse.padas(r.quarter_lengths()));
    if (m.exact) return m;
    return std::nullopt;
  }
  if (n == 0) return std::nullopt;
  const Prefix pre(verse);
  std::vector<int> lengths;
  if (!jati_exact_split(verse, pre, r.matra_scheme->segment_totals, r.matra_scheme->group_size, 0, 0,
                        lengths)) {
    return std::nullopt;
  }
  return evaluate_jati(r, verse.padas(lengths));
}

std::vector<Suggestion> make_suggestions(const MatchResult& best, std::span<const Word> words,
                                         const ScannedVerse& verse,
                                         std::span<const JunctionResolution> trace,
                                         const DualAnswers& answers, const CatalogView& view) {
  std::vector<Suggestion> out;
  if (best.exact) return out;

  const auto starts = starts_of(best.split);
  const bool varna = best.family != Family::kJati;
  // Template symbol wanted at each mismatching syllable, by global index.
  std::map<int, Symbol> wanted;

  if (varna) {
    for (std::size_t k = 0; k < best.padas.size(); ++k) {
      const auto ops = align(best.padas[k], best.templates[k]);
      for (const EditOp& op : ops) {
        Suggestion s;
        s.kind = Suggestion::Kind::kSyllableFlipHint;
        s.pada = static_cast<int>(k);
        const std::string where = "pāda " + std::to_string(k + 1);
        if (op.kind == EditOp::kMatch) continue;
        if (op.kind == EditOp::kSubstitute) {
          const int g = starts[k] + op.query_pos;
          const Symbol need = best.templates[k][static_cast<std::size_t>(op.template_pos)];
          s.position = op.query_pos;
          s.required_pattern = LgPattern({need});
          s.detail = where + ", syllable " + std::to_string(op.query_pos + 1) + " '" +
                     syllable_text(verse, static_cast<std::size_t>(g)) + "' is " +
                     (need == Symbol::kGuru ? "laghu; the metre needs guru" : "guru; the metre needs laghu");
          wanted[g] = need;
        } else if (op.kind == EditOp::kDelete) {
          const int g = starts[k] + op.query_pos;
          s.position = op.query_pos;
          s.detail = where + ", syllable " + std::to_string(op.query_pos + 1) + " '" +
                     syllable_text(verse, static_cast<std::size_t>(g)) + "' is one syllable too many";
        } else {
          const Symbol need = best.templates[k][static_cast<std::size_t>(op.template_pos)];
          s.position = op.template_pos;
          s.required_pattern = LgPattern({need});
          s.detail = where + " lacks a " + std::string(need == Symbol::kGuru ? "guru" : "laghu") +
                     " syllable at position " + std::to_string(op.template_pos + 1);
        }
        out.push_back(std::move(s));
      }
    }
  } else {
    const auto& targets = best.record->matra_scheme->segment_totals;
    for (std::size_t k = 0; k < best.padas.size(); ++k) {
      if (best.matras[k] == targets[k]) continue;
      Suggestion s;
      s.kind = Suggestion::Kind::kSyllableFlipHint;
      s.pada = static_cast<int>(k);
      const int diff = targets[k] - best.matras[k];
      s.detail = "segment " + std::to_string(k + 1) + " has " + std::to_string(best.matras[k]) +
                 " mātrās; the scheme needs " + std::to_string(targets[k]) + " (" +
                 (diff > 0 ? "add " : "remove ") + std::to_string(std::abs(diff)) + ")";
      out.push_back(std::move(s));
    }
  }

  const auto spans = word_spans(words, trace);
  auto covers_mismatch = [&](std::size_t w) {
    if (!varna) return true;
    for (int g = spans[w].first; g < spans[w].second; ++g) {
      if (wanted.count(g)) return true;
    }
    return false;
  };

  // Word swaps, kept only when the swapped order re-scans exactly. Pairs
  // touching a mismatching syllable are tried first.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        const bool hot = covers_mismatch(i) || covers_mismatch(j);
        if (hot == (pass == 0) && words[i].surface != words[j].surface) pairs.emplace_back(i, j);
      }
    }
  }
  constexpr std::size_t kMaxSwapChecks = 64;
  if (pairs.size() > kMaxSwapChecks) pairs.resize(kMaxSwapChecks);
  const OrderScorer scorer(view, find_upajati_pair(view));
  for (const auto& [i, j] : pairs) {
    Arrangement order(words.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::swap(order[i], order[j]);
    const RealizedOrder ro = realize(words, order, answers);
    const Prefix pre(ro.verse);
    DistanceCache dc(ro.verse, scorer.index());
    const int n = static_cast<int>(ro.verse.size());
    // Any exact metre will do, not only the closest one.
    if (auto hit = scorer.exact(ro.verse, pre, dc, split_quarters(n, 1, kMaxSyllablesPerPada, view))) {
      const std::string name = hit->first ? hit->first->name : std::string(kUpajatiName);
      Suggestion s;
      s.kind = Suggestion::Kind::kWordSwap;
      s.words = {words[i].surface, words[j].surface};
      s.required_pattern = standalone_pattern(words[j]);
      s.detail = "swap '" + words[i].surface + "' and '" + words[j].surface + "' to get " + name;
      out.push_back(std::move(s));
    }
  }

  // Word replacements: another input word whose own pattern fits the
  // template over a mismatching word's syllables.
  if (varna && !wanted.empty()) {
    std::set<std::pair<std::string, std::string>> offered;
    for (std::size_t w = 0; w < words.size(); ++w) {
      const auto [a, b] = spans[w];
      if (a >= b) continue;
      bool mismatch = false;
      for (int g = a; g < b; ++g) mismatch |= wanted.count(g) > 0;
      if (!mismatch) continue;
      // The word must sit inside one pāda.
      std::size_t k = 0;
      while (k + 1 < starts.size() && starts[k + 1] <= a) ++k;
      if (b > starts[k] + best.split[k]) continue;
      const auto& query = best.padas[k];
      const auto& tmpl = best.templates[k];
      if (query.size() != tmpl.size()) continue;
      std::vector<Symbol> need;
      for (int g = a; g < b; ++g) need.push_back(tmpl[static_cast<std::size_t>(g - starts[k])]);
      const LgPattern required(need);
      for (std::size_t u = 0; u < words.size(); ++u) {
        if (words[u].surface == words[w].surface) continue;
        const LgPattern p = standalone_pattern(words[u]);
        if (!matches_exactly(p, required)) continue;
        if (!offered.emplace(words[w].surface, words[u].surface).second) continue;
        Suggestion s;
        s.kind = Suggestion::Kind::kWordReplace;
        s.pada = static_cast<int>(k);
        s.position = a - starts[k];
        s.words = {words[w].surface, words[u].surface};
        s.required_pattern = required;
        s.detail = "replace '" + words[w].surface + "' with a word scanning " + required.str() +
                   ", such as '" + words[u].surface + "'";
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

CompositionResult Composer::compose(const CompositionRequest& request) const {
  return compose_one(request, true);
}

CompositionResult Composer::compose_one(const CompositionRequest& request, bool allow_oversize) const {
  const auto& words = request.prose.words;
  if (words.empty()) throw Error(ErrorCode::kEmptyInput, "no words to compose");
  if (request.max_permutations < 1) throw Error(ErrorCode::kInvalidArgument, "max_permutations must be >= 1");

  CompositionResult out;
  out.band = compute_band(words);
  if (allow_oversize && out.band.max_syllables > 4 * kMaxSyllablesPerPada) return oversize_strategy(request);

  if (request.mode == Mode::kInteractive) {
    out.pending_questions = pragrhya_pairs(words, request.overrides);
    if (!out.pending_questions.empty()) {
      out.status = Status::kNeedsInput;
      return out;
    }
  }

  const CatalogView all = CatalogView::all(*catalog_).restrict_families(request.families);
  const CatalogView banded = band_filter(all, out.band.pada_min(), out.band.pada_max());
  const UpajatiPair pair_all = find_upajati_pair(all);
  const UpajatiPair pair_band = find_upajati_pair(banded);
  const OrderScorer scorer(banded, pair_band);
  const auto unbanded_entries = all.size() + (pair_all.available() ? 1 : 0);

  const std::vector<std::string> keys = surfaces(words);
  PermutationOrder order(keys, request.max_permutations);
  Arrangement perm;
  Candidate best;
  std::vector<std::pair<Arrangement, ScannedVerse>> seen;  // weights only, for phase 2
  int min_n = std::numeric_limits<int>::max();
  int max_n = 0;
  bool band_note = false;

  while (order.next(perm)) {
    const std::size_t rank = out.permutations_tried++;
    RealizedOrder ro = realize(words, perm, request.overrides);
    const ScannedVerse& v = ro.verse;
    const int n = static_cast<int>(v.size());
    min_n = std::min(min_n, n);
    max_n = std::max(max_n, n);
    if (!band_note && (n < out.band.min_syllables || n > out.band.max_syllables)) {
      out.notes.push_back("order " + std::to_string(rank) + " scans to " + std::to_string(n) +
                          " syllables, outside the band");
      band_note = true;
    }
    out.catalog_entries_scanned += scorer.entries();
    out.catalog_entries_scanned_unbanded += unbanded_entries;

    const Prefix pre(v);
    DistanceCache dc(v, scorer.index());
    if (auto hit = scorer.exact(v, pre, dc,
                                split_quarters(n, out.band.pada_min(), out.band.pada_max(), banded))) {
      Candidate c;
      c.record = hit->first;
      c.split = hit->second;
      c.order = perm;
      out.status = Status::kMatched;
      out.metre = describe(c, v, pair_band);
      out.permutation = perm;
      out.permuted_words = surfaces(ro.words);
      out.sandhi_trace = ro.outcome.trace;
      fill_verse(out, ro, c.split);
      return out;
    }
    scorer.closest(v, pre, dc, perm, rank, best);
    ScannedVerse light;
    light.inner = v.inner;
    light.final = v.final;
    light.vowel_at.resize(v.size());
    seen.emplace_back(perm, std::move(light));
  }
  out.budget_exhausted = out.permutations_tried >= request.max_permutations &&
                         PermutationOrder::total(keys) > static_cast<double>(out.permutations_tried);

  // Phase 2: out-of-band records that could still beat or tie the best.
  std::vector<std::size_t> extra;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (banded.contains(all.indices()[i])) continue;
    const MetreRecord& r = all[i];
    int lb = 0;
    if (r.is_varna()) {
      const int t = r.total_syllables();
      lb = t < min_n ? min_n - t : t > max_n ? t - max_n : 0;
    } else {
      const int m = r.matra_scheme->total();
      lb = std::max({0, min_n - m, m - 2 * max_n});
    }
    if (!best.have || lb <= best.key.distance) extra.push_back(all.indices()[i]);
  }
  const bool upajati_extra = pair_all.available() && !pair_band.available();
  if (!extra.empty() || upajati_extra) {
    std::vector<std::size_t> idx = extra;
    if (upajati_extra) {
      for (const MetreRecord* r : {pair_all.indravajra, pair_all.upendravajra}) {
        const std::size_t ci = static_cast<std::size_t>(r - catalog_->records().data());
        if (std::find(idx.begin(), idx.end(), ci) == idx.end()) idx.push_back(ci);
      }
      std::sort(idx.begin(), idx.end());
    }
    const CatalogView extra_view(catalog_, idx);
    std::vector<bool> only(extra_view.size());
    for (std::size_t i = 0; i < extra_view.size(); ++i) {
      only[i] = std::find(extra.begin(), extra.end(), extra_view.indices()[i]) != extra.end();
    }
    const OrderScorer extra_scorer(extra_view, find_upajati_pair(extra_view));
    for (std::size_t rank = 0; rank < seen.size(); ++rank) {
      const ScannedVerse& v = seen[rank].second;
      const Prefix pre(v);
      DistanceCache dc(v, extra_scorer.index());
      extra_scorer.closest(v, pre, dc, seen[rank].first, rank, best, &only, &out.closest_rechecks,
                           upajati_extra);
    }
  }

  out.status = Status::kClosestOnly;
  if (!best.have) {
    out.notes.push_back("no catalog entry is enabled for the requested families");
    const RealizedOrder ro = realize(words, seen.front().first, request.overrides);
    out.permutation = seen.front().first;
    out.permuted_words = surfaces(ro.words);
    out.sandhi_trace = ro.outcome.trace;
    fill_verse(out, ro, balanced(static_cast<int>(ro.verse.size()), 4));
    return out;
  }

  const RealizedOrder ro = realize(words, best.order, request.overrides);
  const CatalogView& describe_view = all;
  out.metre = describe(best, ro.verse, pair_all);
  out.permutation = best.order;
  out.permuted_words = surfaces(ro.words);
  out.sandhi_trace = ro.outcome.trace;
  fill_verse(out, ro, best.split);
  out.suggestions = make_suggestions(*out.metre, ro.words, ro.verse, ro.outcome.trace, request.overrides,
                                     describe_view);
  if (ro.verse.size() < 4) {
    out.notes.push_back("the text scans to " + std::to_string(ro.verse.size()) +
                        " syllable(s); a four-pāda verse needs at least four");
  }
  if (out.budget_exhausted) {
    out.notes.push_back("permutation budget of " + std::to_string(request.max_permutations) +
                        " exhausted before an exact match");
  }
  return out;
}

CompositionResult Composer::oversize_strategy(const CompositionRequest& request) const {
  const auto& words = request.prose.words;
  if (words.empty()) throw Error(ErrorCode::kEmptyInput, "no words to compose");
  constexpr int kTarget = 32;  // one Anuṣṭubh verse

  CompositionResult out;
  out.band = compute_band(words);
  out.notes.push_back("input exceeds " + std::to_string(4 * kMaxSyllablesPerPada) +
                      " syllables; composing consecutive groups of about " + std::to_string(kTarget));

  std::vector<std::vector<Word>> groups;
  std::vector<Word> cur;
  int vowels = 0;
  for (const auto& w : words) {
    const int vc = static_cast<int>(w.vowel_count());
    if (!cur.empty() && vowels + vc > kTarget) {
      groups.push_back(std::move(cur));
      cur.clear();
      vowels = 0;
    }
    cur.push_back(w);
    vowels += vc;
  }
  if (!cur.empty()) groups.push_back(std::move(cur));

  FamilySet fams;
  for (Family f : {Family::kArdhasama, Family::kJati}) {
    if (request.families.count(f)) fams.insert(f);
  }
  bool all_matched = true;
  std::size_t offset = 0;
  for (auto& g : groups) {
    CompositionRequest sub = request;
    sub.prose.words = g;
    sub.families = fams;
    CompositionResult r = compose_one(sub, false);
    for (auto& idx : r.permutation) idx += offset;
    offset += g.size();
    out.permutations_tried += r.permutations_tried;
    out.catalog_entries_scanned += r.catalog_entries_scanned;
    out.catalog_entries_scanned_unbanded += r.catalog_entries_scanned_unbanded;
    out.closest_rechecks += r.closest_rechecks;
    out.budget_exhausted |= r.budget_exhausted;
    if (r.status == Status::kNeedsInput) {
      out.pending_questions.insert(out.pending_questions.end(), r.pending_questions.begin(),
                                   r.pending_questions.end());
    }
    all_matched &= r.status == Status::kMatched;
    out.permutation.insert(out.permutation.end(), r.permutation.begin(), r.permutation.end());
    if (!out.verse_text.empty()) out.verse_text += "\n\n";
    out.verse_text += r.verse_text;
    out.groups.push_back(std::move(r));
  }
  out.status = !out.pending_questions.empty() ? Status::kNeedsInput
               : all_matched                  ? Status::kMatched
                                              : Status::kClosestOnly;
  return out;
}

}  // namespace padya
