#include "padya/matcher.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <tuple>

#include "padya/error.h"

namespace padya {
namespace {

bool compatible(Symbol a, Symbol b) {
  return a == b || a == Symbol::kOptional || b == Symbol::kOptional;
}

LgPattern concat(const LgPattern& a, const LgPattern& b) {
  std::vector<Symbol> s = a.symbols();
  s.insert(s.end(), b.symbols().begin(), b.symbols().end());
  return LgPattern(std::move(s));
}

std::vector<int> pattern_lengths(std::span<const LgPattern> padas) {
  std::vector<int> out;
  for (const auto& p : padas) out.push_back(static_cast<int>(p.size()));
  return out;
}

void sort_results(std::vector<MatchResult>& results) {
  std::stable_sort(results.begin(), results.end(), better_match);
}

MatchResult jati_against(const MetreRecord& record, std::span<const LgPattern> segments,
                         std::span<const int> targets) {
  MatchResult r;
  r.name = record.name;
  r.family = Family::kJati;
  r.record = &record;
  r.padas.assign(segments.begin(), segments.end());
  r.split = pattern_lengths(segments);
  const int group = record.matra_scheme->group_size;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const SegmentFit fit = fit_segment(segments[k], targets[k], group);
    int d = 0;
    if (!fit.total_ok) {
      d = targets[k] < fit.lo ? fit.lo - targets[k] : targets[k] - fit.hi;
    } else if (!fit.groups_ok) {
      d = 1;
    }
    r.distance += d;
    if (d) ++r.padas_differing;
    r.matras.push_back(fit.matras);
    r.resolved.push_back(fit.resolved);
  }
  r.exact = r.distance == 0 && !segments.empty();
  return r;
}

}  // namespace

bool better_match(const MatchResult& a, const MatchResult& b) {
  return std::tuple(!a.exact, a.distance, a.padas_differing, a.name) <
         std::tuple(!b.exact, b.distance, b.padas_differing, b.name);
}

int edit_distance(const LgPattern& a, const LgPattern& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<int> prev(m + 1);
  std::vector<int> cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const int sub = prev[j - 1] + (compatible(a[i - 1], b[j - 1]) ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::vector<EditOp> align(const LgPattern& query, const LgPattern& tmpl) {
  const std::size_t n = query.size();
  const std::size_t m = tmpl.size();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const int sub = d[i - 1][j - 1] + (compatible(query[i - 1], tmpl[j - 1]) ? 0 : 1);
      d[i][j] = std::min({sub, d[i - 1][j] + 1, d[i][j - 1] + 1});
    }
  }
  std::vector<EditOp> ops;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = compatible(query[i - 1], tmpl[j - 1]);
      if (d[i][j] == d[i - 1][j - 1] + (same ? 0 : 1)) {
        ops.push_back({same ? EditOp::kMatch : EditOp::kSubstitute, static_cast<int>(i - 1),
                       static_cast<int>(j - 1)});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      ops.push_back({EditOp::kDelete, static_cast<int>(i - 1), -1});
      --i;
    } else {
      ops.push_back({EditOp::kInsert, -1, static_cast<int>(j - 1)});
      --j;
    }
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

bool matches_exactly(const LgPattern& pada, const LgPattern& tmpl) {
  if (pada.size() != tmpl.size()) return false;
  for (std::size_t i = 0; i < pada.size(); ++i) {
    if (!compatible(pada[i], tmpl[i])) return false;
  }
  return true;
}

LgPattern resolve_against(const LgPattern& pada, const LgPattern& tmpl) {
  std::vector<Symbol> out = pada.symbols();
  for (std::size_t i = 0; i < out.size() && i < tmpl.size(); ++i) {
    if (out[i] == Symbol::kOptional) out[i] = tmpl[i];
  }
  return LgPattern(std::move(out));
}

TemplateIndex::TemplateIndex(const CatalogView& view) {
  std::map<std::string, std::size_t> seen;
  quarter_slots_.resize(view.size());
  for (std::size_t pos = 0; pos < view.size(); ++pos) {
    const MetreRecord& r = view[pos];
    for (const LgPattern& t : r.quarter_templates()) {
      auto [it, inserted] = seen.emplace(t.str(), patterns_.size());
      if (inserted) {
        bank_.add(t);
        patterns_.push_back(t);
      }
      quarter_slots_[pos].push_back(it->second);
    }
  }
}

void TemplateIndex::distances(const LgPattern& pada, std::span<std::int32_t> out) const {
  if (patterns_.empty()) return;
  kernels::edit_distances(pada.symbols(), bank_, out);
}

UpajatiPair find_upajati_pair(const CatalogView& view) {
  UpajatiPair pair;
  for (std::size_t i = 0; i < view.size(); ++i) {
    const MetreRecord& r = view[i];
    if (r.family != Family::kSama) continue;
    if (r.name == kIndravajraName) pair.indravajra = &r;
    if (r.name == kUpendravajraName) pair.upendravajra = &r;
  }
  return pair;
}

MatchResult evaluate_varna(const MetreRecord& record, std::span<const LgPattern> padas,
                           std::span<const int> distances) {
  const auto templates = record.quarter_templates();
  MatchResult r;
  r.name = record.name;
  r.family = record.family;
  r.record = &record;
  r.padas.assign(padas.begin(), padas.end());
  r.templates = templates;
  r.split = pattern_lengths(padas);
  for (std::size_t k = 0; k < padas.size(); ++k) {
    r.distance += distances[k];
    if (distances[k]) ++r.padas_differing;
    r.resolved.push_back(resolve_against(padas[k], templates[k]));
  }
  r.exact = r.distance == 0;
  return r;
}

MatchResult evaluate_varna(const MetreRecord& record, std::span<const LgPattern> padas) {
  const auto templates = record.quarter_templates();
  if (padas.size() != templates.size()) {
    throw Error(ErrorCode::kInvalidArgument, "varṇa matching needs four pādas");
  }
  std::vector<int> d;
  for (std::size_t k = 0; k < padas.size(); ++k) d.push_back(edit_distance(padas[k], templates[k]));
  return evaluate_varna(record, padas, d);
}

MatchResult evaluate_upajati(const UpajatiPair& pair, std::span<const LgPattern> padas,
                             std::span<const int> dist_i, std::span<const int> dist_u) {
  const std::size_t n = padas.size();
  // 0: Indravajrā, 1: Upendravajrā, 2: tie.
  std::vector<int> pick(n);
  bool any_i = false;
  bool any_u = false;
  bool any_tie = false;
  for (std::size_t k = 0; k < n; ++k) {
    pick[k] = dist_i[k] < dist_u[k] ? 0 : dist_u[k] < dist_i[k] ? 1 : 2;
    any_i |= pick[k] == 0;
    any_u |= pick[k] == 1;
    any_tie |= pick[k] == 2;
  }
  if (!any_tie && (any_i != any_u)) {
    // All pādas lean one way: switch the pāda where that costs least.
    std::size_t best = 0;
    int cost = std::numeric_limits<int>::max();
    for (std::size_t k = 0; k < n; ++k) {
      const int c = std::abs(dist_i[k] - dist_u[k]);
      if (c < cost) {
        cost = c;
        best = k;
      }
    }
    pick[best] = 1 - pick[best];
  } else if (any_tie) {
    // Ties take whichever kind is missing; with nothing decided the first
    // tie is Indravajrā and the rest Upendravajrā.
    const int need = any_i ? 1 : 0;
    bool first = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (pick[k] != 2) continue;
      pick[k] = first || any_i || any_u ? need : 1 - need;
      first = false;
    }
  }

  MatchResult r;
  r.name = std::string(kUpajatiName);
  r.family = Family::kSama;
  r.padas.assign(padas.begin(), padas.end());
  r.split = pattern_lengths(padas);
  const LgPattern& ti = pair.indravajra->pada_patterns[0];
  const LgPattern& tu = pair.upendravajra->pada_patterns[0];
  for (std::size_t k = 0; k < n; ++k) {
    const LgPattern& t = pick[k] == 0 ? ti : tu;
    const int d = pick[k] == 0 ? dist_i[k] : dist_u[k];
    r.templates.push_back(t);
    r.resolved.push_back(resolve_against(padas[k], t));
    r.distance += d;
    if (d) ++r.padas_differing;
  }
  r.exact = r.distance == 0;
  return r;
}

MatchResult evaluate_upajati(const UpajatiPair& pair, std::span<const LgPattern> padas) {
  std::vector<int> di;
  std::vector<int> du;
  for (const auto& p : padas) {
    di.push_back(edit_distance(p, pair.indravajra->pada_patterns[0]));
    du.push_back(edit_distance(p, pair.upendravajra->pada_patterns[0]));
  }
  return evaluate_upajati(pair, padas, di, du);
}

SegmentFit fit_segment(const LgPattern& segment, int target, int group_size) {
  SegmentFit fit;
  for (Symbol s : segment.symbols()) {
    fit.lo += s == Symbol::kGuru ? 2 : 1;
    fit.hi += s == Symbol::kLaghu ? 1 : 2;
  }
  fit.total_ok = target >= fit.lo && target <= fit.hi;

  // Default reading: as close to the target as the range allows.
  const int goal = std::clamp(target, fit.lo, fit.hi);
  {
    int extra = goal - fit.lo;
    std::vector<Symbol> s = segment.symbols();
    for (Symbol& x : s) {
      if (x != Symbol::kOptional) continue;
      x = extra > 0 ? Symbol::kGuru : Symbol::kLaghu;
      if (extra > 0) --extra;
    }
    fit.resolved = LgPattern(std::move(s));
    fit.matras = goal;
  }
  if (!fit.total_ok) return fit;
  if (group_size <= 0) {
    fit.groups_ok = true;
    return fit;
  }

  // reach[i][m]: first i symbols can total m mātrās without a guru
  // straddling a group cut.
  const std::size_t n = segment.size();
  std::vector<std::vector<signed char>> choice(n + 1, std::vector<signed char>(target + 1, 0));
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(target + 1, false));
  reach[0][0] = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (int m = 0; m <= target; ++m) {
      if (!reach[i][m]) continue;
      for (int w = 1; w <= 2; ++w) {
        const Symbol s = segment[i];
        if ((w == 1 && s == Symbol::kGuru) || (w == 2 && s == Symbol::kLaghu)) continue;
        if (w == 2 && m % group_size == group_size - 1) continue;
        if (m + w > target || reach[i + 1][m + w]) continue;
        reach[i + 1][m + w] = true;
        choice[i + 1][m + w] = static_cast<signed char>(w);
      }
    }
  }
  if (!reach[n][target]) return fit;
  fit.groups_ok = true;
  std::vector<Symbol> s(n);
  int m = target;
  for (std::size_t i = n; i > 0; --i) {
    const int w = choice[i][m];
    s[i - 1] = w == 2 ? Symbol::kGuru : Symbol::kLaghu;
    m -= w;
  }
  fit.resolved = LgPattern(std::move(s));
  fit.matras = target;
  return fit;
}

MatchResult evaluate_jati(const MetreRecord& record, std::span<const LgPattern> segments) {
  const auto& totals = record.matra_scheme->segment_totals;
  if (segments.size() != totals.size()) {
    throw Error(ErrorCode::kInvalidArgument, "segment count differs from the mātrā scheme");
  }
  return jati_against(record, segments, totals);
}

std::vector<MatchResult> match_sama(const LgPattern& pada, const CatalogView& view) {
  std::vector<MatchResult> out;
  for (std::size_t i = 0; i < view.size(); ++i) {
    const MetreRecord& r = view[i];
    if (r.family != Family::kSama) continue;
    const LgPattern& t = r.pada_patterns[0];
    MatchResult m;
    m.name = r.name;
    m.family = r.family;
    m.record = &r;
    m.padas = {pada};
    m.templates = {t};
    m.resolved = {resolve_against(pada, t)};
    m.split = {static_cast<int>(pada.size())};
    m.distance = edit_distance(pada, t);
    m.padas_differing = m.distance ? 1 : 0;
    m.exact = m.distance == 0;
    out.push_back(std::move(m));
  }
  sort_results(out);
  return out;
}

std::vector<MatchResult> match_upajati(std::span<const LgPattern> padas, const CatalogView& view) {
  const UpajatiPair pair = find_upajati_pair(view);
  if (!pair.available() || padas.size() != 4) return {};
  const LgPattern& ti = pair.indravajra->pada_patterns[0];
  const LgPattern& tu = pair.upendravajra->pada_patterns[0];
  bool all_i = true;
  bool all_u = true;
  for (const auto& p : padas) {
    const bool i = matches_exactly(p, ti);
    const bool u = matches_exactly(p, tu);
    if (!i && !u) return {};
    all_i &= i;
    all_u &= u;
  }
  if (all_i) return {evaluate_varna(*pair.indravajra, padas)};
  if (all_u) return {evaluate_varna(*pair.upendravajra, padas)};
  return {evaluate_upajati(pair, padas)};
}

std::vector<MatchResult> match_ardhasama(std::span<const LgPattern> padas, const CatalogView& view) {
  std::vector<MatchResult> out;
  if (padas.size() != 4) return out;
  for (std::size_t i = 0; i < view.size(); ++i) {
    if (view[i].family == Family::kArdhasama) out.push_back(evaluate_varna(view[i], padas));
  }
  sort_results(out);
  return out;
}

std::vector<MatchResult> match_visama(std::span<const LgPattern> padas, const CatalogView& view) {
  std::vector<MatchResult> out;
  if (padas.size() != 4) return out;
  for (std::size_t i = 0; i < view.size(); ++i) {
    if (view[i].family == Family::kVisama) out.push_back(evaluate_varna(view[i], padas));
  }
  sort_results(out);
  return out;
}

std::vector<MatchResult> match_jati(std::span<const LgPattern> segments, const CatalogView& view) {
  std::vector<MatchResult> out;
  if (segments.empty()) return out;
  for (std::size_t i = 0; i < view.size(); ++i) {
    const MetreRecord& r = view[i];
    if (r.family != Family::kJati) continue;
    const auto& totals = r.matra_scheme->segment_totals;
    if (segments.size() == totals.size()) {
      out.push_back(jati_against(r, segments, totals));
    } else if (segments.size() == 4 && totals.size() == 2) {
      const std::vector<LgPattern> halves = {concat(segments[0], segments[1]),
                                             concat(segments[2], segments[3])};
      out.push_back(jati_against(r, halves, totals));
    } else if (segments.size() < totals.size()) {
      out.push_back(jati_against(r, segments, std::span(totals).first(segments.size())));
    }
  }
  sort_results(out);
  return out;
}

MatchResult closest(std::span<const LgPattern> padas, const CatalogView& view) {
  std::vector<MatchResult> candidates;
  if (padas.size() == 1) {
    for (std::size_t i = 0; i < view.size(); ++i) {
      const MetreRecord& r = view[i];
      if (!r.is_varna()) continue;
      MatchResult best;
      bool have = false;
      for (const auto& t : r.pada_patterns) {
        MatchResult m;
        m.name = r.name;
        m.family = r.family;
        m.record = &r;
        m.padas = {padas[0]};
        m.templates = {t};
        m.resolved = {resolve_against(padas[0], t)};
        m.split = {static_cast<int>(padas[0].size())};
        m.distance = edit_distance(padas[0], t);
        m.padas_differing = m.distance ? 1 : 0;
        m.exact = m.distance == 0;
        if (!have || better_match(m, best)) best = std::move(m);
        have = true;
      }
      candidates.push_back(std::move(best));
    }
  } else if (padas.size() == 4) {
    for (std::size_t i = 0; i < view.size(); ++i) {
      const MetreRecord& r = view[i];
      if (r.is_varna()) {
        candidates.push_back(evaluate_varna(r, padas));
      } else {
        auto j = match_jati(padas, CatalogView(view.catalog(), {view.indices()[i]}));
        for (auto& m : j) candidates.push_back(std::move(m));
      }
    }
    const UpajatiPair pair = find_upajati_pair(view);
    if (pair.available()) candidates.push_back(evaluate_upajati(pair, padas));
  } else {
    throw Error(ErrorCode::kInvalidArgument, "closest() takes one pāda or four");
  }
  if (candidates.empty()) throw Error(ErrorCode::kEmptyCatalogView, "no comparable metre in the view");
  return *std::min_element(candidates.begin(), candidates.end(), better_match);
}

}  // namespace padya
