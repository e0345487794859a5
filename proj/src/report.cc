#include "padya/report.h"

#include "padya/error.h"

namespace padya {
namespace {

using nlohmann::json;

json patterns(const std::vector<LgPattern>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

}  // namespace

json to_json(const BandReport& b) {
  return json{
      {"max_syllables", b.max_syllables},
      {"min_syllables", b.min_syllables},
      {"pada_min", b.pada_min()},
      {"pada_max", b.pada_max()},
      {"counts",
       {{"n1", b.counts.n1}, {"n2", b.counts.n2}, {"n3", b.counts.n3}, {"n5", b.counts.n5}, {"n7", b.counts.n7}}},
      {"r1", b.r1},
      {"r2", b.r2},
      {"r3", b.r3},
      {"r2_prime", b.r2_prime},
      {"r_combined", b.r_combined},
      {"combined_case", std::string(1, b.combined_case)},
      {"r_compositional", b.r_compositional},
      {"r_capacity", b.r_capacity},
      {"r", b.r},
      {"formula_gap", to_string(b.gap)},
      {"diagnostics", b.diagnostics},
  };
}

json to_json(const MatchResult& m) {
  json j{
      {"name", m.name},
      {"family", to_string(m.family)},
      {"exact", m.exact},
      {"distance", m.distance},
      {"padas_differing", m.padas_differing},
      {"padas", patterns(m.padas)},
      {"templates", patterns(m.templates)},
      {"resolved", patterns(m.resolved)},
      {"split", m.split},
  };
  if (m.family == Family::kJati) j["matras"] = m.matras;
  return j;
}

json to_json(const JunctionResolution& r) {
  json j{
      {"left", r.left_word},
      {"right", r.right_word},
      {"rule_id", r.applied_rule ? json(*r.applied_rule) : json(nullptr)},
      {"weight_effect", to_string(r.weight_effect)},
      {"pragrhya_candidate", r.pragrhya_candidate},
  };
  if (r.pragrhya_candidate) j["dual"] = r.dual;
  return j;
}

json to_json(const PendingQuestion& q) {
  return json{{"left", q.left_word}, {"right", q.right_word}, {"question", q.question}};
}

json to_json(const Suggestion& s) {
  json j{{"kind", to_string(s.kind)}, {"detail", s.detail}};
  if (!s.required_pattern.empty()) j["required_pattern"] = s.required_pattern.str();
  if (s.pada >= 0) j["pada"] = s.pada;
  if (s.position >= 0) j["position"] = s.position;
  if (!s.words.empty()) j["words"] = s.words;
  return j;
}

json to_json(const CompositionResult& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["status"] = to_string(r.status);
  j["verse_text"] = r.verse_text;
  json padas = json::array();
  for (const auto& p : r.padas) {
    json syl = json::array();
    for (const auto& s : p.syllables) {
      syl.push_back({{"offset", s.offset}, {"length", s.length}, {"text", s.text},
                     {"weight", std::string(1, static_cast<char>(s.weight))}});
    }
    padas.push_back({{"text", p.text}, {"pattern", p.pattern.str()}, {"syllables", syl}});
  }
  j["padas"] = padas;
  j["metre"] = r.metre ? to_json(*r.metre) : json(nullptr);
  j["permutation"] = r.permutation;
  j["permuted_words"] = r.permuted_words;
  json trace = json::array();
  for (const auto& t : r.sandhi_trace) trace.push_back(to_json(t));
  j["sandhi_trace"] = trace;
  json pending = json::array();
  for (const auto& q : r.pending_questions) pending.push_back(to_json(q));
  j["pending_questions"] = pending;
  j["band"] = to_json(r.band);
  json sug = json::array();
  for (const auto& s : r.suggestions) sug.push_back(to_json(s));
  j["suggestions"] = sug;
  j["permutations_tried"] = r.permutations_tried;
  j["catalog_entries_scanned"] = r.catalog_entries_scanned;
  j["catalog_entries_scanned_unbanded"] = r.catalog_entries_scanned_unbanded;
  j["closest_rechecks"] = r.closest_rechecks;
  j["budget_exhausted"] = r.budget_exhausted;
  j["notes"] = r.notes;
  if (!r.groups.empty()) {
    json groups = json::array();
    for (const auto& g : r.groups) {
      json gj = to_json(g);
      gj.erase("schema_version");
      groups.push_back(std::move(gj));
    }
    j["groups"] = groups;
  }
  return j;
}

ScanReport scan_lines(const std::vector<std::string>& lines, const CatalogView& view) {
  ScanReport out;
  for (const auto& l : lines) {
    if (l.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.lines.push_back(l);
    out.patterns.push_back(scan_pada(l));
  }
  if (out.lines.empty()) throw Error(ErrorCode::kEmptyInput, "nothing to scan");
  if ((out.patterns.size() == 4 || out.patterns.size() == 1) && !view.empty()) {
    try {
      out.metre = closest(out.patterns, view);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyCatalogView) throw;
    }
  }
  for (std::size_t i = 0; i < out.patterns.size(); ++i) {
    LgPattern p = out.patterns[i];
    if (out.metre && out.metre->exact && i < out.metre->resolved.size() &&
        out.metre->resolved[i].size() == p.size()) {
      p = out.metre->resolved[i];
    }
    out.patterns[i] = p;
    if (p.has_optional()) {
      // Gaṇas need a concrete reading; take * as its guru reading.
      std::vector<Symbol> s = p.symbols();
      for (auto& x : s) x = x == Symbol::kOptional ? Symbol::kGuru : x;
      out.ganas.push_back(to_ganas(LgPattern(s)));
    } else {
      out.ganas.push_back(to_ganas(p));
    }
  }
  return out;
}

json to_json(const ScanReport& s) {
  json padas = json::array();
  for (std::size_t i = 0; i < s.lines.size(); ++i) {
    padas.push_back({{"text", s.lines[i]}, {"pattern", s.patterns[i].grouped()}, {"ganas", s.ganas[i].str()}});
  }
  return json{{"schema_version", kReportSchemaVersion},
              {"padas", padas},
              {"metre", s.metre ? to_json(*s.metre) : json(nullptr)}};
}

}  // namespace padya
