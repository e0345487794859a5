#include "padya/sandhi.h"

#include <algorithm>
#include <array>

namespace padya {
namespace {

constexpr std::array<SandhiRule, 13> kRules = {{
    {"savarna-dirgha", "savarna-dirgha", WeightEffect::kRemovesSyllable},
    {"guna", "guna", WeightEffect::kRemovesSyllable},
    {"vrddhi", "vrddhi", WeightEffect::kRemovesSyllable},
    {"yan", "yan", WeightEffect::kRemovesSyllable},
    {"ayadi", "ayadi", WeightEffect::kChangesWeight},
    {"purvarupa", "purvarupa", WeightEffect::kRemovesSyllable},
    {"visarga-aharahah", "visarga", WeightEffect::kChangesWeight},
    {"visarga-o-avagraha", "visarga", WeightEffect::kRemovesSyllable},
    {"visarga-o", "visarga", WeightEffect::kNeutral},
    {"visarga-a-vowel", "visarga", WeightEffect::kChangesWeight},
    {"visarga-aa-drop", "visarga", WeightEffect::kNeutral},
    {"stutva", "assimilation", WeightEffect::kChangesWeight},
    {"scutva", "assimilation", WeightEffect::kChangesWeight},
}};

using Letters = std::vector<Letter>;

bool is_a_class(Phoneme p) { return p == Phoneme::kA || p == Phoneme::kAA; }
bool is_i_class(Phoneme p) { return p == Phoneme::kI || p == Phoneme::kII; }
bool is_u_class(Phoneme p) { return p == Phoneme::kU || p == Phoneme::kUU; }
bool is_r_class(Phoneme p) { return p == Phoneme::kVocalicR || p == Phoneme::kVocalicRR; }

bool is_retroflex_stop(Phoneme p) {
  return p == Phoneme::kTT || p == Phoneme::kTTH || p == Phoneme::kDD || p == Phoneme::kDDH ||
         p == Phoneme::kNN;
}

bool is_palatal_stop(Phoneme p) {
  return p == Phoneme::kC || p == Phoneme::kCH || p == Phoneme::kJ || p == Phoneme::kJH ||
         p == Phoneme::kNY;
}

// Left word minus its last `drop` letters, then `middle`, then the right
// word minus its first `skip` letters.
Word splice(const Word& left, std::size_t drop, std::initializer_list<Phoneme> middle,
            const Word& right, std::size_t skip) {
  Letters out(left.lexeme.begin(), left.lexeme.end() - static_cast<std::ptrdiff_t>(drop));
  for (Phoneme p : middle) out.push_back(make_letter(p));
  out.insert(out.end(), right.lexeme.begin() + static_cast<std::ptrdiff_t>(skip), right.lexeme.end());
  return make_word(std::move(out));
}

Word truncate(const Word& w, std::size_t drop, std::initializer_list<Phoneme> tail) {
  Letters out(w.lexeme.begin(), w.lexeme.end() - static_cast<std::ptrdiff_t>(drop));
  for (Phoneme p : tail) out.push_back(make_letter(p));
  Word result = make_word(std::move(out));
  result.dual_number = w.dual_number;
  return result;
}

bool spelled(const Word& w, std::span<const Phoneme> phonemes) {
  return std::equal(w.lexeme.begin(), w.lexeme.end(), phonemes.begin(), phonemes.end(),
                    [](const Letter& l, Phoneme p) { return l.phoneme == p; });
}

struct Rewrite {
  std::string_view rule_id;
  std::vector<Word> words;
};

std::optional<Rewrite> merged(std::string_view id, Word w) {
  return Rewrite{id, {std::move(w)}};
}

std::optional<Rewrite> separate(std::string_view id, Word l, Word r) {
  return Rewrite{id, {std::move(l), std::move(r)}};
}

std::optional<Rewrite> vowel_rules(const Word& left, const Word& right, bool dual) {
  const Phoneme l = left.lexeme.back().phoneme;
  const Phoneme r = right.lexeme.front().phoneme;
  if (!is_vowel(l) || !is_vowel(r)) return std::nullopt;

  // 1. savarṇa-dīrgha
  if (is_a_class(l) && is_a_class(r)) return merged("savarna-dirgha", splice(left, 1, {Phoneme::kAA}, right, 1));
  if (is_i_class(l) && is_i_class(r)) return merged("savarna-dirgha", splice(left, 1, {Phoneme::kII}, right, 1));
  if (is_u_class(l) && is_u_class(r)) return merged("savarna-dirgha", splice(left, 1, {Phoneme::kUU}, right, 1));

  // 2. guṇa
  if (is_a_class(l)) {
    if (is_i_class(r)) return merged("guna", splice(left, 1, {Phoneme::kE}, right, 1));
    if (is_u_class(r)) return merged("guna", splice(left, 1, {Phoneme::kO}, right, 1));
    if (r == Phoneme::kVocalicR) return merged("guna", splice(left, 1, {Phoneme::kA, Phoneme::kR}, right, 1));
  }

  // 3. vṛddhi
  if (is_a_class(l)) {
    if (r == Phoneme::kE || r == Phoneme::kAI) return merged("vrddhi", splice(left, 1, {Phoneme::kAI}, right, 1));
    if (r == Phoneme::kO || r == Phoneme::kAU) return merged("vrddhi", splice(left, 1, {Phoneme::kAU}, right, 1));
  }

  // 4. yaṇ (ī/ū + a is suppressed for a dual form)
  const bool dual_blocked = dual && r == Phoneme::kA;
  if (is_i_class(l) && !is_i_class(r)) {
    if (l == Phoneme::kII && dual_blocked) return std::nullopt;
    return merged("yan", splice(left, 1, {Phoneme::kY}, right, 0));
  }
  if (is_u_class(l) && !is_u_class(r)) {
    if (l == Phoneme::kUU && dual_blocked) return std::nullopt;
    return merged("yan", splice(left, 1, {Phoneme::kV}, right, 0));
  }
  if (is_r_class(l) && !is_r_class(r)) return merged("yan", splice(left, 1, {Phoneme::kR}, right, 0));

  // 5. ayādi (e/o before a is left to pūrvarūpa)
  if (l == Phoneme::kE && r != Phoneme::kA) return merged("ayadi", splice(left, 1, {Phoneme::kA, Phoneme::kY}, right, 0));
  if (l == Phoneme::kO && r != Phoneme::kA) return merged("ayadi", splice(left, 1, {Phoneme::kA, Phoneme::kV}, right, 0));
  if (l == Phoneme::kAI) return merged("ayadi", splice(left, 1, {Phoneme::kAA, Phoneme::kY}, right, 0));
  if (l == Phoneme::kAU) return merged("ayadi", splice(left, 1, {Phoneme::kAA, Phoneme::kV}, right, 0));

  // 6. pūrvarūpa
  if ((l == Phoneme::kE || l == Phoneme::kO) && r == Phoneme::kA) {
    if (l == Phoneme::kE && dual) return std::nullopt;
    return merged("purvarupa", splice(left, 0, {Phoneme::kAvagraha}, right, 1));
  }
  return std::nullopt;
}

std::optional<Rewrite> visarga_rules(const Word& left, const Word& right) {
  const std::size_t n = left.lexeme.size();
  if (n < 2 || left.lexeme[n - 1].phoneme != Phoneme::kVisarga) return std::nullopt;
  const Phoneme before = left.lexeme[n - 2].phoneme;
  const Phoneme r = right.lexeme.front().phoneme;

  if (before == Phoneme::kA) {
    static constexpr std::array kAhah = {Phoneme::kA, Phoneme::kH, Phoneme::kA, Phoneme::kVisarga};
    if (spelled(left, kAhah) && spelled(right, kAhah)) {
      return merged("visarga-aharahah", splice(left, 1, {Phoneme::kR}, right, 0));
    }
    if (r == Phoneme::kA) {
      return merged("visarga-o-avagraha", splice(left, 2, {Phoneme::kO, Phoneme::kAvagraha}, right, 1));
    }
    if (is_voiced_consonant(r)) {
      return separate("visarga-o", truncate(left, 2, {Phoneme::kO}), right);
    }
    if (is_vowel(r)) return separate("visarga-a-vowel", truncate(left, 1, {}), right);
    return std::nullopt;
  }
  if (before == Phoneme::kAA && (is_vowel(r) || is_voiced_consonant(r))) {
    return separate("visarga-aa-drop", truncate(left, 1, {}), right);
  }
  return std::nullopt;
}

std::optional<Rewrite> assimilation_rules(const Word& left, const Word& right) {
  if (left.lexeme.back().phoneme != Phoneme::kT) return std::nullopt;
  const Phoneme r = right.lexeme.front().phoneme;
  if (is_retroflex_stop(r)) return merged("stutva", splice(left, 1, {Phoneme::kTT}, right, 0));
  if (is_palatal_stop(r)) return merged("scutva", splice(left, 1, {Phoneme::kC}, right, 0));
  return std::nullopt;
}

}  // namespace

const char* to_string(WeightEffect e) {
  switch (e) {
    case WeightEffect::kRemovesSyllable: return "removes-syllable";
    case WeightEffect::kChangesWeight: return "changes-weight";
    case WeightEffect::kNeutral: return "neutral";
  }
  return "?";
}

std::span<const SandhiRule> sandhi_rules() { return kRules; }

const SandhiRule* find_rule(std::string_view rule_id) {
  for (const auto& r : kRules) {
    if (r.rule_id == rule_id) return &r;
  }
  return nullptr;
}

bool is_pragrhya_candidate(const Word& left, const Word& right) {
  if (left.lexeme.empty() || right.lexeme.empty()) return false;
  const Phoneme l = left.lexeme.back().phoneme;
  return (l == Phoneme::kE || l == Phoneme::kII || l == Phoneme::kUU) &&
         right.lexeme.front().phoneme == Phoneme::kA;
}

std::string pragrhya_question(const Word& left, const Word& right) {
  return "Is '" + left.surface + "' in the dual number before '" + right.surface +
         "'? (dual forms take no sandhi)";
}

JoinResult join(const Word& left, const Word& right, std::optional<bool> dual_override) {
  JoinResult out;
  JunctionResolution& res = out.resolution;
  res.left_word = left.surface;
  res.right_word = right.surface;

  bool dual = false;
  if (is_pragrhya_candidate(left, right)) {
    res.pragrhya_candidate = true;
    if (left.dual_number) {
      dual = *left.dual_number;
    } else if (dual_override) {
      dual = *dual_override;
    } else {
      res.needs_confirmation = true;
      res.question = pragrhya_question(left, right);
    }
    res.dual = dual;
  }

  std::optional<Rewrite> rw;
  if (!left.lexeme.empty() && !right.lexeme.empty() &&
      left.lexeme.back().category() != Category::kMark &&
      right.lexeme.front().category() != Category::kMark) {
    rw = vowel_rules(left, right, dual);
    if (!rw) rw = visarga_rules(left, right);
    if (!rw) rw = assimilation_rules(left, right);
  }

  if (rw) {
    res.applied_rule = std::string(rw->rule_id);
    res.weight_effect = find_rule(rw->rule_id)->weight_effect;
    out.words = std::move(rw->words);
  } else {
    out.words = {left, right};
  }
  return out;
}

SandhiOutcome apply_sequence(std::span<const Word> words, const DualLookup& overrides) {
  SandhiOutcome out;
  if (words.empty()) return out;

  Word chunk = words[0];
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    const Word& orig_left = words[i];
    const Word& right = words[i + 1];
    std::optional<bool> answer = orig_left.dual_number;
    if (!answer && overrides) answer = overrides(orig_left, right);
    if (answer) chunk.dual_number = answer;

    JoinResult jr = join(chunk, right, answer);
    jr.resolution.left_word = orig_left.surface;
    jr.resolution.right_word = right.surface;
    if (jr.resolution.needs_confirmation) {
      out.pending.push_back(PendingQuestion{i, orig_left.surface, right.surface,
                                            pragrhya_question(orig_left, right)});
    }
    out.trace.push_back(std::move(jr.resolution));

    if (jr.words.size() == 2) {
      out.words.push_back(std::move(jr.words[0]));
      chunk = std::move(jr.words[1]);
    } else {
      chunk = std::move(jr.words[0]);
    }
  }
  out.words.push_back(std::move(chunk));
  return out;
}

std::string SandhiOutcome::render() const {
  std::string s;
  for (const auto& w : words) {
    if (!s.empty()) s.push_back(' ');
    s += w.render();
  }
  return s;
}

std::vector<Letter> SandhiOutcome::letters() const {
  std::vector<Letter> out;
  for (const auto& w : words) out.insert(out.end(), w.lexeme.begin(), w.lexeme.end());
  return out;
}

std::size_t SandhiOutcome::vowel_count() const {
  std::size_t n = 0;
  for (const auto& w : words) n += w.vowel_count();
  return n;
}

}  // namespace padya
