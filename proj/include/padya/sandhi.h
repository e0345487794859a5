#pragma once

// Word-junction sandhi restricted to the rules that change syllable counts
// or weights, including the dual-number (pragṛhya) exception.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padya/text_codec.h"

namespace padya {

enum class WeightEffect { kRemovesSyllable, kChangesWeight, kNeutral };

const char* to_string(WeightEffect e);

struct SandhiRule {
  std::string_view rule_id;
  std::string_view family;
  WeightEffect weight_effect;
};

// The rule table in match order.
std::span<const SandhiRule> sandhi_rules();
const SandhiRule* find_rule(std::string_view rule_id);

struct JunctionResolution {
  std::string left_word;
  std::string right_word;
  std::optional<std::string> applied_rule;
  WeightEffect weight_effect = WeightEffect::kNeutral;
  // The junction is pragṛhya-eligible (left ends e/ī/ū, right starts with a).
  bool pragrhya_candidate = false;
  // Eligible and no dual-number answer was available.
  bool needs_confirmation = false;
  // Dual-number reading used at this junction (only meaningful for candidates).
  bool dual = false;
  std::string question;
};

struct JoinResult {
  std::vector<Word> words;  // one word when merged, two when they stay apart
  JunctionResolution resolution;
};

// Resolves one junction. The dual reading comes from left.dual_number, then
// `dual_override`; with neither, the non-dual reading is applied and the
// junction is flagged for confirmation.
JoinResult join(const Word& left, const Word& right,
                std::optional<bool> dual_override = std::nullopt);

// Dual-number answer for an adjacent pair, if known.
using DualLookup = std::function<std::optional<bool>(const Word& left, const Word& right)>;

struct PendingQuestion {
  std::size_t junction = 0;
  std::string left_word;
  std::string right_word;
  std::string question;
};

struct SandhiOutcome {
  std::vector<Word> words;
  std::vector<JunctionResolution> trace;  // one per junction, in order
  std::vector<PendingQuestion> pending;

  std::string render() const;
  std::vector<Letter> letters() const;
  std::size_t vowel_count() const;
};

// Single left-to-right pass; the right side of each junction is the next
// input word, the left side is whatever the previous junction produced.
SandhiOutcome apply_sequence(std::span<const Word> words, const DualLookup& overrides = {});

// True when (left, right) is a pragṛhya-eligible junction.
bool is_pragrhya_candidate(const Word& left, const Word& right);
std::string pragrhya_question(const Word& left, const Word& right);

}  // namespace padya
