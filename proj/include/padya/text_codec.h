#pragma once

// IAST E-text codec: Unicode normalization, phoneme tokenization, letter
// classification and the spelled-letter (voice dictation) input scheme.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace padya {

enum class Phoneme : std::uint8_t {
  // vowels
  kA, kAA, kI, kII, kU, kUU, kVocalicR, kVocalicRR, kVocalicL, kE, kAI, kO, kAU,
  // stops, nasals, semivowels
  kK, kKH, kG, kGH, kNG,
  kC, kCH, kJ, kJH, kNY,
  kTT, kTTH, kDD, kDDH, kNN,
  kT, kTH, kD, kDH, kN,
  kP, kPH, kB, kBH, kM,
  kY, kR, kL, kV,
  // sibilants, aspirate
  kSH, kSS, kS,
  kH,
  kAnusvara,
  kVisarga,
  kAvagraha,
};

enum class Category : std::uint8_t {
  kVowelShort,
  kVowelLong,
  kConsonant,
  kSibilant,
  kAspirate,
  kAnusvara,
  kVisarga,
  kMark,  // avagraha; contributes no syllable
};

const char* to_string(Category c);

Category category_of(Phoneme p);
bool is_vowel(Phoneme p);
bool is_short_vowel(Phoneme p);
// Consonant, sibilant or aspirate.
bool is_consonantal(Phoneme p);
bool is_voiced_consonant(Phoneme p);

// Canonical IAST spelling used when the engine synthesizes a letter.
std::string_view canonical_glyph(Phoneme p);

struct Letter {
  Phoneme phoneme;
  std::string glyph;  // spelling as it appeared in the normalized input

  Category category() const { return category_of(phoneme); }
  bool operator==(const Letter& other) const { return phoneme == other.phoneme; }
};

Letter make_letter(Phoneme p);

struct Word {
  std::vector<Letter> lexeme;
  std::string surface;
  std::optional<bool> dual_number;

  // First/last phonemic letter, skipping avagraha marks.
  Category initial_class() const;
  Category final_class() const;
  std::size_t vowel_count() const;
  std::string render() const;
};

Word make_word(std::vector<Letter> letters);

enum class SourceMode { kDiacriticText, kSpelledLetters };

struct ProseInput {
  std::vector<Word> words;
  SourceMode source_mode = SourceMode::kDiacriticText;

  std::size_t vowel_count() const;
};

// Composes the combining sequences of the accepted repertoire, folds U+2019
// to the ASCII avagraha and collapses whitespace runs to one space.
std::string normalize(std::string_view text);

// Splits normalized text into words and each word into phonemes, longest
// match first. Throws kUnknownCodepoint / kEmptyInput.
ProseInput tokenize(std::string_view text);

// Tokenizes a single whitespace-free word.
Word tokenize_word(std::string_view word);

// Joins words with single spaces.
std::string render(const ProseInput& prose);

// Throws kUnknownGlyph when `glyph` is not exactly one accepted phoneme.
Category classify_letter(std::string_view glyph);

// Spelled-letter decoding. An empty token is a word pause.
std::string decode_spelled(std::span<const std::string> tokens);

// Splits dictation text (one token per line, or comma separated) into
// tokens, keeping empty tokens as word pauses.
std::vector<std::string> split_spelled_tokens(std::string_view text);

}  // namespace padya
