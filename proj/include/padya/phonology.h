#pragma once

// Syllabification, laghu/guru weighing and the gaṇa notation.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padya/text_codec.h"

namespace padya {

enum class Weight : std::uint8_t { kLaghu, kGuru };

// One metrical symbol: l, g, or * (either reading allowed).
enum class Symbol : char { kLaghu = 'l', kGuru = 'g', kOptional = '*' };

struct Syllable {
  std::vector<Letter> letters;
  Weight weight = Weight::kLaghu;
  bool optional_guru = false;
  bool position_final_in_pada = false;

  // Index into `letters` of the single vowel.
  std::size_t vowel_index() const;
  std::string text() const;
};

class LgPattern {
 public:
  LgPattern() = default;
  explicit LgPattern(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  // Accepts l, g, * and ignores spaces. Throws kParseError on anything else.
  static LgPattern parse(std::string_view text);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  bool has_optional() const;

  // "gglggllglgg"
  std::string str() const;
  // "ggl ggl lgl gg"
  std::string grouped() const;

  bool operator==(const LgPattern&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

struct GanaSequence {
  std::string ganas;    // over {y, r, t, b, j, s, m, n}
  std::string residue;  // trailing 1-2 symbols over {l, g}

  std::string str() const { return ganas + residue; }
  bool operator==(const GanaSequence&) const = default;
};

// One syllable per vowel. Throws kNoVowel for a vowelless fragment.
std::vector<Syllable> syllabify(std::span<const Letter> letters);

// Weighs every syllable; consonant clusters are read across syllable (and
// so word) boundaries. `pada_final_index` marks the syllable that ends a
// pāda: its cluster is limited to its own letters and a short reading
// becomes optional.
LgPattern weigh(std::span<const Syllable> syllables,
                std::optional<std::size_t> pada_final_index = std::nullopt);

// Same as weigh but returns the syllables with weight fields filled.
std::vector<Syllable> annotate(std::vector<Syllable> syllables,
                               std::optional<std::size_t> pada_final_index = std::nullopt);

// Weight of a short-vowel syllable given the consonantal letters that follow
// its vowel up to the next vowel. Exposed for the verse scanner.
Symbol weigh_vowel(Phoneme vowel, std::span<const Letter> following, bool pada_final);

// Triplet-wise gaṇa lookup; throws kUnresolvedOptional on *.
GanaSequence to_ganas(const LgPattern& pattern);

// Inverse of to_ganas.
LgPattern from_ganas(const GanaSequence& ganas);

// Mātrā total: l = 1, g = 2, each * takes the next entry of `resolution`.
// Throws kIncompleteResolution if the entries do not cover every *.
int matra_count(const LgPattern& pattern, std::span<const Symbol> resolution = {});

// Convenience: tokenize → syllabify the whole line → weigh with the last
// syllable pāda-final.
LgPattern scan_pada(std::string_view text);

}  // namespace padya
