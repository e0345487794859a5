#pragma once

// Word-set classification and the Max/Min syllable band.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "padya/text_codec.h"

namespace padya {

enum class WordSet : std::uint8_t { kS1 = 1, kS2, kS3, kS4, kS5, kS6, kS7 };

struct WordClass {
  std::uint8_t sets = 0;  // bit (k-1) set for S_k

  bool in(WordSet s) const { return sets & (1u << (static_cast<int>(s) - 1)); }
  void add(WordSet s) { sets |= static_cast<std::uint8_t>(1u << (static_cast<int>(s) - 1)); }
  // "S1,S5"
  std::string str() const;
};

WordClass classify_word(const Word& word);

struct SetCounts {
  int n1 = 0;  // S1 words outside S5
  int n2 = 0;
  int n3 = 0;
  int n5 = 0;
  int n7 = 0;
  bool operator==(const SetCounts&) const = default;
};

SetCounts count_sets(std::span<const Word> words);

int compute_r1(int n1, int n2, int n3);
int compute_r2(int n1, int n2, int n5);
int compute_r3(int n1, int n2, int n7);
// The combined shortcut formula; `case_out` receives 'A', 'B' or 'C'.
int compute_r(int n1, int n2, int n3, int n5, int n7, char* case_out = nullptr);

// r2 as it composes with r1 and r3: the −1 applies only when no S1, S2 or
// S7 word is left unpaired and r1 did not already take its n3 − 1 branch.
int compute_r2_prime(const SetCounts& c);
int compute_r_compositional(const SetCounts& c);

// Where the shortcut and the compositional value may disagree.
enum class FormulaGap {
  kNone,
  kEqualPairsWithS7,  // n1 = n2, n5 = 0, n7 > 0: the shortcut adds n7
  kVowelPairsOnly,    // n1 = n2 = 0, n3 > 0, n5 = n7 = 0: the shortcut misses n3 − 1
};
const char* to_string(FormulaGap g);
FormulaGap classify_gap(const SetCounts& c);

// Upper bound on syllable-removing junctions over every order of `words`:
// each needs a vowel-initial right word and a left word whose ending can
// coalesce, and there are only n − 1 junctions.
int capacity_bound(std::span<const Word> words);

struct BandReport {
  int max_syllables = 0;
  SetCounts counts;
  int r1 = 0;
  int r2 = 0;
  int r3 = 0;
  int r2_prime = 0;
  int r_combined = 0;
  char combined_case = 'B';
  int r_compositional = 0;
  int r_capacity = 0;
  int r = 0;  // reduction actually used for Min
  int min_syllables = 0;
  FormulaGap gap = FormulaGap::kNone;
  std::vector<std::string> diagnostics;

  // Per-pāda band for catalog filtering: [floor(Min/4), ceil(Max/4)], at least 1.
  int pada_min() const;
  int pada_max() const;
};

// Throws kEmptyInput for an empty word list.
BandReport compute_band(std::span<const Word> words);

// Band from given Max and r (Min = max(1, Max − r)).
BandReport band_from(int max_syllables, int r);

}  // namespace padya
