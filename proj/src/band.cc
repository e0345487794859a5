#include "padya/band.h"

#include <algorithm>
#include <optional>

#include "padya/error.h"

namespace padya {
namespace {

std::optional<Phoneme> first_phoneme(const Word& w) {
  for (const auto& l : w.lexeme) {
    if (l.category() != Category::kMark) return l.phoneme;
  }
  return std::nullopt;
}

// Last two phonemes, marks skipped; [0] is the final one.
std::pair<std::optional<Phoneme>, std::optional<Phoneme>> last_two(const Word& w) {
  std::optional<Phoneme> last;
  std::optional<Phoneme> before;
  for (auto it = w.lexeme.rbegin(); it != w.lexeme.rend(); ++it) {
    if (it->category() == Category::kMark) continue;
    if (!last) {
      last = it->phoneme;
    } else {
      before = it->phoneme;
      break;
    }
  }
  return {last, before};
}

bool ends_in_short_ah(const Word& w) {
  const auto [last, before] = last_two(w);
  return last == Phoneme::kVisarga && before == Phoneme::kA;
}

bool consonant_class_final(Category c) {
  return c == Category::kConsonant || c == Category::kSibilant || c == Category::kAspirate ||
         c == Category::kAnusvara || c == Category::kVisarga;
}

bool consonantal_initial(Category c) {
  return c == Category::kConsonant || c == Category::kSibilant || c == Category::kAspirate;
}

bool vowel_category(Category c) { return c == Category::kVowelShort || c == Category::kVowelLong; }

}  // namespace

std::string WordClass::str() const {
  std::string out;
  for (int k = 1; k <= 7; ++k) {
    if (!in(static_cast<WordSet>(k))) continue;
    if (!out.empty()) out += ",";
    out += "S" + std::to_string(k);
  }
  return out;
}

WordClass classify_word(const Word& word) {
  WordClass wc;
  if (!first_phoneme(word)) return wc;
  const Category init = word.initial_class();
  const Category fin = word.final_class();
  const auto [last, before] = last_two(word);
  const bool ah = ends_in_short_ah(word);

  if (vowel_category(init)) {
    if (consonant_class_final(fin)) {
      wc.add(WordSet::kS1);
      if (ah) wc.add(WordSet::kS5);
      if (word.render() == "ahaḥ") wc.add(WordSet::kS6);
    } else if (vowel_category(fin)) {
      wc.add(WordSet::kS3);
    }
  } else if (consonantal_initial(init)) {
    if (vowel_category(fin)) {
      // ai/au endings never coalesce to a shorter form; they sit with S4.
      if (last == Phoneme::kAI || last == Phoneme::kAU) {
        wc.add(WordSet::kS4);
      } else {
        wc.add(WordSet::kS2);
      }
    } else if (ah) {
      wc.add(WordSet::kS7);
    } else {
      wc.add(WordSet::kS4);
    }
  }
  return wc;
}

SetCounts count_sets(std::span<const Word> words) {
  SetCounts c;
  for (const auto& w : words) {
    const WordClass wc = classify_word(w);
    if (wc.in(WordSet::kS5)) {
      ++c.n5;
    } else if (wc.in(WordSet::kS1)) {
      ++c.n1;
    }
    if (wc.in(WordSet::kS2)) ++c.n2;
    if (wc.in(WordSet::kS3)) ++c.n3;
    if (wc.in(WordSet::kS7)) ++c.n7;
  }
  return c;
}

int compute_r1(int n1, int n2, int n3) {
  if (n1 == 0 && n2 == 0 && n3 > 0) return n3 - 1;
  return std::min(n1, n2) + n3;
}

int compute_r2(int n1, int n2, int n5) {
  if (n1 == n2 && n5 > 0) return n5 - 1;
  return n5;
}

int compute_r3(int n1, int n2, int n7) {
  if (n1 > n2 && n7 > 0) return std::min(n7, n1 - n2);
  return 0;
}

int compute_r(int n1, int n2, int n3, int n5, int n7, char* case_out) {
  char c = 'C';
  int r = n2 + n3 + n5 + n7;
  if ((n1 == n2 || (n1 > n2 && n7 == n1 - n2)) && n5 > 0) {
    c = 'A';
    r = n1 + n3 + n5 - 1;
  } else if (n1 < n2 || (n1 > n2 && (n7 > n1 - n2 || (n7 == n1 - n2 && n5 == 0)))) {
    c = 'B';
    r = n1 + n3 + n5;
  }
  if (case_out) *case_out = c;
  return r;
}

int compute_r2_prime(const SetCounts& c) {
  if (c.n5 == 0) return 0;
  const int r3 = compute_r3(c.n1, c.n2, c.n7);
  const int left12 = std::abs(c.n1 - c.n2) - r3;
  const int left7 = c.n1 > c.n2 ? c.n7 - r3 : 0;
  const bool r1_short_branch = c.n1 == 0 && c.n2 == 0 && c.n3 > 0;
  if (left12 == 0 && left7 == 0 && !r1_short_branch) return c.n5 - 1;
  return c.n5;
}

int compute_r_compositional(const SetCounts& c) {
  return compute_r1(c.n1, c.n2, c.n3) + compute_r2_prime(c) + compute_r3(c.n1, c.n2, c.n7);
}

const char* to_string(FormulaGap g) {
  switch (g) {
    case FormulaGap::kNone: return "none";
    case FormulaGap::kEqualPairsWithS7: return "n1=n2,n5=0,n7>0";
    case FormulaGap::kVowelPairsOnly: return "n1=n2=0,n3>0,n5=n7=0";
  }
  return "?";
}

FormulaGap classify_gap(const SetCounts& c) {
  if (c.n1 == c.n2 && c.n5 == 0 && c.n7 > 0) return FormulaGap::kEqualPairsWithS7;
  if (c.n1 == 0 && c.n2 == 0 && c.n3 > 0 && c.n5 == 0 && c.n7 == 0) return FormulaGap::kVowelPairsOnly;
  return FormulaGap::kNone;
}

int capacity_bound(std::span<const Word> words) {
  if (words.size() < 2) return 0;
  int vowel_initial = 0;
  int a_initial = 0;
  int plain_end = 0;  // ends in a vowel that coalesces with any vowel
  int a_only_end = 0; // e/o or aḥ: coalesces only with a following a
  for (const auto& w : words) {
    const auto first = first_phoneme(w);
    if (first && is_vowel(*first)) ++vowel_initial;
    if (first == Phoneme::kA) ++a_initial;
    const auto [last, before] = last_two(w);
    if (!last) continue;
    if (*last == Phoneme::kE || *last == Phoneme::kO || ends_in_short_ah(w)) {
      ++a_only_end;
    } else if (is_vowel(*last) && *last != Phoneme::kAI && *last != Phoneme::kAU) {
      ++plain_end;
    }
  }
  const int ends = plain_end + std::min(a_only_end, a_initial);
  return std::min({vowel_initial, ends, static_cast<int>(words.size()) - 1});
}

int BandReport::pada_min() const { return std::max(1, min_syllables / 4); }
int BandReport::pada_max() const { return std::max(1, (max_syllables + 3) / 4); }

BandReport band_from(int max_syllables, int r) {
  BandReport b;
  b.max_syllables = max_syllables;
  b.r = std::clamp(r, 0, std::max(0, max_syllables - 1));
  b.min_syllables = std::max(1, max_syllables - b.r);
  return b;
}

BandReport compute_band(std::span<const Word> words) {
  if (words.empty()) throw Error(ErrorCode::kEmptyInput, "no words to estimate a band for");
  int vowels = 0;
  for (const auto& w : words) vowels += static_cast<int>(w.vowel_count());

  const SetCounts c = count_sets(words);
  BandReport b;
  b.counts = c;
  b.r1 = compute_r1(c.n1, c.n2, c.n3);
  b.r2 = compute_r2(c.n1, c.n2, c.n5);
  b.r3 = compute_r3(c.n1, c.n2, c.n7);
  b.r2_prime = compute_r2_prime(c);
  b.r_combined = compute_r(c.n1, c.n2, c.n3, c.n5, c.n7, &b.combined_case);
  b.r_compositional = compute_r_compositional(c);
  b.r_capacity = capacity_bound(words);
  b.gap = classify_gap(c);

  if (b.r_combined != b.r_compositional) {
    b.diagnostics.push_back("combined formula (case " + std::string(1, b.combined_case) + ") gives " +
                            std::to_string(b.r_combined) + ", compositional gives " +
                            std::to_string(b.r_compositional) + " [" + to_string(b.gap) + "]");
  }
  if (b.r_capacity > b.r_compositional) {
    b.diagnostics.push_back("capacity bound " + std::to_string(b.r_capacity) +
                            " exceeds the compositional r; Min uses the capacity bound");
  }

  const BandReport clamped = band_from(vowels, std::max(b.r_compositional, b.r_capacity));
  b.max_syllables = clamped.max_syllables;
  b.r = clamped.r;
  b.min_syllables = clamped.min_syllables;
  return b;
}

}  // namespace padya
