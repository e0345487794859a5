#include "padya/phonology.h"

#include <algorithm>
#include <array>

#include "padya/error.h"

namespace padya {
namespace {

bool is_coda_sign(Phoneme p) {
  const Category c = category_of(p);
  return c == Category::kAnusvara || c == Category::kVisarga || c == Category::kMark;
}

constexpr std::array<std::pair<std::string_view, char>, 8> kGanaTable = {{
    {"lgg", 'y'}, {"glg", 'r'}, {"ggl", 't'}, {"gll", 'b'},
    {"lgl", 'j'}, {"llg", 's'}, {"ggg", 'm'}, {"lll", 'n'},
}};

// Letters after the syllable's vowel, then the onset of the next syllable
// unless the syllable closes a pāda.
std::vector<Letter> following_letters(std::span<const Syllable> syllables, std::size_t i,
                                      bool pada_final) {
  const Syllable& s = syllables[i];
  std::vector<Letter> out(s.letters.begin() + static_cast<std::ptrdiff_t>(s.vowel_index()) + 1,
                          s.letters.end());
  if (!pada_final && i + 1 < syllables.size()) {
    const Syllable& next = syllables[i + 1];
    out.insert(out.end(), next.letters.begin(),
               next.letters.begin() + static_cast<std::ptrdiff_t>(next.vowel_index()));
  }
  return out;
}

}  // namespace

std::size_t Syllable::vowel_index() const {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (is_vowel(letters[i].phoneme)) return i;
  }
  throw Error(ErrorCode::kNoVowel, "syllable without a vowel");
}

std::string Syllable::text() const {
  std::string out;
  for (const auto& l : letters) out += l.glyph;
  return out;
}

LgPattern LgPattern::parse(std::string_view text) {
  std::vector<Symbol> symbols;
  for (char c : text) {
    switch (c) {
      case 'l': symbols.push_back(Symbol::kLaghu); break;
      case 'g': symbols.push_back(Symbol::kGuru); break;
      case '*': symbols.push_back(Symbol::kOptional); break;
      case ' ': break;
      default:
        throw Error(ErrorCode::kParseError, std::string("bad pattern symbol '") + c + "'");
    }
  }
  return LgPattern(std::move(symbols));
}

bool LgPattern::has_optional() const {
  return std::find(symbols_.begin(), symbols_.end(), Symbol::kOptional) != symbols_.end();
}

std::string LgPattern::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(static_cast<char>(s));
  return out;
}

std::string LgPattern::grouped() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i > 0 && i % 3 == 0) out.push_back(' ');
    out.push_back(static_cast<char>(symbols_[i]));
  }
  return out;
}

std::vector<Syllable> syllabify(std::span<const Letter> letters) {
  std::vector<std::size_t> vowels;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (is_vowel(letters[i].phoneme)) vowels.push_back(i);
  }
  if (vowels.empty()) throw Error(ErrorCode::kNoVowel, "fragment has no vowel");

  std::vector<Syllable> out(vowels.size());
  std::size_t start = 0;
  for (std::size_t k = 0; k < vowels.size(); ++k) {
    std::size_t end = vowels[k] + 1;
    if (k + 1 == vowels.size()) {
      end = letters.size();
    } else {
      while (end < vowels[k + 1] && is_coda_sign(letters[end].phoneme)) ++end;
    }
    out[k].letters.assign(letters.begin() + static_cast<std::ptrdiff_t>(start),
                          letters.begin() + static_cast<std::ptrdiff_t>(end));
    start = end;
  }
  return out;
}

Symbol weigh_vowel(Phoneme vowel, std::span<const Letter> following, bool pada_final) {
  if (!is_short_vowel(vowel)) return Symbol::kGuru;

  std::vector<Phoneme> cluster;
  bool first = true;
  for (const auto& l : following) {
    const Category c = l.category();
    if (c == Category::kMark) continue;
    if (first && (c == Category::kAnusvara || c == Category::kVisarga)) return Symbol::kGuru;
    first = false;
    if (is_consonantal(l.phoneme)) cluster.push_back(l.phoneme);
  }

  if (cluster.size() >= 2) {
    const Phoneme a = cluster[0];
    const Phoneme b = cluster[1];
    const bool muta_cum_liquida =
        b == Phoneme::kR && (a == Phoneme::kP || a == Phoneme::kB || a == Phoneme::kK);
    if (muta_cum_liquida || a == Phoneme::kH) return Symbol::kOptional;
    return Symbol::kGuru;
  }
  return pada_final ? Symbol::kOptional : Symbol::kLaghu;
}

LgPattern weigh(std::span<const Syllable> syllables, std::optional<std::size_t> pada_final_index) {
  std::vector<Symbol> symbols;
  symbols.reserve(syllables.size());
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    const bool final = pada_final_index && *pada_final_index == i;
    const Syllable& s = syllables[i];
    symbols.push_back(weigh_vowel(s.letters[s.vowel_index()].phoneme,
                                  following_letters(syllables, i, final), final));
  }
  return LgPattern(std::move(symbols));
}

std::vector<Syllable> annotate(std::vector<Syllable> syllables,
                               std::optional<std::size_t> pada_final_index) {
  const LgPattern pattern = weigh(syllables, pada_final_index);
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    Syllable& s = syllables[i];
    const bool final = pada_final_index && *pada_final_index == i;
    s.position_final_in_pada = final;
    s.optional_guru = pattern[i] == Symbol::kOptional;
    if (pattern[i] == Symbol::kGuru) {
      s.weight = Weight::kGuru;
    } else if (pattern[i] == Symbol::kLaghu) {
      s.weight = Weight::kLaghu;
    } else {
      // Default reading: a cluster exception leans guru, a pāda end leans laghu.
      const Symbol inner = weigh_vowel(s.letters[s.vowel_index()].phoneme,
                                       following_letters(syllables, i, final), false);
      s.weight = inner == Symbol::kOptional ? Weight::kGuru : Weight::kLaghu;
    }
  }
  return syllables;
}

GanaSequence to_ganas(const LgPattern& pattern) {
  if (pattern.has_optional()) {
    throw Error(ErrorCode::kUnresolvedOptional, "pattern still contains *: " + pattern.str());
  }
  const std::string s = pattern.str();
  GanaSequence out;
  std::size_t i = 0;
  for (; i + 3 <= s.size(); i += 3) {
    const std::string_view triplet = std::string_view(s).substr(i, 3);
    for (const auto& [lg, gana] : kGanaTable) {
      if (lg == triplet) out.ganas.push_back(gana);
    }
  }
  out.residue = s.substr(i);
  return out;
}

LgPattern from_ganas(const GanaSequence& ganas) {
  std::string s;
  for (char g : ganas.ganas) {
    auto it = std::find_if(kGanaTable.begin(), kGanaTable.end(),
                           [g](const auto& e) { return e.second == g; });
    if (it == kGanaTable.end()) {
      throw Error(ErrorCode::kParseError, std::string("unknown gana '") + g + "'");
    }
    s += it->first;
  }
  s += ganas.residue;
  return LgPattern::parse(s);
}

int matra_count(const LgPattern& pattern, std::span<const Symbol> resolution) {
  int total = 0;
  std::size_t next = 0;
  for (Symbol s : pattern.symbols()) {
    if (s == Symbol::kOptional) {
      if (next >= resolution.size() || resolution[next] == Symbol::kOptional) {
        throw Error(ErrorCode::kIncompleteResolution, "resolution does not cover every *");
      }
      s = resolution[next++];
    }
    total += s == Symbol::kGuru ? 2 : 1;
  }
  return total;
}

LgPattern scan_pada(std::string_view text) {
  const ProseInput prose = tokenize(text);
  std::vector<Letter> letters;
  for (const auto& w : prose.words) letters.insert(letters.end(), w.lexeme.begin(), w.lexeme.end());
  const std::vector<Syllable> syllables = syllabify(letters);
  return weigh(syllables, syllables.size() - 1);
}

}  // namespace padya
