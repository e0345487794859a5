#include "padya/text_codec.h"

#include <algorithm>
#include <array>
#include <utility>

#include "padya/error.h"

namespace padya {
namespace {

struct GlyphEntry {
  std::string_view spelling;
  Phoneme phoneme;
};

// Every accepted spelling in normalized (composed) form. Multi-codepoint
// spellings (digraphs, ring-below vowels, candrabindu) sit next to their
// single-letter prefixes; matching sorts by length.
constexpr GlyphEntry kGlyphs[] = {
    {"a", Phoneme::kA},
    {"ā", Phoneme::kAA},
    {"i", Phoneme::kI},
    {"ī", Phoneme::kII},
    {"u", Phoneme::kU},
    {"ū", Phoneme::kUU},
    {"ṛ", Phoneme::kVocalicR},
    {"r̥", Phoneme::kVocalicR},
    {"ṝ", Phoneme::kVocalicRR},
    {"r̥̄", Phoneme::kVocalicRR},
    {"ḷ", Phoneme::kVocalicL},
    {"l̥", Phoneme::kVocalicL},
    {"e", Phoneme::kE},
    {"ai", Phoneme::kAI},
    {"o", Phoneme::kO},
    {"au", Phoneme::kAU},
    {"k", Phoneme::kK},
    {"kh", Phoneme::kKH},
    {"g", Phoneme::kG},
    {"gh", Phoneme::kGH},
    {"ṅ", Phoneme::kNG},
    {"c", Phoneme::kC},
    {"ch", Phoneme::kCH},
    {"j", Phoneme::kJ},
    {"jh", Phoneme::kJH},
    {"ñ", Phoneme::kNY},
    {"ṭ", Phoneme::kTT},
    {"ṭh", Phoneme::kTTH},
    {"ḍ", Phoneme::kDD},
    {"ḍh", Phoneme::kDDH},
    {"ṇ", Phoneme::kNN},
    {"t", Phoneme::kT},
    {"th", Phoneme::kTH},
    {"d", Phoneme::kD},
    {"dh", Phoneme::kDH},
    {"n", Phoneme::kN},
    {"p", Phoneme::kP},
    {"ph", Phoneme::kPH},
    {"b", Phoneme::kB},
    {"bh", Phoneme::kBH},
    {"m", Phoneme::kM},
    {"y", Phoneme::kY},
    {"r", Phoneme::kR},
    {"l", Phoneme::kL},
    {"v", Phoneme::kV},
    {"ś", Phoneme::kSH},
    {"ṣ", Phoneme::kSS},
    {"s", Phoneme::kS},
    {"h", Phoneme::kH},
    {"ṃ", Phoneme::kAnusvara},
    {"ṁ", Phoneme::kAnusvara},
    {"m̐", Phoneme::kAnusvara},
    {"ḥ", Phoneme::kVisarga},
    {"'", Phoneme::kAvagraha},
};

constexpr std::string_view kCanonical[] = {
    "a", "ā", "i", "ī", "u", "ū", "ṛ", "ṝ", "ḷ",
    "e", "ai", "o", "au",
    "k", "kh", "g", "gh", "ṅ",
    "c", "ch", "j", "jh", "ñ",
    "ṭ", "ṭh", "ḍ", "ḍh", "ṇ",
    "t", "th", "d", "dh", "n",
    "p", "ph", "b", "bh", "m",
    "y", "r", "l", "v",
    "ś", "ṣ", "s",
    "h",
    "ṃ",
    "ḥ",
    "'",
};

struct Composition {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

constexpr Composition kCompositions[] = {
    {U'a', 0x0304, 0x0101},    {U'i', 0x0304, 0x012B},
    {U'u', 0x0304, 0x016B},    {U'r', 0x0323, 0x1E5B},
    {0x1E5B, 0x0304, 0x1E5D},  {U'l', 0x0323, 0x1E37},
    {U'n', 0x0307, 0x1E45},    {U'n', 0x0303, 0x00F1},
    {U't', 0x0323, 0x1E6D},    {U'd', 0x0323, 0x1E0D},
    {U'n', 0x0323, 0x1E47},    {U's', 0x0301, 0x015B},
    {U's', 0x0323, 0x1E63},    {U'm', 0x0323, 0x1E43},
    {U'm', 0x0307, 0x1E41},    {U'h', 0x0323, 0x1E25},
};

// Canonical combining class of the marks we accept; 0 for starters.
int combining_class(char32_t c) {
  switch (c) {
    case 0x0323:
    case 0x0325:
      return 220;
    case 0x0301:
    case 0x0303:
    case 0x0304:
    case 0x0307:
    case 0x0310:
      return 230;
    default:
      return 0;
  }
}

bool is_space(char32_t c) { return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r'; }

// Decodes UTF-8; malformed bytes become U+FFFD so they surface as unknown
// codepoints at tokenization.
std::vector<std::pair<char32_t, std::size_t>> decode_utf8(std::string_view s) {
  std::vector<std::pair<char32_t, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    char32_t cp = 0xFFFD;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
    }
    if (len > 1) {
      if (i + len > s.size()) {
        len = 1;
      } else {
        cp = b0 & (0x7F >> len);
        bool ok = true;
        for (std::size_t k = 1; k < len; ++k) {
          const auto b = static_cast<unsigned char>(s[i + k]);
          if ((b & 0xC0) != 0x80) {
            ok = false;
            break;
          }
          cp = (cp << 6) | (b & 0x3F);
        }
        if (!ok) {
          cp = 0xFFFD;
          len = 1;
        }
      }
    }
    out.emplace_back(cp, i);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::optional<char32_t> compose_pair(char32_t base, char32_t mark) {
  for (const auto& c : kCompositions) {
    if (c.base == base && c.mark == mark) return c.composed;
  }
  return std::nullopt;
}

// Reorders each run of marks by combining class, then composes marks into
// the preceding starter unless blocked.
std::vector<char32_t> compose(std::vector<char32_t> cps) {
  for (std::size_t i = 0; i < cps.size();) {
    if (combining_class(cps[i]) == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && combining_class(cps[j]) != 0) ++j;
    std::stable_sort(cps.begin() + static_cast<std::ptrdiff_t>(i),
                     cps.begin() + static_cast<std::ptrdiff_t>(j),
                     [](char32_t a, char32_t b) {
                       return combining_class(a) < combining_class(b);
                     });
    i = j;
  }

  std::vector<char32_t> out;
  out.reserve(cps.size());
  std::size_t starter = static_cast<std::size_t>(-1);
  int last_uncomposed_class = -1;
  for (char32_t cp : cps) {
    const int cc = combining_class(cp);
    if (cc == 0) {
      out.push_back(cp);
      starter = out.size() - 1;
      last_uncomposed_class = -1;
      continue;
    }
    if (starter != static_cast<std::size_t>(-1) && last_uncomposed_class < cc) {
      if (auto composed = compose_pair(out[starter], cp)) {
        out[starter] = *composed;
        continue;
      }
    }
    out.push_back(cp);
    last_uncomposed_class = cc;
  }
  return out;
}

std::vector<const GlyphEntry*> glyphs_by_length() {
  std::vector<const GlyphEntry*> sorted;
  for (const auto& g : kGlyphs) sorted.push_back(&g);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    return a->spelling.size() > b->spelling.size();
  });
  return sorted;
}

const std::vector<const GlyphEntry*>& sorted_glyphs() {
  static const std::vector<const GlyphEntry*> sorted = glyphs_by_length();
  return sorted;
}

// Longest glyph that prefixes `s` at `pos`, or null.
const GlyphEntry* match_glyph(std::string_view s, std::size_t pos) {
  for (const auto* g : sorted_glyphs()) {
    if (s.compare(pos, g->spelling.size(), g->spelling) == 0) return g;
  }
  return nullptr;
}

Word tokenize_normalized_word(std::string_view word, std::size_t base_offset) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const GlyphEntry* g = match_glyph(word, pos);
    if (g == nullptr) {
      throw Error(ErrorCode::kUnknownCodepoint,
                  "unknown codepoint at byte " + std::to_string(base_offset + pos),
                  base_offset + pos);
    }
    letters.push_back(Letter{g->phoneme, std::string(g->spelling)});
    pos += g->spelling.size();
  }
  Word w = make_word(std::move(letters));
  w.surface = std::string(word);
  return w;
}

}  // namespace

const char* to_string(Category c) {
  switch (c) {
    case Category::kVowelShort: return "vowel-short";
    case Category::kVowelLong: return "vowel-long";
    case Category::kConsonant: return "consonant";
    case Category::kSibilant: return "sibilant";
    case Category::kAspirate: return "aspirate";
    case Category::kAnusvara: return "anusvara";
    case Category::kVisarga: return "visarga";
    case Category::kMark: return "mark";
  }
  return "?";
}

Category category_of(Phoneme p) {
  switch (p) {
    case Phoneme::kA:
    case Phoneme::kI:
    case Phoneme::kU:
    case Phoneme::kVocalicR:
    case Phoneme::kVocalicL:
      return Category::kVowelShort;
    case Phoneme::kAA:
    case Phoneme::kII:
    case Phoneme::kUU:
    case Phoneme::kVocalicRR:
    case Phoneme::kE:
    case Phoneme::kAI:
    case Phoneme::kO:
    case Phoneme::kAU:
      return Category::kVowelLong;
    case Phoneme::kSH:
    case Phoneme::kSS:
    case Phoneme::kS:
      return Category::kSibilant;
    case Phoneme::kH:
      return Category::kAspirate;
    case Phoneme::kAnusvara:
      return Category::kAnusvara;
    case Phoneme::kVisarga:
      return Category::kVisarga;
    case Phoneme::kAvagraha:
      return Category::kMark;
    default:
      return Category::kConsonant;
  }
}

bool is_vowel(Phoneme p) {
  const Category c = category_of(p);
  return c == Category::kVowelShort || c == Category::kVowelLong;
}

bool is_short_vowel(Phoneme p) { return category_of(p) == Category::kVowelShort; }

bool is_consonantal(Phoneme p) {
  const Category c = category_of(p);
  return c == Category::kConsonant || c == Category::kSibilant || c == Category::kAspirate;
}

bool is_voiced_consonant(Phoneme p) {
  switch (p) {
    case Phoneme::kG: case Phoneme::kGH: case Phoneme::kNG:
    case Phoneme::kJ: case Phoneme::kJH: case Phoneme::kNY:
    case Phoneme::kDD: case Phoneme::kDDH: case Phoneme::kNN:
    case Phoneme::kD: case Phoneme::kDH: case Phoneme::kN:
    case Phoneme::kB: case Phoneme::kBH: case Phoneme::kM:
    case Phoneme::kY: case Phoneme::kR: case Phoneme::kL: case Phoneme::kV:
    case Phoneme::kH:
      return true;
    default:
      return false;
  }
}

std::string_view canonical_glyph(Phoneme p) { return kCanonical[static_cast<std::size_t>(p)]; }

Letter make_letter(Phoneme p) { return Letter{p, std::string(canonical_glyph(p))}; }

namespace {

const Letter* first_phonemic(const std::vector<Letter>& letters) {
  for (const auto& l : letters) {
    if (l.category() != Category::kMark) return &l;
  }
  return nullptr;
}

const Letter* last_phonemic(const std::vector<Letter>& letters) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (it->category() != Category::kMark) return &*it;
  }
  return nullptr;
}

}  // namespace

Category Word::initial_class() const {
  const Letter* l = first_phonemic(lexeme);
  return l ? l->category() : Category::kMark;
}

Category Word::final_class() const {
  const Letter* l = last_phonemic(lexeme);
  return l ? l->category() : Category::kMark;
}

std::size_t Word::vowel_count() const {
  return static_cast<std::size_t>(std::count_if(
      lexeme.begin(), lexeme.end(), [](const Letter& l) { return is_vowel(l.phoneme); }));
}

std::string Word::render() const {
  std::string out;
  for (const auto& l : lexeme) out += l.glyph;
  return out;
}

Word make_word(std::vector<Letter> letters) {
  Word w;
  w.lexeme = std::move(letters);
  w.surface = w.render();
  return w;
}

std::size_t ProseInput::vowel_count() const {
  std::size_t n = 0;
  for (const auto& w : words) n += w.vowel_count();
  return n;
}

std::string normalize(std::string_view text) {
  std::vector<char32_t> cps;
  for (auto [cp, offset] : decode_utf8(text)) {
    (void)offset;
    cps.push_back(cp == 0x2019 ? U'\'' : cp);
  }
  cps = compose(std::move(cps));

  std::string out;
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    append_utf8(out, cp);
  }
  return out;
}

ProseInput tokenize(std::string_view text) {
  const std::string norm = normalize(text);
  if (norm.empty()) throw Error(ErrorCode::kEmptyInput, "input contains no words");

  ProseInput prose;
  std::size_t start = 0;
  while (start <= norm.size()) {
    std::size_t end = norm.find(' ', start);
    if (end == std::string::npos) end = norm.size();
    prose.words.push_back(
        tokenize_normalized_word(std::string_view(norm).substr(start, end - start), start));
    start = end + 1;
  }
  return prose;
}

Word tokenize_word(std::string_view word) {
  const std::string norm = normalize(word);
  if (norm.empty()) throw Error(ErrorCode::kEmptyInput, "empty word");
  if (norm.find(' ') != std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument, "word contains whitespace");
  }
  return tokenize_normalized_word(norm, 0);
}

std::string render(const ProseInput& prose) {
  std::string out;
  for (const auto& w : prose.words) {
    if (!out.empty()) out.push_back(' ');
    out += w.render();
  }
  return out;
}

Category classify_letter(std::string_view glyph) {
  const std::string norm = normalize(glyph);
  const GlyphEntry* g = norm.empty() ? nullptr : match_glyph(norm, 0);
  if (g == nullptr || g->spelling.size() != norm.size()) {
    throw Error(ErrorCode::kUnknownGlyph, "not a single IAST phoneme: " + std::string(glyph));
  }
  return category_of(g->phoneme);
}

std::string decode_spelled(std::span<const std::string> tokens) {
  static constexpr std::array<std::pair<char, std::string_view>, 13> kCapitals = {{
      {'A', "ā"}, {'I', "ī"}, {'U', "ū"}, {'F', "ṛ"},
      {'G', "ṅ"}, {'Y', "ñ"}, {'T', "ṭ"}, {'D', "ḍ"},
      {'N', "ṇ"}, {'S', "ś"}, {'Z', "ṣ"}, {'H', "ḥ"},
      {'M', "ṁ"},
  }};

  std::string out;
  bool pause = false;
  for (const auto& raw : tokens) {
    std::string_view token = raw;
    while (!token.empty() && (token.front() == ' ' || token.front() == '\r' || token.front() == '\t'))
      token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\r' || token.back() == '\t'))
      token.remove_suffix(1);
    if (token.empty()) {
      pause = !out.empty();
      continue;
    }
    if (token.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument, "spelled token must be one letter: " + std::string(token));
    }
    const char c = token.front();
    std::string_view mapped;
    if (c >= 'a' && c <= 'z') {
      mapped = token;
    } else if (c >= 'A' && c <= 'Z') {
      auto it = std::find_if(kCapitals.begin(), kCapitals.end(),
                             [c](const auto& e) { return e.first == c; });
      if (it == kCapitals.end()) {
        throw Error(ErrorCode::kUnmappedCapital, std::string("no mapping for capital ") + c);
      }
      mapped = it->second;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "spelled token must be an ASCII letter: " + std::string(token));
    }
    if (pause) out.push_back(' ');
    pause = false;
    out += mapped;
  }
  return out;
}

std::vector<std::string> split_spelled_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ',' || c == '\n') {
      tokens.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  tokens.push_back(current);
  return tokens;
}

}  // namespace padya
