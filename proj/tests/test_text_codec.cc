#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>

#include "padya/error.h"
#include "padya/text_codec.h"

using namespace padya;

namespace {

std::vector<Phoneme> phonemes(const Word& w) {
  std::vector<Phoneme> out;
  for (const auto& l : w.lexeme) out.push_back(l.phoneme);
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(Tokenize, AhamIsOneWordOfFourLetters) {
  const ProseInput p = tokenize("aham");
  ASSERT_EQ(p.words.size(), 1u);
  EXPECT_EQ(phonemes(p.words[0]), (std::vector{Phoneme::kA, Phoneme::kH, Phoneme::kA, Phoneme::kM}));
  EXPECT_EQ(p.words[0].initial_class(), Category::kVowelShort);
  EXPECT_EQ(p.words[0].final_class(), Category::kConsonant);
}

TEST(Tokenize, EmptyInputRejected) {
  EXPECT_EQ(code_of([] { tokenize(""); }), ErrorCode::kEmptyInput);
  EXPECT_EQ(code_of([] { tokenize("   "); }), ErrorCode::kEmptyInput);
}

TEST(Tokenize, DiphthongIsOnePhoneme) {
  const Word w = tokenize_word("kau");
  EXPECT_EQ(phonemes(w), (std::vector{Phoneme::kK, Phoneme::kAU}));
}

TEST(Tokenize, AspiratesAreSingleLetters) {
  const Word w = tokenize_word("bhagavān");
  ASSERT_EQ(w.lexeme.size(), 7u);  // bh a g a v ā n
  EXPECT_EQ(w.lexeme[0].glyph, "bh");
  EXPECT_EQ(w.vowel_count(), 3u);
}

TEST(Tokenize, CombiningAndPrecomposedAgree) {
  // ā as a + U+0304, ṇ as n + U+0323
  const ProseInput a = tokenize("gurūṇāṃ");
  const ProseInput b = tokenize("guru\xCC\x84" "n\xCC\xA3" "a\xCC\x84" "m\xCC\xA3");
  EXPECT_EQ(phonemes(a.words[0]), phonemes(b.words[0]));
  EXPECT_EQ(render(a), render(b));
}

TEST(Tokenize, VocalicRWithRingBelow) {
  const Word w1 = tokenize_word("kṛṣṇaḥ");
  const Word w2 = tokenize_word("kr̥ṣṇaḥ");
  EXPECT_EQ(phonemes(w1), phonemes(w2));
  EXPECT_EQ(w1.vowel_count(), 2u);
}

TEST(Tokenize, DigitsAndPunctuationRejected) {
  EXPECT_EQ(code_of([] { tokenize("rāma 2"); }), ErrorCode::kUnknownCodepoint);
  EXPECT_EQ(code_of([] { tokenize("rāma,"); }), ErrorCode::kUnknownCodepoint);
}

TEST(Tokenize, AvagrahaKeptWithoutSyllable) {
  const Word w = tokenize_word("phale'tra");
  EXPECT_EQ(w.vowel_count(), 3u);
  EXPECT_EQ(w.render(), "phale'tra");
  EXPECT_EQ(tokenize_word("phale\xE2\x80\x99tra").render(), "phale'tra");
}

TEST(ClassifyLetter, TableRows) {
  EXPECT_EQ(classify_letter("ā"), Category::kVowelLong);
  EXPECT_EQ(classify_letter("a"), Category::kVowelShort);
  EXPECT_EQ(classify_letter("h"), Category::kAspirate);
  EXPECT_EQ(classify_letter("ḥ"), Category::kVisarga);
  EXPECT_EQ(classify_letter("ṃ"), Category::kAnusvara);
  EXPECT_EQ(classify_letter("ś"), Category::kSibilant);
  EXPECT_EQ(classify_letter("k"), Category::kConsonant);
  EXPECT_EQ(code_of([] { classify_letter("x"); }), ErrorCode::kUnknownGlyph);
}

TEST(DecodeSpelled, Bhagavan) {
  const std::vector<std::string> t = {"b", "h", "a", "g", "a", "v", "A", "n"};
  EXPECT_EQ(decode_spelled(t), "bhagavān");
}

TEST(DecodeSpelled, VocalicRNeedsF) {
  EXPECT_EQ(decode_spelled(std::vector<std::string>{"k", "r", "Z", "N", "a", "H"}), "krṣṇaḥ");
  EXPECT_EQ(decode_spelled(std::vector<std::string>{"k", "F", "Z", "N", "a", "H"}), "kṛṣṇaḥ");
}

TEST(DecodeSpelled, EmptyListIsEmptyThenEmptyInput) {
  EXPECT_EQ(decode_spelled(std::vector<std::string>{}), "");
  EXPECT_EQ(code_of([] { tokenize(decode_spelled(std::vector<std::string>{})); }), ErrorCode::kEmptyInput);
}

TEST(DecodeSpelled, PausesSeparateWords) {
  const auto tokens = split_spelled_tokens("r,A,m,a,,v,a,n,a,m");
  EXPECT_EQ(decode_spelled(tokens), "rāma vanam");
}

TEST(DecodeSpelled, UnmappedCapitalRejected) {
  EXPECT_EQ(code_of([] { decode_spelled(std::vector<std::string>{"R"}); }), ErrorCode::kUnmappedCapital);
}

// Property: render(tokenize(s)) == normalize(s) and tokenizing is stable.
TEST(TokenizeProperty, RoundTripOnRandomWords) {
  const std::vector<std::string> glyphs = {"a", "ā", "i", "ī", "u", "ū", "ṛ", "e", "ai", "o", "au", "k",
                                           "kh", "g", "c", "j", "ṭ", "ḍ", "ṇ", "t", "th", "d", "n", "p",
                                           "ph", "b", "bh", "m", "y", "r", "l", "v", "ś", "ṣ", "s", "h",
                                           "ṃ", "ḥ"};
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    const int words = 1 + static_cast<int>(rng() % 4);
    for (int w = 0; w < words; ++w) {
      if (w) s += (rng() % 3 == 0) ? "  " : " ";
      const int len = 1 + static_cast<int>(rng() % 6);
      for (int k = 0; k < len; ++k) s += glyphs[rng() % glyphs.size()];
    }
    const ProseInput p = tokenize(s);
    EXPECT_EQ(render(p), normalize(s)) << s;
    const ProseInput q = tokenize(s);
    ASSERT_EQ(p.words.size(), q.words.size());
    for (std::size_t i = 0; i < p.words.size(); ++i) EXPECT_EQ(phonemes(p.words[i]), phonemes(q.words[i]));
  }
}

// Property: distinct spelled token lists decode to distinct strings.
TEST(DecodeSpelledProperty, InjectiveOnSmallLists) {
  const std::vector<std::string> names = {"a", "A", "k", "h", "i", "I", "s", "S", "Z", "n", "N", ""};
  std::map<std::string, std::vector<std::string>> seen;
  std::vector<std::string> cur;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == 0) {
      if (cur.empty() || cur.front().empty() || cur.back().empty()) return;
      for (std::size_t i = 1; i < cur.size(); ++i) {
        if (cur[i].empty() && cur[i - 1].empty()) return;
      }
      std::string out;
      try {
        out = decode_spelled(cur);
      } catch (const Error&) {
        return;
      }
      auto [it, fresh] = seen.emplace(out, cur);
      if (!fresh) {
        // Same output only if the token lists name the same letters.
        EXPECT_EQ(it->second, cur) << out;
      }
      return;
    }
    for (const auto& n : names) {
      cur.push_back(n);
      rec(depth - 1);
      cur.pop_back();
    }
  };
  for (int d = 1; d <= 3; ++d) rec(d);
}
