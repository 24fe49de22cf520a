#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/locid.h>
#include <unicode/utf8.h>

namespace stoplex {

/// Canonical word-internal apostrophe (MODIFIER LETTER TURNED COMMA), used in
/// Uzbek Latin for the oʻ and gʻ letters.
inline constexpr char32_t kCanonicalApostrophe = U'ʻ';

/// Code points accepted as an apostrophe inside a word. All of them are
/// rewritten to kCanonicalApostrophe.
[[nodiscard]] constexpr bool is_apostrophe(char32_t c) noexcept {
  return c == U'\'' || c == U'’' || c == U'ʼ' || c == U'`' || c == U'ʻ';
}

/// Returns true when `text` is well-formed UTF-8. On failure `error_offset`
/// receives the byte offset of the first bad sequence.
[[nodiscard]] inline bool is_valid_utf8(std::string_view text,
                                        std::size_t* error_offset = nullptr) noexcept {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c = 0;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      if (error_offset != nullptr) *error_offset = static_cast<std::size_t>(start);
      return false;
    }
  }
  return true;
}

namespace detail {

inline const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || normalizer == nullptr) {
    throw std::runtime_error(std::string("ICU NFC normalizer unavailable: ") + u_errorName(status));
  }
  return *normalizer;
}

inline icu::UnicodeString to_nfc(const icu::UnicodeString& text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = nfc().normalize(text, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("NFC normalization failed: ") + u_errorName(status));
  }
  return out;
}

[[nodiscard]] inline bool is_word_letter(UChar32 c) noexcept { return u_isalpha(c) != 0; }

[[nodiscard]] inline bool is_combining_mark(UChar32 c) noexcept {
  return (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0;
}

inline void finish_token(icu::UnicodeString& current, std::vector<std::string>& out) {
  if (current.isEmpty()) return;
  current.toLower(icu::Locale::getRoot());
  std::string utf8;
  to_nfc(current).toUTF8String(utf8);
  out.push_back(std::move(utf8));
  current.remove();
}

}  // namespace detail

/// Splits raw text into normalized word tokens.
///
/// A token is a maximal run of letters (combining marks attach to the
/// preceding letter). A single apostrophe between two letters stays inside
/// the token and is rewritten to U+02BB; any other apostrophe, digit,
/// punctuation or whitespace separates tokens. The text is NFC-normalized
/// first and each token is lowercased with root-locale full case mapping.
///
/// Ill-formed UTF-8 sequences become U+FFFD and therefore act as separators.
[[nodiscard]] inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  if (text.empty()) return tokens;

  const icu::UnicodeString normalized = detail::to_nfc(
      icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size()))));

  icu::UnicodeString current;
  bool pending_apostrophe = false;

  for (int32_t i = 0; i < normalized.length();) {
    const UChar32 c = normalized.char32At(i);
    i += U16_LENGTH(c);

    if (is_apostrophe(static_cast<char32_t>(c))) {
      if (!current.isEmpty() && !pending_apostrophe) {
        pending_apostrophe = true;
      } else {
        // Doubled or leading apostrophe: ends the current word, dropped.
        pending_apostrophe = false;
        detail::finish_token(current, tokens);
      }
      continue;
    }

    const bool letter = detail::is_word_letter(c);
    const bool mark = !letter && detail::is_combining_mark(c) && !current.isEmpty() &&
                      !pending_apostrophe;
    if (letter || mark) {
      if (pending_apostrophe) {
        current.append(static_cast<UChar32>(kCanonicalApostrophe));
        pending_apostrophe = false;
      }
      current.append(c);
      continue;
    }

    pending_apostrophe = false;
    detail::finish_token(current, tokens);
  }
  detail::finish_token(current, tokens);
  return tokens;
}

}  // namespace stoplex
