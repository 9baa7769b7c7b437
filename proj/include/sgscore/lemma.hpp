#ifndef SGSCORE_LEMMA_HPP
#define SGSCORE_LEMMA_HPP

#include <compare>
#include <functional>
#include <string>
#include <string_view>

#include "sgscore/error.hpp"

namespace sgscore {

// A normalized lemma string used as node identity in scene graphs.
// The distinguished value phi() stands for a zero pronoun: an omitted
// subject that the parser could not resolve. Lemmas are expected to be
// NFC-normalized by the annotation layer; construction trims surrounding
// whitespace (ASCII plus U+3000) and rejects empty results.
class Lemma {
 public:
  Lemma() = default;

  static Lemma make(std::string_view text) {
    std::string t = trim(text);
    if (t.empty()) throw Error("lemma is empty after normalization");
    if (t == kPhiText) throw Error("the zero-pronoun marker is reserved");
    return Lemma(std::move(t));
  }

  // The zero-pronoun marker. Reserved: make() rejects its text, callers must
  // use phi() explicitly.
  static Lemma phi() { return Lemma(std::string(kPhiText)); }

  bool is_phi() const { return text_ == kPhiText; }
  const std::string &text() const { return text_; }

  auto operator<=>(const Lemma &) const = default;

  static constexpr std::string_view kPhiText = "\xcf\x86";  // U+03C6

 private:
  explicit Lemma(std::string text) : text_(std::move(text)) {}

  static std::string trim(std::string_view s) {
    auto is_space_at = [&](std::size_t i, std::size_t *len) {
      unsigned char c = static_cast<unsigned char>(s[i]);
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
          c == '\f') {
        *len = 1;
        return true;
      }
      // U+3000 ideographic space: E3 80 80
      if (c == 0xE3 && i + 2 < s.size() &&
          static_cast<unsigned char>(s[i + 1]) == 0x80 &&
          static_cast<unsigned char>(s[i + 2]) == 0x80) {
        *len = 3;
        return true;
      }
      return false;
    };
    std::size_t begin = 0;
    std::size_t len = 0;
    while (begin < s.size() && is_space_at(begin, &len)) begin += len;
    std::size_t end = s.size();
    while (end > begin) {
      // scan backwards one code unit at a time; multi-byte U+3000 is checked
      // from its lead byte
      bool trimmed = false;
      for (std::size_t k = 1; k <= 3 && end >= begin + k; ++k) {
        std::size_t i = end - k;
        std::size_t l = 0;
        if (is_space_at(i, &l) && i + l == end) {
          end = i;
          trimmed = true;
          break;
        }
      }
      if (!trimmed) break;
    }
    return std::string(s.substr(begin, end - begin));
  }

  std::string text_;
};

}  // namespace sgscore

template <>
struct std::hash<sgscore::Lemma> {
  std::size_t operator()(const sgscore::Lemma &l) const {
    return std::hash<std::string>()(l.text());
  }
};

#endif  // SGSCORE_LEMMA_HPP
