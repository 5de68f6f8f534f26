#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "litshuffle/errors.hpp"

namespace litshuffle {

using Symbol = char32_t;

/// Internal padding marker. Sits above the Unicode range, so it can never
/// collide with a declared symbol.
inline constexpr Symbol kPad = 0x110000;

/// A finite, ordered set of symbols. The declaration order is total and
/// stable; it drives canonical sorting of language output.
class Alphabet {
  public:
    Alphabet() = default;

    /// Builds an alphabet from a sequence of code points. Duplicates collapse
    /// to their first occurrence. Control characters, whitespace, '#' and '@'
    /// are rejected: they would make the line-oriented file format ambiguous.
    explicit Alphabet(std::u32string_view symbols);

    /// Same, decoding the symbols from UTF-8 (e.g. a --alphabet flag value).
    static Alphabet from_utf8(std::string_view symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const std::u32string& symbols() const noexcept { return symbols_; }

    bool contains(Symbol s) const noexcept;

    /// Position of `s` in declaration order; throws bad_token if absent.
    std::size_t rank(Symbol s) const;

    bool operator==(const Alphabet& other) const noexcept = default;

    /// UTF-8 rendering of the symbol list, for diagnostics and file headers.
    std::string to_utf8() const;

  private:
    std::u32string symbols_;
};

/// Throws alphabet_mismatch unless both alphabets are identical (same symbols
/// in the same declaration order).
void require_same_alphabet(const Alphabet& a, const Alphabet& b,
                           std::string_view context);

} // namespace litshuffle
