#include "litshuffle/alphabet.hpp"

#include <algorithm>

#include "litshuffle/utf8.hpp"

namespace litshuffle {

namespace {

bool reserved_symbol(Symbol s) {
    // Control characters and whitespace break the line-oriented formats;
    // '#' and '@' are taken by comments and the "@eps" token.
    return s <= U' ' || s == 0x7F || s == U'#' || s == U'@';
}

} // namespace

Alphabet::Alphabet(std::u32string_view symbols) {
    for (Symbol s : symbols) {
        if (s >= kPad)
            raise(Errc::bad_token, "symbol outside the Unicode range");
        if (reserved_symbol(s))
            raise(Errc::bad_token,
                  "symbol '" + utf8_encode(s) +
                      "' is reserved and cannot be part of an alphabet");
        if (!contains(s)) symbols_.push_back(s);
    }
}

Alphabet Alphabet::from_utf8(std::string_view symbols) {
    return Alphabet(utf8_decode(symbols));
}

bool Alphabet::contains(Symbol s) const noexcept {
    return symbols_.find(s) != std::u32string::npos;
}

std::size_t Alphabet::rank(Symbol s) const {
    const auto pos = symbols_.find(s);
    if (pos == std::u32string::npos)
        raise(Errc::bad_token,
              "symbol '" + utf8_encode(s) + "' is not in alphabet {" +
                  to_utf8() + "}");
    return pos;
}

std::string Alphabet::to_utf8() const { return utf8_encode(symbols_); }

void require_same_alphabet(const Alphabet& a, const Alphabet& b,
                           std::string_view context) {
    if (a != b)
        raise(Errc::alphabet_mismatch,
              std::string(context) + ": alphabets differ ({" + a.to_utf8() +
                  "} vs {" + b.to_utf8() + "})");
}

} // namespace litshuffle
