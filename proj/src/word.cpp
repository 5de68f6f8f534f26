#include "litshuffle/word.hpp"

#include <algorithm>

#include "litshuffle/utf8.hpp"

namespace litshuffle {

void interleave_into(std::span<const PaddedWord> rows, PaddedWord& out) {
    if (rows.empty())
        raise(Errc::empty_arity, "interleave needs at least one argument");
    const std::size_t m = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != m)
            raise(Errc::length_mismatch,
                  "interleave arguments must have equal length (" +
                      std::to_string(m) + " vs " + std::to_string(row.size()) +
                      ")");
    out.reserve(out.size() + rows.size() * m);
    for (std::size_t col = 0; col < m; ++col)
        for (const auto& row : rows) out.push_back(row[col]);
}

PaddedWord interleave(std::span<const PaddedWord> rows) {
    PaddedWord out;
    interleave_into(rows, out);
    return out;
}

Word erase_pad(const PaddedWord& padded) {
    Word out;
    out.reserve(padded.size());
    for (Symbol s : padded)
        if (s != kPad) out.push_back(s);
    return out;
}

Word reverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool word_over(const Word& w, const Alphabet& alphabet) {
    return std::ranges::all_of(
        w, [&](Symbol s) { return alphabet.contains(s); });
}

void require_word_over(const Word& w, const Alphabet& alphabet,
                       std::string_view context) {
    for (Symbol s : w)
        if (!alphabet.contains(s))
            raise(Errc::bad_token,
                  std::string(context) + ": symbol '" + utf8_encode(s) +
                      "' of word '" + utf8_encode(w) +
                      "' is not in alphabet {" + alphabet.to_utf8() + "}");
}

Word word_from_utf8(std::string_view bytes, const Alphabet& alphabet) {
    Word w = utf8_decode(bytes);
    require_word_over(w, alphabet, "word");
    return w;
}

std::string render_word(const Word& w) {
    if (w.empty()) return "@eps";
    return utf8_encode(w);
}

std::string render_padded(const PaddedWord& padded) {
    std::string out;
    for (Symbol s : padded) out += s == kPad ? "$" : utf8_encode(s);
    return out;
}

bool CanonicalLess::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return alphabet->rank(a[i]) < alphabet->rank(b[i]);
    return false;
}

} // namespace litshuffle
