#pragma once

#include <span>
#include <string>
#include <string_view>

#include "litshuffle/alphabet.hpp"

namespace litshuffle {

/// A finite symbol sequence over some alphabet; empty() is the word epsilon.
using Word = std::u32string;

/// Like Word, but may contain kPad. Only used inside shuffle algorithms;
/// never serialized to user-facing output.
using PaddedWord = std::u32string;

/// Column-wise perfect interleave of equal-length rows:
/// I(v1,...,vn) = v1[0] v2[0] ... vn[0] v1[1] ... vn[m-1].
/// Throws empty_arity for n = 0 and length_mismatch for ragged rows.
PaddedWord interleave(std::span<const PaddedWord> rows);

/// Appends the interleave to `out` instead of allocating. Hot-path variant.
void interleave_into(std::span<const PaddedWord> rows, PaddedWord& out);

/// The pad-erasing homomorphism: deletes every kPad, keeps everything else
/// in order.
Word erase_pad(const PaddedWord& padded);

/// Mirror image. An involution; commutes with erase_pad.
Word reverse_word(const Word& w);

/// True if every symbol of `w` belongs to `alphabet` (pad excluded).
bool word_over(const Word& w, const Alphabet& alphabet);

/// Throws bad_token naming the offending symbol if `w` strays outside
/// `alphabet`.
void require_word_over(const Word& w, const Alphabet& alphabet,
                       std::string_view context);

/// Decodes a UTF-8 word and validates it against the alphabet. The epsilon
/// token "@eps" is handled by callers, not here.
Word word_from_utf8(std::string_view bytes, const Alphabet& alphabet);

/// UTF-8 form of a word; the empty word renders as "@eps".
std::string render_word(const Word& w);

/// Debug rendering only: pad shows as '$'.
std::string render_padded(const PaddedWord& padded);

/// Canonical order: shorter words first, ties broken lexicographically by
/// alphabet declaration order.
struct CanonicalLess {
    const Alphabet* alphabet = nullptr;
    bool operator()(const Word& a, const Word& b) const;
};

} // namespace litshuffle
