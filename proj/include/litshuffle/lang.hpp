#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "litshuffle/budget.hpp"
#include "litshuffle/word.hpp"

namespace litshuffle {

/// A deduplicated finite set of words over one alphabet, kept in canonical
/// order (length, then lexicographic by alphabet order). Immutable after
/// construction.
class Lang {
  public:
    Lang() = default;
    explicit Lang(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    /// Validates every word against the alphabet, deduplicates, sorts.
    static Lang of(Alphabet alphabet, std::vector<Word> words);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Word>& words() const noexcept { return words_; }

    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    bool contains(const Word& w) const;

    /// Length of the longest word; 0 for the empty language.
    std::size_t max_word_len() const noexcept;

    bool operator==(const Lang& other) const noexcept = default;

  private:
    Alphabet alphabet_;
    std::vector<Word> words_; // canonically sorted, unique
};

/// { u1 u2 ... un : ui in Li }, deduplicated. All Li must share one alphabet.
Lang concat_langs(std::span<const Lang> langs, NodeBudget* budget = nullptr);

struct LangParse {
    Lang lang;
    std::vector<std::string> warnings; // e.g. deduplicated duplicate words
};

/// Line-oriented language file:
///   - optional first line "alphabet: <symbols>" (otherwise `fallback` is
///     required),
///   - '#' starts a comment line, blank lines are ignored,
///   - "@eps" denotes the empty word, any other line is one word.
LangParse parse_lang(std::string_view text,
                     const std::optional<Alphabet>& fallback = std::nullopt);

/// Inverse of parse_lang; with_header controls the "alphabet:" first line.
/// parse_lang(render_lang(L)) == L.
std::string render_lang(const Lang& lang, bool with_header = true);

} // namespace litshuffle
