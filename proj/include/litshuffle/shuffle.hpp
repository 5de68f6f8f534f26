#pragma once

#include <optional>
#include <span>

#include "litshuffle/lang.hpp"

namespace litshuffle {

enum class ShuffleVariant {
    initial, // n-ary initial literal shuffle: one word per argument tuple
    literal, // n-ary literal shuffle: a set per argument tuple
    general, // all order-preserving interleavings
};

/// Three independent routes to the n-ary literal shuffle; they must compute
/// identical sets (cross-checked by the test suite).
enum class Shuffle2Algo {
    padding,       // pad each argument to n*max|ui| on both sides, interleave
    offsets,       // enumerate bounded left offsets, replay column-wise
    factorization, // split ui = xi yi, combine two initial shuffles
};

/// n-ary initial literal shuffle: right-pad all arguments to the maximum
/// length, interleave column-wise, erase the pads. |result| = sum |ui|.
Word shuffle1(std::span<const Word> args);

/// Language extension of shuffle1 over the Cartesian product of the Li.
Lang shuffle1_lang(std::span<const Lang> langs, NodeBudget* budget = nullptr);

/// Binary initial literal shuffle built from word splits: lock-step
/// interleave of the common-length prefixes, excess tail appended. Equals
/// shuffle1_lang(U, V); kept split-based as an independent route.
Lang init_literal_shuffle(const Lang& u, const Lang& v,
                          NodeBudget* budget = nullptr);

/// n-ary literal shuffle of a word tuple. Every member has length sum |ui|.
Lang shuffle2(const Alphabet& alphabet, std::span<const Word> args,
              Shuffle2Algo algo = Shuffle2Algo::padding,
              NodeBudget* budget = nullptr);

/// Language extension of shuffle2 over the Cartesian product of the Li.
Lang shuffle2_lang(std::span<const Lang> langs,
                   Shuffle2Algo algo = Shuffle2Algo::padding,
                   NodeBudget* budget = nullptr);

/// General (asynchronous) shuffle of two words: all interleavings that
/// preserve the relative order within each argument.
Lang general_shuffle(const Alphabet& alphabet, const Word& u, const Word& v,
                     NodeBudget* budget = nullptr);

/// Left fold of the binary general shuffle (the general shuffle is
/// associative, unlike the literal variants).
Lang general_shuffle_n(const Alphabet& alphabet, std::span<const Word> args,
                       NodeBudget* budget = nullptr);

/// Language-level left fold of the general shuffle.
Lang general_shuffle_lang(std::span<const Lang> langs,
                          NodeBudget* budget = nullptr);

/// Truncation bounds for the iterated shuffles, whose arity is unbounded.
/// Truncating by output length is sound because every result of an n-tuple
/// has exactly the tuple's total length, so arity is capped by
/// max_len / min nonempty word length.
struct IterBudget {
    std::size_t max_len = 0;
    std::optional<std::size_t> max_arity = std::nullopt;
};

/// {epsilon} united with every n-fold application of the chosen variant to
/// argument tuples from L, restricted to words of length <= budget.max_len.
/// `variant` must be initial or literal.
Lang iterated_shuffle(const Lang& lang, ShuffleVariant variant,
                      const IterBudget& iter_budget,
                      NodeBudget* budget = nullptr);

/// Replay kernel shared by the offset-based algorithms and witness checking:
/// left-pad each args[i] by offsets[i], right-pad all to a common length,
/// interleave column-wise and erase pads. Appends to `out`.
void replay_offsets_into(std::span<const Word> args,
                         std::span<const std::size_t> offsets, Word& out);

} // namespace litshuffle
