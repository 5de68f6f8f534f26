#pragma once

#include <stdexcept>
#include <string>

namespace litshuffle {

/// Error categories surfaced by the library. The CLI maps these to exit codes.
enum class Errc {
    length_mismatch,   // interleave arguments differ in length
    empty_arity,       // n-ary operation invoked with zero arguments
    alphabet_mismatch, // operands declared over different alphabets
    bad_token,         // symbol outside the declared alphabet / malformed input
    duplicate_word,    // duplicate in a language file (warning-level, not thrown)
    syntax_error,      // regex or file-format parse error
    unknown_symbol,    // regex literal not in the alphabet
    state_blowup,      // subset construction exceeded its state cap
    budget_exceeded,   // enumeration exceeded the node budget
    bad_usage,         // invalid CLI/front-end arguments
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace litshuffle
