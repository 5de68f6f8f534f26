#pragma once

#include <string>
#include <string_view>

namespace litshuffle {

// Words and alphabets are sequences of raw code points; no normalization.
std::u32string utf8_decode(std::string_view bytes);
std::string utf8_encode(std::u32string_view codepoints);
std::string utf8_encode(char32_t codepoint);

} // namespace litshuffle
