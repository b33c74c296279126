#pragma once

#include <string_view>

#include "permlex/word.hpp"

namespace permlex {

// Grammar (nesting allowed):
//   fibonacci | thue-morse | sturmian:<d1>,<d2>,... | explicit:<digits>
//   | morphic:<image0>,<image1>[@<seed>] | double(<spec>) | complement(<spec>)
WordSource parse_word_spec(std::string_view text);

}  // namespace permlex
