#pragma once

namespace triangle_words {

// 128-bit intermediate for products of two 64-bit values.
__extension__ typedef __int128 WideInt;

}  // namespace triangle_words
