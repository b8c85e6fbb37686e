#ifndef TVERBERG_DIGEST_HPP
#define TVERBERG_DIGEST_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace tverberg {

/// 64-bit FNV-1a as 16 lowercase hex digits.
inline std::string fnv1a_hex(std::string_view bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes)
    {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i)
    {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace tverberg

#endif
