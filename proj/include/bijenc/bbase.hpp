#pragma once
// bbase.hpp - bijective base-k numeration and the lowercase string codec.
//
// Digit sequences are least-significant digit first. Surface digits are
// 0..base-1; internally each digit d stands for d+1, so every sequence,
// including ones with trailing "zero" digits, names a distinct number.

#include <bijenc/nat.hpp>

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bijenc {

using Digits = std::vector<std::uint32_t>;

namespace detail {
inline void require_base(std::uint32_t base, const char* op) {
    if (base < 2) throw domain_error(op, "base must be at least 2, got " + std::to_string(base));
}
} // namespace detail

inline Nat from_bbase(std::uint32_t base, std::span<const std::uint32_t> digits) {
    detail::require_base(base, "from_bbase");
    Nat r;
    const Nat b(base);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it >= base)
            throw domain_error("from_bbase", "digit " + std::to_string(*it) + " out of range for base " +
                                                 std::to_string(base));
        r = r * b + Nat(*it + 1);
    }
    return r;
}

inline Digits to_bbase(std::uint32_t base, const Nat& n) {
    detail::require_base(base, "to_bbase");
    Digits out;
    Nat q = n;
    while (!q.is_zero()) {
        auto [quot, rem] = divmod(q, base);
        // A zero remainder is the digit `base`, borrowing one from the quotient.
        if (rem == 0) {
            out.push_back(base - 1);
            q = predecessor(quot);
        } else {
            out.push_back(static_cast<std::uint32_t>(rem - 1));
            q = std::move(quot);
        }
    }
    return out;
}

// Strings over 'a'..'z' in bijective base 26.

inline constexpr char alphabet_first = 'a';
inline constexpr char alphabet_last = 'z';
inline constexpr std::uint32_t alphabet_base = 1 + alphabet_last - alphabet_first;

inline std::uint32_t chr2ord(char c) {
    if (c < alphabet_first || c > alphabet_last)
        throw domain_error("chr2ord", std::string("character '") + c + "' is outside a..z");
    return static_cast<std::uint32_t>(c - alphabet_first);
}

inline char ord2chr(std::uint32_t o) {
    if (o >= alphabet_base) throw domain_error("ord2chr", "ordinal " + std::to_string(o) + " is outside 0..25");
    return static_cast<char>(alphabet_first + o);
}

inline Nat string2nat(std::string_view s) {
    Digits ds;
    ds.reserve(s.size());
    for (char c : s) ds.push_back(chr2ord(c));
    return from_bbase(alphabet_base, ds);
}

inline std::string nat2string(const Nat& n) {
    const Digits ds = to_bbase(alphabet_base, n);
    std::string s;
    s.reserve(ds.size());
    std::transform(ds.begin(), ds.end(), std::back_inserter(s), ord2chr);
    return s;
}

/// Symbol names use the string codec unchanged.
inline Nat atom2nat(std::string_view name) { return string2nat(name); }
inline std::string nat2atom(const Nat& n) { return nat2string(n); }

} // namespace bijenc
