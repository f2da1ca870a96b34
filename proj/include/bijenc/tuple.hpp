#pragma once
// tuple.hpp - Nat <-> Nat^k bijections by k-way bit interleaving.
//
// Member j of the k-tuple of n collects bits j, j+k, j+2k, ... of n. For
// k == 2 this is the Morton-code pairing function.

#include <bijenc/nat.hpp>

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bijenc {

using NatTuple = std::vector<Nat>;

namespace detail {

class BitBuffer {
public:
    void set(std::size_t i) {
        const std::size_t w = i / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (i % 64);
    }

    Nat to_nat() const { return Nat::from_limbs(words_); }

private:
    std::vector<std::uint64_t> words_;
};

/// Calls f(i) for every set bit i of n, in increasing order.
template <class F>
void for_each_set_bit(const Nat& n, F&& f) {
    if (n.bit_length() <= 64) {
        for (auto word = n.to<std::uint64_t>(); word != 0; word &= word - 1)
            f(static_cast<std::size_t>(std::countr_zero(word)));
        return;
    }
    const auto limbs = n.limbs();
    for (std::size_t w = 0; w < limbs.size(); ++w) {
        for (std::uint64_t word = limbs[w]; word != 0; word &= word - 1)
            f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
    }
}

inline void require_stride(std::size_t k, const char* op) {
    if (k == 0) throw domain_error(op, "stride k must be at least 1");
}

} // namespace detail

/// Keeps every k-th bit of n (bits 0, k, 2k, ...) and packs them densely.
inline Nat k_deflate(std::size_t k, const Nat& n) {
    detail::require_stride(k, "k_deflate");
    detail::BitBuffer out;
    detail::for_each_set_bit(n, [&](std::size_t i) {
        if (i % k == 0) out.set(i / k);
    });
    return out.to_nat();
}

/// Spreads the bits of n to positions 0, k, 2k, ...; every other bit is 0.
inline Nat k_inflate(std::size_t k, const Nat& n) {
    detail::require_stride(k, "k_inflate");
    detail::BitBuffer out;
    detail::for_each_set_bit(n, [&](std::size_t i) { out.set(i * k); });
    return out.to_nat();
}

/// Splits n into exactly k members; to_tuple(k, 0) is k zeros.
inline NatTuple to_tuple(std::size_t k, const Nat& n) {
    detail::require_stride(k, "to_tuple");
    if (k == 1) return {n};
    if (n.bit_length() <= 64) {
        std::vector<std::uint64_t> words(k, 0);
        detail::for_each_set_bit(n, [&](std::size_t i) { words[i % k] |= std::uint64_t{1} << (i / k); });
        return NatTuple(words.begin(), words.end());
    }
    std::vector<detail::BitBuffer> members(k);
    detail::for_each_set_bit(n, [&](std::size_t i) { members[i % k].set(i / k); });
    NatTuple out;
    out.reserve(k);
    for (const auto& m : members) out.push_back(m.to_nat());
    return out;
}

/// Inverse of to_tuple at arity ns.size().
inline Nat from_tuple(std::span<const Nat> ns) {
    if (ns.empty()) throw domain_error("from_tuple", "empty tuple");
    const std::size_t k = ns.size();
    if (k == 1) return ns[0];
    detail::BitBuffer out;
    for (std::size_t j = 0; j < k; ++j)
        detail::for_each_set_bit(ns[j], [&](std::size_t i) { out.set(i * k + j); });
    return out.to_nat();
}

inline std::pair<Nat, Nat> to_pair(const Nat& n) {
    auto t = to_tuple(2, n);
    return {std::move(t[0]), std::move(t[1])};
}

inline Nat from_pair(const Nat& a, const Nat& b) {
    const Nat ab[] = {a, b};
    return from_tuple(ab);
}

} // namespace bijenc
