#pragma once
// nat.hpp - arbitrary-precision natural numbers and the bitwise primitives
// every codec is built from.

#include <bijenc/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <compare>
#include <concepts>
#include <cstdint>
#include <iterator>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bijenc {

/// Immutable non-negative integer of unbounded magnitude.
class Nat {
public:
    using rep_type = boost::multiprecision::cpp_int;

    Nat() = default;

    template <std::integral T>
    Nat(T v) : v_(v) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<T>) {
            if (v < 0) throw domain_error("Nat", "negative value " + std::to_string(v));
        }
    }

    static Nat from_rep(rep_type v) {
        if (v.sign() < 0) throw domain_error("Nat", "negative value " + v.str());
        Nat n;
        n.v_ = std::move(v);
        return n;
    }

    /// Parses a decimal literal: one or more ASCII digits, nothing else.
    static Nat parse(std::string_view text) {
        if (text.empty()) throw syntax_error("expected a natural number", 0);
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw syntax_error("invalid digit in natural number '" + std::string(text) + "'", i);
        }
        Nat n;
        n.v_ = rep_type(std::string(text));
        return n;
    }

    /// Little-endian 64-bit limbs; zero has no limbs.
    static Nat from_limbs(std::span<const std::uint64_t> limbs) {
        Nat n;
        if (!limbs.empty())
            boost::multiprecision::import_bits(n.v_, limbs.begin(), limbs.end(), 64, false);
        return n;
    }

    std::vector<std::uint64_t> limbs() const {
        std::vector<std::uint64_t> out;
        if (is_zero()) return out;
        boost::multiprecision::export_bits(v_, std::back_inserter(out), 64, false);
        return out;
    }

    const rep_type& rep() const noexcept { return v_; }
    std::string str() const { return v_.str(); }

    bool is_zero() const noexcept { return v_.is_zero(); }

    /// Number of significant bits; 0 for zero.
    std::size_t bit_length() const {
        return is_zero() ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(v_)) + 1;
    }

    bool bit(std::size_t i) const { return boost::multiprecision::bit_test(v_, static_cast<unsigned>(i)); }

    /// Converts to a machine integer, failing if the value does not fit.
    template <std::unsigned_integral T>
    T to(std::string_view op = "Nat") const {
        if (v_ > std::numeric_limits<T>::max())
            throw domain_error(std::string(op), "value " + str() + " exceeds machine range");
        return static_cast<T>(v_);
    }

    friend Nat operator+(const Nat& a, const Nat& b) { return from_rep(a.v_ + b.v_); }
    friend Nat operator*(const Nat& a, const Nat& b) { return from_rep(a.v_ * b.v_); }
    friend Nat operator-(const Nat& a, const Nat& b) {
        if (a.v_ < b.v_) throw domain_error("subtract", a.str() + " - " + b.str() + " is negative");
        return from_rep(a.v_ - b.v_);
    }
    friend Nat operator/(const Nat& a, const Nat& b) {
        if (b.is_zero()) throw domain_error("divide", "division by zero");
        return from_rep(a.v_ / b.v_);
    }
    friend Nat operator%(const Nat& a, const Nat& b) {
        if (b.is_zero()) throw domain_error("modulo", "division by zero");
        return from_rep(a.v_ % b.v_);
    }
    friend Nat operator|(const Nat& a, const Nat& b) { return from_rep(a.v_ | b.v_); }
    friend Nat operator&(const Nat& a, const Nat& b) { return from_rep(a.v_ & b.v_); }
    friend Nat operator<<(const Nat& a, std::size_t k) { return from_rep(a.v_ << k); }
    friend Nat operator>>(const Nat& a, std::size_t k) { return from_rep(a.v_ >> k); }

    friend bool operator==(const Nat& a, const Nat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
        const int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.v_; }

private:
    rep_type v_;
};

/// Quotient and remainder of a Nat by a machine-word divisor.
inline std::pair<Nat, std::uint64_t> divmod(const Nat& n, std::uint64_t d) {
    if (d == 0) throw domain_error("divmod", "division by zero");
    Nat::rep_type q, r;
    boost::multiprecision::divide_qr(n.rep(), Nat::rep_type(d), q, r);
    return {Nat::from_rep(std::move(q)), static_cast<std::uint64_t>(r)};
}

// Primitive operations. Each is at most linear in the bitsize of its operand.

inline Nat first_bit(const Nat& n) { return n.bit(0) ? Nat(1) : Nat(0); }
inline Nat shift_left(const Nat& n, std::size_t k) { return n << k; }
inline Nat shift_right(const Nat& n, std::size_t k) { return n >> k; }
inline Nat successor(const Nat& n) { return n + Nat(1); }

inline Nat predecessor(const Nat& n) {
    if (n.is_zero()) throw domain_error("predecessor", "0 has no predecessor");
    return n - Nat(1);
}

/// Index of the lowest set bit, i.e. the exponent of the largest power of 2 dividing n.
inline std::size_t lsb(const Nat& n) {
    if (n.is_zero()) throw domain_error("lsb", "0 has no set bit");
    return static_cast<std::size_t>(boost::multiprecision::lsb(n.rep()));
}

/// z = 2^x * (2y + 1). Always >= 1.
inline Nat cons(std::size_t x, const Nat& y) { return ((y << 1) + Nat(1)) << x; }

struct Decons {
    std::size_t x;
    Nat y;
    friend bool operator==(const Decons&, const Decons&) = default;
};

/// Unique (x, y) with cons(x, y) == z, for z >= 1.
inline Decons decons(const Nat& z) {
    if (z.is_zero()) throw domain_error("decons", "0 is not of the form 2^x(2y+1)");
    const std::size_t x = lsb(z);
    return {x, z >> (x + 1)};
}

} // namespace bijenc
