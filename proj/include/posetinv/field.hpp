#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace posetinv {

using rational = mpq_class;

// Residue class modulo a prime P < 2^32.
template <std::uint32_t P>
class fp {
public:
    static constexpr std::uint32_t modulus = P;

    constexpr fp() = default;
    constexpr fp(long long v) : v_(reduce(v)) {}

    constexpr std::uint32_t value() const { return v_; }

    friend constexpr fp operator+(fp a, fp b) {
        std::uint64_t s = std::uint64_t(a.v_) + b.v_;
        return raw(std::uint32_t(s >= P ? s - P : s));
    }
    friend constexpr fp operator-(fp a, fp b) {
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : std::uint32_t(std::uint64_t(a.v_) + P - b.v_));
    }
    friend constexpr fp operator*(fp a, fp b) {
        return raw(std::uint32_t(std::uint64_t(a.v_) * b.v_ % P));
    }
    friend constexpr fp operator/(fp a, fp b) { return a * b.inverse(); }
    constexpr fp operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
    constexpr fp& operator+=(fp o) { return *this = *this + o; }
    constexpr fp& operator-=(fp o) { return *this = *this - o; }
    constexpr fp& operator*=(fp o) { return *this = *this * o; }
    constexpr fp& operator/=(fp o) { return *this = *this / o; }
    friend constexpr bool operator==(fp a, fp b) { return a.v_ == b.v_; }

    constexpr fp inverse() const {
        if (v_ == 0) throw InternalError("division by zero in GF(" + std::to_string(P) + ")");
        // Fermat: a^(P-2)
        fp base = *this, acc = raw(1);
        std::uint64_t e = P - 2;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, fp a) { return os << a.v_; }

private:
    static constexpr fp raw(std::uint32_t v) {
        fp r;
        r.v_ = v;
        return r;
    }
    static constexpr std::uint32_t reduce(long long v) {
        long long r = v % static_cast<long long>(P);
        return static_cast<std::uint32_t>(r < 0 ? r + P : r);
    }
    std::uint32_t v_ = 0;
};

inline constexpr std::uint32_t default_prime = 2147483629u;

template <class K>
struct field_traits;

template <>
struct field_traits<rational> {
    static std::string name() { return "Q"; }
    static bool is_zero(const rational& x) { return sgn(x) == 0; }
    static rational from_int(long long v) { return rational(mpz_class(std::to_string(v))); }
    static rational from_fraction(const mpz_class& num, const mpz_class& den) {
        rational r(num, den);
        r.canonicalize();
        return r;
    }
    static std::string to_string(const rational& x) { return x.get_str(); }
    static std::optional<long long> to_integer(const rational& x) {
        if (x.get_den() != 1 || !x.get_num().fits_slong_p()) return std::nullopt;
        return x.get_num().get_si();
    }
};

template <std::uint32_t P>
struct field_traits<fp<P>> {
    static std::string name() { return "GF(" + std::to_string(P) + ")"; }
    static bool is_zero(const fp<P>& x) { return x.value() == 0; }
    static fp<P> from_int(long long v) { return fp<P>(v); }
    static fp<P> from_fraction(const mpz_class& num, const mpz_class& den) {
        mpz_class p(P);
        mpz_class n = num % p, d = den % p;
        if (d < 0) d += p;
        if (d == 0) throw format_error("denominator divisible by the field characteristic " + std::to_string(P));
        if (n < 0) n += p;
        return fp<P>(static_cast<long long>(n.get_ui())) / fp<P>(static_cast<long long>(d.get_ui()));
    }
    static std::string to_string(const fp<P>& x) { return std::to_string(x.value()); }
    static std::optional<long long> to_integer(const fp<P>& x) { return static_cast<long long>(x.value()); }
};

// Parses "n", "-n" or "n/d" with arbitrary-size integers.
template <class K>
K parse_scalar(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    mpz_class num, den(1);
    try {
        if (slash == std::string::npos) {
            num = mpz_class(s);
        } else {
            num = mpz_class(s.substr(0, slash));
            den = mpz_class(s.substr(slash + 1));
        }
    } catch (const std::invalid_argument&) {
        throw format_error("malformed scalar '" + s + "'");
    }
    if (den == 0) throw format_error("zero denominator in '" + s + "'");
    return field_traits<K>::from_fraction(num, den);
}

template <class K>
K scalar(long long v) {
    return field_traits<K>::from_int(v);
}

template <class K>
bool is_zero(const K& x) {
    return field_traits<K>::is_zero(x);
}

}  // namespace posetinv
