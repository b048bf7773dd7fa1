#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ordpar {

/**
 * Exact rational number.
 *
 * Values whose numerator and denominator fit into a signed 64-bit word are
 * stored inline and combined with 128-bit intermediates; anything larger is
 * promoted to a GMP rational. The representation is canonical: lowest terms,
 * positive denominator, and a value that fits inline is never stored as a
 * GMP number. Nothing ever rounds.
 */
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t value);  // NOLINT: implicit conversion from integers is intended
    Rat(int value) : Rat(static_cast<std::int64_t>(value)) {}  // NOLINT
    Rat(std::int64_t numerator, std::int64_t denominator);
    explicit Rat(const mpq_class& value);

    /// Parses "p", "-p" or "p/q" (whitespace around the token is rejected).
    static Rat parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    double to_double() const;
    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& other);
    Rat& operator-=(const Rat& other);
    Rat& operator*=(const Rat& other);
    Rat& operator/=(const Rat& other);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rat& lhs, const Rat& rhs);
    friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs);

private:
    static Rat from_wide(__int128 numerator, __int128 denominator);
    static Rat from_mpq(mpq_class value);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

Rat abs(const Rat& value);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);
/// Largest integer not above the value.
Rat floor(const Rat& value);
/// Smallest integer not below the value.
Rat ceil(const Rat& value);

std::ostream& operator<<(std::ostream& os, const Rat& value);

}  // namespace ordpar
