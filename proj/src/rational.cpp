#include "ordpar/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace ordpar {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_wide(u128 a, u128 b)
{
    if (a <= std::numeric_limits<std::uint64_t>::max() && b <= std::numeric_limits<std::uint64_t>::max())
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 magnitude(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

void set_mpz_from_wide(mpz_class& out, i128 v)
{
    const bool negative = v < 0;
    u128 m = magnitude(v);
    const auto hi = static_cast<std::uint64_t>(m >> 64);
    const auto lo = static_cast<std::uint64_t>(m);
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &hi);
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), 64);
    mpz_class low;
    mpz_import(low.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &lo);
    out += low;
    if (negative)
        out = -out;
}

bool fits_small(const mpz_class& v)
{
    return mpz_fits_slong_p(v.get_mpz_t()) && mpz_cmpabs_ui(v.get_mpz_t(), static_cast<unsigned long>(kSmallMax)) <= 0;
}

}  // namespace

Rat::Rat(std::int64_t value) : num_(value)
{
    if (value == std::numeric_limits<std::int64_t>::min())
        *this = from_mpq(mpq_class(mpz_class(static_cast<long>(value))));
}

Rat::Rat(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    *this = from_wide(numerator, denominator);
}

Rat::Rat(const mpq_class& value) { *this = from_mpq(value); }

Rat Rat::from_wide(i128 numerator, i128 denominator)
{
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const u128 g = gcd_wide(magnitude(numerator), static_cast<u128>(denominator));
    if (g > 1) {
        numerator /= static_cast<i128>(g);
        denominator /= static_cast<i128>(g);
    }
    if (magnitude(numerator) <= static_cast<u128>(kSmallMax) && denominator <= kSmallMax) {
        Rat r;
        r.num_ = static_cast<std::int64_t>(numerator);
        r.den_ = static_cast<std::int64_t>(denominator);
        return r;
    }
    mpz_class n, d;
    set_mpz_from_wide(n, numerator);
    set_mpz_from_wide(d, denominator);
    mpq_class q(n, d);
    q.canonicalize();
    return from_mpq(std::move(q));
}

Rat Rat::from_mpq(mpq_class value)
{
    value.canonicalize();
    Rat r;
    if (fits_small(value.get_num()) && fits_small(value.get_den())) {
        r.num_ = value.get_num().get_si();
        r.den_ = value.get_den().get_si();
        return r;
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(value));
    return r;
}

Rat Rat::parse(std::string_view text)
{
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num_text = text.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num_text, true) || !valid_integer(den_text, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    std::string num_string(num_text);
    if (!num_string.empty() && num_string.front() == '+')
        num_string.erase(0, 1);
    mpz_class n(num_string, 10);
    mpz_class d(std::string(den_text), 10);
    if (d == 0)
        throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
    return from_mpq(mpq_class(n, d));
}

bool Rat::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rat::sign() const
{
    if (big_)
        return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rat::to_mpq() const
{
    if (big_)
        return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rat::to_double() const
{
    if (big_)
        return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rat::to_string() const
{
    if (big_)
        return big_->get_str();
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::operator-() const
{
    if (big_)
        return from_mpq(-*big_);
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat& Rat::operator+=(const Rat& other)
{
    if (!big_ && !other.big_) {
        if (den_ == other.den_)
            *this = from_wide(static_cast<i128>(num_) + other.num_, den_);
        else
            *this = from_wide(static_cast<i128>(num_) * other.den_ + static_cast<i128>(other.num_) * den_,
                              static_cast<i128>(den_) * other.den_);
        return *this;
    }
    *this = from_mpq(to_mpq() + other.to_mpq());
    return *this;
}

Rat& Rat::operator-=(const Rat& other)
{
    if (!big_ && !other.big_) {
        if (den_ == other.den_)
            *this = from_wide(static_cast<i128>(num_) - other.num_, den_);
        else
            *this = from_wide(static_cast<i128>(num_) * other.den_ - static_cast<i128>(other.num_) * den_,
                              static_cast<i128>(den_) * other.den_);
        return *this;
    }
    *this = from_mpq(to_mpq() - other.to_mpq());
    return *this;
}

Rat& Rat::operator*=(const Rat& other)
{
    if (!big_ && !other.big_) {
        if (num_ == 0 || other.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        *this = from_wide(static_cast<i128>(num_) * other.num_, static_cast<i128>(den_) * other.den_);
        return *this;
    }
    *this = from_mpq(to_mpq() * other.to_mpq());
    return *this;
}

Rat& Rat::operator/=(const Rat& other)
{
    if (other.is_zero())
        throw std::domain_error("rational division by zero");
    if (!big_ && !other.big_) {
        *this = from_wide(static_cast<i128>(num_) * other.den_, static_cast<i128>(den_) * other.num_);
        return *this;
    }
    *this = from_mpq(to_mpq() / other.to_mpq());
    return *this;
}

bool operator==(const Rat& lhs, const Rat& rhs)
{
    if (!lhs.big_ && !rhs.big_)
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    if (lhs.big_ && rhs.big_)
        return *lhs.big_ == *rhs.big_;
    return false;
}

std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs)
{
    if (!lhs.big_ && !rhs.big_) {
        const i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
        const i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
        return a <=> b;
    }
    const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
    return c <=> 0;
}

Rat abs(const Rat& value) { return value.sign() < 0 ? -value : value; }
Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat floor(const Rat& value)
{
    const mpq_class q = value.to_mpq();
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rat(mpq_class(out));
}

Rat ceil(const Rat& value)
{
    const mpq_class q = value.to_mpq();
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rat(mpq_class(out));
}

std::ostream& operator<<(std::ostream& os, const Rat& value) { return os << value.to_string(); }

}  // namespace ordpar
