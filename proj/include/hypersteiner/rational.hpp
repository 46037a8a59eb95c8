#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hypersteiner {

/// Exact rational scalar backed by GMP. A thin value wrapper that keeps
/// every result canonicalized and shields callers from gmpxx expression
/// templates.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long n, long d);
    explicit Rat(mpq_class v);

    /// Exact conversion of the binary value of a double.
    static Rat from_double(double x);

    /// Parses "p/q", "p" or "-p/q". Returns nullopt on malformed input
    /// or a zero denominator.
    static std::optional<Rat> parse(const std::string& text);

    /// "p/q" when the canonical denominator is not 1, plain "p" otherwise.
    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
    Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
    Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_;
};

Rat abs(const Rat& a);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

/// Nearest rational with denominator 2^bits (ties round up). Keeps the
/// numbers produced from optimizer floats small enough for fast exact
/// geometry downstream.
Rat round_dyadic(double x, unsigned bits);

/// Best rational approximation of x with denominator <= max_den, via the
/// continued-fraction expansion (convergents plus the final
/// semiconvergent). Used to snap optimizer output back onto the small
/// denominators instance data lives on.
Rat best_approx(const Rat& x, const mpz_class& max_den);

}  // namespace hypersteiner
