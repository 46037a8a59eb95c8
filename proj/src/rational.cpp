#include "hypersteiner/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace hypersteiner {

Rat::Rat(long n, long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
}

Rat Rat::from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    return Rat(mpq_class(x));
}

std::optional<Rat> Rat::parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    // mpq_class accepts whitespace and more exotic forms; keep the grammar
    // tight: -?digits(/digits)?
    size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
    if (digits == 0) return std::nullopt;
    if (i < text.size()) {
        if (text[i] != '/') return std::nullopt;
        ++i;
        size_t den_digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++den_digits; }
        if (den_digits == 0 || i != text.size()) return std::nullopt;
    }
    mpq_class v;
    if (v.set_str(text, 10) != 0) return std::nullopt;
    if (v.get_den() == 0) return std::nullopt;
    v.canonicalize();
    return Rat(std::move(v));
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.sign() == 0) throw std::invalid_argument("rational division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
}

Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }
Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat round_dyadic(double x, unsigned bits) {
    Rat scaled = Rat::from_double(std::ldexp(x, static_cast<int>(bits)));
    // round to nearest integer, half up
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.num().get_mpz_t(), scaled.den().get_mpz_t());
    mpq_class frac(r, scaled.den());
    frac.canonicalize();
    if (frac * 2 >= 1) q += 1;
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    mpq_class out(q, den);
    out.canonicalize();
    return Rat(std::move(out));
}

Rat best_approx(const Rat& x, const mpz_class& max_den) {
    if (max_den < 1) throw std::invalid_argument("best_approx needs max_den >= 1");
    if (x.den() <= max_den) return x;

    // Continued-fraction walk keeping the last two convergents p/q.
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpz_class num = x.num(), den = x.den();
    while (true) {
        mpz_class a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        if (q2 > max_den) {
            // Largest admissible semiconvergent between p0/q0 and p1/q1.
            mpz_class k = (max_den - q0) / q1;
            mpz_class ps = k * p1 + p0;
            mpz_class qs = k * q1 + q0;
            Rat conv(mpq_class(p1, q1));
            if (qs <= 0) return conv;
            Rat semi(mpq_class(ps, qs));
            return abs(x - semi) < abs(x - conv) ? semi : conv;
        }
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if (r == 0) return Rat(mpq_class(p1, q1));
        num = den;
        den = r;
    }
}

}  // namespace hypersteiner
