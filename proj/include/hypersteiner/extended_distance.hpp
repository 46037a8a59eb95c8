#pragma once

#include <optional>
#include <string>

#include "hypersteiner/rational.hpp"

namespace hypersteiner {

/// A value in [0, inf]. Addition saturates at infinity and the order is
/// total with infinity as the greatest element.
class ExtendedDistance {
public:
    ExtendedDistance() : inf_(false), v_(0) {}
    ExtendedDistance(Rat v);  // NOLINT: implicit from finite values is intended
    ExtendedDistance(long v) : ExtendedDistance(Rat(v)) {}

    static ExtendedDistance infinity() {
        ExtendedDistance d;
        d.inf_ = true;
        return d;
    }

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }

    /// Finite value accessor; never call on infinity.
    const Rat& finite() const;

    /// "inf", or the rational rendered as "p/q"/"p".
    std::string str() const { return inf_ ? "inf" : v_.str(); }

    /// Parses what str() produces.
    static std::optional<ExtendedDistance> parse(const std::string& text);

    friend ExtendedDistance operator+(const ExtendedDistance& a, const ExtendedDistance& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtendedDistance(a.v_ + b.v_);
    }
    ExtendedDistance& operator+=(const ExtendedDistance& b) {
        *this = *this + b;
        return *this;
    }

    friend bool operator==(const ExtendedDistance& a, const ExtendedDistance& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const ExtendedDistance& a, const ExtendedDistance& b) { return !(a == b); }
    friend bool operator<(const ExtendedDistance& a, const ExtendedDistance& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExtendedDistance& a, const ExtendedDistance& b) { return !(b < a); }
    friend bool operator>(const ExtendedDistance& a, const ExtendedDistance& b) { return b < a; }
    friend bool operator>=(const ExtendedDistance& a, const ExtendedDistance& b) { return !(a < b); }

private:
    bool inf_;
    Rat v_;
};

ExtendedDistance min(const ExtendedDistance& a, const ExtendedDistance& b);
ExtendedDistance max(const ExtendedDistance& a, const ExtendedDistance& b);

}  // namespace hypersteiner
