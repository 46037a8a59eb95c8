#include "hypersteiner/extended_distance.hpp"

#include <stdexcept>

namespace hypersteiner {

ExtendedDistance::ExtendedDistance(Rat v) : inf_(false), v_(std::move(v)) {
    if (v_.sign() < 0) throw std::invalid_argument("negative distance");
}

const Rat& ExtendedDistance::finite() const {
    if (inf_) throw std::logic_error("finite() called on infinite distance");
    return v_;
}

std::optional<ExtendedDistance> ExtendedDistance::parse(const std::string& text) {
    if (text == "inf") return infinity();
    auto r = Rat::parse(text);
    if (!r || r->sign() < 0) return std::nullopt;
    return ExtendedDistance(*r);
}

ExtendedDistance min(const ExtendedDistance& a, const ExtendedDistance& b) { return a < b ? a : b; }
ExtendedDistance max(const ExtendedDistance& a, const ExtendedDistance& b) { return a < b ? b : a; }

}  // namespace hypersteiner
