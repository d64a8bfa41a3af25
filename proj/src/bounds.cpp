#include "gag/bounds.hpp"

#include <stdexcept>
#include <string>

namespace gag {

namespace {

void check_weight(const DegreeProfile& profile, std::size_t w) {
    if (w == 0 || w > profile.length())
        throw std::out_of_range("weight " + std::to_string(w) + " outside [1, " + std::to_string(profile.length()) + "]");
}

}  // namespace

BreakDegree min_cover(const DegreeProfile& profile, std::size_t w) {
    check_weight(profile, w);
    std::size_t covered = 0;
    std::size_t taken = 0;
    for (auto it = profile.counts().rbegin(); it != profile.counts().rend(); ++it) {
        const auto [degree, count] = *it;
        if (covered + degree * count < w) {
            covered += degree * count;
            taken += count;
            continue;
        }
        taken += (w - covered + degree - 1) / degree;
        return {degree, taken};
    }
    throw std::logic_error("min_cover: profile exhausted");
}

unsigned break_degree(const DegreeProfile& profile, std::size_t w) {
    check_weight(profile, w);
    // Σ_{i>a} iν_i < w ≤ Σ_{i≥a} iν_i
    std::size_t above = 0;
    for (auto it = profile.counts().rbegin(); it != profile.counts().rend(); ++it) {
        const std::size_t through = above + it->first * it->second;
        if (above < w && w <= through) return it->first;
        above = through;
    }
    throw std::logic_error("break_degree: no degree satisfies the bracket");
}

std::size_t min_cover_closed_form(const DegreeProfile& profile, std::size_t w) {
    const unsigned a = break_degree(profile, w);
    std::size_t excess = 0;
    for (auto [degree, count] : profile.counts())
        if (degree > a) excess += (degree - a) * count;
    // w > Σ_{i>a} iν_i ≥ Σ_{i>a} (i−a)ν_i, so the numerator is positive.
    return (w - excess + a - 1) / a;
}

std::size_t correctable_errors(const DegreeProfile& profile, std::size_t t) {
    if (t + 1 > profile.length())
        throw std::out_of_range("correctable_errors: t + 1 exceeds the code length");
    return min_cover(profile, t + 1).ell - 1;
}

std::size_t designed_distance(const DegreeProfile& profile, std::size_t n, std::size_t g) {
    if (n != profile.length()) throw std::invalid_argument("designed_distance: n does not match the profile length");
    if (g >= n) throw std::out_of_range("designed_distance: g must be smaller than n");
    return min_cover(profile, n - g).ell;
}

std::size_t lifted_radius(std::size_t n, std::size_t g) {
    if (g >= n) throw std::out_of_range("lifted_radius: g must be smaller than n");
    return (n - g - 1) / 2;
}

}  // namespace gag
