#ifndef GAG_BOUNDS_HPP
#define GAG_BOUNDS_HPP

/*
 * Weight bounds for GAG codes, computed from the degree profile alone.
 *
 * An F_q-error touching the blocks S expands, after lifting, to weight
 * Σ_{i∈S} deg P_i. The key quantity is therefore
 *
 *     min_cover(ν, w) = min{ |S| : Σ_{i∈S} deg P_i ≥ w },
 *
 * attained greedily by taking the largest degrees first. Its closed form is
 *
 *     ⌈(w − Σ_{i>a} (i−a)·ν_i) / a⌉   with   Σ_{i>a} i·ν_i < w ≤ Σ_{i≥a} i·ν_i,
 *
 * a being the degree of the last place the greedy pass takes.
 */

#include <cstddef>

#include "gag/profile.hpp"

namespace gag {

struct BreakDegree {
    unsigned a = 0;       ///< degree of the last place taken
    std::size_t ell = 0;  ///< number of places taken
};

/// Greedy cover. Requires 1 ≤ w ≤ profile.length().
BreakDegree min_cover(const DegreeProfile& profile, std::size_t w);

/// The break degree a of the closed form, found from the cumulative degree sums.
unsigned break_degree(const DegreeProfile& profile, std::size_t w);

/// Closed-form evaluation of min_cover.
std::size_t min_cover_closed_form(const DegreeProfile& profile, std::size_t w);

/// Number of F_q-errors guaranteed correctable given a t-error decoder for the lifted code.
std::size_t correctable_errors(const DegreeProfile& profile, std::size_t t);

/// Designed minimum distance min_cover(ν, n − g). Requires n = profile.length() and g < n.
std::size_t designed_distance(const DegreeProfile& profile, std::size_t n, std::size_t g);

/// ⌊(n − g − 1)/2⌋, half the minimum distance of the lifted MDS code.
std::size_t lifted_radius(std::size_t n, std::size_t g);

}  // namespace gag

#endif  // GAG_BOUNDS_HPP
