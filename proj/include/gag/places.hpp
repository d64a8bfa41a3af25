#ifndef GAG_PLACES_HPP
#define GAG_PLACES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gag/poly.hpp"
#include "gag/tower.hpp"

namespace gag {

/// A place of the rational function field F_q(x): a monic irreducible polynomial, or infinity.
struct Place {
    enum class Kind { finite, infinite };

    Kind kind = Kind::finite;
    Poly<BaseElem> min_poly;
    unsigned degree = 1;
    /// Frobenius-ordered extensions in F_{q^m}: roots[j+1] = σ(roots[j]).
    /// Empty until attach_roots is called, and always empty when degree ∤ m.
    std::vector<ExtElem> roots;

    static Place infinity() { return Place{Kind::infinite, {}, 1, {}}; }
    bool is_infinite() const noexcept { return kind == Kind::infinite; }

    friend bool operator==(const Place& a, const Place& b) { return a.kind == b.kind && a.min_poly == b.min_poly; }
};

/// Place order inside a code: by degree, then canonical order of min_poly.
bool place_less(const Place& a, const Place& b);

/// Validates min_poly (monic, irreducible over F_q) and attaches its roots when deg | m.
Place make_place(const FieldTower& tower, Poly<BaseElem> min_poly);

/// Computes the roots of a finite place whose degree divides m (no-op otherwise).
void attach_roots(const FieldTower& tower, Place& place);

/// Finite places of degree d in canonical order, all of them or the first `limit`.
/// Roots are not attached.
std::vector<Place> enumerate_places(const FieldTower& tower, unsigned d, std::size_t limit = SIZE_MAX);

/// Number of finite places of degree d of F_q(x).
std::uint64_t count_finite_places(std::uint64_t q, unsigned d);

/// f(roots[j]) for a finite place, j in [0, degree).
ExtElem evaluate_at(const FieldTower& tower, const Poly<BaseElem>& f, const Place& place, std::size_t j);
ExtElem evaluate_at(const FieldTower& tower, const Poly<ExtElem>& f, const Place& place, std::size_t j);

/// One-point divisor G = degree · P_∞.
struct Divisor {
    std::size_t degree = 0;
};

/// "d : c_0 c_1 … c_d" with coefficients in canonical element encoding.
std::string format_place(const FieldTower& tower, const Place& place);
Place parse_place(const FieldTower& tower, std::string_view text);

}  // namespace gag

#endif  // GAG_PLACES_HPP
