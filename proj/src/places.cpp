#include "gag/places.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gag/numeric.hpp"

namespace gag {

bool place_less(const Place& a, const Place& b) {
    if (a.is_infinite() != b.is_infinite()) return b.is_infinite();
    if (a.degree != b.degree) return a.degree < b.degree;
    return canonical_less(a.min_poly, b.min_poly);
}

Place make_place(const FieldTower& tower, Poly<BaseElem> min_poly) {
    const long d = min_poly.degree();
    if (d < 1) throw std::invalid_argument("make_place: place polynomial must have positive degree");
    if (min_poly.lead() != tower.base().one()) throw std::invalid_argument("make_place: place polynomial must be monic");
    if (!is_irreducible(tower.base(), min_poly)) throw std::invalid_argument("make_place: place polynomial is reducible");
    Place place;
    place.degree = static_cast<unsigned>(d);
    place.min_poly = std::move(min_poly);
    attach_roots(tower, place);
    return place;
}

void attach_roots(const FieldTower& tower, Place& place) {
    if (place.is_infinite() || !place.roots.empty() || tower.m() % place.degree != 0) return;
    place.roots = tower.find_roots(place.min_poly);
}

std::vector<Place> enumerate_places(const FieldTower& tower, unsigned d, std::size_t limit) {
    if (d == 0) throw std::invalid_argument("enumerate_places: degree must be positive");
    const auto& F = tower.base();
    const std::uint64_t candidates = checked_pow(F.size(), d);
    std::vector<Place> out;
    out.reserve(std::min<std::uint64_t>(limit, count_finite_places(F.size(), d)));
    for (std::uint64_t idx = 0; idx < candidates && out.size() < limit; ++idx) {
        auto f = monic_from_index(F, d, idx);
        if (d > 1 && !is_irreducible(F, f)) continue;
        Place place;
        place.degree = d;
        place.min_poly = std::move(f);
        out.push_back(std::move(place));
    }
    return out;
}

std::uint64_t count_finite_places(std::uint64_t q, unsigned d) {
    return count_irreducible(q, d);
}

namespace {

const ExtElem& root_at(const Place& place, std::size_t j) {
    if (place.is_infinite()) throw std::invalid_argument("evaluate_at: cannot evaluate at the infinite place");
    if (j >= place.degree) throw std::out_of_range("evaluate_at: root index out of range");
    if (place.roots.size() != place.degree) throw std::invalid_argument("evaluate_at: place roots not available (degree does not divide m)");
    return place.roots[j];
}

}  // namespace

ExtElem evaluate_at(const FieldTower& tower, const Poly<BaseElem>& f, const Place& place, std::size_t j) {
    return eval(tower.top(), tower.lift(f), root_at(place, j));
}

ExtElem evaluate_at(const FieldTower& tower, const Poly<ExtElem>& f, const Place& place, std::size_t j) {
    return eval(tower.top(), f, root_at(place, j));
}

std::string format_place(const FieldTower& tower, const Place& place) {
    if (place.is_infinite()) return "inf";
    std::string out = std::to_string(place.degree) + " :";
    for (std::size_t i = 0; i <= place.degree; ++i) out += ' ' + tower.format(place.min_poly[i]);
    return out;
}

Place parse_place(const FieldTower& tower, std::string_view text) {
    std::istringstream in{std::string(text)};
    unsigned degree = 0;
    std::string colon;
    if (!(in >> degree >> colon) || colon != ":") throw std::invalid_argument("parse_place: expected 'degree : coefficients'");
    std::vector<BaseElem> coeffs;
    std::string tok;
    while (in >> tok) coeffs.push_back(tower.parse_base(tok));
    if (coeffs.size() != degree + 1) throw std::invalid_argument("parse_place: expected degree+1 coefficients");
    Poly<BaseElem> f(std::move(coeffs));
    if (f.degree() != static_cast<long>(degree)) throw std::invalid_argument("parse_place: leading coefficient is zero");
    return make_place(tower, std::move(f));
}

}  // namespace gag
