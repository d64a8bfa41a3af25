#ifndef GAG_CODE_HPP
#define GAG_CODE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "gag/linalg.hpp"
#include "gag/places.hpp"
#include "gag/profile.hpp"
#include "gag/tower.hpp"

namespace gag {

/**
 * Generalized algebraic geometry code over the rational function field F_q(x).
 *
 * G = g·P_∞, so L(G) is the space of polynomials of degree ≤ g and a message
 * (m_0, …, m_g) stands for f = Σ m_j x^j. Block i of a codeword is π_i(f(P̃_{i,1})),
 * where π_i reads off coordinates in the basis 1, r, …, r^{d-1} of the residue
 * field and r = roots[0] of the i-th place. In that basis π_i(f(r)) is the
 * coefficient vector of f mod P_i.
 *
 * Places are kept in canonical order (degree, then min_poly). Immutable.
 */
class GagCode {
public:
    GagCode(std::shared_ptr<const FieldTower> tower, std::vector<Place> places, std::size_t g);

    const FieldTower& tower() const noexcept { return *tower_; }
    const std::shared_ptr<const FieldTower>& tower_ptr() const noexcept { return tower_; }
    const std::vector<Place>& places() const noexcept { return places_; }
    const DegreeProfile& profile() const noexcept { return profile_; }
    Divisor divisor() const noexcept { return Divisor{g_}; }

    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return g_ + 1; }
    std::size_t divisor_degree() const noexcept { return g_; }
    unsigned extension_degree() const noexcept { return tower_->m(); }

    /// First coordinate of block i; block i spans places()[i].degree coordinates.
    std::size_t block_offset(std::size_t i) const { return offsets_.at(i); }
    /// All P̃_{i,j} in block order, length n.
    const std::vector<ExtElem>& eval_points() const noexcept { return eval_points_; }

    Poly<BaseElem> message_polynomial(std::span<const BaseElem> message) const;
    std::vector<BaseElem> encode(std::span<const BaseElem> message) const;

    /// π_i on ι_i(F_{P_i}) ⊂ F_{q^m}. Throws if v is outside the residue field of place i.
    std::vector<BaseElem> pi_apply(std::size_t i, ExtElem v) const;
    ExtElem pi_invert(std::size_t i, std::span<const BaseElem> block) const;

    /// f evaluated at every eval point.
    std::vector<ExtElem> evaluate(const Poly<ExtElem>& f) const;

    /// Rows are the encodings of 1, x, …, x^g.
    Matrix<BaseElem> generator_matrix() const;

private:
    struct PiSolver {
        std::vector<std::size_t> rows;  // coordinates of F_{q^m} used to solve for the block
        Matrix<BaseElem> inverse;       // inverse of the basis matrix restricted to rows
    };

    std::shared_ptr<const FieldTower> tower_;
    std::vector<Place> places_;
    std::size_t g_;
    std::size_t n_ = 0;
    DegreeProfile profile_;
    std::vector<std::size_t> offsets_;
    std::vector<ExtElem> eval_points_;
    std::vector<PiSolver> pi_solvers_;
};

/// Which places a code uses: explicit polynomials, or the first `count` places of
/// each degree in canonical order.
struct PlaceSelection {
    std::vector<Poly<BaseElem>> explicit_places;
    std::map<unsigned, std::size_t> counts;
};

/// Builds the tower with m = lcm of the selected degrees, resolves the selection and constructs the code.
GagCode build_code(std::uint32_t p, unsigned e, const PlaceSelection& selection, std::size_t g);

std::size_t hamming_distance(std::span<const BaseElem> a, std::span<const BaseElem> b);

}  // namespace gag

#endif  // GAG_CODE_HPP
