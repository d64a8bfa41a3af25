#ifndef GAG_TOWER_HPP
#define GAG_TOWER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gag/field.hpp"
#include "gag/poly.hpp"

namespace gag {

/**
 * The tower F_p ⊂ F_q = F_{p^e} ⊂ F_{q^m}.
 *
 * F_{q^m} is built as a degree-m extension of F_q, so the q-power Frobenius is
 * F_q-linear on coordinates and the embedded F_q is exactly the set of encodings
 * below q. Every modulus is the canonical-order smallest monic irreducible of its
 * degree. For each d | m the tower also holds F_{q^d} in its own representation
 * together with a fixed embedding into F_{q^m}: the generator of F_{q^d} goes to
 * the smallest root of its modulus (identity for d = m).
 *
 * Immutable after construction.
 */
class FieldTower {
public:
    FieldTower(std::uint32_t p, unsigned e, unsigned m);

    std::uint32_t p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    unsigned m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return static_cast<std::uint32_t>(base_.size()); }

    const Field<PrimeElem>& prime() const noexcept { return prime_; }
    const Field<BaseElem>& base() const noexcept { return base_; }
    const Field<ExtElem>& top() const noexcept { return top_; }
    const Field<SubElem>& subfield(unsigned d) const;

    const Poly<PrimeElem>& modulus_q() const noexcept { return modulus_q_; }
    const Poly<BaseElem>& modulus_m() const noexcept { return modulus_m_; }
    const Poly<BaseElem>& subfield_modulus(unsigned d) const;

    /// σ(x) = x^q on F_{q^m}, by square-and-multiply.
    ExtElem frobenius(ExtElem x) const { return top_.pow(x, q()); }
    ExtElem frobenius(ExtElem x, unsigned times) const;

    ExtElem embed(BaseElem c) const { return ExtElem{c.value}; }
    ExtElem embed(unsigned d, SubElem x) const;
    /// Fixed points of σ.
    bool in_base(ExtElem x) const { return frobenius(x) == x; }
    BaseElem to_base(ExtElem x) const;

    Poly<ExtElem> lift(const Poly<BaseElem>& f) const;

    /// Roots in F_{q^m} of a monic irreducible f over F_q with deg f | m, listed as a
    /// Frobenius orbit that starts at the smallest root: roots[j+1] = σ(roots[j]).
    std::vector<ExtElem> find_roots(const Poly<BaseElem>& f) const;

    /// Root-finding routes behind find_roots, exposed for cross-checking.
    /// Scan the embedded subfield F_{q^deg f} for one root.
    std::vector<ExtElem> find_roots_by_scan(const Poly<BaseElem>& f) const;
    /// Equal-degree (Cantor–Zassenhaus) splitting over F_{q^m}.
    std::vector<ExtElem> find_roots_by_splitting(const Poly<BaseElem>& f) const;

    std::string format(BaseElem x) const;
    std::string format(ExtElem x) const;
    BaseElem parse_base(std::string_view text) const;
    ExtElem parse_ext(std::string_view text) const;

    static constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 20;

private:
    struct Subfield {
        Poly<BaseElem> modulus;
        Field<SubElem> field;
        std::vector<ExtElem> basis_images;  // images of 1, β, …, β^{d-1}
    };

    void check_root_query(const Poly<BaseElem>& f) const;
    std::vector<ExtElem> orbit_from(ExtElem root, unsigned degree) const;
    ExtElem smallest_root_in_top(const Poly<BaseElem>& f) const;

    std::uint32_t p_;
    unsigned e_;
    unsigned m_;
    Field<PrimeElem> prime_;
    Field<BaseElem> base_;
    Field<ExtElem> top_;
    Poly<PrimeElem> modulus_q_;
    Poly<BaseElem> modulus_m_;
    std::map<unsigned, Subfield> subfields_;
};

}  // namespace gag

#endif  // GAG_TOWER_HPP
