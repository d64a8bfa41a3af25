#ifndef GAG_FIELD_HPP
#define GAG_FIELD_HPP

/*
 * Finite field arithmetic on integer-encoded elements.
 *
 * An element of F_{b^d} = F_b[z]/(h) is stored as the integer sum c_j b^j of its
 * coefficient digits c_j (low degree first). Digits are themselves encodings of
 * the base field, so a tower F_p ⊂ F_q ⊂ F_{q^m} nests naturally: the encoding
 * of an F_q constant inside F_{q^m} is the same integer.
 *
 * Fields up to kTableLimit elements use exp/log tables for multiplication;
 * larger ones fall back to schoolbook multiplication modulo h.
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace gag {

/// Integer-encoded field element, tagged with the tower level it belongs to.
template <class Tag>
struct Elem {
    std::uint32_t value = 0;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

using PrimeElem = Elem<struct PrimeTag>;  ///< element of F_p
using BaseElem = Elem<struct BaseTag>;  ///< element of F_q
using SubElem = Elem<struct SubTag>;    ///< element of an intermediate F_{q^d} in its own representation
using ExtElem = Elem<struct ExtTag>;    ///< element of F_{q^m}

namespace detail {

class FieldCore {
public:
    static constexpr std::uint64_t kTableLimit = 1u << 22;

    /// The prime field F_p.
    explicit FieldCore(std::uint32_t p);

    /// F_base[z]/(modulus); modulus is monic, given low-first as base encodings.
    /// Irreducibility is the caller's responsibility.
    FieldCore(std::shared_ptr<const FieldCore> base, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint64_t size() const noexcept { return size_; }
    unsigned degree() const noexcept { return degree_; }
    std::uint32_t base_size() const noexcept { return base_size_; }
    const std::shared_ptr<const FieldCore>& base() const noexcept { return base_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return !log_.empty() || size_ == 2; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// Multiplication without tables; used to build the tables and as a cross-check.
    std::uint32_t mul_schoolbook(std::uint32_t a, std::uint32_t b) const;

    std::vector<std::uint32_t> digits(std::uint32_t a) const;
    std::uint32_t from_digits(std::span<const std::uint32_t> digits) const;

private:
    void build_tables();

    std::uint32_t p_ = 2;
    std::uint64_t size_ = 2;
    unsigned degree_ = 1;
    std::uint32_t base_size_ = 2;
    std::shared_ptr<const FieldCore> base_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

}  // namespace detail

/// Typed view of a FieldCore. Cheap to copy; the core is shared and immutable.
template <class E>
class Field {
public:
    using elem_type = E;

    Field() = default;
    explicit Field(std::shared_ptr<const detail::FieldCore> core) : core_(std::move(core)) {}

    E zero() const noexcept { return E{0}; }
    E one() const noexcept { return E{1}; }
    E add(E a, E b) const { return E{core_->add(a.value, b.value)}; }
    E sub(E a, E b) const { return E{core_->sub(a.value, b.value)}; }
    E neg(E a) const { return E{core_->neg(a.value)}; }
    E mul(E a, E b) const { return E{core_->mul(a.value, b.value)}; }
    E inv(E a) const { return E{core_->inv(a.value)}; }
    E div(E a, E b) const { return mul(a, inv(b)); }
    E pow(E a, std::uint64_t e) const { return E{core_->pow(a.value, e)}; }

    std::uint64_t size() const noexcept { return core_->size(); }
    std::uint32_t characteristic() const noexcept { return core_->characteristic(); }
    unsigned degree() const noexcept { return core_->degree(); }
    std::uint32_t base_size() const noexcept { return core_->base_size(); }
    E element(std::uint64_t index) const { return E{static_cast<std::uint32_t>(index)}; }

    std::vector<std::uint32_t> digits(E a) const { return core_->digits(a.value); }
    E from_digits(std::span<const std::uint32_t> d) const { return E{core_->from_digits(d)}; }

    const detail::FieldCore& core() const noexcept { return *core_; }
    const std::shared_ptr<const detail::FieldCore>& core_ptr() const noexcept { return core_; }

private:
    std::shared_ptr<const detail::FieldCore> core_;
};

}  // namespace gag

#endif  // GAG_FIELD_HPP
