#ifndef GAG_DECODER_HPP
#define GAG_DECODER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "gag/code.hpp"

namespace gag {

enum class FailureReason { too_many_errors, frobenius_inconsistent, degree_overflow };

std::string_view to_string(FailureReason reason);

struct DecodeSuccess {
    std::vector<BaseElem> message;
    std::vector<BaseElem> codeword;
    std::size_t error_count = 0;  ///< Hamming distance between the received word and codeword
};

struct DecodeFailure {
    FailureReason reason;
};

using DecodeResult = std::variant<DecodeSuccess, DecodeFailure>;
using RsDecodeResult = std::variant<Poly<ExtElem>, FailureReason>;

/// A word of F_{q^m}^n laid out in the code's block order.
struct LiftedWord {
    std::vector<ExtElem> symbols;
};

/**
 * Lifting decoder.
 *
 * A received word r ∈ F_q^n is mapped block by block through π_i^{-1} into the
 * residue field and expanded along its Frobenius orbit, giving a word of the
 * lifted code {(f(P̃_{1,1}), …, f(P̃_{s,deg P_s})) : deg f ≤ g} over F_{q^m}.
 * That code is a Reed–Solomon code on the eval points; it is decoded up to the
 * radius t with Gao's interpolation / partial extended Euclid key equation.
 * The decoded polynomial must have all its coefficients fixed by σ (i.e. in
 * F_q) to be a codeword of C; it is then re-encoded.
 *
 * A nonzero error in a block of degree d lifts to exactly d nonzero symbols,
 * which is where the reduced F_q correction radius comes from (see bounds.hpp).
 */
class Decoder {
public:
    /// radius defaults to lifted_radius(n, g) and may only be lowered.
    explicit Decoder(const GagCode& code, std::optional<std::size_t> radius = std::nullopt);

    const GagCode& code() const noexcept { return code_; }
    std::size_t radius() const noexcept { return radius_; }

    LiftedWord lift(std::span<const BaseElem> word) const;
    /// Polynomial of degree ≤ g within Hamming distance radius() of the lifted word.
    RsDecodeResult rs_decode(const LiftedWord& lifted) const;
    DecodeResult decode(std::span<const BaseElem> received) const;

private:
    Poly<ExtElem> interpolate(std::span<const ExtElem> values) const;

    GagCode code_;
    std::size_t radius_;
    Poly<ExtElem> vanishing_;            // Π (X − x_i)
    std::vector<ExtElem> bary_weights_;  // 1 / Π_{j≠i} (x_i − x_j)
};

/// Hamming weight of a word over F_{q^m}.
std::size_t weight(std::span<const ExtElem> word);

}  // namespace gag

#endif  // GAG_DECODER_HPP
