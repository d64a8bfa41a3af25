#include "gag/decoder.hpp"

#include <stdexcept>

#include "gag/bounds.hpp"

namespace gag {

std::string_view to_string(FailureReason reason) {
    switch (reason) {
        case FailureReason::too_many_errors: return "too-many-errors";
        case FailureReason::frobenius_inconsistent: return "frobenius-inconsistent";
        case FailureReason::degree_overflow: return "degree-overflow";
    }
    return "unknown";
}

Decoder::Decoder(const GagCode& code, std::optional<std::size_t> radius)
    : code_(code), radius_(lifted_radius(code.length(), code.divisor_degree())) {
    if (radius) {
        if (*radius > radius_) throw std::invalid_argument("Decoder: radius exceeds half the lifted minimum distance");
        radius_ = *radius;
    }
    const auto& F = code_.tower().top();
    const auto& points = code_.eval_points();
    vanishing_ = from_roots(F, points);
    const auto dv = derivative(F, vanishing_);
    bary_weights_.reserve(points.size());
    for (auto x : points) bary_weights_.push_back(F.inv(eval(F, dv, x)));
}

LiftedWord Decoder::lift(std::span<const BaseElem> word) const {
    if (word.size() != code_.length()) throw std::invalid_argument("lift: word length must equal n");
    LiftedWord out;
    out.symbols.reserve(word.size());
    const auto& tower = code_.tower();
    for (std::size_t i = 0; i < code_.places().size(); ++i) {
        const unsigned d = code_.places()[i].degree;
        ExtElem v = code_.pi_invert(i, word.subspan(code_.block_offset(i), d));
        for (unsigned j = 0; j < d; ++j) {
            out.symbols.push_back(v);
            v = tower.frobenius(v);
        }
    }
    return out;
}

Poly<ExtElem> Decoder::interpolate(std::span<const ExtElem> values) const {
    const auto& F = code_.tower().top();
    const auto& points = code_.eval_points();
    const std::size_t n = points.size();
    std::vector<ExtElem> acc(n, F.zero());
    const auto& g0 = vanishing_.coeffs;
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] == F.zero()) continue;
        const ExtElem c = F.mul(values[i], bary_weights_[i]);
        // Synthetic division of Π (X − x_j) by (X − x_i), accumulated on the fly.
        ExtElem quot = F.one();
        for (std::size_t k = n; k-- > 0;) {
            acc[k] = F.add(acc[k], F.mul(c, quot));
            quot = F.add(g0[k], F.mul(points[i], quot));
        }
    }
    return Poly<ExtElem>(std::move(acc));
}

RsDecodeResult Decoder::rs_decode(const LiftedWord& lifted) const {
    const std::size_t n = code_.length();
    const std::size_t k = code_.dimension();
    if (lifted.symbols.size() != n) throw std::invalid_argument("rs_decode: word length must equal n");
    const auto& F = code_.tower().top();

    // Partial extended Euclid on (Π (X − x_i), R) until deg r < (n + k)/2.
    Poly<ExtElem> r0 = vanishing_;
    Poly<ExtElem> r1 = interpolate(lifted.symbols);
    Poly<ExtElem> v0;
    Poly<ExtElem> v1 = Poly<ExtElem>::constant(F.one());
    while (!r1.is_zero() && 2 * static_cast<std::size_t>(r1.degree()) >= n + k) {
        auto [quot, rem] = divmod(F, r0, r1);
        Poly<ExtElem> v2 = sub(F, v0, mul(F, quot, v1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    auto [f, rem] = divmod(F, r1, v1);
    if (!rem.is_zero()) return FailureReason::too_many_errors;
    if (f.degree() >= static_cast<long>(k)) return FailureReason::degree_overflow;

    std::size_t mismatches = 0;
    const auto& points = code_.eval_points();
    for (std::size_t i = 0; i < n; ++i) mismatches += eval(F, f, points[i]) != lifted.symbols[i];
    if (mismatches > radius_) return FailureReason::too_many_errors;
    return std::move(f);
}

DecodeResult Decoder::decode(std::span<const BaseElem> received) const {
    const auto rs = rs_decode(lift(received));
    if (const auto* reason = std::get_if<FailureReason>(&rs)) return DecodeFailure{*reason};
    const auto& f = std::get<Poly<ExtElem>>(rs);

    const auto& tower = code_.tower();
    DecodeSuccess out;
    out.message.assign(code_.dimension(), BaseElem{0});
    for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
        if (!tower.in_base(f.coeffs[j])) return DecodeFailure{FailureReason::frobenius_inconsistent};
        out.message[j] = tower.to_base(f.coeffs[j]);
    }
    out.codeword = code_.encode(out.message);
    out.error_count = hamming_distance(received, out.codeword);
    return out;
}

std::size_t weight(std::span<const ExtElem> word) {
    std::size_t w = 0;
    for (auto x : word) w += x != ExtElem{0};
    return w;
}

}  // namespace gag
