#include "gag/code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gag {

GagCode::GagCode(std::shared_ptr<const FieldTower> tower, std::vector<Place> places, std::size_t g)
    : tower_(std::move(tower)), places_(std::move(places)), g_(g) {
    if (!tower_) throw std::invalid_argument("GagCode: null tower");
    if (places_.empty()) throw std::invalid_argument("GagCode: at least one place is required");
    std::sort(places_.begin(), places_.end(), place_less);

    unsigned lcm = 1;
    std::vector<unsigned> degrees;
    for (std::size_t i = 0; i < places_.size(); ++i) {
        const Place& place = places_[i];
        if (place.is_infinite()) throw std::invalid_argument("GagCode: the infinite place is reserved for the divisor");
        if (i > 0 && places_[i - 1] == place) throw std::invalid_argument("GagCode: places must be pairwise distinct");
        if (place.roots.size() != place.degree) throw std::invalid_argument("GagCode: place degree must divide m");
        lcm = std::lcm(lcm, place.degree);
        degrees.push_back(place.degree);
        offsets_.push_back(n_);
        n_ += place.degree;
    }
    if (lcm != tower_->m()) throw std::invalid_argument("GagCode: tower extension degree must equal the lcm of place degrees");
    if (g_ >= n_) throw std::invalid_argument("GagCode: divisor degree must be smaller than the code length");
    profile_ = DegreeProfile::from_degrees(degrees);

    const auto& base = tower_->base();
    const auto& top = tower_->top();
    const unsigned m = tower_->m();
    eval_points_.reserve(n_);
    for (const Place& place : places_) {
        eval_points_.insert(eval_points_.end(), place.roots.begin(), place.roots.end());

        // Column j holds the F_q-coordinates of r^j.
        const unsigned d = place.degree;
        Matrix<BaseElem> basis(m, std::vector<BaseElem>(d));
        ExtElem power = top.one();
        for (unsigned j = 0; j < d; ++j) {
            const auto digits = top.digits(power);
            for (unsigned row = 0; row < m; ++row) basis[row][j] = BaseElem{digits[row]};
            power = top.mul(power, place.roots[0]);
        }
        PiSolver solver;
        Matrix<BaseElem> chosen;
        for (unsigned row = 0; row < m && chosen.size() < d; ++row) {
            chosen.push_back(basis[row]);
            if (rank(base, chosen) < chosen.size()) {
                chosen.pop_back();
            } else {
                solver.rows.push_back(row);
            }
        }
        auto inv = inverse(base, chosen);
        if (!inv) throw std::logic_error("GagCode: residue basis is singular");
        solver.inverse = std::move(*inv);
        pi_solvers_.push_back(std::move(solver));
    }
}

Poly<BaseElem> GagCode::message_polynomial(std::span<const BaseElem> message) const {
    if (message.size() != dimension()) throw std::invalid_argument("GagCode: message length must equal k");
    for (auto c : message)
        if (c.value >= tower_->q()) throw std::invalid_argument("GagCode: message symbol outside F_q");
    return Poly<BaseElem>(std::vector<BaseElem>(message.begin(), message.end()));
}

std::vector<BaseElem> GagCode::encode(std::span<const BaseElem> message) const {
    const Poly<BaseElem> f = message_polynomial(message);
    std::vector<BaseElem> word(n_, BaseElem{0});
    for (std::size_t i = 0; i < places_.size(); ++i) {
        const auto rem = mod(tower_->base(), f, places_[i].min_poly);
        std::copy(rem.coeffs.begin(), rem.coeffs.end(), word.begin() + static_cast<long>(offsets_[i]));
    }
    return word;
}

std::vector<BaseElem> GagCode::pi_apply(std::size_t i, ExtElem v) const {
    const auto& solver = pi_solvers_.at(i);
    const auto& base = tower_->base();
    const auto digits = tower_->top().digits(v);
    const std::size_t d = places_[i].degree;
    std::vector<BaseElem> block(d, BaseElem{0});
    for (std::size_t r = 0; r < d; ++r) {
        BaseElem acc{0};
        for (std::size_t c = 0; c < d; ++c)
            acc = base.add(acc, base.mul(solver.inverse[r][c], BaseElem{digits[solver.rows[c]]}));
        block[r] = acc;
    }
    if (pi_invert(i, block) != v) throw std::invalid_argument("pi_apply: element is outside the residue field of the place");
    return block;
}

ExtElem GagCode::pi_invert(std::size_t i, std::span<const BaseElem> block) const {
    const Place& place = places_.at(i);
    if (block.size() != place.degree) throw std::invalid_argument("pi_invert: block length must equal the place degree");
    const auto& top = tower_->top();
    ExtElem acc{0};
    for (std::size_t j = block.size(); j-- > 0;) acc = top.add(top.mul(acc, place.roots[0]), tower_->embed(block[j]));
    return acc;
}

std::vector<ExtElem> GagCode::evaluate(const Poly<ExtElem>& f) const {
    std::vector<ExtElem> out;
    out.reserve(n_);
    for (auto x : eval_points_) out.push_back(eval(tower_->top(), f, x));
    return out;
}

Matrix<BaseElem> GagCode::generator_matrix() const {
    Matrix<BaseElem> rows;
    for (std::size_t j = 0; j <= g_; ++j) {
        std::vector<BaseElem> msg(dimension(), BaseElem{0});
        msg[j] = tower_->base().one();
        rows.push_back(encode(msg));
    }
    return rows;
}

GagCode build_code(std::uint32_t p, unsigned e, const PlaceSelection& selection, std::size_t g) {
    if (!selection.explicit_places.empty() && !selection.counts.empty())
        throw std::invalid_argument("build_code: give either explicit places or degree counts, not both");
    unsigned m = 1;
    for (const auto& f : selection.explicit_places) {
        if (f.degree() < 1) throw std::invalid_argument("build_code: place polynomial must have positive degree");
        m = std::lcm(m, static_cast<unsigned>(f.degree()));
    }
    for (auto [d, count] : selection.counts)
        if (count > 0) m = std::lcm(m, d);

    auto tower = std::make_shared<const FieldTower>(p, e, m);
    std::vector<Place> places;
    for (const auto& f : selection.explicit_places) places.push_back(make_place(*tower, f));
    for (auto [d, count] : selection.counts) {
        if (count == 0) continue;
        auto all = enumerate_places(*tower, d, count);
        if (all.size() < count)
            throw std::invalid_argument("build_code: only " + std::to_string(all.size()) + " places of degree " +
                                        std::to_string(d) + " exist");
        for (std::size_t i = 0; i < count; ++i) {
            attach_roots(*tower, all[i]);
            places.push_back(std::move(all[i]));
        }
    }
    return GagCode(std::move(tower), std::move(places), g);
}

std::size_t hamming_distance(std::span<const BaseElem> a, std::span<const BaseElem> b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace gag
