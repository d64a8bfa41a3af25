#include "gag/tower.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <stdexcept>

#include "gag/numeric.hpp"

namespace gag {

namespace {

template <class E>
std::vector<std::uint32_t> encodings(const Poly<E>& f) {
    std::vector<std::uint32_t> out;
    out.reserve(f.coeffs.size());
    for (auto c : f.coeffs) out.push_back(c.value);
    return out;
}

// Roots of a monic squarefree f that splits into linear factors over F.
template <class E>
void split_linear(const Field<E>& F, const Poly<E>& f, std::mt19937_64& rng, std::vector<E>& out) {
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        out.push_back(F.neg(F.div(f.coeffs[0], f.coeffs[1])));
        return;
    }
    const std::uint64_t size = F.size();
    std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
    for (;;) {
        const E a = F.element(pick(rng));
        Poly<E> h;
        if (size % 2 == 1) {
            h = powmod(F, Poly<E>(std::vector<E>{a, F.one()}), (size - 1) / 2, f);
            h = sub(F, h, Poly<E>::constant(F.one()));
        } else {
            // Absolute trace of a·X modulo f.
            Poly<E> t = mod(F, Poly<E>(std::vector<E>{E{0}, a}), f);
            h = t;
            for (std::uint64_t s = size; s > 2; s >>= 1) {
                t = mod(F, mul(F, t, t), f);
                h = add(F, h, t);
            }
        }
        const auto g = gcd(F, f, h);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split_linear(F, g, rng, out);
            split_linear(F, divmod(F, f, g).first, rng, out);
            return;
        }
    }
}

std::uint32_t parse_uint(std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

FieldTower::FieldTower(std::uint32_t p, unsigned e, unsigned m) : p_(p), e_(e), m_(m) {
    if (!is_prime(p)) throw std::invalid_argument("FieldTower: p must be prime");
    if (e == 0 || m == 0) throw std::invalid_argument("FieldTower: degrees must be positive");
    if (checked_pow(p, e * m) > (std::uint64_t{1} << 31)) throw std::invalid_argument("FieldTower: field too large");

    auto prime_core = std::make_shared<detail::FieldCore>(p);
    prime_ = Field<PrimeElem>(prime_core);
    modulus_q_ = smallest_irreducible(prime_, e);
    auto base_core = std::make_shared<detail::FieldCore>(prime_core, encodings(modulus_q_));
    base_ = Field<BaseElem>(base_core);

    modulus_m_ = smallest_irreducible(base_, m);
    auto top_core = std::make_shared<detail::FieldCore>(base_core, encodings(modulus_m_));
    top_ = Field<ExtElem>(top_core);

    for (auto d64 : divisors(m)) {
        const auto d = static_cast<unsigned>(d64);
        Subfield sub;
        if (d == m) {
            sub.modulus = modulus_m_;
            sub.field = Field<SubElem>(top_core);
            for (unsigned j = 0; j < d; ++j) sub.basis_images.push_back(top_.pow(ExtElem{q()}, j));
        } else {
            sub.modulus = smallest_irreducible(base_, d);
            sub.field = Field<SubElem>(std::make_shared<detail::FieldCore>(base_core, encodings(sub.modulus)));
            const ExtElem beta = smallest_root_in_top(sub.modulus);
            for (unsigned j = 0; j < d; ++j) sub.basis_images.push_back(top_.pow(beta, j));
        }
        subfields_.emplace(d, std::move(sub));
    }
}

const Field<SubElem>& FieldTower::subfield(unsigned d) const {
    auto it = subfields_.find(d);
    if (it == subfields_.end()) throw std::invalid_argument("FieldTower::subfield: degree does not divide m");
    return it->second.field;
}

const Poly<BaseElem>& FieldTower::subfield_modulus(unsigned d) const {
    auto it = subfields_.find(d);
    if (it == subfields_.end()) throw std::invalid_argument("FieldTower::subfield_modulus: degree does not divide m");
    return it->second.modulus;
}

ExtElem FieldTower::frobenius(ExtElem x, unsigned times) const {
    for (unsigned i = 0; i < times; ++i) x = frobenius(x);
    return x;
}

ExtElem FieldTower::embed(unsigned d, SubElem x) const {
    auto it = subfields_.find(d);
    if (it == subfields_.end()) throw std::invalid_argument("FieldTower::embed: degree does not divide m");
    const auto& sub = it->second;
    const auto digits = sub.field.digits(x);
    ExtElem acc{0};
    for (unsigned j = 0; j < d; ++j)
        if (digits[j] != 0) acc = top_.add(acc, top_.mul(ExtElem{digits[j]}, sub.basis_images[j]));
    return acc;
}

BaseElem FieldTower::to_base(ExtElem x) const {
    if (x.value >= q()) throw std::invalid_argument("FieldTower::to_base: element not in F_q");
    return BaseElem{x.value};
}

Poly<ExtElem> FieldTower::lift(const Poly<BaseElem>& f) const {
    std::vector<ExtElem> c;
    c.reserve(f.coeffs.size());
    for (auto v : f.coeffs) c.push_back(embed(v));
    return Poly<ExtElem>(std::move(c));
}

void FieldTower::check_root_query(const Poly<BaseElem>& f) const {
    const long d = f.degree();
    if (d < 1) throw std::invalid_argument("find_roots: polynomial must have positive degree");
    if (f.lead() != base_.one()) throw std::invalid_argument("find_roots: polynomial must be monic");
    if (m_ % static_cast<unsigned>(d) != 0) throw std::invalid_argument("find_roots: degree does not divide m");
    if (!is_irreducible(base_, f)) throw std::invalid_argument("find_roots: polynomial is reducible");
}

std::vector<ExtElem> FieldTower::orbit_from(ExtElem root, unsigned degree) const {
    std::vector<ExtElem> orbit{root};
    for (unsigned j = 1; j < degree; ++j) orbit.push_back(frobenius(orbit.back()));
    if (frobenius(orbit.back()) != root) throw std::logic_error("FieldTower: Frobenius orbit does not close");
    std::rotate(orbit.begin(), std::min_element(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

std::vector<ExtElem> FieldTower::find_roots(const Poly<BaseElem>& f) const {
    check_root_query(f);
    const auto d = static_cast<unsigned>(f.degree());
    if (checked_pow(q(), d) <= kScanLimit) return find_roots_by_scan(f);
    return find_roots_by_splitting(f);
}

std::vector<ExtElem> FieldTower::find_roots_by_scan(const Poly<BaseElem>& f) const {
    check_root_query(f);
    const auto d = static_cast<unsigned>(f.degree());
    const auto& F = subfield(d);
    // F_q constants have the same encoding in F_{q^d}.
    std::vector<SubElem> c;
    for (auto v : f.coeffs) c.push_back(SubElem{v.value});
    const Poly<SubElem> fs(std::move(c));
    for (std::uint64_t i = 0; i < F.size(); ++i) {
        const SubElem s = F.element(i);
        if (eval(F, fs, s) == F.zero()) return orbit_from(embed(d, s), d);
    }
    throw std::logic_error("find_roots_by_scan: irreducible polynomial without a root in its splitting field");
}

std::vector<ExtElem> FieldTower::find_roots_by_splitting(const Poly<BaseElem>& f) const {
    check_root_query(f);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::vector<ExtElem> roots;
    split_linear(top_, lift(f), rng, roots);
    const ExtElem start = *std::min_element(roots.begin(), roots.end());
    return orbit_from(start, static_cast<unsigned>(f.degree()));
}

ExtElem FieldTower::smallest_root_in_top(const Poly<BaseElem>& f) const {
    const auto lifted = lift(f);
    if (top_.size() <= kScanLimit) {
        for (std::uint64_t i = 0; i < top_.size(); ++i)
            if (eval(top_, lifted, top_.element(i)) == top_.zero()) return top_.element(i);
        throw std::logic_error("FieldTower: subfield modulus has no root in F_{q^m}");
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::vector<ExtElem> roots;
    split_linear(top_, lifted, rng, roots);
    return *std::min_element(roots.begin(), roots.end());
}

std::string FieldTower::format(BaseElem x) const {
    const auto d = base_.digits(x);
    std::string out;
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (j) out += '.';
        out += std::to_string(d[j]);
    }
    return out;
}

std::string FieldTower::format(ExtElem x) const {
    const auto d = top_.digits(x);
    std::string out = "[";
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (j) out += ' ';
        out += format(BaseElem{d[j]});
    }
    return out + "]";
}

BaseElem FieldTower::parse_base(std::string_view text) const {
    std::vector<std::uint32_t> digits;
    std::size_t start = 0;
    for (;;) {
        const auto dot = text.find('.', start);
        digits.push_back(parse_uint(text.substr(start, dot == std::string_view::npos ? dot : dot - start)));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    if (digits.size() != e_) throw std::invalid_argument("parse_base: expected " + std::to_string(e_) + " digits in '" + std::string(text) + "'");
    for (auto v : digits)
        if (v >= p_) throw std::invalid_argument("parse_base: digit out of range in '" + std::string(text) + "'");
    return base_.from_digits(digits);
}

ExtElem FieldTower::parse_ext(std::string_view text) const {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("parse_ext: expected [..] in '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    std::vector<std::uint32_t> digits;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto sp = text.find(' ', start);
        const auto tok = text.substr(start, sp == std::string_view::npos ? sp : sp - start);
        digits.push_back(parse_base(tok).value);
        if (sp == std::string_view::npos) break;
        start = sp + 1;
    }
    if (digits.size() != m_) throw std::invalid_argument("parse_ext: expected " + std::to_string(m_) + " coordinates");
    return top_.from_digits(digits);
}

}  // namespace gag
