#ifndef GAG_POLY_HPP
#define GAG_POLY_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gag/field.hpp"
#include "gag/numeric.hpp"

namespace gag {

/// Dense univariate polynomial, coefficients low degree first.
/// Invariant: no trailing zero coefficients; the zero polynomial is empty.
template <class E>
struct Poly {
    std::vector<E> coeffs;

    Poly() = default;
    explicit Poly(std::vector<E> c) : coeffs(std::move(c)) { normalize(); }

    static Poly constant(E c) { return Poly(std::vector<E>{c}); }
    static Poly monomial(std::size_t degree, E c = E{1}) {
        std::vector<E> v(degree + 1, E{0});
        v[degree] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs.empty(); }
    /// Degree, -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
    E lead() const { return coeffs.empty() ? E{0} : coeffs.back(); }
    E operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : E{0}; }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == E{0}) coeffs.pop_back();
    }

    friend bool operator==(const Poly&, const Poly&) = default;
};

template <class E>
Poly<E> add(const Field<E>& F, const Poly<E>& a, const Poly<E>& b) {
    std::vector<E> r(std::max(a.coeffs.size(), b.coeffs.size()), E{0});
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a[i], b[i]);
    return Poly<E>(std::move(r));
}

template <class E>
Poly<E> sub(const Field<E>& F, const Poly<E>& a, const Poly<E>& b) {
    std::vector<E> r(std::max(a.coeffs.size(), b.coeffs.size()), E{0});
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return Poly<E>(std::move(r));
}

template <class E>
Poly<E> scale(const Field<E>& F, const Poly<E>& a, E c) {
    std::vector<E> r(a.coeffs.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.mul(a.coeffs[i], c);
    return Poly<E>(std::move(r));
}

template <class E>
Poly<E> mul(const Field<E>& F, const Poly<E>& a, const Poly<E>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<E> r(a.coeffs.size() + b.coeffs.size() - 1, E{0});
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == E{0}) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    }
    return Poly<E>(std::move(r));
}

/// Returns (quotient, remainder). Throws std::domain_error on division by zero.
template <class E>
std::pair<Poly<E>, Poly<E>> divmod(const Field<E>& F, const Poly<E>& a, const Poly<E>& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly<E>{}, a};
    std::vector<E> rem = a.coeffs;
    const std::size_t db = b.coeffs.size() - 1;
    std::vector<E> quot(rem.size() - db, E{0});
    const E lead_inv = F.inv(b.lead());
    for (std::size_t i = rem.size(); i-- > db;) {
        const E c = F.mul(rem[i], lead_inv);
        if (c == E{0}) continue;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b.coeffs[j]));
    }
    rem.resize(db);
    return {Poly<E>(std::move(quot)), Poly<E>(std::move(rem))};
}

template <class E>
Poly<E> mod(const Field<E>& F, const Poly<E>& a, const Poly<E>& b) {
    return divmod(F, a, b).second;
}

template <class E>
Poly<E> make_monic(const Field<E>& F, const Poly<E>& a) {
    if (a.is_zero()) return a;
    return scale(F, a, F.inv(a.lead()));
}

/// Monic gcd (zero if both inputs are zero).
template <class E>
Poly<E> gcd(const Field<E>& F, Poly<E> a, Poly<E> b) {
    while (!b.is_zero()) {
        auto r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

template <class E>
E eval(const Field<E>& F, const Poly<E>& f, E x) {
    E acc{0};
    for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.coeffs[i]);
    return acc;
}

template <class E>
Poly<E> derivative(const Field<E>& F, const Poly<E>& f) {
    if (f.coeffs.size() <= 1) return {};
    std::vector<E> r(f.coeffs.size() - 1);
    for (std::size_t i = 1; i < f.coeffs.size(); ++i) {
        E acc{0};
        for (std::size_t k = 0; k < i % F.characteristic(); ++k) acc = F.add(acc, f.coeffs[i]);
        r[i - 1] = acc;
    }
    return Poly<E>(std::move(r));
}

/// base^e mod modulus by square-and-multiply.
template <class E>
Poly<E> powmod(const Field<E>& F, Poly<E> base, std::uint64_t e, const Poly<E>& modulus) {
    Poly<E> result = mod(F, Poly<E>::constant(F.one()), modulus);
    base = mod(F, base, modulus);
    while (e != 0) {
        if (e & 1) result = mod(F, mul(F, result, base), modulus);
        e >>= 1;
        if (e != 0) base = mod(F, mul(F, base, base), modulus);
    }
    return result;
}

/// X^(Q^k) mod f, where Q = |F|.
template <class E>
Poly<E> frobenius_power_of_x(const Field<E>& F, const Poly<E>& f, unsigned k) {
    Poly<E> x = mod(F, Poly<E>::monomial(1), f);
    for (unsigned i = 0; i < k; ++i) x = powmod(F, x, F.size(), f);
    return x;
}

/// Rabin's irreducibility test.
template <class E>
bool is_irreducible(const Field<E>& F, const Poly<E>& f) {
    const long d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const Poly<E> x = Poly<E>::monomial(1);
    const auto du = static_cast<unsigned>(d);
    if (!sub(F, frobenius_power_of_x(F, f, du), x).is_zero()) return false;
    for (auto r : prime_factors(du)) {
        const auto h = sub(F, frobenius_power_of_x(F, f, du / static_cast<unsigned>(r)), x);
        if (gcd(F, f, h).degree() != 0) return false;
    }
    return true;
}

/// Product of (X - r) over the given roots.
template <class E>
Poly<E> from_roots(const Field<E>& F, const std::vector<E>& roots) {
    Poly<E> acc = Poly<E>::constant(F.one());
    for (auto r : roots) acc = mul(F, acc, Poly<E>(std::vector<E>{F.neg(r), F.one()}));
    return acc;
}

/// Monic polynomial of the given degree whose lower coefficients are the base-|F| digits of index.
/// Enumerating index = 0, 1, ... walks the monic polynomials of that degree in canonical order.
template <class E>
Poly<E> monic_from_index(const Field<E>& F, unsigned degree, std::uint64_t index) {
    std::vector<E> c(degree + 1);
    for (unsigned j = 0; j < degree; ++j) {
        c[j] = F.element(index % F.size());
        index /= F.size();
    }
    c[degree] = F.one();
    return Poly<E>(std::move(c));
}

/// Canonical order on polynomials: by degree, then by the integer sum c_j |F|^j
/// (highest coefficient compared first).
template <class E>
bool canonical_less(const Poly<E>& a, const Poly<E>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs.size(); i-- > 0;)
        if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
    return false;
}

/// Lowest-index monic irreducible of the given degree (see monic_from_index).
template <class E>
Poly<E> smallest_irreducible(const Field<E>& F, unsigned degree) {
    for (std::uint64_t idx = 0;; ++idx) {
        auto f = monic_from_index(F, degree, idx);
        if (is_irreducible(F, f)) return f;
    }
}

}  // namespace gag

#endif  // GAG_POLY_HPP
