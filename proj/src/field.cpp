#include "gag/field.hpp"

#include <stdexcept>

#include "gag/numeric.hpp"

namespace gag::detail {

FieldCore::FieldCore(std::uint32_t p) : p_(p), size_(p), degree_(1), base_size_(p), modulus_{0, 1} {
    if (!is_prime(p)) throw std::invalid_argument("FieldCore: characteristic must be prime");
    if (p > (1u << 16)) throw std::invalid_argument("FieldCore: characteristic too large");
    build_tables();
}

FieldCore::FieldCore(std::shared_ptr<const FieldCore> base, std::vector<std::uint32_t> modulus)
    : p_(base->characteristic()),
      degree_(static_cast<unsigned>(modulus.size()) - 1),
      base_size_(static_cast<std::uint32_t>(base->size())),
      base_(std::move(base)),
      modulus_(std::move(modulus)) {
    if (modulus_.size() < 2 || modulus_.back() != 1)
        throw std::invalid_argument("FieldCore: modulus must be monic of degree >= 1");
    for (auto c : modulus_)
        if (c >= base_size_) throw std::invalid_argument("FieldCore: modulus coefficient out of range");
    size_ = checked_pow(base_size_, degree_);
    if (size_ > (std::uint64_t{1} << 31)) throw std::invalid_argument("FieldCore: field too large");
    build_tables();
}

std::uint32_t FieldCore::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (!base_) {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    for (unsigned j = 0; j < degree_; ++j) {
        r += base_->add(a % base_size_, b % base_size_) * place;
        a /= base_size_;
        b /= base_size_;
        place *= base_size_;
    }
    return r;
}

std::uint32_t FieldCore::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (!base_) return a == 0 ? 0 : p_ - a;
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    for (unsigned j = 0; j < degree_; ++j) {
        r += base_->neg(a % base_size_) * place;
        a /= base_size_;
        place *= base_size_;
    }
    return r;
}

std::uint32_t FieldCore::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_schoolbook(a, b);
}

std::uint32_t FieldCore::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("FieldCore::inv: zero has no inverse");
    if (!log_.empty()) return exp_[(size_ - 1) - log_[a]];
    return pow(a, size_ - 2);
}

std::uint32_t FieldCore::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e != 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint32_t FieldCore::mul_schoolbook(std::uint32_t a, std::uint32_t b) const {
    if (!base_) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
    const auto da = digits(a);
    const auto db = digits(b);
    std::vector<std::uint32_t> prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < degree_; ++j) prod[i + j] = base_->add(prod[i + j], base_->mul(da[i], db[j]));
    }
    for (unsigned i = 2 * degree_ - 2; i >= degree_; --i) {
        const std::uint32_t c = prod[i];
        if (c == 0) continue;
        for (unsigned j = 0; j < degree_; ++j)
            prod[i - degree_ + j] = base_->sub(prod[i - degree_ + j], base_->mul(c, modulus_[j]));
    }
    return from_digits(std::span(prod).first(degree_));
}

std::vector<std::uint32_t> FieldCore::digits(std::uint32_t a) const {
    if (!base_) return {a};
    std::vector<std::uint32_t> d(degree_);
    for (unsigned j = 0; j < degree_; ++j) {
        d[j] = a % base_size_;
        a /= base_size_;
    }
    return d;
}

std::uint32_t FieldCore::from_digits(std::span<const std::uint32_t> d) const {
    if (!base_) {
        if (d.size() != 1 || d[0] >= p_) throw std::invalid_argument("FieldCore::from_digits: bad prime-field digit");
        return d[0];
    }
    if (d.size() != degree_) throw std::invalid_argument("FieldCore::from_digits: wrong digit count");
    std::uint32_t r = 0;
    for (unsigned j = degree_; j-- > 0;) {
        if (d[j] >= base_size_) throw std::invalid_argument("FieldCore::from_digits: digit out of range");
        r = r * base_size_ + d[j];
    }
    return r;
}

void FieldCore::build_tables() {
    if (size_ <= 2 || size_ > kTableLimit) return;
    const std::uint64_t order = size_ - 1;
    const auto factors = prime_factors(order);
    auto slow_pow = [this](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e != 0) {
            if (e & 1) r = mul_schoolbook(r, a);
            a = mul_schoolbook(a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint32_t generator = 0;
    for (std::uint64_t cand = 2; cand < size_ && generator == 0; ++cand) {
        bool primitive = true;
        for (auto r : factors) {
            if (slow_pow(static_cast<std::uint32_t>(cand), order / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) generator = static_cast<std::uint32_t>(cand);
    }
    if (generator == 0) throw std::runtime_error("FieldCore: no primitive element (modulus reducible?)");

    exp_.resize(2 * order);
    log_.assign(size_, 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
        if (i != 0 && x == 1) throw std::runtime_error("FieldCore: modulus is reducible");
        exp_[i] = x;
        exp_[i + order] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = mul_schoolbook(x, generator);
    }
}

}  // namespace gag::detail
