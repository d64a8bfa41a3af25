#include "gag/bch.hpp"

#include <numeric>
#include <stdexcept>

namespace gag {

CosetTable cyclotomic_cosets(std::uint64_t q, std::size_t length) {
    if (length == 0) throw std::invalid_argument("cyclotomic_cosets: length must be positive");
    if (q < 2 || std::gcd(q, static_cast<std::uint64_t>(length)) != 1)
        throw std::invalid_argument("cyclotomic_cosets: q and N must be coprime");
    CosetTable table{q, length, {}, std::vector<std::size_t>(length, SIZE_MAX)};
    const std::uint64_t qm = q % length;
    for (std::size_t i = 0; i < length; ++i) {
        if (table.coset_of[i] != SIZE_MAX) continue;
        std::vector<std::size_t> coset;
        std::size_t x = i;
        do {
            table.coset_of[x] = table.cosets.size();
            coset.push_back(x);
            x = static_cast<std::size_t>((static_cast<std::uint64_t>(x) * qm) % length);
        } while (x != i);
        table.cosets.push_back(std::move(coset));
    }
    return table;
}

std::size_t root_run_redundancy(const CosetTable& table, std::size_t offset, std::size_t run) {
    std::vector<char> used(table.cosets.size(), 0);
    std::size_t r = 0;
    for (std::size_t j = 0; j < run; ++j) {
        const std::size_t c = table.coset_of[(offset + j) % table.length];
        if (used[c]) continue;
        used[c] = 1;
        r += table.cosets[c].size();
    }
    return r;
}

std::vector<BchPoint> best_bch_curve(std::uint64_t q, std::size_t length, std::size_t shortened_length, bool narrow_sense) {
    return best_bch_curve(cyclotomic_cosets(q, length), shortened_length, narrow_sense);
}

std::vector<BchPoint> best_bch_curve(const CosetTable& table, std::size_t shortened_length, bool narrow_sense) {
    const std::size_t N = table.length;
    if (shortened_length > N) throw std::invalid_argument("best_bch_curve: shortened length exceeds N");
    std::vector<BchPoint> exact(shortened_length + 1);
    for (std::size_t r = 0; r <= shortened_length; ++r) exact[r].check_symbols = r;

    std::vector<char> used(table.cosets.size(), 0);
    std::vector<std::size_t> touched;
    const std::size_t first = narrow_sense ? 1 % N : 0;
    const std::size_t last = narrow_sense ? first + 1 : N;
    for (std::size_t b = first; b < last; ++b) {
        std::size_t r = 0;
        // Runs stop short of all N roots, which would leave only the zero code.
        for (std::size_t run = 1; run < N; ++run) {
            const std::size_t c = table.coset_of[(b + run - 1) % N];
            if (!used[c]) {
                used[c] = 1;
                touched.push_back(c);
                r += table.cosets[c].size();
            }
            if (r > shortened_length) break;
            if (run + 1 > exact[r].designed_distance) {
                exact[r].designed_distance = run + 1;
                exact[r].offset = b;
            }
        }
        for (auto c : touched) used[c] = 0;
        touched.clear();
    }

    std::vector<BchPoint> curve(shortened_length + 1);
    BchPoint best;
    for (std::size_t r = 0; r <= shortened_length; ++r) {
        if (exact[r].designed_distance > best.designed_distance) best = exact[r];
        curve[r] = best;
        curve[r].check_symbols = r;
        curve[r].correctable = (curve[r].designed_distance - 1) / 2;
    }
    return curve;
}

std::size_t primitive_length_at_least(std::uint64_t q, std::size_t n) {
    if (q < 2) throw std::invalid_argument("primitive_length_at_least: q must be at least 2");
    std::uint64_t power = q;
    while (power - 1 < n) power *= q;
    return static_cast<std::size_t>(power - 1);
}

}  // namespace gag
