#include "gag/compare.hpp"

#include <sstream>
#include <stdexcept>

#include "gag/bch.hpp"
#include "gag/bounds.hpp"

namespace gag {

std::vector<CompareRow> compare_with_bch(const DegreeProfile& profile, std::uint64_t q, std::size_t bch_length,
                                         bool narrow_sense) {
    const std::size_t n = profile.length();
    if (n == 0) throw std::invalid_argument("compare_with_bch: empty profile");
    if (bch_length < n) throw std::invalid_argument("compare_with_bch: BCH length shorter than the code");
    const auto curve = best_bch_curve(q, bch_length, n, narrow_sense);
    std::vector<CompareRow> rows;
    rows.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t g = n - 1 - r;
        rows.push_back({r, correctable_errors(profile, lifted_radius(n, g)), curve[r].correctable});
    }
    return rows;
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
    std::ostringstream out;
    out << "check_symbols,gag_correctable,bch_correctable\n";
    for (const auto& row : rows) out << row.check_symbols << ',' << row.gag_correctable << ',' << row.bch_correctable << '\n';
    return out.str();
}

}  // namespace gag
