#ifndef GAG_COMPARE_HPP
#define GAG_COMPARE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gag/profile.hpp"

namespace gag {

struct CompareRow {
    std::size_t check_symbols = 0;
    std::size_t gag_correctable = 0;
    std::size_t bch_correctable = 0;
};

/// One row per r = n − (g+1), g = 0 … n−1, sorted by r. The GAG column uses the
/// lifted radius ⌊(n−g−1)/2⌋; the BCH column is the best shortened length-N BCH code.
std::vector<CompareRow> compare_with_bch(const DegreeProfile& profile, std::uint64_t q, std::size_t bch_length,
                                         bool narrow_sense = false);

std::string compare_csv(const std::vector<CompareRow>& rows);

}  // namespace gag

#endif  // GAG_COMPARE_HPP
