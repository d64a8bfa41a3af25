#ifndef GAG_BCH_HPP
#define GAG_BCH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gag {

/// Partition of Z/NZ into q-cyclotomic cosets {i·q^j mod N}.
struct CosetTable {
    std::uint64_t q = 0;
    std::size_t length = 0;
    std::vector<std::vector<std::size_t>> cosets;  ///< ordered by minimal representative
    std::vector<std::size_t> coset_of;             ///< index into cosets for each residue
};

CosetTable cyclotomic_cosets(std::uint64_t q, std::size_t length);

/// Best BCH bound achievable with a given number of check symbols.
struct BchPoint {
    std::size_t check_symbols = 0;      ///< r
    std::size_t designed_distance = 1;  ///< δ
    std::size_t correctable = 0;        ///< ⌊(δ−1)/2⌋
    std::size_t offset = 0;             ///< b of the root run b, …, b+δ−2 (unused when δ = 1)
};

/// Size of the union of cosets containing b, b+1, …, b+run−1 (mod N).
std::size_t root_run_redundancy(const CosetTable& table, std::size_t offset, std::size_t run);

/**
 * Staircase of the largest BCH bound per redundancy for cyclic codes of length N
 * over F_q, shortened to shortened_length (shortening keeps r and δ).
 * Entry r (0 ≤ r ≤ shortened_length) maximises δ over root runs whose coset union
 * has at most r elements. Offsets b are swept over all of Z/NZ unless narrow_sense.
 */
std::vector<BchPoint> best_bch_curve(std::uint64_t q, std::size_t length, std::size_t shortened_length,
                                     bool narrow_sense = false);
std::vector<BchPoint> best_bch_curve(const CosetTable& table, std::size_t shortened_length, bool narrow_sense = false);

/// Smallest primitive length q^l − 1 that is at least n.
std::size_t primitive_length_at_least(std::uint64_t q, std::size_t n);

}  // namespace gag

#endif  // GAG_BCH_HPP
