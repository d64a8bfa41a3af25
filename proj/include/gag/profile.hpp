#ifndef GAG_PROFILE_HPP
#define GAG_PROFILE_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gag {

/// Multiset of place degrees: nu(i) = number of places of degree i.
class DegreeProfile {
public:
    DegreeProfile() = default;
    explicit DegreeProfile(std::map<unsigned, std::size_t> nu);

    static DegreeProfile from_degrees(std::span<const unsigned> degrees);
    /// Parses "1:7 2:28 3:168" (commas also accepted as separators).
    static DegreeProfile parse(std::string_view text);

    std::size_t count(unsigned degree) const;
    const std::map<unsigned, std::size_t>& counts() const noexcept { return nu_; }
    bool empty() const noexcept { return nu_.empty(); }

    /// μ, the largest degree present (0 when empty).
    unsigned max_degree() const noexcept { return nu_.empty() ? 0 : nu_.rbegin()->first; }
    /// Σ i·ν_i, the code length.
    std::size_t length() const noexcept { return length_; }
    /// Σ ν_i, the number of places.
    std::size_t place_count() const noexcept { return places_; }

    /// Every place degree, largest first.
    std::vector<unsigned> degrees_descending() const;

    std::string to_string() const;

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;

private:
    std::map<unsigned, std::size_t> nu_;
    std::size_t length_ = 0;
    std::size_t places_ = 0;
};

}  // namespace gag

#endif  // GAG_PROFILE_HPP
