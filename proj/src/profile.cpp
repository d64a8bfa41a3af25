#include "gag/profile.hpp"

#include <sstream>
#include <stdexcept>

namespace gag {

DegreeProfile::DegreeProfile(std::map<unsigned, std::size_t> nu) {
    for (auto [degree, count] : nu) {
        if (degree == 0) throw std::invalid_argument("DegreeProfile: degree must be positive");
        if (count == 0) continue;
        nu_[degree] = count;
        length_ += degree * count;
        places_ += count;
    }
}

DegreeProfile DegreeProfile::from_degrees(std::span<const unsigned> degrees) {
    std::map<unsigned, std::size_t> nu;
    for (auto d : degrees) ++nu[d];
    return DegreeProfile(std::move(nu));
}

DegreeProfile DegreeProfile::parse(std::string_view text) {
    std::string s(text);
    for (auto& c : s)
        if (c == ',') c = ' ';
    std::istringstream in(s);
    std::map<unsigned, std::size_t> nu;
    std::string tok;
    while (in >> tok) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("DegreeProfile::parse: expected degree:count, got '" + tok + "'");
        std::size_t used = 0;
        const unsigned long degree = std::stoul(tok.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("DegreeProfile::parse: bad degree in '" + tok + "'");
        const std::string rest = tok.substr(colon + 1);
        const unsigned long count = std::stoul(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("DegreeProfile::parse: bad count in '" + tok + "'");
        if (nu.count(static_cast<unsigned>(degree))) throw std::invalid_argument("DegreeProfile::parse: repeated degree");
        nu[static_cast<unsigned>(degree)] = count;
    }
    return DegreeProfile(std::move(nu));
}

std::size_t DegreeProfile::count(unsigned degree) const {
    auto it = nu_.find(degree);
    return it == nu_.end() ? 0 : it->second;
}

std::vector<unsigned> DegreeProfile::degrees_descending() const {
    std::vector<unsigned> out;
    out.reserve(places_);
    for (auto it = nu_.rbegin(); it != nu_.rend(); ++it) out.insert(out.end(), it->second, it->first);
    return out;
}

std::string DegreeProfile::to_string() const {
    std::string out;
    for (auto [degree, count] : nu_) {
        if (!out.empty()) out += ' ';
        out += std::to_string(degree) + ':' + std::to_string(count);
    }
    return out;
}

}  // namespace gag
