#include "gag/spec_file.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gag {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

unsigned long parse_number(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size() || value.front() == '-')
        throw std::invalid_argument("code spec: '" + key + "' must be a non-negative integer, got '" + value + "'");
    return v;
}

}  // namespace

CodeSpec parse_code_spec(std::istream& in) {
    CodeSpec spec;
    bool have_p = false;
    bool have_g = false;
    bool have_places = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("code spec line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "label") {
            spec.label = value;
        } else if (key == "p") {
            spec.p = static_cast<std::uint32_t>(parse_number(key, value));
            have_p = true;
        } else if (key == "e") {
            spec.e = static_cast<unsigned>(parse_number(key, value));
        } else if (key == "g") {
            spec.g = parse_number(key, value);
            have_g = true;
        } else if (key == "places") {
            if (have_places) throw std::invalid_argument("code spec: 'places' given twice");
            spec.counts = DegreeProfile::parse(value).counts();
            have_places = true;
        } else if (key == "place") {
            spec.explicit_places.push_back(value);
        } else {
            throw std::invalid_argument("code spec line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!have_p) throw std::invalid_argument("code spec: missing 'p'");
    if (!have_g) throw std::invalid_argument("code spec: missing 'g'");
    if (spec.e == 0) throw std::invalid_argument("code spec: 'e' must be positive");
    if (have_places && !spec.explicit_places.empty())
        throw std::invalid_argument("code spec: use either 'places' or 'place' lines, not both");
    if (spec.counts.empty() && spec.explicit_places.empty()) throw std::invalid_argument("code spec: no places given");
    return spec;
}

CodeSpec load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code spec '" + path + "'");
    return parse_code_spec(in);
}

std::string format_code_spec(const CodeSpec& spec) {
    std::ostringstream out;
    if (!spec.label.empty()) out << "label = " << spec.label << '\n';
    out << "p = " << spec.p << '\n' << "e = " << spec.e << '\n' << "g = " << spec.g << '\n';
    if (!spec.counts.empty()) out << "places = " << DegreeProfile(spec.counts).to_string() << '\n';
    for (const auto& place : spec.explicit_places) out << "place = " << place << '\n';
    return out.str();
}

GagCode build_code(const CodeSpec& spec) {
    if (spec.explicit_places.empty()) return build_code(spec.p, spec.e, PlaceSelection{{}, spec.counts}, spec.g);

    // Degrees come first on each place line; they fix m before coefficients can be parsed.
    unsigned m = 1;
    for (const auto& text : spec.explicit_places) {
        std::istringstream in(text);
        unsigned d = 0;
        if (!(in >> d) || d == 0) throw std::invalid_argument("code spec: bad place '" + text + "'");
        m = std::lcm(m, d);
    }
    auto tower = std::make_shared<const FieldTower>(spec.p, spec.e, m);
    std::vector<Place> places;
    for (const auto& text : spec.explicit_places) places.push_back(parse_place(*tower, text));
    return GagCode(std::move(tower), std::move(places), spec.g);
}

CodeSpec explicit_spec(const GagCode& code, std::string label) {
    CodeSpec spec;
    spec.label = std::move(label);
    spec.p = code.tower().p();
    spec.e = code.tower().e();
    spec.g = code.divisor_degree();
    for (const auto& place : code.places()) spec.explicit_places.push_back(format_place(code.tower(), place));
    return spec;
}

}  // namespace gag
