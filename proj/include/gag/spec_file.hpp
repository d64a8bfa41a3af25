#ifndef GAG_SPEC_FILE_HPP
#define GAG_SPEC_FILE_HPP

/*
 * Code-spec files: line-oriented "key = value" text, '#' starts a comment.
 *
 *     label  = good-example
 *     p      = 2
 *     e      = 3
 *     g      = 100
 *     places = 1:7 2:28 3:168          # first `count` places of each degree
 *
 * or, instead of `places`, one explicit line per place:
 *
 *     place  = 2 : 1 1 1               # degree : min_poly coefficients, low first
 *
 * Coefficients use the canonical F_q encoding (F_p digits joined by '.').
 */

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gag/code.hpp"

namespace gag {

struct CodeSpec {
    std::string label;
    std::uint32_t p = 0;
    unsigned e = 1;
    std::size_t g = 0;
    std::map<unsigned, std::size_t> counts;   ///< shorthand form
    std::vector<std::string> explicit_places;  ///< "d : c_0 … c_d" form
};

CodeSpec parse_code_spec(std::istream& in);
CodeSpec load_code_spec(const std::string& path);
std::string format_code_spec(const CodeSpec& spec);

GagCode build_code(const CodeSpec& spec);

/// Spec listing every place of the code explicitly.
CodeSpec explicit_spec(const GagCode& code, std::string label);

}  // namespace gag

#endif  // GAG_SPEC_FILE_HPP
