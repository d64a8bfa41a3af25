#ifndef GAG_WORDS_CSV_HPP
#define GAG_WORDS_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gag/tower.hpp"

namespace gag {

using Word = std::vector<BaseElem>;

/// One header line "<prefix>0,<prefix>1,…", then one word per line in canonical F_q encoding.
void write_words_csv(std::ostream& out, const FieldTower& tower, const std::vector<Word>& words, std::size_t length,
                     const std::string& prefix);

/// Reads words written by write_words_csv; every row must have `length` symbols.
std::vector<Word> read_words_csv(std::istream& in, const FieldTower& tower, std::size_t length);

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace gag

#endif  // GAG_WORDS_CSV_HPP
