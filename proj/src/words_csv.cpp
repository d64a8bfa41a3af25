#include "gag/words_csv.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace gag {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else if (c != '\r') {
            cell += c;
        }
    }
    cells.push_back(cell);
    return cells;
}

void write_words_csv(std::ostream& out, const FieldTower& tower, const std::vector<Word>& words, std::size_t length,
                     const std::string& prefix) {
    for (std::size_t i = 0; i < length; ++i) out << (i ? "," : "") << prefix << i;
    out << '\n';
    for (const auto& w : words) {
        if (w.size() != length) throw std::invalid_argument("write_words_csv: word length mismatch");
        for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << tower.format(w[i]);
        out << '\n';
    }
}

std::vector<Word> read_words_csv(std::istream& in, const FieldTower& tower, std::size_t length) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("words csv: missing header");
    if (split_csv_line(line).size() != length)
        throw std::invalid_argument("words csv: header has wrong column count (expected " + std::to_string(length) + ")");
    std::vector<Word> words;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != length)
            throw std::invalid_argument("words csv row " + std::to_string(row) + ": expected " + std::to_string(length) + " symbols");
        Word w;
        w.reserve(length);
        for (const auto& c : cells) w.push_back(tower.parse_base(c));
        words.push_back(std::move(w));
    }
    return words;
}

}  // namespace gag
