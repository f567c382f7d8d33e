#include "ohdet/incidence.hpp"

#include <sstream>

namespace ohdet {

bool IncidenceStructure::is_full() const {
    if (rows_ == 0 || rows_ != cols_) return false;
    for (int8_t x : entries_)
        if (x == 0) return false;
    return true;
}

bool IncidenceStructure::is_standardized() const {
    if (!is_full()) return false;
    for (int e = 0; e < cols_; ++e)
        if (entry(0, e) != 1) return false;
    for (int v = 0; v < rows_; ++v)
        if (entry(v, 0) != 1) return false;
    return true;
}

namespace {

bool is_compact_row(const std::string& line) {
    for (char ch : line)
        if (ch != '+' && ch != '-' && ch != '0') return false;
    return !line.empty();
}

std::vector<int> parse_row(const std::string& line, int lineno) {
    std::vector<int> row;
    if (is_compact_row(line)) {
        for (char ch : line)
            row.push_back(ch == '+' ? 1 : ch == '-' ? -1 : 0);
        return row;
    }
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok == "1" || tok == "+1" || tok == "+")
            row.push_back(1);
        else if (tok == "-1" || tok == "-")
            row.push_back(-1);
        else if (tok == "0")
            row.push_back(0);
        else
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": entry '" + tok + "' outside {-1,0,1}");
    }
    return row;
}

} // namespace

IncidenceStructure parse_matrix(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (blank) continue;
        rows.push_back(parse_row(line, lineno));
        if (rows.back().empty())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": empty row");
        if (rows.back().size() != rows.front().size())
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": ragged row (expected " +
                                        std::to_string(rows.front().size()) + " entries)");
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    IncidenceStructure H(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int v = 0; v < H.n_vertices(); ++v)
        for (int e = 0; e < H.n_edges(); ++e)
            H.set_entry(v, e, rows[v][e]);
    return H;
}

std::string serialize_matrix(const IncidenceStructure& H) {
    std::ostringstream out;
    for (int v = 0; v < H.n_vertices(); ++v) {
        for (int e = 0; e < H.n_edges(); ++e) {
            if (e) out << ' ';
            out << H.entry(v, e);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ohdet
