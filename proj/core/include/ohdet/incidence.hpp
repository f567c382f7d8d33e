#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ohdet {

/// V x E matrix over {-1,0,+1} encoding an incidence-simple oriented
/// hypergraph. Entry (v,e) is the orientation of the unique incidence
/// between vertex v and edge e, or 0 when absent. Indices are 0-based
/// internally; all I/O is 1-based.
class IncidenceStructure {
public:
    IncidenceStructure() = default;
    IncidenceStructure(int n_vertices, int n_edges)
        : rows_(n_vertices), cols_(n_edges),
          entries_(static_cast<size_t>(n_vertices) * n_edges, 0) {
        if (n_vertices < 0 || n_edges < 0)
            throw std::invalid_argument("negative dimension");
    }

    int n_vertices() const { return rows_; }
    int n_edges() const { return cols_; }

    int entry(int v, int e) const { return entries_[static_cast<size_t>(v) * cols_ + e]; }
    void set_entry(int v, int e, int val) {
        if (val < -1 || val > 1) throw std::invalid_argument("entry outside {-1,0,1}");
        entries_[static_cast<size_t>(v) * cols_ + e] = static_cast<int8_t>(val);
    }

    /// n-full: square with every entry nonzero (n-regular and n-uniform).
    bool is_full() const;

    /// First row and first column all +1 (requires full).
    bool is_standardized() const;

    bool operator==(const IncidenceStructure&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int8_t> entries_;
};

/// Parses the matrix text format: one row per line, either whitespace
/// separated tokens from {-1,0,1} or a compact row of characters from
/// {+,-,0}. Throws std::invalid_argument on ragged rows or bad entries.
IncidenceStructure parse_matrix(const std::string& text);

/// Emits the space-separated form, one row per line, trailing newline.
std::string serialize_matrix(const IncidenceStructure& H);

} // namespace ohdet
