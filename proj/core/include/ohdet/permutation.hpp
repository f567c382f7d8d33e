#pragma once

#include <string>
#include <vector>

namespace ohdet {

/// Bijection on {0..n-1} stored as an image array. Cycle decomposition
/// is canonical: each cycle led by its minimum element, cycles sorted
/// by leader.
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    explicit Permutation(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int v) const { return images_[v]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// (a.compose(b))(v) = a(b(v))
    Permutation compose(const Permutation& other) const;

    /// Canonical cycle decomposition, fixed points included.
    std::vector<std::vector<int>> cycles() const;

    /// Cycle notation with 1-based vertices, fixed points omitted;
    /// identity renders as "id".
    std::string to_cycle_string() const;

    /// Accepts "(1 2 3)(4 5)" style cycle notation (1-based, spaces or
    /// commas inside cycles) and "id"/"" for the identity.
    static Permutation from_cycle_string(const std::string& text, int n);

    bool operator==(const Permutation&) const = default;
    /// Lexicographic order on image arrays.
    bool operator<(const Permutation& other) const { return images_ < other.images_; }

private:
    std::vector<int> images_;
};

} // namespace ohdet
