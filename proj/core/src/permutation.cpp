#include "ohdet/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ohdet {

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
            throw std::invalid_argument("image array is not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int v = 0; v < size(); ++v) inv[images_[v]] = v;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> img(images_.size());
    for (int v = 0; v < size(); ++v) img[v] = images_[other.images_[v]];
    return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int v = 0; v < size(); ++v) {
        if (seen[v]) continue;
        std::vector<int> cyc;
        for (int u = v; !seen[u]; u = images_[u]) {
            seen[u] = true;
            cyc.push_back(u);
        }
        out.push_back(std::move(cyc));
    }
    return out;  // leaders are minimal and increasing by construction
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream out;
    bool any = false;
    for (const auto& cyc : cycles()) {
        if (cyc.size() < 2) continue;
        any = true;
        out << '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) out << ' ';
            out << cyc[i] + 1;
        }
        out << ')';
    }
    return any ? out.str() : "id";
}

Permutation Permutation::from_cycle_string(const std::string& text, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    size_t pos = text.find_first_not_of(" \t");
    if (pos == std::string::npos || text.substr(pos, 2) == "id")
        return Permutation(std::move(img));

    size_t i = 0;
    bool any_cycle = false;
    while (i < text.size()) {
        char ch = text[i];
        if (isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
        if (ch != '(') throw std::invalid_argument("expected '(' in cycle notation");
        size_t close = text.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("unclosed cycle");
        std::string body = text.substr(i + 1, close - i - 1);
        for (char& c : body)
            if (c == ',') c = ' ';
        std::istringstream ss(body);
        std::vector<int> cyc;
        int x;
        while (ss >> x) {
            if (x < 1 || x > n) throw std::invalid_argument("cycle element out of range");
            cyc.push_back(x - 1);
        }
        if (cyc.empty()) throw std::invalid_argument("empty cycle");
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            img[from] = to;
        }
        any_cycle = true;
        i = close + 1;
    }
    if (!any_cycle) throw std::invalid_argument("no cycles in permutation text");
    return Permutation(std::move(img));  // validates disjointness via bijection check
}

} // namespace ohdet
