#include "ohdet/reconstruct.hpp"

#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "ohdet/contributor.hpp"

namespace ohdet {

int SignProbe::probe_count() const {
    return static_cast<int>(s1k.size() + skl.size() + s1kl.size());
}

int SignProbe::get_s1k(int k) const {
    if (k < 2 || k > n) throw std::out_of_range("s1k index");
    return s1k[k - 2];
}

namespace {

int lookup(const std::vector<std::array<int, 3>>& table, int k, int l, const char* what) {
    for (const auto& row : table)
        if (row[0] == k && row[1] == l) return row[2];
    throw std::out_of_range(what);
}

} // namespace

int SignProbe::get_skl(int k, int l) const { return lookup(skl, k, l, "skl index"); }
int SignProbe::get_s1kl(int k, int l) const { return lookup(s1kl, k, l, "s1kl index"); }

std::string SignProbe::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["s1k"] = s1k;
    j["skl"] = nlohmann::json::array();
    for (const auto& row : skl) j["skl"].push_back({row[0], row[1], row[2]});
    j["s1kl"] = nlohmann::json::array();
    for (const auto& row : s1kl) j["s1kl"].push_back({row[0], row[1], row[2]});
    return j.dump();
}

SignProbe SignProbe::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SignProbe p;
    p.n = j.at("n").get<int>();
    p.s1k = j.at("s1k").get<std::vector<int>>();
    for (const auto& row : j.at("skl"))
        p.skl.push_back({row.at(0).get<int>(), row.at(1).get<int>(), row.at(2).get<int>()});
    for (const auto& row : j.at("s1kl"))
        p.s1kl.push_back({row.at(0).get<int>(), row.at(1).get<int>(), row.at(2).get<int>()});
    if (p.n < 1) throw std::invalid_argument("probe dimension must be positive");
    if (static_cast<int>(p.s1k.size()) != p.n - 1)
        throw std::invalid_argument("probe s1k has wrong length");
    for (int x : p.s1k)
        if (x != 1 && x != -1) throw std::invalid_argument("probe signs must be +-1");
    auto check_pairs = [&](const std::vector<std::array<int, 3>>& table) {
        for (const auto& row : table) {
            if (row[0] < 2 || row[1] <= row[0] || row[1] > p.n)
                throw std::invalid_argument("probe pair indices out of range");
            if (row[2] != 1 && row[2] != -1)
                throw std::invalid_argument("probe signs must be +-1");
        }
    };
    check_pairs(p.skl);
    check_pairs(p.s1kl);
    int pairs = (p.n - 1) * (p.n - 2) / 2;
    if (static_cast<int>(p.skl.size()) != pairs || static_cast<int>(p.s1kl.size()) != pairs)
        throw std::invalid_argument("probe is incomplete");
    return p;
}

namespace {

int probe_contributor_sign(const IncidenceStructure& H, const Permutation& perm) {
    std::vector<int> id_tail(H.n_vertices());
    std::iota(id_tail.begin(), id_tail.end(), 0);
    return contributor_sign(H, Contributor{id_tail, perm}).sign;
}

Permutation transposition(int n, int a, int b) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[a], img[b]);
    return Permutation(std::move(img));
}

Permutation three_cycle(int n, int a, int b, int c) {
    // a -> b -> c -> a
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    img[a] = b; img[b] = c; img[c] = a;
    return Permutation(std::move(img));
}

} // namespace

SignProbe probe_signs(const IncidenceStructure& h_std) {
    if (!h_std.is_standardized())
        throw std::invalid_argument("probe requires a standardized structure");
    const int n = h_std.n_vertices();
    SignProbe p;
    p.n = n;
    for (int k = 2; k <= n; ++k)
        p.s1k.push_back(probe_contributor_sign(h_std, transposition(n, 0, k - 1)));
    for (int k = 2; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            p.skl.push_back({k, l, probe_contributor_sign(h_std, transposition(n, k - 1, l - 1))});
    // the (1 k l) probe circle uses entries h_kk, h_kl, h_ll: heads run
    // 1 -> l -> k -> 1 through tail edges e1, el, ek
    for (int k = 2; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            p.s1kl.push_back({k, l, probe_contributor_sign(h_std, three_cycle(n, 0, l - 1, k - 1))});
    return p;
}

IncidenceStructure reconstruct(const SignProbe& p) {
    const int n = p.n;
    IncidenceStructure H(n, n);
    for (int e = 0; e < n; ++e) H.set_entry(0, e, 1);
    for (int v = 0; v < n; ++v) H.set_entry(v, 0, 1);
    for (int k = 2; k <= n; ++k)
        H.set_entry(k - 1, k - 1, -p.get_s1k(k));
    for (int k = 2; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            H.set_entry(k - 1, l - 1, p.get_s1kl(k, l) * p.get_s1k(k) * p.get_s1k(l));
            H.set_entry(l - 1, k - 1, -p.get_s1kl(k, l) * p.get_skl(k, l));
        }
    return H;
}

} // namespace ohdet
