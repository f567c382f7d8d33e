#pragma once

#include <array>
#include <string>
#include <vector>

#include "ohdet/incidence.hpp"

namespace ohdet {

/// The (n-1)^2 probe-contributor signs taken in the identity class of a
/// standardized n-full structure: digons (1k) and (kl), and 3-cycles
/// (1 k l) with 2 <= k < l <= n. All signs are contributor signs.
struct SignProbe {
    int n = 0;
    std::vector<int> s1k;                          // k = 2..n
    std::vector<std::array<int, 3>> skl;           // {k, l, sign}, 1-based, k < l
    std::vector<std::array<int, 3>> s1kl;          // {k, l, sign}

    int probe_count() const;  // always (n-1)^2

    int get_s1k(int k) const;           // 1-based k in 2..n
    int get_skl(int k, int l) const;
    int get_s1kl(int k, int l) const;

    std::string to_json() const;
    static SignProbe from_json(const std::string& text);

    bool operator==(const SignProbe&) const = default;
};

/// Evaluates the probe contributors (tail map = id throughout). Throws
/// if H is not standardized n-full.
SignProbe probe_signs(const IncidenceStructure& h_std);

/// The unique standardized matrix with these probe signs:
///   h_kk = -s_1k,  h_kl = s_1kl * s_1k * s_1l,  h_lk = -s_1kl * s_kl.
IncidenceStructure reconstruct(const SignProbe& p);

} // namespace ohdet
