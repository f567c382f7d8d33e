#include "ohdet/contributor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ohdet {

namespace {

void require_full(const IncidenceStructure& H) {
    if (!H.is_full()) throw std::invalid_argument("host structure is not n-full");
}

/// Tail map of the class with index `idx` in [0, n^n), lexicographic:
/// tail[0] is the most significant digit.
std::vector<int> tail_from_index(std::uint64_t idx, int n) {
    std::vector<int> tail(n);
    for (int v = n - 1; v >= 0; --v) {
        tail[v] = static_cast<int>(idx % n);
        idx /= n;
    }
    return tail;
}

mpz_class pow_uz(int base, int exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Splits [0, total) into `workers` contiguous chunks and sums
/// chunk_sum over them. Integer addition commutes, so the result is
/// independent of scheduling.
template <class Fn>
std::int64_t parallel_sum(std::uint64_t total, int workers, Fn chunk_sum) {
    if (workers < 1) workers = 1;
    if (workers == 1 || total < 2) return chunk_sum(0, total);
    std::uint64_t w = static_cast<std::uint64_t>(workers);
    if (w > total) w = total;
    std::vector<std::int64_t> partial(w, 0);
    std::vector<std::thread> threads;
    for (std::uint64_t t = 0; t < w; ++t) {
        std::uint64_t lo = total * t / w;
        std::uint64_t hi = total * (t + 1) / w;
        threads.emplace_back([&, t, lo, hi] { partial[t] = chunk_sum(lo, hi); });
    }
    for (auto& th : threads) th.join();
    std::int64_t sum = 0;
    for (std::int64_t p : partial) sum += p;
    return sum;
}

/// Sign of the permutation cycle through the tail edges; backsteps
/// (k = 1) come out as -1 since -entry^2 = -1 on a full host.
int cycle_sign(const IncidenceStructure& H, const std::vector<int>& tail,
               const std::vector<int>& cyc, const Permutation& perm) {
    int sign = 1;
    for (int v : cyc) {
        int e = tail[v];
        int head = perm.apply(v);
        int a = H.entry(v, e), b = H.entry(head, e);
        if (a == 0 || b == 0)
            throw std::invalid_argument("contributor references a zero entry");
        sign *= -a * b;
    }
    return sign;
}

/// Fast path used by the bulk enumerations: contributor sign without
/// materializing the component list.
int sign_only(const IncidenceStructure& H, const std::vector<int>& tail,
              const std::vector<int>& perm_img) {
    const int n = static_cast<int>(perm_img.size());
    int pc = 0;
    unsigned visited = 0;  // n <= 32 in any enumerable regime
    for (int v = 0; v < n; ++v) {
        if (visited >> v & 1u) continue;
        int csign = 1;
        int u = v;
        do {
            visited |= 1u << u;
            int e = tail[u];
            csign *= -H.entry(u, e) * H.entry(perm_img[u], e);
            u = perm_img[u];
        } while (u != v);
        if (csign > 0) ++pc;
    }
    return pc % 2 == 0 ? 1 : -1;
}

} // namespace

TailClassId TailClassId::from_tail(std::vector<int> tail) {
    TailClassId id;
    id.tail = std::move(tail);
    const int n = static_cast<int>(id.tail.size());
    std::vector<bool> seen(n, false);
    bool injective = true;
    for (int e : id.tail) {
        if (e < 0 || e >= n) throw std::invalid_argument("tail edge out of range");
        if (seen[e]) injective = false;
        seen[e] = true;
    }
    id.edge_monic = injective;
    if (injective) id.identifier = Permutation(id.tail);
    return id;
}

TailClassId TailClassId::from_identifier(const Permutation& alpha) {
    return from_tail(alpha.images());
}

SignDetail contributor_sign(const IncidenceStructure& H, const Contributor& c) {
    require_full(H);
    const int n = H.n_vertices();
    if (static_cast<int>(c.tail.size()) != n || c.perm.size() != n)
        throw std::invalid_argument("contributor size mismatch");
    SignDetail detail;
    for (const auto& cyc : c.perm.cycles()) {
        int s = cycle_sign(H, c.tail, cyc, c.perm);
        if (s > 0) ++detail.positive_components;
        detail.components.push_back({cyc, s});
    }
    detail.sign = detail.positive_components % 2 == 0 ? 1 : -1;
    return detail;
}

void enumerate_tail_class(const IncidenceStructure& H, const TailClassId& cls,
                          const std::function<void(const Permutation&, int)>& visit) {
    require_full(H);
    const int n = H.n_vertices();
    if (static_cast<int>(cls.tail.size()) != n)
        throw std::invalid_argument("tail map size mismatch");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
        visit(Permutation(img), sign_only(H, cls.tail, img));
    } while (std::next_permutation(img.begin(), img.end()));
}

ClassTally class_tally(const IncidenceStructure& H, const TailClassId& cls) {
    ClassTally tally;
    tally.class_id = cls;
    enumerate_tail_class(H, cls, [&](const Permutation&, int sign) {
        if (sign > 0) ++tally.pos_count; else ++tally.neg_count;
        tally.signed_sum += sign;
    });
    return tally;
}

std::variant<ContributorDetResult, BudgetExceeded> laplacian_det_via_contributors(
    const IncidenceStructure& H, std::uint64_t budget, int workers) {
    require_full(H);
    const int n = H.n_vertices();
    mpz_class required = pow_uz(n, n) * factorial(n);
    if (required > budget) return BudgetExceeded{required};

    const std::uint64_t n_classes = mpz_get_ui(pow_uz(n, n).get_mpz_t());
    std::int64_t det = parallel_sum(n_classes, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::int64_t acc = 0;
        std::vector<int> img(n);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::vector<int> tail = tail_from_index(idx, n);
            std::iota(img.begin(), img.end(), 0);
            do {
                acc += sign_only(H, tail, img);
            } while (std::next_permutation(img.begin(), img.end()));
        }
        return acc;
    });

    ContributorDetResult result;
    result.det_laplacian = det;
    result.classes_visited = n_classes;
    result.contributors_visited = mpz_get_ui(required.get_mpz_t());
    return result;
}

std::variant<NonMonicReport, BudgetExceeded> verify_nonmonic_zero(
    const IncidenceStructure& H, std::uint64_t budget) {
    require_full(H);
    const int n = H.n_vertices();
    mpz_class required = pow_uz(n, n) * factorial(n);
    if (required > budget) return BudgetExceeded{required};

    NonMonicReport report;
    report.all_zero = true;
    report.pairing_holds = true;
    const std::uint64_t n_classes = mpz_get_ui(pow_uz(n, n).get_mpz_t());

    std::vector<int> img(n);
    for (std::uint64_t idx = 0; idx < n_classes; ++idx) {
        std::vector<int> tail = tail_from_index(idx, n);

        // least (v, w) sharing a tail edge; absent for edge-monic classes
        int wv = -1, ww = -1;
        for (int v = 0; v < n && wv < 0; ++v)
            for (int w = v + 1; w < n; ++w)
                if (tail[v] == tail[w]) { wv = v; ww = w; break; }
        if (wv < 0) continue;

        ++report.classes_checked;
        if (!report.witness) report.witness = PairingWitness{tail, wv, ww};

        std::int64_t class_sum = 0;
        std::iota(img.begin(), img.end(), 0);
        do {
            int s = sign_only(H, tail, img);
            class_sum += s;

            // pi' = pi * (vw); visit each unordered pair once
            std::vector<int> img2 = img;
            std::swap(img2[wv], img2[ww]);
            if (img < img2) {
                int s2 = sign_only(H, tail, img2);
                if (s + s2 != 0) report.pairing_holds = false;
                bool case1 = (img[wv] == ww && img[ww] == wv) ||
                             (img[wv] == wv && img[ww] == ww);
                if (case1) ++report.case1_pairs; else ++report.case2_pairs;
            }
        } while (std::next_permutation(img.begin(), img.end()));
        if (class_sum != 0) report.all_zero = false;
    }
    return report;
}

SingleClassMagnitude det_magnitude_single_class(const IncidenceStructure& H,
                                                const Permutation& alpha) {
    SingleClassMagnitude out;
    out.tally = class_tally(H, TailClassId::from_identifier(alpha));
    out.magnitude = std::llabs(out.tally.signed_sum);
    std::int64_t nfact = out.tally.pos_count + out.tally.neg_count;
    if (out.tally.signed_sum >= 0)
        out.identities_hold = out.magnitude == nfact - 2 * out.tally.neg_count &&
                              out.magnitude == 2 * out.tally.pos_count - nfact;
    else
        out.identities_hold = out.magnitude == nfact - 2 * out.tally.pos_count &&
                              out.magnitude == 2 * out.tally.neg_count - nfact;
    return out;
}

AllClassesResult class_tallies_all(const IncidenceStructure& H, int workers) {
    require_full(H);
    const int n = H.n_vertices();

    std::vector<std::vector<int>> identifiers;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
        identifiers.push_back(img);
    } while (std::next_permutation(img.begin(), img.end()));

    AllClassesResult result;
    result.tallies.resize(identifiers.size());
    // indexed writes, no reduction: deterministic for any worker count
    parallel_sum(identifiers.size(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i)
            result.tallies[i] = class_tally(H, TailClassId::from_tail(identifiers[i]));
        return std::int64_t{0};
    });

    std::int64_t common_magnitude = -1;
    bool magnitudes_agree = true;
    for (const auto& t : result.tallies) {
        result.laplacian_det += t.signed_sum;
        if (t.signed_sum > 0) ++result.plus_classes;
        if (t.signed_sum < 0) ++result.minus_classes;
        std::int64_t mag = std::llabs(t.signed_sum);
        if (common_magnitude < 0) common_magnitude = mag;
        else if (common_magnitude != mag) magnitudes_agree = false;
    }
    result.det_magnitude = common_magnitude < 0 ? 0 : common_magnitude;
    if (result.det_magnitude == 0) {
        result.degenerate = true;  // lemma precondition det != 0 unmet
        result.identities_hold = magnitudes_agree;
    } else {
        std::int64_t nfact = static_cast<std::int64_t>(result.tallies.size());
        result.identities_hold =
            magnitudes_agree &&
            result.det_magnitude == result.plus_classes - result.minus_classes &&
            result.det_magnitude == nfact - 2 * result.minus_classes &&
            result.det_magnitude == 2 * result.plus_classes - nfact;
    }
    return result;
}

namespace {

/// Unordered adjacency multiset of a contributor: (min vertex, max
/// vertex, edge) per path, backsteps included as (v, v, e).
std::vector<std::array<int, 3>> adjacency_multiset(const Contributor& c) {
    std::vector<std::array<int, 3>> adj;
    for (int v = 0; v < c.perm.size(); ++v) {
        int h = c.perm.apply(v);
        adj.push_back({std::min(v, h), std::max(v, h), c.tail[v]});
    }
    std::sort(adj.begin(), adj.end());
    return adj;
}

} // namespace

AdjacencyInversePair adjacency_inverse_pair(const IncidenceStructure& H,
                                            const Permutation& alpha,
                                            const Permutation& beta) {
    require_full(H);
    AdjacencyInversePair pair;
    // tails alpha, heads beta: perm = beta^-1 o alpha (and its inverse)
    pair.in_alpha = Contributor{alpha.images(), beta.inverse().compose(alpha)};
    pair.in_beta = Contributor{beta.images(), alpha.inverse().compose(beta)};
    pair.same_adjacencies =
        adjacency_multiset(pair.in_alpha) == adjacency_multiset(pair.in_beta);
    pair.equal_signs = contributor_sign(H, pair.in_alpha).sign ==
                       contributor_sign(H, pair.in_beta).sign;
    return pair;
}

HeadClassResult head_class_from_tail_class(const IncidenceStructure& H,
                                           const Permutation& alpha) {
    require_full(H);
    const int n = H.n_vertices();
    HeadClassResult result;

    enumerate_tail_class(H, TailClassId::from_identifier(alpha),
                         [&](const Permutation& pi, int) {
        // reversal of (alpha, pi): tails alpha o pi^-1, perm pi^-1
        Permutation pinv = pi.inverse();
        std::vector<int> tail(n);
        for (int v = 0; v < n; ++v) tail[v] = alpha.apply(pinv.apply(v));
        result.contributors.push_back(Contributor{std::move(tail), std::move(pinv)});
    });

    // every reversal's head-incidence set must be {(v, alpha(v))}
    result.common_heads = true;
    for (const auto& c : result.contributors) {
        std::vector<std::pair<int, int>> heads;
        for (int v = 0; v < n; ++v) heads.emplace_back(c.perm.apply(v), c.tail[v]);
        std::sort(heads.begin(), heads.end());
        for (int v = 0; v < n; ++v)
            if (heads[v] != std::make_pair(v, alpha.apply(v))) result.common_heads = false;
    }

    std::vector<std::vector<int>> tails;
    for (const auto& c : result.contributors) {
        auto cls = TailClassId::from_tail(c.tail);
        if (!cls.edge_monic) { result.transversal = false; return result; }
        tails.push_back(c.tail);
    }
    std::sort(tails.begin(), tails.end());
    result.transversal =
        std::adjacent_find(tails.begin(), tails.end()) == tails.end() &&
        static_cast<int>(tails.size()) == [&] {
            int f = 1;
            for (int k = 2; k <= n; ++k) f *= k;
            return f;
        }();
    return result;
}

} // namespace ohdet
