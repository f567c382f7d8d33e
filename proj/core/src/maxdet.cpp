#include "ohdet/maxdet.hpp"

#include <atomic>
#include <iostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "ohdet/contributor.hpp"
#include "ohdet/exact.hpp"
#include "ohdet/reconstruct.hpp"

namespace ohdet {

namespace {

constexpr std::uint64_t kProgressStride = 1ULL << 20;

/// Standardized candidate from the bits of idx: bit (k-2)*(n-1)+(l-2)
/// set means entry (k,l) = -1, k,l in 2..n.
IncidenceStructure candidate_matrix(int n, std::uint64_t idx) {
    IncidenceStructure H(n, n);
    for (int e = 0; e < n; ++e) H.set_entry(0, e, 1);
    for (int v = 0; v < n; ++v) H.set_entry(v, 0, 1);
    for (int k = 1; k < n; ++k)
        for (int l = 1; l < n; ++l) {
            int bit = (k - 1) * (n - 1) + (l - 1);
            H.set_entry(k, l, (idx >> bit & 1ULL) ? -1 : 1);
        }
    return H;
}

mpz_class det_magnitude(const IncidenceStructure& H) {
    mpz_class d = exact_determinant(H);
    return abs(d);
}

mpz_class pow_n_n(int n) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), n, n);
    return r;
}

void finish_result(SearchResult& r, int n) {
    r.n_pow_n = pow_n_n(n);
    r.hadamard_ok = r.best_magnitude * r.best_magnitude <= r.n_pow_n;
    if (!r.witnesses.empty()) {
        auto check = det_magnitude_single_class(r.witnesses.front(),
                                                Permutation::identity(n));
        r.cross_check_ok = check.magnitude == r.best_magnitude &&
                           check.identities_hold;
    }
}

} // namespace

SearchResult exhaustive_maxdet(int n, int workers, int cap) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > cap)
        throw std::invalid_argument("exhaustive search cap exceeded: n = " +
                                    std::to_string(n) + " > cap " + std::to_string(cap));
    const int bits = (n - 1) * (n - 1);
    const std::uint64_t total = 1ULL << bits;
    if (workers < 1) workers = 1;
    std::uint64_t w = std::min<std::uint64_t>(workers, total);

    struct Local {
        mpz_class best = -1;
        std::vector<std::uint64_t> witness_idx;
    };
    std::vector<Local> locals(w);
    std::atomic<std::uint64_t> progress{0};

    auto run = [&](std::uint64_t t, std::uint64_t lo, std::uint64_t hi) {
        Local& loc = locals[t];
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            mpz_class mag = det_magnitude(candidate_matrix(n, idx));
            if (mag > loc.best) {
                loc.best = mag;
                loc.witness_idx.assign(1, idx);
            } else if (mag == loc.best) {
                loc.witness_idx.push_back(idx);
            }
            std::uint64_t seen = progress.fetch_add(1) + 1;
            if (seen % kProgressStride == 0)
                std::cerr << "maxdet: visited " << seen << " / " << total << " candidates\n";
        }
    };

    if (w == 1) {
        run(0, 0, total);
    } else {
        std::vector<std::thread> threads;
        for (std::uint64_t t = 0; t < w; ++t)
            threads.emplace_back(run, t, total * t / w, total * (t + 1) / w);
        for (auto& th : threads) th.join();
    }

    SearchResult result;
    result.n = n;
    result.visited = total;
    for (const auto& loc : locals)
        if (loc.best > result.best_magnitude) result.best_magnitude = loc.best;
    for (const auto& loc : locals)
        if (loc.best == result.best_magnitude)
            for (std::uint64_t idx : loc.witness_idx)
                result.witnesses.push_back(candidate_matrix(n, idx));
    finish_result(result, n);
    return result;
}

SearchResult local_search_maxdet(int n, std::uint64_t seed, std::uint64_t budget) {
    if (n < 2) throw std::invalid_argument("local search needs n >= 2");
    const int bits = (n - 1) * (n - 1);
    std::mt19937_64 rng(seed);
    auto random_bits = [&] {
        std::uint64_t v = rng();
        return bits >= 64 ? v : v & ((1ULL << bits) - 1);
    };

    std::uint64_t evals = 0;
    auto evaluate = [&](std::uint64_t idx) {
        ++evals;
        return det_magnitude(candidate_matrix(n, idx));
    };

    std::uint64_t best_idx = random_bits();
    mpz_class best = evaluate(best_idx);

    std::uint64_t cur_idx = best_idx;
    mpz_class cur = best;
    while (evals < budget) {
        // best-improvement step over single-entry flips
        int improving = -1;
        mpz_class step_best = cur;
        for (int b = 0; b < bits && evals < budget; ++b) {
            mpz_class mag = evaluate(cur_idx ^ (1ULL << b));
            if (mag > step_best) { step_best = mag; improving = b; }
        }
        if (improving >= 0) {
            cur_idx ^= 1ULL << improving;
            cur = step_best;
            if (cur > best) { best = cur; best_idx = cur_idx; }
        } else if (evals < budget) {
            cur_idx = random_bits();
            cur = evaluate(cur_idx);
            if (cur > best) { best = cur; best_idx = cur_idx; }
        }
    }

    SearchResult result;
    result.n = n;
    result.heuristic = true;
    result.visited = evals;
    result.best_magnitude = best;
    result.witnesses.push_back(candidate_matrix(n, best_idx));
    auto tally = det_magnitude_single_class(result.witnesses.front(),
                                            Permutation::identity(n));
    result.id_class_neg_count = tally.tally.neg_count;
    finish_result(result, n);
    return result;
}

ForcedSignReport forced_sign_experiment(int n, int cap) {
    if (n < 2) throw std::invalid_argument("experiment needs n >= 2");
    SearchResult exhaustive = exhaustive_maxdet(n, 1, cap);

    ForcedSignReport report;
    report.n = n;
    report.exhaustive_maximum = exhaustive.best_magnitude;
    for (int target : {+1, -1}) {
        SignProbe p;
        p.n = n;
        p.s1k.assign(n - 1, target);
        for (int k = 2; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) {
                p.skl.push_back({k, l, target});
                p.s1kl.push_back({k, l, target});
            }
        ForcedSignRow row;
        row.target_sign = target;
        row.matrix = reconstruct(p);
        row.magnitude = det_magnitude(row.matrix);
        row.attains_maximum = row.magnitude == report.exhaustive_maximum;
        if (row.attains_maximum) report.any_uniform_attains = true;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace ohdet
