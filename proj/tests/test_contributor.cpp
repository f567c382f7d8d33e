#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "ohdet/contributor.hpp"
#include "ohdet/exact.hpp"
#include "helpers.hpp"

using namespace ohdet;
using testutil::fig7;
using testutil::id_tail;

namespace {

Permutation cyc(const std::string& s, int n) { return Permutation::from_cycle_string(s, n); }

std::int64_t contributor_det(const IncidenceStructure& H, int workers = 1) {
    auto res = laplacian_det_via_contributors(H, kDefaultBudget, workers);
    return std::get<ContributorDetResult>(res).det_laplacian;
}

} // namespace

TEST_CASE("contributor signs on the 3x3 fixture") {
    IncidenceStructure H = fig7();

    SignDetail all_back = contributor_sign(H, {id_tail(3), Permutation::identity(3)});
    CHECK(all_back.sign == 1);
    CHECK(all_back.positive_components == 0);
    REQUIRE(all_back.components.size() == 3);
    for (const auto& comp : all_back.components) CHECK(comp.sign == -1);

    SignDetail swap23 = contributor_sign(H, {id_tail(3), cyc("(2 3)", 3)});
    CHECK(swap23.sign == -1);
    CHECK(swap23.positive_components == 1);

    SignDetail rot = contributor_sign(H, {id_tail(3), cyc("(1 2 3)", 3)});
    CHECK(rot.sign == 1);
    CHECK(rot.positive_components == 0);
}

TEST_CASE("backstep components are always negative") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + rng() % 3;
        IncidenceStructure H = testutil::random_full(n, rng);
        std::vector<int> tail(n);
        for (int v = 0; v < n; ++v) tail[v] = rng() % n;
        SignDetail d = contributor_sign(H, {tail, Permutation::identity(n)});
        for (const auto& comp : d.components) CHECK(comp.sign == -1);
        CHECK(d.sign == 1);  // all-backstep contributor is always positive
    }
}

TEST_CASE("contributor_sign rejects bad hosts") {
    CHECK_THROWS_AS(contributor_sign(parse_matrix("1 0\n0 1"),
                                     {id_tail(2), Permutation::identity(2)}),
                    std::invalid_argument);
}

TEST_CASE("enumerate_tail_class yields n! items in lex order") {
    IncidenceStructure H = fig7();
    std::vector<Permutation> seen;
    enumerate_tail_class(H, TailClassId::from_tail(id_tail(3)),
                         [&](const Permutation& p, int) { seen.push_back(p); });
    REQUIRE(seen.size() == 6);
    for (size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] < seen[i]);

    int pos = 0, neg = 0;
    enumerate_tail_class(H, TailClassId::from_tail(id_tail(3)),
                         [&](const Permutation&, int s) { s > 0 ? ++pos : ++neg; });
    CHECK(pos == 5);
    CHECK(neg == 1);
}

TEST_CASE("n = 1 class is the single identity backstep") {
    IncidenceStructure H = parse_matrix("+\n");
    int count = 0;
    enumerate_tail_class(H, TailClassId::from_tail({0}), [&](const Permutation& p, int s) {
        ++count;
        CHECK(p == Permutation::identity(1));
        CHECK(s == 1);
    });
    CHECK(count == 1);
}

TEST_CASE("class_tally fixtures") {
    IncidenceStructure H = fig7();

    ClassTally id_class = class_tally(H, TailClassId::from_tail(id_tail(3)));
    CHECK(id_class.pos_count == 5);
    CHECK(id_class.neg_count == 1);
    CHECK(id_class.signed_sum == 4);
    CHECK(id_class.class_id.edge_monic);

    ClassTally singular = class_tally(testutil::all_plus(3),
                                      TailClassId::from_tail(id_tail(3)));
    CHECK(singular.signed_sum == 0);
    CHECK(singular.pos_count == 3);
    CHECK(singular.neg_count == 3);

    // tails 1->e1, 2->e1, 3->e3: non-edge-monic, must vanish
    ClassTally nonmonic = class_tally(H, TailClassId::from_tail({0, 0, 2}));
    CHECK_FALSE(nonmonic.class_id.edge_monic);
    CHECK(nonmonic.signed_sum == 0);
}

TEST_CASE("the unique negative contributor of the fixture id class is (2 3)") {
    IncidenceStructure H = fig7();
    std::vector<Permutation> negatives;
    enumerate_tail_class(H, TailClassId::from_tail(id_tail(3)),
                         [&](const Permutation& p, int s) {
                             if (s < 0) negatives.push_back(p);
                         });
    REQUIRE(negatives.size() == 1);
    CHECK(negatives.front() == cyc("(2 3)", 3));
}

TEST_CASE("laplacian determinant via contributors") {
    CHECK(contributor_det(fig7()) == 16);
    CHECK(contributor_det(parse_matrix("+\n")) == 1);
    CHECK(contributor_det(parse_matrix("1 1\n1 -1")) == 4);

    auto res = laplacian_det_via_contributors(fig7());
    const auto& r = std::get<ContributorDetResult>(res);
    CHECK(r.contributors_visited == 162);  // 3^3 * 3!
    CHECK(r.classes_visited == 27);
}

TEST_CASE("budget guard refuses without work") {
    auto res = laplacian_det_via_contributors(fig7(), 100);
    auto* b = std::get_if<BudgetExceeded>(&res);
    REQUIRE(b != nullptr);
    CHECK(b->required == 162);

    auto res2 = verify_nonmonic_zero(fig7(), 100);
    CHECK(std::get_if<BudgetExceeded>(&res2) != nullptr);
}

TEST_CASE("contributor det equals det(L) exhaustively at n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        unsigned total = 1u << (n * n);
        for (unsigned mask = 0; mask < total; ++mask) {
            IncidenceStructure H = testutil::from_mask(n, mask);
            mpz_class dh = exact_determinant(H);
            CHECK(mpz_class(contributor_det(H)) == dh * dh);
        }
    }
}

TEST_CASE("contributor det equals det(L) on random n = 4") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        IncidenceStructure H = testutil::random_full(4, rng);
        mpz_class dh = exact_determinant(H);
        CHECK(mpz_class(contributor_det(H)) == dh * dh);
    }
}

TEST_CASE("worker count does not change results") {
    std::mt19937 rng(5);
    IncidenceStructure H = testutil::random_full(4, rng);
    std::int64_t base = contributor_det(H, 1);
    CHECK(contributor_det(H, 3) == base);
    CHECK(contributor_det(H, 8) == base);

    AllClassesResult a1 = class_tallies_all(H, 1);
    AllClassesResult a8 = class_tallies_all(H, 8);
    REQUIRE(a1.tallies.size() == a8.tallies.size());
    for (size_t i = 0; i < a1.tallies.size(); ++i) {
        CHECK(a1.tallies[i].signed_sum == a8.tallies[i].signed_sum);
        CHECK(a1.tallies[i].class_id.tail == a8.tallies[i].class_id.tail);
    }
}

TEST_CASE("verify_nonmonic_zero fixtures") {
    auto rep3 = std::get<NonMonicReport>(verify_nonmonic_zero(fig7()));
    CHECK(rep3.classes_checked == 21);  // 3^3 - 3!
    CHECK(rep3.all_zero);
    CHECK(rep3.pairing_holds);
    CHECK(rep3.case1_pairs > 0);
    REQUIRE(rep3.witness.has_value());

    for (unsigned mask = 0; mask < 16; ++mask) {
        auto rep2 = std::get<NonMonicReport>(
            verify_nonmonic_zero(testutil::from_mask(2, mask)));
        CHECK(rep2.classes_checked == 2);
        CHECK(rep2.all_zero);
        CHECK(rep2.pairing_holds);
    }

    auto rep1 = std::get<NonMonicReport>(verify_nonmonic_zero(parse_matrix("+\n")));
    CHECK(rep1.classes_checked == 0);
    CHECK(rep1.all_zero);  // vacuous
}

TEST_CASE("single-class magnitude equals |det| for every identifier") {
    IncidenceStructure H = fig7();
    auto m_id = det_magnitude_single_class(H, Permutation::identity(3));
    CHECK(m_id.magnitude == 4);
    CHECK(m_id.identities_hold);
    CHECK(m_id.magnitude == 6 - 2 * m_id.tally.neg_count);
    CHECK(m_id.magnitude == 2 * m_id.tally.pos_count - 6);

    auto m_rot = det_magnitude_single_class(H, cyc("(1 2 3)", 3));
    CHECK(m_rot.magnitude == 4);
    CHECK(m_rot.identities_hold);

    for (int n = 2; n <= 4; ++n) {
        auto m = det_magnitude_single_class(testutil::all_plus(n),
                                            Permutation::identity(n));
        CHECK(m.magnitude == 0);
    }
}

TEST_CASE("class_tallies_all fixtures") {
    AllClassesResult all = class_tallies_all(fig7());
    REQUIRE(all.tallies.size() == 6);
    int plus4 = 0, minus4 = 0;
    for (const auto& t : all.tallies) {
        if (t.signed_sum == 4) ++plus4;
        if (t.signed_sum == -4) ++minus4;
    }
    CHECK(plus4 == 5);
    CHECK(minus4 == 1);
    CHECK(all.det_magnitude == 4);
    CHECK(all.laplacian_det == 16);
    CHECK(all.plus_classes - all.minus_classes == 4);
    CHECK(all.identities_hold);
    CHECK_FALSE(all.degenerate);

    AllClassesResult deg = class_tallies_all(testutil::all_plus(3));
    CHECK(deg.degenerate);
    for (const auto& t : deg.tallies) CHECK(t.signed_sum == 0);

    AllClassesResult two = class_tallies_all(parse_matrix("1 1\n1 -1"));
    REQUIRE(two.tallies.size() == 2);
    CHECK(two.plus_classes - two.minus_classes == 2);
    CHECK(two.det_magnitude == 2);
}

TEST_CASE("edge-monic magnitudes match the oracle on random hosts") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        IncidenceStructure H = testutil::random_full(4, rng);
        mpz_class want = abs(exact_determinant(H));
        AllClassesResult all = class_tallies_all(H, 2);
        for (const auto& t : all.tallies) {
            CHECK(mpz_class(static_cast<long>(std::llabs(t.signed_sum))) == want);
            CHECK(t.pos_count + t.neg_count == 24);
        }
    }
}

TEST_CASE("adjacency-inverse pair") {
    IncidenceStructure H = fig7();

    SUBCASE("composition rule at alpha = id, beta = (1 2 3)") {
        auto pair = adjacency_inverse_pair(H, Permutation::identity(3), cyc("(1 2 3)", 3));
        CHECK(pair.in_alpha.perm == cyc("(1 3 2)", 3));
        CHECK(pair.in_beta.perm == cyc("(1 2 3)", 3));
        CHECK(pair.same_adjacencies);
        CHECK(pair.equal_signs);
    }

    SUBCASE("alpha = beta degenerates to the all-backstep contributor") {
        auto pair = adjacency_inverse_pair(H, Permutation::identity(3),
                                           Permutation::identity(3));
        CHECK(pair.in_alpha == pair.in_beta);
        CHECK(pair.in_alpha.perm == Permutation::identity(3));
    }

    SUBCASE("equal signs for every ordered identifier pair") {
        std::vector<Permutation> perms;
        std::vector<int> img{0, 1, 2};
        do perms.emplace_back(img); while (std::next_permutation(img.begin(), img.end()));
        for (const auto& a : perms)
            for (const auto& b : perms) {
                auto pair = adjacency_inverse_pair(H, a, b);
                CHECK(pair.same_adjacencies);
                CHECK(pair.equal_signs);
            }
    }
}

TEST_CASE("reversed tail class forms a head-equivalence transversal") {
    IncidenceStructure H = fig7();
    auto result = head_class_from_tail_class(H, Permutation::identity(3));
    REQUIRE(result.contributors.size() == 6);
    CHECK(result.common_heads);
    CHECK(result.transversal);

    // sign multiset of the transversal equals the sign multiset of A_id
    std::multiset<int> reversed_signs, class_signs;
    for (const auto& c : result.contributors)
        reversed_signs.insert(contributor_sign(H, c).sign);
    enumerate_tail_class(H, TailClassId::from_tail(id_tail(3)),
                         [&](const Permutation&, int s) { class_signs.insert(s); });
    CHECK(reversed_signs == class_signs);

    auto single = head_class_from_tail_class(parse_matrix("+\n"), Permutation::identity(1));
    REQUIRE(single.contributors.size() == 1);
    CHECK(single.common_heads);
    CHECK(single.transversal);
}

TEST_CASE("contributor count audit") {
    // transposition contributors in a class: C(n,2)
    for (int n = 2; n <= 4; ++n) {
        IncidenceStructure H = testutil::all_plus(n);
        int digons = 0;
        enumerate_tail_class(H, TailClassId::from_tail(id_tail(n)),
                             [&](const Permutation& p, int) {
                                 auto cycles = p.cycles();
                                 int twos = 0, bigger = 0;
                                 for (const auto& c : cycles)
                                     if (c.size() == 2) ++twos;
                                     else if (c.size() > 2) ++bigger;
                                 if (twos == 1 && bigger == 0) ++digons;
                             });
        CHECK(digons == n * (n - 1) / 2);
    }
}
