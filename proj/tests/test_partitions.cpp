#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qlab/partitions.hpp"
#include "qlab/products.hpp"

using namespace qlab;

namespace {

std::set<std::vector<long long>> as_set(const std::vector<Partition>& ps) {
    std::set<std::vector<long long>> s;
    for (const auto& p : ps)
        s.insert(p.parts);
    return s;
}

} // namespace

TEST_CASE("enumeration") {
    CHECK(as_set(enumerate_dop(4)) ==
          std::set<std::vector<long long>>{{4}, {3, 1}, {2, 2}});
    auto zero = enumerate_dop(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].parts.empty());
    CHECK(as_set(enumerate_dop(6)) ==
          std::set<std::vector<long long>>{{6}, {5, 1}, {4, 2}, {3, 2, 1}, {2, 2, 2}});
    // no repeated odd part anywhere up to weight 20
    for (long long n = 0; n <= 20; ++n)
        for (const auto& p : enumerate_dop(n)) {
            long long sum = 0, prev = 1u << 20;
            for (size_t i = 0; i < p.parts.size(); ++i) {
                sum += p.parts[i];
                CHECK(p.parts[i] <= prev);
                if (i > 0 && p.parts[i] % 2 != 0)
                    CHECK(p.parts[i] != p.parts[i - 1]);
                prev = p.parts[i];
            }
            CHECK(sum == n);
        }
}

TEST_CASE("m2_rank") {
    // the introduction's 2-modular example diagram: 5 columns, 9 rows
    CHECK(m2_rank(Partition{{10, 10, 8, 7, 7, 4, 2, 2, 1}}) == -4);
    CHECK(m2_rank(Partition{}) == 0);
    std::multiset<long long> ranks;
    for (const auto& p : enumerate_dop(6))
        ranks.insert(m2_rank(p));
    CHECK(ranks == std::multiset<long long>{-2, -1, 0, 1, 2});
}

TEST_CASE("2-modular diagrams") {
    TwoModularDiagram d = to_2modular(Partition{{3, 1}});
    REQUIRE(d.rows.size() == 2);
    CHECK(d.rows[0].twos == 1);
    CHECK(d.rows[0].trailing_one);
    CHECK(d.rows[1].twos == 0);
    CHECK(d.rows[1].trailing_one);
    CHECK(rank_via_diagram(d) == 0);

    TwoModularDiagram d2 = to_2modular(Partition{{2, 2}});
    CHECK(d2.rows[0].twos == 1);
    CHECK(!d2.rows[0].trailing_one);
    CHECK(rank_via_diagram(d2) == -1);

    CHECK_THROWS_AS(to_2modular(Partition{{1, 1}}), InvalidPartition);
    CHECK_THROWS_AS(to_2modular(Partition{{2, 3}}), InvalidPartition);

    // diagram route agrees with the ceiling formula through weight 30
    for (long long n = 0; n <= 30; ++n)
        for (const auto& p : enumerate_dop(n))
            CHECK(rank_via_diagram(to_2modular(p)) == m2_rank(p));
}

TEST_CASE("rank distribution tables") {
    RankDistribution dist = rank_distribution(35);

    CHECK(dist.by_weight[2].at(0) == 1);
    CHECK(dist.by_weight[4].at(-1) == 1);
    CHECK(dist.by_weight[4].at(0) == 1);
    CHECK(dist.by_weight[4].at(1) == 1);
    CHECK(dist.by_weight[4].size() == 3);

    // rank symmetry N2(m,n) = N2(-m,n) for n <= 35
    for (long long n = 0; n <= 35; ++n)
        for (const auto& [m, cnt] : dist.by_weight[static_cast<size_t>(n)]) {
            auto it = dist.by_weight[static_cast<size_t>(n)].find(-m);
            REQUIRE(it != dist.by_weight[static_cast<size_t>(n)].end());
            CHECK(it->second == cnt);
        }

    // totals match the distinct-odd-part partition generating function
    QSeries gf = mul(poch_inf(-1, 1, 2, 36), invert_unit(poch_inf(+1, 2, 2, 36)));
    for (long long n = 0; n <= 35; ++n) {
        long long total = 0;
        for (const auto& [m, cnt] : dist.by_weight[static_cast<size_t>(n)])
            total += cnt;
        CHECK(gf.coeff(n) == total);
    }

    // residue classes partition the ranks, and N2(s,l,n) = N2(l-s,l,n)
    for (long long ell : {3, 5}) {
        ResidueTable t = residue_counts(ell, dist);
        for (long long n = 0; n <= 35; ++n) {
            long long total = 0, all = 0;
            for (long long s = 0; s < ell; ++s)
                total += t.counts[static_cast<size_t>(n)][static_cast<size_t>(s)];
            for (const auto& [m, cnt] : dist.by_weight[static_cast<size_t>(n)])
                all += cnt;
            CHECK(total == all);
            for (long long s = 1; s < ell; ++s)
                CHECK(t.counts[static_cast<size_t>(n)][static_cast<size_t>(s)] ==
                      t.counts[static_cast<size_t>(n)][static_cast<size_t>(ell - s)]);
        }
    }
    // N2(1,5,6) = N2(2,5,6) = 1 (ranks of weight 6 are -2..2, one each)
    ResidueTable t5 = residue_counts(5, dist);
    CHECK(t5.counts[6][1] == 1);
    CHECK(t5.counts[6][2] == 1);
}

TEST_CASE("brute rank difference series") {
    QSeries r010 = brute_rank_diff(0, 1, 3, 0, 21);
    CHECK(r010.coeff(0) == 1);  // empty partition sits in class 0
    CHECK(r010.coeff(1) == -1); // weight 3: ranks 1 and -1 land in classes 1, 2

    CHECK(brute_rank_diff(1, 2, 5, 1, 36).is_zero());
    CHECK(brute_rank_diff(0, 2, 5, 3, 38).is_zero());
}
