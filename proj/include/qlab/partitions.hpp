#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qlab/qseries.hpp"

namespace qlab {

/// Partition with no repeated odd parts (parts weakly decreasing).
struct Partition {
    std::vector<long long> parts;
};

/// Row of a 2-modular diagram: `twos` boxes filled with 2 and optionally a
/// trailing 1. The row sums to the corresponding part.
struct TwoModularRow {
    long long twos = 0;
    bool trailing_one = false;
};

struct TwoModularDiagram {
    std::vector<TwoModularRow> rows;
};

/// All partitions of n whose odd parts are distinct, largest-first
/// lexicographic order. n = 0 yields the single empty partition.
std::vector<Partition> enumerate_dop(long long n);

/// M2-rank: ceil(largest part / 2) - number of parts; 0 for the empty
/// partition.
long long m2_rank(const Partition& p);

/// Throws InvalidPartition if an odd part repeats or parts are not weakly
/// decreasing positive.
TwoModularDiagram to_2modular(const Partition& p);

/// Columns minus rows of the diagram; agrees with m2_rank.
long long rank_via_diagram(const TwoModularDiagram& d);

/// by_weight[n][m] = N2(m, n).
struct RankDistribution {
    std::vector<std::map<long long, long long>> by_weight;
};

/// Complete N2(m,n) tables for 0 <= n <= nmax (enumeration-backed; intended
/// for nmax <= ~45).
RankDistribution rank_distribution(long long nmax);

/// counts[n][s] = N2(s, ell, n).
struct ResidueTable {
    long long ell = 0;
    std::vector<std::vector<long long>> counts;
};

ResidueTable residue_counts(long long ell, long long nmax);
ResidueTable residue_counts(long long ell, const RankDistribution& dist);

/// sum_n (N2(s,ell,ell*n+d) - N2(t,ell,ell*n+d)) q^n over ell*n+d <= nmax.
QSeries brute_rank_diff(long long s, long long t, long long ell, long long d,
                        long long nmax);

/// Brute N2(m, n) as a q-series through nmax.
QSeries brute_rank_series(long long m, const RankDistribution& dist);

/// Brute N2(s, ell, n) as a q-series through nmax.
QSeries brute_class_series(long long s, long long ell, const RankDistribution& dist);

} // namespace qlab
