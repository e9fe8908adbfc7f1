#include "qlab/partitions.hpp"

#include <algorithm>
#include <functional>

namespace qlab {

namespace {

// Walk all distinct-odd-part partitions of n in largest-first order. Since
// parts are weakly decreasing, the distinct-odd condition is exactly "no part
// equals the previous one when odd".
void walk(long long remaining, long long last, long long largest, long long nparts,
          std::vector<long long>* stack,
          const std::function<void(long long largest, long long nparts,
                                   const std::vector<long long>*)>& visit) {
    if (remaining == 0) {
        visit(largest, nparts, stack);
        return;
    }
    long long cap = std::min(remaining, last);
    for (long long p = cap; p >= 1; --p) {
        if (p == last && (p % 2 != 0) && nparts > 0)
            continue;
        if (stack)
            stack->push_back(p);
        walk(remaining - p, p, nparts == 0 ? p : largest, nparts + 1, stack, visit);
        if (stack)
            stack->pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_dop(long long n) {
    if (n < 0)
        throw SeriesError("enumerate_dop: n must be >= 0");
    std::vector<Partition> out;
    std::vector<long long> stack;
    walk(n, n, 0, 0, &stack,
         [&](long long, long long, const std::vector<long long>* s) {
             out.push_back(Partition{*s});
         });
    return out;
}

long long m2_rank(const Partition& p) {
    if (p.parts.empty())
        return 0;
    long long largest = p.parts.front();
    return (largest + 1) / 2 - static_cast<long long>(p.parts.size());
}

TwoModularDiagram to_2modular(const Partition& p) {
    TwoModularDiagram d;
    long long prev = -1;
    for (long long part : p.parts) {
        if (part <= 0)
            throw InvalidPartition("to_2modular: parts must be positive");
        if (prev >= 0 && part > prev)
            throw InvalidPartition("to_2modular: parts must be weakly decreasing");
        if (prev == part && part % 2 != 0)
            throw InvalidPartition("to_2modular: repeated odd part " +
                                   std::to_string(part));
        d.rows.push_back(TwoModularRow{part / 2, part % 2 != 0});
        prev = part;
    }
    return d;
}

long long rank_via_diagram(const TwoModularDiagram& d) {
    long long columns = 0;
    for (const auto& row : d.rows)
        columns = std::max(columns, row.twos + (row.trailing_one ? 1 : 0));
    return columns - static_cast<long long>(d.rows.size());
}

RankDistribution rank_distribution(long long nmax) {
    RankDistribution dist;
    dist.by_weight.resize(static_cast<size_t>(nmax + 1));
    for (long long n = 0; n <= nmax; ++n) {
        auto& row = dist.by_weight[static_cast<size_t>(n)];
        walk(n, n, 0, 0, nullptr,
             [&](long long largest, long long nparts, const std::vector<long long>*) {
                 row[(largest + 1) / 2 - nparts] += 1;
             });
    }
    return dist;
}

ResidueTable residue_counts(long long ell, const RankDistribution& dist) {
    ResidueTable t;
    t.ell = ell;
    t.counts.resize(dist.by_weight.size(), std::vector<long long>(static_cast<size_t>(ell)));
    for (size_t n = 0; n < dist.by_weight.size(); ++n)
        for (const auto& [m, cnt] : dist.by_weight[n]) {
            long long s = ((m % ell) + ell) % ell;
            t.counts[n][static_cast<size_t>(s)] += cnt;
        }
    return t;
}

ResidueTable residue_counts(long long ell, long long nmax) {
    return residue_counts(ell, rank_distribution(nmax));
}

QSeries brute_rank_diff(long long s, long long t, long long ell, long long d,
                        long long nmax) {
    ResidueTable table = residue_counts(ell, nmax);
    long long prec = (nmax - d) / ell + 1;
    std::vector<Coefficient> c(static_cast<size_t>(prec));
    for (long long n = 0; n < prec; ++n) {
        long long w = ell * n + d;
        c[static_cast<size_t>(n)] = table.counts[static_cast<size_t>(w)][static_cast<size_t>(s)] -
                                    table.counts[static_cast<size_t>(w)][static_cast<size_t>(t)];
    }
    return QSeries(0, prec, std::move(c));
}

QSeries brute_rank_series(long long m, const RankDistribution& dist) {
    long long prec = static_cast<long long>(dist.by_weight.size());
    std::vector<Coefficient> c(static_cast<size_t>(prec));
    for (long long n = 0; n < prec; ++n) {
        const auto& row = dist.by_weight[static_cast<size_t>(n)];
        auto it = row.find(m);
        if (it != row.end())
            c[static_cast<size_t>(n)] = it->second;
    }
    return QSeries(0, prec, std::move(c));
}

QSeries brute_class_series(long long s, long long ell, const RankDistribution& dist) {
    long long prec = static_cast<long long>(dist.by_weight.size());
    std::vector<Coefficient> c(static_cast<size_t>(prec));
    for (long long n = 0; n < prec; ++n)
        for (const auto& [m, cnt] : dist.by_weight[static_cast<size_t>(n)])
            if (((m % ell) + ell) % ell == s)
                c[static_cast<size_t>(n)] += cnt;
    return QSeries(0, prec, std::move(c));
}

} // namespace qlab
