#pragma once

// Test-only oracles. Nothing here calls into the code paths it checks.

#include <permod/ring.hpp>

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace permod::testing {

// All c in GF(p)^k with sum c_j gens_j == target (entries given as integers).
inline std::vector<std::vector<long>> gf_exhaustive_solutions(const std::vector<long>& target,
                                                              const std::vector<std::vector<long>>& gens, long p)
{
    std::vector<std::vector<long>> found;
    std::vector<long> c(gens.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == gens.size()) {
            for (std::size_t i = 0; i < target.size(); ++i) {
                long s = 0;
                for (std::size_t g = 0; g < gens.size(); ++g)
                    s += c[g] * gens[g][i];
                if (((s - target[i]) % p + p) % p != 0)
                    return;
            }
            found.push_back(c);
            return;
        }
        for (long v = 0; v < p; ++v) {
            c[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
    return found;
}

// Count of maps from m chain points into the 2k+1 slots (gap, param, gap, ...)
// that are non-decreasing and never send two points to one parameter slot,
// by scanning all (2k+1)^m functions.
inline std::size_t brute_placement_count(std::size_t m, std::size_t k)
{
    const std::size_t slots = 2 * k + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i)
        total *= slots;
    std::size_t count = 0;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::size_t> f(m);
        std::size_t c = code;
        for (std::size_t i = 0; i < m; ++i) {
            f[i] = c % slots;
            c /= slots;
        }
        bool ok = true;
        for (std::size_t i = 1; i < m && ok; ++i)
            ok = f[i - 1] <= f[i] && ! (f[i] == f[i - 1] && f[i] % 2 == 1);
        count += ok;
    }
    return count;
}

// Sign table of every ordered pair among the tuple coordinates followed by
// the parameters. Two tuples are in the same orbit of the pointwise
// stabiliser of the parameters iff their tables agree.
inline std::vector<int> order_table(const std::vector<Rational>& tuple, const std::vector<Rational>& params)
{
    std::vector<Rational> all = tuple;
    all.insert(all.end(), params.begin(), params.end());
    std::vector<int> table;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            table.push_back(cmp(all[i], all[j]) < 0 ? -1 : (cmp(all[i], all[j]) > 0 ? 1 : 0));
    return table;
}

// Number of weak orders on n letters, by collecting distinct order tables of
// all tuples in {1..n}^n.
inline std::size_t brute_weak_orders(std::size_t n)
{
    std::set<std::vector<int>> tables;
    std::vector<Rational> t(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            tables.insert(order_table(t, {}));
            return;
        }
        for (std::size_t v = 1; v <= n; ++v) {
            t[i] = static_cast<unsigned long>(v);
            rec(i + 1);
        }
    };
    rec(0);
    return tables.size();
}

} // namespace permod::testing
