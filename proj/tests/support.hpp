#pragma once

#include <permod/decide.hpp>
#include <permod/pmod.hpp>

#include <algorithm>
#include <initializer_list>
#include <set>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace permod::testing {

inline const RingSpec Q = RingSpec::rationals();
inline const RingSpec Z = RingSpec::integers();
inline RingSpec GF(std::uint64_t p) { return RingSpec::prime_field(p); }

inline Point pt(const char* text) { return parse_rational(text); }

inline Tuple tup(std::initializer_list<const char*> coords)
{
    Tuple t;
    for (auto c : coords)
        t.push_back(pt(c));
    return t;
}

// vec(Q, {{"1", {"0"}}, {"-1", {"1"}}}) is 1*(0) - 1*(1)
inline ModVector vec(RingSpec ring, std::initializer_list<std::pair<const char*, std::initializer_list<const char*>>> terms)
{
    std::size_t arity = terms.size() ? terms.begin()->second.size() : 1;
    ModVector v(ring, arity);
    for (const auto& [c, t] : terms)
        v.add_term(tup(t), Scalar(ring, parse_rational(c)));
    return v;
}

inline ModVector zero_vec(RingSpec ring, std::size_t arity = 1) { return ModVector(ring, arity); }

inline ScalarVector svec(RingSpec ring, std::initializer_list<long> values)
{
    ScalarVector v;
    for (long x : values)
        v.emplace_back(ring, x);
    return v;
}

inline ParamSet params(std::initializer_list<const char*> points)
{
    std::vector<Point> p;
    for (auto s : points)
        p.push_back(pt(s));
    return ParamSet(std::move(p));
}

inline Rational q(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Up to max_terms terms, coordinates drawn from {0, 1/2, ..., points/2 - 1/2},
// coefficients from [-3, 3].
inline ModVector random_vector(std::mt19937& rng, RingSpec ring, std::size_t arity, std::size_t max_terms,
                               long points = 8)
{
    ModVector v(ring, arity);
    const std::size_t terms = 1 + rng() % max_terms;
    for (std::size_t i = 0; i < terms; ++i) {
        Tuple t;
        for (std::size_t j = 0; j < arity; ++j)
            t.push_back(q(static_cast<long>(rng() % points), 2));
        v.add_term(std::move(t), Scalar(ring, static_cast<long>(rng() % 7) - 3));
    }
    return v;
}

// A random strictly increasing map on domain fixing every point of fixed.
inline PointMap random_monotone_map(std::mt19937& rng, const ParamSet& domain, const ParamSet& fixed = {})
{
    std::vector<Point> anchors = fixed.points();
    const Rational shift = q(static_cast<long>(rng() % 9) - 4);
    PointMap map;
    // points of the domain grouped by the gap of fixed they fall in
    std::vector<std::vector<Point>> gaps(anchors.size() + 1);
    for (const auto& p : domain.points()) {
        if (fixed.contains(p)) {
            map[p] = p;
            continue;
        }
        std::size_t g = std::upper_bound(anchors.begin(), anchors.end(), p) - anchors.begin();
        gaps[g].push_back(p);
    }
    for (std::size_t g = 0; g < gaps.size(); ++g) {
        if (gaps[g].empty())
            continue;
        std::set<Rational> fractions;
        while (fractions.size() < gaps[g].size())
            fractions.insert(q(1 + static_cast<long>(rng() % 63), 64));
        std::vector<Rational> f(fractions.begin(), fractions.end());
        for (std::size_t i = 0; i < gaps[g].size(); ++i) {
            Rational image;
            if (anchors.empty())
                image = shift + 8 * f[i];
            else if (g == 0)
                image = anchors.front() - 8 * (1 - f[i]);
            else if (g == anchors.size())
                image = anchors.back() + 8 * f[i];
            else
                image = anchors[g - 1] + (anchors[g] - anchors[g - 1]) * f[i];
            map[gaps[g][i]] = image;
        }
    }
    return map;
}

} // namespace permod::testing
