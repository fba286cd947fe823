#include <permod/oracle.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace permod {

Grid default_grid(std::size_t size)
{
    std::vector<Point> points;
    for (std::size_t i = 1; i <= size; ++i)
        points.emplace_back(static_cast<unsigned long>(i));
    return Grid(std::move(points));
}

namespace {

// Every strictly increasing map from chain into grid.
void for_each_injection(const std::vector<Point>& chain, const Grid& grid, const std::function<void(const PointMap&)>& visit)
{
    const auto& g = grid.points();
    std::vector<std::size_t> pick(chain.size());
    std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t i, std::size_t from) {
        if (i == chain.size()) {
            PointMap m;
            for (std::size_t j = 0; j < chain.size(); ++j)
                m.emplace(chain[j], g[pick[j]]);
            visit(m);
            return;
        }
        for (std::size_t p = from; p + (chain.size() - i) <= g.size(); ++p) {
            pick[i] = p;
            recurse(i + 1, p + 1);
        }
    };
    recurse(0, 0);
}

// Images of every generator that fits into the grid, deduplicated.
std::vector<GridImage> grid_images(const std::vector<ModVector>& generators, const Grid& grid, bool skip_too_large)
{
    std::vector<GridImage> images;
    for (std::size_t j = 0; j < generators.size(); ++j) {
        if (generators[j].is_zero())
            continue;
        const auto chain = support_points(generators[j]).points();
        if (chain.size() > grid.size()) {
            if (skip_too_large)
                continue;
            throw InputError("grid of " + std::to_string(grid.size()) + " points cannot embed generator " +
                             std::to_string(j) + " (support of " + std::to_string(chain.size()) + " points)");
        }
        for_each_injection(chain, grid, [&](const PointMap& m) {
            auto v = act(generators[j], m);
            bool duplicate = std::any_of(images.begin(), images.end(), [&](const GridImage& g) { return g.vector == v; });
            if (! duplicate)
                images.push_back({j, m, std::move(v)});
        });
    }
    return images;
}

// Coordinates: every tuple occurring in the given vectors, lexicographic.
class TupleIndex {
public:
    void add(const ModVector& v)
    {
        for (const auto& [t, _] : v.terms())
            index_.emplace(t, 0);
    }
    void freeze()
    {
        std::size_t i = 0;
        for (auto& [t, idx] : index_) {
            idx = i++;
            order_.push_back(t);
        }
    }
    std::size_t size() const { return order_.size(); }
    const Tuple& tuple(std::size_t i) const { return order_[i]; }

    ScalarVector dense(const ModVector& v) const
    {
        ScalarVector out = zero_vector(v.ring(), order_.size());
        for (const auto& [t, c] : v.terms())
            out[index_.at(t)] = c;
        return out;
    }

private:
    std::map<Tuple, std::size_t> index_;
    std::vector<Tuple> order_;
};

} // namespace

GridSpan grid_span(const std::vector<ModVector>& generators, const Grid& grid)
{
    GridSpan out;
    out.images = grid_images(generators, grid, false);
    if (out.images.empty())
        return out;

    TupleIndex index;
    for (const auto& img : out.images)
        index.add(img.vector);
    index.freeze();
    const RingSpec ring = out.images.front().vector.ring();
    const std::size_t arity = out.images.front().vector.arity();

    std::vector<ScalarVector> rows;
    for (const auto& img : out.images)
        rows.push_back(index.dense(img.vector));
    for (const auto& row : span_basis(rows, index.size(), ring)) {
        ModVector v(ring, arity);
        for (std::size_t i = 0; i < row.size(); ++i)
            v.add_term(index.tuple(i), row[i]);
        out.basis.push_back(std::move(v));
    }
    return out;
}

ModVector evaluate_witness(const ExplicitWitness& witness, const std::vector<ModVector>& generators, RingSpec ring,
                           std::size_t arity)
{
    ModVector sum(ring, arity);
    for (const auto& term : witness.terms) {
        if (term.generator >= generators.size())
            throw InputError("witness refers to generator " + std::to_string(term.generator) + " of " +
                             std::to_string(generators.size()));
        sum += act(generators[term.generator], term.map).scaled(term.coeff);
    }
    return sum;
}

Grid grid_around(const ParamSet& support, std::size_t size)
{
    const auto& s = support.points();
    const std::size_t m = s.size();
    if (size < m)
        throw InputError("grid of " + std::to_string(size) + " points cannot contain a support of " + std::to_string(m));
    if (m == 0)
        return default_grid(size);

    // gap g lies before s[g]; gap m is above the largest point
    std::vector<std::size_t> order;
    for (std::size_t g = 1; g < m; ++g)
        order.push_back(g);
    order.push_back(0);
    order.push_back(m);

    std::vector<std::size_t> extra(m + 1, 0);
    for (std::size_t i = 0; i < size - m; ++i)
        ++extra[order[i % order.size()]];

    std::vector<Point> points(s.begin(), s.end());
    for (std::size_t t = 0; t < extra[0]; ++t)
        points.push_back(s.front() - Rational(static_cast<unsigned long>(t + 1)));
    for (std::size_t t = 0; t < extra[m]; ++t)
        points.push_back(s.back() + Rational(static_cast<unsigned long>(t + 1)));
    for (std::size_t g = 1; g < m; ++g)
        for (auto& p : dyadic_points(s[g - 1], s[g], extra[g]))
            points.push_back(p);
    return Grid::from_unsorted(std::move(points));
}

std::vector<std::size_t> grid_schedule(std::size_t support_size, std::size_t max_grid)
{
    std::vector<std::size_t> sizes;
    for (std::size_t n = support_size + 2; n <= max_grid; n += 2)
        sizes.push_back(n);
    if (sizes.empty() && support_size <= max_grid && max_grid > 0)
        sizes.push_back(max_grid);
    return sizes;
}

std::optional<ExplicitWitness> oracle_membership(const ModVector& target, const std::vector<ModVector>& generators,
                                                 std::size_t max_grid)
{
    for (const auto& g : generators)
        if (! (g.ring() == target.ring()) || g.arity() != target.arity())
            throw InputError("oracle: generators and target must share ring and arity");

    const auto support = support_points(target);
    if (target.is_zero())
        return ExplicitWitness{{}, 0};

    for (std::size_t size : grid_schedule(support.size(), max_grid)) {
        const Grid grid = grid_around(support, size);
        auto images = grid_images(generators, grid, true);
        if (images.empty())
            continue;

        TupleIndex index;
        index.add(target);
        for (const auto& img : images)
            index.add(img.vector);
        index.freeze();

        std::vector<ScalarVector> rows;
        for (const auto& img : images)
            rows.push_back(index.dense(img.vector));
        auto coefficients = span_membership(index.dense(target), rows, target.ring());
        if (! coefficients)
            continue;

        ExplicitWitness witness;
        witness.grid_size = size;
        for (std::size_t j = 0; j < images.size(); ++j)
            if (! (*coefficients)[j].is_zero())
                witness.terms.push_back({(*coefficients)[j], images[j].generator, images[j].map});
        return witness;
    }
    return std::nullopt;
}

namespace {

// Portable draws: mt19937_64's output sequence is fixed by the standard,
// the distribution classes are not.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 rng_;
};

std::vector<long> usable_pool(const InstanceProfile& profile)
{
    std::vector<long> pool;
    for (long c : profile.coefficient_pool)
        if (! Scalar(profile.ring, c).is_zero())
            pool.push_back(c);
    if (pool.empty())
        pool.push_back(1);
    return pool;
}

// count distinct sorted integers from [lo, lo + span)
std::vector<Point> distinct_points(Draw& draw, std::size_t count, long lo, std::size_t span)
{
    std::vector<long> all;
    for (std::size_t i = 0; i < span; ++i)
        all.push_back(lo + static_cast<long>(i));
    for (std::size_t i = 0; i < count; ++i)
        std::swap(all[i], all[i + draw.below(span - i)]);
    all.resize(count);
    std::sort(all.begin(), all.end());
    std::vector<Point> out;
    for (long v : all)
        out.emplace_back(v);
    return out;
}

ModVector random_vector(Draw& draw, const InstanceProfile& profile, const std::vector<long>& pool)
{
    while (true) {
        const std::size_t points = draw.between(1, std::max<std::size_t>(1, profile.max_support));
        const auto support = distinct_points(draw, points, 0, 2 * profile.max_support);
        ModVector v(profile.ring, profile.arity);
        const std::size_t terms = draw.between(1, 3);
        for (std::size_t t = 0; t < terms; ++t) {
            Tuple tuple;
            for (std::size_t i = 0; i < profile.arity; ++i)
                tuple.push_back(support[draw.below(support.size())]);
            v.add_term(std::move(tuple), Scalar(profile.ring, pool[draw.below(pool.size())]));
        }
        if (! v.is_zero())
            return v;
    }
}

} // namespace

Instance random_instance(std::uint64_t seed, const InstanceProfile& profile)
{
    if (profile.arity == 0 || profile.max_support == 0 || profile.max_generators == 0)
        throw InputError("instance profile needs positive arity, support and generator bounds");
    Draw draw(seed);
    const auto pool = usable_pool(profile);

    Instance inst;
    inst.seed = seed;
    inst.profile = profile;
    const std::size_t count = draw.between(1, profile.max_generators);
    for (std::size_t j = 0; j < count; ++j)
        inst.generators.push_back(random_vector(draw, profile, pool));

    // combination of one or two acted generators, images inside [0, 6)
    ModVector target(profile.ring, profile.arity);
    const std::size_t summands = draw.between(1, 2);
    for (std::size_t s = 0; s < summands; ++s) {
        const auto& g = inst.generators[draw.below(count)];
        const auto chain = support_points(g).points();
        const std::size_t span = std::max<std::size_t>(6, chain.size());
        const auto images = distinct_points(draw, chain.size(), 0, span);
        PointMap m;
        for (std::size_t i = 0; i < chain.size(); ++i)
            m.emplace(chain[i], images[i]);
        target += act(g, m).scaled(Scalar(profile.ring, pool[draw.below(pool.size())]));
    }

    inst.planted = draw.coin();
    if (! inst.planted) {
        Tuple tuple;
        if (! target.is_zero() && draw.coin()) {
            auto it = target.terms().begin();
            std::advance(it, draw.below(target.terms().size()));
            tuple = it->first;
        }
        else
            for (std::size_t i = 0; i < profile.arity; ++i)
                tuple.emplace_back(static_cast<long>(draw.below(6)));
        target.add_term(std::move(tuple), Scalar(profile.ring, pool[draw.below(pool.size())]));
    }
    inst.target = std::move(target);
    return inst;
}

} // namespace permod
