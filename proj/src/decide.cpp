#include <permod/decide.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace permod {

namespace {

void check_compatible(const ModVector& target, const std::vector<ModVector>& generators)
{
    for (std::size_t j = 0; j < generators.size(); ++j) {
        if (! (generators[j].ring() == target.ring()))
            throw InputError("generator " + std::to_string(j) + " is over " + generators[j].ring().to_string() +
                             ", target over " + target.ring().to_string());
        if (generators[j].arity() != target.arity())
            throw InputError("generator " + std::to_string(j) + " has arity " + std::to_string(generators[j].arity()) +
                             ", target " + std::to_string(target.arity()));
    }
}

// Dense coordinates over a fixed ordered key set.
class KeyIndex {
public:
    void add(const AugVector& v)
    {
        for (const auto& [k, _] : v.entries())
            keys_.insert(k);
    }
    void add(const PatternKey& k) { keys_.insert(k); }

    void freeze() { order_.assign(keys_.begin(), keys_.end()); }
    std::size_t size() const { return order_.size(); }
    const PatternKey& key(std::size_t i) const { return order_[i]; }
    std::size_t index(const PatternKey& k) const
    {
        return std::lower_bound(order_.begin(), order_.end(), k) - order_.begin();
    }

    ScalarVector dense(const AugVector& v) const
    {
        ScalarVector out = zero_vector(v.ring(), order_.size());
        for (const auto& [k, value] : v.entries())
            out[index(k)] = value;
        return out;
    }

private:
    std::set<PatternKey> keys_;
    std::vector<PatternKey> order_;
};

bool contains(const std::vector<ModVector>& reps, const ModVector& v)
{
    return std::find(reps.begin(), reps.end(), v) != reps.end();
}

} // namespace

Rational CharacterCertificate::evaluate(const AugVector& v) const
{
    Rational sum = 0;
    for (const auto& [k, value] : v.entries()) {
        auto it = character.find(k);
        if (it != character.end())
            sum += it->second * value.value();
    }
    return frac_part(sum);
}

Integer CharacterCertificate::denominator() const
{
    Integer l = 1;
    for (const auto& [_, c] : character)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

std::vector<ModVector> representatives(const std::vector<ModVector>& generators, const ParamSet& params)
{
    std::vector<ModVector> reps;
    for (const auto& g : generators) {
        if (g.is_zero())
            continue;
        for (auto& r : orbit_reps_over(g, params))
            if (! contains(reps, r))
                reps.push_back(std::move(r));
    }
    return reps;
}

Decision membership(const ModVector& target, const std::vector<ModVector>& generators, const MembershipOptions& options)
{
    check_compatible(target, generators);
    const RingSpec ring = target.ring();
    const ParamSet support = support_points(target);
    ParamSet params = support;
    if (options.params) {
        if (! options.params->includes(support))
            throw InputError("parameter set override must contain the support points of the target");
        params = *options.params;
    }

    const auto reps = representatives(generators, params);
    const AugVector target_image = omega(target, params);
    std::vector<AugVector> rep_images;
    KeyIndex index;
    index.add(target_image);
    for (const auto& r : reps) {
        rep_images.push_back(omega(r, params));
        index.add(rep_images.back());
    }
    index.freeze();

    std::vector<ScalarVector> columns;
    for (const auto& img : rep_images)
        columns.push_back(index.dense(img));
    const ScalarVector t = index.dense(target_image);

    Decision d;
    d.params = params;
    d.rep_count = reps.size();
    d.ring = ring;

    if (auto coefficients = span_membership(t, columns, ring)) {
        d.member = true;
        SpanCertificate cert;
        for (std::size_t j = 0; j < reps.size(); ++j)
            if (! (*coefficients)[j].is_zero())
                cert.terms.push_back({(*coefficients)[j], reps[j]});
        if (options.witness_budget > 0)
            cert.explicit_witness = oracle_membership(target, generators, options.witness_budget);
        d.certificate = std::move(cert);
        return d;
    }

    d.member = false;
    if (ring.is_field()) {
        auto phi = dual_functional(t, columns, ring);
        AugVector functional(ring);
        for (std::size_t i = 0; i < phi.size(); ++i)
            functional.add(index.key(i), phi[i]);
        d.certificate = FunctionalCertificate{std::move(functional)};
    }
    else {
        auto chi = dual_character(t, columns);
        CharacterCertificate cert;
        for (std::size_t i = 0; i < chi.coefficients().size(); ++i)
            if (sgn(chi.coefficients()[i]) != 0)
                cert.character.emplace(index.key(i), chi.coefficients()[i]);
        d.certificate = std::move(cert);
    }
    return d;
}

bool verify_certificate(const Decision& decision, const ModVector& target, const std::vector<ModVector>& raw_generators)
{
    if (! (decision.ring == target.ring()))
        return false;
    if (! decision.params.includes(support_points(target)))
        return false;
    const auto generators = expand_reduct(raw_generators, decision.structure);
    for (const auto& g : generators)
        if (! (g.ring() == target.ring()) || g.arity() != target.arity())
            return false;

    const auto reps = representatives(generators, decision.params);
    if (reps.size() != decision.rep_count)
        return false;
    const AugVector target_image = omega(target, decision.params);

    if (decision.member) {
        const auto* cert = std::get_if<SpanCertificate>(&decision.certificate);
        if (! cert)
            return false;
        AugVector sum(target.ring());
        for (const auto& term : cert->terms) {
            if (! (term.coeff.ring() == target.ring()) || ! contains(reps, term.rep))
                return false;
            sum += omega(term.rep, decision.params).scaled(term.coeff);
        }
        if (! (sum == target_image))
            return false;
        if (cert->explicit_witness) {
            try {
                if (! (evaluate_witness(*cert->explicit_witness, generators, target.ring(), target.arity()) == target))
                    return false;
            }
            catch (const InputError&) {
                return false;
            }
        }
        return true;
    }

    if (const auto* cert = std::get_if<FunctionalCertificate>(&decision.certificate)) {
        if (! target.ring().is_field() || ! (cert->functional.ring() == target.ring()))
            return false;
        for (const auto& r : reps)
            if (! cert->functional.dot(omega(r, decision.params)).is_zero())
                return false;
        return ! cert->functional.dot(target_image).is_zero();
    }
    if (const auto* cert = std::get_if<CharacterCertificate>(&decision.certificate)) {
        if (target.ring().kind() != RingKind::integers)
            return false;
        for (const auto& r : reps)
            if (sgn(cert->evaluate(omega(r, decision.params))) != 0)
                return false;
        return sgn(cert->evaluate(target_image)) != 0;
    }
    return false;
}

GeneratesAllReport generates_all(const std::vector<ModVector>& generators, RingSpec ring, std::size_t arity)
{
    GeneratesAllReport report;
    report.all = true;
    for (const auto& w : dense_linear_order().canonical_orbit_reps(arity)) {
        ModVector basis_vector(ring, arity);
        basis_vector.add_term(w, Scalar::one(ring));
        auto d = membership(basis_vector, generators);
        report.all = report.all && d.member;
        report.per_rep.emplace_back(w, std::move(d));
    }
    return report;
}

namespace {

// Subsets of {0..n-1} with 1..k elements in colexicographic order; visit
// returns true to stop.
bool for_each_colex_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> current;
    // all subsets (including empty) of {0..top-1} with at most budget elements, colex
    std::function<bool(std::size_t, std::size_t, const std::function<bool()>&)> below =
        [&](std::size_t top, std::size_t budget, const std::function<bool()>& emit) -> bool {
        if (emit())
            return true;
        if (budget == 0)
            return false;
        for (std::size_t m = 0; m < top; ++m) {
            // subsets whose largest element is m
            current.push_back(m);
            bool stop = below(m, budget - 1, emit);
            current.pop_back();
            if (stop)
                return true;
        }
        return false;
    };
    // Elements are pushed largest first; present them sorted.
    auto emit = [&]() -> bool {
        if (current.empty())
            return false;
        std::vector<std::size_t> sorted(current.rbegin(), current.rend());
        return visit(sorted);
    };
    return below(n, k, emit);
}

} // namespace

std::optional<ModVector> min_support(const std::vector<ModVector>& generators, std::size_t k, RingSpec ring,
                                     std::size_t arity)
{
    if (k == 0)
        throw InputError("support bound k must be at least 1");
    ModVector probe(ring, arity);
    check_compatible(probe, generators);

    std::vector<Point> grid;
    for (std::size_t i = 1; i <= k * arity; ++i)
        grid.emplace_back(static_cast<unsigned long>(i));
    const ParamSet params(grid);

    // tuples with all coordinates in the grid, lexicographic
    std::vector<Tuple> singletons;
    {
        Tuple t(arity);
        std::function<void(std::size_t)> fill = [&](std::size_t i) {
            if (i == arity) {
                singletons.push_back(t);
                return;
            }
            for (const auto& p : grid) {
                t[i] = p;
                fill(i + 1);
            }
        };
        fill(0);
    }

    const auto reps = representatives(generators, params);
    KeyIndex index;
    std::vector<AugVector> images;
    for (const auto& r : reps) {
        images.push_back(omega(r, params));
        index.add(images.back());
    }
    std::vector<PatternKey> singleton_keys;
    for (const auto& t : singletons) {
        singleton_keys.push_back(dense_linear_order().pattern_of_tuple(t, params));
        index.add(singleton_keys.back());
    }
    index.freeze();

    std::vector<ScalarVector> rows;
    for (const auto& img : images)
        rows.push_back(index.dense(img));

    std::optional<ModVector> found;
    for_each_colex_subset(singletons.size(), k, [&](const std::vector<std::size_t>& subset) {
        std::vector<std::size_t> coords;
        for (auto s : subset)
            coords.push_back(index.index(singleton_keys[s]));
        auto hit = span_intersect_coords(rows, coords, index.size(), ring);
        if (! hit)
            return false;
        ModVector lifted(ring, arity);
        for (auto s : subset)
            lifted.add_term(singletons[s], (*hit)[index.index(singleton_keys[s])]);
        found = std::move(lifted);
        return true;
    });
    return found;
}

std::vector<ModVector> expand_reduct(const std::vector<ModVector>& generators, ReductSpec reduct)
{
    if (reduct == ReductSpec::none)
        return generators;
    std::vector<ModVector> out;
    for (const auto& g : generators)
        for (const auto& m : dense_linear_order().reduct_expansions(support_points(g).points(), reduct))
            out.push_back(relabel(g, m));
    return out;
}

Decision reduct_membership(const ModVector& target, const std::vector<ModVector>& generators, ReductSpec reduct,
                           const MembershipOptions& options)
{
    auto d = membership(target, expand_reduct(generators, reduct), options);
    d.structure = reduct;
    return d;
}

CyclicReport cyclic_generator(const std::vector<ModVector>& generators)
{
    if (generators.empty())
        throw InputError("cyclic_generator needs at least one generator");
    const RingSpec ring = generators.front().ring();
    check_compatible(generators.front(), generators);
    if (! ring.is_field())
        throw InputError("cyclic_generator requires a field, got " + ring.to_string());
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (! is_aug_zero(generators[i]))
            throw InputError("generator " + std::to_string(i) + " is not in the augmentation kernel");

    CyclicReport report{ModVector(ring, generators.front().arity()), {}, {}, {}};
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto chain = support_points(generators[i]).points();
        const Point lo(static_cast<unsigned long>(2 * (i + 1)));
        const auto images = dyadic_points(lo, lo + 1, chain.size());
        PointMap m;
        for (std::size_t j = 0; j < chain.size(); ++j)
            m.emplace(chain[j], images[j]);
        report.placed.push_back(act(generators[i], m));
        report.generator += report.placed.back();
    }

    const std::vector<ModVector> single{report.generator};
    for (std::size_t i = 0; i < generators.size(); ++i) {
        auto d = membership(generators[i], single);
        if (! d.member)
            throw CyclicVerificationError("generator " + std::to_string(i) + " is not in the cyclic submodule", d);
        report.generators_in_cyclic.push_back(std::move(d));
    }
    report.cyclic_in_generators = membership(report.generator, generators);
    if (! report.cyclic_in_generators.member)
        throw CyclicVerificationError("the cyclic generator is not in the generated submodule",
                                      report.cyclic_in_generators);
    return report;
}

std::vector<ChainStep> chain(const std::vector<std::vector<ModVector>>& sets, RingSpec ring, std::size_t arity)
{
    ModVector probe(ring, arity);
    for (const auto& s : sets)
        check_compatible(probe, s);

    std::vector<ChainStep> steps;
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
        ChainStep step;
        step.contained = true;
        for (const auto& a : sets[i]) {
            auto d = membership(a, sets[i + 1]);
            if (! d.member) {
                step.contained = false;
                step.obstruction = std::move(d);
                break;
            }
        }
        for (std::size_t j = 0; j < sets[i + 1].size(); ++j) {
            auto d = membership(sets[i + 1][j], sets[i]);
            if (! d.member) {
                step.witness_index = j;
                step.witness = std::move(d);
                break;
            }
        }
        step.proper = step.contained && step.witness.has_value();
        steps.push_back(std::move(step));
    }
    return steps;
}

} // namespace permod
