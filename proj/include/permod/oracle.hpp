#pragma once

#include <permod/pmod.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace permod {

// Brute-force lower approximation of <generators>_RG: the group is replaced
// by the monotone maps into a finite grid of points. Sound for YES only.

using Grid = ParamSet;

// {1, ..., size}
Grid default_grid(std::size_t size);

struct GridImage {
    std::size_t generator;
    PointMap map;
    ModVector vector;
};

struct GridSpan {
    std::vector<GridImage> images; // distinct nonzero images
    std::vector<ModVector> basis;  // echelon basis of their span
};

// Throws InputError if some nonzero generator's support chain is longer than the grid.
GridSpan grid_span(const std::vector<ModVector>& generators, const Grid& grid);

struct ExplicitTerm {
    Scalar coeff;
    std::size_t generator;
    PointMap map;
};

// target == sum coeff * act(generators[generator], map)
struct ExplicitWitness {
    std::vector<ExplicitTerm> terms;
    std::size_t grid_size = 0;
};

// Re-evaluates a witness exactly; act() rejects non-monotone maps.
ModVector evaluate_witness(const ExplicitWitness& witness, const std::vector<ModVector>& generators,
                           RingSpec ring, std::size_t arity);

// Grid around the target's support: the support points plus size - |support|
// fresh points spread over the gaps (interior gaps first).
Grid grid_around(const ParamSet& support, std::size_t size);

// Grid sizes tried by oracle_membership: |support|+2, |support|+4, ... <= max_grid.
std::vector<std::size_t> grid_schedule(std::size_t support_size, std::size_t max_grid);

// An explicit witness found on the first grid whose span contains target, or
// nullopt (inconclusive, never a proof of non-membership).
std::optional<ExplicitWitness> oracle_membership(const ModVector& target, const std::vector<ModVector>& generators,
                                                 std::size_t max_grid);

struct InstanceProfile {
    std::size_t arity = 1;
    std::size_t max_support = 4;
    std::vector<long> coefficient_pool = {-2, -1, 1, 2};
    RingSpec ring = RingSpec::rationals();
    std::size_t max_generators = 2;
};

struct Instance {
    std::uint64_t seed = 0;
    InstanceProfile profile;
    ModVector target{RingSpec::rationals(), 1};
    std::vector<ModVector> generators;
    bool planted = false;
};

// Deterministic in (seed, profile). Half the seeds plant the target as a
// combination of acted generators; the rest perturb one coefficient.
Instance random_instance(std::uint64_t seed, const InstanceProfile& profile);

} // namespace permod
