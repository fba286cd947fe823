#pragma once

#include <permod/ring.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace permod {

using Point = Rational;
using Tuple = std::vector<Point>;
// A partial map on points; keys are the domain.
using PointMap = std::map<Point, Point>;

// A finite parameter set: strictly increasing points.
class ParamSet {
public:
    ParamSet() = default;
    // Throws InputError unless points are strictly increasing.
    explicit ParamSet(std::vector<Point> points);
    // Sorts and rejects duplicates.
    static ParamSet from_unsorted(std::vector<Point> points);

    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(const Point& p) const;
    bool includes(const ParamSet& other) const;

    friend bool operator==(const ParamSet&, const ParamSet&) = default;

private:
    std::vector<Point> points_;
};

// Canonical label of the quantifier-free type of an n-tuple over a parameter
// set, i.e. of a G_(S)-orbit on n-tuples.
//
// The string is the merged weak order of parameters p0..p{k-1} and
// coordinates c0..c{n-1}: classes joined by '<', members of a class joined by
// '=', parameters before coordinates and each group by index. Example: the
// tuple (1, 1/2) over {0, 2} is "p0<c1<c0<p1".
//
// Keys compare by slot (which parameter a coordinate equals, or which gap it
// lies in), then by the full merged order; equality is string equality.
class PatternKey {
public:
    PatternKey() = default;
    static PatternKey parse(std::string_view text);

    const std::string& str() const { return text_; }
    std::size_t arity() const { return arity_; }
    std::size_t param_count() const { return params_; }
    // Slot per coordinate: 2i for gap i, 2i+1 for parameter i.
    std::span<const int> slots() const { return std::span<const int>(code_).first(arity_); }
    // True when every coordinate equals a parameter (a singleton orbit).
    bool is_singleton() const;

    friend bool operator==(const PatternKey& a, const PatternKey& b) { return a.text_ == b.text_; }
    friend std::strong_ordering operator<=>(const PatternKey& a, const PatternKey& b);

private:
    friend class DenseLinearOrder;
    // classes[k] lists the members of the k-th smallest class; a member is
    // either a parameter (-1 - i) or coordinate j (j >= 0).
    static PatternKey from_classes(const std::vector<std::vector<int>>& classes, std::size_t arity, std::size_t params);

    std::string text_;
    std::size_t arity_ = 0;
    std::size_t params_ = 0;
    std::vector<int> code_;
};

// A G_(S)-orbit representative of the images of a finite chain: the slot of
// each source point and concrete rationals realizing it.
struct Placement {
    std::vector<Point> source;
    std::vector<int> slots;     // 2i gap i, 2i+1 parameter i; non-decreasing
    std::vector<Point> images;  // strictly increasing, matching the slots

    PointMap as_map() const;
};

enum class ReductSpec { none, pure_set };
std::string to_string(ReductSpec r);
ReductSpec parse_reduct(std::string_view text);

// Finitary interface of a homogeneous structure backend.
class StructureOracle {
public:
    virtual ~StructureOracle() = default;

    virtual PatternKey pattern_of_tuple(std::span<const Point> tuple, const ParamSet& params) const = 0;
    // Complete, duplicate-free list of orbit representatives of the chain's
    // images over params, in lexicographic order of slot assignments.
    virtual std::vector<Placement> enumerate_placements(std::span<const Point> chain, const ParamSet& params) const = 0;
    // One n-tuple per G-orbit on n-tuples.
    virtual std::vector<Tuple> canonical_orbit_reps(std::size_t arity) const = 0;
    // Re-orderings of a chain: maps from the chain onto itself, one per
    // G-orbit inside the reduct group's orbit. reduct == none gives the identity only.
    virtual std::vector<PointMap> reduct_expansions(std::span<const Point> chain, ReductSpec reduct) const = 0;
};

// (Q, <).
class DenseLinearOrder final : public StructureOracle {
public:
    PatternKey pattern_of_tuple(std::span<const Point> tuple, const ParamSet& params) const override;
    std::vector<Placement> enumerate_placements(std::span<const Point> chain, const ParamSet& params) const override;
    std::vector<Tuple> canonical_orbit_reps(std::size_t arity) const override;
    std::vector<PointMap> reduct_expansions(std::span<const Point> chain, ReductSpec reduct) const override;
};

const StructureOracle& dense_linear_order();

// count points strictly inside (lo, hi), dyadic: lo + (hi-lo) * j / 2^d for
// j = 1..count with 2^d the least power of two exceeding count.
std::vector<Point> dyadic_points(const Point& lo, const Point& hi, std::size_t count);

} // namespace permod
