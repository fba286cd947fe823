#include <permod/pmod.hpp>

#include <algorithm>
#include <set>

namespace permod {

namespace {

std::string tuple_string(const Tuple& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += ",";
        s += t[i].get_str();
    }
    return s + ")";
}

} // namespace

ModVector::ModVector(RingSpec ring, std::size_t arity) : ring_(ring), arity_(arity)
{
    if (arity == 0)
        throw InputError("arity must be at least 1");
}

void ModVector::add_term(Tuple tuple, const Scalar& coeff)
{
    if (tuple.size() != arity_)
        throw InputError("tuple " + tuple_string(tuple) + " has arity " + std::to_string(tuple.size()) +
                         ", expected " + std::to_string(arity_));
    if (! (coeff.ring() == ring_))
        throw InputError("coefficient over " + coeff.ring().to_string() + " in a vector over " + ring_.to_string());
    if (coeff.is_zero())
        return;
    for (auto& p : tuple)
        p.canonicalize();
    auto [it, inserted] = terms_.try_emplace(std::move(tuple), coeff);
    if (! inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void ModVector::insert_term(Tuple tuple, const Scalar& coeff)
{
    if (coeff.is_zero())
        throw InputError("zero coefficient on tuple " + tuple_string(tuple));
    for (auto& p : tuple)
        p.canonicalize();
    if (terms_.count(tuple))
        throw InputError("duplicate tuple " + tuple_string(tuple));
    add_term(std::move(tuple), coeff);
}

Scalar ModVector::coefficient(const Tuple& t) const
{
    auto it = terms_.find(t);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void ModVector::check_compatible(const ModVector& other) const
{
    if (! (ring_ == other.ring_))
        throw InputError("ring mismatch: " + ring_.to_string() + " vs " + other.ring_.to_string());
    if (arity_ != other.arity_)
        throw InputError("arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(other.arity_));
}

ModVector& ModVector::operator+=(const ModVector& other)
{
    check_compatible(other);
    for (const auto& [t, c] : other.terms_)
        add_term(t, c);
    return *this;
}

ModVector& ModVector::operator-=(const ModVector& other)
{
    check_compatible(other);
    for (const auto& [t, c] : other.terms_)
        add_term(t, -c);
    return *this;
}

ModVector ModVector::scaled(const Scalar& s) const
{
    ModVector out(ring_, arity_);
    for (const auto& [t, c] : terms_)
        out.add_term(t, c * s);
    return out;
}

ModVector ModVector::converted(RingSpec ring) const
{
    ModVector out(ring, arity_);
    for (const auto& [t, c] : terms_) {
        Rational value = c.value();
        out.add_term(t, Scalar(ring, value));
    }
    return out;
}

void AugVector::add(const PatternKey& key, const Scalar& value)
{
    if (value.is_zero())
        return;
    auto [it, inserted] = entries_.try_emplace(key, value);
    if (! inserted) {
        it->second += value;
        if (it->second.is_zero())
            entries_.erase(it);
    }
}

Scalar AugVector::at(const PatternKey& key) const
{
    auto it = entries_.find(key);
    return it == entries_.end() ? Scalar::zero(ring_) : it->second;
}

AugVector& AugVector::operator+=(const AugVector& other)
{
    if (! (ring_ == other.ring_))
        throw InputError("ring mismatch in augmentation vectors");
    for (const auto& [k, v] : other.entries_)
        add(k, v);
    return *this;
}

AugVector AugVector::scaled(const Scalar& s) const
{
    AugVector out(ring_);
    for (const auto& [k, v] : entries_)
        out.add(k, v * s);
    return out;
}

Scalar AugVector::dot(const AugVector& other) const
{
    if (! (ring_ == other.ring_))
        throw InputError("ring mismatch in augmentation vectors");
    Scalar sum = Scalar::zero(ring_);
    for (const auto& [k, v] : entries_) {
        auto it = other.entries_.find(k);
        if (it != other.entries_.end())
            sum += v * it->second;
    }
    return sum;
}

ParamSet support_points(const ModVector& x)
{
    std::set<Point> points;
    for (const auto& [t, c] : x.terms())
        points.insert(t.begin(), t.end());
    return ParamSet(std::vector<Point>(points.begin(), points.end()));
}

AugVector omega(const ModVector& x, const ParamSet& params, const StructureOracle& oracle)
{
    AugVector out(x.ring());
    for (const auto& [t, c] : x.terms())
        out.add(oracle.pattern_of_tuple(t, params), c);
    return out;
}

ModVector relabel(const ModVector& x, const PointMap& map)
{
    ModVector out(x.ring(), x.arity());
    for (const auto& [t, c] : x.terms()) {
        Tuple image;
        image.reserve(t.size());
        for (const auto& p : t) {
            auto it = map.find(p);
            if (it == map.end())
                throw InputError("map is not defined on support point " + p.get_str());
            image.push_back(it->second);
        }
        out.add_term(std::move(image), c);
    }
    return out;
}

ModVector act(const ModVector& x, const PointMap& map)
{
    const Point* previous = nullptr;
    for (const auto& [from, to] : map) {
        if (previous && ! (*previous < to))
            throw InputError("map is not strictly increasing at " + from.get_str());
        previous = &to;
    }
    return relabel(x, map);
}

std::vector<ModVector> orbit_reps_over(const ModVector& v, const ParamSet& params, const StructureOracle& oracle)
{
    const auto chain = support_points(v);
    std::vector<ModVector> out;
    for (const auto& placement : oracle.enumerate_placements(chain.points(), params))
        out.push_back(relabel(v, placement.as_map()));
    return out;
}

AugVector omega_empty(const ModVector& x, const StructureOracle& oracle)
{
    return omega(x, ParamSet{}, oracle);
}

bool is_aug_zero(const ModVector& x, const StructureOracle& oracle)
{
    return omega_empty(x, oracle).is_zero();
}

Tuple singleton_tuple(const PatternKey& key, const ParamSet& params)
{
    if (! key.is_singleton() || key.param_count() != params.size())
        throw InputError("pattern " + key.str() + " is not a singleton orbit over the given parameters");
    Tuple t;
    for (int slot : key.slots())
        t.push_back(params.points()[slot / 2]);
    return t;
}

} // namespace permod
