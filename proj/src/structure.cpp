#include <permod/structure.hpp>

#include <algorithm>
#include <numeric>

namespace permod {

ParamSet::ParamSet(std::vector<Point> points) : points_(std::move(points))
{
    for (auto& p : points_)
        p.canonicalize();
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (! (points_[i - 1] < points_[i]))
            throw InputError("parameter set must be strictly increasing (offending point " + points_[i].get_str() + ")");
}

ParamSet ParamSet::from_unsorted(std::vector<Point> points)
{
    std::sort(points.begin(), points.end());
    return ParamSet(std::move(points));
}

bool ParamSet::contains(const Point& p) const
{
    return std::binary_search(points_.begin(), points_.end(), p);
}

bool ParamSet::includes(const ParamSet& other) const
{
    return std::includes(points_.begin(), points_.end(), other.points_.begin(), other.points_.end());
}

PatternKey PatternKey::from_classes(const std::vector<std::vector<int>>& classes, std::size_t arity, std::size_t params)
{
    PatternKey key;
    key.arity_ = arity;
    key.params_ = params;
    key.code_.assign(2 * arity, 0);

    int params_seen = 0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        if (k)
            key.text_ += '<';
        int param_here = -1;
        for (std::size_t m = 0; m < classes[k].size(); ++m) {
            int member = classes[k][m];
            if (m)
                key.text_ += '=';
            if (member < 0) {
                param_here = -1 - member;
                key.text_ += 'p' + std::to_string(param_here);
            }
            else
                key.text_ += 'c' + std::to_string(member);
        }
        for (int member : classes[k]) {
            if (member < 0)
                continue;
            key.code_[member] = param_here >= 0 ? 2 * param_here + 1 : 2 * params_seen;
            key.code_[arity + member] = static_cast<int>(k);
        }
        if (param_here >= 0)
            ++params_seen;
    }
    return key;
}

PatternKey PatternKey::parse(std::string_view text)
{
    std::vector<std::vector<int>> classes;
    std::size_t arity = 0, params = 0;
    std::vector<int> current;
    std::size_t pos = 0;
    auto fail = [&] { throw InputError("invalid pattern key \"" + std::string(text) + "\""); };
    if (text.empty())
        fail();
    while (pos <= text.size()) {
        if (pos == text.size())
            fail();
        char kind = text[pos++];
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            ++pos;
        if (start == pos || (kind != 'p' && kind != 'c'))
            fail();
        int index = std::stoi(std::string(text.substr(start, pos - start)));
        if (kind == 'p') {
            current.push_back(-1 - index);
            ++params;
        }
        else {
            current.push_back(index);
            ++arity;
        }
        if (pos == text.size()) {
            classes.push_back(std::move(current));
            break;
        }
        char sep = text[pos++];
        if (sep == '<') {
            classes.push_back(std::move(current));
            current.clear();
        }
        else if (sep != '=')
            fail();
    }

    // every index used exactly once, parameters in increasing order
    std::vector<int> seen_coords(arity, 0);
    int next_param = 0;
    for (const auto& cls : classes)
        for (int m : cls) {
            if (m < 0) {
                if (-1 - m != next_param++)
                    fail();
            }
            else if (static_cast<std::size_t>(m) >= arity || seen_coords[m]++)
                fail();
        }
    for (auto& cls : classes) {
        if (std::count_if(cls.begin(), cls.end(), [](int m) { return m < 0; }) > 1)
            fail();
        std::sort(cls.begin(), cls.end());
    }
    auto key = from_classes(classes, arity, params);
    if (key.text_ != text)
        fail();
    return key;
}

bool PatternKey::is_singleton() const
{
    return std::all_of(code_.begin(), code_.begin() + arity_, [](int slot) { return slot % 2 == 1; });
}

std::strong_ordering operator<=>(const PatternKey& a, const PatternKey& b)
{
    if (auto c = a.params_ <=> b.params_; c != 0)
        return c;
    if (auto c = a.code_ <=> b.code_; c != 0)
        return c;
    return a.text_ <=> b.text_;
}

PointMap Placement::as_map() const
{
    PointMap m;
    for (std::size_t i = 0; i < source.size(); ++i)
        m.emplace(source[i], images[i]);
    return m;
}

std::string to_string(ReductSpec r)
{
    return r == ReductSpec::pure_set ? "pure-set" : "dlo";
}

ReductSpec parse_reduct(std::string_view text)
{
    if (text == "dlo" || text == "none")
        return ReductSpec::none;
    if (text == "pure-set")
        return ReductSpec::pure_set;
    throw InputError("unknown structure \"" + std::string(text) + "\" (expected dlo or pure-set)");
}

std::vector<Point> dyadic_points(const Point& lo, const Point& hi, std::size_t count)
{
    unsigned long denominator = 1;
    while (denominator <= count)
        denominator *= 2;
    std::vector<Point> out;
    for (std::size_t j = 1; j <= count; ++j) {
        Point p = lo + (hi - lo) * Rational(static_cast<unsigned long>(j), denominator);
        p.canonicalize();
        out.push_back(p);
    }
    return out;
}

PatternKey DenseLinearOrder::pattern_of_tuple(std::span<const Point> tuple, const ParamSet& params) const
{
    struct Item {
        const Point* value;
        int member;
    };
    std::vector<Item> items;
    const auto& ps = params.points();
    for (std::size_t i = 0; i < ps.size(); ++i)
        items.push_back({&ps[i], -1 - static_cast<int>(i)});
    for (std::size_t j = 0; j < tuple.size(); ++j)
        items.push_back({&tuple[j], static_cast<int>(j)});
    // parameters (negative members) first within a class; then by index
    auto member_rank = [](int m) { return m < 0 ? std::make_pair(0, -1 - m) : std::make_pair(1, m); };
    std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
        int c = cmp(*a.value, *b.value);
        if (c != 0)
            return c < 0;
        return member_rank(a.member) < member_rank(b.member);
    });

    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i == 0 || *items[i - 1].value != *items[i].value)
            classes.emplace_back();
        classes.back().push_back(items[i].member);
    }
    return PatternKey::from_classes(classes, tuple.size(), ps.size());
}

std::vector<Placement> DenseLinearOrder::enumerate_placements(std::span<const Point> chain, const ParamSet& params) const
{
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (! (chain[i - 1] < chain[i]))
            throw InputError("placement source must be a strictly increasing chain");

    const auto& ps = params.points();
    const int k = static_cast<int>(ps.size());
    const int slot_count = 2 * k + 1;
    const std::size_t m = chain.size();

    std::vector<Placement> out;
    std::vector<int> slots(m);

    auto realize = [&] {
        Placement pl;
        pl.source.assign(chain.begin(), chain.end());
        pl.slots = slots;
        if (k == 0) {
            pl.images = pl.source;
            out.push_back(std::move(pl));
            return;
        }
        pl.images.resize(m);
        std::size_t i = 0;
        while (i < m) {
            int slot = slots[i];
            if (slot % 2 == 1) {
                pl.images[i] = ps[slot / 2];
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < m && slots[j] == slot)
                ++j;
            const std::size_t q = j - i;
            const int gap = slot / 2;
            std::vector<Point> fresh;
            if (gap == 0)
                for (std::size_t t = 0; t < q; ++t)
                    fresh.push_back(ps.front() - Rational(static_cast<unsigned long>(q - t)));
            else if (gap == k)
                for (std::size_t t = 0; t < q; ++t)
                    fresh.push_back(ps.back() + Rational(static_cast<unsigned long>(t + 1)));
            else
                fresh = dyadic_points(ps[gap - 1], ps[gap], q);
            for (std::size_t t = 0; t < q; ++t)
                pl.images[i + t] = fresh[t];
            i = j;
        }
        out.push_back(std::move(pl));
    };

    // non-decreasing slot sequences, parameter slots used at most once
    auto recurse = [&](auto& self, std::size_t index, int lowest) -> void {
        if (index == m) {
            realize();
            return;
        }
        for (int slot = lowest; slot < slot_count; ++slot)
            if (slot % 2 == 0 || index == 0 || slots[index - 1] != slot) {
                slots[index] = slot;
                self(self, index + 1, slot);
            }
    };
    recurse(recurse, 0, 0);
    return out;
}

std::vector<Tuple> DenseLinearOrder::canonical_orbit_reps(std::size_t arity) const
{
    if (arity == 0)
        throw InputError("arity must be at least 1");
    std::vector<Tuple> out;
    std::vector<int> ranks(arity, 0);
    auto recurse = [&](auto& self, std::size_t index) -> void {
        if (index == arity) {
            // ranks must cover 0..max
            int top = *std::max_element(ranks.begin(), ranks.end());
            std::vector<bool> used(top + 1, false);
            for (int r : ranks)
                used[r] = true;
            if (std::find(used.begin(), used.end(), false) != used.end())
                return;
            Tuple t;
            for (int r : ranks)
                t.emplace_back(r + 1);
            out.push_back(std::move(t));
            return;
        }
        for (int r = 0; r < static_cast<int>(arity); ++r) {
            ranks[index] = r;
            self(self, index + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

std::vector<PointMap> DenseLinearOrder::reduct_expansions(std::span<const Point> chain, ReductSpec reduct) const
{
    std::vector<Point> source(chain.begin(), chain.end());
    std::sort(source.begin(), source.end());
    if (std::adjacent_find(source.begin(), source.end()) != source.end())
        throw InputError("reduct expansion needs distinct points");

    std::vector<PointMap> out;
    std::vector<Point> image = source;
    do {
        PointMap m;
        for (std::size_t i = 0; i < source.size(); ++i)
            m.emplace(source[i], image[i]);
        out.push_back(std::move(m));
    } while (reduct == ReductSpec::pure_set && std::next_permutation(image.begin(), image.end()));
    return out;
}

const StructureOracle& dense_linear_order()
{
    static const DenseLinearOrder instance;
    return instance;
}

} // namespace permod
