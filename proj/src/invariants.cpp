#include "qaffine/invariants.hpp"

#include <set>

namespace qaffine {

namespace {

int floor_div(int a, int b)
{
    int q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace

SigmaFunction::SigmaFunction(PointMap values, std::optional<PointMap> generators)
    : generators_(std::move(generators))
{
    add_into(values_, values, 1);
    if (generators_) {
        PointMap g;
        add_into(g, *generators_, 1);
        generators_ = std::move(g);
    }
}

void SigmaFunction::add_into(PointMap& into, const PointMap& from, int c)
{
    for (const auto& [p, v] : from) {
        int& slot = into[p];
        slot += c * v;
        if (slot == 0)
            into.erase(p);
    }
}

SigmaFunction& SigmaFunction::operator+=(const SigmaFunction& o)
{
    add_into(values_, o.values_, 1);
    if (generators_ && o.generators_)
        add_into(*generators_, *o.generators_, 1);
    else
        generators_.reset();
    return *this;
}

SigmaFunction SigmaFunction::scaled(int c) const
{
    SigmaFunction out;
    if (c == 0)
        return SigmaFunction({}, PointMap{});
    add_into(out.values_, values_, c);
    if (generators_) {
        out.generators_ = PointMap{};
        add_into(*out.generators_, *generators_, c);
    }
    return out;
}

SigmaPoint Invariants::dual_shift(SigmaPoint p, int k) const
{
    const AffineData& d = data();
    int node = (k % 2 == 0) ? p.node : d.istar(p.node);
    return d.canonical({node, p.param * d.pstar().pow(k)});
}

std::pair<SigmaPoint, int> Invariants::orbit_key(SigmaPoint p) const
{
    int k = floor_div(p.param.q6(), data().pstar().q6());
    return {dual_shift(p, -k), (k % 2 == 0) ? 1 : -1};
}

int Invariants::de(SigmaPoint p1, SigmaPoint p2) const
{
    const auto& dij = table_.roots(p1.node, p2.node);
    const auto& dji = table_.roots(p2.node, p1.node);
    return dij.zero_order(p2.param / p1.param) + dji.zero_order(p1.param / p2.param);
}

std::pair<int, int> Invariants::shift_range(SigmaPoint p1, SigmaPoint p2) const
{
    // de(p1, D^k p2) needs |q6(p2) - q6(p1) + k h6| <= R6
    int r6 = p2.param.q6() - p1.param.q6();
    int h6 = data().pstar().q6();
    int big = table_.max_root_q6();
    return {ceil_div(-big - r6, h6), floor_div(big - r6, h6)};
}

template <class Weight>
int Invariants::alternating_sum(SigmaPoint p1, SigmaPoint p2, Weight weight) const
{
    auto [lo, hi] = shift_range(p1, p2);
    if (de(p1, dual_shift(p2, lo - 1)) != 0 || de(p1, dual_shift(p2, hi + 1)) != 0)
        throw SumNotStabilized("de does not vanish outside the shift range for " + p1.to_string() + ", " +
                               p2.to_string());
    int total = 0;
    for (int k = lo; k <= hi; ++k)
        total += weight(k) * de(p1, dual_shift(p2, k));
    return total;
}

int Invariants::lambda_inf(SigmaPoint p1, SigmaPoint p2) const
{
    return alternating_sum(p1, p2, [](int k) { return (k % 2 == 0) ? 1 : -1; });
}

int Invariants::lambda(SigmaPoint p1, SigmaPoint p2) const
{
    return alternating_sum(p1, p2, [](int k) {
        int e = k + (k < 0 ? 1 : 0);
        return (e % 2 == 0) ? 1 : -1;
    });
}

SigmaFunction Invariants::s_func(SigmaPoint p) const
{
    const AffineData& d = data();
    p = canonical(p);
    std::set<SigmaPoint> keys;
    for (int j = 1; j <= d.rank(); ++j) {
        for (const auto& [r, m] : table_.roots(p.node, j).roots())
            keys.insert(orbit_key({j, p.param * r}).first);
        for (const auto& [r, m] : table_.roots(j, p.node).roots())
            keys.insert(orbit_key({j, p.param / r}).first);
    }
    SigmaFunction::PointMap values;
    for (const SigmaPoint& k : keys)
        if (int v = lambda_inf(p, k); v != 0)
            values[k] = v;
    auto [gen, sign] = orbit_key(p);
    return SigmaFunction(std::move(values), SigmaFunction::PointMap{{gen, sign}});
}

SigmaFunction Invariants::e_of(const AffineWeightList& w) const
{
    SigmaFunction total({}, SigmaFunction::PointMap{});
    for (const SigmaPoint& p : w.items)
        total += s_func(p);
    return total;
}

int Invariants::eval(const SigmaFunction& f, SigmaPoint p) const
{
    auto [key, sign] = orbit_key(p);
    auto it = f.values().find(key);
    return it == f.values().end() ? 0 : sign * it->second;
}

int Invariants::pairing(const SigmaFunction& f, const SigmaFunction& g) const
{
    // (s_p, g) = -g(p) because lambda_inf is symmetric
    const SigmaFunction* with = f.generators() ? &f : g.generators() ? &g : nullptr;
    const SigmaFunction& other = (with == &f) ? g : f;
    if (!with)
        throw DecompositionUnavailable("pairing needs at least one argument built from s_func/e_of");
    int total = 0;
    for (const auto& [p, c] : *with->generators())
        total -= c * eval(other, p);
    return total;
}

}  // namespace qaffine
