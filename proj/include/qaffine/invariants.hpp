#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qaffine/denominators.hpp"

namespace qaffine {

struct AffineWeightList {
    std::vector<SigmaPoint> items;
};

// An integer-valued function on sigma(g) that changes sign under the dual shift,
// f(i^*, a p^*) = -f(i, a). It is stored on orbit representatives only, which keeps the
// support finite. Functions built from s_func/e_of also record their expansion in the s_{i,a}.
class SigmaFunction {
public:
    using PointMap = std::map<SigmaPoint, int>;

    SigmaFunction() = default;
    explicit SigmaFunction(PointMap values, std::optional<PointMap> generators = std::nullopt);

    const PointMap& values() const { return values_; }
    const std::optional<PointMap>& generators() const { return generators_; }
    bool is_zero() const { return values_.empty(); }

    SigmaFunction& operator+=(const SigmaFunction& o);
    SigmaFunction operator+(const SigmaFunction& o) const { return SigmaFunction(*this) += o; }
    SigmaFunction operator-() const { return scaled(-1); }
    SigmaFunction operator-(const SigmaFunction& o) const { return *this + (-o); }
    SigmaFunction scaled(int c) const;
    SigmaFunction without_generators() const { return SigmaFunction(values_); }

    // equality of functions; provenance is ignored
    bool operator==(const SigmaFunction& o) const { return values_ == o.values_; }

private:
    static void add_into(PointMap& into, const PointMap& from, int c);

    PointMap values_;
    std::optional<PointMap> generators_;
};

class Invariants {
public:
    explicit Invariants(const AffineData& d) : table_(d) {}

    const AffineData& data() const { return table_.data(); }
    const DenominatorTable& table() const { return table_; }

    SigmaPoint canonical(SigmaPoint p) const { return data().canonical(p); }
    SigmaPoint dual_shift(SigmaPoint p, int k) const;
    // representative of the dual-shift orbit with q-exponent in [0, h^vee), and the sign (-1)^k
    std::pair<SigmaPoint, int> orbit_key(SigmaPoint p) const;

    int de(SigmaPoint p1, SigmaPoint p2) const;
    int lambda_inf(SigmaPoint p1, SigmaPoint p2) const;
    int lambda(SigmaPoint p1, SigmaPoint p2) const;
    // the range of k for which de(p1, D^k p2) can be nonzero
    std::pair<int, int> shift_range(SigmaPoint p1, SigmaPoint p2) const;

    SigmaFunction s_func(SigmaPoint p) const;
    SigmaFunction e_of(const AffineWeightList& w) const;
    int eval(const SigmaFunction& f, SigmaPoint p) const;

    int pairing(SigmaPoint p1, SigmaPoint p2) const { return -lambda_inf(p1, p2); }
    // Bilinear extension of (s_p, s_q) = -lambda_inf(p, q); needs provenance on f or g.
    int pairing(const SigmaFunction& f, const SigmaFunction& g) const;

private:
    template <class Weight>
    int alternating_sum(SigmaPoint p1, SigmaPoint p2, Weight weight) const;

    DenominatorTable table_;
};

}  // namespace qaffine
