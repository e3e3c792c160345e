#pragma once

#include <map>
#include <string>
#include <vector>

#include "qaffine/affine_type.hpp"

namespace qaffine {

// Monic polynomial prod (z - r), stored as root -> multiplicity.
class RootMultiset {
public:
    void add(SpectralScalar r, int mult = 1);
    int zero_order(SpectralScalar x) const;
    int degree() const;
    const std::map<SpectralScalar, int>& roots() const { return roots_; }
    bool operator==(const RootMultiset&) const = default;

private:
    std::map<SpectralScalar, int> roots_;
};

// (z^power - value)^mult
struct DenomFactor {
    int power = 1;
    SpectralScalar value;
    int mult = 1;
};

struct Denominator {
    std::vector<DenomFactor> factors;
    RootMultiset roots;

    std::string factored_string() const;
};

// All d_{i,j} for one affine type, built once; read-only afterwards.
class DenominatorTable {
public:
    explicit DenominatorTable(const AffineData& d);

    const AffineData& data() const { return data_; }
    const Denominator& get(int i, int j) const;
    const RootMultiset& roots(int i, int j) const { return get(i, j).roots; }
    // largest q6 over the roots of every d_{i,j}
    int max_root_q6() const { return max_q6_; }

private:
    AffineData data_;
    std::vector<std::vector<Denominator>> table_;
    int max_q6_ = 0;
};

int zero_order(const RootMultiset& p, SpectralScalar x);

}  // namespace qaffine
