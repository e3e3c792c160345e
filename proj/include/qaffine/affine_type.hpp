#pragma once

#include <string>
#include <vector>

#include "qaffine/finite_roots.hpp"
#include "qaffine/scalar.hpp"

namespace qaffine {

enum class Family { A1, B1, C1, D1, E6_1, E7_1, E8_1, F4_1, G2_1, A2_even, A2_odd, D2, E6_2, D4_3 };

struct AffineType {
    Family family = Family::A1;
    int n = 1;  // rank parameter; for exceptional families the rank of g_0

    std::string name() const;  // CLI type string, e.g. "A5-2"
    bool operator==(const AffineType&) const = default;
};

// Legal rank range check; throws RankOutOfRange.
AffineType make_type(Family f, int n);
// "<family><n>-<twist>", e.g. "B3-1", "A4-2", "D5-2", "E6-2", "D4-3".
AffineType parse_type(const std::string& s);

struct SigmaPoint {
    int node = 1;
    SpectralScalar param;

    auto operator<=>(const SigmaPoint&) const = default;
    std::string to_string() const { return std::to_string(node) + "@" + param.to_string(); }
};

SigmaPoint parse_point(const std::string& text);  // "i@<scalar>"

class AffineData {
public:
    static AffineData build(AffineType type);

    const AffineType& type() const { return type_; }
    Family family() const { return type_.family; }
    bool untwisted() const;
    // untwisted A, D, E
    bool simply_laced() const;
    int rank() const { return static_cast<int>(m_.size()); }
    int m(int i) const { return m_.at(i - 1); }
    SpectralScalar pstar() const { return pstar_; }
    SpectralScalar ptilde() const { return pstar_ * pstar_; }
    int istar(int i) const { return istar_.at(i - 1); }
    const FinType& gfin() const { return gfin_; }
    // q-exponent of p*
    int hvee() const { return pstar_.q6() / SpectralScalar::kQDenominator; }
    const Diagram& g0_diagram() const { return g0_; }
    int dd(int i, int j) const { return g0_.dd(i, j); }
    bool valid_node(int i) const { return i >= 1 && i <= rank(); }

    // Canonical representative of the class of (i, x) under x^{m_i} = y^{m_i}.
    SigmaPoint canonical(SigmaPoint p) const;

private:
    AffineType type_;
    std::vector<int> m_;
    SpectralScalar pstar_;
    std::vector<int> istar_;
    FinType gfin_;
    Diagram g0_;
};

bool sigma_eq(const AffineData& d, SigmaPoint p1, SigmaPoint p2);

// Every family at the ranks swept by the acceptance suite.
std::vector<AffineType> desk_types();

}  // namespace qaffine
