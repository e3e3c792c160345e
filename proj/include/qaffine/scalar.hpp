#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qaffine/errors.hpp"

namespace qaffine {

// An element z24^phase * q^(q6/6) of the multiplicative group mu_24 x q^(Z/6).
// Every spectral parameter that occurs for the 14 families lives here.
class SpectralScalar {
public:
    static constexpr int kPhaseModulus = 24;
    static constexpr int kQDenominator = 6;

    constexpr SpectralScalar() = default;
    constexpr SpectralScalar(int phase, int q6) : phase_(reduce(phase)), q6_(q6) {}

    static constexpr SpectralScalar one() { return {}; }
    static constexpr SpectralScalar minus_one() { return {12, 0}; }
    static constexpr SpectralScalar sqrt_minus_one() { return {6, 0}; }
    static constexpr SpectralScalar omega() { return {8, 0}; }
    static constexpr SpectralScalar zeta(int k) { return {k, 0}; }
    static constexpr SpectralScalar q() { return {0, 6}; }
    static constexpr SpectralScalar q_s() { return {0, 3}; }
    static constexpr SpectralScalar q_t() { return {0, 2}; }
    // q^(num/den) with den dividing 6
    static SpectralScalar q_pow(int num, int den = 1);

    constexpr int phase() const { return phase_; }
    constexpr int q6() const { return q6_; }
    constexpr bool is_one() const { return phase_ == 0 && q6_ == 0; }

    constexpr SpectralScalar operator*(SpectralScalar o) const { return {phase_ + o.phase_, q6_ + o.q6_}; }
    constexpr SpectralScalar operator/(SpectralScalar o) const { return {phase_ - o.phase_, q6_ - o.q6_}; }
    constexpr SpectralScalar& operator*=(SpectralScalar o) { return *this = *this * o; }
    constexpr SpectralScalar& operator/=(SpectralScalar o) { return *this = *this / o; }
    constexpr SpectralScalar operator-() const { return *this * minus_one(); }
    constexpr SpectralScalar inverse() const { return {-phase_, -q6_}; }
    SpectralScalar pow(int k) const { return {phase_ * k, q6_ * k}; }

    constexpr auto operator<=>(const SpectralScalar&) const = default;

    std::string to_string() const;

private:
    static constexpr int reduce(int p) { return ((p % kPhaseModulus) + kPhaseModulus) % kPhaseModulus; }

    int phase_ = 0;
    int q6_ = 0;
};

std::ostream& operator<<(std::ostream& os, SpectralScalar s);

// Parses the canonical form and the common shorthands: 1, -1, i, omega, omega^2,
// q, q_s, q_t, q^(a/b), z24^k, (-q)^k, (-q_s)^k, (-q_t)^k, (-q^2)^k, products with '*',
// and a leading '-' sign.
SpectralScalar parse_scalar(std::string_view text);

// All n-th roots, n in {2, 3}. Throws RootOutsideDomain when they leave mu_24 x q^(Z/6).
std::vector<SpectralScalar> nth_roots(SpectralScalar s, int n);

}  // namespace qaffine
