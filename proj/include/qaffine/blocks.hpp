#pragma once

#include <string>
#include <vector>

#include "qaffine/invariants.hpp"
#include "qaffine/qdata.hpp"

namespace qaffine {

struct GramMismatch {
    int i = 0;
    int j = 0;
    int got = 0;
    int expected = 0;
};

struct GramResult {
    IntMatrix matrix;
    IntMatrix expected;
    std::vector<GramMismatch> mismatches;
    bool equal() const { return mismatches.empty(); }
};

// Matrix of pairings (s_{phi_Q(alpha_i)}, s_{phi_Q(alpha_j)}) against the Cartan matrix of g_fin.
GramResult gram(const Invariants& inv, const QDatum& q);

// The s_{phi_Q(alpha_i)}, i in I_fin.
std::vector<SigmaFunction> simple_root_functions(const Invariants& inv, const QDatum& q);

// n with sum n_i s_{phi_Q(alpha_i)} = f. Throws NotInW0.
RootVec psi_lattice(const Invariants& inv, const QDatum& q, const SigmaFunction& f);

// Least translation t (ordered by q-exponent, then phase) with (i, x/t) in sigma_0.
SpectralScalar component_of(const AffineData& d, SigmaPoint p);
std::string component_name(SpectralScalar t);

struct ComponentLabel {
    SpectralScalar t;
    RootVec coords;
    bool operator==(const ComponentLabel&) const = default;
};

// Nonzero components only, ordered by t; the trivial module has no components.
struct BlockLabel {
    std::vector<ComponentLabel> components;
    bool operator==(const BlockLabel&) const = default;
    bool is_zero() const { return components.empty(); }
};

BlockLabel block_label(const Invariants& inv, const QDatum& q, const AffineWeightList& w);

// Groups of module indices with equal labels, in order of first appearance.
std::vector<std::vector<std::size_t>> partition_blocks(const Invariants& inv, const QDatum& q,
                                                       const std::vector<AffineWeightList>& modules);

std::vector<SigmaFunction> delta0(const Invariants& inv, const QDatum& q);

}  // namespace qaffine
