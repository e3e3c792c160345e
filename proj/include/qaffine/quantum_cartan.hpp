#pragma once

#include <vector>

#include "qaffine/finite_roots.hpp"

namespace qaffine {

// Dynkin quiver of an ADE diagram: arrow i -> j on an edge when xi_j = xi_i - 1.
class AdeQuiverData {
public:
    // Default heights: A: 1-i; D: 1-i for i<n-1, 2-n on the fork; E: 0, -1, then 2-k.
    explicit AdeQuiverData(FinType type);
    AdeQuiverData(FinType type, std::vector<int> xi);

    const FinRootSystem& rs() const { return rs_; }
    int xi(int i) const { return xi_.at(i - 1); }
    const std::vector<int>& heights() const { return xi_; }
    const Word& tau_word() const { return tau_; }
    const RootVec& gamma(int i) const { return gamma_.at(i - 1); }
    int h() const { return rs_.coxeter_number(); }

    // tau^e on simple-root coordinates, e of any sign
    RootVec tau_power(int e, const RootVec& beta) const;

private:
    void build();

    FinRootSystem rs_;
    std::vector<int> xi_;
    Word tau_;
    IntMatrix tau_mat_;
    IntMatrix tau_inv_;
    std::vector<RootVec> gamma_;
};

std::vector<int> default_ade_heights(FinType type);

// Reflections ordered by decreasing height, ties by ascending index.
Word coxeter_word_by_height(const std::vector<int>& xi);

int ctilde_formula(const AdeQuiverData& q, int i, int j, int k);

class CTildeTable {
public:
    CTildeTable() = default;
    CTildeTable(int rank, int order) : rank_(rank), values_(order + 1, IntMatrix(rank, std::vector<int>(rank, 0))) {}

    int rank() const { return rank_; }
    int order() const { return static_cast<int>(values_.size()) - 1; }
    int at(int i, int j, int k) const { return values_.at(k).at(i - 1).at(j - 1); }
    int& at(int i, int j, int k) { return values_.at(k).at(i - 1).at(j - 1); }

private:
    int rank_ = 0;
    std::vector<IntMatrix> values_;
};

// Coefficients of C(z)^{-1} up to z^order, by inverting z C(z) = I + zN + z^2 I as a power series.
CTildeTable ctilde_oracle(const IntMatrix& cartan, int order);

CTildeTable ctilde_formula_table(const AdeQuiverData& q, int order);

}  // namespace qaffine
