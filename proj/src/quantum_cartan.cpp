#include "qaffine/quantum_cartan.hpp"

#include <algorithm>
#include <numeric>

namespace qaffine {

std::vector<int> default_ade_heights(FinType type)
{
    int n = type.rank;
    std::vector<int> xi(n);
    switch (type.series) {
    case 'A':
        for (int i = 1; i <= n; ++i)
            xi[i - 1] = 1 - i;
        break;
    case 'D':
        for (int i = 1; i <= n - 2; ++i)
            xi[i - 1] = 1 - i;
        xi[n - 2] = xi[n - 1] = 2 - n;
        break;
    default:
        xi[0] = 0;
        xi[1] = -1;
        for (int k = 3; k <= n; ++k)
            xi[k - 1] = 2 - k;
        break;
    }
    return xi;
}

Word coxeter_word_by_height(const std::vector<int>& xi)
{
    std::vector<int> order(xi.size());
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return xi[a - 1] > xi[b - 1]; });
    return Word(order.begin(), order.end());
}

AdeQuiverData::AdeQuiverData(FinType type) : AdeQuiverData(type, default_ade_heights(type)) {}

AdeQuiverData::AdeQuiverData(FinType type, std::vector<int> xi) : rs_(type), xi_(std::move(xi))
{
    if (static_cast<int>(xi_.size()) != rs_.rank())
        throw Error("height function has the wrong number of nodes");
    build();
}

void AdeQuiverData::build()
{
    const int n = rs_.rank();
    for (int i = 1; i <= n; ++i)
        for (int j : rs_.diagram().neighbours(i))
            if (std::abs(xi(i) - xi(j)) != 1)
                throw InvalidQDatum("heights differ by more than one across edge " + std::to_string(i) +
                                    "-" + std::to_string(j));
    tau_ = coxeter_word_by_height(xi_);
    tau_mat_ = rs_.word_matrix(tau_);
    Word rev(tau_.rbegin(), tau_.rend());
    tau_inv_ = rs_.word_matrix(rev);

    // ancestors: nodes with a directed path to i, arrows pointing to lower height
    gamma_.assign(n, RootVec(n, 0));
    for (int i = 1; i <= n; ++i) {
        std::vector<int> stack{i};
        std::vector<bool> seen(n + 1, false);
        seen[i] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            gamma_[i - 1][u - 1] = 1;
            for (int v : rs_.diagram().neighbours(u))
                if (!seen[v] && xi(v) == xi(u) + 1) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
    }
}

RootVec AdeQuiverData::tau_power(int e, const RootVec& beta) const
{
    const IntMatrix& m = e >= 0 ? tau_mat_ : tau_inv_;
    RootVec out = beta;
    for (int k = 0; k < std::abs(e); ++k)
        out = mat_apply(m, out);
    return out;
}

int ctilde_formula(const AdeQuiverData& q, int i, int j, int k)
{
    int e = k + q.xi(i) - q.xi(j) - 1;
    if (e % 2 != 0)
        return 0;
    return q.tau_power(e / 2, q.gamma(i)).at(j - 1);
}

CTildeTable ctilde_formula_table(const AdeQuiverData& q, int order)
{
    int n = q.rs().rank();
    CTildeTable t(n, order);
    for (int k = 1; k <= order; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                t.at(i, j, k) = ctilde_formula(q, i, j, k);
    return t;
}

CTildeTable ctilde_oracle(const IntMatrix& cartan, int order)
{
    const int n = static_cast<int>(cartan.size());
    IntMatrix nmat = cartan;
    for (int i = 0; i < n; ++i)
        nmat[i][i] -= 2;
    auto combine = [n](const IntMatrix& a, const IntMatrix& b) {
        // -a - b
        IntMatrix c(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                c[i][j] = -a[i][j] - b[i][j];
        return c;
    };
    // (I + zN + z^2 I)^{-1} = sum X_k z^k and C(z)^{-1} = z * that
    CTildeTable t(n, order);
    IntMatrix prev2 = IntMatrix(n, std::vector<int>(n, 0));
    IntMatrix prev1 = identity_matrix(n);
    for (int k = 1; k <= order; ++k) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                t.at(i, j, k) = prev1[i - 1][j - 1];
        IntMatrix next = combine(mat_mul(nmat, prev1), prev2);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return t;
}

}  // namespace qaffine
