#include "qaffine/denominators.hpp"

#include <algorithm>
#include <optional>

#include "qaffine/quantum_cartan.hpp"

namespace qaffine {

void RootMultiset::add(SpectralScalar r, int mult)
{
    if (mult != 0)
        roots_[r] += mult;
}

int RootMultiset::zero_order(SpectralScalar x) const
{
    auto it = roots_.find(x);
    return it == roots_.end() ? 0 : it->second;
}

int RootMultiset::degree() const
{
    int deg = 0;
    for (const auto& [r, m] : roots_)
        deg += m;
    return deg;
}

int zero_order(const RootMultiset& p, SpectralScalar x) { return p.zero_order(x); }

std::string Denominator::factored_string() const
{
    if (factors.empty())
        return "1";
    std::string out;
    for (const DenomFactor& f : factors) {
        out += "(z";
        if (f.power != 1)
            out += "^" + std::to_string(f.power);
        out += " - " + f.value.to_string() + ")";
        if (f.mult != 1)
            out += "^" + std::to_string(f.mult);
    }
    return out;
}

namespace {

const SpectralScalar kMinusQ = -SpectralScalar::q();
const SpectralScalar kMinusQs = -SpectralScalar::q_s();
const SpectralScalar kMinusQ2 = -SpectralScalar::q().pow(2);

// Accumulates factors of one d_{i,j} and expands them into roots.
class Builder {
public:
    Builder& lin(SpectralScalar root, int mult = 1) { return pow(1, root, mult); }

    Builder& pow(int power, SpectralScalar value, int mult = 1)
    {
        if (mult <= 0)
            return *this;
        for (auto& f : out_.factors)
            if (f.power == power && f.value == value) {
                f.mult += mult;
                expand(power, value, mult);
                return *this;
            }
        out_.factors.push_back({power, value, mult});
        expand(power, value, mult);
        return *this;
    }

    Denominator done() { return std::move(out_); }

private:
    void expand(int power, SpectralScalar value, int mult)
    {
        if (power == 1)
            out_.roots.add(value, mult);
        else
            for (SpectralScalar r : nth_roots(value, power))
                out_.roots.add(r, mult);
    }

    Denominator out_;
};

SpectralScalar qs_pow(int e) { return SpectralScalar::q_s().pow(e); }

Denominator ade(const AdeQuiverData& quiver, int i, int j)
{
    Builder b;
    for (int k = 1; k < quiver.h(); ++k)
        b.lin(kMinusQ.pow(k + 1), ctilde_formula(quiver, i, j, k));
    return b.done();
}

Denominator type_b(int n, int k, int l)
{
    Builder b;
    if (k > l)
        std::swap(k, l);
    if (l < n) {
        for (int s = 1; s <= k; ++s) {
            b.lin(kMinusQ.pow(l - k + 2 * s));
            b.lin(-kMinusQ.pow(2 * n - k - l - 1 + 2 * s));
        }
    } else if (k < n) {
        SpectralScalar sign = SpectralScalar::minus_one().pow(n + k);
        for (int s = 1; s <= k; ++s)
            b.lin(sign * qs_pow(2 * n - 2 * k - 1 + 4 * s));
    } else {
        for (int s = 1; s <= n; ++s)
            b.lin(qs_pow(4 * s - 2));
    }
    return b.done();
}

Denominator type_c(int n, int k, int l)
{
    Builder b;
    int first = std::min({k, l, n - k, n - l});
    for (int s = 1; s <= first; ++s)
        b.lin(kMinusQs.pow(std::abs(k - l) + 2 * s));
    for (int s = 1; s <= std::min(k, l); ++s)
        b.lin(kMinusQs.pow(2 * n + 2 - k - l + 2 * s));
    return b.done();
}

Denominator type_a_odd(int n, int k, int l)
{
    Builder b;
    for (int s = 1; s <= std::min(k, l); ++s) {
        b.lin(kMinusQ.pow(std::abs(k - l) + 2 * s));
        b.lin(-kMinusQ.pow(2 * n - k - l + 2 * s));
    }
    return b.done();
}

Denominator type_a_even(int n, int k, int l)
{
    Builder b;
    for (int s = 1; s <= std::min(k, l); ++s) {
        b.lin(kMinusQ.pow(std::abs(k - l) + 2 * s));
        b.lin(kMinusQ.pow(2 * n + 1 - k - l + 2 * s));
    }
    return b.done();
}

Denominator type_d_twisted(int n, int k, int l)
{
    Builder b;
    if (k > l)
        std::swap(k, l);
    if (l < n) {
        for (int s = 1; s <= k; ++s) {
            b.pow(2, kMinusQ2.pow(l - k + 2 * s));
            b.pow(2, kMinusQ2.pow(2 * n - k - l + 2 * s));
        }
    } else if (k < n) {
        for (int s = 1; s <= k; ++s)
            b.pow(2, -kMinusQ2.pow(n - k + 2 * s));
    } else {
        for (int s = 1; s <= n; ++s)
            b.lin(-kMinusQ2.pow(s));
    }
    return b.done();
}

// signed exponent list: e > 0 gives (z - x^e), e < 0 gives (z + x^{-e})
Denominator signed_list(SpectralScalar base, std::initializer_list<std::pair<int, int>> items)
{
    Builder b;
    for (auto [e, mult] : items)
        b.lin(e > 0 ? base.pow(e) : -base.pow(-e), mult);
    return b.done();
}

Denominator type_g2(int k, int l)
{
    SpectralScalar qt = SpectralScalar::q_t();
    if (k > l)
        std::swap(k, l);
    if (k == 1 && l == 1)
        return signed_list(qt, {{6, 1}, {8, 1}, {10, 1}, {12, 1}});
    if (k == 1)
        return signed_list(qt, {{-7, 1}, {-11, 1}});
    return signed_list(qt, {{2, 1}, {8, 1}, {12, 1}});
}

Denominator type_f4(int k, int l)
{
    SpectralScalar qs = SpectralScalar::q_s();
    if (k > l)
        std::swap(k, l);
    switch (10 * k + l) {
    case 11: return signed_list(qs, {{4, 1}, {10, 1}, {12, 1}, {18, 1}});
    case 12: return signed_list(qs, {{-6, 1}, {-8, 1}, {-10, 1}, {-12, 1}, {-14, 1}, {-16, 1}});
    case 13: return signed_list(qs, {{7, 1}, {9, 1}, {13, 1}, {15, 1}});
    case 14: return signed_list(qs, {{-8, 1}, {-14, 1}});
    case 22:
        return signed_list(qs, {{4, 1}, {6, 1}, {8, 2}, {10, 2}, {12, 2}, {14, 2}, {16, 1}, {18, 1}});
    case 23: return signed_list(qs, {{-5, 1}, {-7, 1}, {-9, 1}, {-11, 2}, {-13, 1}, {-15, 1}, {-17, 1}});
    case 24: return signed_list(qs, {{6, 1}, {10, 1}, {12, 1}, {16, 1}});
    case 33: return signed_list(qs, {{2, 1}, {6, 1}, {8, 1}, {10, 1}, {12, 2}, {16, 1}, {18, 1}});
    case 34: return signed_list(qs, {{-3, 1}, {-7, 1}, {-11, 1}, {-13, 1}, {-17, 1}});
    default: return signed_list(qs, {{2, 1}, {8, 1}, {12, 1}, {18, 1}});
    }
}

Denominator type_d4_3(int k, int l)
{
    Builder b;
    auto q = [](int e) { return SpectralScalar::q().pow(e); };
    SpectralScalar w = SpectralScalar::omega();
    if (k > l)
        std::swap(k, l);
    if (k == 1 && l == 1) {
        b.lin(q(2)).lin(q(6)).lin(w * q(4)).lin(w.pow(2) * q(4));
    } else if (k == 1) {
        b.pow(3, -q(9)).pow(3, -q(15));
    } else {
        b.pow(3, q(6)).pow(3, q(12), 2).pow(3, q(18));
    }
    return b.done();
}

Denominator type_e6_2(int k, int l)
{
    Builder b;
    auto q = [](int e) { return SpectralScalar::q().pow(e); };
    if (k > l)
        std::swap(k, l);
    // z^2 factors: (z^2 - c) with c = sign * q^e
    auto sq = [&](int sign, std::initializer_list<std::pair<int, int>> items) {
        for (auto [e, mult] : items)
            b.pow(2, sign > 0 ? q(e) : -q(e), mult);
    };
    switch (10 * k + l) {
    case 11: return signed_list(SpectralScalar::q(), {{2, 1}, {-6, 1}, {8, 1}, {-12, 1}});
    case 12:
        return signed_list(SpectralScalar::q(), {{-3, 1}, {5, 1}, {7, 1}, {-7, 1}, {-9, 1}, {11, 1}});
    case 13: sq(-1, {{8, 1}, {12, 1}, {16, 1}, {20, 1}}); break;
    case 14: sq(-1, {{10, 1}, {18, 1}}); break;
    case 22:
        return signed_list(SpectralScalar::q(), {{2, 1}, {4, 1}, {6, 1}, {8, 2}, {10, 1}, {-4, 1}, {-6, 2},
                                                 {-8, 1}, {-10, 1}, {-12, 1}});
    case 23: sq(-1, {{6, 1}, {10, 2}, {14, 2}, {18, 2}, {22, 1}}); break;
    case 24: sq(-1, {{8, 1}, {12, 1}, {16, 1}, {20, 1}}); break;
    case 33: sq(1, {{4, 1}, {8, 2}, {12, 3}, {16, 3}, {20, 2}, {24, 1}}); break;
    case 34: sq(1, {{6, 1}, {10, 1}, {14, 2}, {18, 2}, {22, 1}}); break;
    default: sq(1, {{4, 1}, {12, 1}, {16, 1}, {24, 1}}); break;
    }
    return b.done();
}

Denominator compute(const AffineData& d, const AdeQuiverData* quiver, int i, int j)
{
    int n = d.type().n;
    switch (d.family()) {
    case Family::A1:
    case Family::D1:
    case Family::E6_1:
    case Family::E7_1:
    case Family::E8_1:
        return ade(*quiver, i, j);
    case Family::B1: return type_b(n, i, j);
    case Family::C1: return type_c(n, i, j);
    case Family::A2_odd: return type_a_odd(n, i, j);
    case Family::A2_even: return type_a_even(n, i, j);
    case Family::D2: return type_d_twisted(n, i, j);
    case Family::G2_1: return type_g2(i, j);
    case Family::F4_1: return type_f4(i, j);
    case Family::D4_3: return type_d4_3(i, j);
    case Family::E6_2: return type_e6_2(i, j);
    }
    throw Error("unknown family");
}

}  // namespace

DenominatorTable::DenominatorTable(const AffineData& d) : data_(d)
{
    int r = d.rank();
    std::optional<AdeQuiverData> quiver;
    if (d.simply_laced())
        quiver.emplace(d.gfin());
    table_.assign(r, std::vector<Denominator>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j) {
            table_[i - 1][j - 1] = compute(d, quiver ? &*quiver : nullptr, i, j);
            table_[j - 1][i - 1] = table_[i - 1][j - 1];
            for (const auto& [root, m] : table_[i - 1][j - 1].roots.roots())
                max_q6_ = std::max(max_q6_, root.q6());
        }
}

const Denominator& DenominatorTable::get(int i, int j) const
{
    if (!data_.valid_node(i) || !data_.valid_node(j))
        throw Error("node out of range for " + data_.type().name());
    return table_[i - 1][j - 1];
}

}  // namespace qaffine
