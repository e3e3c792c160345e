#include <doctest.h>

#include "qaffine/blocks.hpp"

using namespace qaffine;

namespace {

SpectralScalar mq(int k) { return (-SpectralScalar::q()).pow(k); }
SpectralScalar qpow(int k) { return SpectralScalar::q().pow(k); }

struct Setup {
    explicit Setup(AffineType t) : inv(AffineData::build(t)), q(default_qdatum(inv.data())) {}
    Invariants inv;
    QDatum q;
};

// leading principal minors by fraction-free elimination
bool positive_definite(IntMatrix m)
{
    const int n = static_cast<int>(m.size());
    long long prev = 1;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = m[i][j];
    for (int k = 0; k < n; ++k) {
        if (a[k][k] <= 0)
            return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return true;
}

int form(const IntMatrix& c, const RootVec& a, const RootVec& b)
{
    int v = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            v += a[i] * c[i][j] * b[j];
    return v;
}

}  // namespace

TEST_CASE("gram equals the Cartan matrix")
{
    for (const AffineType& t : desk_types()) {
        Setup s(t);
        CAPTURE(t.name());
        GramResult g = gram(s.inv, s.q);
        CHECK(g.equal());
        CHECK(positive_definite(g.matrix));
        for (std::size_t i = 0; i < g.matrix.size(); ++i)
            CHECK(g.matrix[i][i] == 2);
    }
    Setup c4({Family::C1, 4});
    GramResult g = gram(c4.inv, c4.q);
    CHECK(g.matrix[4][2] == -1);
    CHECK(g.matrix[4][3] == 0);
}

TEST_CASE("psi_lattice")
{
    Setup a4({Family::A1, 4});
    auto s = simple_root_functions(a4.inv, a4.q);
    for (int i = 0; i < 4; ++i) {
        RootVec e(4, 0);
        e[i] = 1;
        CHECK(psi_lattice(a4.inv, a4.q, s[i]) == e);
    }
    auto f = a4.inv.e_of({{{2, mq(-1)}}});
    CHECK(psi_lattice(a4.inv, a4.q, f) == RootVec{1, 1, 0, 0});
    SigmaPoint p{3, mq(-4)};
    auto z = a4.inv.e_of({{p, a4.inv.dual_shift(p, 1)}});
    CHECK(psi_lattice(a4.inv, a4.q, z) == RootVec{0, 0, 0, 0});

    // round trip on integer vectors
    Setup d5({Family::D1, 5});
    auto sd = simple_root_functions(d5.inv, d5.q);
    RootVec n{2, -1, 0, 3, -2};
    SigmaFunction sum;
    for (int i = 0; i < 5; ++i)
        sum += sd[i].scaled(n[i]);
    CHECK(psi_lattice(d5.inv, d5.q, sum) == n);

    // the isometry on root pairs
    Setup e6({Family::E6_1, 6});
    const auto& roots = e6.q.fin().positive_roots();
    for (std::size_t a = 0; a < roots.size(); a += 5)
        for (std::size_t b = 0; b < roots.size(); b += 7) {
            int lhs = e6.inv.pairing(e6.inv.s_func(phi_q(e6.q, e6.inv.data(), roots[a])),
                                     e6.inv.s_func(phi_q(e6.q, e6.inv.data(), roots[b])));
            CHECK(lhs == form(e6.q.fin().cartan(), roots[a], roots[b]));
        }
}

TEST_CASE("block labels")
{
    Setup a4({Family::A1, 4});
    const AffineData& d = a4.inv.data();
    for (const auto& e : sigma_q(a4.q, d)) {
        BlockLabel l = block_label(a4.inv, a4.q, {{e.point}});
        REQUIRE(l.components.size() == 1);
        CHECK(l.components[0].coords == e.beta);
        CHECK(l.components[0].t.is_one());
    }
    CHECK(block_label(a4.inv, a4.q, {}).is_zero());

    // kernel list in a generic translate
    SpectralScalar t(5, 1);
    AffineWeightList kernel;
    for (int k = 0; k <= 4; ++k)
        kernel.items.push_back({1, t * qpow(2 * k)});
    CHECK(block_label(a4.inv, a4.q, kernel).is_zero());

    Setup b3({Family::B1, 3});
    AffineWeightList w{{{1, SpectralScalar::q_s()}, {2, -SpectralScalar::q_s() * qpow(-1)}}};
    AffineWeightList w2 = w;
    w2.items.push_back({3, t});
    w2.items.push_back({3, t * qpow(5)});
    CHECK(block_label(b3.inv, b3.q, w) == block_label(b3.inv, b3.q, w2));

    AffineWeightList shifted;
    for (const auto& p : w.items)
        shifted.items.push_back({p.node, p.param * SpectralScalar::q_pow(1, 6)});
    BlockLabel l1 = block_label(b3.inv, b3.q, w), l2 = block_label(b3.inv, b3.q, shifted);
    CHECK(!(l1 == l2));
    REQUIRE(l1.components.size() == 1);
    REQUIRE(l2.components.size() == 1);
    CHECK(l1.components[0].coords == l2.components[0].coords);
    CHECK(component_name(l2.components[0].t) == "t=q^(1/6)");
}

TEST_CASE("component classification")
{
    for (const AffineType& t : desk_types()) {
        AffineData d = AffineData::build(t);
        auto q = default_qdatum(d);
        CAPTURE(t.name());
        for (const auto& e : sigma_q(q, d))
            CHECK(component_of(d, e.point).is_one());
        SpectralScalar off = SpectralScalar::q_pow(1, 6);
        for (const auto& e : sigma_q(q, d))
            CHECK(component_of(d, {e.point.node, e.point.param * off}) == off);
    }
}

TEST_CASE("partition")
{
    Setup a3({Family::A1, 3});
    SpectralScalar t(7, 1);
    std::vector<AffineWeightList> mods = {
        {{{1, SpectralScalar::one()}}},
        {{{1, t}}},
        {{{1, t}, {1, t * qpow(2)}, {1, t * qpow(4)}, {1, t * qpow(6)}}},
        {{{1, qpow(8)}}},
    };
    // kernel augmentation leaves the label alone; (1, q^8) = D^2 (1, 1)
    auto groups = partition_blocks(a3.inv, a3.q, mods);
    REQUIRE(groups.size() == 3);
    CHECK(block_label(a3.inv, a3.q, mods[2]).is_zero());
    CHECK(groups[0] == std::vector<std::size_t>{0, 3});
    CHECK(groups[1] == std::vector<std::size_t>{1});
    CHECK(groups[2] == std::vector<std::size_t>{2});
    CHECK(partition_blocks(a3.inv, a3.q, {}).empty());
}

TEST_CASE("delta0 census")
{
    for (const AffineType& t : desk_types()) {
        Setup s(t);
        CAPTURE(t.name());
        auto roots = delta0(s.inv, s.q);
        CHECK(roots.size() == 2 * s.q.fin().positive_roots().size());
        for (const auto& f : roots)
            CHECK(s.inv.pairing(f, f) == 2);
    }
}
