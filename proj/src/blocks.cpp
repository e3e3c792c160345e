#include "qaffine/blocks.hpp"

#include <algorithm>
#include <map>

#include "qaffine/errors.hpp"

namespace qaffine {

std::vector<SigmaFunction> simple_root_functions(const Invariants& inv, const QDatum& q)
{
    std::vector<SigmaFunction> out;
    const int r = q.fin().rank();
    for (int i = 1; i <= r; ++i)
        out.push_back(inv.s_func(phi_q(q, inv.data(), q.fin().simple_root(i))));
    return out;
}

GramResult gram(const Invariants& inv, const QDatum& q)
{
    auto s = simple_root_functions(inv, q);
    const int r = static_cast<int>(s.size());
    GramResult g;
    g.expected = q.fin().cartan();
    g.matrix.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            g.matrix[i][j] = inv.pairing(s[i], s[j]);
            if (g.matrix[i][j] != g.expected[i][j])
                g.mismatches.push_back({i + 1, j + 1, g.matrix[i][j], g.expected[i][j]});
        }
    return g;
}

RootVec psi_lattice(const Invariants& inv, const QDatum& q, const SigmaFunction& f)
{
    auto s = simple_root_functions(inv, q);
    FinWeight b{std::vector<int>(s.size())};
    for (std::size_t i = 0; i < s.size(); ++i)
        b.coords[i] = inv.pairing(s[i], f);
    auto n = q.fin().to_root(b);
    if (!n)
        throw NotInW0("pairings with the simple roots do not solve integrally");
    SigmaFunction back;
    for (std::size_t i = 0; i < s.size(); ++i)
        back += s[i].scaled((*n)[i]);
    if (!(back == f))
        throw NotInW0("function is not in the span of the simple roots");
    return *n;
}

SpectralScalar component_of(const AffineData& d, SigmaPoint p)
{
    // q^2 stabilizes sigma_0 for every family, so q6 in [0, 12) reaches every translate
    for (int q6 = 0; q6 < 12; ++q6)
        for (int ph = 0; ph < SpectralScalar::kPhaseModulus; ++ph) {
            SpectralScalar t(ph, q6);
            if (sigma0_contains(d, d.canonical({p.node, p.param / t})))
                return t;
        }
    throw UnclassifiablePoint("no translate of sigma_0 contains " + p.to_string());
}

std::string component_name(SpectralScalar t) { return "t=" + t.to_string(); }

namespace {

bool t_less(SpectralScalar a, SpectralScalar b)
{
    return std::pair{a.q6(), a.phase()} < std::pair{b.q6(), b.phase()};
}

}  // namespace

BlockLabel block_label(const Invariants& inv, const QDatum& q, const AffineWeightList& w)
{
    const AffineData& d = inv.data();
    std::map<std::pair<int, int>, AffineWeightList> parts;
    std::map<std::pair<int, int>, SpectralScalar> ts;
    for (const SigmaPoint& p : w.items) {
        if (!d.valid_node(p.node))
            throw UnclassifiablePoint("node " + std::to_string(p.node) + " is out of range");
        SpectralScalar t = component_of(d, p);
        std::pair key{t.q6(), t.phase()};
        ts[key] = t;
        parts[key].items.push_back(d.canonical({p.node, p.param / t}));
    }
    BlockLabel label;
    for (const auto& [key, part] : parts) {
        RootVec coords = psi_lattice(inv, q, inv.e_of(part));
        if (is_zero(coords))
            continue;
        label.components.push_back({ts[key], coords});
    }
    std::sort(label.components.begin(), label.components.end(),
              [](const ComponentLabel& a, const ComponentLabel& b) { return t_less(a.t, b.t); });
    return label;
}

std::vector<std::vector<std::size_t>> partition_blocks(const Invariants& inv, const QDatum& q,
                                                       const std::vector<AffineWeightList>& modules)
{
    std::vector<BlockLabel> seen;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < modules.size(); ++k) {
        BlockLabel l = block_label(inv, q, modules[k]);
        auto it = std::find(seen.begin(), seen.end(), l);
        if (it == seen.end()) {
            seen.push_back(l);
            groups.push_back({k});
        } else {
            groups[it - seen.begin()].push_back(k);
        }
    }
    return groups;
}

std::vector<SigmaFunction> delta0(const Invariants& inv, const QDatum& q)
{
    const AffineData& d = inv.data();
    std::vector<SigmaFunction> out;
    auto push = [&](SigmaPoint p) {
        SigmaFunction f = inv.s_func(p);
        if (std::find(out.begin(), out.end(), f) == out.end())
            out.push_back(f);
    };
    for (const auto& e : sigma_q(q, d)) {
        push(e.point);
        push(inv.dual_shift(e.point, 1));
    }
    return out;
}

}  // namespace qaffine
