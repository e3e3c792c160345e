#include "qaffine/qdata.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "qaffine/errors.hpp"
#include "qaffine/quantum_cartan.hpp"

namespace qaffine {

namespace {

std::vector<int> orbit_of(const DiagramAutomorphism& rho, int i)
{
    std::vector<int> out{i};
    for (int j = rho(i); j != i; j = rho(j))
        out.push_back(j);
    return out;
}

DiagramAutomorphism identity_aut(int n)
{
    DiagramAutomorphism a;
    a.perm.resize(n);
    std::iota(a.perm.begin(), a.perm.end(), 1);
    return a;
}

bool is_identity(const DiagramAutomorphism& a)
{
    for (int i = 1; i <= static_cast<int>(a.perm.size()); ++i)
        if (a(i) != i)
            return false;
    return true;
}

// orbit element of maximal height, ties to the smaller index
int top_of(const std::vector<int>& orbit, const std::vector<int>& xi)
{
    int best = orbit.front();
    for (int j : orbit)
        if (xi[j - 1] > xi[best - 1] || (xi[j - 1] == xi[best - 1] && j < best))
            best = j;
    return best;
}

// xi along the orbit of top drops by exactly 2 per application of rho
bool descends_by_two(const DiagramAutomorphism& rho, const std::vector<int>& xi, int top)
{
    int j = top;
    for (int k = 1; k < static_cast<int>(orbit_of(rho, top).size()); ++k) {
        int next = rho(j);
        if (xi[next - 1] != xi[j - 1] - 2)
            return false;
        j = next;
    }
    return true;
}

std::string edge_name(int i, int j) { return std::to_string(i) + "-" + std::to_string(j); }

}  // namespace

std::vector<QViolation> validate_qdatum(const FinRootSystem& fin, const DiagramAutomorphism& rho,
                                        const std::vector<int>& xi)
{
    const int n = fin.rank();
    if (static_cast<int>(xi.size()) != n || static_cast<int>(rho.perm.size()) != n)
        throw InvalidQDatum("height function and automorphism must have one entry per node");
    std::vector<QViolation> out;
    int ord = 1;
    for (int i = 1; i <= n; ++i)
        ord = std::lcm(ord, static_cast<int>(orbit_of(rho, i).size()));
    auto dsize = [&](int i) { return static_cast<int>(orbit_of(rho, i).size()); };

    for (int i = 1; i <= n; ++i) {
        for (int j : fin.diagram().neighbours(i)) {
            int di = dsize(i), dj = dsize(j);
            if (di == dj) {
                if (i < j && std::abs(xi[i - 1] - xi[j - 1]) != di)
                    out.push_back({1, i, j, "heights across edge " + edge_name(i, j) + " must differ by " +
                                                std::to_string(di)});
            } else if (di == 1 && dj == ord) {
                int count = 0;
                for (int jo : orbit_of(rho, j))
                    if (std::abs(xi[i - 1] - xi[jo - 1]) == 1 && descends_by_two(rho, xi, jo))
                        ++count;
                if (count != 1)
                    out.push_back({2, i, j, "edge " + edge_name(i, j) + " has " + std::to_string(count) +
                                                " admissible orbit representatives, expected one"});
            }
        }
    }
    std::vector<bool> seen(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        if (seen[i])
            continue;
        auto orbit = orbit_of(rho, i);
        for (int j : orbit)
            seen[j] = true;
        int top = top_of(orbit, xi);
        if (!descends_by_two(rho, xi, top))
            out.push_back({3, top, 0, "heights along the orbit of " + std::to_string(top) +
                                          " do not descend by 2"});
    }
    return out;
}

QDatum::QDatum(FinType fin, DiagramAutomorphism rho, std::vector<int> xi, std::vector<int> pi, bool is_default,
               std::vector<int> order)
    : fin_(fin), rho_(std::move(rho)), xi_(std::move(xi)), pi_(std::move(pi)), is_default_(is_default)
{
    const int n = fin_.rank();
    if (rho_.perm.empty())
        rho_ = identity_aut(n);
    if (pi_.empty()) {
        pi_.resize(n);
        std::iota(pi_.begin(), pi_.end(), 1);
    }
    violations_ = validate_qdatum(fin_, rho_, xi_);
    if (!violations_.empty())
        throw InvalidQDatum(violations_.front().message);

    d_.resize(n);
    for (int i = 1; i <= n; ++i) {
        d_[i - 1] = static_cast<int>(orbit_of(rho_, i).size());
        ord_ = std::lcm(ord_, d_[i - 1]);
    }

    std::vector<int> tops;
    std::vector<bool> seen(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        if (seen[i])
            continue;
        auto orbit = orbit_of(rho_, i);
        for (int j : orbit)
            seen[j] = true;
        tops.push_back(top_of(orbit, xi_));
    }
    if (order.empty()) {
        order = tops;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return xi_[a - 1] > xi_[b - 1]; });
    } else {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::sort(tops.begin(), tops.end());
        if (sorted != tops)
            throw InvalidQDatum("ordering must list every orbit representative once");
        for (std::size_t a = 0; a + 1 < order.size(); ++a)
            if (xi_[order[a] - 1] < xi_[order[a + 1] - 1])
                throw InvalidQDatum("ordering must be non-increasing in height");
    }
    tau_.assign(order.begin(), order.end());
    if (!is_identity(rho_))
        tau_.push_back(rho_);
    tau_mat_ = fin_.word_matrix(tau_);
    Word inv;
    if (!is_identity(rho_)) {
        DiagramAutomorphism back;
        back.perm.resize(n);
        for (int i = 1; i <= n; ++i)
            back.perm[rho_(i) - 1] = i;
        inv.push_back(back);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        inv.push_back(*it);
    tau_inv_ = fin_.word_matrix(inv);

    gamma_.resize(n);
    for (int i = 1; i <= n; ++i) {
        FinWeight lam{std::vector<int>(n, 0)};
        lam.coords[i - 1] = 1;
        FinWeight moved = lam;
        for (int k = 0; k < d_[i - 1]; ++k)
            moved = fin_.apply_word(tau_, moved);
        for (int j = 0; j < n; ++j)
            lam.coords[j] -= moved.coords[j];
        auto root = fin_.to_root(lam);
        if (!root)
            throw InvalidQDatum("gamma is not in the root lattice");
        gamma_[i - 1] = *root;
    }

    // psi^{-1}(Delta^+ x {0}): walk down from xi_i until the first sign change
    const auto& pos = fin_.positive_roots();
    std::vector<std::optional<IQEntry>> slot(pos.size());
    for (int i = 1; i <= n; ++i) {
        RootVec beta = gamma_[i - 1];
        int p = xi_[i - 1];
        while (true) {
            int idx = fin_.root_index(beta);
            if (idx < 0)
                throw InvalidQDatum("gamma^Q is not a positive root");
            if (slot[idx])
                throw InvalidQDatum("psi_Q is not injective on I_Q");
            slot[idx] = IQEntry{i, p};
            beta = tau_power(d_[i - 1], beta);
            p -= 2 * d_[i - 1];
            if (!is_nonneg(beta))
                break;
        }
    }
    for (auto& s : slot) {
        if (!s)
            throw InvalidQDatum("psi_Q misses a positive root");
        iq_.push_back(*s);
    }
}

RootVec QDatum::tau_power(int e, const RootVec& beta) const
{
    const IntMatrix& m = e >= 0 ? tau_mat_ : tau_inv_;
    RootVec out = beta;
    for (int k = 0; k < std::abs(e); ++k)
        out = mat_apply(m, out);
    return out;
}

std::optional<PsiValue> QDatum::psi(int i, int p) const
{
    if (i < 1 || i > fin_.rank())
        return std::nullopt;
    const int step = 2 * d(i);
    int diff = p - xi(i);
    if (diff % step != 0)
        return std::nullopt;
    PsiValue v{gamma(i), 0};
    int count = diff / step;
    int e = count > 0 ? -d(i) : d(i);
    int dm = count > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(count); ++k) {
        v.beta = tau_power(e, v.beta);
        if (!is_nonneg(v.beta)) {
            v.beta = negate(v.beta);
            v.m += dm;
        }
    }
    return v;
}

IQEntry QDatum::psi_inverse(const RootVec& beta) const
{
    int idx = fin_.root_index(beta);
    if (idx < 0)
        throw NotInHatIQ("not a positive root: " + root_string(beta));
    return iq_[idx];
}

namespace {

QDatum ade_datum(const AffineData& d)
{
    FinType t = d.gfin();
    return QDatum(t, identity_aut(t.rank), default_ade_heights(t), {}, true);
}

}  // namespace

QDatum default_qdatum(const AffineData& d)
{
    const int n = d.type().n;
    switch (d.family()) {
    case Family::B1: {
        int N = 2 * n - 1;
        DiagramAutomorphism rho{std::vector<int>(N)};
        std::vector<int> xi(N), pi(N);
        for (int k = 1; k <= N; ++k) {
            rho.perm[k - 1] = 2 * n - k;
            pi[k - 1] = std::min(k, 2 * n - k);
        }
        for (int k = 1; k <= n - 1; ++k) {
            xi[k - 1] = 2 * n - 1 - 2 * k;
            xi[2 * n - k - 1] = 2 * n - 3 - 2 * k;
        }
        xi[n - 1] = 0;
        return QDatum({'A', N}, rho, xi, pi, true);
    }
    case Family::C1: {
        int N = n + 1;
        DiagramAutomorphism rho = identity_aut(N);
        std::swap(rho.perm[n - 1], rho.perm[n]);
        std::vector<int> xi(N), pi(N);
        for (int k = 1; k <= n; ++k) {
            xi[k - 1] = 1 - k;
            pi[k - 1] = k;
        }
        xi[n] = -n - 1;
        pi[n] = n;
        return QDatum({'D', N}, rho, xi, pi, true);
    }
    case Family::F4_1:
        return QDatum({'E', 6}, DiagramAutomorphism{{6, 2, 5, 4, 3, 1}}, {0, -2, -2, -3, -4, -2},
                      {1, 4, 2, 3, 2, 1}, true);
    case Family::G2_1:
        return QDatum({'D', 4}, DiagramAutomorphism{{3, 2, 4, 1}}, {-1, 0, -3, -5}, {1, 2, 1, 1}, true);
    default:
        return ade_datum(d);
    }
}

QDatum custom_ade_qdatum(const AffineData& d, std::vector<int> xi, std::vector<int> order)
{
    switch (d.family()) {
    case Family::B1:
    case Family::C1:
    case Family::F4_1:
    case Family::G2_1:
        throw InvalidQDatum("custom heights are only supported on simply-laced diagrams");
    default:
        break;
    }
    FinType t = d.gfin();
    bool is_default = xi == default_ade_heights(t) && order.empty();
    return QDatum(t, identity_aut(t.rank), std::move(xi), {}, is_default, std::move(order));
}

Word tau_q(const QDatum& q) { return q.tau(); }

PsiValue psi_q(const QDatum& q, int i, int p)
{
    auto v = q.psi(i, p);
    if (!v)
        throw NotInHatIQ("(" + std::to_string(i) + ", " + std::to_string(p) + ") is not in hat I_Q");
    return *v;
}

int fin_involution(FinType t, int i)
{
    switch (t.series) {
    case 'A':
        return t.rank + 1 - i;
    case 'D':
        if (t.rank % 2 == 1 && i >= t.rank - 1)
            return 2 * t.rank - 1 - i;
        return i;
    default:
        if (t.rank == 6) {
            static const int inv[] = {6, 2, 5, 4, 3, 1};
            return inv[i - 1];
        }
        return i;
    }
}

std::vector<IQEntry> i_q_interval(const QDatum& q, const AffineData& d)
{
    int hv = q.ord() == 1 ? q.fin().coxeter_number() : d.hvee();
    std::vector<IQEntry> out;
    for (int i = 1; i <= q.fin().rank(); ++i) {
        int lo = q.xi(fin_involution(q.fin().type(), i)) - q.ord() * hv;
        for (int p = q.xi(i); p > lo; p -= 2 * q.d(i))
            out.push_back({i, p});
    }
    return out;
}

SigmaPoint esig(const AffineData& d, const QDatum& q, int i, int p)
{
    const SpectralScalar minus = SpectralScalar::minus_one();
    const SpectralScalar qt = SpectralScalar::q_pow(1, q.ord());
    SpectralScalar x;
    switch (d.family()) {
    case Family::B1:
        x = minus.pow(i + d.type().n) * qt.pow(p);
        break;
    case Family::F4_1:
        x = minus.pow(q.pi(i)) * qt.pow(p);
        break;
    default:
        x = (minus * qt).pow(p);
        break;
    }
    return {q.pi(i), x};
}

SigmaPoint twist_star(const AffineData& d, SigmaPoint u)
{
    const SpectralScalar a = u.param;
    const SpectralScalar minus = SpectralScalar::minus_one();
    const SpectralScalar im = SpectralScalar::sqrt_minus_one();
    const int i = u.node;
    switch (d.family()) {
    case Family::A2_even:
    case Family::A2_odd: {
        int N = d.gfin().rank;
        if (i <= (N + 1) / 2)
            return u;
        return {N + 1 - i, minus.pow(N) * a};
    }
    case Family::D2: {
        int n = d.type().n;
        if (i <= n - 1)
            return {i, im.pow(n + 1 - i) * a};
        return {n, minus.pow(i) * a};
    }
    case Family::E6_2:
        switch (i) {
        case 1: return {1, a};
        case 3: return {2, a};
        case 5: return {2, -a};
        case 6: return {1, -a};
        case 4: return {3, im * a};
        case 2: return {4, im * a};
        default: break;
        }
        break;
    default:
        break;
    }
    throw Error("twist_star is defined for A2, D2 and E6-2 only");
}

SigmaPoint twist_dagger(SigmaPoint u)
{
    const SpectralScalar w = SpectralScalar::omega();
    switch (u.node) {
    case 1: return {1, u.param};
    case 2: return {2, u.param};
    case 3: return {1, w * u.param};
    case 4: return {1, w.pow(2) * u.param};
    default: throw Error("twist_dagger expects a node of D4");
    }
}

SigmaPoint phi_q(const QDatum& q, const AffineData& d, const RootVec& beta)
{
    IQEntry e = q.psi_inverse(beta);
    SigmaPoint pt = esig(d, q, e.node, e.p);
    switch (d.family()) {
    case Family::A2_even:
    case Family::A2_odd:
    case Family::D2:
    case Family::E6_2:
        pt = twist_star(d, pt);
        break;
    case Family::D4_3:
        pt = twist_dagger(pt);
        break;
    default:
        break;
    }
    return d.canonical(pt);
}

std::vector<SigmaQEntry> sigma_q(const QDatum& q, const AffineData& d)
{
    std::vector<SigmaQEntry> out;
    const auto& pos = q.fin().positive_roots();
    for (std::size_t k = 0; k < pos.size(); ++k)
        out.push_back({phi_q(q, d, pos[k]), pos[k], q.iq()[k]});
    return out;
}

namespace {

// p with base^p == x
std::optional<int> exponent_in(SpectralScalar x, SpectralScalar base)
{
    if (base.q6() == 0 || x.q6() % base.q6() != 0)
        return std::nullopt;
    int p = x.q6() / base.q6();
    if (base.pow(p) != x)
        return std::nullopt;
    return p;
}

bool parity_ok(std::optional<int> p, int residue) { return p && ((*p - residue) % 2 + 2) % 2 == 0; }

bool contains_rep(const AffineData& d, int i, SpectralScalar x)
{
    const SpectralScalar minus = SpectralScalar::minus_one();
    const SpectralScalar mq = minus * SpectralScalar::q();
    const int n = d.type().n;
    switch (d.family()) {
    case Family::A1:
    case Family::D1:
    case Family::E6_1:
    case Family::E7_1:
    case Family::E8_1:
        return parity_ok(exponent_in(x, mq), d.dd(1, i));
    case Family::B1:
        if (i < n)
            x = x / (minus.pow(n + i) * SpectralScalar::q_s());
        return x.phase() == 0 && x.q6() % SpectralScalar::kQDenominator == 0;
    case Family::C1:
        return parity_ok(exponent_in(x, minus * SpectralScalar::q_s()), d.dd(1, i));
    case Family::F4_1: {
        x = x / minus.pow(i);
        int want = i == 3 ? 3 : 0;
        return x.phase() == 0 && ((x.q6() % 6) + 6) % 6 == want;
    }
    case Family::G2_1:
        return parity_ok(exponent_in(x, minus * SpectralScalar::q_t()), d.dd(2, i));
    case Family::A2_even:
        return exponent_in(x, mq).has_value();
    case Family::A2_odd:
        if (i < n)
            return parity_ok(exponent_in(x, mq), i + 1) || parity_ok(exponent_in(-x, mq), i + 1);
        return parity_ok(exponent_in(x, mq), n + 1);
    case Family::D2:
        if (i < n)
            return parity_ok(exponent_in(x / SpectralScalar::sqrt_minus_one().pow(n + 1 - i), mq), i + 1);
        return parity_ok(exponent_in(x, mq), n + 1) || parity_ok(exponent_in(-x, mq), n + 1);
    case Family::E6_2:
        if (i <= 2)
            return parity_ok(exponent_in(x, SpectralScalar::q()), i + 1) ||
                   parity_ok(exponent_in(-x, SpectralScalar::q()), i + 1);
        return parity_ok(exponent_in(x / SpectralScalar::sqrt_minus_one(), mq), i + 1);
    case Family::D4_3:
        if (i == 1) {
            const SpectralScalar w = SpectralScalar::omega();
            for (int t = 0; t < 3; ++t)
                if (parity_ok(exponent_in(x / w.pow(t), SpectralScalar::q()), 0))
                    return true;
            return false;
        }
        return parity_ok(exponent_in(-x, SpectralScalar::q()), 1);
    }
    return false;
}

}  // namespace

bool sigma0_contains(const AffineData& d, SigmaPoint p)
{
    if (!d.valid_node(p.node))
        throw UnclassifiablePoint("node " + std::to_string(p.node) + " is out of range");
    const int m = d.m(p.node);
    for (int t = 0; t < m; ++t)
        if (contains_rep(d, p.node, p.param * SpectralScalar::zeta(t * SpectralScalar::kPhaseModulus / m)))
            return true;
    return false;
}

}  // namespace qaffine
