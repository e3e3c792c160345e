#include "qaffine/finite_roots.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include <boost/rational.hpp>

namespace qaffine {

Diagram Diagram::chain(int n)
{
    Diagram g(n);
    for (int i = 1; i < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

void Diagram::add_edge(int i, int j)
{
    adj_.at(i - 1).push_back(j);
    adj_.at(j - 1).push_back(i);
}

bool Diagram::adjacent(int i, int j) const
{
    const auto& a = neighbours(i);
    return std::find(a.begin(), a.end(), j) != a.end();
}

int Diagram::dd(int i, int j) const
{
    std::vector<int> dist(adj_.size(), -1);
    std::queue<int> bfs;
    dist.at(i - 1) = 0;
    bfs.push(i);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        if (u == j)
            return dist[u - 1];
        for (int v : neighbours(u))
            if (dist[v - 1] < 0) {
                dist[v - 1] = dist[u - 1] + 1;
                bfs.push(v);
            }
    }
    throw Error("nodes " + std::to_string(i) + " and " + std::to_string(j) + " are disconnected");
}

FinType parse_fin_type(const std::string& s)
{
    if (s.size() < 2 || (s[0] != 'A' && s[0] != 'D' && s[0] != 'E'))
        throw ParseError("expected finite type A<n>, D<n> or E<n>", 0);
    int n = 0;
    try {
        n = std::stoi(s.substr(1));
    } catch (const std::exception&) {
        throw ParseError("bad rank in finite type", 1);
    }
    FinType t{s[0], n};
    bool ok = (t.series == 'A' && n >= 1) || (t.series == 'D' && n >= 4) ||
              (t.series == 'E' && n >= 6 && n <= 8);
    if (!ok)
        throw RankOutOfRange("finite type " + s + " is not supported");
    return t;
}

Diagram fin_diagram(FinType type)
{
    int n = type.rank;
    switch (type.series) {
    case 'A':
        return Diagram::chain(n);
    case 'D': {
        Diagram h(n);
        for (int i = 1; i < n - 1; ++i)
            h.add_edge(i, i + 1);
        h.add_edge(n - 2, n);
        return h;
    }
    case 'E': {
        // chain 1-3-4-5-..., node 2 attached to 4
        Diagram h(n);
        h.add_edge(1, 3);
        for (int i = 3; i < n; ++i)
            h.add_edge(i, i + 1);
        h.add_edge(2, 4);
        return h;
    }
    }
    throw Error("unknown finite series");
}

IntMatrix cartan_matrix(FinType type)
{
    Diagram g = fin_diagram(type);
    int n = type.rank;
    IntMatrix c(n, std::vector<int>(n, 0));
    for (int i = 1; i <= n; ++i) {
        c[i - 1][i - 1] = 2;
        for (int j : g.neighbours(i))
            c[i - 1][j - 1] = -1;
    }
    return c;
}

std::vector<RootVec> enumerate_positive_roots(const IntMatrix& cartan)
{
    int n = static_cast<int>(cartan.size());
    std::vector<RootVec> roots;
    std::set<RootVec> seen;
    for (int i = 0; i < n; ++i) {
        RootVec a(n, 0);
        a[i] = 1;
        roots.push_back(a);
        seen.insert(a);
    }
    // closure under beta -> beta + alpha_i when <h_i, beta> < 0 (simply laced: strings of length 1)
    for (std::size_t k = 0; k < roots.size(); ++k) {
        for (int i = 0; i < n; ++i) {
            RootVec beta = roots[k];
            int pairing = 0;
            for (int j = 0; j < n; ++j)
                pairing += cartan[i][j] * beta[j];
            if (pairing < 0) {
                beta[i] += 1;
                if (seen.insert(beta).second)
                    roots.push_back(beta);
            }
        }
    }
    return roots;
}

FinRootSystem::FinRootSystem(FinType type)
    : type_(type), diagram_(fin_diagram(type)), cartan_(cartan_matrix(type)),
      positive_(enumerate_positive_roots(cartan_))
{
}

int FinRootSystem::coxeter_number() const
{
    int n = rank();
    switch (type_.series) {
    case 'A':
        return n + 1;
    case 'D':
        return 2 * n - 2;
    default:
        return n == 6 ? 12 : n == 7 ? 18 : 30;
    }
}

RootVec FinRootSystem::simple_root(int i) const
{
    RootVec a(rank(), 0);
    a.at(i - 1) = 1;
    return a;
}

FinWeight FinRootSystem::to_weight(const RootVec& beta) const { return {mat_apply(cartan_, beta)}; }

std::optional<RootVec> FinRootSystem::to_root(const FinWeight& w) const
{
    using Q = boost::rational<long long>;
    int n = rank();
    std::vector<std::vector<Q>> m(n, std::vector<Q>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m[i][j] = cartan_[i][j];
        m[i][n] = w.coords.at(i);
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (m[piv][col].numerator() == 0)
            ++piv;
        std::swap(m[piv], m[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].numerator() == 0)
                continue;
            Q f = m[r][col] / m[col][col];
            for (int c = col; c <= n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    RootVec out(n);
    for (int i = 0; i < n; ++i) {
        Q x = m[i][n] / m[i][i];
        if (x.denominator() != 1)
            return std::nullopt;
        out[i] = static_cast<int>(x.numerator());
    }
    return out;
}

int FinRootSystem::inner(const RootVec& a, const RootVec& b) const
{
    RootVec cb = mat_apply(cartan_, b);
    return std::inner_product(a.begin(), a.end(), cb.begin(), 0);
}

FinWeight FinRootSystem::reflect(int i, const FinWeight& w) const
{
    FinWeight out = w;
    int c = w.coords.at(i - 1);
    for (int j = 0; j < rank(); ++j)
        out.coords[j] -= c * cartan_[i - 1][j];
    return out;
}

RootVec FinRootSystem::reflect(int i, const RootVec& beta) const
{
    RootVec out = beta;
    int c = 0;
    for (int j = 0; j < rank(); ++j)
        c += cartan_[i - 1][j] * beta[j];
    out[i - 1] -= c;
    return out;
}

FinWeight FinRootSystem::apply(const DiagramAutomorphism& rho, const FinWeight& w) const
{
    FinWeight out{std::vector<int>(rank())};
    for (int j = 1; j <= rank(); ++j)
        out.coords[rho(j) - 1] = w.coords[j - 1];
    return out;
}

RootVec FinRootSystem::apply(const DiagramAutomorphism& rho, const RootVec& beta) const
{
    RootVec out(rank());
    for (int j = 1; j <= rank(); ++j)
        out[rho(j) - 1] = beta[j - 1];
    return out;
}

FinWeight FinRootSystem::apply_word(const Word& word, const FinWeight& w) const
{
    FinWeight out = w;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (const int* i = std::get_if<int>(&*it))
            out = reflect(*i, out);
        else
            out = apply(std::get<DiagramAutomorphism>(*it), out);
    }
    return out;
}

RootVec FinRootSystem::apply_word(const Word& word, const RootVec& beta) const
{
    RootVec out = beta;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (const int* i = std::get_if<int>(&*it))
            out = reflect(*i, out);
        else
            out = apply(std::get<DiagramAutomorphism>(*it), out);
    }
    return out;
}

IntMatrix FinRootSystem::word_matrix(const Word& word) const
{
    int n = rank();
    IntMatrix m(n, std::vector<int>(n));
    for (int j = 1; j <= n; ++j) {
        RootVec img = apply_word(word, simple_root(j));
        for (int i = 0; i < n; ++i)
            m[i][j - 1] = img[i];
    }
    return m;
}

bool FinRootSystem::is_positive_root(const RootVec& beta) const { return root_index(beta) >= 0; }

int FinRootSystem::root_index(const RootVec& beta) const
{
    auto it = std::find(positive_.begin(), positive_.end(), beta);
    return it == positive_.end() ? -1 : static_cast<int>(it - positive_.begin());
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b)
{
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < m; ++j)
                    c[i][j] += a[i][l] * b[l][j];
    return c;
}

RootVec mat_apply(const IntMatrix& a, const RootVec& v)
{
    RootVec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += a[i][j] * v[j];
    return out;
}

IntMatrix identity_matrix(int n)
{
    IntMatrix m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

bool is_nonneg(const RootVec& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; }); }
bool is_nonpos(const RootVec& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; }); }
bool is_zero(const RootVec& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }); }

RootVec negate(RootVec v)
{
    for (int& x : v)
        x = -x;
    return v;
}

std::string root_string(const RootVec& beta)
{
    bool compact = std::all_of(beta.begin(), beta.end(), [](int x) { return x >= 0 && x <= 9; });
    std::string s = "(";
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (!compact && i > 0)
            s += ',';
        s += std::to_string(beta[i]);
    }
    return s + ")";
}

}  // namespace qaffine
