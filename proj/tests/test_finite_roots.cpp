#include <doctest.h>

#include "qaffine/finite_roots.hpp"

using namespace qaffine;

namespace {

// Reflection matrix on simple-root coordinates built straight from the definition.
IntMatrix reflection_matrix(const IntMatrix& c, int i)
{
    int n = static_cast<int>(c.size());
    IntMatrix m = identity_matrix(n);
    for (int j = 0; j < n; ++j)
        m[i - 1][j] -= c[i - 1][j];
    return m;
}

}  // namespace

TEST_CASE("reflections in A2")
{
    FinRootSystem a2({'A', 2});
    CHECK(a2.reflect(1, a2.simple_root(1)) == RootVec{-1, 0});
    CHECK(a2.reflect(1, a2.simple_root(2)) == RootVec{1, 1});
    FinWeight w{{3, -2}};
    CHECK(a2.reflect(2, a2.reflect(2, w)) == w);
    CHECK(a2.reflect(1, a2.to_weight({0, 1})) == a2.to_weight({1, 1}));
}

TEST_CASE("apply_word against matrix products")
{
    FinRootSystem a3({'A', 3});
    Word cox{1, 2, 3};
    IntMatrix m = mat_mul(reflection_matrix(a3.cartan(), 1),
                          mat_mul(reflection_matrix(a3.cartan(), 2), reflection_matrix(a3.cartan(), 3)));
    for (int j = 1; j <= 3; ++j)
        CHECK(a3.apply_word(cox, a3.simple_root(j)) == mat_apply(m, a3.simple_root(j)));
    CHECK(a3.apply_word(cox, a3.simple_root(1)) == RootVec{0, 1, 0});
    CHECK(a3.apply_word(Word{}, a3.simple_root(2)) == a3.simple_root(2));

    Word w1{2, 3}, w2{1, 2};
    Word both = w1;
    both.insert(both.end(), w2.begin(), w2.end());
    FinWeight lam{{1, -1, 2}};
    CHECK(a3.apply_word(both, lam) == a3.apply_word(w1, a3.apply_word(w2, lam)));
}

TEST_CASE("D4 folding automorphism")
{
    FinRootSystem d4({'D', 4});
    DiagramAutomorphism rho{{3, 2, 4, 1}};
    CHECK(d4.apply_word(Word{rho}, d4.simple_root(1)) == d4.simple_root(3));
    CHECK(d4.apply(rho, d4.simple_root(3)) == d4.simple_root(4));
    FinWeight lam{{1, 0, 0, 0}};
    CHECK(d4.apply(rho, lam) == FinWeight{{0, 0, 1, 0}});
}

TEST_CASE("positive root counts")
{
    CHECK(FinRootSystem({'A', 2}).positive_roots().size() == 3);
    CHECK(FinRootSystem({'A', 6}).positive_roots().size() == 21);
    CHECK(FinRootSystem({'D', 4}).positive_roots().size() == 12);
    CHECK(FinRootSystem({'D', 6}).positive_roots().size() == 30);
    CHECK(FinRootSystem({'E', 6}).positive_roots().size() == 36);
    CHECK(FinRootSystem({'E', 7}).positive_roots().size() == 63);
    CHECK(FinRootSystem({'E', 8}).positive_roots().size() == 120);
    FinRootSystem a2({'A', 2});
    CHECK(a2.positive_roots()[0] == RootVec{1, 0});
    CHECK(a2.positive_roots()[1] == RootVec{0, 1});
    CHECK(a2.positive_roots()[2] == RootVec{1, 1});
}

TEST_CASE("root norms and reflection invariance")
{
    for (FinType t : {FinType{'A', 5}, FinType{'D', 5}, FinType{'E', 7}}) {
        FinRootSystem rs(t);
        for (const auto& b : rs.positive_roots())
            CHECK(rs.inner(b, b) == 2);
        const auto& roots = rs.positive_roots();
        for (int i = 1; i <= rs.rank(); ++i)
            for (std::size_t k = 0; k + 1 < roots.size(); k += 3)
                CHECK(rs.inner(rs.reflect(i, roots[k]), rs.reflect(i, roots[k + 1])) ==
                      rs.inner(roots[k], roots[k + 1]));
    }
}

TEST_CASE("weight and root coordinates")
{
    FinRootSystem e6({'E', 6});
    for (const auto& b : e6.positive_roots())
        CHECK(e6.to_root(e6.to_weight(b)) == b);
    FinRootSystem a2({'A', 2});
    CHECK_FALSE(a2.to_root(FinWeight{{1, 0}}).has_value());
}

TEST_CASE("diagram distance")
{
    CHECK(fin_diagram({'D', 4}).dd(1, 4) == 2);
    CHECK(Diagram::chain(4).dd(1, 3) == 2);
    CHECK(fin_diagram({'E', 8}).dd(2, 2) == 0);
    CHECK(fin_diagram({'E', 6}).dd(1, 2) == 3);
}
