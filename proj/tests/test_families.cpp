#include <gtest/gtest.h>

#include <leibniz/algebra.hpp>
#include <leibniz/families.hpp>

using namespace leibniz;
namespace fam = leibniz::families;

namespace {

std::vector<TableEntry> unit_entries(std::size_t dim, std::initializer_list<std::array<std::size_t, 3>> ijk)
{
    std::vector<TableEntry> out;
    for (auto [i, j, k] : ijk)
        out.push_back({i, j, basis_vector(dim, k)});
    return out;
}

} // namespace

TEST(Families, SmallTables)
{
    EXPECT_EQ(fam::f1(4).entries(), unit_entries(4, {{{2, 1, 3}}, {{3, 1, 4}}}));
    EXPECT_EQ(fam::f2(4).entries(), unit_entries(4, {{{1, 1, 2}}, {{2, 1, 3}}}));
    const auto R = fam::r_f1(4);
    EXPECT_EQ(R.dim(), 6u);
    EXPECT_EQ(R.nonzero_products(), 10u);
    EXPECT_EQ(R.labels(), (std::vector<std::string>{"e1", "e2", "e3", "e4", "x", "y"}));
    const std::size_t x = fam::x_index(4), y = fam::y_index(4);
    EXPECT_EQ(R.product(1, x), basis_vector(6, 1));
    EXPECT_EQ(R.product(x, 1), (Vector{-1, 0, 0, 0, 0, 0}));
    for (std::size_t i = 2; i <= 4; ++i) {
        Vector v(6);
        v[i - 1] = Rational(static_cast<long>(i - 1));
        EXPECT_EQ(R.product(i, x), v);
        EXPECT_EQ(R.product(i, y), basis_vector(6, i));
    }
}

TEST(Families, F3Table)
{
    // n = 6, alpha = 1: [e_i, e_{7-i}] = (-1)^{i+1} e6 for 2 <= i <= 5.
    const auto F = fam::f3(6, 1);
    EXPECT_EQ(F.product(2, 5), (Vector{0, 0, 0, 0, 0, -1}));
    EXPECT_EQ(F.product(3, 4), (Vector{0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(F.product(4, 3), (Vector{0, 0, 0, 0, 0, -1}));
    EXPECT_EQ(F.product(5, 2), (Vector{0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(F.product(2, 1), basis_vector(6, 3));
    EXPECT_EQ(F.product(1, 2), (Vector{0, 0, -1, 0, 0, 0}));
}

TEST(Families, ParameterErrors)
{
    for (std::size_t n : {0, 1, 2}) {
        EXPECT_THROW(fam::f1(n), ParameterError);
        EXPECT_THROW(fam::f2(n), ParameterError);
        EXPECT_THROW(fam::f3(n, 0), ParameterError);
        EXPECT_THROW(fam::r_f1(n), ParameterError);
    }
    EXPECT_THROW(fam::f3(6, 2), ParameterError);
    EXPECT_THROW(fam::f3(6, -1), ParameterError);
    try {
        (void)fam::f3(5, 1);
        FAIL() << "f3(5, 1) accepted";
    } catch (const ParameterError& e) {
        EXPECT_NE(std::string(e.what()).find("alpha must be 0 for odd n"), std::string::npos);
    }
}

TEST(Families, AllSatisfyIdentity)
{
    for (std::size_t n = 3; n <= 12; ++n) {
        EXPECT_TRUE(is_leibniz(fam::f1(n))) << n;
        EXPECT_TRUE(is_leibniz(fam::f2(n))) << n;
        EXPECT_TRUE(is_leibniz(fam::f3(n, 0))) << n;
        if (n % 2 == 0) {
            EXPECT_TRUE(is_leibniz(fam::f3(n, 1))) << n;
        }
        auto r = is_leibniz(fam::r_f1(n));
        EXPECT_TRUE(r) << n;
        EXPECT_EQ(r.triples_checked, (n + 2) * (n + 2) * (n + 2));
    }
}

TEST(Families, F3IsAntisymmetric)
{
    for (std::size_t n = 3; n <= 10; ++n)
        for (int alpha : {0, 1}) {
            if (alpha == 1 && n % 2)
                continue;
            const auto F = fam::f3(n, alpha);
            for (std::size_t a = 1; a <= n; ++a)
                for (std::size_t b = 1; b <= n; ++b) {
                    auto ab = F.product(a, b), ba = F.product(b, a);
                    for (std::size_t k = 0; k < n; ++k)
                        EXPECT_EQ(ab[k], -ba[k]) << n << " " << a << " " << b;
                }
        }
}

TEST(Families, StructuralFacts)
{
    for (std::size_t n = 3; n <= 9; ++n) {
        for (const auto& F : {fam::f1(n), fam::f2(n), fam::f3(n, 0)}) {
            EXPECT_TRUE(is_nilpotent(F));
            EXPECT_TRUE(is_filiform(F));
        }
        const auto R = fam::r_f1(n);
        EXPECT_TRUE(is_solvable(R));
        EXPECT_FALSE(is_nilpotent(R));
        std::vector<std::size_t> nil;
        for (std::size_t i = 1; i <= n; ++i)
            nil.push_back(i);
        EXPECT_TRUE(restrict_to(R, nil).same_table(fam::f1(n)));
    }
}

TEST(Families, NilradicalEvidence)
{
    for (std::size_t n = 4; n <= 8; ++n) {
        const auto R = fam::r_f1(n);
        std::vector<std::size_t> nil;
        for (std::size_t i = 1; i <= n; ++i)
            nil.push_back(i);
        EXPECT_TRUE(is_ideal(R, Subspace::coordinate(R.dim(), nil)));
        EXPECT_TRUE(is_nilpotent(restrict_to(R, nil)));
        for (std::size_t extra : {fam::x_index(n), fam::y_index(n)}) {
            auto idx = nil;
            idx.push_back(extra);
            EXPECT_TRUE(is_subalgebra(R, Subspace::coordinate(R.dim(), idx)));
            EXPECT_FALSE(is_nilpotent(restrict_to(R, idx)));
        }
    }
}
