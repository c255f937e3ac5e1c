#ifndef LEIBNIZ_COHOMOLOGY_HPP
#define LEIBNIZ_COHOMOLOGY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "linalg.hpp"
#include "report.hpp"

namespace leibniz {

/*
 * A linear map d: L -> L. coords[in * n + out] is the e_out coefficient
 * of d(e_in) (0-based), i.e. row `in` of the matrix holds d(e_in).
 */
struct LinearMapCoords {
    std::size_t n = 0;
    Vector coords;

    explicit LinearMapCoords(std::size_t dim) : n(dim), coords(dim * dim) {}
    LinearMapCoords(std::size_t dim, Vector c) : n(dim), coords(std::move(c))
    {
        if (coords.size() != n * n)
            throw DimensionError("LinearMapCoords: expected " + std::to_string(n * n) + " coordinates");
    }

    static LinearMapCoords identity(std::size_t dim)
    {
        LinearMapCoords d(dim);
        for (std::size_t i = 0; i < dim; ++i)
            d.at0(i, i) = 1;
        return d;
    }

    Rational& at0(std::size_t in, std::size_t out) { return coords[in * n + out]; }
    const Rational& at0(std::size_t in, std::size_t out) const { return coords[in * n + out]; }

    /// d(e_i), 0-based.
    Vector image0(std::size_t i) const { return {coords.begin() + i * n, coords.begin() + (i + 1) * n}; }

    Vector apply(std::span<const Rational> v) const
    {
        if (v.size() != n)
            throw DimensionError("LinearMapCoords::apply: length mismatch");
        Vector out(n);
        for (std::size_t i = 0; i < n; ++i)
            if (!v[i].is_zero())
                for (std::size_t o = 0; o < n; ++o)
                    if (!at0(i, o).is_zero())
                        out[o] += v[i] * at0(i, o);
        return out;
    }

    /// this after other: v -> this(other(v)).
    LinearMapCoords compose(const LinearMapCoords& other) const
    {
        LinearMapCoords r(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto img = apply(other.image0(i));
            std::copy(img.begin(), img.end(), r.coords.begin() + i * n);
        }
        return r;
    }
};

/// A bilinear map phi: L x L -> L. coords[(a * n + b) * n + k] is the e_k coefficient of phi(e_a, e_b), 0-based.
struct Cochain2Coords {
    std::size_t n = 0;
    Vector coords;

    explicit Cochain2Coords(std::size_t dim) : n(dim), coords(dim * dim * dim) {}
    Cochain2Coords(std::size_t dim, Vector c) : n(dim), coords(std::move(c))
    {
        if (coords.size() != n * n * n)
            throw DimensionError("Cochain2Coords: expected " + std::to_string(n * n * n) + " coordinates");
    }

    Rational& at0(std::size_t a, std::size_t b, std::size_t k) { return coords[(a * n + b) * n + k]; }
    const Rational& at0(std::size_t a, std::size_t b, std::size_t k) const { return coords[(a * n + b) * n + k]; }

    /// phi(e_a, e_b), 0-based.
    Vector value0(std::size_t a, std::size_t b) const
    {
        auto first = coords.begin() + static_cast<std::ptrdiff_t>((a * n + b) * n);
        return {first, first + static_cast<std::ptrdiff_t>(n)};
    }

    /// phi(u, v) by bilinear extension.
    Vector apply(std::span<const Rational> u, std::span<const Rational> v) const
    {
        Vector out(n);
        for (std::size_t a = 0; a < n; ++a) {
            if (u[a].is_zero())
                continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (v[b].is_zero())
                    continue;
                Rational f = u[a] * v[b];
                for (std::size_t k = 0; k < n; ++k)
                    if (!at0(a, b, k).is_zero())
                        out[k] += f * at0(a, b, k);
            }
        }
        return out;
    }
};

namespace detail {

inline void check_dims(const LeibnizAlgebra& L, std::size_t n, const char* what)
{
    if (n != L.dim())
        throw DimensionError(std::string(what) + ": cochain of dimension " + std::to_string(n)
                             + " on an algebra of dimension " + std::to_string(L.dim()));
}

inline void check_basis_index(const LeibnizAlgebra& L, std::size_t i, const char* what)
{
    if (i < 1 || i > L.dim())
        throw IndexError(std::string(what) + ": index " + std::to_string(i) + " outside 1.."
                         + std::to_string(L.dim()));
}

} // namespace detail

/// f(a,b) = [d(a),b] + [a,d(b)] - d([a,b]) on basis elements e_a, e_b (1-based).
inline Vector d1_apply(const LeibnizAlgebra& L, const LinearMapCoords& d, std::size_t a, std::size_t b)
{
    detail::check_dims(L, d.n, "d1_apply");
    detail::check_basis_index(L, a, "d1_apply");
    detail::check_basis_index(L, b, "d1_apply");
    const std::size_t n = L.dim();
    auto ea = basis_vector(n, a), eb = basis_vector(n, b);
    auto out = bracket(L, d.image0(a - 1), eb);
    auto t = bracket(L, ea, d.image0(b - 1));
    auto s = d.apply(L.product(a, b));
    for (std::size_t k = 0; k < n; ++k)
        out[k] += t[k] - s[k];
    return out;
}

/// The 2-coboundary of d, evaluated on every basis pair.
inline Cochain2Coords coboundary(const LeibnizAlgebra& L, const LinearMapCoords& d)
{
    const std::size_t n = L.dim();
    Cochain2Coords phi(n);
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b) {
            auto f = d1_apply(L, d, a, b);
            for (std::size_t k = 0; k < n; ++k)
                phi.at0(a - 1, b - 1, k) = f[k];
        }
    return phi;
}

/*
 * Matrix of d^1: rows (a, b, k) lexicographic with k innermost, columns
 * in LinearMapCoords order. n^3 x n^2.
 */
inline Matrix d1_matrix(const LeibnizAlgebra& L)
{
    const std::size_t n = L.dim();
    Matrix m(n * n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = (a * n + b) * n + k;
                for (std::size_t p = 0; p < n; ++p) {
                    m(row, a * n + p) += L.constant0(p, b, k); // [d(e_a), e_b]
                    m(row, b * n + p) += L.constant0(a, p, k); // [e_a, d(e_b)]
                    m(row, p * n + k) -= L.constant0(a, b, p); // d([e_a, e_b])
                }
            }
    return m;
}

/// Basis of Der(L), the kernel of d^1.
inline std::vector<LinearMapCoords> derivations(const LeibnizAlgebra& L)
{
    std::vector<LinearMapCoords> out;
    for (auto& v : kernel_basis(d1_matrix(L)))
        out.emplace_back(L.dim(), std::move(v));
    return out;
}

inline bool is_derivation(const LeibnizAlgebra& L, const LinearMapCoords& d)
{
    for (std::size_t a = 1; a <= L.dim(); ++a)
        for (std::size_t b = 1; b <= L.dim(); ++b)
            if (!is_zero(d1_apply(L, d, a, b)))
                return false;
    return true;
}

/// rank(d^1) = n^2 - dim Der(L).
inline std::size_t bl2_dim(const LeibnizAlgebra& L) { return rank(d1_matrix(L)); }

/// d^1 of each elementary map E_{in,out}; spans BL^2.
inline std::vector<Vector> bl2_generators(const LeibnizAlgebra& L)
{
    const std::size_t n = L.dim();
    std::vector<Vector> gens;
    for (std::size_t c = 0; c < n * n; ++c) {
        LinearMapCoords e(n);
        e.coords[c] = 1;
        gens.push_back(coboundary(L, e).coords);
    }
    return gens;
}

/*
 * (d^2 phi)(a,b,c) = [a,phi(b,c)] - [phi(a,b),c] + [phi(a,c),b]
 *                    + phi(a,[b,c]) - phi([a,b],c) + phi([a,c],b)
 * on basis elements (1-based).
 */
inline Vector d2_apply(const LeibnizAlgebra& L, const Cochain2Coords& phi, std::size_t a, std::size_t b, std::size_t c)
{
    detail::check_dims(L, phi.n, "d2_apply");
    for (auto i : {a, b, c})
        detail::check_basis_index(L, i, "d2_apply");
    const std::size_t n = L.dim();
    auto ea = basis_vector(n, a), eb = basis_vector(n, b), ec = basis_vector(n, c);
    Vector out = bracket(L, ea, phi.value0(b - 1, c - 1));
    auto sub = [&](const Vector& t) {
        for (std::size_t k = 0; k < n; ++k)
            out[k] -= t[k];
    };
    auto add = [&](const Vector& t) {
        for (std::size_t k = 0; k < n; ++k)
            out[k] += t[k];
    };
    sub(bracket(L, phi.value0(a - 1, b - 1), ec));
    add(bracket(L, phi.value0(a - 1, c - 1), eb));
    add(phi.apply(ea, L.product(b, c)));
    sub(phi.apply(L.product(a, b), ec));
    add(phi.apply(L.product(a, c), eb));
    return out;
}

/*
 * Row (a, b, c, k) of the d^2 constraint matrix (0-based), as a sparse
 * row over Cochain2Coords columns.
 */
inline SparseRow d2_row(const LeibnizAlgebra& L, std::size_t a, std::size_t b, std::size_t c, std::size_t k)
{
    const std::size_t n = L.dim();
    auto col = [n](std::size_t p, std::size_t q, std::size_t r) { return (p * n + q) * n + r; };
    std::map<std::size_t, Rational> acc;
    auto put = [&](std::size_t column, const Rational& v, bool negate) {
        if (v.is_zero())
            return;
        if (negate)
            acc[column] -= v;
        else
            acc[column] += v;
    };
    for (std::size_t m = 0; m < n; ++m) {
        put(col(b, c, m), L.constant0(a, m, k), false); //  [a, phi(b,c)]
        put(col(a, b, m), L.constant0(m, c, k), true);  // -[phi(a,b), c]
        put(col(a, c, m), L.constant0(m, b, k), false); //  [phi(a,c), b]
        put(col(a, m, k), L.constant0(b, c, m), false); //  phi(a, [b,c])
        put(col(m, c, k), L.constant0(a, b, m), true);  // -phi([a,b], c)
        put(col(m, b, k), L.constant0(a, c, m), false); //  phi([a,c], b)
    }
    SparseRow row;
    for (auto& [column, v] : acc)
        if (!v.is_zero())
            row.emplace_back(column, std::move(v));
    return row;
}

/// Reduced echelon form of the full d^2 system, rows fed in (a, b, c, k) order.
inline RowSpaceAccumulator d2_system(const LeibnizAlgebra& L)
{
    const std::size_t n = L.dim();
    RowSpaceAccumulator acc(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t k = 0; k < n; ++k) {
                    auto row = d2_row(L, a, b, c, k);
                    if (!row.empty())
                        acc.add(row);
                }
    return acc;
}

struct ZL2Result {
    std::size_t dim = 0;
    std::vector<Cochain2Coords> basis;
};

/// Basis of ZL^2(L, L), the kernel of d^2.
inline ZL2Result zl2(const LeibnizAlgebra& L)
{
    auto sys = d2_system(L);
    ZL2Result res;
    for (auto& v : sys.kernel())
        res.basis.emplace_back(L.dim(), std::move(v));
    res.dim = res.basis.size();
    return res;
}

/// row-space(b) within row-space(a), by incremental rank over sparse rows.
inline bool row_space_contains(std::size_t cols, const std::vector<Vector>& a, const std::vector<Vector>& b)
{
    RowSpaceAccumulator acc(cols);
    for (const auto& v : a)
        acc.add(v);
    const auto r = acc.rank();
    for (const auto& v : b)
        acc.add(v);
    return acc.rank() == r;
}

enum class Rigidity { Rigid, Unknown };

inline const char* to_string(Rigidity r) { return r == Rigidity::Rigid ? "Rigid" : "Unknown"; }

struct CohomologyReport {
    std::size_t algebra_dim = 0;
    std::size_t dim_der = 0;
    std::size_t dim_zl2 = 0;
    std::size_t dim_bl2 = 0;
    std::size_t dim_hl2 = 0;
    bool bl2_in_zl2 = false;
    Rigidity rigidity = Rigidity::Unknown;

    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

struct CohomologyData {
    CohomologyReport report;
    std::vector<LinearMapCoords> derivations;
    ZL2Result cocycles;
};

/*
 * Der, ZL^2, BL^2 and HL^2 of L with coefficients in itself. HL^2 = 0 is
 * only a sufficient condition for rigidity, so anything else is Unknown.
 */
inline CohomologyData compute_cohomology(const LeibnizAlgebra& L)
{
    if (auto chk = is_leibniz(L); !chk)
        throw PreconditionError("cohomology: not a Leibniz algebra (identity fails on triple (" + L.label((*chk.first_failure)[0])
                                + "," + L.label((*chk.first_failure)[1]) + "," + L.label((*chk.first_failure)[2]) + "))");
    const std::size_t n = L.dim();
    CohomologyData data;
    data.derivations = derivations(L);
    data.cocycles = zl2(L);

    auto& r = data.report;
    r.algebra_dim = n;
    r.dim_der = data.derivations.size();
    r.dim_bl2 = bl2_dim(L);
    r.dim_zl2 = data.cocycles.dim;
    if (r.dim_bl2 + r.dim_der != n * n)
        throw std::logic_error("cohomology: rank-nullity of d^1 violated");

    std::vector<Vector> z;
    for (const auto& c : data.cocycles.basis)
        z.push_back(c.coords);
    r.bl2_in_zl2 = row_space_contains(n * n * n, z, bl2_generators(L));
    if (!r.bl2_in_zl2)
        throw std::logic_error("cohomology: coboundaries are not cocycles");
    r.dim_hl2 = r.dim_zl2 - r.dim_bl2;
    r.rigidity = r.dim_hl2 == 0 ? Rigidity::Rigid : Rigidity::Unknown;
    return data;
}

inline CohomologyReport hl2(const LeibnizAlgebra& L) { return compute_cohomology(L).report; }

// ---------------------------------------------------------------------------
// Conformance checks for R(F_n^1)

/*
 * Generators of the derivation space claimed for R(F_n^1), one per free
 * parameter (alpha1, beta2, beta3):
 *   d(e_1) = alpha1 e_1
 *   d(e_i) = ((i-2) alpha1 + beta2) e_i + beta3 e_{i+1}   (2 <= i <= n, e_{n+1} := 0)
 *   d(x)   = -beta3 e_1
 *   d(y)   = 0
 */
inline std::vector<LinearMapCoords> rf1_derivation_pattern(std::size_t n)
{
    if (n < 3)
        throw ParameterError("rf1_derivation_pattern: n must be at least 3");
    const std::size_t dim = n + 2, x0 = families::x_index(n) - 1;
    LinearMapCoords alpha1(dim), beta2(dim), beta3(dim);
    alpha1.at0(0, 0) = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        alpha1.at0(i - 1, i - 1) = Rational(static_cast<long>(i - 2));
        beta2.at0(i - 1, i - 1) = 1;
        if (i < n)
            beta3.at0(i - 1, i) = 1;
    }
    beta3.at0(x0, 0) = -1;
    return {alpha1, beta2, beta3};
}

/// Der(L) and span(pattern) coincide: mutual containment plus the dimension count.
inline VerificationReport check_derivation_pattern(const LeibnizAlgebra& L, const std::vector<LinearMapCoords>& pattern,
                                                   std::string claim)
{
    const std::size_t n2 = L.dim() * L.dim();
    std::vector<Vector> der, pat;
    for (auto& d : derivations(L))
        der.push_back(d.coords);
    for (const auto& d : pattern)
        pat.push_back(d.coords);
    const auto der_m = Matrix::from_rows(der, n2);
    const auto pat_m = Matrix::from_rows(pat, n2);
    const bool pattern_in_der = subspace_contains(n2, der_m, pat_m);
    const bool der_in_pattern = subspace_contains(n2, pat_m, der_m);
    auto describe = [](std::size_t dim, bool a, bool b) {
        return "dim Der=" + std::to_string(dim) + "; pattern in Der: " + (a ? "yes" : "no")
               + "; Der in pattern: " + (b ? "yes" : "no");
    };
    return VerificationReport::compare(std::move(claim), describe(der.size(), pattern_in_der, der_in_pattern),
                                       describe(rank(pat_m), true, true));
}

inline VerificationReport check_derivation_pattern_rf1(std::size_t n)
{
    return check_derivation_pattern(families::r_f1(n), rf1_derivation_pattern(n),
                                    "Der(R(F_" + std::to_string(n) + "^1)) matches the 3-parameter pattern");
}

/*
 * Zero-pattern constraints every 2-cocycle of R(F_n^1) satisfies
 * (indices 1-based, x = n+1, y = n+2):
 *   a: phi(e1,e1) has no e1, e2, x, y component
 *   b: phi(e1,e2) is a multiple of e1
 *   c: phi(y,e_j) = 0                       for 2 <= j <= n
 *   d: phi(x,e_j) is a multiple of e1       for 2 <= j <= n
 *   e: phi(y,y) is supported on e2..en
 */
struct CocycleConstraint {
    char group;
    const char* description;
};

inline const std::vector<CocycleConstraint>& rf1_cocycle_constraints()
{
    static const std::vector<CocycleConstraint> groups{
        {'a', "phi(e1,e1) in span{e3..en}"},
        {'b', "phi(e1,e2) in span{e1}"},
        {'c', "phi(y,e_j) = 0, 2<=j<=n"},
        {'d', "phi(x,e_j) in span{e1}, 2<=j<=n"},
        {'e', "phi(y,y) in span{e2..en}"},
    };
    return groups;
}

/// Groups (by letter) that phi violates; empty when all hold.
inline std::string rf1_cocycle_violations(std::size_t n, const Cochain2Coords& phi)
{
    const std::size_t dim = n + 2;
    if (phi.n != dim)
        throw DimensionError("rf1_cocycle_violations: cochain dimension does not match R(F_n^1)");
    const std::size_t e1 = 0, e2 = 1, x = n, y = n + 1;
    auto supported_on = [&](std::size_t a, std::size_t b, auto allowed) {
        for (std::size_t k = 0; k < dim; ++k)
            if (!phi.at0(a, b, k).is_zero() && !allowed(k))
                return false;
        return true;
    };
    auto only_e1 = [&](std::size_t k) { return k == e1; };
    std::string bad;
    if (!supported_on(e1, e1, [&](std::size_t k) { return k >= 2 && k < n; }))
        bad += 'a';
    if (!supported_on(e1, e2, only_e1))
        bad += 'b';
    bool c_ok = true, d_ok = true;
    for (std::size_t j = 1; j < n; ++j) {
        c_ok = c_ok && supported_on(y, j, [](std::size_t) { return false; });
        d_ok = d_ok && supported_on(x, j, only_e1);
    }
    if (!c_ok)
        bad += 'c';
    if (!d_ok)
        bad += 'd';
    if (!supported_on(y, y, [&](std::size_t k) { return k >= 1 && k < n; }))
        bad += 'e';
    return bad;
}

/// Runs the constraint groups over a given cocycle basis of R(F_n^1).
inline VerificationReport check_cocycle_constraints(std::size_t n, const std::vector<Cochain2Coords>& basis)
{
    std::map<char, std::size_t> ok;
    for (const auto& g : rf1_cocycle_constraints())
        ok[g.group] = 0;
    for (const auto& phi : basis) {
        auto bad = rf1_cocycle_violations(n, phi);
        for (auto& [g, count] : ok)
            if (bad.find(g) == std::string::npos)
                ++count;
    }
    std::string computed, expected;
    for (const auto& [g, count] : ok) {
        if (!computed.empty()) {
            computed += ' ';
            expected += ' ';
        }
        computed += std::string(1, g) + ":" + std::to_string(count) + "/" + std::to_string(basis.size());
        expected += std::string(1, g) + ":" + std::to_string(basis.size()) + "/" + std::to_string(basis.size());
    }
    return VerificationReport::compare("ZL^2(R(F_" + std::to_string(n) + "^1)) cocycle zero-pattern groups a-e",
                                       computed, expected);
}

inline VerificationReport check_cocycle_constraints_rf1(std::size_t n)
{
    if (n < 3)
        throw ParameterError("check_cocycle_constraints_rf1: n must be at least 3");
    return check_cocycle_constraints(n, zl2(families::r_f1(n)).basis);
}

} // namespace leibniz

#endif
