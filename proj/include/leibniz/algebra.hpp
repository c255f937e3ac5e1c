#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace leibniz {

/// One nonzero product [e_i, e_j] = sum_k value[k-1] e_k. Indices are 1-based.
struct TableEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    Vector value;

    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/*
 * A finite-dimensional algebra given by structure constants on a fixed
 * basis e_1..e_n. Pairs absent from the table multiply to zero. Whether
 * the bracket satisfies the Leibniz identity is checked separately by
 * is_leibniz(); the type itself only stores a bilinear map.
 */
class LeibnizAlgebra {
public:
    LeibnizAlgebra(std::size_t dim, std::vector<std::string> labels, const std::vector<TableEntry>& entries)
        : m_dim(dim), m_labels(std::move(labels)), m_table(dim * dim)
    {
        if (dim == 0)
            throw DimensionError("LeibnizAlgebra: dimension must be positive");
        if (m_labels.size() != dim)
            throw DimensionError("LeibnizAlgebra: " + std::to_string(m_labels.size()) + " labels for dimension "
                                 + std::to_string(dim));
        for (const auto& e : entries) {
            check_index(e.i, "i");
            check_index(e.j, "j");
            if (e.value.size() != dim)
                throw DimensionError("LeibnizAlgebra: product [" + std::to_string(e.i) + "," + std::to_string(e.j)
                                     + "] has " + std::to_string(e.value.size()) + " coordinates");
            auto& slot = m_table[(e.i - 1) * dim + (e.j - 1)];
            if (!slot.empty())
                throw std::invalid_argument("LeibnizAlgebra: duplicate product [" + std::to_string(e.i) + ","
                                            + std::to_string(e.j) + "]");
            if (!is_zero(e.value))
                slot = e.value;
        }
    }

    /// Basis labelled e1..en.
    LeibnizAlgebra(std::size_t dim, const std::vector<TableEntry>& entries)
        : LeibnizAlgebra(dim, default_labels(dim), entries)
    {
    }

    static std::vector<std::string> default_labels(std::size_t dim)
    {
        std::vector<std::string> l;
        for (std::size_t i = 1; i <= dim; ++i)
            l.push_back("e" + std::to_string(i));
        return l;
    }

    std::size_t dim() const { return m_dim; }
    const std::vector<std::string>& labels() const { return m_labels; }
    const std::string& label(std::size_t i) const
    {
        check_index(i, "label");
        return m_labels[i - 1];
    }

    /// [e_i, e_j] with 0-based indices; an empty vector means zero.
    const Vector& product0(std::size_t i, std::size_t j) const { return m_table[i * m_dim + j]; }

    /// [e_i, e_j] with 1-based indices, as a full coordinate vector.
    Vector product(std::size_t i, std::size_t j) const
    {
        check_index(i, "i");
        check_index(j, "j");
        const auto& p = product0(i - 1, j - 1);
        return p.empty() ? Vector(m_dim) : p;
    }

    /// c_{ij}^k, 0-based.
    const Rational& constant0(std::size_t i, std::size_t j, std::size_t k) const
    {
        static const Rational zero;
        const auto& p = product0(i, j);
        return p.empty() ? zero : p[k];
    }

    /// Nonzero products in increasing (i, j) order.
    std::vector<TableEntry> entries() const
    {
        std::vector<TableEntry> out;
        for (std::size_t i = 0; i < m_dim; ++i)
            for (std::size_t j = 0; j < m_dim; ++j)
                if (!product0(i, j).empty())
                    out.push_back({i + 1, j + 1, product0(i, j)});
        return out;
    }

    std::size_t nonzero_products() const
    {
        return static_cast<std::size_t>(
            std::count_if(m_table.begin(), m_table.end(), [](const Vector& v) { return !v.empty(); }));
    }

    /// Same dimension and structure constants; labels are ignored.
    bool same_table(const LeibnizAlgebra& o) const { return m_dim == o.m_dim && m_table == o.m_table; }

    friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b)
    {
        return a.same_table(b) && a.m_labels == b.m_labels;
    }

private:
    void check_index(std::size_t i, const char* what) const
    {
        if (i < 1 || i > m_dim)
            throw IndexError(std::string("basis index ") + what + "=" + std::to_string(i) + " outside 1.."
                             + std::to_string(m_dim));
    }

    std::size_t m_dim;
    std::vector<std::string> m_labels;
    std::vector<Vector> m_table;
};

/// Coordinate vector of e_i (1-based).
inline Vector basis_vector(std::size_t dim, std::size_t i)
{
    if (i < 1 || i > dim)
        throw IndexError("basis_vector: index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
    Vector v(dim);
    v[i - 1] = 1;
    return v;
}

inline Vector bracket(const LeibnizAlgebra& L, std::span<const Rational> u, std::span<const Rational> v)
{
    const std::size_t n = L.dim();
    if (u.size() != n || v.size() != n)
        throw DimensionError("bracket: operands of length " + std::to_string(u.size()) + " and "
                             + std::to_string(v.size()) + " in an algebra of dimension " + std::to_string(n));
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero())
                continue;
            const auto& p = L.product0(i, j);
            if (p.empty())
                continue;
            Rational f = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!p[k].is_zero())
                    out[k] += f * p[k];
        }
    }
    return out;
}

namespace detail {

inline void axpy(Vector& acc, const Rational& f, const Vector& x)
{
    if (x.empty() || f.is_zero())
        return;
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (!x[k].is_zero())
            acc[k] += f * x[k];
}

/// [e_i, v], 0-based i.
inline Vector left_mul0(const LeibnizAlgebra& L, std::size_t i, const Vector& v)
{
    Vector out(L.dim());
    for (std::size_t m = 0; m < L.dim(); ++m)
        if (!v[m].is_zero())
            axpy(out, v[m], L.product0(i, m));
    return out;
}

/// [v, e_j], 0-based j.
inline Vector right_mul0(const LeibnizAlgebra& L, const Vector& v, std::size_t j)
{
    Vector out(L.dim());
    for (std::size_t m = 0; m < L.dim(); ++m)
        if (!v[m].is_zero())
            axpy(out, v[m], L.product0(m, j));
    return out;
}

inline Vector full(const LeibnizAlgebra& L, const Vector& p) { return p.empty() ? Vector(L.dim()) : p; }

} // namespace detail

/// [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]; zero iff the Leibniz identity holds on the triple.
inline Vector leibniz_defect(const LeibnizAlgebra& L, std::size_t i, std::size_t j, std::size_t k)
{
    const std::size_t n = L.dim();
    for (auto idx : {i, j, k})
        if (idx < 1 || idx > n)
            throw IndexError("leibniz_defect: index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
    --i, --j, --k;
    Vector d = detail::left_mul0(L, i, detail::full(L, L.product0(j, k)));
    Vector t = detail::right_mul0(L, detail::full(L, L.product0(i, j)), k);
    Vector s = detail::right_mul0(L, detail::full(L, L.product0(i, k)), j);
    for (std::size_t m = 0; m < n; ++m)
        d[m] += s[m] - t[m];
    return d;
}

struct LeibnizCheck {
    bool holds = true;
    std::size_t triples_checked = 0;
    std::optional<std::array<std::size_t, 3>> first_failure; ///< 1-based (i, j, k)
    Vector defect;

    explicit operator bool() const { return holds; }
};

/// Exhaustive check over all dim^3 basis triples in lexicographic order.
inline LeibnizCheck is_leibniz(const LeibnizAlgebra& L)
{
    LeibnizCheck res;
    const std::size_t n = L.dim();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) {
                ++res.triples_checked;
                auto d = leibniz_defect(L, i, j, k);
                if (!is_zero(d)) {
                    res.holds = false;
                    res.first_failure = std::array{i, j, k};
                    res.defect = std::move(d);
                    return res;
                }
            }
    return res;
}

/// Subspace held as its canonical reduced row-echelon basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : m_basis(0, ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors)
    {
        return from_matrix(Matrix::from_rows(vectors, ambient_dim));
    }

    static Subspace from_matrix(Matrix m)
    {
        auto e = reduce(std::move(m));
        e.reduced.truncate_rows(e.rank);
        Subspace s(e.reduced.cols());
        s.m_basis = std::move(e.reduced);
        s.m_pivots = std::move(e.pivot_cols);
        return s;
    }

    static Subspace zero(std::size_t n) { return Subspace(n); }
    static Subspace full(std::size_t n) { return from_matrix(Matrix::identity(n)); }

    /// span{e_i : i in indices}, 1-based.
    static Subspace coordinate(std::size_t n, const std::vector<std::size_t>& indices)
    {
        std::vector<Vector> v;
        for (auto i : indices)
            v.push_back(basis_vector(n, i));
        return span(n, v);
    }

    std::size_t ambient_dim() const { return m_basis.cols(); }
    std::size_t dim() const { return m_basis.rows(); }
    const Matrix& basis() const { return m_basis; }
    const std::vector<std::size_t>& pivot_cols() const { return m_pivots; }

    std::vector<Vector> basis_vectors() const
    {
        std::vector<Vector> v;
        for (std::size_t r = 0; r < dim(); ++r)
            v.push_back(m_basis.row_vector(r));
        return v;
    }

    bool contains(const Subspace& o) const
    {
        return subspace_contains(ambient_dim(), m_basis, o.m_basis);
    }

    bool contains(const Vector& v) const
    {
        return subspace_contains(ambient_dim(), m_basis, Matrix::from_rows({v}, ambient_dim()));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.m_basis == b.m_basis; }

private:
    Matrix m_basis;
    std::vector<std::size_t> m_pivots;
};

/// span{[a, b] : a in basis(A), b in basis(B)}.
inline Subspace product_space(const LeibnizAlgebra& L, const Subspace& A, const Subspace& B)
{
    if (A.ambient_dim() != L.dim() || B.ambient_dim() != L.dim())
        throw DimensionError("product_space: subspaces of ambient dimension " + std::to_string(A.ambient_dim())
                             + " and " + std::to_string(B.ambient_dim()) + " in an algebra of dimension "
                             + std::to_string(L.dim()));
    std::vector<Vector> gens;
    for (std::size_t a = 0; a < A.dim(); ++a)
        for (std::size_t b = 0; b < B.dim(); ++b) {
            auto p = bracket(L, A.basis().row(a), B.basis().row(b));
            if (!is_zero(p))
                gens.push_back(std::move(p));
        }
    return Subspace::span(L.dim(), gens);
}

enum class SeriesKind { LowerCentral, Derived };

/*
 * terms[0] = L; each following term is the next member of the series,
 * stopping before the first repeat. So the last term is the stable one
 * and dims strictly decrease along the list.
 */
struct SeriesResult {
    SeriesKind kind;
    std::vector<Subspace> terms;
    bool stabilized_at_zero = false;

    std::vector<std::size_t> dims() const
    {
        std::vector<std::size_t> d;
        for (const auto& t : terms)
            d.push_back(t.dim());
        return d;
    }

    /// L^k (1-based); past the end the series is constant.
    const Subspace& term(std::size_t k) const { return terms[std::min(k, terms.size()) - 1]; }
};

inline SeriesResult series(const LeibnizAlgebra& L, SeriesKind kind)
{
    SeriesResult res{kind, {Subspace::full(L.dim())}, false};
    const Subspace whole = res.terms.front();
    for (;;) {
        const Subspace& last = res.terms.back();
        Subspace next = kind == SeriesKind::LowerCentral ? product_space(L, last, whole) : product_space(L, last, last);
        if (next == last)
            break;
        res.terms.push_back(std::move(next));
    }
    res.stabilized_at_zero = res.terms.back().dim() == 0;
    return res;
}

inline SeriesResult lower_central_series(const LeibnizAlgebra& L) { return series(L, SeriesKind::LowerCentral); }
inline SeriesResult derived_series(const LeibnizAlgebra& L) { return series(L, SeriesKind::Derived); }

inline bool is_nilpotent(const LeibnizAlgebra& L) { return lower_central_series(L).stabilized_at_zero; }
inline bool is_solvable(const LeibnizAlgebra& L) { return derived_series(L).stabilized_at_zero; }

/// dim L^i = n - i for 2 <= i <= n.
inline bool is_filiform(const LeibnizAlgebra& L)
{
    const std::size_t n = L.dim();
    auto s = lower_central_series(L);
    for (std::size_t i = 2; i <= n; ++i)
        if (s.term(i).dim() != n - i)
            return false;
    return true;
}

/// {v : [y, v] = 0 for all y}.
inline Subspace right_annihilator(const LeibnizAlgebra& L)
{
    const std::size_t n = L.dim();
    // Row (j, k): sum_m c_{jm}^k v_m = 0.
    Matrix sys(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t k = 0; k < n; ++k)
                sys(j * n + k, m) = L.constant0(j, m, k);
    auto ker = kernel_basis(sys);
    return Subspace::span(n, ker);
}

/// Two-sided ideal test: [S, L] and [L, S] both inside S.
inline bool is_ideal(const LeibnizAlgebra& L, const Subspace& S)
{
    if (S.ambient_dim() != L.dim())
        throw DimensionError("is_ideal: subspace ambient dimension " + std::to_string(S.ambient_dim())
                             + " differs from algebra dimension " + std::to_string(L.dim()));
    const auto whole = Subspace::full(L.dim());
    return S.contains(product_space(L, S, whole)) && S.contains(product_space(L, whole, S));
}

inline bool is_subalgebra(const LeibnizAlgebra& L, const Subspace& S)
{
    if (S.ambient_dim() != L.dim())
        throw DimensionError("is_subalgebra: ambient dimension mismatch");
    return S.contains(product_space(L, S, S));
}

/*
 * The subalgebra on the coordinate subspace span{e_i : i in indices}
 * (1-based, increasing), re-indexed 1..indices.size() and keeping labels.
 * Throws PreconditionError if the subspace is not closed under the bracket.
 */
inline LeibnizAlgebra restrict_to(const LeibnizAlgebra& L, const std::vector<std::size_t>& indices)
{
    const std::size_t n = L.dim();
    std::vector<std::size_t> pos(n, 0);
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < indices.size(); ++r) {
        auto i = indices[r];
        if (i < 1 || i > n)
            throw IndexError("restrict_to: index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        if (r > 0 && indices[r - 1] >= i)
            throw std::invalid_argument("restrict_to: indices must be strictly increasing");
        pos[i - 1] = r + 1;
        labels.push_back(L.label(i));
    }
    std::vector<TableEntry> entries;
    for (auto i : indices)
        for (auto j : indices) {
            const auto& p = L.product0(i - 1, j - 1);
            if (p.empty())
                continue;
            Vector v(indices.size());
            for (std::size_t k = 0; k < n; ++k) {
                if (p[k].is_zero())
                    continue;
                if (pos[k] == 0)
                    throw PreconditionError("restrict_to: [" + L.label(i) + "," + L.label(j)
                                            + "] leaves the coordinate subspace");
                v[pos[k] - 1] = p[k];
            }
            entries.push_back({pos[i - 1], pos[j - 1], std::move(v)});
        }
    return LeibnizAlgebra(indices.size(), std::move(labels), entries);
}

/// Inverse of a square matrix via Gauss-Jordan on [M | I].
inline Matrix inverse(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw DimensionError("inverse: matrix is not square");
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto e = reduce(std::move(aug));
    if (e.rank < n || e.pivot_cols[n - 1] != n - 1)
        throw PreconditionError("inverse: matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

/// Coordinates of a row vector v in the basis given by the rows of `basis`, using its precomputed inverse.
inline Vector coordinates_in(const Matrix& basis_inverse, std::span<const Rational> v)
{
    const std::size_t n = basis_inverse.rows();
    Vector out(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (v[r].is_zero())
            continue;
        for (std::size_t c = 0; c < n; ++c)
            if (!basis_inverse(r, c).is_zero())
                out[c] += v[r] * basis_inverse(r, c);
    }
    return out;
}

namespace detail {

inline std::vector<std::string> labels_for_basis(const LeibnizAlgebra& L, const Matrix& basis)
{
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        std::optional<std::size_t> unit;
        std::size_t nonzeros = 0;
        for (std::size_t c = 0; c < basis.cols(); ++c)
            if (!basis(r, c).is_zero()) {
                ++nonzeros;
                if (basis(r, c) == Rational(1))
                    unit = c;
            }
        labels.push_back(nonzeros == 1 && unit ? L.labels()[*unit] : "b" + std::to_string(r + 1));
    }
    return labels;
}

} // namespace detail

/*
 * The same algebra written in a new basis, the rows of `basis`. Basis
 * vectors that are standard unit vectors keep their label, the others are
 * named b1, b2, ... by position.
 */
inline LeibnizAlgebra change_basis(const LeibnizAlgebra& L, const Matrix& basis)
{
    const std::size_t n = L.dim();
    if (basis.rows() != n || basis.cols() != n)
        throw DimensionError("change_basis: basis matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    const Matrix inv = inverse(basis);
    std::vector<TableEntry> entries;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto w = bracket(L, basis.row(a), basis.row(b));
            if (is_zero(w))
                continue;
            entries.push_back({a + 1, b + 1, coordinates_in(inv, w)});
        }
    return LeibnizAlgebra(n, detail::labels_for_basis(L, basis), entries);
}

/// Relabels e_i as e_{perm[i-1]}: perm is a permutation of 1..n.
inline LeibnizAlgebra permute_basis(const LeibnizAlgebra& L, const std::vector<std::size_t>& perm)
{
    const std::size_t n = L.dim();
    if (perm.size() != n)
        throw DimensionError("permute_basis: permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p < 1 || p > n || seen[p - 1])
            throw std::invalid_argument("permute_basis: not a permutation of 1..n");
        seen[p - 1] = true;
    }
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[perm[i] - 1] = L.labels()[i];
    std::vector<TableEntry> entries;
    for (const auto& e : L.entries()) {
        Vector v(n);
        for (std::size_t k = 0; k < n; ++k)
            v[perm[k] - 1] = e.value[k];
        entries.push_back({perm[e.i - 1], perm[e.j - 1], std::move(v)});
    }
    return LeibnizAlgebra(n, std::move(labels), entries);
}

/// Basis adapted to the lower central filtration, with the grading degree of each vector.
struct AdaptedBasis {
    Matrix basis;
    std::vector<std::size_t> degree;
};

/*
 * For a filiform algebra: two representatives of L/L^2 (degree 1), then
 * one representative of each L^i/L^{i+1} (degree i). Each representative
 * is a row of the echelon basis of L^i whose pivot column is not a pivot
 * of L^{i+1}, which makes the choice canonical.
 */
inline AdaptedBasis adapted_basis(const LeibnizAlgebra& L)
{
    if (!is_filiform(L))
        throw PreconditionError("adapted_basis: algebra is not filiform");
    const std::size_t n = L.dim();
    auto s = lower_central_series(L);
    AdaptedBasis res{Matrix(n, n), {}};
    std::size_t row = 0;
    for (std::size_t d = 1; d < n || (n == 1 && d == 1); ++d) {
        const Subspace& upper = s.term(d);
        const Subspace& lower = s.term(d + 1);
        const auto& lp = lower.pivot_cols();
        for (std::size_t r = 0; r < upper.dim(); ++r) {
            if (std::find(lp.begin(), lp.end(), upper.pivot_cols()[r]) != lp.end())
                continue;
            std::copy(upper.basis().row(r).begin(), upper.basis().row(r).end(), res.basis.row(row).begin());
            res.degree.push_back(d);
            ++row;
        }
    }
    if (row != n)
        throw std::logic_error("adapted_basis: filtration quotients do not add up to the dimension");
    return res;
}

/*
 * gr(L) written on the adapted basis: the bracket of two representatives
 * of degrees p and q, keeping only its degree p+q component.
 */
inline LeibnizAlgebra associated_graded(const LeibnizAlgebra& L)
{
    const std::size_t n = L.dim();
    auto ab = adapted_basis(L);
    const Matrix inv = inverse(ab.basis);
    std::vector<TableEntry> entries;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto w = bracket(L, ab.basis.row(a), ab.basis.row(b));
            if (is_zero(w))
                continue;
            auto coords = coordinates_in(inv, w);
            const std::size_t target = ab.degree[a] + ab.degree[b];
            for (std::size_t k = 0; k < n; ++k) {
                if (coords[k].is_zero())
                    continue;
                if (ab.degree[k] < target)
                    throw std::logic_error("associated_graded: product falls outside the filtration");
                if (ab.degree[k] > target)
                    coords[k] = Rational();
            }
            entries.push_back({a + 1, b + 1, std::move(coords)});
        }
    return LeibnizAlgebra(n, detail::labels_for_basis(L, ab.basis), entries);
}

/// gr(L) equals L itself when both are written on the adapted basis.
inline bool is_naturally_graded(const LeibnizAlgebra& L)
{
    return associated_graded(L).same_table(change_basis(L, adapted_basis(L).basis));
}

} // namespace leibniz

#endif
