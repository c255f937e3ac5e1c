#ifndef LEIBNIZ_LINALG_HPP
#define LEIBNIZ_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace leibniz {

using Vector = std::vector<Rational>;

/// (column, value) pairs, strictly increasing in column, values nonzero.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

inline bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

/// Dense row-major matrix of rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols)
                throw DimensionError("Matrix::from_rows: row " + std::to_string(r) + " has length "
                                     + std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
            std::copy(rows[r].begin(), rows[r].end(), m.m_data.begin() + static_cast<std::ptrdiff_t>(r * cols));
        }
        return m;
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }

    Rational& operator()(std::size_t r, std::size_t c) { return m_data[r * m_cols + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return m_data[r * m_cols + c]; }

    std::span<Rational> row(std::size_t r) { return {m_data.data() + r * m_cols, m_cols}; }
    std::span<const Rational> row(std::size_t r) const { return {m_data.data() + r * m_cols, m_cols}; }

    Vector row_vector(std::size_t r) const
    {
        auto s = row(r);
        return {s.begin(), s.end()};
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
    }

    /// Keeps only the first n rows.
    void truncate_rows(std::size_t n)
    {
        m_rows = std::min(n, m_rows);
        m_data.resize(m_rows * m_cols);
    }

    Vector operator*(std::span<const Rational> v) const
    {
        if (v.size() != m_cols)
            throw DimensionError("Matrix * vector: length mismatch");
        Vector out(m_rows);
        for (std::size_t r = 0; r < m_rows; ++r)
            for (std::size_t c = 0; c < m_cols; ++c)
                if (!(*this)(r, c).is_zero() && !v[c].is_zero())
                    out[r] += (*this)(r, c) * v[c];
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Rational> m_data;
};

/// [top; bottom]. Column counts must agree.
inline Matrix vstack(const Matrix& top, const Matrix& bottom)
{
    if (top.cols() != bottom.cols())
        throw DimensionError("vstack: column counts " + std::to_string(top.cols()) + " and "
                             + std::to_string(bottom.cols()) + " differ");
    Matrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        std::copy(top.row(r).begin(), top.row(r).end(), m.row(r).begin());
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        std::copy(bottom.row(r).begin(), bottom.row(r).end(), m.row(top.rows() + r).begin());
    return m;
}

struct EchelonResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    Matrix reduced;
};

/*
 * Gauss-Jordan elimination to reduced row-echelon form.
 *
 * The pivot in each column is the candidate with the smallest
 * bit_size(), ties going to the lowest row index. The reduced form is
 * unique, so pivoting only affects coefficient growth, never the output.
 * Zero rows end up at the bottom; the shape of the input is kept.
 */
inline EchelonResult reduce(Matrix m)
{
    EchelonResult res;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
        std::size_t best = m.rows();
        std::size_t best_size = 0;
        for (std::size_t r = prow; r < m.rows(); ++r) {
            const auto& x = m(r, c);
            if (x.is_zero())
                continue;
            auto sz = x.bit_size();
            if (best == m.rows() || sz < best_size) {
                best = r;
                best_size = sz;
            }
        }
        if (best == m.rows())
            continue;
        m.swap_rows(prow, best);

        auto pivot_row = m.row(prow);
        Rational inv = Rational(1) / pivot_row[c];
        for (std::size_t k = c; k < m.cols(); ++k)
            if (!pivot_row[k].is_zero())
                pivot_row[k] *= inv;

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == prow || m(r, c).is_zero())
                continue;
            Rational f = m(r, c);
            auto target = m.row(r);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!pivot_row[k].is_zero())
                    target[k].sub_mul(f, pivot_row[k]);
        }
        res.pivot_cols.push_back(c);
        ++prow;
    }
    res.rank = prow;
    res.reduced = std::move(m);
    return res;
}

inline std::size_t rank(const Matrix& m) { return reduce(m).rank; }

/// Kernel of a matrix given its reduced form: one vector per free column,
/// in increasing free-column order, with a 1 in that column.
inline std::vector<Vector> kernel_from_echelon(const EchelonResult& e)
{
    const std::size_t cols = e.reduced.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivot_cols)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < e.rank; ++i)
            if (!e.reduced(i, f).is_zero())
                v[e.pivot_cols[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<Vector> kernel_basis(const Matrix& m) { return kernel_from_echelon(reduce(m)); }

/// True iff row-space(span_b) is contained in row-space(span_a).
inline bool subspace_contains(std::size_t ambient_dim, const Matrix& span_a, const Matrix& span_b)
{
    if (span_a.cols() != ambient_dim || span_b.cols() != ambient_dim)
        throw DimensionError("subspace_contains: expected " + std::to_string(ambient_dim) + " columns, got "
                             + std::to_string(span_a.cols()) + " and " + std::to_string(span_b.cols()));
    if (span_b.rows() == 0)
        return true;
    return rank(vstack(span_a, span_b)) == rank(span_a);
}

/*
 * Rank by fraction-free (Bareiss) elimination over the integers. Rows are
 * first cleared of denominators. Independent of reduce(); used to
 * cross-check ranks.
 */
inline std::size_t bareiss_rank(const Matrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).value().get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) {
            mpq_class scaled = m(r, c).value() * mpq_class(l);
            a[r * cols + c] = scaled.get_num();
        }
    }
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };

    mpz_class prev = 1;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t p = rk;
        while (p < rows && at(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != rk)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(at(p, k), at(rk, k));
        for (std::size_t r = rk + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                at(r, k) = at(rk, c) * at(r, k) - at(r, c) * at(rk, k);
                mpz_divexact(at(r, k).get_mpz_t(), at(r, k).get_mpz_t(), prev.get_mpz_t());
            }
            at(r, c) = 0;
        }
        prev = at(rk, c);
        ++rk;
    }
    return rk;
}

/*
 * Incremental reduced row-echelon basis over sparse rows.
 *
 * Rows are fed one at a time; the stored rows always form the reduced
 * row-echelon basis of everything fed so far (unit pivots, each pivot
 * column zero in every other row). Used for constraint systems far taller
 * than they are wide, where materialising the dense matrix is wasteful.
 */
class RowSpaceAccumulator {
public:
    explicit RowSpaceAccumulator(std::size_t cols)
        : m_cols(cols), m_pivot_row(cols, npos), m_work(cols), m_touched(cols, false)
    {
    }

    std::size_t cols() const { return m_cols; }
    std::size_t rank() const { return m_rows.size(); }

    /// Returns true iff the row was independent of the rows fed so far.
    bool add(const SparseRow& row)
    {
        std::vector<std::size_t> touched;
        auto touch = [&](std::size_t c) {
            if (!m_touched[c]) {
                m_touched[c] = true;
                touched.push_back(c);
            }
        };
        std::vector<std::pair<std::size_t, Rational>> eliminations;
        for (const auto& [c, v] : row) {
            if (c >= m_cols)
                throw DimensionError("RowSpaceAccumulator::add: column " + std::to_string(c) + " out of range");
            if (v.is_zero())
                continue;
            if (m_pivot_row[c] != npos) {
                eliminations.emplace_back(c, v);
            } else {
                touch(c);
                m_work[c] += v;
            }
        }
        // Pivot rows are zero on every other pivot column, so subtracting
        // them only writes to free columns.
        for (const auto& [p, f] : eliminations)
            for (const auto& [c, v] : m_rows[m_pivot_row[p]])
                if (c != p) {
                    touch(c);
                    m_work[c].sub_mul(f, v);
                }

        std::sort(touched.begin(), touched.end());
        SparseRow reduced;
        for (auto c : touched) {
            if (!m_work[c].is_zero())
                reduced.emplace_back(c, std::move(m_work[c]));
            m_work[c] = Rational();
            m_touched[c] = false;
        }
        if (reduced.empty())
            return false;

        const std::size_t lead = reduced.front().first;
        Rational inv = Rational(1) / reduced.front().second;
        for (auto& [c, v] : reduced)
            v *= inv;

        for (auto& other : m_rows) {
            auto it = std::lower_bound(other.begin(), other.end(), lead,
                                       [](const auto& e, std::size_t c) { return e.first < c; });
            if (it == other.end() || it->first != lead)
                continue;
            Rational f = it->second;
            other = axpy(other, f, reduced);
        }
        m_pivot_row[lead] = m_rows.size();
        m_rows.push_back(std::move(reduced));
        return true;
    }

    bool add(std::span<const Rational> dense)
    {
        if (dense.size() != m_cols)
            throw DimensionError("RowSpaceAccumulator::add: row length mismatch");
        SparseRow row;
        for (std::size_t c = 0; c < dense.size(); ++c)
            if (!dense[c].is_zero())
                row.emplace_back(c, dense[c]);
        return add(row);
    }

    std::vector<std::size_t> pivot_cols() const
    {
        std::vector<std::size_t> p;
        for (std::size_t c = 0; c < m_cols; ++c)
            if (m_pivot_row[c] != npos)
                p.push_back(c);
        return p;
    }

    /// Same canonical form reduce() produces, minus the zero rows.
    EchelonResult echelon() const
    {
        EchelonResult res;
        res.pivot_cols = pivot_cols();
        res.rank = res.pivot_cols.size();
        res.reduced = Matrix(res.rank, m_cols);
        for (std::size_t i = 0; i < res.rank; ++i)
            for (const auto& [c, v] : m_rows[m_pivot_row[res.pivot_cols[i]]])
                res.reduced(i, c) = v;
        return res;
    }

    /// Kernel basis of the fed system; same ordering as kernel_from_echelon().
    std::vector<Vector> kernel() const
    {
        std::vector<std::size_t> free_index(m_cols, npos);
        std::vector<Vector> basis;
        for (std::size_t c = 0; c < m_cols; ++c) {
            if (m_pivot_row[c] != npos)
                continue;
            free_index[c] = basis.size();
            Vector v(m_cols);
            v[c] = 1;
            basis.push_back(std::move(v));
        }
        for (const auto& r : m_rows) {
            const std::size_t lead = r.front().first;
            for (std::size_t i = 1; i < r.size(); ++i)
                basis[free_index[r[i].first]][lead] = -r[i].second;
        }
        return basis;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// a - f * b, merged over sorted columns.
    static SparseRow axpy(const SparseRow& a, const Rational& f, const SparseRow& b)
    {
        SparseRow out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, -(f * b[j].second));
                ++j;
            } else {
                Rational v = a[i].second;
                v.sub_mul(f, b[j].second);
                if (!v.is_zero())
                    out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::size_t m_cols;
    std::vector<SparseRow> m_rows;
    std::vector<std::size_t> m_pivot_row;
    Vector m_work;
    std::vector<bool> m_touched;
};

} // namespace leibniz

#endif
