#ifndef LEIBNIZ_FAMILIES_HPP
#define LEIBNIZ_FAMILIES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"

namespace leibniz::families {

namespace detail {

inline void require_min_dim(std::size_t n, const char* family)
{
    if (n < 3)
        throw ParameterError(std::string(family) + ": n must be at least 3, got " + std::to_string(n));
}

/// Accumulates products coefficient by coefficient, 1-based.
class TableBuilder {
public:
    explicit TableBuilder(std::size_t dim) : m_dim(dim) {}

    void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c)
    {
        auto& v = m_products[{i, j}];
        if (v.empty())
            v.resize(m_dim);
        v[k - 1] += c;
    }

    std::vector<TableEntry> entries() const
    {
        std::vector<TableEntry> out;
        for (const auto& [ij, v] : m_products)
            out.push_back({ij.first, ij.second, v});
        return out;
    }

private:
    std::size_t m_dim;
    std::map<std::pair<std::size_t, std::size_t>, Vector> m_products;
};

} // namespace detail

/// n-dimensional algebra with zero bracket.
inline LeibnizAlgebra abelian(std::size_t n) { return LeibnizAlgebra(n, {}); }

/// F_n^1: [e_i, e_1] = e_{i+1} for 2 <= i <= n-1.
inline LeibnizAlgebra f1(std::size_t n)
{
    detail::require_min_dim(n, "F1");
    detail::TableBuilder t(n);
    for (std::size_t i = 2; i <= n - 1; ++i)
        t.add(i, 1, i + 1, 1);
    return LeibnizAlgebra(n, t.entries());
}

/// F_n^2: [e_i, e_1] = e_{i+1} for 1 <= i <= n-2.
inline LeibnizAlgebra f2(std::size_t n)
{
    detail::require_min_dim(n, "F2");
    detail::TableBuilder t(n);
    for (std::size_t i = 1; i <= n - 2; ++i)
        t.add(i, 1, i + 1, 1);
    return LeibnizAlgebra(n, t.entries());
}

/*
 * F_n^3(alpha):
 *   [e_i, e_1] = -[e_1, e_i] = e_{i+1},                         2 <= i <= n-1
 *   [e_i, e_{n+1-i}] = -[e_{n+1-i}, e_i] = alpha (-1)^{i+1} e_n, 2 <= i <= n-1
 * alpha is 0 or 1, and must be 0 for odd n.
 */
inline LeibnizAlgebra f3(std::size_t n, int alpha)
{
    detail::require_min_dim(n, "F3");
    if (alpha != 0 && alpha != 1)
        throw ParameterError("F3: alpha must be 0 or 1, got " + std::to_string(alpha));
    if (alpha == 1 && n % 2 == 1)
        throw ParameterError("F3: alpha must be 0 for odd n (n=" + std::to_string(n) + ")");
    detail::TableBuilder t(n);
    for (std::size_t i = 2; i <= n - 1; ++i) {
        t.add(i, 1, i + 1, 1);
        t.add(1, i, i + 1, -1);
    }
    if (alpha == 1) {
        // Each unordered pair {i, n+1-i} is visited twice; the two visits
        // write the two orderings and agree because n+1 is odd.
        for (std::size_t i = 2; i <= n - 1; ++i) {
            const std::size_t j = n + 1 - i;
            const Rational c = (i % 2 == 0) ? Rational(-1) : Rational(1); // (-1)^{i+1}
            t.add(i, j, n, c);
        }
    }
    return LeibnizAlgebra(n, t.entries());
}

inline constexpr std::size_t x_index(std::size_t n) { return n + 1; }
inline constexpr std::size_t y_index(std::size_t n) { return n + 2; }

/*
 * R(F_n^1), basis e_1..e_n, x, y (x = index n+1, y = index n+2):
 *   [e_i, e_1] = e_{i+1}    2 <= i <= n-1
 *   [e_1, x]   = e_1
 *   [e_i, x]   = (i-1) e_i  2 <= i <= n
 *   [e_i, y]   = e_i        2 <= i <= n
 *   [x, e_1]   = -e_1
 */
inline LeibnizAlgebra r_f1(std::size_t n)
{
    detail::require_min_dim(n, "RF1");
    const std::size_t dim = n + 2, x = x_index(n), y = y_index(n);
    detail::TableBuilder t(dim);
    for (std::size_t i = 2; i <= n - 1; ++i)
        t.add(i, 1, i + 1, 1);
    t.add(1, x, 1, 1);
    for (std::size_t i = 2; i <= n; ++i) {
        t.add(i, y, i, 1);
        t.add(i, x, i, Rational(static_cast<long>(i - 1)));
    }
    t.add(x, 1, 1, -1);
    auto labels = LeibnizAlgebra::default_labels(n);
    labels.push_back("x");
    labels.push_back("y");
    return LeibnizAlgebra(dim, std::move(labels), t.entries());
}

} // namespace leibniz::families

#endif
