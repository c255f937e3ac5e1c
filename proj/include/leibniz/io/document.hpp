#ifndef LEIBNIZ_IO_DOCUMENT_HPP
#define LEIBNIZ_IO_DOCUMENT_HPP

#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "../algebra.hpp"
#include "../errors.hpp"

/*
 * Algebra documents:
 *
 *   {
 *     "dim": 4,
 *     "basis": ["e1", "e2", "e3", "e4"],
 *     "brackets": [
 *       {"i": 2, "j": 1, "terms": [{"k": 3, "c": "1"}]},
 *       ...
 *     ]
 *   }
 *
 * Indices are 1-based; "c" is a rational string "p" or "p/q". The
 * canonical form (what to_document() writes) sorts brackets by (i, j)
 * and terms by k, writes canonical rationals, indents by two spaces and
 * ends with a newline.
 */
namespace leibniz::io {

namespace detail {

/*
 * Maps JSON pointers ("/brackets/0/terms/1/k") to the 1-based line where
 * the value starts. Only run on text nlohmann already accepted.
 */
class LineIndex {
public:
    explicit LineIndex(std::string_view text) : m_text(text) { value(""); }

    std::size_t line_of(const std::string& pointer) const
    {
        // Fall back to the nearest enclosing value that was indexed.
        std::string p = pointer;
        for (;;) {
            if (auto it = m_lines.find(p); it != m_lines.end())
                return it->second;
            auto slash = p.rfind('/');
            if (slash == std::string::npos)
                return 1;
            p.resize(slash);
        }
    }

private:
    void skip_ws()
    {
        while (m_pos < m_text.size()) {
            char c = m_text[m_pos];
            if (c == '\n')
                ++m_line;
            else if (c != ' ' && c != '\t' && c != '\r')
                break;
            ++m_pos;
        }
    }

    std::string string_token()
    {
        std::string out;
        ++m_pos; // opening quote
        while (m_pos < m_text.size() && m_text[m_pos] != '"') {
            if (m_text[m_pos] == '\\')
                ++m_pos;
            out += m_text[m_pos++];
        }
        ++m_pos;
        return out;
    }

    void value(const std::string& pointer)
    {
        skip_ws();
        if (m_pos >= m_text.size())
            return;
        m_lines.emplace(pointer, m_line);
        char c = m_text[m_pos];
        if (c == '{') {
            ++m_pos;
            skip_ws();
            if (m_text[m_pos] == '}') {
                ++m_pos;
                return;
            }
            for (;;) {
                skip_ws();
                auto key = string_token();
                skip_ws();
                ++m_pos; // ':'
                value(pointer + "/" + key);
                skip_ws();
                if (m_text[m_pos++] == '}')
                    return;
            }
        } else if (c == '[') {
            ++m_pos;
            skip_ws();
            if (m_text[m_pos] == ']') {
                ++m_pos;
                return;
            }
            for (std::size_t idx = 0;; ++idx) {
                value(pointer + "/" + std::to_string(idx));
                skip_ws();
                if (m_text[m_pos++] == ']')
                    return;
            }
        } else if (c == '"') {
            string_token();
        } else {
            while (m_pos < m_text.size() && std::string_view(",]} \t\r\n").find(m_text[m_pos]) == std::string_view::npos)
                ++m_pos;
        }
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
    std::size_t m_line = 1;
    std::map<std::string, std::size_t> m_lines;
};

} // namespace detail

/// Canonical document text for an algebra.
inline std::string to_document(const LeibnizAlgebra& L)
{
    nlohmann::ordered_json doc;
    doc["dim"] = L.dim();
    doc["basis"] = L.labels();
    doc["brackets"] = nlohmann::ordered_json::array();
    for (const auto& e : L.entries()) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < e.value.size(); ++k)
            if (!e.value[k].is_zero())
                terms.push_back({{"k", k + 1}, {"c", e.value[k].str()}});
        doc["brackets"].push_back({{"i", e.i}, {"j", e.j}, {"terms", std::move(terms)}});
    }
    return doc.dump(2) + "\n";
}

/*
 * Parses and validates a document. Errors are ParseError with the message
 * "<source>:<line>: <what>".
 */
inline LeibnizAlgebra parse_document(std::string_view text, const std::string& source = "<input>")
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports "... at line L, column C: ..."; keep its wording.
        std::size_t line = 1;
        for (std::size_t i = 0; i < std::min(e.byte, text.size()); ++i)
            if (text[i] == '\n')
                ++line;
        throw ParseError(source + ":" + std::to_string(line) + ": malformed JSON: " + e.what());
    }
    const detail::LineIndex lines(text);
    auto fail = [&](const std::string& pointer, const std::string& what) -> ParseError {
        return ParseError(source + ":" + std::to_string(lines.line_of(pointer)) + ": " + pointer + ": " + what);
    };
    auto require_keys = [&](const nlohmann::json& obj, const std::string& pointer, std::initializer_list<const char*> keys) {
        if (!obj.is_object())
            throw fail(pointer, "expected an object");
        std::set<std::string> allowed(keys.begin(), keys.end());
        for (auto k : keys)
            if (!obj.contains(k))
                throw fail(pointer, std::string("missing key \"") + k + "\"");
        for (auto it = obj.begin(); it != obj.end(); ++it)
            if (!allowed.count(it.key()))
                throw fail(pointer + "/" + it.key(), "unknown key \"" + it.key() + "\"");
    };
    auto index_in_range = [&](const nlohmann::json& v, const std::string& pointer, std::size_t dim) -> std::size_t {
        if (!v.is_number_integer())
            throw fail(pointer, "expected an integer index");
        auto i = v.get<long long>();
        if (i < 1 || static_cast<std::size_t>(i) > dim)
            throw fail(pointer, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
        return static_cast<std::size_t>(i);
    };

    require_keys(doc, "", {"dim", "basis", "brackets"});
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
        throw fail("/dim", "\"dim\" must be a positive integer");
    const auto dim = doc["dim"].get<std::size_t>();

    const auto& basis = doc["basis"];
    if (!basis.is_array() || basis.size() != dim)
        throw fail("/basis", "\"basis\" must be an array of " + std::to_string(dim) + " strings");
    std::vector<std::string> labels;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (!basis[b].is_string())
            throw fail("/basis/" + std::to_string(b), "basis labels must be strings");
        labels.push_back(basis[b].get<std::string>());
    }

    const auto& brackets = doc["brackets"];
    if (!brackets.is_array())
        throw fail("/brackets", "\"brackets\" must be an array");
    std::vector<TableEntry> entries;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < brackets.size(); ++e) {
        const std::string ep = "/brackets/" + std::to_string(e);
        const auto& entry = brackets[e];
        require_keys(entry, ep, {"i", "j", "terms"});
        const auto i = index_in_range(entry["i"], ep + "/i", dim);
        const auto j = index_in_range(entry["j"], ep + "/j", dim);
        if (!seen.insert({i, j}).second)
            throw fail(ep, "duplicate product [" + std::to_string(i) + "," + std::to_string(j) + "]");
        const auto& terms = entry["terms"];
        if (!terms.is_array() || terms.empty())
            throw fail(ep + "/terms", "\"terms\" must be a non-empty array");
        Vector value(dim);
        std::set<std::size_t> ks;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string tp = ep + "/terms/" + std::to_string(t);
            require_keys(terms[t], tp, {"k", "c"});
            const auto k = index_in_range(terms[t]["k"], tp + "/k", dim);
            if (!ks.insert(k).second)
                throw fail(tp + "/k", "duplicate output index k=" + std::to_string(k));
            if (!terms[t]["c"].is_string())
                throw fail(tp + "/c", "coefficient must be a rational string such as \"3\" or \"-1/2\"");
            Rational c;
            try {
                c = Rational::parse(terms[t]["c"].get<std::string>());
            } catch (const ParseError& err) {
                throw fail(tp + "/c", err.what());
            }
            if (c.is_zero())
                throw fail(tp + "/c", "coefficient must be nonzero");
            value[k - 1] = std::move(c);
        }
        entries.push_back({i, j, std::move(value)});
    }
    return LeibnizAlgebra(dim, std::move(labels), entries);
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline LeibnizAlgebra load_document(const std::string& path) { return parse_document(read_file(path), path); }

inline void save_document(const LeibnizAlgebra& L, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError(path + ": cannot open file for writing");
    out << to_document(L);
    if (!out)
        throw ParseError(path + ": write failed");
}

} // namespace leibniz::io

#endif
