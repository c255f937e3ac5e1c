#ifndef LEIBNIZ_IO_SPEC_HPP
#define LEIBNIZ_IO_SPEC_HPP

#include <charconv>
#include <climits>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "../errors.hpp"
#include "../families.hpp"
#include "document.hpp"

namespace leibniz::io {

enum class FamilyTag { F1, F2, F3, RF1 };

/// Upper bound on n accepted from text; the dense table is (n+2)^2 vectors of length n+2.
inline constexpr std::size_t max_family_n = 512;

/*
 * Either a family instance ("F1:n=6", "F3:n=6,alpha=1", "RF1:n=6") or a
 * document on disk ("file:path/to/algebra.json"). Grammar:
 * TAG:key=value[,key=value], no spaces.
 */
struct AlgebraSpec {
    std::optional<FamilyTag> family;
    std::size_t n = 0;
    int alpha = 0;
    std::string path;

    bool is_file() const { return !family.has_value(); }
};

namespace detail {

inline std::size_t parse_count(std::string_view key, std::string_view v, std::string_view spec)
{
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
        throw ParseError("algebra spec '" + std::string(spec) + "': " + std::string(key)
                         + " must be a non-negative integer, got '" + std::string(v) + "'");
    return out;
}

} // namespace detail

inline AlgebraSpec parse_spec(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("algebra spec '" + std::string(text) + "': expected TAG:key=value or file:path");
    auto tag = text.substr(0, colon);
    auto rest = text.substr(colon + 1);
    AlgebraSpec spec;
    if (tag == "file") {
        if (rest.empty())
            throw ParseError("algebra spec '" + std::string(text) + "': empty file path");
        spec.path = std::string(rest);
        return spec;
    }
    static const std::map<std::string_view, FamilyTag> tags{
        {"F1", FamilyTag::F1}, {"F2", FamilyTag::F2}, {"F3", FamilyTag::F3}, {"RF1", FamilyTag::RF1}};
    auto it = tags.find(tag);
    if (it == tags.end())
        throw ParseError("algebra spec '" + std::string(text) + "': unknown family '" + std::string(tag)
                         + "' (expected F1, F2, F3, RF1 or file)");
    spec.family = it->second;

    std::map<std::string, std::string_view> kv;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        auto item = rest.substr(0, comma);
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw ParseError("algebra spec '" + std::string(text) + "': expected key=value, got '" + std::string(item) + "'");
        std::string key(item.substr(0, eq));
        if (!kv.emplace(key, item.substr(eq + 1)).second)
            throw ParseError("algebra spec '" + std::string(text) + "': repeated key '" + key + "'");
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (comma != std::string_view::npos && rest.empty())
            throw ParseError("algebra spec '" + std::string(text) + "': trailing comma");
    }
    for (const auto& [key, v] : kv) {
        if (key == "n")
            spec.n = detail::parse_count(key, v, text);
        else if (key == "alpha" && spec.family == FamilyTag::F3)
            spec.alpha = static_cast<int>(std::min<std::size_t>(detail::parse_count(key, v, text), INT_MAX));
        else
            throw ParseError("algebra spec '" + std::string(text) + "': unknown key '" + key + "'");
    }
    if (!kv.count("n"))
        throw ParseError("algebra spec '" + std::string(text) + "': missing n");
    if (spec.n > max_family_n)
        throw ParseError("algebra spec '" + std::string(text) + "': n larger than " + std::to_string(max_family_n));
    return spec;
}

/// Builds the algebra; family constraint violations surface as ParameterError.
inline LeibnizAlgebra build(const AlgebraSpec& spec)
{
    if (spec.is_file())
        return load_document(spec.path);
    switch (*spec.family) {
    case FamilyTag::F1: return families::f1(spec.n);
    case FamilyTag::F2: return families::f2(spec.n);
    case FamilyTag::F3: return families::f3(spec.n, spec.alpha);
    case FamilyTag::RF1: return families::r_f1(spec.n);
    }
    throw std::logic_error("build: unhandled family");
}

inline LeibnizAlgebra build(std::string_view text) { return build(parse_spec(text)); }

} // namespace leibniz::io

#endif
