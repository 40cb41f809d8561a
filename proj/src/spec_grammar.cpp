#include "howe/spec_grammar.hpp"

#include <charconv>
#include <string>

namespace howe {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

template <typename Int>
Int parse_integer(std::string_view token, std::string_view what) {
    token = trim(token);
    Int value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw ValidationError("malformed " + std::string(what) + " '" + std::string(token) + "'");
    return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    for (auto token : split(trim(text), ',')) parts.push_back(parse_integer<int>(token, "partition part"));
    return Partition(std::move(parts));
}

SemisimpleDescriptor parse_orbits(std::string_view text, int q, int degree) {
    SemisimpleDescriptor s{q, exponent_modulus(q, degree), {}};
    for (auto token : split(trim(text), ',')) {
        token = trim(token);
        const auto caret = token.find('^');
        const auto exponent_text = trim(token.substr(0, caret));
        const int multiplicity =
            caret == std::string_view::npos ? 1 : parse_integer<int>(token.substr(caret + 1), "multiplicity");
        std::optional<std::int64_t> exponent;
        if (exponent_text != "z") exponent = parse_integer<std::int64_t>(exponent_text, "exponent");
        s.orbits.push_back(orbit_closure_mod(q, s.modulus, exponent, multiplicity));
    }
    s.validate();
    return s;
}

std::vector<GlCuspidal> parse_gl_part(std::string_view text) {
    std::vector<GlCuspidal> out;
    for (auto token : split(trim(text), ',')) {
        token = trim(token);
        const auto colon = token.find(':');
        if (colon == std::string_view::npos) {
            if (token != "1") throw ValidationError("GL entry '" + std::string(token) + "' must be size:label");
            out.push_back(trivial_gl1());
            continue;
        }
        GlCuspidal entry{parse_integer<int>(token.substr(0, colon), "GL size"), std::string(trim(token.substr(colon + 1)))};
        if (entry.size < 1 || entry.label.empty())
            throw ValidationError("GL entry '" + std::string(token) + "' needs a positive size and a label");
        if (entry.label == "1" && entry.size != 1)
            throw ValidationError("the label 1 is reserved for the trivial cuspidal of GL_1");
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace howe
