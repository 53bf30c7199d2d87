#include "chordal/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "chordal/error.hpp"

namespace chordal {

namespace {

int read_n(const Json& j) {
    if (!j.is_object()) throw InputError("complex JSON must be an object");
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw InputError("complex JSON needs an integer field \"n\"");
    const long long n = j.at("n").get<long long>();
    if (n < 0 || n > kMaxVertices)
        throw InputError("\"n\" must lie in 0.." + std::to_string(kMaxVertices));
    return static_cast<int>(n);
}

struct ParsedMonomial {
    std::map<int, std::uint32_t> exponents;
    int max_index = 0;
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::uint32_t parse_number(std::string_view s, const std::string& line) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InputError("cannot parse number \"" + std::string(s) + "\" in line \"" + line + "\"");
    return v;
}

ParsedMonomial parse_monomial_line(const std::string& line, bool allow_exponents) {
    ParsedMonomial m;
    if (line == "1") return m;
    std::string token;
    std::vector<std::string> tokens;
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '*') {
            if (!token.empty()) tokens.push_back(std::move(token));
            token.clear();
        } else {
            token += c;
        }
    }
    if (!token.empty()) tokens.push_back(std::move(token));
    if (tokens.empty()) throw InputError("empty monomial line");

    for (const std::string& t : tokens) {
        if (t.size() < 2 || (t[0] != 'x' && t[0] != 'X'))
            throw InputError("bad variable token \"" + t + "\" in line \"" + line + "\"");
        const auto caret = t.find('^');
        const std::string_view body = std::string_view(t).substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        const std::uint32_t index = parse_number(body, line);
        if (index < 1 || index > static_cast<std::uint32_t>(kMaxVertices))
            throw InputError("variable index " + std::to_string(index) + " outside 1.." +
                             std::to_string(kMaxVertices));
        std::uint32_t e = 1;
        if (caret != std::string::npos) {
            if (!allow_exponents)
                throw InputError("exponent in \"" + line + "\"; only square-free monomials are accepted here");
            e = parse_number(std::string_view(t).substr(caret + 1), line);
        }
        if (!allow_exponents && m.exponents.contains(static_cast<int>(index)))
            throw InputError("repeated variable in \"" + line + "\"; only square-free monomials are accepted here");
        m.exponents[static_cast<int>(index)] += e;
        m.max_index = std::max(m.max_index, static_cast<int>(index));
    }
    return m;
}

struct ParsedIdeal {
    int n = -1;
    std::vector<ParsedMonomial> monomials;
};

ParsedIdeal parse_ideal_text(std::string_view text, bool allow_exponents) {
    ParsedIdeal out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        const std::string line = trim(text.substr(start, end - start));
        start = end + 1;
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("n=", 0) == 0 || line.rfind("n =", 0) == 0) {
            if (out.n >= 0 || !out.monomials.empty())
                throw InputError("the header \"n=...\" must come first and only once");
            const std::string value = trim(std::string_view(line).substr(line.find('=') + 1));
            out.n = static_cast<int>(parse_number(value, line));
            if (out.n > kMaxVertices)
                throw InputError("n = " + std::to_string(out.n) + " exceeds " + std::to_string(kMaxVertices));
            continue;
        }
        out.monomials.push_back(parse_monomial_line(line, allow_exponents));
    }
    int used = 0;
    for (const auto& m : out.monomials) used = std::max(used, m.max_index);
    if (out.n < 0) out.n = used;
    if (used > out.n)
        throw InputError("variable x" + std::to_string(used) + " exceeds n = " + std::to_string(out.n));
    return out;
}

}  // namespace

Json face_to_json(Face f) {
    Json a = Json::array();
    for (int v : f.vertices()) a.push_back(v);
    return a;
}

Face face_from_json(const Json& j, int n) {
    if (!j.is_array()) throw InputError("a face must be a JSON array of vertex labels");
    std::uint64_t mask = 0;
    for (const Json& v : j) {
        if (!v.is_number_integer()) throw InputError("vertex labels must be integers");
        const long long label = v.get<long long>();
        if (label < 1 || label > n)
            throw InputError("vertex label " + std::to_string(label) + " outside 1.." + std::to_string(n));
        mask |= Face::bit(static_cast<int>(label));
    }
    return Face::from_mask(mask);
}

Json to_json(const SimplicialComplex& complex) {
    Json j;
    j["n"] = complex.n();
    if (complex.ground() != Face::range(complex.n())) j["vertices"] = face_to_json(complex.ground());
    if (complex.is_void()) {
        j["facets"] = nullptr;
    } else {
        Json facets = Json::array();
        for (Face f : complex.facets()) facets.push_back(face_to_json(f));
        j["facets"] = std::move(facets);
    }
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    const int n = read_n(j);
    Face ground = Face::range(n);
    if (j.contains("vertices")) ground = face_from_json(j.at("vertices"), n);
    if (!j.contains("facets")) throw InputError("complex JSON needs a field \"facets\"");
    const Json& facets = j.at("facets");
    if (facets.is_null()) return SimplicialComplex::void_complex(n).with_ground(ground);
    if (!facets.is_array()) throw InputError("\"facets\" must be an array or null");
    std::vector<Face> faces;
    for (const Json& f : facets) {
        const Face face = face_from_json(f, n);
        if (!ground.contains(face)) throw InputError("facet " + face.to_string() + " leaves the vertex set");
        faces.push_back(face);
    }
    return SimplicialComplex::on_ground(n, ground, std::move(faces));
}

Json to_json(const FreeSequence& sequence) {
    Json j;
    j["kind"] = sequence.kind == FreeSequence::Kind::Collapse ? "collapse" : "simplicial_order";
    j["d"] = sequence.d;
    Json faces = Json::array();
    for (Face f : sequence.faces) faces.push_back(face_to_json(f));
    j["faces"] = std::move(faces);
    return j;
}

FreeSequence sequence_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("certificate JSON must be an object");
    FreeSequence seq;
    const std::string kind = j.value("kind", std::string{});
    if (kind == "collapse")
        seq.kind = FreeSequence::Kind::Collapse;
    else if (kind == "simplicial_order")
        seq.kind = FreeSequence::Kind::SimplicialOrder;
    else
        throw InputError("certificate \"kind\" must be \"collapse\" or \"simplicial_order\"");
    if (!j.contains("d") || !j.at("d").is_number_integer())
        throw InputError("certificate needs an integer field \"d\"");
    seq.d = j.at("d").get<int>();
    if (!j.contains("faces") || !j.at("faces").is_array())
        throw InputError("certificate needs an array field \"faces\"");
    for (const Json& f : j.at("faces")) seq.faces.push_back(face_from_json(f, kMaxVertices));
    return seq;
}

Json to_json(const BettiTable& table) {
    Json entries = Json::array();
    for (const auto& [key, value] : table.entries())
        entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", value}});
    return {{"field", table.field().name()}, {"entries", std::move(entries)}};
}

SquarefreeIdeal parse_squarefree_ideal(std::string_view text) {
    const ParsedIdeal parsed = parse_ideal_text(text, false);
    std::vector<Face> gens;
    for (const auto& m : parsed.monomials) {
        std::uint64_t mask = 0;
        for (const auto& [v, e] : m.exponents) mask |= Face::bit(v);
        gens.push_back(Face::from_mask(mask));
    }
    return SquarefreeIdeal(parsed.n, std::move(gens));
}

MonomialIdeal parse_monomial_ideal(std::string_view text) {
    const ParsedIdeal parsed = parse_ideal_text(text, true);
    std::vector<Monomial> gens;
    for (const auto& m : parsed.monomials) {
        std::vector<std::uint32_t> e(static_cast<std::size_t>(parsed.n), 0);
        for (const auto& [v, exp] : m.exponents) e[static_cast<std::size_t>(v - 1)] = exp;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(parsed.n, std::move(gens));
}

std::string format_ideal(const SquarefreeIdeal& ideal) {
    std::string out = "n=" + std::to_string(ideal.n()) + "\n";
    for (Face g : ideal.generators()) {
        if (g.empty()) {
            out += "1\n";
            continue;
        }
        std::string line;
        for (int v : g.vertices()) line += (line.empty() ? "x" : "*x") + std::to_string(v);
        out += line + "\n";
    }
    return out;
}

}  // namespace chordal
