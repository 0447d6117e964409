#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "covspace/complex.hpp"
#include "covspace/coset.hpp"
#include "covspace/cover.hpp"
#include "covspace/errors.hpp"
#include "covspace/presentation.hpp"
#include "covspace/word.hpp"

namespace covspace {

namespace detail {

inline long long parse_number(const std::string& tok, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size())
            throw input_error("");
        return v;
    } catch (...) {
        throw input_error("malformed number '" + tok + "' in " + what);
    }
}

inline int generator_index(char c, const std::vector<char>& names) {
    char low = char(std::tolower(static_cast<unsigned char>(c)));
    auto it = std::find(names.begin(), names.end(), low);
    if (it == names.end())
        throw input_error(std::string("letter '") + c + "' is not a declared generator");
    return int(it - names.begin());
}

} // namespace detail

// Word syntax: lowercase letter = generator, uppercase = its inverse,
// ^k repeats the immediately preceding letter k times, whitespace ignored.
inline Word parse_word_text(const std::string& s, const std::vector<char>& names) {
    std::vector<Letter> raw;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == '^') {
            if (raw.empty())
                throw input_error("'^' with no preceding letter");
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            if (j == i + 1)
                throw input_error("'^' must be followed by a positive integer");
            long long k = detail::parse_number(s.substr(i + 1, j - i - 1), "exponent");
            if (k < 1)
                throw input_error("'^' exponent must be positive");
            Letter last = raw.back();
            for (long long r = 1; r < k; ++r)
                raw.push_back(last);
            i = j - 1;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw input_error(std::string("unexpected character '") + c + "' in word");
        bool inv = std::isupper(static_cast<unsigned char>(c));
        raw.push_back(Letter{detail::generator_index(c, names), inv});
    }
    return reduce_word(raw, int(names.size()));
}

inline std::string serialize_word(const Word& w, const std::vector<char>& names) {
    if (int(names.size()) != w.alphabet)
        throw input_error("word alphabet does not match the generator names");
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w.letters[j] == w.letters[i])
            ++j;
        char c = names[w.letters[i].gen];
        if (w.letters[i].inv)
            c = char(std::toupper(static_cast<unsigned char>(c)));
        out += c;
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

// Presentation syntax: '<' gens '|' relators '>', generators whitespace
// separated single lowercase letters, relators comma separated words.
inline Presentation parse_presentation_text(const std::string& s) {
    auto lt = s.find('<');
    auto bar = s.find('|');
    auto gt = s.rfind('>');
    if (lt == std::string::npos || bar == std::string::npos || gt == std::string::npos ||
        !(lt < bar && bar < gt))
        throw input_error("presentation must look like '<gens | relators>'");
    for (std::size_t i = 0; i < lt; ++i)
        if (!std::isspace(static_cast<unsigned char>(s[i])))
            throw input_error("unexpected text before '<'");
    for (std::size_t i = gt + 1; i < s.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(s[i])))
            throw input_error("unexpected text after '>'");

    std::vector<char> names;
    std::istringstream gens(s.substr(lt + 1, bar - lt - 1));
    std::string tok;
    while (gens >> tok) {
        if (tok.size() != 1 || tok[0] < 'a' || tok[0] > 'z')
            throw input_error("generator '" + tok + "' must be a single lowercase letter");
        names.push_back(tok[0]);
    }
    if (names.empty())
        throw input_error("empty generator list");

    std::vector<Word> relators;
    std::string rels = s.substr(bar + 1, gt - bar - 1);
    std::size_t start = 0;
    bool any_content = rels.find_first_not_of(" \t\r\n") != std::string::npos;
    while (any_content && start <= rels.size()) {
        std::size_t comma = rels.find(',', start);
        std::string chunk = rels.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        if (chunk.find_first_not_of(" \t\r\n") == std::string::npos)
            throw input_error("empty relator");
        relators.push_back(parse_word_text(chunk, names));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return make_presentation(names, std::move(relators));
}

inline std::string serialize_presentation(const Presentation& p) {
    if (p.generator_names.empty() && p.generator_count > 0)
        throw input_error("presentation has no generator names to serialize");
    std::string out = "<";
    for (int g = 0; g < p.generator_count; ++g) {
        if (g) out += ' ';
        out += p.generator_names[g];
    }
    out += " |";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        out += r ? ", " : " ";
        out += serialize_word(p.relators[r], p.generator_names);
    }
    out += ">";
    return out;
}

// Complex file format, line oriented with '#' comments:
//   complex <name>        optional
//   vertices <count>
//   edge <id> <src> <dst>
//   face <id> <signed-edge> ...      signed edges written +k or -k
//   cell3 <count>         optional, default 0
//   basepoint <vertex-id>
inline TwoComplex parse_complex_text(const std::string& text) {
    TwoComplex x;
    bool have_vertices = false, have_basepoint = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw))
            continue;
        auto where = [&] { return " on line " + std::to_string(lineno); };
        auto need_number = [&](const std::string& what) {
            std::string tok;
            if (!(ls >> tok))
                throw input_error("missing " + what + where());
            return detail::parse_number(tok, what + where());
        };
        if (kw == "complex") {
            std::string name;
            ls >> name;
        } else if (kw == "vertices") {
            x.vertex_count = int(need_number("vertex count"));
            have_vertices = true;
        } else if (kw == "edge") {
            long long id = need_number("edge id");
            if (id != int(x.edges.size()))
                throw input_error("edge ids must appear in order" + where());
            int src = int(need_number("edge source"));
            int dst = int(need_number("edge destination"));
            x.edges.push_back({src, dst});
        } else if (kw == "face") {
            long long id = need_number("face id");
            if (id != int(x.faces.size()))
                throw input_error("face ids must appear in order" + where());
            std::vector<SignedEdge> bnd;
            std::string tok;
            while (ls >> tok) {
                if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
                    throw input_error("signed edge '" + tok + "' must start with + or -" +
                                      where());
                long long e = detail::parse_number(tok.substr(1), "edge index" + where());
                bnd.push_back(SignedEdge{int(e), tok[0] == '-'});
            }
            if (bnd.empty())
                throw input_error("face with empty boundary" + where());
            x.faces.push_back(std::move(bnd));
        } else if (kw == "cell3") {
            x.cell3_count = int(need_number("3-cell count"));
        } else if (kw == "basepoint") {
            x.basepoint = int(need_number("basepoint"));
            have_basepoint = true;
        } else {
            throw input_error("unknown directive '" + kw + "'" + where());
        }
    }
    if (!have_vertices)
        throw input_error("complex file is missing a 'vertices' line");
    if (!have_basepoint)
        throw input_error("complex file is missing a 'basepoint' line");
    ValidationReport rep = validate_complex(x);
    if (!rep.ok())
        throw input_error("invalid complex: " + rep.errors.front());
    return x;
}

inline std::string serialize_complex(const TwoComplex& x, const std::string& name = "") {
    std::ostringstream out;
    if (!name.empty())
        out << "complex " << name << "\n";
    out << "vertices " << x.vertex_count << "\n";
    for (std::size_t e = 0; e < x.edges.size(); ++e)
        out << "edge " << e << " " << x.edges[e].src << " " << x.edges[e].dst << "\n";
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        out << "face " << f;
        for (const SignedEdge& s : x.faces[f])
            out << " " << (s.reversed ? '-' : '+') << s.edge;
        out << "\n";
    }
    if (x.cell3_count != 0)
        out << "cell3 " << x.cell3_count << "\n";
    out << "basepoint " << x.basepoint << "\n";
    return out.str();
}

// Coset tables serialize as 'table <count>' followed by one row per coset,
// listing images under g0, g0^-1, g1, g1^-1, ...
inline std::string serialize_table(const CosetTable& t) {
    std::ostringstream out;
    out << "table " << t.coset_count << "\n";
    for (int c = 0; c < t.coset_count; ++c) {
        for (int s = 0; s < t.cols(); ++s)
            out << (s ? " " : "") << t.at(c, s);
        out << "\n";
    }
    return out.str();
}

// A subgroup file either lists generator words or a full coset table.
struct SubgroupInput {
    std::vector<Word> words;
    std::optional<CosetTable> table;
};

inline SubgroupInput parse_subgroup_text(const std::string& text, const Presentation& p) {
    SubgroupInput out;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos)
            continue;
        lines.push_back(line);
    }
    if (lines.empty())
        throw input_error("empty subgroup file");
    std::istringstream head(lines[0]);
    std::string kw;
    head >> kw;
    if (kw == "generators") {
        for (std::size_t i = 1; i < lines.size(); ++i)
            out.words.push_back(parse_word_text(lines[i], p.generator_names));
        return out;
    }
    if (kw == "table") {
        std::string tok;
        if (!(head >> tok))
            throw input_error("missing coset count after 'table'");
        int n = int(detail::parse_number(tok, "coset count"));
        if (int(lines.size()) - 1 != n)
            throw input_error("table declares " + std::to_string(n) + " cosets but has " +
                              std::to_string(lines.size() - 1) + " rows");
        CosetTable t;
        t.presentation = p;
        t.coset_count = n;
        t.action.reserve(std::size_t(n) * 2 * p.generator_count);
        for (int c = 0; c < n; ++c) {
            std::istringstream row(lines[c + 1]);
            for (int s = 0; s < 2 * p.generator_count; ++s) {
                if (!(row >> tok))
                    throw input_error("table row " + std::to_string(c) + " is too short");
                t.action.push_back(int(detail::parse_number(tok, "table entry")));
            }
            if (row >> tok)
                throw input_error("table row " + std::to_string(c) + " is too long");
        }
        validate_table(t);
        out.table = std::move(t);
        return out;
    }
    throw input_error("subgroup file must start with 'generators' or 'table'");
}

// Projection file: one line per total cell, mapping it to its base cell.
inline std::string serialize_projection(const CoveringMap& cov) {
    std::ostringstream out;
    for (std::size_t v = 0; v < cov.vertex_map.size(); ++v)
        out << "vmap " << v << " " << cov.vertex_map[v] << "\n";
    for (std::size_t e = 0; e < cov.edge_map.size(); ++e)
        out << "emap " << e << " " << cov.edge_map[e] << "\n";
    for (std::size_t f = 0; f < cov.face_map.size(); ++f)
        out << "fmap " << f << " " << cov.face_map[f] << "\n";
    return out.str();
}

} // namespace covspace
