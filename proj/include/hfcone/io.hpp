#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hfcone/error.hpp"
#include "hfcone/knot_complex.hpp"
#include "hfcone/rational.hpp"

// Line-oriented knot complex format:
//
//   # comment
//   complex <id> spinc=<label>
//   gen <name> A=<int> M=<int or p/q>
//   d <src> : U^<n> <dst>[, U^<n> <dst> ...]
//   flip <src> : U^<n> <dst>[, ...]
//   end
//
// Comment lines before the first complex are kept as document metadata;
// all other comments and blank lines are ignored.

namespace hfcone {

struct InputDocument {
    std::vector<std::string> comments;
    std::vector<KnotComplex> complexes;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<int> parse_int(std::string_view s) {
    auto r = Rational::parse(s);
    if (!r || !r->is_integer()) return std::nullopt;
    return static_cast<int>(r->num());
}

inline bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (ch == ',' || ch == ':' || ch == '=' || ch == '#' || ch == ' ' || ch == '\t') return false;
    }
    return true;
}

inline std::string_view value_after(std::string_view token, std::string_view key) {
    if (token.substr(0, key.size()) != key) return {};
    return token.substr(key.size());
}

struct ParsedTerm {
    std::string target;
    int u_power;
};

/// Parses "<src> : U^<n> <dst>, U^<n> <dst>" (the part after the keyword).
inline std::pair<std::string, std::vector<ParsedTerm>> parse_terms(std::string_view rest, std::size_t line) {
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw SyntaxError(line, "expected ':' after source generator");
    auto src_tokens = split_ws(rest.substr(0, colon));
    if (src_tokens.size() != 1 || !valid_name(src_tokens[0])) throw SyntaxError(line, "expected one source generator");
    std::vector<ParsedTerm> terms;
    std::string_view body = rest.substr(colon + 1);
    std::size_t start = 0;
    for (;;) {
        auto comma = body.find(',', start);
        auto item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        auto toks = split_ws(item);
        if (toks.size() != 2) throw SyntaxError(line, "expected 'U^<n> <target>'");
        auto power = value_after(toks[0], "U^");
        auto n = parse_int(power);
        if (power.empty() || !n) throw SyntaxError(line, "bad U power '" + toks[0] + "'");
        if (!valid_name(toks[1])) throw SyntaxError(line, "bad target name '" + toks[1] + "'");
        terms.push_back({toks[1], *n});
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return {src_tokens[0], std::move(terms)};
}

}  // namespace detail

/// Parses and validates a document. Throws SyntaxError, DuplicateName, or
/// ValidationError; never returns a partially valid document.
inline InputDocument parse(std::string_view text) {
    InputDocument doc;
    std::optional<KnotComplex> current;
    std::set<std::string> ids;
    std::set<std::string> labels;
    std::set<std::string> gen_names;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        auto hash = raw.find('#');
        if (hash != std::string_view::npos) {
            if (!current && doc.complexes.empty() && detail::split_ws(raw.substr(0, hash)).empty()) {
                doc.comments.emplace_back(raw);
            }
            raw = raw.substr(0, hash);
        }
        auto tokens = detail::split_ws(raw);
        if (tokens.empty()) continue;
        const auto& kw = tokens[0];

        if (kw == "complex") {
            if (current) throw SyntaxError(line_no, "'complex' before 'end' of previous complex");
            if (tokens.size() != 3) throw SyntaxError(line_no, "expected 'complex <id> spinc=<label>'");
            auto label = detail::value_after(tokens[2], "spinc=");
            if (!detail::valid_name(tokens[1]) || label.empty()) {
                throw SyntaxError(line_no, "expected 'complex <id> spinc=<label>'");
            }
            if (!ids.insert(tokens[1]).second) throw DuplicateName("complex id '" + tokens[1] + "' repeated");
            if (!labels.insert(std::string(label)).second) {
                throw DuplicateName("spinc label '" + std::string(label) + "' repeated");
            }
            current = KnotComplex{tokens[1], std::string(label), {}, {}, std::nullopt};
            gen_names.clear();
            continue;
        }
        if (!current) throw SyntaxError(line_no, "'" + kw + "' outside a complex block");

        if (kw == "end") {
            if (tokens.size() != 1) throw SyntaxError(line_no, "unexpected tokens after 'end'");
            auto report = validate(*current);
            if (!report.ok()) throw ValidationError(current->id, report.str());
            doc.complexes.push_back(std::move(*current));
            current.reset();
        } else if (kw == "gen") {
            if (tokens.size() != 4) throw SyntaxError(line_no, "expected 'gen <name> A=<int> M=<rational>'");
            auto a = detail::parse_int(detail::value_after(tokens[2], "A="));
            auto m = Rational::parse(detail::value_after(tokens[3], "M="));
            if (!detail::valid_name(tokens[1]) || !a || !m) {
                throw SyntaxError(line_no, "expected 'gen <name> A=<int> M=<rational>'");
            }
            if (!gen_names.insert(tokens[1]).second) {
                throw DuplicateName("generator '" + tokens[1] + "' repeated in complex '" + current->id + "'");
            }
            current->generators.push_back({tokens[1], *a, *m});
        } else if (kw == "d" || kw == "flip") {
            auto rest = raw.substr(raw.find(kw) + kw.size());
            auto [src, terms] = detail::parse_terms(rest, line_no);
            if (kw == "d") {
                for (auto& t : terms) current->differential.push_back({src, t.target, t.u_power});
            } else {
                if (!current->flip) current->flip.emplace();
                for (auto& t : terms) current->flip->push_back({src, t.target, t.u_power});
            }
        } else {
            throw SyntaxError(line_no, "unknown keyword '" + kw + "'");
        }
    }
    if (current) throw SyntaxError(line_no, "missing 'end' for complex '" + current->id + "'");
    if (doc.complexes.empty()) throw SyntaxError(line_no, "document contains no complex");
    return doc;
}

namespace detail {

template <class Term>
void write_terms(std::ostream& os, const char* kw, const KnotComplex& c, const std::vector<Term>& terms) {
    for (const auto& g : c.generators) {
        bool first = true;
        for (const auto& t : terms) {
            if (t.source != g.name) continue;
            os << (first ? std::string(kw) + " " + g.name + " : " : std::string(", ")) << "U^" << t.u_power << " "
               << t.target;
            first = false;
        }
        if (!first) os << "\n";
    }
}

}  // namespace detail

/// Canonical text: document comments, then each complex with one `d`/`flip`
/// line per source generator in generator order, blank line between complexes.
inline std::string serialize(const InputDocument& doc) {
    std::ostringstream os;
    for (const auto& c : doc.comments) os << c << "\n";
    bool first = true;
    for (const auto& c : doc.complexes) {
        if (!first) os << "\n";
        first = false;
        os << "complex " << c.id << " spinc=" << c.spinc_label << "\n";
        for (const auto& g : c.generators) os << "gen " << g.name << " A=" << g.alexander << " M=" << g.maslov << "\n";
        detail::write_terms(os, "d", c, c.differential);
        if (c.flip) detail::write_terms(os, "flip", c, *c.flip);
        os << "end\n";
    }
    return os.str();
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline InputDocument load_document(const std::string& path) { return parse(read_text_file(path)); }

}  // namespace hfcone
