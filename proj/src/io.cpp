#include "pathhom/io.hpp"

#include "pathhom/error.hpp"

#include "json.hpp"

#include <iomanip>
#include <sstream>

namespace pathhom {

using nlohmann::json;

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

DigraphDocument parse_digraph_text(std::string_view text) {
    std::vector<std::string> vertices;
    std::vector<LabelArrow> arrows;
    std::optional<std::string> name;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        const auto tokens = tokenize(line);
        if (!tokens.empty()) {
            const auto& kw = tokens[0];
            const auto expect = [&](std::size_t count) {
                if (tokens.size() < count)
                    throw ParseError(line_no, line.size() + 1, "'" + kw.text + "' needs " + std::to_string(count - 1) + " argument(s)");
                if (tokens.size() > count)
                    throw ParseError(line_no, tokens[count].column, "unexpected token '" + tokens[count].text + "'");
            };
            if (kw.text == "vertex") {
                expect(2);
                vertices.push_back(tokens[1].text);
            } else if (kw.text == "arrow") {
                expect(3);
                arrows.emplace_back(tokens[1].text, tokens[2].text);
            } else if (kw.text == "name") {
                expect(2);
                name = tokens[1].text;
            } else {
                throw ParseError(line_no, kw.column, "unknown declaration '" + kw.text + "'");
            }
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    return {validate_digraph(vertices, arrows), name};
}

DigraphDocument parse_digraph_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(line, column, "malformed JSON");
    }
    const auto fail = [](const std::string& msg) -> ParseError { return ParseError(1, 1, msg); };
    if (!doc.is_object()) throw fail("digraph document must be an object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw fail("missing \"vertices\" list");
    std::vector<std::string> vertices;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw fail("vertex labels must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<LabelArrow> arrows;
    if (doc.contains("arrows")) {
        if (!doc["arrows"].is_array()) throw fail("\"arrows\" must be a list");
        for (const auto& a : doc["arrows"]) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
                throw fail("each arrow must be a pair of labels");
            arrows.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
        }
    }
    std::optional<std::string> name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw fail("\"name\" must be a string");
        name = doc["name"].get<std::string>();
    }
    return {validate_digraph(vertices, arrows), name};
}

DigraphDocument parse_digraph(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_digraph_json(text);
    return parse_digraph_text(text);
}

std::string to_text(const Digraph& g, const std::optional<std::string>& name) {
    std::ostringstream os;
    if (name) os << "name " << *name << '\n';
    for (const auto& l : g.labels()) os << "vertex " << l << '\n';
    for (const auto& [t, h] : g.label_arrows()) os << "arrow " << t << ' ' << h << '\n';
    return os.str();
}

std::string to_json(const Digraph& g, const std::optional<std::string>& name) {
    json doc;
    if (name) doc["name"] = *name;
    doc["vertices"] = g.labels();
    json arrows = json::array();
    for (const auto& [t, h] : g.label_arrows()) arrows.push_back({t, h});
    doc["arrows"] = arrows;
    return doc.dump();
}

Report make_report(const Digraph& g, const TheorySpec& spec, int n_max) {
    Report r;
    r.theory = theory_name(spec.theory);
    if (spec.theory == Theory::ClusterPrimitive || spec.theory == Theory::TailPrimitive) r.from = g.label(spec.a);
    if (spec.theory == Theory::ClusterPrimitive || spec.theory == Theory::HeadPrimitive) r.to = g.label(spec.b);
    r.reduced = spec.reduced;
    r.coefficients = spec.ring.to_string();
    for (const auto& s : summarize(g, spec, n_max))
        r.degrees.push_back({s.group.degree, s.group.betti, s.group.torsion, s.basis_rank, s.boundary_rank});
    return r;
}

namespace {

json integer_json(const Integer& v) {
    if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw ParseError(1, 1, "torsion entries must be integers");
}

}  // namespace

std::string report_to_json(const Report& r) {
    json doc;
    doc["theory"] = r.theory;
    if (r.from) doc["from"] = *r.from;
    if (r.to) doc["to"] = *r.to;
    doc["reduced"] = r.reduced;
    doc["coefficients"] = r.coefficients;
    json degrees = json::array();
    for (const auto& d : r.degrees) {
        json t = json::array();
        for (const auto& v : d.torsion) t.push_back(integer_json(v));
        degrees.push_back({{"n", d.n},
                           {"betti", d.betti},
                           {"torsion", t},
                           {"basis_rank", d.basis_rank},
                           {"boundary_rank", d.boundary_rank}});
    }
    doc["degrees"] = degrees;
    return doc.dump(2);
}

Report report_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(line, column, "malformed JSON");
    }
    try {
        Report r;
        r.theory = doc.at("theory").get<std::string>();
        if (doc.contains("from")) r.from = doc["from"].get<std::string>();
        if (doc.contains("to")) r.to = doc["to"].get<std::string>();
        r.reduced = doc.value("reduced", false);
        r.coefficients = doc.at("coefficients").get<std::string>();
        for (const auto& d : doc.at("degrees")) {
            ReportDegree rd;
            rd.n = d.at("n").get<int>();
            rd.betti = d.at("betti").get<std::size_t>();
            for (const auto& t : d.at("torsion")) rd.torsion.push_back(integer_from_json(t));
            rd.basis_rank = d.at("basis_rank").get<std::size_t>();
            rd.boundary_rank = d.at("boundary_rank").get<std::size_t>();
            r.degrees.push_back(std::move(rd));
        }
        return r;
    } catch (const json::exception& e) {
        throw ParseError(1, 1, std::string("bad report: ") + e.what());
    }
}

std::string report_to_table(const Report& r) {
    std::ostringstream os;
    os << "theory " << r.theory;
    if (r.from || r.to) os << " [" << r.from.value_or("·") << ',' << r.to.value_or("·") << ']';
    if (r.reduced) os << " reduced";
    os << "  coefficients " << r.coefficients << '\n';
    os << std::setw(3) << "n" << std::setw(7) << "betti" << "  " << std::left << std::setw(12) << "torsion"
       << std::right << std::setw(11) << "basis_rank" << std::setw(15) << "boundary_rank" << '\n';
    for (const auto& d : r.degrees) {
        std::string t;
        for (std::size_t i = 0; i < d.torsion.size(); ++i) t += (i ? "," : "") + d.torsion[i].str();
        if (t.empty()) t = "-";
        os << std::setw(3) << d.n << std::setw(7) << d.betti << "  " << std::left << std::setw(12) << t << std::right
           << std::setw(11) << d.basis_rank << std::setw(15) << d.boundary_rank << '\n';
    }
    return os.str();
}

}  // namespace pathhom
