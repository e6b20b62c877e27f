#pragma once

#include "pathhom/digraph.hpp"
#include "pathhom/homology.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pathhom {

struct DigraphDocument {
    Digraph graph;
    std::optional<std::string> name;
};

/// Line format: `vertex L`, `arrow T H`, optional `name N`, `#` comments.
/// Errors: ParseError (with line/column), then validation errors.
DigraphDocument parse_digraph_text(std::string_view text);
/// {"vertices": [...], "arrows": [[t, h], ...], "name": optional}.
DigraphDocument parse_digraph_json(std::string_view text);
/// JSON when the first non-blank character is '{', text otherwise.
DigraphDocument parse_digraph(std::string_view text);

std::string to_text(const Digraph& g, const std::optional<std::string>& name = std::nullopt);
std::string to_json(const Digraph& g, const std::optional<std::string>& name = std::nullopt);

struct ReportDegree {
    int n = 0;
    std::size_t betti = 0;
    std::vector<Integer> torsion;
    std::size_t basis_rank = 0;
    std::size_t boundary_rank = 0;

    friend bool operator==(const ReportDegree&, const ReportDegree&) = default;
};

struct Report {
    std::string theory;                // path | primitive | cluster | tail | head
    std::optional<std::string> from;   // endpoint labels when the theory has them
    std::optional<std::string> to;
    bool reduced = false;
    std::string coefficients = "Z";
    std::vector<ReportDegree> degrees;

    friend bool operator==(const Report&, const Report&) = default;
};

Report make_report(const Digraph& g, const TheorySpec& spec, int n_max);
std::string report_to_json(const Report& r);
/// Errors: ParseError.
Report report_from_json(std::string_view text);
std::string report_to_table(const Report& r);

}  // namespace pathhom
