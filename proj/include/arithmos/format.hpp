#pragma once

// Text, JSON and CSV renderings of classifications, tables, verdicts and
// oracle results, plus parsers for the table formats.
//
// Naturals are always written as decimal strings in JSON so that values of
// any size survive a round trip. CSV column order is fixed:
//
//   n,plane_class,side_or_figure,solid_class,line_kind

#include "commensurability.hpp"
#include "oracle.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace arithmos {

enum class OutputFormat { text, json, csv };

inline std::optional<OutputFormat> output_format_from(std::string_view s)
{
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    return std::nullopt;
}

inline constexpr std::string_view kCsvHeader = "n,plane_class,side_or_figure,solid_class,line_kind";

// ---------------------------------------------------------------------------
// Names and figures
// ---------------------------------------------------------------------------

inline std::string_view plane_class_name(const PlaneClass& c) { return is_square(c) ? "square" : "oblong"; }
inline std::string_view solid_class_name(const SolidClass& c) { return is_cube(c) ? "cube" : "parallelepipedal"; }

/// "3" for a square of side 3, "1x15" for the rectangle (1, 15).
inline std::string side_or_figure(const PlaneClass& c)
{
    if (const auto* sq = std::get_if<SquareEquilateral>(&c)) {
        return sq->side.to_string();
    }
    const auto& f = std::get<Oblong>(c).figure;
    return f.first.to_string() + "x" + f.second.to_string();
}

inline std::string side_or_figure(const SolidClass& c)
{
    if (const auto* cu = std::get_if<CubeEquilateral>(&c)) {
        return cu->side.to_string();
    }
    const auto& f = std::get<Parallelepipedal>(c).figure;
    return f[0].to_string() + "x" + f[1].to_string() + "x" + f[2].to_string();
}

inline LineKind plane_line_kind(const Natural& n) { return classify_line(Surd{n, Degree::square}); }

inline std::string pair_text(const Natural& a, const Natural& b)
{
    return "(" + a.to_string() + "," + b.to_string() + ")";
}

// ---------------------------------------------------------------------------
// classify <n>
// ---------------------------------------------------------------------------

inline std::string classify_text(const Natural& n)
{
    const PlaneClass plane = classify_plane(n);
    const SolidClass solid = classify_solid(n);
    std::ostringstream os;
    os << "n: " << n << '\n';
    if (const auto* sq = std::get_if<SquareEquilateral>(&plane)) {
        os << "plane: square, side " << sq->side << '\n';
    } else {
        const auto& f = std::get<Oblong>(plane).figure;
        os << "plane: oblong, figure " << pair_text(f.first, f.second) << '\n';
    }
    if (const auto* cu = std::get_if<CubeEquilateral>(&solid)) {
        os << "solid: cube, side " << cu->side << '\n';
    } else {
        const auto& f = std::get<Parallelepipedal>(solid).figure;
        os << "solid: parallelepipedal, figure (" << f[0] << ',' << f[1] << ',' << f[2] << ")\n";
    }
    os << "figures:";
    for (const auto& [p, q] : oblong_factorizations(n)) {
        os << ' ' << pair_text(p, q);
    }
    os << '\n';
    os << "line: " << line_kind_name(plane_line_kind(n)) << '\n';
    return os.str();
}

inline nlohmann::ordered_json classify_json(const Natural& n)
{
    const PlaneClass plane = classify_plane(n);
    const SolidClass solid = classify_solid(n);
    nlohmann::ordered_json figures = nlohmann::ordered_json::array();
    for (const auto& [p, q] : oblong_factorizations(n)) {
        figures.push_back({p.to_string(), q.to_string()});
    }
    return {{"n", n.to_string()},
            {"plane_class", plane_class_name(plane)},
            {"side_or_figure", side_or_figure(plane)},
            {"solid_class", solid_class_name(solid)},
            {"solid_side_or_figure", side_or_figure(solid)},
            {"factorizations", std::move(figures)},
            {"line_kind", line_kind_name(plane_line_kind(n))}};
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

inline std::string table_csv(const ClassificationTable& t)
{
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const auto& row : t.rows) {
        os << row.n << ',' << plane_class_name(row.plane) << ',' << side_or_figure(row.plane) << ','
           << solid_class_name(row.solid) << ',' << line_kind_name(plane_line_kind(row.n)) << '\n';
    }
    return os.str();
}

inline std::string table_text(const ClassificationTable& t)
{
    std::ostringstream os;
    os << std::left << std::setw(10) << "n" << std::setw(8) << "plane" << std::setw(16) << "side_or_figure"
       << std::setw(18) << "solid" << "line_kind" << '\n';
    for (const auto& row : t.rows) {
        os << std::setw(10) << row.n.to_string() << std::setw(8) << plane_class_name(row.plane) << std::setw(16)
           << side_or_figure(row.plane) << std::setw(18) << solid_class_name(row.solid)
           << line_kind_name(plane_line_kind(row.n)) << '\n';
    }
    os << "power_count(" << t.max << ") = " << power_count(t.max) << '\n';
    return os.str();
}

inline nlohmann::ordered_json table_json(const ClassificationTable& t)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        rows.push_back({{"n", row.n.to_string()},
                        {"plane_class", plane_class_name(row.plane)},
                        {"side_or_figure", side_or_figure(row.plane)},
                        {"solid_class", solid_class_name(row.solid)},
                        {"solid_side_or_figure", side_or_figure(row.solid)},
                        {"line_kind", line_kind_name(plane_line_kind(row.n))}});
    }
    return {{"max", t.max.to_string()}, {"power_count", power_count(t.max).str()}, {"rows", std::move(rows)}};
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

inline Natural parse_field(std::string_view s, std::string_view what)
{
    try {
        return Natural::parse(s);
    } catch (const NotANatural&) {
        throw FormatError("bad " + std::string(what) + " '" + std::string(s) + "'");
    }
}

// Rebuilds a row from its rendered fields and rejects any field that
// disagrees with the classification of n.
inline ClassificationRow parse_row(std::string_view n_text, std::string_view plane, std::string_view figure,
                                   std::string_view solid, std::string_view kind)
{
    const Natural n = parse_field(n_text, "n");
    PlaneClass pc = [&]() -> PlaneClass {
        if (plane == "square") {
            return SquareEquilateral{parse_field(figure, "side")};
        }
        if (plane == "oblong") {
            const auto parts = split(figure, 'x');
            if (parts.size() != 2) {
                throw FormatError("bad oblong figure '" + std::string(figure) + "'");
            }
            return Oblong{{parse_field(parts[0], "side"), parse_field(parts[1], "side")}};
        }
        throw FormatError("unknown plane class '" + std::string(plane) + "'");
    }();
    if (!(pc == classify_plane(n))) {
        throw FormatError("row " + n.to_string() + ": plane class does not match");
    }
    SolidClass sc = [&]() -> SolidClass {
        if (solid == "cube" || solid == "parallelepipedal") {
            return classify_solid(n);
        }
        throw FormatError("unknown solid class '" + std::string(solid) + "'");
    }();
    if (solid_class_name(sc) != solid) {
        throw FormatError("row " + n.to_string() + ": solid class does not match");
    }
    if (line_kind_name(plane_line_kind(n)) != kind) {
        throw FormatError("row " + n.to_string() + ": line kind does not match");
    }
    return ClassificationRow{n, std::move(pc), std::move(sc)};
}

inline ClassificationTable assemble(std::vector<ClassificationRow> rows)
{
    if (rows.empty()) {
        throw FormatError("table has no rows");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].n != Natural(i + 1)) {
            throw FormatError("row " + std::to_string(i + 1) + " holds n = " + rows[i].n.to_string());
        }
    }
    Natural max = rows.back().n;
    return ClassificationTable{std::move(max), std::move(rows)};
}

} // namespace detail

inline ClassificationTable table_from_csv(std::string_view csv)
{
    std::istringstream in{std::string(csv)};
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw FormatError("missing CSV header");
    }
    std::vector<ClassificationRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = detail::split(line, ',');
        if (f.size() != 5) {
            throw FormatError("expected 5 fields in '" + line + "'");
        }
        rows.push_back(detail::parse_row(f[0], f[1], f[2], f[3], f[4]));
    }
    return detail::assemble(std::move(rows));
}

inline ClassificationTable table_from_json(const nlohmann::ordered_json& j)
{
    std::vector<ClassificationRow> rows;
    for (const auto& r : j.at("rows")) {
        rows.push_back(detail::parse_row(r.at("n").get<std::string>(), r.at("plane_class").get<std::string>(),
                                         r.at("side_or_figure").get<std::string>(),
                                         r.at("solid_class").get<std::string>(), r.at("line_kind").get<std::string>()));
        if (r.at("solid_side_or_figure").get<std::string>() != side_or_figure(rows.back().solid)) {
            throw FormatError("row " + rows.back().n.to_string() + ": solid figure does not match");
        }
    }
    ClassificationTable t = detail::assemble(std::move(rows));
    if (j.at("max").get<std::string>() != t.max.to_string()) {
        throw FormatError("declared max does not match the rows");
    }
    return t;
}

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

inline std::string verdict_name(const RationalityVerdict& v) { return is_rational(v) ? "rational-integer" : "irrational"; }

inline nlohmann::ordered_json commensurability_json(const CommensurabilityVerdict& v)
{
    if (const auto* c = std::get_if<Commensurable>(&v)) {
        return {{"verdict", "commensurable"}, {"ratio", ratio_json(c->ratio)}};
    }
    return {{"verdict", "incommensurable"}, {"reduced", ratio_json(std::get<Incommensurable>(v).reduced)}};
}

inline std::string commensurability_text(const Natural& a, const Natural& b, const CommensurabilityVerdict& v)
{
    const std::string lhs = "sqrt(" + a.to_string() + ") : sqrt(" + b.to_string() + ")";
    if (const auto* c = std::get_if<Commensurable>(&v)) {
        return lhs + " = " + c->ratio.to_string() + ", commensurable\n";
    }
    return lhs + " incommensurable, " + std::get<Incommensurable>(v).reduced.to_string()
         + " is not a ratio of square numbers\n";
}

inline std::string audit_text(const AuditReport& r)
{
    std::ostringstream os;
    os << "sqrt(" << r.a << "): " << line_kind_name(r.kind_a) << '\n';
    os << "sqrt(" << r.b << "): " << line_kind_name(r.kind_b) << '\n';
    if (const auto* c = std::get_if<Commensurable>(&r.relation)) {
        os << "relation: commensurable " << c->ratio << '\n';
    } else {
        os << "relation: incommensurable " << std::get<Incommensurable>(r.relation).reduced << '\n';
    }
    os << "gap: " << (r.gap ? "yes, two powers commensurable with one another" : "no") << '\n';
    return os.str();
}

inline nlohmann::ordered_json audit_json(const AuditReport& r)
{
    return {{"a", r.a.to_string()},
            {"b", r.b.to_string()},
            {"kind_a", line_kind_name(r.kind_a)},
            {"kind_b", line_kind_name(r.kind_b)},
            {"relation", commensurability_json(r.relation)},
            {"gap", r.gap}};
}

inline nlohmann::ordered_json oracle_json(const OracleResult& r)
{
    nlohmann::ordered_json j{{"search_bound", r.search_bound.to_string()}};
    if (r.found) {
        j["found"] = {{"p", r.found->p.to_string()}, {"q", r.found->q.to_string()}};
    } else {
        j["found"] = nullptr;
    }
    return j;
}

inline std::string oracle_text(const OracleResult& r)
{
    if (r.found) {
        return "witness p=" + r.found->p.to_string() + " q=" + r.found->q.to_string() + " (bound "
             + r.search_bound.to_string() + ")\n";
    }
    return "no witness up to bound " + r.search_bound.to_string() + "\n";
}

} // namespace arithmos
