#include "orthotope/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "orthotope/errors.hpp"

namespace ortho {

using nlohmann::ordered_json;

namespace {

VoxelSet voxels_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("voxels"))
        throw ParseError("json input needs \"dim\" and \"voxels\" fields");
    if (!j["dim"].is_number_integer())
        throw ParseError("\"dim\" must be an integer");
    if (!j["voxels"].is_array())
        throw ParseError("\"voxels\" must be an array of coordinate tuples");
    const int dim = j["dim"].get<int>();
    std::vector<Point> pts;
    for (const auto& row : j["voxels"]) {
        if (!row.is_array())
            throw ParseError("each voxel must be an array of integers");
        Point p;
        for (const auto& c : row) {
            if (!c.is_number_integer())
                throw ParseError("voxel coordinates must be integers");
            p.push_back(c.get<int>());
        }
        pts.push_back(std::move(p));
    }
    return VoxelSet(dim, std::move(pts));
}

VoxelSet voxels_from_text(std::istream& in) {
    std::string line;
    bool have_dim = false;
    int dim = 0;
    std::vector<Point> pts;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        if (!have_dim) {
            std::string word;
            if (!(ls >> word)) continue; // blank line before the header
            if (word != "dim")
                throw ParseError("expected \"dim <n>\" on the first line");
            if (!(ls >> dim))
                throw ParseError("expected an integer after \"dim\"");
            std::string extra;
            if (ls >> extra) throw ParseError("trailing text after \"dim <n>\"");
            have_dim = true;
            continue;
        }
        Point p;
        int c;
        while (ls >> c) p.push_back(c);
        if (!ls.eof())
            throw ParseError("non-integer voxel coordinate in \"" + line +
                             "\"");
        if (!p.empty()) pts.push_back(std::move(p));
    }
    if (!have_dim) throw ParseError("missing \"dim <n>\" header");
    return VoxelSet(dim, std::move(pts));
}

} // namespace

VoxelSet read_voxels(std::istream& in) {
    // Sniff: '{' means json, anything else the text syntax.
    char first = '\0';
    while (in.get(first) &&
           std::isspace(static_cast<unsigned char>(first))) {
    }
    if (!in) throw ParseError("empty input");
    in.putback(first);
    if (first == '{') {
        std::ostringstream all;
        all << in.rdbuf();
        return voxels_from_json(all.str());
    }
    return voxels_from_text(in);
}

VoxelSet read_voxels_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open \"" + path + "\"");
    return read_voxels(in);
}

void write_voxels_text(std::ostream& out, const VoxelSet& s) {
    out << "dim " << s.dim() << "\n";
    for (const Point& v : s.voxels()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out << ' ';
            out << v[i];
        }
        out << "\n";
    }
}

Analysis analyze(const VoxelSet& s, const ClassTable& table,
                 bool multivariable) {
    CellCensus census = classify(s, table);
    ClassPolynomial poly = class_ehrhart(census, table);
    FloralVector eu = euler_vector(poly, census, table);
    return Analysis{s,
                    census,
                    poly,
                    std::move(eu),
                    euler_characteristic(poly),
                    special_valuations(poly, table),
                    reciprocity_check(poly),
                    multivariable
                        ? std::optional(directional_ehrhart(census, table))
                        : std::nullopt};
}

VerifyResult run_verify(const VoxelSet& s, const ClassTable& table,
                        int t_max) {
    const CellCensus census = classify(s, table);
    return {s.dim(), s.size(), verify_class_formula(census, table),
            oracle_compare(s, census, table, t_max)};
}

VerifyResult run_verify_corrupted(const VoxelSet& s, const ClassTable& table,
                                  int t_max) {
    CellCensus census = classify(s, table);
    // One phantom interior edge cell: keeps the census self-consistent
    // enough to reach the comparisons, which must then fail.
    census.record(kIdentityClass, 1u);
    return {s.dim(), s.size(), verify_class_formula(census, table),
            oracle_compare(s, census, table, t_max)};
}

namespace {

std::string row_string(const IntRow& row, const ClassTable& table) {
    if (row.empty()) return "0";
    std::string out;
    for (const auto& [id, v] : row) {
        std::string piece;
        if (v == 1)
            piece = "";
        else if (v == -1)
            piece = "-";
        else
            piece = std::to_string(v);
        piece += "(" + table.diagram(id).encoding() + ")";
        if (!out.empty() && piece[0] != '-') out += '+';
        out += piece;
    }
    return out;
}

std::vector<int> dir_list(std::uint32_t dirs, int d) {
    std::vector<int> out;
    for (int i = 0; i < d; ++i)
        if ((dirs >> i) & 1) out.push_back(i + 1);
    return out;
}

std::string dir_braces(std::uint32_t dirs, int d) {
    std::string out = "{";
    bool first = true;
    for (int i : dir_list(dirs, d)) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

std::string dir_csv(std::uint32_t dirs, int d) {
    std::string out;
    for (int i : dir_list(dirs, d)) {
        if (!out.empty()) out += ";";
        out += std::to_string(i);
    }
    return out;
}

ordered_json row_json(const IntRow& row, const ClassTable& table) {
    ordered_json arr = ordered_json::array();
    for (const auto& [id, v] : row)
        arr.push_back({{"class", table.diagram(id).encoding()},
                       {"coefficient", v}});
    return arr;
}

void pad(std::ostream& out, const std::string& text, std::size_t width) {
    out << text;
    for (std::size_t i = text.size(); i < width; ++i) out << ' ';
}

} // namespace

void write_class_table(std::ostream& out, const ClassTable& table,
                       Format format) {
    switch (format) {
    case Format::Text: {
        out << "# legend: a class names the shape of a tangent cone;\n"
               "# x is a half-space, * intersects, + unites.  Classes of\n"
               "# dimension <= 3:\n"
               "#   1         everything (interior point)\n"
               "#   x         half-space (facet point)\n"
               "#   x*x       convex wedge (two half-spaces intersected)\n"
               "#   x+x       concave wedge (two half-spaces united)\n"
               "#   x*x*x     convex corner of three half-spaces\n"
               "#   (x+x)*x   concave wedge meeting a facet\n"
               "#   x*x+x     convex wedge united with a half-space\n"
               "#   x+x+x     three half-spaces united\n";
        std::vector<std::array<std::string, 8>> rows;
        rows.push_back({"id", "class", "dim", "mu", "rho", "sigma",
                        "complement", "h"});
        std::vector<std::string> inverse_col{"h^-1"};
        for (ClassId id = 0; id < table.size(); ++id) {
            const auto comp = table.complement_of(id);
            rows.push_back(
                {std::to_string(id), table.diagram(id).encoding(),
                 std::to_string(table.dim(id)), std::to_string(table.mu(id)),
                 std::to_string(table.rho(id)),
                 table.sigma(id) > 0 ? "+1" : "-1",
                 comp ? table.diagram(*comp).encoding() : "-",
                 row_string(table.m_row(id), table)});
            inverse_col.push_back(row_string(table.s_row(id), table));
        }
        std::array<std::size_t, 8> width{};
        for (const auto& r : rows)
            for (std::size_t c = 0; c < r.size(); ++c)
                width[c] = std::max(width[c], r[c].size());
        out << "# classes up to dimension " << table.max_dim() << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t c = 0; c < rows[i].size(); ++c) {
                pad(out, rows[i][c], width[c] + 2);
            }
            out << inverse_col[i] << "\n";
        }
        break;
    }
    case Format::Csv: {
        for (ClassId id = 0; id < table.size(); ++id) {
            const auto comp = table.complement_of(id);
            out << "class," << id << ',' << table.diagram(id).encoding() << ','
                << table.dim(id) << ',' << table.mu(id) << ','
                << table.rho(id) << ',' << table.sigma(id) << ','
                << (comp ? table.diagram(*comp).encoding() : "-") << "\n";
        }
        for (ClassId id = 0; id < table.size(); ++id)
            for (const auto& [col, v] : table.m_row(id))
                out << "h," << table.diagram(id).encoding() << ','
                    << table.diagram(col).encoding() << ',' << v << "\n";
        for (ClassId id = 0; id < table.size(); ++id)
            for (const auto& [col, v] : table.s_row(id))
                out << "h_inverse," << table.diagram(id).encoding() << ','
                    << table.diagram(col).encoding() << ',' << v << "\n";
        break;
    }
    case Format::Json: {
        ordered_json j;
        j["max_dim"] = table.max_dim();
        ordered_json classes = ordered_json::array();
        for (ClassId id = 0; id < table.size(); ++id) {
            const auto comp = table.complement_of(id);
            ordered_json c;
            c["id"] = id;
            c["encoding"] = table.diagram(id).encoding();
            c["dim"] = table.dim(id);
            c["mu"] = table.mu(id);
            c["rho"] = table.rho(id);
            c["sigma"] = table.sigma(id);
            if (comp)
                c["complement"] = table.diagram(*comp).encoding();
            else
                c["complement"] = nullptr;
            c["h"] = row_json(table.m_row(id), table);
            c["h_inverse"] = row_json(table.s_row(id), table);
            classes.push_back(std::move(c));
        }
        j["classes"] = std::move(classes);
        out << j.dump(2) << "\n";
        break;
    }
    }
}

namespace {

void analysis_text(std::ostream& out, const Analysis& a,
                   const ClassTable& table, const Sections& sec) {
    const int d = a.solid.dim();
    out << "dim " << d << ", " << a.solid.size() << " voxels\n";
    if (sec.census) {
        out << "cells by class and dimension:\n";
        std::vector<ClassId> classes = a.census.classes();
        std::size_t name_w = 5;
        for (ClassId cls : classes)
            name_w = std::max(name_w, table.diagram(cls).encoding().size());
        pad(out, "  class", name_w + 4);
        for (int k = 0; k <= d; ++k) pad(out, "k=" + std::to_string(k), 8);
        out << "\n";
        for (ClassId cls : classes) {
            pad(out, "  " + table.diagram(cls).encoding(), name_w + 4);
            const int deg = d - table.dim(cls);
            for (int k = 0; k <= d; ++k)
                pad(out,
                    k <= deg ? std::to_string(a.census.by_dim(cls, k)) : ".",
                    8);
            out << "\n";
        }
        if (a.directional) {
            out << "cells by class and direction set:\n";
            for (const auto& [key, count] : a.census.direction_counts())
                out << "  " << table.diagram(key.first).encoding() << " "
                    << dir_braces(key.second, d) << ": " << count << "\n";
        }
    }
    if (sec.ehrhart) {
        out << "class polynomials, coefficients by ascending power of t:\n";
        std::size_t name_w = 5;
        for (const auto& [cls, row] : a.polynomial.rows())
            name_w = std::max(name_w, table.diagram(cls).encoding().size());
        for (const auto& [cls, row] : a.polynomial.rows()) {
            pad(out, "  " + table.diagram(cls).encoding(), name_w + 4);
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k > 0) out << ' ';
                out << row[k];
            }
            out << "\n";
        }
        pad(out, "  total", name_w + 4);
        const auto total = a.polynomial.total();
        for (std::size_t k = 0; k < total.size(); ++k) {
            if (k > 0) out << ' ';
            out << total[k];
        }
        out << "\n";
        out << "lattice points at t=1: " << a.polynomial.evaluate_total(1)
            << "\n";
    }
    if (sec.euler) {
        out << "euler vector: " << a.euler.to_string() << "\n";
        out << "euler characteristic: " << a.characteristic << "\n";
    }
    if (sec.valuations) {
        out << "vertices " << a.valuations.vertex_count << ", edges "
            << a.valuations.edge_count << ", boundary measure "
            << a.valuations.boundary_measure << ", volume "
            << a.valuations.volume << "\n";
    }
    if (sec.reciprocity) {
        out << "reciprocity (interior vs reflected counts): "
            << (a.reciprocity.pass ? "pass" : "FAIL") << "\n";
    }
    if (a.directional && sec.ehrhart) {
        out << "directional coefficients by direction set:\n";
        for (const auto& [cls, row] : a.directional->rows()) {
            out << "  " << table.diagram(cls).encoding() << ":";
            for (const auto& [dirs, c] : row)
                out << " " << dir_braces(dirs, d) << ":" << c;
            out << "\n";
        }
    }
}

void analysis_csv(std::ostream& out, const Analysis& a, const ClassTable& table,
                  const Sections& sec) {
    const int d = a.solid.dim();
    out << "solid,dim,," << d << "\n";
    out << "solid,voxels,," << a.solid.size() << "\n";
    if (sec.census) {
        for (const auto& [key, count] : a.census.dim_counts())
            out << "census_k," << table.diagram(key.first).encoding() << ','
                << key.second << ',' << count << "\n";
        if (a.directional)
            for (const auto& [key, count] : a.census.direction_counts())
                out << "census_dirs," << table.diagram(key.first).encoding()
                    << ',' << dir_csv(key.second, d) << ',' << count << "\n";
    }
    if (sec.ehrhart) {
        for (const auto& [cls, row] : a.polynomial.rows())
            for (std::size_t k = 0; k < row.size(); ++k)
                out << "ehrhart," << table.diagram(cls).encoding() << ',' << k
                    << ',' << row[k] << "\n";
        const auto total = a.polynomial.total();
        for (std::size_t k = 0; k < total.size(); ++k)
            out << "ehrhart_total,," << k << ',' << total[k] << "\n";
    }
    if (sec.euler) {
        for (const auto& [cls, c] : a.euler.terms())
            out << "euler_vector," << table.diagram(cls).encoding() << ",,"
                << c.to_string() << "\n";
        out << "euler_characteristic,,," << a.characteristic << "\n";
    }
    if (sec.valuations) {
        out << "valuation,vertices,," << a.valuations.vertex_count << "\n";
        out << "valuation,edges,," << a.valuations.edge_count << "\n";
        out << "valuation,boundary,," << a.valuations.boundary_measure << "\n";
        out << "valuation,volume,," << a.valuations.volume << "\n";
    }
    if (sec.reciprocity)
        out << "reciprocity,pass,," << (a.reciprocity.pass ? 1 : 0) << "\n";
    if (a.directional && sec.ehrhart)
        for (const auto& [cls, row] : a.directional->rows())
            for (const auto& [dirs, c] : row)
                out << "directional," << table.diagram(cls).encoding() << ','
                    << dir_csv(dirs, d) << ',' << c << "\n";
}

void analysis_json(std::ostream& out, const Analysis& a,
                   const ClassTable& table, const Sections& sec) {
    const int d = a.solid.dim();
    ordered_json j;
    j["dim"] = d;
    j["voxels"] = a.solid.size();
    if (sec.census) {
        ordered_json census;
        ordered_json by_dim = ordered_json::array();
        for (const auto& [key, count] : a.census.dim_counts())
            by_dim.push_back({{"class", table.diagram(key.first).encoding()},
                              {"k", key.second},
                              {"count", count}});
        census["by_dimension"] = std::move(by_dim);
        if (a.directional) {
            ordered_json by_dirs = ordered_json::array();
            for (const auto& [key, count] : a.census.direction_counts())
                by_dirs.push_back(
                    {{"class", table.diagram(key.first).encoding()},
                     {"directions", dir_list(key.second, d)},
                     {"count", count}});
            census["by_directions"] = std::move(by_dirs);
        }
        j["census"] = std::move(census);
    }
    if (sec.ehrhart) {
        ordered_json eh;
        ordered_json classes = ordered_json::array();
        for (const auto& [cls, row] : a.polynomial.rows())
            classes.push_back({{"class", table.diagram(cls).encoding()},
                               {"coefficients", row}});
        eh["classes"] = std::move(classes);
        eh["total"] = a.polynomial.total();
        eh["points_at_1"] = a.polynomial.evaluate_total(1);
        j["ehrhart"] = std::move(eh);
    }
    if (sec.euler) {
        ordered_json eu;
        ordered_json vec = ordered_json::array();
        for (const auto& [cls, c] : a.euler.terms())
            vec.push_back({{"class", table.diagram(cls).encoding()},
                           {"coefficient", c.integer_value()}});
        eu["vector"] = std::move(vec);
        eu["characteristic"] = a.characteristic;
        j["euler"] = std::move(eu);
    }
    if (sec.valuations) {
        j["valuations"] = {{"vertices", a.valuations.vertex_count},
                           {"edges", a.valuations.edge_count},
                           {"boundary", a.valuations.boundary_measure},
                           {"volume", a.valuations.volume}};
    }
    if (sec.reciprocity) {
        j["reciprocity"] = {{"pass", a.reciprocity.pass},
                            {"identity_row", a.reciprocity.identity_row},
                            {"reflected", a.reciprocity.reflected}};
    }
    if (a.directional && sec.ehrhart) {
        ordered_json classes = ordered_json::array();
        for (const auto& [cls, row] : a.directional->rows()) {
            ordered_json terms = ordered_json::array();
            for (const auto& [dirs, c] : row)
                terms.push_back({{"directions", dir_list(dirs, d)},
                                 {"coefficient", c}});
            classes.push_back({{"class", table.diagram(cls).encoding()},
                               {"terms", std::move(terms)}});
        }
        j["directional"] = {{"classes", std::move(classes)}};
    }
    out << j.dump(2) << "\n";
}

} // namespace

void write_analysis(std::ostream& out, const Analysis& a,
                    const ClassTable& table, Format format,
                    const Sections& sections) {
    switch (format) {
    case Format::Text:
        analysis_text(out, a, table, sections);
        break;
    case Format::Csv:
        analysis_csv(out, a, table, sections);
        break;
    case Format::Json:
        analysis_json(out, a, table, sections);
        break;
    }
}

void write_verify(std::ostream& out, const VerifyResult& v,
                  const ClassTable& table, Format format) {
    switch (format) {
    case Format::Text: {
        out << "dim " << v.dim << ", " << v.voxels << " voxels\n";
        out << "coefficient identities:\n";
        for (const auto& c : v.formula.checks) {
            out << "  k=" << c.k << ": " << (c.pass ? "pass" : "FAIL") << "  "
                << c.from_polynomial.to_string();
            if (!c.pass) out << "  vs  " << c.from_census.to_string();
            out << "\n";
        }
        out << "oracle comparisons:\n";
        for (const auto& c : v.oracle.checks) {
            std::int64_t pts = 0;
            for (const auto& [cls, n] : c.counted) pts += n;
            out << "  " << c.spec.to_string() << ": "
                << (c.pass ? "pass" : "FAIL") << "  " << pts << " points\n";
            if (!c.pass)
                for (const auto& [cls, n] : c.predicted)
                    out << "    predicted "
                        << table.diagram(cls).encoding() << ": " << n
                        << ", counted "
                        << (c.counted.count(cls) ? c.counted.at(cls) : 0)
                        << "\n";
        }
        out << "verdict: " << (v.pass() ? "pass" : "FAIL") << "\n";
        break;
    }
    case Format::Csv: {
        for (const auto& c : v.formula.checks)
            out << "formula," << c.k << ',' << (c.pass ? 1 : 0) << ','
                << c.from_polynomial.to_string() << "\n";
        for (const auto& c : v.oracle.checks) {
            std::int64_t pts = 0;
            for (const auto& [cls, n] : c.counted) pts += n;
            out << "oracle," << c.spec.to_string() << ',' << (c.pass ? 1 : 0)
                << ',' << pts << "\n";
        }
        out << "verdict,," << (v.pass() ? 1 : 0) << ",\n";
        break;
    }
    case Format::Json: {
        ordered_json j;
        j["dim"] = v.dim;
        j["voxels"] = v.voxels;
        ordered_json formula;
        formula["pass"] = v.formula.pass();
        ordered_json fchecks = ordered_json::array();
        for (const auto& c : v.formula.checks)
            fchecks.push_back({{"k", c.k},
                               {"pass", c.pass},
                               {"vector", c.from_polynomial.to_string()},
                               {"predicted", c.from_census.to_string()}});
        formula["checks"] = std::move(fchecks);
        j["formula"] = std::move(formula);
        ordered_json oracle;
        oracle["pass"] = v.oracle.pass();
        ordered_json ochecks = ordered_json::array();
        for (const auto& c : v.oracle.checks) {
            ordered_json classes = ordered_json::array();
            std::int64_t pts = 0;
            for (const auto& [cls, n] : c.counted) pts += n;
            for (const auto& [cls, n] : c.counted)
                classes.push_back(
                    {{"class", table.diagram(cls).encoding()},
                     {"counted", n},
                     {"predicted",
                      c.predicted.count(cls) ? c.predicted.at(cls) : 0}});
            ochecks.push_back({{"dilation", c.spec.to_string()},
                               {"pass", c.pass},
                               {"points", pts},
                               {"classes", std::move(classes)}});
        }
        oracle["checks"] = std::move(ochecks);
        j["oracle"] = std::move(oracle);
        j["pass"] = v.pass();
        out << j.dump(2) << "\n";
        break;
    }
    }
}

} // namespace ortho
