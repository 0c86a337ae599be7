#include "reskit/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace reskit {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput("json: " + what); }

std::int64_t small(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw InternalError("json: integer too large to serialize");
    return v.convert_to<std::int64_t>();
}

Int int_of(const ordered_json& j, const char* where) {
    if (!j.is_number_integer()) bad(std::string(where) + " must be an integer");
    return Int(j.get<std::int64_t>());
}

VecZ point_of(const ordered_json& j, int ambient_dim, const char* where) {
    if (!j.is_array() || static_cast<int>(j.size()) != ambient_dim)
        bad(std::string(where) + " must be an array of " + std::to_string(ambient_dim) + " integers");
    VecZ u;
    u.reserve(j.size());
    for (const auto& c : j) u.push_back(int_of(c, where));
    return u;
}

ordered_json json_of(const VecZ& u) {
    ordered_json a = ordered_json::array();
    for (const Int& c : u) a.push_back(small(c));
    return a;
}

ordered_json json_of_cells(const std::vector<std::vector<VecZ>>& row) {
    ordered_json r = ordered_json::array();
    for (const std::vector<VecZ>& cell : row) {
        ordered_json c = ordered_json::array();
        for (const VecZ& u : cell) c.push_back(json_of(u));
        r.push_back(std::move(c));
    }
    return r;
}

PartitionMatrix partition_of(const ordered_json& j, int ambient_dim) {
    if (!j.is_array() || j.empty()) bad("partition must be a non-empty array of member rows");
    PartitionMatrix m;
    for (const auto& jrow : j) {
        if (!jrow.is_array()) bad("partition row must be an array of cells");
        std::vector<std::vector<VecZ>> row;
        for (const auto& jcell : jrow) {
            if (!jcell.is_array()) bad("partition cell must be an array of points");
            std::vector<VecZ> cell;
            for (const auto& jpt : jcell) cell.push_back(point_of(jpt, ambient_dim, "partition point"));
            std::sort(cell.begin(), cell.end(), colex_less);
            row.push_back(std::move(cell));
        }
        m.cells.push_back(std::move(row));
    }
    return m;
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(e.what());
    }
}

std::string dim2_case_name(Dim2Case c) {
    switch (c) {
        case Dim2Case::LocallyUnmixed: return "single-shared-edge";
        case Dim2Case::PartiallyUnmixed2a: return "pair-edge";
        case Dim2Case::PartiallyUnmixed2b: return "overlapping-edges";
        case Dim2Case::GenericallyMixed: return "staircase";
        case Dim2Case::Exceptional: return "exceptional";
    }
    return "unknown";
}

ordered_json json_of_face(const FaceRef& f, const LatticePolytope& sum) {
    ordered_json o = ordered_json::object();
    o["dim"] = f.dim;
    ordered_json vs = ordered_json::array();
    for (int vi : f.vertex_set) vs.push_back(json_of(sum.vertices()[vi]));
    o["vertices"] = std::move(vs);
    return o;
}

} // namespace

ProblemFile parse_problem(const std::string& json_text) {
    ordered_json j = parse_json(json_text);
    if (!j.is_object()) bad("problem must be an object");
    if (!j.contains("ambient_dim")) bad("problem needs \"ambient_dim\"");
    ProblemFile p;
    Int nd = int_of(j["ambient_dim"], "ambient_dim");
    if (nd < 1 || nd > 16) bad("ambient_dim out of range");
    p.ambient_dim = static_cast<int>(small(nd));

    if (!j.contains("polytopes") || !j["polytopes"].is_array() || j["polytopes"].empty())
        bad("problem needs a non-empty \"polytopes\" array");
    for (const auto& jm : j["polytopes"]) {
        if (!jm.is_object()) bad("every polytope must be an object");
        MemberSpec spec;
        std::vector<std::pair<VecZ, std::string>> named;
        if (jm.contains("terms")) {
            spec.from_terms = true;
            if (!jm["terms"].is_array() || jm["terms"].empty())
                bad("\"terms\" must be a non-empty array");
            for (const auto& jt : jm["terms"]) {
                if (!jt.is_object() || !jt.contains("exponent") || !jt.contains("name") ||
                    !jt["name"].is_string())
                    bad("every term needs an \"exponent\" and a string \"name\"");
                named.emplace_back(point_of(jt["exponent"], p.ambient_dim, "term exponent"),
                                   jt["name"].get<std::string>());
            }
        } else if (jm.contains("points")) {
            if (!jm["points"].is_array() || jm["points"].empty())
                bad("\"points\" must be a non-empty array");
            std::vector<std::string> names;
            if (jm.contains("coefficients")) {
                if (!jm["coefficients"].is_array() ||
                    jm["coefficients"].size() != jm["points"].size())
                    bad("\"coefficients\" must name every point");
                for (const auto& jn : jm["coefficients"]) {
                    if (!jn.is_string()) bad("coefficient names must be strings");
                    names.push_back(jn.get<std::string>());
                }
            }
            std::size_t t = 0;
            for (const auto& jp : jm["points"]) {
                named.emplace_back(point_of(jp, p.ambient_dim, "point"),
                                   names.empty() ? std::string() : names[t]);
                ++t;
            }
        } else {
            bad("every polytope needs \"points\" or \"terms\"");
        }
        std::sort(named.begin(), named.end(),
                  [](const auto& a, const auto& b) { return colex_less(a.first, b.first); });
        for (std::size_t t = 1; t < named.size(); ++t) {
            if (named[t].first == named[t - 1].first) bad("duplicate point in a polytope");
        }
        bool any_name = false;
        for (auto& [pt, name] : named) {
            spec.points.push_back(std::move(pt));
            spec.coeff_names.push_back(std::move(name));
            if (!spec.coeff_names.back().empty()) any_name = true;
        }
        if (!any_name) spec.coeff_names.clear();
        p.members.push_back(std::move(spec));
    }

    if (j.contains("partition")) p.partition = partition_of(j["partition"], p.ambient_dim);
    return p;
}

ProblemFile read_problem_file(const std::string& path) {
    return parse_problem(read_text_file(path));
}

std::string problem_to_json(const ProblemFile& p) {
    ordered_json j = ordered_json::object();
    j["ambient_dim"] = p.ambient_dim;
    ordered_json members = ordered_json::array();
    for (const MemberSpec& spec : p.members) {
        ordered_json jm = ordered_json::object();
        if (spec.from_terms) {
            ordered_json terms = ordered_json::array();
            for (std::size_t t = 0; t < spec.points.size(); ++t) {
                ordered_json jt = ordered_json::object();
                jt["exponent"] = json_of(spec.points[t]);
                jt["name"] = spec.coeff_names[t];
                terms.push_back(std::move(jt));
            }
            jm["terms"] = std::move(terms);
        } else {
            ordered_json pts = ordered_json::array();
            for (const VecZ& u : spec.points) pts.push_back(json_of(u));
            jm["points"] = std::move(pts);
            if (!spec.coeff_names.empty()) {
                ordered_json names = ordered_json::array();
                for (const std::string& s : spec.coeff_names) names.push_back(s);
                jm["coefficients"] = std::move(names);
            }
        }
        members.push_back(std::move(jm));
    }
    j["polytopes"] = std::move(members);
    if (p.partition) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : p.partition->cells) rows.push_back(json_of_cells(row));
        j["partition"] = std::move(rows);
    }
    return j.dump(2) + "\n";
}

std::string partition_to_json(const PartitionMatrix& m) {
    ordered_json j = ordered_json::object();
    ordered_json rows = ordered_json::array();
    for (const auto& row : m.cells) rows.push_back(json_of_cells(row));
    j["partition"] = std::move(rows);
    return j.dump(2) + "\n";
}

PartitionMatrix parse_partition(const std::string& json_text, int ambient_dim) {
    ordered_json j = parse_json(json_text);
    if (j.is_array()) return partition_of(j, ambient_dim);
    if (j.is_object() && j.contains("partition")) return partition_of(j["partition"], ambient_dim);
    bad("expected a partition array or an object with a \"partition\" key");
}

PartitionMatrix read_partition_file(const std::string& path, int ambient_dim) {
    return parse_partition(read_text_file(path), ambient_dim);
}

std::vector<std::vector<std::string>> coefficient_names(const ProblemFile& p) {
    std::vector<std::vector<std::string>> names(p.members.size());
    for (std::size_t i = 0; i < p.members.size(); ++i) {
        const MemberSpec& spec = p.members[i];
        for (std::size_t t = 0; t < spec.points.size(); ++t) {
            std::string name =
                t < spec.coeff_names.size() ? spec.coeff_names[t] : std::string();
            if (name.empty())
                name = symbol_name(CoeffSymbol{static_cast<int>(i), static_cast<int>(t)});
            names[i].push_back(std::move(name));
        }
    }
    return names;
}

std::vector<LatticePolytope> family_of(const ProblemFile& p) {
    std::vector<LatticePolytope> family;
    family.reserve(p.members.size());
    for (const MemberSpec& spec : p.members)
        family.push_back(LatticePolytope::hull(spec.points, p.ambient_dim));
    return family;
}

std::string certificate_to_json(const ResidueCertificate& cert,
                                const std::vector<LatticePolytope>& family,
                                const ProblemFile& problem) {
    const int n = problem.ambient_dim;

    // Display names follow the member's full lattice support; points the
    // problem file named keep their names, the rest default to letter+rank.
    std::vector<std::vector<std::string>> given = coefficient_names(problem);
    std::vector<std::vector<std::string>> names(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        const std::vector<VecZ>& support = family[i].lattice_points();
        const std::vector<VecZ>& pts = problem.members[i].points;
        for (std::size_t r = 0; r < support.size(); ++r) {
            auto it = std::lower_bound(pts.begin(), pts.end(), support[r], colex_less);
            if (it != pts.end() && *it == support[r]) {
                names[i].push_back(given[i][static_cast<std::size_t>(it - pts.begin())]);
            } else {
                names[i].push_back(
                    symbol_name(CoeffSymbol{static_cast<int>(i), static_cast<int>(r)}));
            }
        }
    }

    ordered_json j = ordered_json::object();
    j["ambient_dim"] = n;
    ordered_json members = ordered_json::array();
    for (const LatticePolytope& p : family) {
        ordered_json jm = ordered_json::object();
        ordered_json pts = ordered_json::array();
        for (const VecZ& u : p.lattice_points()) pts.push_back(json_of(u));
        jm["points"] = std::move(pts);
        members.push_back(std::move(jm));
    }
    j["polytopes"] = std::move(members);
    j["strategy"] = cert.strategy_used.empty() ? "given-partition" : cert.strategy_used;

    ordered_json rows = ordered_json::array();
    for (const auto& row : cert.partition.cells) rows.push_back(json_of_cells(row));
    j["partition"] = std::move(rows);

    ordered_json jmat = ordered_json::array();
    for (const auto& row : cert.matrix) {
        ordered_json jrow = ordered_json::array();
        for (const LaurentPoly& e : row) jrow.push_back(canonical_text(e, n, names));
        jmat.push_back(std::move(jrow));
    }
    j["matrix"] = std::move(jmat);
    j["determinant"] = canonical_text(cert.determinant, n, names);
    j["determinant_interior"] = cert.determinant_interior;

    ordered_json jval = ordered_json::object();
    jval["ok"] = cert.validation.ok;
    ordered_json checks = ordered_json::array();
    for (const ValidationCheck& c : cert.validation.checks) {
        ordered_json jc = ordered_json::object();
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    jval["checks"] = std::move(checks);
    j["validation"] = std::move(jval);

    if (cert.validation.ok) {
        j["degree"] = cert.degree;
        ordered_json jcol = ordered_json::object();
        auto dump_coloring = [&](const FaceColoring& fc) {
            ordered_json arr = ordered_json::array();
            for (std::size_t f = 0; f < fc.faces.size(); ++f) {
                ordered_json o = json_of_face(fc.faces[f], fc.sum);
                ordered_json cs = ordered_json::array();
                for (int c : fc.colors[f]) cs.push_back(c);
                o["colors"] = std::move(cs);
                arr.push_back(std::move(o));
            }
            return arr;
        };
        jcol["max"] = dump_coloring(cert.max_coloring);
        jcol["min"] = dump_coloring(cert.min_coloring);
        j["colorings"] = std::move(jcol);
    }

    if (cert.dim2) {
        ordered_json jd = ordered_json::object();
        jd["case"] = dim2_case_name(cert.dim2->kind);
        ordered_json edges = ordered_json::array();
        for (const auto& [label, normal] : cert.dim2->edge_labels) {
            ordered_json je = ordered_json::object();
            ordered_json jl = ordered_json::array();
            for (int i : label) jl.push_back(i);
            je["label"] = std::move(jl);
            je["normal"] = json_of(normal);
            edges.push_back(std::move(je));
        }
        jd["edges"] = std::move(edges);
        ordered_json jw = ordered_json::array();
        for (int w : cert.dim2->window) jw.push_back(w);
        jd["window"] = std::move(jw);
        if (!cert.dim2->note.empty()) jd["note"] = cert.dim2->note;
        j["dim2"] = std::move(jd);
    }

    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open for writing: " + path);
    out << content;
    if (!out) throw InvalidInput("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace reskit
