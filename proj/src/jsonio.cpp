#include "kellipse/jsonio.hpp"

#include <cstdio>
#include <fstream>

namespace kellipse {

namespace {

std::string num9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

Json complex_json(const std::complex<double>& v) {
    return Json::array({v.real(), v.imag()});
}

}  // namespace

Json config_json(const EllipseConfig& cfg) {
    Json foci = Json::array();
    for (const auto& [u, v] : cfg.foci)
        foci.push_back({{"u", u.to_string()}, {"v", v.to_string()}});
    return {{"k", cfg.k()}, {"foci", std::move(foci)}, {"radius", cfg.radius.to_string()}};
}

Json poly_json(const CurvePoly& cp) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = config_json(cp.config);
    j["degenerate"] = cp.degenerate;
    j["degree"] = cp.degree;
    j["polynomial"] = cp.affine.to_string();
    j["projective"] = cp.projective.to_string();
    j["det_scale"] = cp.det_scale.to_string();
    j["term_count"] = cp.affine.term_count();
    return j;
}

Json pencil_json(const MatrixPencil& p) {
    auto matrix = [](const Matrix<Rational>& m) {
        Json rows = Json::array();
        for (size_t i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
            rows.push_back(std::move(row));
        }
        return rows;
    };
    return {{"schema_version", kSchemaVersion},
            {"n", p.n},
            {"A", matrix(p.A)},
            {"B", matrix(p.B)},
            {"C", matrix(p.C)}};
}

namespace {

Json census_points_json(const std::vector<SingularPoint>& points) {
    Json arr = Json::array();
    for (const auto& p : points) {
        Json entry;
        entry["coords"] = Json::array({complex_json(p.coords[0]), complex_json(p.coords[1]),
                                       complex_json(p.coords[2])});
        entry["m"] = p.multiplicity;
        entry["r"] = p.branches;
        entry["delta"] = p.delta;
        entry["kind"] = p.kind == SingKind::node ? "node" : "circular_point";
        entry["provenance"] = p.provenance;
        arr.push_back(std::move(entry));
    }
    return arr;
}

}  // namespace

Json census_json(const CurveReport& report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = config_json(report.config);
    j["points"] = census_points_json(report.census);
    j["affine_node_count"] = report.affine_node_count;
    j["flags"] = report.flags;
    return j;
}

Json report_json(const CurveReport& report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = config_json(report.config);
    j["degree"] = report.degree;
    j["degree_formula"] = report.degree_formula;
    j["degree_match"] = report.degree_match;
    j["affine_node_count"] = report.affine_node_count;
    j["affine_expected"] = report.affine_expected;
    j["count_match"] = report.count_match;
    Json circ = Json::array();
    for (const auto& c : report.circular)
        circ.push_back({{"point", c.which > 0 ? "[i:1:0]" : "[-i:1:0]"},
                        {"m", c.multiplicity},
                        {"r", c.branches},
                        {"delta", c.delta},
                        {"tangent_square_ok", c.square_ok},
                        {"distinct_tangents", c.distinct_tangents}});
    j["circular_points"] = std::move(circ);
    j["genus_census"] = report.genus_census ? Json(*report.genus_census) : Json(nullptr);
    j["genus_closed_form"] = report.genus_formula;
    j["genus_match"] = report.genus_match;
    j["dual_degree_census"] =
        report.dual_degree_census ? Json(*report.dual_degree_census) : Json(nullptr);
    j["dual_degree_closed_form"] = report.dual_degree_formula;
    j["dual_degree_match"] = report.dual_match;
    j["census"] = census_points_json(report.census);
    j["flags"] = report.flags;
    j["all_match"] = report.all_match();
    return j;
}

Json dual_json(const EllipseConfig& cfg, const std::vector<PolarSample>& samples,
               std::pair<double, double> recenter_shift) {
    Json arr = Json::array();
    for (const auto& s : samples)
        arr.push_back({{"theta", s.theta},
                       {"h", s.h},
                       {"x", s.px},
                       {"y", s.py},
                       {"w1", s.w1},
                       {"w2", s.w2}});
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = config_json(cfg);
    j["recenter_shift"] = Json::array({recenter_shift.first, recenter_shift.second});
    j["samples"] = std::move(arr);
    return j;
}

std::string dual_csv(const std::vector<PolarSample>& samples) {
    std::string out = "theta,h,x,y,w1,w2\n";
    for (const auto& s : samples)
        out += num9(s.theta) + "," + num9(s.h) + "," + num9(s.px) + "," + num9(s.py) + "," +
               num9(s.w1) + "," + num9(s.w2) + "\n";
    return out;
}

std::string coefficients_csv(const CurvePoly& cp) {
    std::string out = "ex,ey,ez,numerator,denominator\n";
    for (const auto& [m, c] : cp.projective.terms())
        out += std::to_string(m.e[0]) + "," + std::to_string(m.e[1]) + "," + std::to_string(m.e[2]) +
               "," + c.re.numerator().get_str() + "," + c.re.denominator().get_str() + "\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open output file: " + path);
    f << content;
}

}  // namespace kellipse
