#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using Json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out_file;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run(const std::string& args) {
    std::string cmd = std::string(KELLIPSE_BIN) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("poly subcommand") {
    std::string out = "/tmp/kellipse_test_poly.json";
    int code = run("poly --foci \"0,0\" --radius 2 --out " + out);
    CHECK(code == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["schema_version"] == 1);
    CHECK(j["degree"] == 2);
    CHECK(j["polynomial"] == "x^2+y^2-4");
    CHECK(j["det_scale"] == "-1");
    std::remove(out.c_str());
}

TEST_CASE("poly with radius 0 gives the degenerate polynomial") {
    std::string out = "/tmp/kellipse_test_degen.json";
    int code = run("poly --foci \"0,0;1,2\" --radius 0 --out " + out);
    CHECK(code == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["degenerate"] == true);
    CHECK(j["polynomial"] == "2*x+4*y-5");
    std::remove(out.c_str());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("poly --foci \"banana\"") == 2);
    CHECK(run("poly") == 2);                    // neither --foci nor --seed
    CHECK(run("definitely-not-a-subcommand") == 2);
}

TEST_CASE("resource guard exits with 4") {
    CHECK(run("poly --seed 1 --k 6 --radius 13") == 4);  // default --k-limit 5
}

TEST_CASE("non-generic report exits with 3") {
    CHECK(run("report --foci \"0,0;0,0;1,0\" --radius 3 --out /tmp/kellipse_test_ng.json") == 3);
    std::remove("/tmp/kellipse_test_ng.json");
}

TEST_CASE("report on the k=3 figure configuration") {
    std::string out = "/tmp/kellipse_test_report.json";
    int code = run("report --foci \"0,0;1,0;0,1\" --radius 3 --out " + out);
    CHECK(code == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["degree"] == 8);
    CHECK(j["affine_node_count"] == 6);
    CHECK(j["genus_census"] == 3);
    CHECK(j["dual_degree_census"] == 16);
    CHECK(j["all_match"] == true);
    CHECK(j["census"].size() == 8);
    for (const auto& p : j["census"]) {
        CHECK(p.contains("coords"));
        CHECK(p.contains("m"));
        CHECK(p.contains("r"));
        CHECK(p.contains("delta"));
        CHECK(p.contains("kind"));
        CHECK(p.contains("provenance"));
    }
    std::remove(out.c_str());
}

TEST_CASE("sing subcommand writes the census schema") {
    std::string out = "/tmp/kellipse_test_sing.json";
    int code = run("sing --foci \"0,0;1,0;0,1\" --radius 3 --out " + out);
    CHECK(code == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["schema_version"] == 1);
    CHECK(j["points"].size() == 8);
    CHECK(j["affine_node_count"] == 6);
    std::remove(out.c_str());
}

TEST_CASE("deterministic output: identical runs give identical bytes") {
    std::string a = "/tmp/kellipse_test_det_a.json", b = "/tmp/kellipse_test_det_b.json";
    CHECK(run("report --seed 42 --k 3 --radius 7 --out " + a) == 0);
    CHECK(run("report --seed 42 --k 3 --radius 7 --out " + b) == 0);
    std::string sa = slurp(a), sb = slurp(b);
    CHECK_FALSE(sa.empty());
    CHECK(sa == sb);
    std::remove(a.c_str());
    std::remove(b.c_str());

    // Parallelism degree must not change the bytes either.
    std::string c = "/tmp/kellipse_test_det_c.json";
    std::string cmd = std::string("KELLIPSE_THREADS=3 ") + KELLIPSE_BIN +
                      " report --seed 42 --k 3 --radius 7 --out " + c + " >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK(slurp(c) == sa);
    std::remove(c.c_str());
}

TEST_CASE("plot produces valid SVG, including an empty window") {
    std::string out = "/tmp/kellipse_test_plot.svg";
    CHECK(run("plot --foci \"0,0;1,0;0,1\" --radius 3 --res 64 --out " + out) == 0);
    std::string svg = slurp(out);
    CHECK(svg.find("<?xml") == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<path") != std::string::npos);  // the curve is in view
    std::remove(out.c_str());

    CHECK(run("plot --foci \"0,0\" --radius 1 --res 32 --window 50,50,51,51 --out " + out) == 0);
    std::string empty_svg = slurp(out);
    CHECK(empty_svg.find("<svg") != std::string::npos);
    CHECK(empty_svg.find("</svg>") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("plot with a partition overlay") {
    std::string out = "/tmp/kellipse_test_overlay.svg";
    CHECK(run("plot --foci \"0,0;1,0;0,1\" --radius 3 --res 64 --partition 1,2 --out " + out) == 0);
    std::string svg = slurp(out);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("plot the small-radius 4-ellipse with the degenerate-3 overlay") {
    // Degenerate 3-ellipse of the first three foci meets the circle about
    // (1,1) at four affine real singularities; all four appear as markers.
    std::string out = "/tmp/kellipse_test_fig4.svg";
    CHECK(run("plot --foci \"0,0;1,0;0,1;1,1\" --radius 1 --res 96 --partition 1,2,3 --out " + out) ==
          0);
    std::string svg = slurp(out);
    size_t markers = 0;
    for (size_t pos = svg.find("#d03060"); pos != std::string::npos;
         pos = svg.find("#d03060", pos + 1))
        ++markers;
    CHECK(markers >= 4);
    std::remove(out.c_str());
}

TEST_CASE("dual writes SVG and CSV") {
    std::string out = "/tmp/kellipse_test_dual.svg";
    CHECK(run("dual --foci \"0,0\" --radius 2 --samples 24 --out " + out) == 0);
    CHECK(slurp(out).find("<svg") != std::string::npos);
    std::string csv = slurp("/tmp/kellipse_test_dual.csv");
    CHECK(csv.rfind("theta,h,x,y,w1,w2", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 25);  // header + 24 rows
    std::remove(out.c_str());
    std::remove("/tmp/kellipse_test_dual.csv");
}

TEST_CASE("dual auto-recenters when the origin is outside") {
    std::string out = "/tmp/kellipse_test_dual2.svg";
    std::string json = "/tmp/kellipse_test_dual2.json";
    CHECK(run("dual --foci \"10,10\" --radius 1 --samples 16 --out " + out + " --json " + json) == 0);
    Json j = Json::parse(slurp(json));
    CHECK(j["recenter_shift"][0] == doctest::Approx(-10.0));
    CHECK(j["recenter_shift"][1] == doctest::Approx(-10.0));
    std::remove(out.c_str());
    std::remove("/tmp/kellipse_test_dual2.csv");
    std::remove(json.c_str());
}
