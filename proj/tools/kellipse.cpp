#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>

#include "kellipse/jsonio.hpp"
#include "kellipse/plot.hpp"

namespace {

using namespace kellipse;

// "u1,v1;u2,v2;..." with rational or decimal coordinates.
std::vector<std::pair<Rational, Rational>> parse_foci(const std::string& spec) {
    std::vector<std::pair<Rational, Rational>> foci;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t semi = spec.find(';', pos);
        std::string pair = spec.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        size_t comma = pair.find(',');
        if (comma == std::string::npos)
            throw InvalidArgument("focus \"" + pair + "\" is not of the form u,v");
        foci.emplace_back(Rational::from_string(pair.substr(0, comma)),
                          Rational::from_string(pair.substr(comma + 1)));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (foci.empty()) throw InvalidArgument("no foci given");
    return foci;
}

struct CommonOpts {
    std::string foci_spec;
    std::string radius = "3";
    unsigned long seed = 0;
    bool have_seed = false;
    int k = 3;
    int k_limit = 5;
    double tol = 1e-6;
    std::string out;
};

EllipseConfig make_config(const CommonOpts& o) {
    EllipseConfig cfg;
    if (!o.foci_spec.empty())
        cfg.foci = parse_foci(o.foci_spec);
    else if (o.have_seed)
        cfg.foci = random_rational_foci(o.k, o.seed);
    else
        throw InvalidArgument("either --foci or --seed with --k is required");
    cfg.radius = Rational::from_string(o.radius);
    cfg.validate();
    return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--foci", o.foci_spec, "foci as \"u1,v1;u2,v2;...\" (rationals or decimals)");
    cmd->add_option("--radius", o.radius, "radius (rational or decimal)")->capture_default_str();
    cmd->add_option("--seed", o.seed, "seed for random rational foci")
        ->each([&](const std::string&) { o.have_seed = true; });
    cmd->add_option("--k", o.k, "focus count for --seed")->capture_default_str();
    cmd->add_option("--k-limit", o.k_limit, "resource guard on k")->capture_default_str();
    cmd->add_option("--tol", o.tol, "numeric tolerance")->capture_default_str();
    cmd->add_option("--out", o.out, "output path (default: stdout)");
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty())
        std::cout << content;
    else
        write_text_file(out, content);
}

PlotWindow auto_window(const EllipseConfig& cfg) {
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    for (const auto& [u, v] : cfg.foci) {
        x0 = std::min(x0, u.to_double());
        x1 = std::max(x1, u.to_double());
        y0 = std::min(y0, v.to_double());
        y1 = std::max(y1, v.to_double());
    }
    double m = cfg.radius.to_double() + 1.0;
    return {x0 - m, y0 - m, x1 + m, y1 + m};
}

PlotWindow parse_window(const std::string& s) {
    PlotWindow w{};
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf,%lf", &w.x0, &w.y0, &w.x1, &w.y1) != 4)
        throw InvalidArgument("window must be x0,y0,x1,y1");
    return w;
}

std::vector<int> parse_partition(const std::string& s, int k) {
    std::vector<int> subset;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int idx = std::stoi(tok);
        if (idx < 1 || idx > k) throw InvalidArgument("partition index out of range");
        subset.push_back(idx - 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return subset;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact and numeric toolkit for algebraic k-ellipses"};
    app.require_subcommand(1);

    CommonOpts poly_o, report_o, sing_o, plot_o, dual_o;

    auto* poly_cmd = app.add_subcommand("poly", "defining polynomial as JSON");
    add_common(poly_cmd, poly_o);
    std::string coeff_csv, pencil_out;
    bool with_timing = false;
    poly_cmd->add_option("--coeff-csv", coeff_csv, "also write exponent/coefficient CSV");
    poly_cmd->add_option("--pencil-out", pencil_out, "also dump the matrix pencil as JSON");
    poly_cmd->add_flag("--timing", with_timing, "include wall time in the JSON");

    auto* report_cmd = app.add_subcommand("report", "full singularity/genus/dual-degree report");
    add_common(report_cmd, report_o);

    auto* sing_cmd = app.add_subcommand("sing", "singularity census as JSON");
    add_common(sing_cmd, sing_o);

    auto* plot_cmd = app.add_subcommand("plot", "SVG plot of the real curve");
    add_common(plot_cmd, plot_o);
    std::string window_spec, partition_spec;
    int res = 256;
    bool no_markers = false;
    plot_cmd->add_option("--window", window_spec, "plot window x0,y0,x1,y1 (default: foci box + radius)");
    plot_cmd->add_option("--res", res, "grid resolution")->capture_default_str();
    plot_cmd->add_option("--partition", partition_spec,
                         "overlay the degenerate/companion pair for these 1-based focus indices");
    plot_cmd->add_flag("--no-markers", no_markers, "skip singular-point markers");

    auto* dual_cmd = app.add_subcommand("dual", "dual curve samples as SVG + CSV");
    add_common(dual_cmd, dual_o);
    int n_samples = 360;
    std::string dual_json_path;
    dual_cmd->add_option("--samples", n_samples, "number of directions")->capture_default_str();
    dual_cmd->add_option("--json", dual_json_path, "also write samples as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (poly_cmd->parsed()) {
        EllipseConfig cfg = make_config(poly_o);
        auto start = std::chrono::steady_clock::now();
        CurvePoly cp = (cfg.radius.is_zero() && cfg.k() >= 2)
                           ? degenerate_polynomial(cfg, poly_o.k_limit)
                           : ellipse_polynomial(cfg, poly_o.k_limit);
        Json j = poly_json(cp);
        if (with_timing) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            j["timing_ms"] = ms;
        }
        emit(poly_o.out, j.dump(2) + "\n");
        if (!coeff_csv.empty()) write_text_file(coeff_csv, coefficients_csv(cp));
        if (!pencil_out.empty()) write_text_file(pencil_out, pencil_json(build_pencil(cfg)).dump(2) + "\n");
        return 0;
    }

    if (report_cmd->parsed()) {
        EllipseConfig cfg = make_config(report_o);
        CurveReport report = build_report(cfg, report_o.k_limit);
        emit(report_o.out, report_json(report).dump(2) + "\n");
        return report.all_match() ? 0 : 3;
    }

    if (sing_cmd->parsed()) {
        EllipseConfig cfg = make_config(sing_o);
        CurveReport report = build_report(cfg, sing_o.k_limit);
        emit(sing_o.out, census_json(report).dump(2) + "\n");
        return report.all_match() && report.flags.empty() ? 0 : 3;
    }

    if (plot_cmd->parsed()) {
        EllipseConfig cfg = make_config(plot_o);
        if (cfg.k() > plot_o.k_limit)
            throw ResourceGuardError("k exceeds the limit; raise --k-limit");
        PlotWindow window = window_spec.empty() ? auto_window(cfg) : parse_window(window_spec);
        FloatPencil fp(build_pencil(cfg));
        SvgCanvas canvas(window, 800, 800);
        auto field = [&](double x, double y) { return fp.det(x, y); };
        canvas.add_segments(marching_squares(field, window, res), "#1f4e9c", 1.5);

        if (!partition_spec.empty()) {
            std::vector<int> subset = parse_partition(partition_spec, cfg.k());
            std::vector<int> complement;
            for (int i = 0; i < cfg.k(); ++i)
                if (std::find(subset.begin(), subset.end(), i) == subset.end())
                    complement.push_back(i);
            CurvePoly g = degenerate_polynomial(cfg.subset(subset, Rational(0)), plot_o.k_limit);
            FloatPoly gf(g.affine);
            canvas.add_segments(marching_squares(
                                    [&](double x, double y) { return gf.evaluate(x, y, 0.0).real(); },
                                    window, res),
                                "#b03030", 1.0, "6,4");
            if (!complement.empty()) {
                FloatPencil hp(build_pencil(cfg.subset(complement, cfg.radius)));
                canvas.add_segments(marching_squares(
                                        [&](double x, double y) { return hp.det(x, y); },
                                        window, res),
                                    "#2e8b57", 1.0, "2,3");
            }
        }
        for (const auto& [u, v] : cfg.foci) canvas.add_marker(u.to_double(), v.to_double(), 3.0, "black");
        if (!no_markers && cfg.k() >= 3 && cfg.radius.sign() > 0) {
            for (const auto& part : enumerate_affine_singularities(cfg, plot_o.k_limit))
                for (const auto& [x, y] : part.points)
                    if (std::fabs(x.imag()) < 1e-9 && std::fabs(y.imag()) < 1e-9)
                        canvas.add_marker(x.real(), y.real(), 4.0, "#d03060");
        }
        emit(plot_o.out.empty() ? "plot.svg" : plot_o.out, canvas.render());
        return 0;
    }

    if (dual_cmd->parsed()) {
        EllipseConfig cfg = make_config(dual_o);
        if (cfg.k() > dual_o.k_limit)
            throw ResourceGuardError("k exceeds the limit; raise --k-limit");
        std::pair<double, double> shift{0.0, 0.0};
        EllipseConfig centered = cfg;
        FloatPencil probe(build_pencil(cfg));
        if (probe.lambda_min(0.0, 0.0) <= 0) {
            // Recenter at the foci centroid so the origin is interior.
            Rational cx(0), cy(0);
            for (const auto& [u, v] : cfg.foci) {
                cx += u;
                cy += v;
            }
            cx /= Rational(cfg.k());
            cy /= Rational(cfg.k());
            for (auto& [u, v] : centered.foci) {
                u -= cx;
                v -= cy;
            }
            shift = {-cx.to_double(), -cy.to_double()};
        }
        auto samples = polar_boundary(centered, n_samples, dual_o.tol);

        double w_max = 0;
        for (const auto& s : samples) w_max = std::max({w_max, std::fabs(s.w1), std::fabs(s.w2)});
        double m = 1.2 * w_max;
        SvgCanvas canvas({-m, -m, m, m}, 800, 800);
        std::vector<std::pair<double, double>> pts;
        for (const auto& s : samples) pts.push_back({s.w1, s.w2});
        canvas.add_polyline(pts, "#1f4e9c", 1.5, true);
        std::string svg_path = dual_o.out.empty() ? "dual.svg" : dual_o.out;
        emit(svg_path, canvas.render());
        std::string csv_path = svg_path;
        if (auto dot = csv_path.rfind('.'); dot != std::string::npos) csv_path.resize(dot);
        write_text_file(csv_path + ".csv", dual_csv(samples));
        if (!dual_json_path.empty())
            write_text_file(dual_json_path, dual_json(centered, samples, shift).dump(2) + "\n");
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ResourceGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NonGenericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
