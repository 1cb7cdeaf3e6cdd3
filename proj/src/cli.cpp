#include "orbitacc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "orbitacc/io.hpp"
#include "orbitacc/levi.hpp"
#include "orbitacc/scenario.hpp"
#include "orbitacc/verify.hpp"

namespace orbitacc {

namespace {

/// Sink that is either stdout or a file opened at `path`.
class OutputSink {
  public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool to_stdout() const { return !file_.is_open(); }

  private:
    std::ofstream file_;
};

struct OrbitOptions {
    std::string scenario;
    std::string map_name;
    std::string domain_name;
    std::string from = "0,0";
    std::string jrange = "0:40";
    double tol = 1e-3;
    size_t tail = kDefaultTail;
    bool expect_limit = false;
    std::string format = "csv";
    std::string out;
};

int cmd_orbit(const OrbitOptions& opt) {
    DomainMap map = BallMap::identity();
    ModelDomain domain = ModelDomain::ball();
    if (!opt.scenario.empty()) {
        map = scenario_probe_map(opt.scenario);
        domain = scenario_by_name(opt.scenario).harvest_domain;
    } else if (!opt.map_name.empty()) {
        if (opt.map_name == "identity") {
            map = BallMap::identity();
        } else {
            map = scenario_probe_map(opt.map_name);
        }
        domain = std::holds_alternative<BallMap>(map) ? ModelDomain::ball()
                                                      : ModelDomain::bidisc();
    } else {
        throw std::invalid_argument("orbit: need --scenario or --map");
    }
    if (!opt.domain_name.empty()) domain = ModelDomain::by_name(opt.domain_name);

    const CPoint2 X = parse_point(opt.from);
    const JRange jr = parse_jrange(opt.jrange);
    const OrbitRecord rec = iterate_orbit(map, X, jr.lo, jr.hi, domain);

    OutputSink sink(opt.out);
    if (opt.format == "json")
        sink.stream() << orbit_to_json(rec).dump(2) << '\n';
    else
        write_orbit_csv(sink.stream(), rec);

    // Limit verdicts; kept off stdout when the record itself went there.
    std::ostream& vs = sink.to_stdout() ? std::cerr : std::cout;
    bool all_converged = true;
    const auto report_end = [&](const char* label, const std::optional<CPoint2>& lim) {
        if (lim) {
            vs << "limit[" << label << "]: (" << format_double(lim->z1.real()) << ","
               << format_double(lim->z1.imag()) << "),(" << format_double(lim->z2.real())
               << "," << format_double(lim->z2.imag()) << ")\n";
        } else {
            vs << "limit[" << label << "]: none\n";
            all_converged = false;
        }
    };
    report_end("j_max", orbit_limit(rec, opt.tail, opt.tol));
    if (jr.lo < 0) report_end("j_min", orbit_limit_front(rec, opt.tail, opt.tol));
    if (opt.expect_limit && !all_converged) return 1;
    return 0;
}

struct SaccumOptions {
    std::string scenario;
    std::uint64_t seed = kDefaultSeed;
    double threshold = 0.0;  // 0 = scenario default
    std::string scales;
    double scale_factor = 1.0;
    std::string format = "csv";
    std::string out;
    std::string cloud_out;
};

int cmd_saccum(const SaccumOptions& opt, bool dimension_only) {
    ScenarioConfig cfg = scenario_by_name(opt.scenario, opt.seed, opt.scale_factor);
    if (opt.threshold > 0.0) cfg.bdist_threshold = opt.threshold;
    if (!opt.scales.empty()) cfg.scales = parse_scales(opt.scales);

    const SEstimate est = estimate_S(cfg);
    if (est.status == AccumStatus::no_accumulation) {
        std::cerr << "no accumulation at this depth (threshold "
                  << format_double(cfg.bdist_threshold) << ")\n";
        return 1;
    }

    if (!opt.cloud_out.empty()) {
        OutputSink cs(opt.cloud_out);
        if (opt.format == "json")
            cs.stream() << cloud_to_json(est.cloud).dump() << '\n';
        else
            write_cloud_csv(cs.stream(), est.cloud);
    }

    OutputSink sink(opt.out);
    std::ostream& os = sink.stream();
    if (dimension_only) {
        os << dimension_to_json(est.dimension).dump(2) << '\n';
        return 0;
    }
    os << "scenario " << cfg.name << ": " << est.cloud.size() << " boundary samples\n";
    os << "clusters: " << est.clusters.clusters.size()
       << " (unassigned " << est.clusters.unassigned << ")\n";
    const size_t shown = std::min<size_t>(est.clusters.clusters.size(), 8);
    for (size_t k = 0; k < shown; ++k) {
        const Cluster& c = est.clusters.clusters[k];
        os << "  center=(" << format_double(c.center[0]) << "," << format_double(c.center[1])
           << "," << format_double(c.center[2]) << "," << format_double(c.center[3])
           << ") count=" << c.count << " radius=" << format_double(c.radius) << '\n';
    }
    if (est.clusters.clusters.size() > shown)
        os << "  ... " << est.clusters.clusters.size() - shown << " more\n";
    os << dimension_to_json(est.dimension).dump(2) << '\n';
    return 0;
}

struct DimensionOptions {
    std::string scenario;
    std::string input;
    std::string scales;
    std::string out;
};

int cmd_dimension(const DimensionOptions& opt) {
    if (!opt.input.empty()) {
        std::ifstream in(opt.input);
        if (!in) throw std::invalid_argument("cannot open cloud file: " + opt.input);
        const PointCloud cloud = read_cloud_csv(in);
        const std::vector<double> scales =
            opt.scales.empty() ? default_scales() : parse_scales(opt.scales);
        const DimensionEstimate est = box_counting_dimension(cloud, scales);
        OutputSink sink(opt.out);
        sink.stream() << dimension_to_json(est).dump(2) << '\n';
        return 0;
    }
    if (opt.scenario.empty())
        throw std::invalid_argument("dimension: need --scenario or --in");
    SaccumOptions so;
    so.scenario = opt.scenario;
    so.scales = opt.scales;
    so.out = opt.out;
    return cmd_saccum(so, /*dimension_only=*/true);
}

struct LeviOptions {
    std::string domain = "ball";
    size_t n = 100;
    std::uint64_t seed = kDefaultSeed;
    double tau = kLeviTolerance;
    std::string out;
};

int cmd_levi(const LeviOptions& opt) {
    const ModelDomain domain = ModelDomain::by_name(opt.domain);
    const std::vector<CPoint2> pts = domain.sample_boundary(opt.n, opt.seed);
    nlohmann::json arr = nlohmann::json::array();
    for (const CPoint2& p : pts) {
        const BoundaryClassification bc = classify_boundary(domain, p, opt.tau);
        arr.push_back({{"point", {p.z1.real(), p.z1.imag(), p.z2.real(), p.z2.imag()}},
                       {"class", to_string(bc.cls)},
                       {"levi_value", bc.levi_value}});
    }
    OutputSink sink(opt.out);
    sink.stream() << arr.dump(2) << '\n';
    return 0;
}

struct CayleyOptions {
    std::string from;
    bool inverse = false;
    std::string detect;
    std::string jrange = "-10:10";
    std::string out;
};

int cmd_cayley(const CayleyOptions& opt) {
    OutputSink sink(opt.out);
    if (!opt.detect.empty()) {
        std::function<BallMap(long long)> family;
        if (opt.detect == "identity")
            family = [](long long) { return BallMap::identity(); };
        else if (opt.detect == "ex11")
            family = [](long long j) { return power(example11_phi(), j); };
        else if (opt.detect == "ex12")
            family = [](long long j) { return example12_phi(j); };
        else
            throw std::invalid_argument("cayley --detect: expected identity, ex11 or ex12");
        const JRange jr = parse_jrange(opt.jrange);
        const std::vector<CPoint2> probes = default_translation_probes();
        const TranslationFit fit = detect_translation(family, probes, jr.lo, jr.hi);
        sink.stream() << nlohmann::json{{"ok", fit.ok},
                                        {"t", fit.t},
                                        {"max_deviation", fit.max_deviation}}
                             .dump(2)
                      << '\n';
        return fit.ok ? 0 : 1;
    }
    if (opt.from.empty()) throw std::invalid_argument("cayley: need --from or --detect");
    const CPoint2 p = parse_point(opt.from);
    if (opt.inverse) {
        const CPoint2 z = siegel_to_ball(SiegelPoint{p.z1, p.z2});
        sink.stream() << nlohmann::json{{"z1", {z.z1.real(), z.z1.imag()}},
                                        {"z2", {z.z2.real(), z.z2.imag()}}}
                             .dump(2)
                      << '\n';
    } else {
        const SiegelPoint w = cayley_to_siegel(p);
        sink.stream() << nlohmann::json{{"w1", {w.w1.real(), w.w1.imag()}},
                                        {"w2", {w.w2.real(), w.w2.imag()}},
                                        {"in_siegel", in_siegel(w)}}
                             .dump(2)
                      << '\n';
    }
    return 0;
}

int cmd_verify_paper(bool as_json, const std::string& out) {
    const verify::VerifyReport report = verify::run_verification();
    OutputSink sink(out);
    if (as_json) {
        nlohmann::json checks = nlohmann::json::array();
        for (const verify::CheckRow& r : report.checks)
            checks.push_back({{"name", r.name},
                              {"expected", r.expected},
                              {"observed", r.observed},
                              {"tolerance", r.tolerance},
                              {"pass", r.pass}});
        sink.stream() << nlohmann::json{{"checks", std::move(checks)},
                                        {"overall", report.numeric_overall}}
                             .dump(2)
                      << '\n';
    } else {
        sink.stream() << verify::format_table(report);
    }
    std::cerr << verify::format_timings(report);
    return report.overall() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"boundary orbit accumulation sets for ball and bidisc domains"};
    app.require_subcommand(1);

    OrbitOptions orbit_opt;
    CLI::App* orbit = app.add_subcommand("orbit", "iterate an orbit and report its limit");
    orbit->add_option("--scenario", orbit_opt.scenario)->check(CLI::IsMember(scenario_names()));
    orbit->add_option("--map", orbit_opt.map_name,
                      "identity|ex11|ex12|ex21|ex22|ex23|ex24");
    orbit->add_option("--domain", orbit_opt.domain_name);
    orbit->add_option("--from", orbit_opt.from, "re,im[,re,im]");
    orbit->add_option("--j", orbit_opt.jrange, "a:b");
    orbit->add_option("--tol", orbit_opt.tol);
    orbit->add_option("--tail", orbit_opt.tail);
    orbit->add_flag("--expect-limit", orbit_opt.expect_limit);
    orbit->add_option("--format", orbit_opt.format)->check(CLI::IsMember({"csv", "json"}));
    orbit->add_option("--out", orbit_opt.out);

    SaccumOptions saccum_opt;
    CLI::App* saccum = app.add_subcommand("saccum", "estimate S: clusters and dimension");
    saccum->add_option("--scenario", saccum_opt.scenario)
        ->required()
        ->check(CLI::IsMember(scenario_names()));
    saccum->add_option("--seed", saccum_opt.seed);
    saccum->add_option("--threshold", saccum_opt.threshold);
    saccum->add_option("--scales", saccum_opt.scales, "comma-separated box sizes");
    saccum->add_option("--scale-factor", saccum_opt.scale_factor,
                       "multiplies the sample grid density");
    saccum->add_option("--format", saccum_opt.format)->check(CLI::IsMember({"csv", "json"}));
    saccum->add_option("--out", saccum_opt.out);
    saccum->add_option("--cloud-out", saccum_opt.cloud_out);

    DimensionOptions dim_opt;
    CLI::App* dim = app.add_subcommand("dimension", "box-counting dimension of a cloud");
    dim->add_option("--scenario", dim_opt.scenario)->check(CLI::IsMember(scenario_names()));
    dim->add_option("--in", dim_opt.input, "cloud CSV file");
    dim->add_option("--scales", dim_opt.scales);
    dim->add_option("--out", dim_opt.out);

    LeviOptions levi_opt;
    CLI::App* levi = app.add_subcommand("levi", "classify boundary points by Levi form");
    levi->add_option("--domain", levi_opt.domain);
    levi->add_option("--n", levi_opt.n);
    levi->add_option("--seed", levi_opt.seed);
    levi->add_option("--tau", levi_opt.tau);
    levi->add_option("--out", levi_opt.out);

    CayleyOptions cayley_opt;
    CLI::App* cayley = app.add_subcommand("cayley", "Cayley transform and translation detection");
    cayley->add_option("--from", cayley_opt.from);
    cayley->add_flag("--inverse", cayley_opt.inverse);
    cayley->add_option("--detect", cayley_opt.detect, "identity|ex11|ex12");
    cayley->add_option("--j", cayley_opt.jrange);
    cayley->add_option("--out", cayley_opt.out);

    bool verify_json = false;
    std::string verify_out;
    CLI::App* verify_cmd = app.add_subcommand("verify-paper", "re-check every quantitative claim");
    verify_cmd->add_flag("--json", verify_json);
    verify_cmd->add_option("--out", verify_out);

    std::vector<const char*> argv;
    argv.push_back("orbitacc");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (orbit->parsed()) return cmd_orbit(orbit_opt);
        if (saccum->parsed()) return cmd_saccum(saccum_opt, false);
        if (dim->parsed()) return cmd_dimension(dim_opt);
        if (levi->parsed()) return cmd_levi(levi_opt);
        if (cayley->parsed()) return cmd_cayley(cayley_opt);
        if (verify_cmd->parsed()) return cmd_verify_paper(verify_json, verify_out);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace orbitacc
