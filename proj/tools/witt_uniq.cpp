#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "witt/design.hpp"
#include "witt/exact_cover.hpp"
#include "witt/pipeline.hpp"
#include "witt/scheme.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_run(int stage, unsigned threads, const std::string& out_dir,
            const std::string& format, bool corrupt_hook) {
    witt::PipelineConfig cfg;
    cfg.threads = threads;
    cfg.only_stage = stage;
    cfg.corrupt_tensor_hook = corrupt_hook;
    if (const char* cache = std::getenv("WITT_UNIQ_CACHE")) cfg.cache_dir = cache;

    witt::Certificate cert = witt::run_pipeline(cfg);
    auto fmt = format == "json" ? witt::ReportFormat::Json : witt::ReportFormat::Text;
    std::cout << witt::render_report(cert, fmt);
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::ofstream j(fs::path(out_dir) / "certificate.json");
        j << witt::certificate_to_json(cert);
        std::ofstream t(fs::path(out_dir) / "report.txt");
        t << witt::render_report(cert, witt::ReportFormat::Text);
    }
    return cert.pass() ? 0 : 1;
}

int cmd_design(bool enumerate, bool count, const std::string& heuristic,
               const std::string& out_file) {
    auto inst = witt::build_witt_instance();
    auto h = heuristic == "leftmost" ? witt::ColumnHeuristic::Leftmost
                                     : witt::ColumnHeuristic::MinRemaining;
    if (count) {
        auto res = witt::exact_cover_solve(inst, witt::SolveMode::Count, h);
        std::cout << res.count << "\n";
        return 0;
    }
    if (enumerate) {
        auto res = witt::exact_cover_solve(inst, witt::SolveMode::Enumerate, h);
        for (const auto& sol : res.solutions) {
            for (std::size_t i = 0; i < sol.size(); ++i)
                std::cout << (i ? " " : "") << sol[i];
            std::cout << "\n";
        }
        return 0;
    }
    auto res = witt::exact_cover_solve(inst, witt::SolveMode::First, h);
    if (res.solutions.empty()) {
        std::cerr << "no solution\n";
        return 1;
    }
    auto design = witt::design_from_witt_solution(res.solutions[0]);
    auto rep = witt::verify_t_design(design, 4);
    if (!rep.ok || rep.lambda != 1) {
        std::cerr << "constructed design failed verification\n";
        return 1;
    }
    std::string text = witt::design_to_text(design);
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        out << text;
    }
    return 0;
}

int cmd_scheme(const std::string& design_file) {
    auto design = witt::design_from_text(slurp(design_file));
    auto rep = witt::verify_t_design(design, 4);
    if (!rep.ok) {
        std::cerr << "not a 4-design\n";
        return 1;
    }
    auto scheme = witt::scheme_from_design(design);
    auto axioms = witt::verify_scheme_axioms(scheme);
    if (!axioms.ok) {
        std::cerr << "scheme axioms fail\n";
        return 1;
    }
    std::cout << "vertices: " << scheme.n << "\nclasses: " << scheme.d << "\n";
    for (std::size_t i = 1; i <= scheme.d; ++i)
        std::cout << "L" << i << ":\n" << axioms.p.intersection_matrix(i).to_string();
    std::cout << (axioms.p == witt::known_witt_p_tensor()
                      ? "intersection numbers match the published tables\n"
                      : "intersection numbers DIFFER from the published tables\n");
    return axioms.p == witt::known_witt_p_tensor() ? 0 : 1;
}

int cmd_report(const std::string& cert_file) {
    auto cert = witt::certificate_from_json(slurp(cert_file));
    std::cout << witt::render_report(cert, witt::ReportFormat::Text);
    return cert.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"machine certification of the 3-class Q-polynomial scheme on the "
                 "blocks of the 4-(11,5,1) design"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run the uniqueness pipeline");
    int stage = 0;
    unsigned threads = 1;
    std::string out_dir, format = "text";
    bool corrupt_hook = false;
    run->add_option("--stage", stage, "run only this stage (1..7)")
        ->check(CLI::Range(1, 7));
    run->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    run->add_option("--out", out_dir, "directory for certificate.json and report.txt");
    run->add_option("--format", format, "stdout format")
        ->check(CLI::IsMember({"text", "json"}));
    run->add_flag("--inject-bad-tensor", corrupt_hook,
                  "test hook: corrupt the stage-2 tensor comparison")
        ->group(""); // hidden

    auto* design = app.add_subcommand("design", "construct the 4-(11,5,1) design");
    bool enumerate = false, count = false;
    std::string heuristic = "mrv", out_file;
    design->add_flag("--enumerate", enumerate, "print every exact-cover solution");
    design->add_flag("--count", count, "print the number of exact-cover solutions");
    design->add_option("--heuristic", heuristic, "column choice")
        ->check(CLI::IsMember({"mrv", "leftmost"}));
    design->add_option("--out", out_file, "write the design file here");

    auto* scheme = app.add_subcommand("scheme", "scheme parameters of a design file");
    std::string design_file;
    scheme->add_option("design-file", design_file)->required();

    auto* report = app.add_subcommand("report", "render a certificate as text");
    std::string cert_file;
    report->add_option("certificate", cert_file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(stage, threads, out_dir, format, corrupt_hook);
        if (design->parsed()) return cmd_design(enumerate, count, heuristic, out_file);
        if (scheme->parsed()) return cmd_scheme(design_file);
        if (report->parsed()) return cmd_report(cert_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
