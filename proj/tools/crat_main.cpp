// crat: congruence solvers, interpolation, and hyperspace demos over exact
// topological-ring arithmetic, with re-checkable JSON certificates.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crat/error.hpp"
#include "crat/jobs.hpp"

namespace {

using crat::jobs::json;

constexpr int kExitOk = 0;
constexpr int kExitSchema = 2;
constexpr int kExitSolver = 3;
constexpr int kExitVerify = 4;

unsigned long degree_budget() {
    const char* env = std::getenv("CRAT_DEGREE_BUDGET");
    if (!env || !*env) return crat::kDefaultDegreeBudget;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        crat::fail(crat::Err::Schema, "CRAT_DEGREE_BUDGET must be a positive integer");
    return v;
}

json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) crat::fail(crat::Err::Schema, "cannot open input file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) crat::fail(crat::Err::Schema, "input is not valid JSON");
    return j;
}

int run_command(const std::string& command, const std::string& input_path) {
    json doc = read_input(input_path);
    if (doc.contains("command") && doc.at("command") != command)
        crat::fail(crat::Err::Schema, "input document names a different command");
    json spec = {{"command", command},
                 {"ring", doc.contains("ring") ? doc.at("ring") : json()},
                 {"payload", doc.contains("payload") ? doc.at("payload") : json()}};
    json result = crat::jobs::run(spec, degree_budget());
    std::cout << crat::jobs::dump_canonical(result);
    return kExitOk;
}

int run_verify(const std::string& input_path) {
    json doc = read_input(input_path);
    std::string why;
    const bool ok = crat::jobs::verify(doc, degree_budget(), &why);
    json report = {{"verified", ok}};
    if (!ok) report["reason"] = why;
    std::cout << crat::jobs::dump_canonical(report);
    return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chinese remainder approximation toolkit with machine-checkable certificates"};
    app.require_subcommand(1);

    struct Job {
        std::string command;
        std::string input;
        bool verify = false;
    };
    std::vector<std::shared_ptr<Job>> jobs;

    auto add_job = [&](CLI::App* parent, const std::string& name, const std::string& command,
                       const std::string& desc, bool verify = false) {
        auto job = std::make_shared<Job>();
        job->command = command;
        job->verify = verify;
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->add_option("--input,-i", job->input, "JSON input file (default: stdin)");
        sub->callback([job, &jobs] { jobs.push_back(job); });
        return sub;
    };

    add_job(&app, "crt", "crt", "Solve a simultaneous congruence system with certificates");
    add_job(&app, "tcm", "tcm-check", "Decide topological co-maximality of two ideals");

    CLI::App* interp = app.add_subcommand("interp", "Interpolation solvers");
    interp->require_subcommand(1);
    add_job(interp, "lagrange", "interp-lagrange", "Approximate Lagrange interpolation over Z[sqrt2]");
    add_job(interp, "hermite", "interp-hermite", "Exact Hermite jet interpolation");

    CLI::App* hyper = app.add_subcommand("hyper", "Hyperspace queries");
    hyper->require_subcommand(1);
    add_job(hyper, "gap", "hyper-gap", "Exact hyperspace gap between two p-adic ideals");
    add_job(hyper, "net", "hyper-net", "Classify a descending chain against its limit");

    CLI::App* demo = app.add_subcommand("demo", "Convergence and divergence demonstrations");
    demo->require_subcommand(1);
    add_job(demo, "densify", "densify-demo", "Iterative densification with recorded iterates");
    add_job(demo, "divergence", "divergence-demo", "Certified non-convergence lower bounds");

    add_job(&app, "verify", "", "Re-check a result document from scratch", /*verify=*/true);

    CLI11_PARSE(app, argc, argv);

    if (jobs.empty()) return kExitSchema;
    const Job& job = *jobs.front();
    try {
        return job.verify ? run_verify(job.input) : run_command(job.command, job.input);
    } catch (const crat::CratError& e) {
        json err = {{"error", crat::err_name(e.code)}, {"detail", e.what()}};
        std::cout << crat::jobs::dump_canonical(err);
        return (e.code == crat::Err::Schema || e.code == crat::Err::EmptySystem) ? kExitSchema
                                                                                 : kExitSolver;
    } catch (const std::exception& e) {
        json err = {{"error", "Internal"}, {"detail", e.what()}};
        std::cout << crat::jobs::dump_canonical(err);
        return kExitSolver;
    }
}
