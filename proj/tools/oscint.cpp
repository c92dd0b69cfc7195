#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "oscint/catalog.hpp"
#include "oscint/continued_fraction.hpp"
#include "oscint/euler.hpp"
#include "oscint/report.hpp"

namespace {

struct Options {
    std::vector<int> ids;
    bool all = false;
    std::string method = "hyperfunction";
    int digits = 100;
    int coefficients = 100;
    std::string zeta0_re = "0";
    std::string zeta0_im = "1";
    int panels = 50;
    int gl_points = 100;
    std::string tol;
    std::string format = "text";
    std::string output;
    int jobs = 1;
};

struct Task {
    int id = 0;
    std::string method;
};

void add_run_options(CLI::App& cmd, Options& opt, bool sweep_mode) {
    if (!sweep_mode) {
        cmd.add_option("--integral,-i", opt.ids, "catalog integral ids")
            ->check(CLI::Range(1, 8));
        cmd.add_flag("--all", opt.all, "run every catalog integral");
    }
    cmd.add_option("--method,-m", opt.method, "hyperfunction, euler, or both")
        ->check(CLI::IsMember({"hyperfunction", "euler", "both"}));
    cmd.add_option("--digits,-d", opt.digits, "decimal digits of working precision")
        ->envname("OSCINT_DIGITS")
        ->check(CLI::Range(16, 100000));
    cmd.add_option("--coefficients,-N", opt.coefficients, "Taylor coefficients (hyperfunction)")
        ->check(CLI::Range(2, 100000));
    cmd.add_option("--zeta0-re", opt.zeta0_re, "Re of the expansion center");
    cmd.add_option("--zeta0-im", opt.zeta0_im, "Im of the expansion center (> 0)");
    cmd.add_option("--panels,-K", opt.panels, "alternating-series panels (euler)")
        ->check(CLI::Range(4, 100000));
    cmd.add_option("--gl-points", opt.gl_points, "Gauss-Legendre points per panel (euler)")
        ->check(CLI::Range(2, 100000));
    cmd.add_option("--tol", opt.tol, "convergent stopping tolerance (decimal string)");
    cmd.add_option("--format,-f", opt.format, "report format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd.add_option("--output,-o", opt.output, "write the report to a file instead of stdout");
    cmd.add_option("--jobs,-j", opt.jobs, "parallel worker count")->check(CLI::Range(1, 256));
}

std::vector<std::string> methods_of(const Options& opt) {
    if (opt.method == "both") return {"hyperfunction", "euler"};
    return {opt.method};
}

// runs one task; never throws (failures land in the result's error field)
oscint::IntegralResult execute(const Task& task, const Options& opt,
                               const oscint::PrecisionContext& ctx,
                               const oscint::GaussLegendreRule* rule) {
    using namespace oscint;
    try {
        Integrand f = catalog_entry(task.id).integrand;  // private evaluation counter
        BigReal ref = reference_value(task.id, ctx);
        if (task.method == "hyperfunction") {
            PrecisionScope scope(ctx);
            HyperfunctionConfig hc;
            hc.precision = ctx;
            hc.zeta0 = BigComplex(BigReal(opt.zeta0_re), BigReal(opt.zeta0_im));
            hc.coefficients = opt.coefficients;
            if (!opt.tol.empty()) hc.tol = BigReal(opt.tol);
            hc.id = task.id;
            hc.reference = ref;
            return hyperfunction_value(f, hc);
        }
        return euler_value(f, opt.panels, *rule, ctx, task.id, ref);
    } catch (const std::exception& e) {
        oscint::IntegralResult r;
        r.id = task.id;
        r.method = task.method;
        r.error = e.what();
        return r;
    }
}

std::vector<oscint::IntegralResult> execute_all(const std::vector<Task>& tasks,
                                                const Options& opt,
                                                const oscint::PrecisionContext& ctx) {
    using namespace oscint;
    std::optional<GaussLegendreRule> rule;
    for (const Task& t : tasks)
        if (t.method == "euler" && !rule) rule = gauss_legendre(opt.gl_points, ctx);

    std::vector<IntegralResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
            results[t] = execute(tasks[t], opt, ctx, rule ? &*rule : nullptr);
    };
    if (opt.jobs <= 1 || tasks.size() <= 1) {
        drain();
    } else {
        std::vector<std::thread> workers;
        int n = std::min<int>(opt.jobs, static_cast<int>(tasks.size()));
        workers.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) workers.emplace_back(drain);
        for (auto& w : workers) w.join();
    }
    return results;
}

int emit(const std::vector<oscint::IntegralResult>& results, const Options& opt) {
    std::string payload = opt.format == "json"  ? oscint::render_json(results)
                          : opt.format == "csv" ? oscint::render_csv(results)
                                                : oscint::render_text(results);
    if (opt.output.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        out << payload;
        if (!out) {
            std::cerr << "oscint: cannot write " << opt.output << "\n";
            return 3;
        }
    }
    for (const auto& r : results)
        if (!r.error.empty()) return 1;
    return 0;
}

// digits >= 16 is enforced by the flag ranges; the center must lie strictly
// above the real axis
bool center_valid(const Options& opt, const oscint::PrecisionContext& ctx) {
    try {
        oscint::PrecisionScope scope(ctx);
        return oscint::BigReal(opt.zeta0_im).sign() > 0;
    } catch (const std::exception&) {
        return false;
    }
}

int run_command(const Options& opt) {
    std::vector<int> ids = opt.ids;
    if (opt.all) {
        ids.clear();
        for (const auto& e : oscint::catalog_entries()) ids.push_back(e.id);
    }
    if (ids.empty()) {
        std::cerr << "oscint run: give --integral ids or --all\n";
        return 2;
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    oscint::PrecisionContext ctx{opt.digits};
    if (!center_valid(opt, ctx)) {
        std::cerr << "oscint run: --zeta0-im must be a decimal number > 0\n";
        return 2;
    }

    std::vector<Task> tasks;
    for (int id : ids)
        for (const std::string& m : methods_of(opt)) tasks.push_back({id, m});
    return emit(execute_all(tasks, opt, ctx), opt);
}

int sweep_command(const Options& opt, int id, const std::string& axis,
                  const std::vector<std::string>& values) {
    std::vector<oscint::IntegralResult> results;
    for (const std::string& v : values) {
        Options step = opt;
        try {
            if (axis == "digits")
                step.digits = std::stoi(v);
            else if (axis == "N")
                step.coefficients = std::stoi(v);
            else
                step.zeta0_im = v;
        } catch (const std::exception&) {
            std::cerr << "oscint sweep: bad " << axis << " value '" << v << "'\n";
            return 2;
        }
        if (step.digits < 16 || step.coefficients < 2) {
            std::cerr << "oscint sweep: " << axis << " value '" << v << "' out of range\n";
            return 2;
        }
        oscint::PrecisionContext ctx{step.digits};
        if (!center_valid(step, ctx)) {
            std::cerr << "oscint sweep: --zeta0-im must be a decimal number > 0\n";
            return 2;
        }
        std::vector<Task> tasks;
        for (const std::string& m : methods_of(step)) tasks.push_back({id, m});
        auto step_results = execute_all(tasks, step, ctx);
        results.insert(results.end(), step_results.begin(), step_results.end());
    }
    return emit(results, opt);
}

int list_command() {
    std::cout << "built-in integrands\n";
    for (const auto& e : oscint::catalog_entries())
        std::cout << "  (" << e.id << ")  " << e.description << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-precision semi-infinite oscillatory integrals"};
    app.require_subcommand(1);

    Options run_opt;
    CLI::App* run = app.add_subcommand("run", "compute catalog integrals");
    add_run_options(*run, run_opt, /*sweep_mode=*/false);

    Options sweep_opt;
    int sweep_id = 0;
    std::string sweep_axis;
    std::vector<std::string> sweep_values;
    CLI::App* sweep = app.add_subcommand("sweep", "vary one parameter over a value list");
    add_run_options(*sweep, sweep_opt, /*sweep_mode=*/true);
    sweep->add_option("--integral,-i", sweep_id, "catalog integral id")
        ->required()
        ->check(CLI::Range(1, 8));
    sweep->add_option("--axis", sweep_axis, "parameter to vary")
        ->required()
        ->check(CLI::IsMember({"digits", "N", "zeta0_im"}));
    sweep->add_option("--values", sweep_values, "axis values")->required()->expected(1, 10000);

    CLI::App* list = app.add_subcommand("list", "describe the built-in integrands");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(run_opt);
        if (sweep->parsed()) return sweep_command(sweep_opt, sweep_id, sweep_axis, sweep_values);
        if (list->parsed()) return list_command();
    } catch (const std::exception& e) {
        std::cerr << "oscint: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
