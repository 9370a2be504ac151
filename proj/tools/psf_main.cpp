#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "psf/cli.hpp"

namespace {

void add_run_options(CLI::App* cmd, psf::cli::RunSpec& spec, std::string& input, std::string& data,
                     std::string& k_text, std::string& w_text, std::string& out, std::string& plot) {
    auto* in_opt = cmd->add_option("--input", input, "CSV file: one value per line or timestamp,value");
    auto* data_opt = cmd->add_option("--data", data, "Embedded dataset: nottem or sunspots");
    in_opt->excludes(data_opt);
    cmd->add_option("--cycle", spec.cycle, "Values per seasonal cycle (default 12 for embedded data, else 24)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--n-ahead", spec.n_ahead, "Number of values to forecast")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--k", k_text, "Cluster count: <int> or <lo>..<hi>")->default_str("2..10");
    cmd->add_option("--w", w_text, "Window size: <int> or <lo>..<hi>")->default_str("1..10");
    cmd->add_option("--seed", spec.seed, "k-means seed")->default_val(0);
    cmd->add_option("--out", out, "Output path");
    cmd->add_option("--plot", plot, "SVG plot path");
    cmd->add_option("--threads", spec.threads, "Worker threads for grid search")->default_val(1)->check(
        CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern sequence based forecasting"};
    app.require_subcommand(1);

    psf::cli::RunSpec spec;
    std::string input, data, k_text = "2..10", w_text = "1..10", out, plot;

    auto* forecast = app.add_subcommand("forecast", "Forecast past the end of the series");
    auto* evaluate = app.add_subcommand("evaluate", "Hold out the final cycles and report rmse,k,w,horizon,runtime_ms");
    auto* plot_cmd = app.add_subcommand("plot", "Forecast and write an SVG plot");
    for (auto* cmd : {forecast, evaluate, plot_cmd}) {
        add_run_options(cmd, spec, input, data, k_text, w_text, out, plot);
    }
    evaluate->add_option("--repeats", spec.repeats, "Runs with consecutive seeds; mean RMSE is reported")
        ->default_val(1)
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (input.empty() == data.empty()) {
        std::cerr << "error: exactly one of --input or --data is required\n";
        return 1;
    }
    spec.embedded = !data.empty();
    spec.input = spec.embedded ? data : input;
    try {
        spec.k_grid = psf::cli::parse_grid(k_text);
        spec.w_grid = psf::cli::parse_grid(w_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    if (!out.empty()) {
        spec.output = out;
    }
    if (!plot.empty()) {
        spec.plot = plot;
    }

    if (forecast->parsed()) {
        return psf::cli::cmd_forecast(spec, std::cout, std::cerr);
    }
    if (evaluate->parsed()) {
        return psf::cli::cmd_evaluate(spec, std::cout, std::cerr);
    }
    return psf::cli::cmd_plot(spec, std::cout, std::cerr);
}
