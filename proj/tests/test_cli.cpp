#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "psf/cli.hpp"

namespace fs = std::filesystem;
using psf::cli::RunSpec;

namespace {

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("psf_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

RunSpec nottem_spec() {
    RunSpec spec;
    spec.input = "nottem";
    spec.embedded = true;
    spec.n_ahead = 12;
    return spec;
}

std::vector<double> parse_lines(const std::string& text) {
    std::istringstream in(text);
    return psf::io::parse_series(in);
}

}  // namespace

TEST(IngestCsv, OneValuePerLine) {
    TempDir dir;
    write_file(dir / "a.csv", "1\n2\n3\n4\n");
    const auto s = psf::io::ingest_csv(dir / "a.csv", 2);
    EXPECT_EQ(std::vector<double>(s.values().begin(), s.values().end()), (std::vector<double>{1, 2, 3, 4}));
    EXPECT_EQ(s.cycle(), 2u);
}

TEST(IngestCsv, TimestampColumnAndHeader) {
    TempDir dir;
    write_file(dir / "b.csv", "date,value\n2020-01,3.5\n2020-02,4.0\n2020-03,4.5\n2020-04,5\n");
    const auto s = psf::io::ingest_csv(dir / "b.csv", 2);
    EXPECT_EQ(std::vector<double>(s.values().begin(), s.values().end()), (std::vector<double>{3.5, 4.0, 4.5, 5.0}));
}

TEST(IngestCsv, ReportsBadLine) {
    TempDir dir;
    write_file(dir / "c.csv", "1\n2\n3\n4\n5\n6\nabc\n8\n");
    try {
        psf::io::ingest_csv(dir / "c.csv", 2);
        FAIL();
    } catch (const psf::Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos) << e.what();
    }
}

TEST(IngestCsv, RejectsNonFiniteAndShortInput) {
    TempDir dir;
    write_file(dir / "d.csv", "1\n2\nnan\n4\n");
    EXPECT_THROW(psf::io::ingest_csv(dir / "d.csv", 2), psf::Error);
    write_file(dir / "e.csv", "1\n2\n3\n");
    EXPECT_THROW(psf::io::ingest_csv(dir / "e.csv", 2), psf::Error);
    EXPECT_THROW(psf::io::ingest_csv(dir / "missing.csv", 2), psf::Error);
}

TEST(Format, ShortestRoundTrip) {
    for (double v : {0.1, 1.0 / 3.0, 38.875, -1e-300, 6.02214076e23, 57.800000000000004}) {
        const auto text = psf::io::format_double(v);
        EXPECT_EQ(std::stod(text), v) << text;
    }
    EXPECT_EQ(psf::io::format_double(38.875), "38.875");
}

TEST(ParseGrid, SingleAndRange) {
    EXPECT_EQ(psf::cli::parse_grid("3"), (std::vector<int>{3}));
    EXPECT_EQ(psf::cli::parse_grid("2..5"), (std::vector<int>{2, 3, 4, 5}));
    EXPECT_THROW(psf::cli::parse_grid("5..2"), psf::Error);
    EXPECT_THROW(psf::cli::parse_grid("x"), psf::Error);
}

TEST(Plot, TwoPolylinesWithForecastAfterHistory) {
    const std::vector<double> history(psf::datasets::nottem.begin(), psf::datasets::nottem.end());
    const std::vector<double> pred(12, 50.0);
    const auto svg = psf::io::render_plot(history, pred);
    std::size_t count = 0;
    for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) {
        ++count;
    }
    EXPECT_EQ(count, 2u);
    EXPECT_NE(svg.find("class=\"forecast\" data-first-index=\"240\" data-last-index=\"251\""), std::string::npos);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Plot, AxisCoversPredictionsOutsideHistory) {
    const std::vector<double> history{1, 2, 3, 4};
    const std::vector<double> pred{100};
    const auto svg = psf::io::render_plot(history, pred);
    EXPECT_NE(svg.find(">100.00</text>"), std::string::npos);
    EXPECT_NE(svg.find(">1.00</text>"), std::string::npos);
}

TEST(Plot, EmptyPredictionsRejected) {
    try {
        psf::io::render_plot(std::vector<double>{1, 2}, std::vector<double>{});
        FAIL();
    } catch (const psf::Error& e) {
        EXPECT_STREQ(e.what(), "nothing to plot");
    }
}

TEST(Plot, ByteIdenticalOnRepeat) {
    TempDir dir;
    const std::vector<double> history(psf::datasets::nottem.begin(), psf::datasets::nottem.end());
    const std::vector<double> pred{40.1, 41.2, 45.3};
    psf::io::emit_plot(history, pred, dir / "a.svg");
    psf::io::emit_plot(history, pred, dir / "b.svg");
    const auto a = read_file(dir / "a.svg");
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(std::hash<std::string>{}(a), std::hash<std::string>{}(read_file(dir / "b.svg")));
}

TEST(CmdForecast, NottemPrintsSelectionAndWritesValues) {
    TempDir dir;
    auto spec = nottem_spec();
    spec.output = dir / "pred.txt";
    std::ostringstream out, err;
    ASSERT_EQ(psf::cli::cmd_forecast(spec, out, err), 0) << err.str();
    const auto values = parse_lines(read_file(*spec.output));
    ASSERT_EQ(values.size(), 12u);

    const psf::TimeSeries series({psf::datasets::nottem.begin(), psf::datasets::nottem.end()}, 12);
    psf::PsfConfig config;
    config.cycle = 12;
    config.n_ahead = 12;
    const auto r = psf::psf(series, config);
    EXPECT_EQ(values, r.predictions);
    EXPECT_EQ(out.str(), "k=" + std::to_string(r.k) + " w=" + std::to_string(r.w) + "\n");
}

TEST(CmdForecast, PinnedGrids) {
    auto spec = nottem_spec();
    spec.k_grid = {3};
    spec.w_grid = {5};
    std::ostringstream out, err;
    ASSERT_EQ(psf::cli::cmd_forecast(spec, out, err), 0);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "k=3 w=5");
}

TEST(CmdForecast, MissingInputFails) {
    RunSpec spec;
    spec.input = "missing.csv";
    spec.n_ahead = 12;
    std::ostringstream out, err;
    EXPECT_EQ(psf::cli::cmd_forecast(spec, out, err), 1);
    EXPECT_NE(err.str().find("missing.csv"), std::string::npos);
}

TEST(CmdForecast, ErrorLeavesNoFiles) {
    TempDir dir;
    auto spec = nottem_spec();
    spec.output = dir / "pred.txt";
    spec.k_grid = {50};
    spec.w_grid = {2};
    std::ostringstream out, err;
    EXPECT_EQ(psf::cli::cmd_forecast(spec, out, err), 1);
    EXPECT_FALSE(fs::exists(*spec.output));
    EXPECT_TRUE(fs::is_empty(dir.path()));
}

TEST(CmdForecast, UnwritablePlotFails) {
    auto spec = nottem_spec();
    spec.plot = fs::path("/nonexistent-dir/plot.svg");
    std::ostringstream out, err;
    EXPECT_EQ(psf::cli::cmd_plot(spec, out, err), 1);
}

TEST(CmdForecast, TruncationWarningStillSucceeds) {
    TempDir dir;
    std::string text = "9\n";
    for (double v : psf::datasets::nottem) {
        text += psf::io::format_double(v) + "\n";
    }
    write_file(dir / "n.csv", text);
    RunSpec spec;
    spec.input = (dir / "n.csv").string();
    spec.cycle = 12;
    spec.n_ahead = 12;
    std::ostringstream out, err;
    EXPECT_EQ(psf::cli::cmd_forecast(spec, out, err), 0);
    EXPECT_NE(err.str().find("warning:"), std::string::npos);
}

TEST(CmdEvaluate, SingleCsvLine) {
    std::ostringstream out, err;
    ASSERT_EQ(psf::cli::cmd_evaluate(nottem_spec(), out, err), 0) << err.str();
    const auto line = out.str();
    ASSERT_EQ(std::count(line.begin(), line.end(), '\n'), 1);
    ASSERT_EQ(std::count(line.begin(), line.end(), ','), 4);
    std::istringstream fields(line);
    std::string f;
    std::vector<std::string> parts;
    while (std::getline(fields, f, ',')) {
        parts.push_back(f);
    }
    EXPECT_GE(std::stod(parts[0]), 0.0);
    EXPECT_EQ(std::stoi(parts[3]), 12);
    EXPECT_NE(err.str().find("seed=0"), std::string::npos);
}

TEST(CmdEvaluate, PeriodicCsvHasZeroError) {
    TempDir dir;
    std::string text = "t,v\n";
    const std::vector<std::vector<double>> blocks{{1, 4, 9, 2}, {8, 8, 1, 0}, {3, 6, 5, 7}};
    for (int i = 0; i < 15; ++i) {
        for (double v : blocks[i % 3]) {
            text += std::to_string(i) + "," + psf::io::format_double(v) + "\n";
        }
    }
    write_file(dir / "p.csv", text);
    RunSpec spec;
    spec.input = (dir / "p.csv").string();
    spec.cycle = 4;
    spec.n_ahead = 4;
    const auto report = psf::cli::evaluate(spec);
    EXPECT_LT(report.rmse, 1e-12);
    EXPECT_EQ(report.k, 3);
}

TEST(CmdEvaluate, RepeatsAverageSeeds) {
    auto spec = nottem_spec();
    spec.w_grid = {2};
    spec.k_grid = {2, 3, 4};
    const auto first = psf::cli::evaluate(spec);
    spec.seed = 1;
    const auto second = psf::cli::evaluate(spec);
    spec.seed = 0;
    spec.repeats = 2;
    const auto mean = psf::cli::evaluate(spec);
    EXPECT_NEAR(mean.rmse, (first.rmse + second.rmse) / 2.0, 1e-12);
    EXPECT_EQ(mean.k, first.k);
}
