// Forecast the final year of the Nottingham temperature series from the
// preceding nineteen and print the selected parameters and holdout error.

#include <iostream>
#include <vector>

#include "psf/datasets.hpp"
#include "psf/psf.hpp"

int main() {
    const auto& data = psf::datasets::nottem;
    std::vector<double> training(data.begin(), data.end() - 12);
    const std::span<const double> actual(data.end() - 12, data.end());

    psf::PsfConfig config;
    config.cycle = 12;
    config.n_ahead = 12;

    const auto result = psf::psf(psf::TimeSeries(training, config.cycle), config);
    std::cout << "k=" << result.k << " w=" << result.w << '\n';
    for (double v : result.predictions) {
        std::cout << v << ' ';
    }
    std::cout << "\nrmse=" << psf::rmse(result.predictions, actual) << '\n';
}
