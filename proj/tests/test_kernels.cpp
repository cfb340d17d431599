#include "oip/config.hpp"
#include "oip/errors.hpp"
#include "oip/kernels.hpp"
#include "test_helpers.hpp"

#include <cstring>
#include <doctest.h>

using namespace oip;
using oip::test::laser_at;

namespace {

bool bit_equal(const std::vector<SParams>& a, const std::vector<SParams>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(SParams)) == 0;
}

} // namespace

TEST_CASE("parallel kernels match the serial reference bit for bit") {
    const BoardLines board = defaults::board();
    const ChipletGeometry chiplet = defaults::chiplet();
    const SiliconMaterial mat = defaults::material();
    const std::vector<double> freqs = linear_frequency_grid(1e9, 4e9, 97);

    const auto ec = EquivalentCircuit::series_r_par_c(1234.5, 80e-15);
    CHECK(bit_equal(serial::frequency_sweep(board, ec, freqs), parallel::frequency_sweep(board, ec, freqs)));

    const std::vector<double> depths = uniform_depth_grid(200e-6, 777);
    const auto ns = serial::density_samples(laser_at(0.4), mat, depths);
    const auto np = parallel::density_samples(laser_at(0.4), mat, depths);
    CHECK(ns == np);

    const std::vector<double> powers{0.0, 0.175, 0.2, 1.5};
    const PowerSweep s = serial::power_sweep(board, chiplet, laser_at(0.0, 1e-3), mat, powers, freqs);
    const PowerSweep p = parallel::power_sweep(board, chiplet, laser_at(0.0, 1e-3), mat, powers, freqs);
    CHECK(bit_equal(s.points, p.points));
    REQUIRE(s.elements.size() == powers.size());
    for (std::size_t i = 0; i < powers.size(); ++i)
        CHECK(s.elements[i].resistance == p.elements[i].resistance);
    CHECK(s.points.size() == powers.size() * freqs.size());
}

TEST_CASE("power sweep layout is power-major") {
    const BoardLines board = defaults::board();
    const std::vector<double> freqs{1e9, 2e9, 4e9};
    const std::vector<double> powers{0.0, 1.0};
    const PowerSweep sweep = parallel::power_sweep(board, defaults::chiplet(), laser_at(0.0, 1e-3),
                                                   defaults::material(), powers, freqs);
    for (std::size_t ip = 0; ip < powers.size(); ++ip) {
        const auto single = serial::frequency_sweep(board, sweep.elements[ip], freqs);
        for (std::size_t jf = 0; jf < freqs.size(); ++jf)
            CHECK(std::memcmp(&sweep.at(ip, jf), &single[jf], sizeof(SParams)) == 0);
    }
}

TEST_CASE("parallel kernels report the first failing point") {
    const std::vector<double> depths{0.0, 1e-6, -1.0, -2.0};
    CHECK_THROWS_AS(parallel::density_samples(laser_at(1.0), defaults::material(), depths), InvalidArgument);
    CHECK_THROWS_AS(parallel::power_sweep(defaults::board(), defaults::chiplet(), laser_at(0.0),
                                          defaults::material(), std::vector<double>{}, std::vector<double>{1e9}),
                    InvalidArgument);
    CHECK(kernel_threads() >= 1);
}
