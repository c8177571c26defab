// Builds a small code, walks an index through encode -> noise -> decode, and
// prints the density figures for it.

#include "schf/channel.hpp"
#include "schf/code.hpp"
#include "schf/decoder.hpp"
#include "schf/density.hpp"

#include <iostream>

int main() {
    const schf::CodeSpec spec{8, 0.7, schf::Variant::standard};
    const auto tables = schf::build_tables(spec);
    std::cout << "C(M, n, d) with n = " << spec.dim << ", d = " << spec.dmin
              << ": M = " << schf::to_string(tables.total) << "\n";

    const schf::BigInt index = 123;
    const auto cw = schf::encode(tables, index);

    schf::CounterRng rng(/*seed=*/42, /*stream=*/0, /*counter=*/0);
    std::vector<double> y = cw.coords;
    const double sigma = schf::sigma_from_snr_db(12.0, spec.dim);
    for (double& c : y) c += sigma * rng.gaussian();

    const auto plain = schf::decode(tables, y);
    const auto refined = schf::decode(tables, y, {1, true});
    std::cout << "sent index " << schf::to_string(index) << ", decoded "
              << schf::to_string(plain.index) << " (plain, residual " << plain.residual
              << "), " << schf::to_string(refined.index) << " (refined, residual "
              << refined.residual << ")\n";

    const auto report = schf::make_density_report(tables.total, spec.dim, spec.dmin);
    std::cout << "density " << report.density << ", center density " << report.center_density
              << ", rate " << report.rate_per_dim << " bits/dim\n";
    return 0;
}
