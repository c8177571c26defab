// Command-line surface for the spherical-code library: construction,
// encoding/decoding, density analytics and AWGN simulation.
//
// Exit codes: 0 success, 1 resource/infeasible, 2 usage or argument error.

#include "schf/channel.hpp"
#include "schf/code.hpp"
#include "schf/decoder.hpp"
#include "schf/density.hpp"
#include "schf/reference_data.hpp"
#include "schf/serialization.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("cannot parse ") + what + ": '" + tok + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty ") + what + " list");
    return out;
}

struct Grid {
    double lo = 0.0, hi = 0.0;
    int steps = 0;
};

Grid parse_grid(const std::string& text) {
    Grid g;
    char c1 = 0, c2 = 0;
    std::stringstream ss(text);
    if (!(ss >> g.lo >> c1 >> g.hi >> c2 >> g.steps) || c1 != ':' || c2 != ':' || g.steps < 1)
        throw std::invalid_argument("grid must be 'a:b:steps' with steps >= 1");
    return g;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

std::string format_coords(const std::vector<double>& coords) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    return os.str();
}

/// "1/96"-style exact form of the asymptotic center density denominator.
std::string center_density_exact_form(int k) {
    if (k == 2) return "1/(4*sqrt(3))";
    const long long pow2 = 3ll * (1ll << (k - 2)) - 1;
    schf::BigInt denom = schf::BigInt(1) << pow2;
    schf::BigInt three = 1;
    for (long long e = 0; e < (1ll << (k - 3)); ++e) three *= 3;
    denom *= three;
    return "1/" + schf::to_string(denom);
}

std::string format_from_log10(double log10_value) {
    const double ex = std::floor(log10_value);
    const double mant = std::pow(10.0, log10_value - ex);
    std::ostringstream os;
    os.precision(6);
    os << mant << "e" << (ex >= 0 ? "+" : "") << static_cast<long long>(ex);
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spherical codes on S^{n-1} (n = 2^k) built from Hopf foliations"};
    app.require_subcommand(1);
    std::function<int()> run;

    int dim = 4;
    double dmin = 1.0;
    std::string variant = "standard";
    std::string index_str = "0";
    std::string out_path;
    std::string point_str;
    std::string snr_str;
    std::string grid_str;
    std::string decoder_str = "suboptimal-refined";
    std::string format = "plain";
    int breadth = 1;
    bool refine = false;
    bool with_references = false;
    int k_param = 2;
    double asym_dmin = 0.0;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    int threads = 0;

    auto add_code_opts = [&](CLI::App* cmd) {
        cmd->add_option("--dim", dim, "code dimension, a power of two >= 4")->required();
        cmd->add_option("--dmin", dmin, "minimum distance in (0, 2]")->required();
    };

    // card
    {
        auto* cmd = app.add_subcommand("card", "print the code cardinality M");
        add_code_opts(cmd);
        cmd->add_option("--variant", variant, "standard|modified")
            ->check(CLI::IsMember({"standard", "modified"}));
        cmd->callback([&] {
            run = [&] {
                schf::CodeSpec spec{dim, dmin, schf::variant_from_name(variant)};
                std::cout << schf::to_string(schf::cardinality(spec)) << '\n';
                return 0;
            };
        });
    }
    // build
    {
        auto* cmd = app.add_subcommand("build", "build leaf tables and write them as JSON");
        add_code_opts(cmd);
        cmd->add_option("--out", out_path, "output file")->required();
        cmd->callback([&] {
            run = [&] {
                const auto tables = schf::build_tables({dim, dmin, schf::Variant::standard});
                std::ofstream file;
                auto& os = open_output(file, out_path);
                os << schf::tables_to_json(tables).dump(2) << '\n';
                return 0;
            };
        });
    }
    // encode
    {
        auto* cmd = app.add_subcommand("encode", "print the codeword for an index");
        add_code_opts(cmd);
        cmd->add_option("--index", index_str, "codeword index")->required();
        cmd->callback([&] {
            run = [&] {
                const auto tables = schf::build_tables({dim, dmin, schf::Variant::standard});
                const schf::BigInt a(index_str);
                if (a < 0 || a >= tables.total) {
                    std::cerr << "index out of range [0," << schf::to_string(tables.total)
                              << ")\n";
                    return 2;
                }
                std::cout << format_coords(schf::encode(tables, a).coords) << '\n';
                return 0;
            };
        });
    }
    // enumerate
    {
        auto* cmd = app.add_subcommand("enumerate", "write the whole codebook as CSV");
        add_code_opts(cmd);
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->callback([&] {
            run = [&] {
                const auto tables = schf::build_tables({dim, dmin, schf::Variant::standard});
                std::ofstream file;
                auto& os = open_output(file, out_path);
                schf::write_codebook_csv(os, tables);
                return 0;
            };
        });
    }
    // decode
    {
        auto* cmd = app.add_subcommand("decode", "decode a received vector");
        add_code_opts(cmd);
        cmd->add_option("--point", point_str, "comma-separated coordinates")->required();
        cmd->add_option("--breadth", breadth, "adjacent leaves searched per side (default 1)");
        cmd->add_flag("--refine", refine, "enable the additional projection steps");
        cmd->callback([&] {
            run = [&] {
                const auto tables = schf::build_tables({dim, dmin, schf::Variant::standard});
                const auto y = parse_double_list(point_str, "coordinate");
                const auto res = schf::decode(tables, y, {breadth, refine});
                std::cout.precision(17);
                std::cout << schf::to_string(res.index) << ' ' << res.residual << '\n';
                return 0;
            };
        });
    }
    // density
    {
        auto* cmd = app.add_subcommand("density", "density analytics for a code");
        add_code_opts(cmd);
        cmd->add_option("--format", format, "plain|json")->check(CLI::IsMember({"plain", "json"}));
        cmd->callback([&] {
            run = [&] {
                const schf::BigInt m = schf::cardinality_standard(dim, dmin);
                const auto r = schf::make_density_report(m, dim, dmin);
                if (!r.feasible)
                    std::cerr << "warning: cap density exceeds 1 (packing violation signal)\n";
                if (format == "json") {
                    schf::json doc{{"M", schf::to_string(r.m_points)},
                                   {"dim", r.dim},
                                   {"dmin", r.dmin},
                                   {"density", r.density},
                                   {"center_density", r.center_density},
                                   {"rate_per_dim", r.rate_per_dim}};
                    std::cout << doc.dump(2) << '\n';
                } else {
                    std::cout.precision(17);
                    std::cout << "M: " << schf::to_string(r.m_points) << '\n'
                              << "dim: " << r.dim << '\n'
                              << "dmin: " << r.dmin << '\n'
                              << "density: " << r.density << '\n'
                              << "center_density: " << r.center_density << '\n'
                              << "rate_per_dim: " << r.rate_per_dim << '\n';
                }
                return 0;
            };
        });
    }
    // asymptotic
    {
        auto* cmd = app.add_subcommand("asymptotic",
                                       "asymptotic center density (and cardinality bound)");
        cmd->add_option("--k", k_param, "dimension exponent, n = 2^k, k >= 2")->required();
        cmd->add_option("--dmin", asym_dmin, "also print the cardinality bound at this distance");
        cmd->callback([&] {
            run = [&] {
                std::cout.precision(17);
                std::cout << center_density_exact_form(k_param) << " ≈ "
                          << schf::asymptotic_center_density(k_param) << '\n';
                if (asym_dmin > 0.0)
                    std::cout << "M_bound ≈ "
                              << format_from_log10(
                                     schf::asymptotic_cardinality_log10(k_param, asym_dmin))
                              << '\n';
                return 0;
            };
        });
    }
    // rate-curve
    {
        auto* cmd = app.add_subcommand(
            "rate-curve", "CSV of (series, d, M, rate) over a linear grid of distances");
        cmd->add_option("--dim", dim, "code dimension, a power of two >= 4")->required();
        cmd->add_option("--dmin-grid", grid_str, "a:b:steps, linear spacing, inclusive")
            ->required();
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_flag("--with-references", with_references,
                      "append published reference values for other constructions");
        cmd->callback([&] {
            run = [&] {
                const Grid g = parse_grid(grid_str);
                std::ofstream file;
                auto& os = open_output(file, out_path);
                os << "series,d,M,rate_per_dim\n";
                os.precision(17);
                for (int s = 0; s < g.steps; ++s) {
                    const double d =
                        g.steps == 1
                            ? g.lo
                            : g.lo + (g.hi - g.lo) * static_cast<double>(s) / (g.steps - 1);
                    const schf::BigInt m_std = schf::cardinality_standard(dim, d);
                    const schf::BigInt m_mod = schf::cardinality_modified(dim, d);
                    os << "schf-standard," << d << ',' << schf::to_string(m_std) << ','
                       << schf::binary_rate(m_std, dim) << '\n';
                    os << "schf-modified," << d << ',' << schf::to_string(m_mod) << ','
                       << schf::binary_rate(m_mod, dim) << '\n';
                }
                if (with_references)
                    for (const auto& ref : schf::reference_series())
                        if (ref.dim == dim)
                            os << ref.series << ',' << ref.dmin << ',' << ref.m_points << ','
                               << std::log2(ref.m_points) / dim << '\n';
                return 0;
            };
        });
    }
    // simulate
    {
        auto* cmd = app.add_subcommand("simulate", "seeded AWGN symbol-error-rate experiment");
        add_code_opts(cmd);
        cmd->add_option("--snr", snr_str, "comma-separated SNR values in dB")->required();
        cmd->add_option("--trials", trials, "trials per SNR point");
        cmd->add_option("--seed", seed, "64-bit seed");
        cmd->add_option("--decoder", decoder_str, "suboptimal|suboptimal-refined|ml")
            ->check(CLI::IsMember({"suboptimal", "suboptimal-refined", "ml"}));
        cmd->add_option("--breadth", breadth, "refinement breadth (default 1)");
        cmd->add_option("--threads", threads, "worker threads (0 = auto)");
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
        cmd->callback([&] {
            run = [&] {
                schf::SimConfig cfg;
                cfg.spec = {dim, dmin, schf::Variant::standard};
                cfg.snr_db = parse_double_list(snr_str, "SNR");
                cfg.trials_per_point = trials;
                cfg.seed = seed;
                cfg.breadth = breadth;
                cfg.threads = threads;
                if (decoder_str == "suboptimal") cfg.decoder = schf::DecoderKind::suboptimal;
                else if (decoder_str == "ml") cfg.decoder = schf::DecoderKind::ml;
                else cfg.decoder = schf::DecoderKind::suboptimal_refined;
                const auto report = schf::simulate(cfg);
                std::ofstream file;
                auto& os = open_output(file, out_path);
                if (format == "json") os << schf::sim_report_json(report).dump(2) << '\n';
                else os << schf::sim_report_csv(report);
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run();
    } catch (const schf::resource_error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}
