// SPDX-License-Identifier: Apache-2.0
//
// mmbeam - location-aided compressive beam alignment for mmWave links
// Copyright (C) 2026 The mmbeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line front end: `run` (Monte-Carlo benchmark), `cdf` (post-process records),
// `demo` (one verbose trial).

#include "mmbeam/harness.hpp"
#include "mmbeam/report.hpp"
#include "mmbeam/strategies.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace
{
    using namespace mmbeam;

    constexpr int kExitConfig = 2;
    constexpr int kExitIo = 3;

    // Raw option values; unset ones keep the config-file or default value.
    struct Overrides
    {
        std::optional<int> trials, n_bs, n_ms, grid_size, beam_count, paths, cs_random_budget, cs_localized_budget;
        std::optional<std::uint64_t> seed;
        std::optional<double> beamwidth_deg, max_loc_error, snr_db, rician_k, area_side, min_separation,
            element_spacing;
        std::optional<std::string> switch_convention, rician_mode, nlos_profile, loc_error_model, path_loss_model;
        std::string config_file;
    };

    void add_sim_options(CLI::App &cmd, Overrides &o)
    {
        cmd.add_option("--config", o.config_file, "Config file: key = value lines or a JSON report/config");
        cmd.add_option("--trials", o.trials, "Monte-Carlo trials");
        cmd.add_option("--seed", o.seed, "Run seed");
        cmd.add_option("--n-bs", o.n_bs, "BS antenna elements");
        cmd.add_option("--n-ms", o.n_ms, "MS antenna elements");
        cmd.add_option("--grid-size", o.grid_size, "Angle grid points (default 360 / beamwidth)");
        cmd.add_option("--beam-count", o.beam_count, "Exhaustive-search beams per side (default 360 / beamwidth)");
        cmd.add_option("--beamwidth-deg", o.beamwidth_deg, "Beamwidth in degrees");
        cmd.add_option("--max-loc-error", o.max_loc_error, "Per-axis localization error bound in m");
        cmd.add_option("--snr-db", o.snr_db, "Measurement SNR P / sigma^2 in dB");
        cmd.add_option("--rician-k", o.rician_k, "LOS / NLOS power ratio");
        cmd.add_option("--paths", o.paths, "Propagation paths L");
        cmd.add_option("--area-side", o.area_side, "Side of the square placement area in m");
        cmd.add_option("--min-separation", o.min_separation, "Minimum BS-MS distance in m");
        cmd.add_option("--element-spacing", o.element_spacing, "Element spacing in wavelengths");
        cmd.add_option("--cs-random-budget", o.cs_random_budget, "CsRandom probe budget");
        cmd.add_option("--cs-localized-budget", o.cs_localized_budget,
                       "CsLocalized probe budget, 0 = one beam per beamwidth");
        cmd.add_option("--switch-convention", o.switch_convention, "per-side | pair")
            ->check(CLI::IsMember({"per-side", "pair"}));
        cmd.add_option("--rician-mode", o.rician_mode, "fixed | uniform")->check(CLI::IsMember({"fixed", "uniform"}));
        cmd.add_option("--nlos-profile", o.nlos_profile, "equal | rayleigh")
            ->check(CLI::IsMember({"equal", "rayleigh"}));
        cmd.add_option("--loc-error-model", o.loc_error_model, "one-sided | zero-mean")
            ->check(CLI::IsMember({"one-sided", "zero-mean"}));
        cmd.add_option("--path-loss", o.path_loss_model, "unit | free-space")
            ->check(CLI::IsMember({"unit", "free-space"}));
    }

    std::string trim(const std::string &s)
    {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return {};
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    // key = value lines; keys use the JSON config names, dashes are accepted for underscores.
    nlohmann::json read_key_value_config(std::istream &is, const std::string &path)
    {
        const nlohmann::json defaults = config_to_json(SimConfig{});
        nlohmann::json out = nlohmann::json::object();
        std::string line;
        int line_no = 0;
        std::vector<std::string> problems;
        while (std::getline(is, line))
        {
            ++line_no;
            line = trim(line.substr(0, line.find('#')));
            if (line.empty() || line.front() == '[')
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
            {
                problems.push_back(path + ":" + std::to_string(line_no) + ": expected key = value");
                continue;
            }
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
                value = value.substr(1, value.size() - 2);
            std::replace(key.begin(), key.end(), '-', '_');
            if (!defaults.contains(key))
            {
                problems.push_back(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
                continue;
            }
            const auto &kind = defaults.at(key);
            try
            {
                if (kind.is_string())
                    out[key] = value;
                else if (kind.is_number_unsigned())
                    out[key] = std::stoull(value);
                else if (kind.is_number_integer())
                    out[key] = std::stoi(value);
                else
                    out[key] = std::stod(value);
            }
            catch (const std::exception &)
            {
                problems.push_back(path + ":" + std::to_string(line_no) + ": bad value for '" + key + "'");
            }
        }
        if (!problems.empty())
            throw ConfigError(problems);
        return out;
    }

    nlohmann::json read_config_file(const std::string &path)
    {
        std::ifstream is(path, std::ios::binary);
        if (!is)
            throw IoError("cannot open config '" + path + "'");
        is >> std::ws;
        if (is.peek() == '{')
        {
            nlohmann::json j;
            try
            {
                is >> j;
            }
            catch (const nlohmann::json::exception &e)
            {
                throw ConfigError({path + ": " + e.what()});
            }
            return j.contains("config") ? j.at("config") : j;
        }
        return read_key_value_config(is, path);
    }

    SimConfig resolve_config(const Overrides &o)
    {
        nlohmann::json merged = config_to_json(SimConfig{});
        nlohmann::json file;
        if (!o.config_file.empty())
        {
            file = read_config_file(o.config_file);
            for (const auto &[key, value] : file.items())
                if (merged.contains(key))
                    merged[key] = value;
        }
        SimConfig c;
        try
        {
            c = config_from_json(merged);
        }
        catch (const ParseError &e)
        {
            throw ConfigError({e.what()});
        }

        auto set = [](auto &field, const auto &opt) {
            if (opt)
                field = *opt;
        };
        set(c.trials, o.trials);
        set(c.seed, o.seed);
        set(c.n_bs, o.n_bs);
        set(c.n_ms, o.n_ms);
        set(c.beamwidth_deg, o.beamwidth_deg);
        set(c.max_loc_error_m, o.max_loc_error);
        set(c.snr_db, o.snr_db);
        set(c.rician_k, o.rician_k);
        set(c.num_paths, o.paths);
        set(c.area_side_m, o.area_side);
        set(c.min_separation_m, o.min_separation);
        set(c.element_spacing, o.element_spacing);
        set(c.cs_random_budget, o.cs_random_budget);
        set(c.cs_localized_budget, o.cs_localized_budget);
        if (o.switch_convention)
            c.switch_convention = parse_switch_convention(*o.switch_convention);
        if (o.rician_mode)
            c.rician_mode = parse_rician_mode(*o.rician_mode);
        if (o.nlos_profile)
            c.nlos_profile = parse_nlos_profile(*o.nlos_profile);
        if (o.loc_error_model)
            c.loc_error_model = parse_error_model(*o.loc_error_model);
        if (o.path_loss_model)
            c.path_loss_model = parse_path_loss_model(*o.path_loss_model);

        // A beamwidth given without explicit grid/codebook sizes sets both to 360 / beamwidth.
        const bool beamwidth_given = o.beamwidth_deg || file.contains("beamwidth_deg");
        if (beamwidth_given && c.beamwidth_deg > 0.0)
        {
            const int derived = static_cast<int>(std::lround(360.0 / c.beamwidth_deg));
            if (!o.grid_size && !file.contains("grid_size"))
                c.grid_size = derived;
            if (!o.beam_count && !file.contains("beam_count_es"))
                c.beam_count_es = derived;
        }
        set(c.grid_size, o.grid_size);
        set(c.beam_count_es, o.beam_count);

        c.validate();
        return c;
    }

    void print_summary(std::ostream &os, std::span<const TrialRecord> records, const SimConfig &cfg)
    {
        os << "strategy            trials  mean_gain  median_gain  mean_switches(" << to_string(cfg.switch_convention)
           << ")  fallbacks\n";
        for (const auto &[strategy, s] : summarize(records))
            os << std::left << std::setw(20) << to_string(strategy) << std::right << std::setw(6) << s.count
               << std::fixed << std::setprecision(3) << std::setw(11) << s.mean_gain << std::setw(13)
               << s.median_gain << std::setw(24) << s.mean_switch_count << std::setw(11) << s.fallbacks << '\n';
        os.unsetf(std::ios::fixed);
    }

    std::string deg(double rad)
    {
        std::ostringstream os;
        os << std::fixed << std::setprecision(2) << rad * 180.0 / kPi << " deg";
        return os.str();
    }

    void print_demo(const Scenario &scenario, int trial)
    {
        const std::uint64_t seed = trial_seed(scenario.config.seed, trial);
        TrialDraw draw;
        const auto results = run_trial(scenario, seed, &draw);
        const AngleGrid &grid = scenario.grid;

        auto &os = std::cout;
        os << std::fixed << std::setprecision(3);
        os << "trial " << trial << " (stream seed " << seed << ")\n";
        os << "BS  true (" << draw.bs_true.x << ", " << draw.bs_true.y << ")  est (" << draw.bs_est.x << ", "
           << draw.bs_est.y << ")\n";
        os << "MS  true (" << draw.ms_true.x << ", " << draw.ms_true.y << ")  est (" << draw.ms_est.x << ", "
           << draw.ms_est.y << ")\n";
        os << "distance " << distance(draw.bs_true, draw.ms_true) << " m\n\npaths:\n";
        for (const auto &p : draw.paths.paths)
            os << "  " << (p.is_los ? "LOS " : "NLOS") << "  |gain|^2 " << std::norm(p.gain) << "  aod " << deg(p.aod)
               << "  aoa " << deg(p.aoa) << '\n';
        os << "\nlocalized AoD indices [" << draw.aod_range.lo << ", " << draw.aod_range.hi << "] ("
           << draw.aod_range.count() << " of " << grid.size() << "), AoA indices [" << draw.aoa_range.lo << ", "
           << draw.aoa_range.hi << "] (" << draw.aoa_range.count() << ")\n\n";
        for (const auto &r : results)
        {
            os << std::left << std::setw(18) << to_string(r.strategy) << std::right << " gain " << std::setw(8)
               << r.gain << " / " << scenario.bs.num_elements * scenario.ms.num_elements << "  pairs "
               << std::setw(5) << r.switch_count << "  per-side " << std::setw(3) << r.per_side_count;
            if (r.estimated_angles)
                os << "  aod " << deg(r.estimated_angles->first) << "  aoa " << deg(r.estimated_angles->second);
            if (r.strategy == Strategy::ExhaustiveSearch)
                os << "  beams (" << r.tx_index << ", " << r.rx_index << ")";
            if (r.fallback_used)
                os << "  [fallback]";
            os << '\n';
        }
    }

    int guarded(const std::function<void()> &body)
    {
        try
        {
            body();
            return 0;
        }
        catch (const ConfigError &e)
        {
            std::cerr << "error: " << e.what() << '\n';
            return kExitConfig;
        }
        catch (const IoError &e)
        {
            std::cerr << "error: " << e.what() << '\n';
            return kExitIo;
        }
        catch (const ParseError &e)
        {
            std::cerr << "error: " << e.what() << '\n';
            return kExitIo;
        }
        catch (const std::exception &e)
        {
            std::cerr << "error: " << e.what() << '\n';
            return 1;
        }
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"mmbeam: exhaustive vs compressive vs location-aided compressive mmWave beam alignment"};
    app.require_subcommand(1);

    Overrides run_opts;
    std::string format = "csv", out = "-", cdf_dir;
    int workers = 0;
    bool quiet = false;
    auto *run = app.add_subcommand("run", "Run the Monte-Carlo benchmark");
    add_sim_options(*run, run_opts);
    run->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    run->add_option("--out", out, "Report path, '-' for stdout");
    run->add_option("--cdf-dir", cdf_dir, "Also write per-strategy CDF files here");
    run->add_option("--workers", workers, "Worker threads, 0 = OpenMP default");
    run->add_flag("--quiet", quiet, "No summary on stderr");

    std::string cdf_in, cdf_out = ".";
    auto *cdf = app.add_subcommand("cdf", "Write per-strategy CDFs from a records file");
    cdf->add_option("--in", cdf_in, "Records file (CSV or JSON report)")->required();
    cdf->add_option("--out", cdf_out, "Output directory");

    Overrides demo_opts;
    int demo_trial = 0;
    auto *demo = app.add_subcommand("demo", "Run one trial and print every intermediate");
    add_sim_options(*demo, demo_opts);
    demo->add_option("--trial", demo_trial, "Trial index within the run seed")->check(CLI::NonNegativeNumber);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    if (run->parsed())
        return guarded([&] {
            const SimConfig cfg = resolve_config(run_opts);
            const auto records = run_monte_carlo(cfg, workers);
            emit_report(records, cfg, parse_report_format(format), out);
            if (!cdf_dir.empty())
                emit_cdf_files(records, cdf_dir);
            if (!quiet)
                print_summary(std::cerr, records, cfg);
        });

    if (cdf->parsed())
        return guarded([&] {
            const auto records = load_records(cdf_in);
            for (const auto &path : emit_cdf_files(records, cdf_out))
                std::cout << path.string() << '\n';
        });

    return guarded([&] {
        const SimConfig cfg = resolve_config(demo_opts);
        print_demo(make_scenario(cfg), demo_trial);
    });
}
