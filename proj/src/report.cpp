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

#include "mmbeam/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mmbeam
{
    namespace
    {
        std::string format_double(double v)
        {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof(buf), v);
            return std::string(buf, res.ptr);
        }

        std::string csv_field(const std::string &s)
        {
            if (s.find_first_of(",\"\r\n") == std::string::npos)
                return s;
            std::string out = "\"";
            for (char c : s)
            {
                if (c == '"')
                    out += '"';
                out += c;
            }
            return out + "\"";
        }

        // One RFC-4180 record; returns false at end of input.
        bool read_csv_row(std::istream &is, std::vector<std::string> &fields)
        {
            fields.clear();
            if (is.peek() == std::char_traits<char>::eof())
                return false;
            std::string field;
            bool quoted = false;
            for (int ch = is.get(); ch != std::char_traits<char>::eof(); ch = is.get())
            {
                const char c = static_cast<char>(ch);
                if (quoted)
                {
                    if (c == '"')
                    {
                        if (is.peek() == '"')
                        {
                            field += '"';
                            is.get();
                        }
                        else
                            quoted = false;
                    }
                    else
                        field += c;
                }
                else if (c == '"')
                    quoted = true;
                else if (c == ',')
                {
                    fields.push_back(std::move(field));
                    field.clear();
                }
                else if (c == '\n')
                    break;
                else if (c != '\r')
                    field += c;
            }
            if (quoted)
                throw ParseError("csv: unterminated quoted field");
            fields.push_back(std::move(field));
            return true;
        }

        template <typename T>
        T parse_number(const std::string &s, const char *what)
        {
            T value{};
            const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
            if (res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw ParseError(std::string("csv: bad ") + what + " '" + s + "'");
            return value;
        }

        const char *kHeader[] = {"trial", "strategy", "gain", "switch_count", "fallback_used", "seed"};
    }

    ReportFormat parse_report_format(const std::string &s)
    {
        if (s == "csv")
            return ReportFormat::Csv;
        if (s == "json")
            return ReportFormat::Json;
        throw ConfigError({"format: unknown value '" + s + "'"});
    }

    void write_csv(std::ostream &os, std::span<const TrialRecord> records)
    {
        os << "trial,strategy,gain,switch_count,fallback_used,seed\n";
        for (const auto &r : records)
            os << r.trial << ',' << csv_field(to_string(r.strategy)) << ',' << format_double(r.gain) << ','
               << r.switch_count << ',' << (r.fallback_used ? 1 : 0) << ',' << r.seed << '\n';
    }

    std::vector<TrialRecord> read_csv(std::istream &is)
    {
        std::vector<std::string> fields;
        if (!read_csv_row(is, fields))
            throw ParseError("csv: missing header");
        if (fields.size() != std::size(kHeader) || !std::equal(fields.begin(), fields.end(), std::begin(kHeader)))
            throw ParseError("csv: unexpected header");

        std::vector<TrialRecord> out;
        while (read_csv_row(is, fields))
        {
            if (fields.size() == 1 && fields[0].empty())
                continue;
            if (fields.size() != std::size(kHeader))
                throw ParseError("csv: expected 6 fields, got " + std::to_string(fields.size()));
            TrialRecord r;
            r.trial = parse_number<int>(fields[0], "trial");
            try
            {
                r.strategy = parse_strategy(fields[1]);
            }
            catch (const std::invalid_argument &e)
            {
                throw ParseError(std::string("csv: ") + e.what());
            }
            r.gain = parse_number<double>(fields[2], "gain");
            r.switch_count = parse_number<int>(fields[3], "switch_count");
            r.fallback_used = parse_number<int>(fields[4], "fallback_used") != 0;
            r.seed = parse_number<std::uint64_t>(fields[5], "seed");
            out.push_back(r);
        }
        return out;
    }

    nlohmann::json config_to_json(const SimConfig &c)
    {
        return {{"n_bs", c.n_bs},
                {"n_ms", c.n_ms},
                {"element_spacing", c.element_spacing},
                {"grid_size", c.grid_size},
                {"beam_count_es", c.beam_count_es},
                {"beamwidth_deg", c.beamwidth_deg},
                {"num_paths", c.num_paths},
                {"rician_k", c.rician_k},
                {"rician_mode", to_string(c.rician_mode)},
                {"nlos_profile", to_string(c.nlos_profile)},
                {"path_loss_model", to_string(c.path_loss_model)},
                {"path_loss_exponent", c.path_loss_exponent},
                {"max_loc_error_m", c.max_loc_error_m},
                {"loc_error_model", to_string(c.loc_error_model)},
                {"area_side_m", c.area_side_m},
                {"min_separation_m", c.min_separation_m},
                {"snr_db", c.snr_db},
                {"tx_power", c.tx_power},
                {"omp_residual_tol", c.omp_residual_tol},
                {"cs_random_budget", c.cs_random_budget},
                {"cs_localized_budget", c.cs_localized_budget},
                {"switch_convention", to_string(c.switch_convention)},
                {"trials", c.trials},
                {"seed", c.seed},
                {"carrier_hz", c.carrier_hz},
                {"bandwidth_hz", c.bandwidth_hz}};
    }

    SimConfig config_from_json(const nlohmann::json &j)
    {
        SimConfig c;
        try
        {
            c.n_bs = j.at("n_bs").get<int>();
            c.n_ms = j.at("n_ms").get<int>();
            c.element_spacing = j.at("element_spacing").get<double>();
            c.grid_size = j.at("grid_size").get<int>();
            c.beam_count_es = j.at("beam_count_es").get<int>();
            c.beamwidth_deg = j.at("beamwidth_deg").get<double>();
            c.num_paths = j.at("num_paths").get<int>();
            c.rician_k = j.at("rician_k").get<double>();
            c.rician_mode = parse_rician_mode(j.at("rician_mode").get<std::string>());
            c.nlos_profile = parse_nlos_profile(j.at("nlos_profile").get<std::string>());
            c.path_loss_model = parse_path_loss_model(j.at("path_loss_model").get<std::string>());
            c.path_loss_exponent = j.at("path_loss_exponent").get<double>();
            c.max_loc_error_m = j.at("max_loc_error_m").get<double>();
            c.loc_error_model = parse_error_model(j.at("loc_error_model").get<std::string>());
            c.area_side_m = j.at("area_side_m").get<double>();
            c.min_separation_m = j.at("min_separation_m").get<double>();
            c.snr_db = j.at("snr_db").get<double>();
            c.tx_power = j.at("tx_power").get<double>();
            c.omp_residual_tol = j.at("omp_residual_tol").get<double>();
            c.cs_random_budget = j.at("cs_random_budget").get<int>();
            c.cs_localized_budget = j.at("cs_localized_budget").get<int>();
            c.switch_convention = parse_switch_convention(j.at("switch_convention").get<std::string>());
            c.trials = j.at("trials").get<int>();
            c.seed = j.at("seed").get<std::uint64_t>();
            c.carrier_hz = j.at("carrier_hz").get<double>();
            c.bandwidth_hz = j.at("bandwidth_hz").get<double>();
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ParseError(std::string("json config: ") + e.what());
        }
        return c;
    }

    nlohmann::json report_json(std::span<const TrialRecord> records, const SimConfig &config)
    {
        nlohmann::json j;
        j["config"] = config_to_json(config);
        j["config"]["version"] = kVersion;

        auto &recs = j["records"] = nlohmann::json::array();
        for (const auto &r : records)
            recs.push_back({{"trial", r.trial},
                            {"strategy", to_string(r.strategy)},
                            {"gain", r.gain},
                            {"switch_count", r.switch_count},
                            {"fallback_used", r.fallback_used},
                            {"seed", r.seed}});

        auto &summary = j["summary"] = nlohmann::json::object();
        for (const auto &[strategy, s] : summarize(records))
            summary[to_string(strategy)] = {{"trials", s.count},
                                            {"mean_gain", s.mean_gain},
                                            {"median_gain", s.median_gain},
                                            {"mean_switch_count", s.mean_switch_count},
                                            {"fallbacks", s.fallbacks}};
        return j;
    }

    std::vector<TrialRecord> records_from_json(const nlohmann::json &j)
    {
        std::vector<TrialRecord> out;
        try
        {
            for (const auto &r : j.at("records"))
                out.push_back({r.at("trial").get<int>(), parse_strategy(r.at("strategy").get<std::string>()),
                               r.at("gain").get<double>(), r.at("switch_count").get<int>(),
                               r.at("fallback_used").get<bool>(), r.at("seed").get<std::uint64_t>()});
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ParseError(std::string("json records: ") + e.what());
        }
        catch (const std::invalid_argument &e)
        {
            throw ParseError(std::string("json records: ") + e.what());
        }
        return out;
    }

    void emit_report(std::span<const TrialRecord> records, const SimConfig &config, ReportFormat format,
                     const std::string &path)
    {
        auto write = [&](std::ostream &os) {
            if (format == ReportFormat::Csv)
                write_csv(os, records);
            else
                os << report_json(records, config).dump(2) << '\n';
        };

        if (path == "-")
        {
            write(std::cout);
            return;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os)
            throw IoError("cannot open '" + path + "' for writing");
        write(os);
        os.flush();
        if (!os)
            throw IoError("failed writing '" + path + "'");
    }

    void write_cdf(std::ostream &os, const CdfSeries &cdf)
    {
        os << "value,probability\n";
        for (std::size_t i = 0; i < cdf.values.size(); ++i)
            os << format_double(cdf.values[i]) << ',' << format_double(cdf.probabilities[i]) << '\n';
    }

    std::vector<std::filesystem::path> emit_cdf_files(std::span<const TrialRecord> records,
                                                      const std::filesystem::path &dir)
    {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());

        std::vector<std::filesystem::path> written;
        for (auto strategy : {Strategy::ExhaustiveSearch, Strategy::CsRandom, Strategy::CsLocalized})
        {
            const auto gains = gains_of(records, strategy);
            if (gains.empty())
                continue;
            const auto path = dir / ("cdf_" + to_string(strategy) + ".csv");
            std::ofstream os(path, std::ios::binary);
            if (!os)
                throw IoError("cannot open '" + path.string() + "' for writing");
            write_cdf(os, empirical_cdf(gains));
            if (!os)
                throw IoError("failed writing '" + path.string() + "'");
            written.push_back(path);
        }
        return written;
    }

    std::vector<TrialRecord> load_records(const std::string &path)
    {
        std::ifstream is(path, std::ios::binary);
        if (!is)
            throw IoError("cannot open '" + path + "' for reading");
        if (is.peek() == '{')
        {
            nlohmann::json j;
            try
            {
                is >> j;
            }
            catch (const nlohmann::json::exception &e)
            {
                throw ParseError("'" + path + "': " + e.what());
            }
            return records_from_json(j);
        }
        return read_csv(is);
    }
}
