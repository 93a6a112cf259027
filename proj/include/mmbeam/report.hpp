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

#ifndef MMBEAM_REPORT_HPP
#define MMBEAM_REPORT_HPP

#include "mmbeam/config.hpp"
#include "mmbeam/harness.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace mmbeam
{
    inline constexpr const char *kVersion = "1.0.0";

    enum class ReportFormat
    {
        Csv,
        Json
    };

    ReportFormat parse_report_format(const std::string &s);

    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // CSV with header trial,strategy,gain,switch_count,fallback_used,seed. Gains are written in
    // shortest round-trip form, so parsing the output reproduces the records exactly.
    void write_csv(std::ostream &os, std::span<const TrialRecord> records);
    std::vector<TrialRecord> read_csv(std::istream &is);

    nlohmann::json config_to_json(const SimConfig &config);
    SimConfig config_from_json(const nlohmann::json &j);

    // {"config": {..., "version": ...}, "records": [...], "summary": {...}}
    nlohmann::json report_json(std::span<const TrialRecord> records, const SimConfig &config);
    std::vector<TrialRecord> records_from_json(const nlohmann::json &j);

    // Writes the report to `path`, or to stdout when path is "-". Throws IoError naming the path.
    void emit_report(std::span<const TrialRecord> records, const SimConfig &config, ReportFormat format,
                     const std::string &path);

    // Two-column value,probability CSV of one CDF.
    void write_cdf(std::ostream &os, const CdfSeries &cdf);

    // One cdf_<Strategy>.csv per strategy present in the records; returns the written paths.
    std::vector<std::filesystem::path> emit_cdf_files(std::span<const TrialRecord> records,
                                                      const std::filesystem::path &dir);

    std::vector<TrialRecord> load_records(const std::string &path);
}

#endif
