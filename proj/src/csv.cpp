// SPDX-License-Identifier: Apache-2.0
//
// dfrc-waveform: constant-modulus waveform synthesis for joint radar-communication
// Copyright (C) 2026 The dfrc-waveform Authors
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

#include "dfrc/csv.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace dfrc::io
{
    std::string format_number(double v)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), v);
        if (res.ec != std::errc())
            throw std::runtime_error("format_number: conversion failed");
        return std::string(buf, res.ptr);
    }

    std::string ser_csv(const sim::ExperimentResult &res)
    {
        std::string out = "snr_db,ser,n_symbols,ci_halfwidth,method\n";
        for (const auto &c : res.curves)
            for (const auto &p : c.points)
                out += format_number(p.snr_db) + ',' + format_number(p.value) + ',' + std::to_string(p.n_samples) +
                       ',' + format_number(p.ci_halfwidth) + ',' + sim::to_string(c.method) + '\n';
        return out;
    }

    std::string radar_csv(const sim::ExperimentResult &res)
    {
        std::string out = "snr_db,pd,method\n";
        for (const auto &c : res.curves)
            for (const auto &p : c.points)
                out += format_number(p.snr_db) + ',' + format_number(p.value) + ',' + sim::to_string(c.method) + '\n';
        return out;
    }

    std::string beampattern_csv(const sim::RadarResult &res)
    {
        std::string out = "angle_deg,power_watts,method\n";
        for (std::size_t m = 0; m < res.beampatterns.size(); ++m)
        {
            const auto &bp = res.beampatterns[m];
            const auto label = sim::to_string(res.detection.curves[m].method);
            for (std::size_t i = 0; i < bp.angles_deg.size(); ++i)
                out += format_number(bp.angles_deg[i]) + ',' + format_number(bp.power[i]) + ',' + label + '\n';
        }
        return out;
    }

    std::string sweep_csv(const sim::TradeoffResult &res)
    {
        std::string out = "rho,mean_mui,mean_orth_err\n";
        for (const auto &r : res.rows)
            out += format_number(r.rho) + ',' + format_number(r.mean_mui) + ',' + format_number(r.mean_orth_err) + '\n';
        return out;
    }

    std::string waveform_csv(const CMatrix &x)
    {
        std::string out;
        for (Eigen::Index i = 0; i < x.rows(); ++i)
        {
            for (Eigen::Index j = 0; j < x.cols(); ++j)
            {
                if (j > 0)
                    out += ',';
                out += '"' + format_number(x(i, j).real()) + ',' + format_number(x(i, j).imag()) + '"';
            }
            out += '\n';
        }
        return out;
    }

    std::string trace_csv(const std::vector<double> &trace)
    {
        std::string out = "iteration,objective\n";
        for (std::size_t i = 0; i < trace.size(); ++i)
            out += std::to_string(i) + ',' + format_number(trace[i]) + '\n';
        return out;
    }

    std::vector<std::vector<std::string>> parse_csv(const std::string &text)
    {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> row;
        std::string field;
        bool quoted = false, any = false;
        for (std::size_t i = 0; i < text.size(); ++i)
        {
            const char c = text[i];
            if (quoted)
            {
                if (c == '"')
                {
                    if (i + 1 < text.size() && text[i + 1] == '"')
                    {
                        field += '"';
                        ++i;
                    }
                    else
                        quoted = false;
                }
                else
                    field += c;
                continue;
            }
            switch (c)
            {
            case '"':
                quoted = true;
                any = true;
                break;
            case ',':
                row.push_back(std::move(field));
                field.clear();
                any = true;
                break;
            case '\r':
                break;
            case '\n':
                row.push_back(std::move(field));
                field.clear();
                rows.push_back(std::move(row));
                row.clear();
                any = false;
                break;
            default:
                field += c;
                any = true;
            }
        }
        if (quoted)
            throw std::runtime_error("parse_csv: unterminated quoted field");
        if (any)
        {
            row.push_back(std::move(field));
            rows.push_back(std::move(row));
        }
        return rows;
    }

    namespace
    {
        double parse_double(const std::string &s)
        {
            double v = 0.0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw std::runtime_error("not a number: '" + s + "'");
            return v;
        }
    }

    CMatrix parse_waveform_csv(const std::string &text)
    {
        const auto rows = parse_csv(text);
        if (rows.empty())
            throw std::runtime_error("parse_waveform_csv: empty input");
        CMatrix x(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (rows[i].size() != rows.front().size())
                throw std::runtime_error("parse_waveform_csv: ragged rows");
            for (std::size_t j = 0; j < rows[i].size(); ++j)
            {
                const auto &cell = rows[i][j];
                const auto comma = cell.find(',');
                if (comma == std::string::npos)
                    throw std::runtime_error("parse_waveform_csv: cell is not a re,im pair");
                x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    cplx(parse_double(cell.substr(0, comma)), parse_double(cell.substr(comma + 1)));
            }
        }
        return x;
    }
}
