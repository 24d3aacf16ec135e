// Copyright 2026 The lacc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lacc/experiments/output.h"

#include <openssl/sha.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace lacc {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size()) {
        throw std::invalid_argument("CsvTable: row has " + std::to_string(row.size()) + " cells, header has " +
                                    std::to_string(header_.size()));
    }
    rows_.push_back(std::move(row));
}

namespace {

bool parse_number(const std::string &s, double *out) {
    const char *end = s.data() + s.size();
    auto res = std::from_chars(s.data(), end, *out);
    return res.ec == std::errc() && res.ptr == end;
}

}  // namespace

void CsvTable::sort_by(const std::vector<size_t> &columns) {
    std::stable_sort(rows_.begin(), rows_.end(), [&](const auto &a, const auto &b) {
        for (size_t c : columns) {
            double x, y;
            if (parse_number(a[c], &x) && parse_number(b[c], &y)) {
                if (x != y) return x < y;
            } else if (a[c] != b[c]) {
                return a[c] < b[c];
            }
        }
        return false;
    });
}

const std::string &CsvTable::at(size_t row, const std::string &column) const {
    auto it = std::find(header_.begin(), header_.end(), column);
    if (it == header_.end()) throw std::out_of_range("CsvTable: no column " + column);
    return rows_.at(row)[(size_t)(it - header_.begin())];
}

double CsvTable::number(size_t row, const std::string &column) const {
    double v;
    const std::string &cell = at(row, column);
    if (!parse_number(cell, &v)) throw std::invalid_argument("CsvTable: '" + cell + "' is not a number");
    return v;
}

std::string CsvTable::to_csv() const {
    std::string out;
    auto line = [&](const std::vector<std::string> &cells) {
        for (size_t i = 0; i < cells.size(); i++) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(header_);
    for (const auto &r : rows_) line(r);
    return out;
}

ordered_json CsvTable::to_json() const {
    ordered_json arr = ordered_json::array();
    for (const auto &r : rows_) {
        ordered_json obj;
        for (size_t i = 0; i < header_.size(); i++) {
            double v;
            if (parse_number(r[i], &v)) {
                obj[header_[i]] = v;
            } else {
                obj[header_[i]] = r[i];
            }
        }
        arr.push_back(obj);
    }
    return arr;
}

std::string git_blob_sha1(const std::string &content) {
    std::string prefixed = "blob " + std::to_string(content.size());
    prefixed.push_back('\0');
    prefixed += content;
    unsigned char digest[SHA_DIGEST_LENGTH];
    SHA1(reinterpret_cast<const unsigned char *>(prefixed.data()), prefixed.size(), digest);
    static const char *hex = "0123456789abcdef";
    std::string out;
    for (unsigned char b : digest) {
        out += hex[b >> 4];
        out += hex[b & 15];
    }
    return out;
}

namespace {

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << content;
    if (!f) throw std::runtime_error("failed writing " + path.string());
}

std::filesystem::path write_with_manifest(const std::filesystem::path &dir, const std::string &name,
                                          const std::string &ext, const std::string &content,
                                          const ordered_json &info) {
    std::filesystem::create_directories(dir);
    std::filesystem::path data = dir / (name + "." + ext);
    write_file(data, content);
    ordered_json manifest;
    manifest["name"] = name;
    manifest["file"] = data.filename().string();
    manifest["sha1"] = git_blob_sha1(content);
    manifest["info"] = info;
    write_file(dir / (name + ".manifest.json"), manifest.dump(2) + "\n");
    return data;
}

}  // namespace

std::filesystem::path write_table(const std::filesystem::path &dir, const std::string &name, const CsvTable &table,
                                  const ordered_json &info, bool json) {
    if (json) return write_with_manifest(dir, name, "json", table.to_json().dump(2) + "\n", info);
    return write_with_manifest(dir, name, "csv", table.to_csv(), info);
}

std::filesystem::path write_document(const std::filesystem::path &dir, const std::string &name,
                                     const ordered_json &doc, const ordered_json &info) {
    return write_with_manifest(dir, name, "json", doc.dump(2) + "\n", info);
}

}  // namespace lacc
