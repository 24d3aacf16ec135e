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

#ifndef LACC_EXPERIMENTS_OUTPUT_H
#define LACC_EXPERIMENTS_OUTPUT_H

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lacc {

using ordered_json = nlohmann::ordered_json;

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

class CsvTable {
   public:
    explicit CsvTable(std::vector<std::string> header);

    const std::vector<std::string> &header() const {
        return header_;
    }
    const std::vector<std::vector<std::string>> &rows() const {
        return rows_;
    }
    size_t size() const {
        return rows_.size();
    }

    /// Appends a row; throws std::invalid_argument on a column-count mismatch.
    void add_row(std::vector<std::string> row);
    /// Sorts rows lexicographically by the given column indices, comparing
    /// numerically when both cells parse as numbers.
    void sort_by(const std::vector<size_t> &columns);
    /// Cell lookup by column name.
    const std::string &at(size_t row, const std::string &column) const;
    double number(size_t row, const std::string &column) const;

    std::string to_csv() const;
    ordered_json to_json() const;

   private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Git blob hash: sha1("blob <size>\0" + content), lowercase hex.
std::string git_blob_sha1(const std::string &content);

/// Writes `<dir>/<name>.<csv|json>` and `<dir>/<name>.manifest.json`, creating
/// `dir` if needed. The manifest holds `info`, the output file name and its
/// content hash. Returns the path of the data file.
std::filesystem::path write_table(const std::filesystem::path &dir, const std::string &name, const CsvTable &table,
                                  const ordered_json &info, bool json = false);

/// Writes a JSON document with the same manifest convention.
std::filesystem::path write_document(const std::filesystem::path &dir, const std::string &name,
                                     const ordered_json &doc, const ordered_json &info);

}  // namespace lacc

#endif
