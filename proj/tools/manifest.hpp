// Run manifests and atomic output files for the trirep command line.

#ifndef TRIREP_TOOLS_MANIFEST_HPP
#define TRIREP_TOOLS_MANIFEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "trirep/representation.hpp"

namespace trirep::cli {

std::string sha256_hex(const std::string& bytes);
std::string read_file(const std::string& path);

/// Writes to `<path>.tmp` and renames over `path`.
void write_atomic(const std::string& path, const std::string& bytes);

class Manifest {
public:
    explicit Manifest(std::string subcommand);

    void input(const std::string& path);
    void output(const std::string& path, const std::string& bytes);
    void field(const std::string& f) { field_ = f; }
    void budgets(std::uint64_t codewords, std::size_t triangles);
    void note(const std::string& text) { notes_.push_back(text); }
    void check(const CheckResult& c) { checks_.push_back(c); }
    void error(const std::string& kind, const std::string& what);

    bool all_pass() const;
    const std::vector<CheckResult>& checks() const { return checks_; }

    std::string dump() const;

private:
    std::string subcommand_;
    std::string field_;
    nlohmann::ordered_json inputs_ = nlohmann::ordered_json::array();
    nlohmann::ordered_json outputs_ = nlohmann::ordered_json::array();
    nlohmann::ordered_json budgets_ = nlohmann::ordered_json::object();
    std::vector<std::string> notes_;
    std::vector<CheckResult> checks_;
    std::string error_kind_;
    std::string error_;
};

}  // namespace trirep::cli

#endif
