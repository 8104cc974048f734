#include "manifest.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace trirep::cli {

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::string out;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        out += buf;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomic(const std::string& path, const std::string& bytes) {
    std::error_code ec;
    if (std::filesystem::exists(path, ec) && !std::filesystem::is_regular_file(path, ec)) {
        // devices and pipes are written in place
        std::ofstream out(path, std::ios::binary);
        if (!(out << bytes) || !out.flush()) throw std::invalid_argument("cannot write '" + path + "'");
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::invalid_argument("cannot write '" + tmp + "'");
        out << bytes;
        if (!out.flush()) throw std::runtime_error("write to '" + tmp + "' failed");
    }
    std::filesystem::rename(tmp, path);
}

Manifest::Manifest(std::string subcommand) : subcommand_(std::move(subcommand)) {}

void Manifest::input(const std::string& path) {
    inputs_.push_back({{"path", path}, {"sha256", sha256_hex(read_file(path))}});
}

void Manifest::output(const std::string& path, const std::string& bytes) {
    outputs_.push_back({{"path", path}, {"sha256", sha256_hex(bytes)}});
}

void Manifest::budgets(std::uint64_t codewords, std::size_t triangles) {
    budgets_ = {{"codewords", codewords}, {"triangles", triangles}};
}

void Manifest::error(const std::string& kind, const std::string& what) {
    error_kind_ = kind;
    error_ = what;
}

bool Manifest::all_pass() const {
    for (const auto& c : checks_) {
        if (!c.pass) return false;
    }
    return error_.empty();
}

std::string Manifest::dump() const {
    nlohmann::ordered_json j;
    j["subcommand"] = subcommand_;
    j["inputs"] = inputs_;
    if (!field_.empty()) j["field"] = field_;
    j["budgets"] = budgets_;
    j["label_namespace"] = "B<j> coordinates, p<i>m multisphere of part i, p<i>x subdivisions";
    j["outputs"] = outputs_;
    j["notes"] = notes_;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : checks_) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    if (!error_.empty()) j["error"] = {{"kind", error_kind_}, {"message", error_}};
    j["status"] = !error_.empty() ? "ERROR" : (all_pass() ? "PASS" : "FAIL");
    return j.dump(2) + "\n";
}

}  // namespace trirep::cli
