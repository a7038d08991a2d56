#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace gsim::cli {

// Bad flags or config values; carries every problem found.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::vector<std::string> problems_;
};

enum class Kind { text, integer, real, flag, sizes, reals };

struct KeySpec {
    std::string name;
    Kind kind;
    std::string fallback;  // empty means unset
    std::string help;
    bool required = false;
};

// Parameters of one command: defaults, then a key = value config file, then
// command-line flags. Values stay as text until read so the echo is exactly
// what was supplied.
class RunConfig {
public:
    RunConfig(std::string command, std::vector<KeySpec> schema);

    const std::string& command() const noexcept { return command_; }
    const std::vector<KeySpec>& schema() const noexcept { return schema_; }

    void load_file(const std::filesystem::path& path);
    void load_text(std::string_view text, std::string_view origin);
    void set(const std::string& key, std::string value);

    // Type-checks every value and required key. Problems accumulate; call
    // finish() to throw them all at once.
    void check_types();
    void require(bool ok, std::string problem);
    void finish() const;

    bool has(const std::string& key) const;
    std::string text(const std::string& key) const;
    std::int64_t integer(const std::string& key) const;
    std::uint64_t seed(const std::string& key) const;
    double real(const std::string& key) const;
    bool flag(const std::string& key) const;
    // Comma list of integers or a..b ranges; "all" expands to 1..all_upto.
    std::vector<std::size_t> sizes(const std::string& key, std::size_t all_upto = 0) const;
    std::vector<double> reals(const std::string& key) const;

    // Sorted key=value lines, omitting out and jobs.
    std::string echo() const;
    std::string hash() const;
    nlohmann::json to_json() const;

private:
    const KeySpec* spec(const std::string& key) const;

    std::string command_;
    std::vector<KeySpec> schema_;
    std::map<std::string, std::string> values_;
    std::vector<std::string> problems_;
};

}  // namespace gsim::cli
