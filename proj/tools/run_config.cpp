#include "run_config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gsim/report.hpp"

namespace gsim::cli {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : "\n") + s;
    return out;
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    T value{};
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) return std::nullopt;
    return value;
}

std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::optional<std::vector<std::size_t>> parse_sizes(std::string_view s, std::size_t all_upto) {
    std::vector<std::size_t> out;
    if (trim(s) == "all") {
        for (std::size_t k = 1; k <= all_upto; ++k) out.push_back(k);
        return out;
    }
    for (std::string_view item : split(s)) {
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            const auto v = parse_number<std::size_t>(item);
            if (!v) return std::nullopt;
            out.push_back(*v);
            continue;
        }
        const auto lo = parse_number<std::size_t>(item.substr(0, dots));
        const auto hi = parse_number<std::size_t>(item.substr(dots + 2));
        if (!lo || !hi || *lo > *hi) return std::nullopt;
        for (std::size_t k = *lo; k <= *hi; ++k) out.push_back(k);
    }
    return out;
}

std::optional<std::vector<double>> parse_reals(std::string_view s) {
    std::vector<double> out;
    for (std::string_view item : split(s)) {
        const auto v = parse_number<double>(item);
        if (!v) return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

std::optional<bool> parse_flag(std::string_view s) {
    s = trim(s);
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    return std::nullopt;
}

}  // namespace

UsageError::UsageError(std::vector<std::string> problems)
    : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

RunConfig::RunConfig(std::string command, std::vector<KeySpec> schema)
    : command_(std::move(command)), schema_(std::move(schema)) {
    for (const KeySpec& k : schema_)
        if (!k.fallback.empty()) values_[k.name] = k.fallback;
}

const KeySpec* RunConfig::spec(const std::string& key) const {
    for (const KeySpec& k : schema_)
        if (k.name == key) return &k;
    return nullptr;
}

void RunConfig::load_file(const std::filesystem::path& path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::exception& e) {
        problems_.push_back("config: cannot read " + path.string());
        return;
    }
    load_text(text, path.string());
}

void RunConfig::load_text(std::string_view text, std::string_view origin) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = line;
        if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = trim(body);
        if (body.empty() || body.front() == '[') continue;
        const std::string where = std::string(origin) + ":" + std::to_string(line_no) + ": ";
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            problems_.push_back(where + "expected key = value");
            continue;
        }
        std::string key(trim(body.substr(0, eq)));
        std::replace(key.begin(), key.end(), '-', '_');
        std::string_view value = trim(body.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        if (!spec(key)) {
            problems_.push_back(where + "unknown key '" + key + "' for " + command_);
            continue;
        }
        values_[key] = std::string(value);
    }
}

void RunConfig::set(const std::string& key, std::string value) {
    if (!spec(key)) {
        problems_.push_back("unknown key '" + key + "' for " + command_);
        return;
    }
    values_[key] = std::move(value);
}

void RunConfig::check_types() {
    for (const KeySpec& k : schema_) {
        const auto it = values_.find(k.name);
        if (it == values_.end() || it->second.empty()) {
            if (k.required) problems_.push_back(k.name + ": required");
            continue;
        }
        const std::string& v = it->second;
        bool ok = true;
        switch (k.kind) {
        case Kind::text: break;
        case Kind::integer: ok = parse_number<std::int64_t>(v).has_value() || parse_number<std::uint64_t>(v).has_value(); break;
        case Kind::real: ok = parse_number<double>(v).has_value(); break;
        case Kind::flag: ok = parse_flag(v).has_value(); break;
        case Kind::sizes: ok = parse_sizes(v, 0).has_value(); break;
        case Kind::reals: ok = parse_reals(v).has_value(); break;
        }
        if (!ok) problems_.push_back(k.name + ": cannot parse '" + v + "'");
    }
}

void RunConfig::require(bool ok, std::string problem) {
    if (!ok) problems_.push_back(std::move(problem));
}

void RunConfig::finish() const {
    if (!problems_.empty()) throw UsageError(problems_);
}

bool RunConfig::has(const std::string& key) const {
    const auto it = values_.find(key);
    return it != values_.end() && !it->second.empty();
}

std::string RunConfig::text(const std::string& key) const {
    const auto it = values_.find(key);
    return it == values_.end() ? std::string() : it->second;
}

std::int64_t RunConfig::integer(const std::string& key) const {
    return parse_number<std::int64_t>(text(key)).value_or(0);
}

std::uint64_t RunConfig::seed(const std::string& key) const {
    return parse_number<std::uint64_t>(text(key)).value_or(0);
}

double RunConfig::real(const std::string& key) const { return parse_number<double>(text(key)).value_or(0.0); }

bool RunConfig::flag(const std::string& key) const { return has(key) && parse_flag(text(key)).value_or(false); }

std::vector<std::size_t> RunConfig::sizes(const std::string& key, std::size_t all_upto) const {
    return parse_sizes(text(key), all_upto).value_or(std::vector<std::size_t>{});
}

std::vector<double> RunConfig::reals(const std::string& key) const {
    return parse_reals(text(key)).value_or(std::vector<double>{});
}

std::string RunConfig::echo() const {
    std::string out = "command=" + command_ + "\n";
    for (const auto& [k, v] : values_) {
        if (k == "out" || k == "jobs") continue;
        out += k + "=" + v + "\n";
    }
    return out;
}

std::string RunConfig::hash() const { return git_blob_hash(echo()); }

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : values_)
        if (k != "out" && k != "jobs") j[k] = v;
    return j;
}

}  // namespace gsim::cli
