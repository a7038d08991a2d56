#include <charconv>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gsim/error.hpp"
#include "gsim/graph.hpp"
#include "gsim/report.hpp"

namespace gsim {

namespace {

// Whitespace tokenizer over one line.
class Tokens {
public:
    explicit Tokens(std::string_view line) : rest_(line) {}

    std::string_view next() {
        std::size_t b = rest_.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) {
            rest_ = {};
            return {};
        }
        rest_.remove_prefix(b);
        std::size_t e = rest_.find_first_of(" \t\r");
        std::string_view tok = rest_.substr(0, e);
        rest_.remove_prefix(e == std::string_view::npos ? rest_.size() : e);
        return tok;
    }

private:
    std::string_view rest_;
};

template <class T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
    T value{};
    if (tok.empty()) throw ParseError(std::string("missing ") + what, line);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(std::string("bad ") + what + " '" + std::string(tok) + "'", line);
    }
    return value;
}

}  // namespace

GraphFormat graph_format_for(const std::filesystem::path& path) {
    return path.extension() == ".json" ? GraphFormat::json : GraphFormat::rudy;
}

std::string to_rudy(const WeightedGraph& g) {
    std::string out = std::to_string(g.n()) + ' ' + std::to_string(g.edge_count()) + '\n';
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u + 1) + ' ' + std::to_string(e.v + 1) + ' ' + format_double(e.w) + '\n';
    }
    return out;
}

WeightedGraph parse_rudy(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;

    while (!text.empty()) {
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;

        Tokens tok(line);
        std::string_view first = tok.next();
        if (first.empty() || first.front() == '#') continue;
        if (!have_header) {
            n = parse_number<std::size_t>(first, line_no, "vertex count");
            m = parse_number<std::size_t>(tok.next(), line_no, "edge count");
            if (n == 0) throw ParseError("vertex count must be positive", line_no);
            have_header = true;
        } else {
            const auto u = parse_number<std::size_t>(first, line_no, "vertex index");
            const auto v = parse_number<std::size_t>(tok.next(), line_no, "vertex index");
            const auto w = parse_number<double>(tok.next(), line_no, "weight");
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError("vertex index out of range 1.." + std::to_string(n), line_no);
            }
            if (u == v) throw ParseError("self-loop", line_no);
            edges.push_back({u - 1, v - 1, w});
            edge_lines.push_back(line_no);
        }
        if (!tok.next().empty()) throw ParseError("trailing tokens", line_no);
    }
    if (!have_header) throw ParseError("missing header");
    if (edges.size() != m) {
        throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    try {
        return WeightedGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string to_json(const WeightedGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.w});
    nlohmann::json doc = {{"n", g.n()}, {"edges", std::move(edges)}};
    return doc.dump() + '\n';
}

WeightedGraph parse_graph_json(std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        const auto n = doc.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& item : doc.at("edges")) {
            if (!item.is_array() || item.size() != 3) throw ParseError("edge must be [u, v, w]");
            edges.push_back({item[0].get<std::size_t>(), item[1].get<std::size_t>(), item[2].get<double>()});
        }
        return WeightedGraph(n, std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

WeightedGraph read_graph(const std::filesystem::path& path, GraphFormat format) {
    const std::string text = read_text_file(path);
    return format == GraphFormat::json ? parse_graph_json(text) : parse_rudy(text);
}

void write_graph(const WeightedGraph& g, const std::filesystem::path& path, GraphFormat format) {
    write_text_file(path, format == GraphFormat::json ? to_json(g) : to_rudy(g));
}

}  // namespace gsim
