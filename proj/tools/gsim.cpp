#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "gsim/error.hpp"

namespace {

enum Exit { ok = 0, failure = 1, usage = 2, parse = 3, guard = 4 };

std::string flag_name(std::string key) {
    for (char& c : key)
        if (c == '_') c = '-';
    return "--" + key;
}

struct Bound {
    const gsim::cli::Command* command;
    CLI::App* app;
    std::string config;
    std::map<std::string, std::string> text;
    std::map<std::string, bool> flags;
};

}  // namespace

int main(int argc, char** argv) {
    using namespace gsim::cli;
    CLI::App app{"gsim: eigendecomposition-based spatial photonic Ising machine simulator"};
    app.require_subcommand(1);
    CLI::App* experiment = app.add_subcommand("experiment", "run a study and write report files");
    experiment->require_subcommand(1);

    std::vector<std::unique_ptr<Bound>> bound;
    for (const Command& c : commands()) {
        auto b = std::make_unique<Bound>();
        b->command = &c;
        const bool nested = c.path.rfind("experiment ", 0) == 0;
        const std::string name = nested ? c.path.substr(11) : c.path;
        b->app = (nested ? experiment : &app)->add_subcommand(name, c.help);
        b->app->add_option("--config", b->config, "key = value file; flags override it");
        for (const KeySpec& k : c.schema) {
            std::string help = k.help;
            if (!k.fallback.empty()) help += " [" + k.fallback + "]";
            if (k.kind == Kind::flag)
                b->app->add_flag(flag_name(k.name), b->flags[k.name], help);
            else
                b->app->add_option(flag_name(k.name), b->text[k.name], help);
        }
        bound.push_back(std::move(b));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    for (const auto& b : bound) {
        if (!b->app->parsed()) continue;
        RunConfig cfg(b->command->path, b->command->schema);
        try {
            if (!b->config.empty()) cfg.load_file(b->config);
            for (const auto& [key, value] : b->text)
                if (b->app->count(flag_name(key)) > 0) cfg.set(key, value);
            for (const auto& [key, value] : b->flags)
                if (b->app->count(flag_name(key)) > 0) cfg.set(key, value ? "true" : "false");
            cfg.check_types();
            b->command->run(cfg, std::cout);
            return ok;
        } catch (const UsageError& e) {
            for (const auto& p : e.problems()) std::cerr << "error: " << p << "\n";
            return usage;
        } catch (const gsim::ParseError& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return parse;
        } catch (const gsim::GuardError& e) {
            std::cerr << "guard: " << e.what() << "\n";
            return guard;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return failure;
        }
    }
    return usage;
}
