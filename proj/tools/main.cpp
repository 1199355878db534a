#include <algorithm>
#include <cctype>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cli_common.hpp"

namespace {

// --seed, --out and --config are accepted on either side of the subcommand
// name; occurrences in front of it are moved behind it so every subcommand
// parses them with its own option set.
std::vector<std::string> hoist_global_flags(int argc, char** argv) {
    const std::vector<std::string> subs = {"construct", "decode", "sweep",
                                           "complexity", "units", "catalog"};
    std::vector<std::string> args(argv + 1, argv + argc);
    auto is_sub = [&](const std::string& a) {
        return std::find(subs.begin(), subs.end(), a) != subs.end();
    };
    auto is_global = [](const std::string& a) {
        return a == "--seed" || a == "--out" || a == "--config" ||
               a.rfind("--seed=", 0) == 0 || a.rfind("--out=", 0) == 0 ||
               a.rfind("--config=", 0) == 0;
    };

    std::vector<std::string> head, hoisted;
    std::size_t i = 0;
    for (; i < args.size() && !is_sub(args[i]); ++i) {
        if (is_global(args[i])) {
            hoisted.push_back(args[i]);
            bool pair = args[i].find('=') == std::string::npos && i + 1 < args.size();
            if (pair) hoisted.push_back(args[++i]);
        } else {
            head.push_back(args[i]);
        }
    }
    if (i == args.size()) return args; // no subcommand; let the parser complain

    std::vector<std::string> out = std::move(head);
    out.push_back(args[i]);
    out.insert(out.end(), hoisted.begin(), hoisted.end());
    out.insert(out.end(), args.begin() + static_cast<long>(i) + 1, args.end());
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Flat key = value config: each key stands for the matching long flag of the
// invoked subcommand. Explicit flags win, so config pairs are appended only
// when the flag is absent; unknown keys then fail as unknown flags.
void apply_config_file(std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty()) return;

    std::ifstream in(path);
    if (!in) throw fxc::ParseError("cannot read config file: " + path);

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw fxc::ParseError("config line " + std::to_string(lineno) +
                                  " is not key = value: " + t);
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty() || key == "config")
            throw fxc::ParseError("bad config key on line " + std::to_string(lineno));

        std::string flag = "--" + key;
        bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (given) continue;
        args.push_back(flag);
        args.push_back(value);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuchsian constellation toolkit: construct nonuniform codes from "
                 "quaternion unit groups, decode by point reduction, simulate AWGN"};
    app.require_subcommand(1);
    fxc::cli::setup_construct(app);
    fxc::cli::setup_decode(app);
    fxc::cli::setup_sweep(app);
    fxc::cli::setup_complexity(app);
    fxc::cli::setup_units(app);
    fxc::cli::setup_catalog(app);

    try {
        std::vector<std::string> args = hoist_global_flags(argc, argv);
        apply_config_file(args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const fxc::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const fxc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
