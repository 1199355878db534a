#include <memory>

#include <json.hpp>

#include "cli_common.hpp"

namespace fxc::cli {

namespace {

struct Opts {
    int group = 6;
    std::string out;
    std::uint64_t seed = 0; // accepted globally, unused here
    std::string config;
};

void run(const Opts& o) {
    const Group& g = catalog(o.group);
    nlohmann::json j;
    j["discriminant"] = g.discriminant;
    j["algebra"] = {{"a", g.alg_a}, {"b", g.alg_b}};
    j["tau"] = {g.tau.real(), g.tau.imag()};
    j["M"] = g.M;
    j["printed_side_data"] = g.printed_side_data;

    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t i = 0; i < g.generators.size(); ++i)
        gens.push_back({{"name", "g" + std::to_string(i + 1)}, {"matrix", g.generators[i].str()}});
    j["generators"] = gens;

    nlohmann::json sides = nlohmann::json::array();
    for (const Side& s : g.sides)
        sides.push_back({{"label", s.label},
                         {"kind", s.kind == Side::Kind::CircleExt ? "ext" : "int"},
                         {"center", s.center},
                         {"radius", s.radius},
                         {"pair", s.pair}});
    j["sides"] = sides;

    nlohmann::json rels = nlohmann::json::array();
    for (const Relation& r : g.relations) rels.push_back({{"name", r.name}, {"word", r.word}});
    j["relations"] = rels;

    Sink sink(o.out);
    sink.out() << j.dump(2) << '\n';
}

} // namespace

void setup_catalog(CLI::App& app) {
    auto opts = std::make_shared<Opts>();
    CLI::App* sub = app.add_subcommand("catalog", "Dump a packaged group as JSON");
    sub->add_option("--group", opts->group, "group discriminant (6, 10, or 15)")
        ->check(CLI::IsMember({6, 10, 15}));
    sub->add_option("--out", opts->out, "output path (stdout when omitted)");
    sub->add_option("--seed", opts->seed, "RNG seed (global flag; this subcommand is deterministic)");
    sub->add_option("--config", opts->config,
                    "flat key = value config file; explicit flags win");
    sub->callback([opts] { run(*opts); });
}

} // namespace fxc::cli
