#include <memory>

#include "cli_common.hpp"
#include "fuchscode/unitsgen.hpp"

namespace fxc::cli {

namespace {

struct Opts {
    long p = 3;
    long m = 0;
    long k1 = 0;
    long k2 = 0;
    std::string out;
    std::uint64_t seed = 0; // accepted globally, unused here
    std::string config;
};

void run(const Opts& o) {
    Sink sink(o.out);
    std::ostream& os = sink.out();
    if (o.m == 0) {
        PellSolution u = fundamental_unit(o.p);
        os << "p,x,y\n" << o.p << ',' << u.x.str() << ',' << u.y.str() << '\n';
        return;
    }
    QuaternionTuple t = phi_p(o.p, o.m, o.k1, o.k2);
    os << "p,m,k1,k2,x,y,z,t\n"
       << o.p << ',' << o.m << ',' << o.k1 << ',' << o.k2 << ',' << t.x.str() << ','
       << t.y.str() << ',' << t.z.str() << ',' << t.t.str() << '\n';
}

} // namespace

void setup_units(CLI::App& app) {
    auto opts = std::make_shared<Opts>();
    CLI::App* sub = app.add_subcommand(
        "units", "Pell fundamental units and the norm-1 quaternion parametrization");
    sub->add_option("--p", opts->p, "prime congruent to 3 mod 4");
    sub->add_option("--m", opts->m, "unit exponent; omit to print the fundamental unit");
    sub->add_option("--k1", opts->k1, "first twist exponent");
    sub->add_option("--k2", opts->k2, "second twist exponent");
    sub->add_option("--out", opts->out, "output path (stdout when omitted)");
    sub->add_option("--seed", opts->seed, "RNG seed (global flag; this subcommand is deterministic)");
    sub->add_option("--config", opts->config,
                    "flat key = value config file; explicit flags win");
    sub->callback([opts] { run(*opts); });
}

} // namespace fxc::cli
