#include <memory>

#include "cli_common.hpp"
#include "fuchscode/codebook.hpp"

namespace fxc::cli {

namespace {

struct Opts {
    int group = 6;
    std::size_t q = 16;
    std::string tau;
    int qam = 0;
    std::string out;
    std::uint64_t seed = 0; // accepted globally, unused here
    std::string config;
};

void run(const Opts& o) {
    Codebook c;
    if (o.qam > 0) {
        c = qam_codebook(o.qam);
    } else {
        const Group& g = catalog(o.group);
        std::optional<Complex> tau;
        if (!o.tau.empty()) tau = parse_tau(o.tau);
        c = nuf_codebook(g, o.q, tau);
    }
    Sink sink(o.out);
    std::ostream& os = sink.out();
    os << "index,sign,word,re,im,depth\n";
    for (const Codeword& w : c.words)
        os << w.index << ',' << w.sign << ',' << w.label << ',' << fmt9(w.point.real())
           << ',' << fmt9(w.point.imag()) << ',' << w.depth << '\n';
}

} // namespace

void setup_construct(CLI::App& app) {
    auto opts = std::make_shared<Opts>();
    CLI::App* sub = app.add_subcommand("construct", "Emit a constellation as CSV");
    sub->add_option("--group", opts->group, "group discriminant (6, 10, or 15)")
        ->check(CLI::IsMember({6, 10, 15}));
    sub->add_option("--q", opts->q, "constellation size (even)");
    sub->add_option("--tau", opts->tau, "code center as re,im (defaults to the group's)");
    sub->add_option("--qam", opts->qam, "emit 2^(2r)-QAM for exponent r instead");
    sub->add_option("--out", opts->out, "output path (stdout when omitted)");
    sub->add_option("--seed", opts->seed, "RNG seed (global flag; this subcommand is deterministic)");
    sub->add_option("--config", opts->config,
                    "flat key = value config file; explicit flags win");
    sub->callback([opts] { run(*opts); });
}

} // namespace fxc::cli
