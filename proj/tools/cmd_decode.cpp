#include <memory>
#include <sstream>

#include "cli_common.hpp"
#include "fuchscode/decode.hpp"

namespace fxc::cli {

namespace {

struct Opts {
    int group = 6;
    std::size_t q = 16;
    std::string tau;
    int qam = 0;
    std::string decoder = "pra";
    std::string in;
    std::string out;
    std::uint64_t seed = 0; // accepted globally, unused here
    std::string config;
};

bool parse_sample(const std::string& line, Complex& y) {
    std::size_t comma = line.find(',');
    if (comma == std::string::npos) return false;
    try {
        std::size_t used = 0;
        double re = std::stod(line.substr(0, comma), &used);
        std::string rest = line.substr(comma + 1);
        double im = std::stod(rest, &used);
        y = {re, im};
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void run(const Opts& o) {
    const Group* g = nullptr;
    Codebook c;
    if (o.qam > 0) {
        if (o.decoder == "pra") throw ParseError("reduction decoding needs a group code");
        c = qam_codebook(o.qam);
    } else {
        g = &catalog(o.group);
        std::optional<Complex> tau;
        if (!o.tau.empty()) tau = parse_tau(o.tau);
        c = nuf_codebook(*g, o.q, tau);
    }

    std::ifstream file;
    if (!o.in.empty()) {
        file.open(o.in);
        if (!file) throw ParseError("cannot open input file " + o.in);
    }
    std::istream& is = o.in.empty() ? std::cin : file;

    Sink sink(o.out);
    std::ostream& os = sink.out();
    os << "index,sign,word,iterations,total_ops\n";
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Complex y;
        if (!parse_sample(line, y)) {
            // A leading header row is tolerated; anything later is malformed.
            if (first) {
                first = false;
                continue;
            }
            throw ParseError("bad sample line: " + line);
        }
        first = false;
        DecodeResult r = o.decoder == "pra" ? pra_decode(c, *g, y) : ml_decode(c, y);
        if (r.status == DecodeStatus::Ok)
            os << r.index << ',' << c.words[r.index].sign << ',' << c.words[r.index].label;
        else
            os << "-1,0,";
        os << ',' << r.iterations << ',' << r.total_ops << '\n';
    }
}

} // namespace

void setup_decode(CLI::App& app) {
    auto opts = std::make_shared<Opts>();
    CLI::App* sub = app.add_subcommand("decode", "Decode complex samples (CSV re,im lines)");
    sub->add_option("--group", opts->group, "group discriminant (6, 10, or 15)")
        ->check(CLI::IsMember({6, 10, 15}));
    sub->add_option("--q", opts->q, "constellation size (even)");
    sub->add_option("--tau", opts->tau, "code center as re,im");
    sub->add_option("--qam", opts->qam, "decode against 2^(2r)-QAM instead");
    sub->add_option("--decoder", opts->decoder, "pra or ml")
        ->check(CLI::IsMember({"pra", "ml"}));
    sub->add_option("--in", opts->in, "input sample file (stdin when omitted)");
    sub->add_option("--out", opts->out, "output path (stdout when omitted)");
    sub->add_option("--seed", opts->seed, "RNG seed (global flag; this subcommand is deterministic)");
    sub->add_option("--config", opts->config,
                    "flat key = value config file; explicit flags win");
    sub->callback([opts] { run(*opts); });
}

} // namespace fxc::cli
