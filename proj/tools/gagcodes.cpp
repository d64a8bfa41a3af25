// gagcodes: build, encode, decode and benchmark generalized AG codes on F_q(x).
//
// Exit codes: 0 success, 1 at least one word failed to decode, 2 usage or spec error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gag/bch.hpp"
#include "gag/bounds.hpp"
#include "gag/compare.hpp"
#include "gag/decoder.hpp"
#include "gag/numeric.hpp"
#include "gag/simulation.hpp"
#include "gag/spec_file.hpp"
#include "gag/words_csv.hpp"

namespace {

constexpr int kDecodeFailure = 1;
constexpr int kUsageError = 2;

struct Options {
    std::string spec_path;
    std::optional<std::size_t> g;
    std::optional<std::size_t> radius;
    std::string in_path;
    std::string out_path;
    std::string write_spec;
    std::string profile;
    std::optional<std::size_t> t;
    std::optional<std::size_t> w;
    std::uint64_t q = 8;
    std::size_t length = 0;
    std::size_t shortened = 0;
    std::size_t weight = 0;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool narrow_sense = false;
};

gag::CodeSpec load_spec(const Options& opt) {
    auto spec = gag::load_code_spec(opt.spec_path);
    if (opt.g) spec.g = *opt.g;
    return spec;
}

// Writes to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw std::invalid_argument("cannot open output '" + path + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input '" + path + "'");
    return in;
}

std::string code_summary(const gag::GagCode& code) {
    const std::size_t n = code.length();
    const std::size_t g = code.divisor_degree();
    const std::size_t t = gag::lifted_radius(n, g);
    std::ostringstream out;
    out << "n=" << n << " k=" << code.dimension() << " m=" << code.extension_degree()
        << " d*=" << gag::designed_distance(code.profile(), n, g) << " t_C=" << gag::correctable_errors(code.profile(), t)
        << '\n'
        << "q=" << code.tower().q() << " g=" << g << " profile=" << code.profile().to_string() << " lifted_radius=" << t
        << '\n';
    return out.str();
}

int cmd_build(const Options& opt) {
    const auto spec = load_spec(opt);
    const auto code = gag::build_code(spec);
    std::cout << code_summary(code);
    if (!opt.write_spec.empty()) {
        std::ofstream out(opt.write_spec);
        if (!out) throw std::invalid_argument("cannot open '" + opt.write_spec + "'");
        out << gag::format_code_spec(gag::explicit_spec(code, spec.label));
    }
    return 0;
}

int cmd_encode(const Options& opt) {
    const auto code = gag::build_code(load_spec(opt));
    auto in = open_input(opt.in_path);
    const auto messages = gag::read_words_csv(in, code.tower(), code.dimension());
    std::vector<gag::Word> codewords;
    codewords.reserve(messages.size());
    for (const auto& msg : messages) codewords.push_back(code.encode(msg));
    Output out(opt.out_path);
    gag::write_words_csv(out.stream(), code.tower(), codewords, code.length(), "c");
    return 0;
}

int cmd_decode(const Options& opt) {
    const auto code = gag::build_code(load_spec(opt));
    const gag::Decoder decoder(code, opt.radius);
    auto in = open_input(opt.in_path);
    const auto received = gag::read_words_csv(in, code.tower(), code.length());
    Output out(opt.out_path);
    auto& os = out.stream();
    os << "status,errors";
    for (std::size_t j = 0; j < code.dimension(); ++j) os << ",m" << j;
    os << '\n';
    bool any_failure = false;
    for (const auto& word : received) {
        const auto result = decoder.decode(word);
        if (const auto* ok = std::get_if<gag::DecodeSuccess>(&result)) {
            os << "ok," << ok->error_count;
            for (auto s : ok->message) os << ',' << code.tower().format(s);
        } else {
            any_failure = true;
            os << gag::to_string(std::get<gag::DecodeFailure>(result).reason) << ",";
            for (std::size_t j = 0; j < code.dimension(); ++j) os << ',';
        }
        os << '\n';
    }
    return any_failure ? kDecodeFailure : 0;
}

int cmd_simulate(const Options& opt) {
    const auto spec = load_spec(opt);
    const auto code = gag::build_code(spec);
    const gag::Decoder decoder(code, opt.radius);
    gag::SimulationConfig config;
    config.error_weight = opt.weight;
    config.trials = opt.trials;
    config.seed = opt.seed;
    config.threads = opt.threads;
    const auto report = gag::simulate(decoder, config, spec.label);
    std::cerr << gag::simulation_summary(report);
    Output out(opt.out_path);
    out.stream() << gag::simulation_csv(report);
    return 0;
}

int cmd_bounds(const Options& opt) {
    const auto profile = gag::DegreeProfile::parse(opt.profile);
    const std::size_t n = profile.length();
    if (n == 0) throw std::invalid_argument("bounds: empty profile");
    std::cout << "profile=" << profile.to_string() << " n=" << n << " places=" << profile.place_count()
              << " mu=" << profile.max_degree() << '\n';
    if (opt.g) {
        const std::size_t t = gag::lifted_radius(n, *opt.g);
        std::cout << "g=" << *opt.g << " k=" << *opt.g + 1 << " d*=" << gag::designed_distance(profile, n, *opt.g)
                  << " lifted_radius=" << t << " t_C=" << gag::correctable_errors(profile, t) << '\n';
    }
    if (opt.t) std::cout << "t=" << *opt.t << " t_C=" << gag::correctable_errors(profile, *opt.t) << '\n';
    if (opt.w) {
        const auto cover = gag::min_cover(profile, *opt.w);
        std::cout << "w=" << *opt.w << " min_cover=" << cover.ell << " a=" << cover.a << '\n';
    }
    return 0;
}

int cmd_bch_curve(const Options& opt) {
    const std::size_t shortened = opt.shortened ? opt.shortened : opt.length;
    const auto curve = gag::best_bch_curve(opt.q, opt.length, shortened, opt.narrow_sense);
    Output out(opt.out_path);
    auto& os = out.stream();
    os << "check_symbols,designed_distance,correctable,offset\n";
    for (const auto& pt : curve)
        os << pt.check_symbols << ',' << pt.designed_distance << ',' << pt.correctable << ',' << pt.offset << '\n';
    return 0;
}

int cmd_compare(const Options& opt) {
    gag::DegreeProfile profile;
    std::uint64_t q = opt.q;
    if (!opt.spec_path.empty()) {
        const auto spec = load_spec(opt);
        if (!spec.explicit_places.empty()) {
            profile = gag::build_code(spec).profile();
        } else {
            profile = gag::DegreeProfile(spec.counts);
        }
        q = gag::checked_pow(spec.p, spec.e);
    } else if (!opt.profile.empty()) {
        profile = gag::DegreeProfile::parse(opt.profile);
    } else {
        throw std::invalid_argument("compare: give --spec or --profile");
    }
    const std::size_t length = opt.length ? opt.length : gag::primitive_length_at_least(q, profile.length());
    Output out(opt.out_path);
    out.stream() << gag::compare_csv(gag::compare_with_bch(profile, q, length, opt.narrow_sense));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized algebraic geometry codes over F_q(x): construction, lifting decoder, bounds, BCH comparison"};
    app.require_subcommand(1);
    Options opt;

    auto add_spec = [&](CLI::App* cmd, bool required) {
        auto* o = cmd->add_option("-s,--spec", opt.spec_path, "code-spec file");
        if (required) o->required();
        cmd->add_option("-g,--g", opt.g, "override the divisor degree g");
    };

    auto* build = app.add_subcommand("build", "print n, k, m, designed distance and correctable errors");
    add_spec(build, true);
    build->add_option("--write-spec", opt.write_spec, "write the code back as an explicit place list");

    auto* encode = app.add_subcommand("encode", "encode a CSV of messages");
    add_spec(encode, true);
    encode->add_option("-i,--in", opt.in_path, "message CSV")->required();
    encode->add_option("-o,--out", opt.out_path, "codeword CSV (default stdout)");

    auto* decode = app.add_subcommand("decode", "decode a CSV of received words");
    add_spec(decode, true);
    decode->add_option("-i,--in", opt.in_path, "received-word CSV")->required();
    decode->add_option("-o,--out", opt.out_path, "result CSV (default stdout)");
    decode->add_option("--radius", opt.radius, "lifted decoding radius (default floor((n-g-1)/2))");

    auto* simulate = app.add_subcommand("simulate", "seeded error-injection simulation");
    add_spec(simulate, true);
    simulate->add_option("-w,--weight", opt.weight, "number of F_q symbol errors per trial")->required();
    simulate->add_option("-n,--trials", opt.trials, "number of trials");
    simulate->add_option("--seed", opt.seed, "random seed");
    simulate->add_option("-j,--threads", opt.threads, "worker threads (results do not depend on it)");
    simulate->add_option("--radius", opt.radius, "lifted decoding radius");
    simulate->add_option("-o,--out", opt.out_path, "per-trial CSV (default stdout)");

    auto* bounds = app.add_subcommand("bounds", "evaluate bound formulas for a degree profile");
    bounds->add_option("-p,--profile", opt.profile, "degree profile, e.g. \"1:17 4:1\"")->required();
    bounds->add_option("-g,--g", opt.g, "divisor degree");
    bounds->add_option("-t,--t", opt.t, "lifted decoder radius");
    bounds->add_option("-w,--w", opt.w, "lifted weight for min_cover");

    auto* bch = app.add_subcommand("bch-curve", "best BCH bound per number of check symbols");
    bch->add_option("-q,--q", opt.q, "field size")->required();
    bch->add_option("-N,--length", opt.length, "primitive length q^l - 1")->required();
    bch->add_option("--shortened", opt.shortened, "shortened length (default N)");
    bch->add_flag("--narrow-sense", opt.narrow_sense, "only runs starting at 1");
    bch->add_option("-o,--out", opt.out_path, "CSV output (default stdout)");

    auto* compare = app.add_subcommand("compare", "GAG vs shortened BCH correctable errors per check-symbol count");
    add_spec(compare, false);
    compare->add_option("-p,--profile", opt.profile, "degree profile (instead of --spec)");
    compare->add_option("-q,--q", opt.q, "field size when using --profile");
    compare->add_option("-N,--bch-length", opt.length, "BCH parent length (default smallest q^l - 1 >= n)");
    compare->add_flag("--narrow-sense", opt.narrow_sense, "only narrow-sense BCH codes");
    compare->add_option("-o,--out", opt.out_path, "CSV output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*build) return cmd_build(opt);
        if (*encode) return cmd_encode(opt);
        if (*decode) return cmd_decode(opt);
        if (*simulate) return cmd_simulate(opt);
        if (*bounds) return cmd_bounds(opt);
        if (*bch) return cmd_bch_curve(opt);
        if (*compare) return cmd_compare(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
