#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "statcert/corpus.hpp"
#include "statcert/errors.hpp"
#include "statcert/report.hpp"

namespace {

using namespace statcert;

Problem load_problem(const std::string& spec) {
    if (spec.rfind("corpus:", 0) == 0) return corpus_problem(spec.substr(7));
    std::ifstream in(spec, std::ios::binary);
    if (!in) throw InputError("cannot read problem file: " + spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

RVector parse_direction(const std::string& text) {
    std::vector<Rational> entries;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) entries.push_back(parse_rational(token));
    if (entries.empty()) throw InputError("empty direction");
    RVector u(static_cast<long>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) u(static_cast<long>(i)) = entries[i];
    return u;
}

// Accepts "g2", "h1", "pair1", or a plain 1-based position into the list
// g_1..g_l, h_1..h_p, pair_1..pair_q.
std::vector<ConstraintRef> parse_core(const MpecPoint& P, const std::string& text) {
    const std::vector<ConstraintRef> all = all_constraints(P);
    std::vector<ConstraintRef> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw InputError("empty core-set entry");
        auto numbered = [&](const std::string& prefix,
                            ConstraintRef::Kind kind) -> std::optional<ConstraintRef> {
            if (token.rfind(prefix, 0) != 0) return std::nullopt;
            try {
                const long idx = std::stol(token.substr(prefix.size()));
                return ConstraintRef{kind, idx - 1};
            } catch (const std::exception&) {
                return std::nullopt;
            }
        };
        std::optional<ConstraintRef> ref;
        if (std::isdigit(static_cast<unsigned char>(token[0]))) {
            long pos = 0;
            try {
                pos = std::stol(token);
            } catch (const std::exception&) {
                throw InputError("cannot parse core-set entry: " + token);
            }
            if (pos < 1 || pos > static_cast<long>(all.size()))
                throw InputError("core-set position out of range: " + token);
            ref = all[pos - 1];
        } else if (!(ref = numbered("pair", ConstraintRef::Kind::Pair)) &&
                   !(ref = numbered("g", ConstraintRef::Kind::Ineq)) &&
                   !(ref = numbered("h", ConstraintRef::Kind::Eq))) {
            throw InputError("cannot parse core-set entry: " + token);
        }
        out.push_back(*ref);
    }
    return out;
}

void emit(const Report& rep, const std::string& format) {
    if (format == "json")
        std::cout << rep.json_text;
    else
        std::cout << rep.text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stationarity certificates for disjunctive programs"};
    app.require_subcommand(1);

    std::string file, format = "text";
    std::vector<std::string> directions;
    std::string mode = "existence", core_set;
    bool use_limiting = false;
    unsigned long long seed = 0;
    bool seed_given = false;
    std::string radius = "1";
    long resolution = 8;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "problem file, or corpus:<name>")->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "stationarity classification");
    add_common(classify_cmd);
    classify_cmd->add_option("--direction", directions, "extra probe direction, e.g. 0,1,1");

    CLI::App* cones_cmd = app.add_subcommand("cones", "linearization and critical cones");
    add_common(cones_cmd);

    CLI::App* mult_cmd = app.add_subcommand("multipliers", "directional multiplier sets");
    add_common(mult_cmd);
    mult_cmd->add_option("--direction", directions, "direction of the sets");
    mult_cmd->add_option("--core-set", core_set, "constraints carrying the nonzero condition");

    CLI::App* so_cmd = app.add_subcommand("second-order", "second-order conditions");
    add_common(so_cmd);
    so_cmd->add_option("--direction", directions, "critical direction to examine");
    so_cmd->add_option("--mode", mode, "sufficiency mode")
        ->check(CLI::IsMember({"existence", "uniform", "ssosc"}));
    so_cmd->add_flag("--limiting", use_limiting, "use the limiting variant in existence mode");

    CLI::App* sm_cmd = app.add_subcommand("strong-m", "strong M-stationarity pivoting");
    add_common(sm_cmd);
    CLI::Option* seed_opt = sm_cmd->add_option("--seed", seed, "perturbation seed");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "grid falsification oracle");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--radius", radius, "grid radius (rational)");
    oracle_cmd->add_option("--resolution", resolution, "grid resolution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    seed_given = seed_opt->count() > 0;

    try {
        const Problem p = load_problem(file);
        std::vector<RVector> dirs;
        for (const std::string& d : directions) dirs.push_back(parse_direction(d));

        if (app.got_subcommand(classify_cmd)) {
            emit(render_classify(p, ClassifyOptions{dirs}), format);
        } else if (app.got_subcommand(cones_cmd)) {
            emit(render_cones(p), format);
        } else if (app.got_subcommand(mult_cmd)) {
            if (dirs.size() > 1) throw InputError("multipliers takes at most one direction");
            MultipliersOptions opts;
            if (!dirs.empty()) opts.direction = dirs[0];
            if (!core_set.empty()) opts.core = parse_core(p.point, core_set);
            emit(render_multipliers(p, opts), format);
        } else if (app.got_subcommand(so_cmd)) {
            SecondOrderOptions opts;
            opts.directions = dirs;
            opts.mode = mode == "uniform"  ? SufficientMode::Uniform
                        : mode == "ssosc" ? SufficientMode::Ssosc
                                          : SufficientMode::Existence;
            opts.use_limiting = use_limiting;
            emit(render_second_order(p, opts), format);
        } else if (app.got_subcommand(sm_cmd)) {
            StrongMOptions opts;
            if (seed_given) {
                opts.seed = seed;
            } else if (const char* env = std::getenv("STATIONARITY_SEED")) {
                try {
                    opts.seed = std::stoull(env);
                } catch (const std::exception&) {
                    throw InputError("STATIONARITY_SEED is not an integer");
                }
            } else {
                opts.seed = 1;
            }
            emit(render_strong_m(p, opts), format);
        } else {
            OracleOptions opts;
            opts.radius = parse_rational(radius);
            opts.resolution = resolution;
            emit(render_oracle(p, opts), format);
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const UnavailableError& e) {
        std::cerr << "unavailable: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateInputError& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
