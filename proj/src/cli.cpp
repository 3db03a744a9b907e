#include "hwcl/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hwcl/branching.hpp"
#include "hwcl/classifier.hpp"
#include "hwcl/cocycle.hpp"
#include "hwcl/errors.hpp"
#include "hwcl/json_io.hpp"
#include "hwcl/oracles.hpp"
#include "hwcl/random.hpp"
#include "hwcl/schatten.hpp"

namespace hwcl {

namespace {

std::vector<long long> parse_tuple_text(const std::string& text) {
    // comma-separated integers; zeros are significant, so this does not go
    // through the canonicalizing weight parser
    std::vector<long long> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = (comma == std::string::npos) ? text.size() : comma;
        const std::string token = text.substr(start, end - start);
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw parse_error("not an integer tuple entry: '" + token + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string tuple_to_string(const Tuple& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    return s;
}

CoefficientRule parse_coeff(const std::string& name) {
    if (name == "inv-sqrt") return CoefficientRule::InverseSqrt;
    if (name == "inv") return CoefficientRule::Inverse;
    if (name == "alternating") return CoefficientRule::Alternating;
    throw parse_error("unknown coefficient rule '" + name +
                      "' (expected inv-sqrt | inv | alternating)");
}

PhasePattern parse_pattern(const std::string& name) {
    if (name == "constant") return PhasePattern::Constant;
    if (name == "alternating") return PhasePattern::Alternating;
    throw parse_error("unknown pattern '" + name + "' (expected constant | alternating)");
}

std::vector<long long> sample_ladder(long long kmax) {
    // 1-2-5 ladder from 10 up to kmax, kmax always included
    std::vector<long long> ks;
    for (long long base = 10; base <= kmax; base *= 10)
        for (long long mult : {1, 2, 5}) {
            const long long k = base * mult;
            if (k <= kmax) ks.push_back(k);
        }
    if (ks.empty() || ks.back() != kmax) ks.push_back(kmax);
    return ks;
}

void emit_text(std::ostream& os, const Json& j, int indent = 0) {
    for (const auto& [key, value] : j.items()) {
        os << std::string(static_cast<std::size_t>(indent), ' ') << key << ": ";
        os << value.dump() << "\n";
    }
}

struct OutputSink {
    std::string format = "json";
    std::string path;

    void deliver(std::ostream& fallback, const Json& j, const std::string* csv) const {
        std::string payload;
        if (format == "csv") {
            if (!csv) throw parse_error("csv output is only available for cocycle-growth");
            payload = *csv;
        } else if (format == "json") {
            payload = j.dump();
            payload += '\n';
        }
        if (format == "text") {
            if (!path.empty()) {
                std::ofstream file(path);
                if (!file) throw std::runtime_error("cannot open output file: " + path);
                emit_text(file, j);
            } else {
                emit_text(fallback, j);
            }
            return;
        }
        if (!path.empty()) {
            std::ofstream file(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            file << payload;
        } else {
            fallback << payload;
        }
    }
};

Json schema_header() {
    Json j;
    j["schema"] = "hwcl/1";
    return j;
}

Json run_schatten_q(double p) {
    Json j = schema_header();
    j["p"] = p;
    const SchattenExponent q = q_exponent(p);
    if (q.is_infinite())
        j["q"] = "inf";
    else
        j["q"] = q.p;
    return j;
}

Json run_schatten_hoelder(double p, int trials, std::uint64_t seed) {
    const SchattenExponent q = q_exponent(p);
    RandomState rng(seed);
    double min_margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        Eigen::MatrixXcd b(4, 4), c(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int jx = 0; jx < 4; ++jx) {
                b(i, jx) = rng.complex_normal();
                c(i, jx) = rng.complex_normal();
            }
        min_margin = std::min(
            min_margin, hoelder_margin(b, c, SchattenExponent(2.0), SchattenExponent(p), q));
    }
    Json j = schema_header();
    j["p"] = p;
    j["q"] = q.is_infinite() ? Json("inf") : Json(q.p);
    j["r"] = 2.0;
    j["trials"] = trials;
    j["seed"] = seed;
    j["min_margin"] = min_margin;
    j["pass"] = min_margin >= -1e-10;
    return j;
}

Json run_schatten_norm_demo(const std::string& demo, std::uint64_t seed) {
    if (demo != "rank1")
        throw parse_error("unknown schatten norm demo '" + demo + "' (expected rank1)");
    RandomState rng(seed);
    double max_rel_error = 0.0;
    const double pvals[] = {1.0, 2.0, 4.0, std::numeric_limits<double>::infinity()};
    for (int t = 0; t < 50; ++t) {
        const int n = static_cast<int>(rng.uniform_int(2, 9));
        Eigen::VectorXcd w(n), u(n);
        for (int i = 0; i < n; ++i) {
            w(i) = rng.complex_normal();
            u(i) = rng.complex_normal();
        }
        const Eigen::MatrixXcd a = w * u.adjoint();
        const double expected = w.norm() * u.norm();
        for (double p : pvals) {
            const double got = schatten_norm(a, SchattenExponent(p));
            max_rel_error = std::max(max_rel_error, std::abs(got - expected) / expected);
        }
    }
    Json j = schema_header();
    j["demo"] = demo;
    j["cases"] = 50;
    j["max_rel_error"] = max_rel_error;
    j["pass"] = max_rel_error <= 1e-12;
    return j;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"highest weight cohomology lab: H^1 classification, branching, "
                 "tensor realizations, cocycle growth, Schatten tools"};
    app.require_subcommand(1);

    OutputSink sink;
    std::uint64_t seed = 0;
    app.add_option("--format", sink.format, "output format: json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", sink.path, "write output to this file instead of stdout");
    app.add_option("--seed", seed, "seed for randomized subcommands")->capture_default_str();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "decide whether H^1 vanishes");
    std::string group_spec, weight_text;
    classify_cmd->add_option("--group", group_spec, "uinf | up:<p> | uinfty-compact | full")
        ->required();
    classify_cmd->add_option("--weight", weight_text, "weight as 'a,b,c;t' (tail optional)")
        ->required();

    // branch
    auto* branch_cmd = app.add_subcommand("branch", "one-step branching of a weight tuple");
    std::string tuple_text;
    branch_cmd->add_option("--weight", tuple_text, "integer tuple 'a,b,c'")->required();

    // fixed-dim
    auto* fixed_cmd = app.add_subcommand("fixed-dim", "dimension of the U(n)-fixed subspace");
    std::string fixed_tuple;
    int fixed_n = 1;
    fixed_cmd->add_option("--weight", fixed_tuple, "integer tuple 'a,b,c'")->required();
    fixed_cmd->add_option("--n", fixed_n, "subgroup rank")->required();

    // dim
    auto* dim_cmd = app.add_subcommand("dim", "Weyl dimension of the highest weight module");
    std::string dim_tuple;
    int dim_n = 1;
    dim_cmd->add_option("--weight", dim_tuple, "integer tuple 'a,b,c'")->required();
    dim_cmd->add_option("--n", dim_n, "rank of the unitary group")->required();

    // cocycle-growth
    auto* growth_cmd = app.add_subcommand("cocycle-growth",
                                          "norm growth of the witness cocycle along g_k");
    std::string growth_weight, coeff_name = "inv-sqrt", pattern_name = "constant";
    double theta = 1.5707963267948966;
    long long kmax = 10000;
    growth_cmd->add_option("--weight", growth_weight, "finitely supported weight 'a,b,c;0'")
        ->required();
    growth_cmd->add_option("--coeff", coeff_name, "inv-sqrt | inv | alternating")
        ->capture_default_str();
    growth_cmd->add_option("--theta", theta, "phase angle in radians")->capture_default_str();
    growth_cmd->add_option("--pattern", pattern_name, "constant | alternating")
        ->capture_default_str();
    growth_cmd->add_option("--kmax", kmax, "largest support size")->capture_default_str();

    // schatten
    auto* schatten_cmd = app.add_subcommand("schatten", "Schatten norm tools");
    schatten_cmd->require_subcommand(1);
    auto* q_cmd = schatten_cmd->add_subcommand("q", "conjugate summability exponent");
    double q_p = 2.0;
    q_cmd->add_option("--p", q_p, "Schatten exponent")->required();
    auto* hoelder_cmd = schatten_cmd->add_subcommand("hoelder", "random Hoelder margins");
    double h_p = 4.0;
    int h_trials = 200;
    hoelder_cmd->add_option("--p", h_p, "Schatten exponent")->required();
    hoelder_cmd->add_option("--trials", h_trials, "number of random trials")
        ->capture_default_str();
    auto* norm_cmd = schatten_cmd->add_subcommand("norm", "norm identity demos");
    std::string demo = "rank1";
    norm_cmd->add_option("--demo", demo, "demo name (rank1)")->capture_default_str();

    try {
        app.parse(argc, argv);

        Json j;
        std::string csv;
        const std::string* csv_ptr = nullptr;

        if (*classify_cmd) {
            const Verdict v = classify(parse_weight(weight_text), GroupId::parse(group_spec));
            j = schema_header();
            j.update(verdict_to_json(v));
        } else if (*branch_cmd) {
            const Tuple lam = parse_tuple_text(tuple_text);
            const unsigned long long count = branch_count(lam);
            if (count > 100000)
                throw cap_exceeded("branch: tuple has " + std::to_string(count) +
                                   " branches; refusing to materialize more than 100000");
            j = schema_header();
            j["weight"] = tuple_to_string(lam);
            Json branches = Json::array();
            for (const Tuple& eta : branch(lam)) branches.push_back(tuple_to_string(eta));
            j["branches"] = branches;
            j["count"] = count;
        } else if (*fixed_cmd) {
            const Tuple lam = parse_tuple_text(fixed_tuple);
            j = schema_header();
            j["weight"] = tuple_to_string(lam);
            j["n"] = fixed_n;
            j["fixed_dim"] = fixed_space_dim(lam, fixed_n);
            j["has_fixed_vector"] = has_fixed_vector(lam, fixed_n);
        } else if (*dim_cmd) {
            Tuple lam = parse_tuple_text(dim_tuple);
            if (static_cast<int>(lam.size()) > dim_n)
                throw parse_error("dim: tuple longer than the requested rank n");
            lam.resize(static_cast<std::size_t>(dim_n), 0);
            j = schema_header();
            j["weight"] = dim_tuple;
            j["n"] = dim_n;
            j["dim"] = weyl_dim(lam);
        } else if (*growth_cmd) {
            const Weight w = parse_weight(growth_weight);
            if (!w.finitely_supported())
                throw parse_error("cocycle-growth: weight must be finitely supported (tail 0)");
            CocycleWitness witness;
            witness.weight = FiniteWeight(w.prefix());
            witness.rule = parse_coeff(coeff_name);
            const GrowthReport report =
                growth_curve(witness, theta, parse_pattern(pattern_name), sample_ladder(kmax));
            j = schema_header();
            j["weight"] = w.to_string();
            j["coeff"] = coeff_name;
            j["theta"] = theta;
            j["pattern"] = pattern_name;
            j.update(growth_to_json(report));
            csv = growth_to_csv(report);
            csv_ptr = &csv;
        } else if (*schatten_cmd) {
            if (*q_cmd) j = run_schatten_q(q_p);
            else if (*hoelder_cmd) j = run_schatten_hoelder(h_p, h_trials, seed);
            else j = run_schatten_norm_demo(demo, seed);
        }

        sink.deliver(out, j, csv_ptr);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "out of range: " << e.what() << "\n";
        return 2;
    } catch (const cap_exceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::overflow_error& e) {
        err << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const numeric_error& e) {
        err << "numerical contract violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace hwcl
