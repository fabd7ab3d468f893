#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wbinom/binomial.hpp"
#include "wbinom/elliptic.hpp"
#include "wbinom/ncalgebra.hpp"
#include "wbinom/paths.hpp"
#include "wbinom/registry.hpp"

namespace {

using namespace wbinom;

struct WeightCli {
    std::string family = "generic";
    std::string a, b, q, p; // complex literals, empty = not given
    std::string shift;      // "ds,dt"
};

void add_weight_flags(CLI::App* cmd, WeightCli& w) {
    cmd->add_option("--weights", w.family, "weight family")->capture_default_str();
    cmd->add_option("--a", w.a, "parameter a, as re or re,im");
    cmd->add_option("--b", w.b, "parameter b, as re or re,im");
    cmd->add_option("--q", w.q, "parameter q, as re or re,im");
    cmd->add_option("--p", w.p, "nome p, as re or re,im");
    cmd->add_option("--shift", w.shift, "weight index shift, as ds,dt");
}

std::pair<int, int> parse_int_pair(const std::string& text, const char* what) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument(std::string(what) + " expects two comma-separated integers");
    }
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + " expects two comma-separated integers");
    }
}

WeightSpec make_spec(const WeightCli& w) {
    WeightSpec spec;
    auto fam = family_from_name(w.family);
    if (!fam) throw std::invalid_argument("unknown weight family: " + w.family);
    spec.family = *fam;
    if (!w.a.empty()) spec.a = parse_cplx(w.a);
    if (!w.b.empty()) spec.b = parse_cplx(w.b);
    if (!w.q.empty()) spec.q = parse_cplx(w.q);
    if (!w.p.empty()) spec.p = parse_cplx(w.p);
    if (!w.shift.empty()) {
        auto [ds, dt] = parse_int_pair(w.shift, "--shift");
        spec.shift_s = ds;
        spec.shift_t = dt;
    }
    spec.validate();
    return spec;
}

int run_expand(int n, const WeightSpec& spec) {
    if (spec.symbolic()) {
        std::cout << binomial_power<SymPoly>(n, spec).str() << "\n";
    } else {
        std::cout << binomial_power<Cplx>(n, spec).str() << "\n";
    }
    return 0;
}

int run_coeff(int n, int k, bool closed_form, const WeightSpec& spec) {
    if (closed_form) {
        // Closed forms absorb the index shift into the parameters.
        Cplx a = spec.a, b = spec.b;
        if (spec.shift_s != 0 || spec.shift_t != 0) {
            a *= cpow(spec.q, spec.shift_s + 2 * spec.shift_t);
            b *= cpow(spec.q, 2 * spec.shift_s + spec.shift_t);
        }
        Cplx val;
        switch (spec.family) {
            case WeightFamily::Elliptic:
                val = elliptic_binom_closed(a, b, spec.q, spec.p, n, k);
                break;
            case WeightFamily::BalancedVWP:
            case WeightFamily::Balanced:
            case WeightFamily::VWP:
                val = basic_binom_closed(spec.family, a, b, spec.q, n, k);
                break;
            default:
                throw std::invalid_argument(
                    "--closed-form needs the elliptic family or a p = 0 family");
        }
        std::cout << format_cplx(val) << "\n";
        return 0;
    }
    if (spec.symbolic()) {
        SymPoly val = spec.double_weight() ? vwbinom<SymPoly>(spec, n, k)
                                           : wbinom<SymPoly>(spec, n, k);
        std::cout << val.str() << "\n";
    } else {
        Cplx val =
            spec.double_weight() ? vwbinom<Cplx>(spec, n, k) : wbinom<Cplx>(spec, n, k);
        std::cout << format_cplx(val) << "\n";
    }
    return 0;
}

template <class R>
void print_paths(GridPoint omega, bool list, const WeightSpec& spec) {
    WeightGrid<R> grid(spec);
    auto paths = enumerate_paths({0, 0}, omega);
    if (list) {
        for (const auto& path : paths) {
            R weight = path_weight_cached<R>(path, grid);
            std::string ws;
            if constexpr (std::is_same_v<R, SymPoly>) {
                ws = weight.str();
            } else {
                ws = format_cplx(weight);
            }
            std::cout << (path.steps.empty() ? "(empty)" : path.str()) << "  " << ws << "\n";
        }
    }
    std::cout << "paths: " << paths.size() << "\n";
    R gf = generating_function_cached<R>({0, 0}, omega, grid);
    if constexpr (std::is_same_v<R, SymPoly>) {
        std::cout << "gf: " << gf.str() << "\n";
    } else {
        std::cout << "gf: " << format_cplx(gf) << "\n";
    }
}

int run_paths(const std::string& to, bool list, const WeightSpec& spec) {
    auto [x, y] = parse_int_pair(to, "--to");
    if (spec.symbolic()) {
        print_paths<SymPoly>({x, y}, list, spec);
    } else {
        print_paths<Cplx>({x, y}, list, spec);
    }
    return 0;
}

int run_normalize(const std::string& text, const WeightSpec& spec) {
    Word word = Word::parse(text);
    if (spec.symbolic()) {
        std::cout << normalize<SymPoly>(word, spec).str() << "\n";
    } else {
        std::cout << normalize<Cplx>(word, spec).str() << "\n";
    }
    return 0;
}

int run_verify(const std::string& name, const CheckConfig& cfg, bool timing) {
    const IdentityCheck* check = find_identity(name);
    if (check == nullptr) {
        std::cerr << "unknown identity: " << name << "\navailable:\n";
        for (const auto& c : identity_registry()) std::cerr << "  " << c.name << "\n";
        return 2;
    }
    CheckResult r = check->run(cfg);
    std::cout << check_result_json(r, timing).dump(2) << "\n";
    return r.pass ? 0 : 1;
}

int run_full_report(std::uint64_t seed, bool timing, const std::string& format) {
    if (format == "json") {
        auto [text, all] = run_report(seed, timing);
        std::cout << text;
        return all ? 0 : 1;
    }
    bool all = true;
    long passed = 0;
    for (const auto& c : identity_registry()) {
        CheckConfig cfg;
        cfg.seed = seed;
        CheckResult r = c.run(cfg);
        all = all && r.pass;
        passed += r.pass ? 1 : 0;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.identity << "  (trials=" << r.trials;
        if (r.max_residual) std::cout << ", max_residual=" << *r.max_residual;
        if (timing) std::cout << ", " << r.millis << "ms";
        std::cout << ")\n";
    }
    std::cout << passed << "/" << identity_registry().size() << " identities verified\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weight-dependent noncommutative binomial engine"};
    app.require_subcommand(1);

    WeightCli weights;
    int n = 0, k = 0;
    bool closed_form = false, list_paths = false, timing = false;
    std::string to, word, identity, format = "json";
    CheckConfig cfg;

    CLI::App* expand = app.add_subcommand("expand", "expand (x+y)^n in canonical form");
    expand->add_option("--n", n, "power")->required()->check(CLI::NonNegativeNumber);
    add_weight_flags(expand, weights);

    CLI::App* coeff = app.add_subcommand("coeff", "one binomial coefficient [n,k]");
    coeff->add_option("--n", n, "row")->required()->check(CLI::NonNegativeNumber);
    coeff->add_option("--k", k, "column")->required();
    coeff->add_flag("--closed-form", closed_form, "use the closed product form");
    add_weight_flags(coeff, weights);

    CLI::App* paths = app.add_subcommand("paths", "lattice paths from the origin");
    paths->add_option("--to", to, "endpoint, as x,y")->required();
    paths->add_flag("--list", list_paths, "print every path with its weight");
    add_weight_flags(paths, weights);

    CLI::App* normalize = app.add_subcommand("normalize", "normalize a word in x, y, w, v");
    normalize->add_option("--word", word, "whitespace-separated atoms: x y w(s,t) v(s,t)")
        ->required();
    add_weight_flags(normalize, weights);

    CLI::App* verify = app.add_subcommand("verify", "run one identity check");
    verify->add_option("--identity", identity, "identity name")->required();
    verify->add_option("--n", cfg.n, "pin n");
    verify->add_option("--m", cfg.m, "pin m");
    verify->add_option("--k", cfg.k, "pin k");
    verify->add_option("--l", cfg.l, "pin l");
    verify->add_option("--trials", cfg.trials, "number of random draws");
    verify->add_option("--tol", cfg.tol, "residual tolerance");
    verify->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    verify->add_flag("--timing", timing, "include wall-clock millis in the output");

    CLI::App* report = app.add_subcommand("report", "run every identity check");
    report->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    report->add_flag("--timing", timing, "include wall-clock millis in the output");
    report->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (expand->parsed()) return run_expand(n, make_spec(weights));
        if (coeff->parsed()) return run_coeff(n, k, closed_form, make_spec(weights));
        if (paths->parsed()) return run_paths(to, list_paths, make_spec(weights));
        if (normalize->parsed()) return run_normalize(word, make_spec(weights));
        if (verify->parsed()) return run_verify(identity, cfg, timing);
        if (report->parsed()) return run_full_report(cfg.seed, timing, format);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wbinom::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
