// Command-line surface over the kakeya library: field inspection, bound
// reports, exact minima, randomized construction, Monte Carlo estimation,
// verification, and CSV sweeps. Output is deterministic for fixed arguments
// and seed, for every thread count.
//
// Exit codes: 0 success, 1 domain error (bad field, zero vector, ...),
// 2 node-budget exhaustion, 3 I/O or parse error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <kakeya/kakeya.hpp>

namespace {

using namespace kakeya;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string vec_str(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string codes_str(const std::vector<point_t>& codes) {
    std::string s;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(codes[i]);
    }
    return s;
}

std::string poly_str(const std::vector<std::uint32_t>& coeffs) {
    std::string s;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!s.empty()) s += '+';
        const bool unit = coeffs[i] == 1;
        if (i == 0) {
            s += std::to_string(coeffs[i]);
        } else {
            if (!unit) s += std::to_string(coeffs[i]) + "*";
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

// Instance selection shared by most subcommands: either --instance FILE or
// --p/--m/--n with --full.
struct InstanceArgs {
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    unsigned n = 0;
    bool full = false;
    std::string path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--p", p, "field characteristic (prime)");
        cmd->add_option("--m", m, "extension degree (default 1)");
        cmd->add_option("--n", n, "space dimension");
        cmd->add_flag("--full", full, "use every nonzero vector as T");
        cmd->add_option("--instance", path, "instance file (JSON)");
    }

    Instance resolve(const CLI::App* cmd) const {
        if (!path.empty()) {
            if (cmd->count("--p") || cmd->count("--m") || cmd->count("--n") || full)
                throw ParseError("--instance cannot be combined with --p/--m/--n/--full");
            return load_instance(path);
        }
        if (!cmd->count("--p") || !cmd->count("--n"))
            throw ParseError("need --p and --n (with --full or an explicit instance file)");
        if (!full) throw ParseError("need --full or --instance to define T");
        Instance inst;
        inst.p = p;
        inst.m = m;
        inst.n = n;
        inst.full = true;
        return inst;
    }
};

// Everything derived from an instance that the subcommands consume.
struct Resolved {
    Space space;
    Instance inst;
    std::vector<Direction> classes;
    Rational m_paper;
    std::uint32_t m_exact = 0;
    bool exact_flag = true;
};

Resolved resolve_instance(const Instance& inst) {
    Space space(Field::make(inst.p, inst.m), inst.n);
    if (inst.full) {
        std::vector<Direction> classes = space.directions();
        const std::uint32_t m_exact = static_cast<std::uint32_t>(classes.size());
        return Resolved{std::move(space), inst, std::move(classes), Rational(m_exact), m_exact, true};
    }
    Extraction ex = extract_directions(space, inst.T);
    if (ex.classes.empty()) throw std::invalid_argument("instance has an empty T");
    return Resolved{std::move(space), inst, std::move(ex.classes), ex.m_paper, ex.m_exact, ex.exact_flag};
}

void print_instance_header(std::ostream& out, const char* cmd, const Resolved& r) {
    out << "# " << cmd << " p=" << r.inst.p << " m=" << r.inst.m << " q=" << r.space.field().q()
        << " n=" << r.space.dim() << " M=" << r.m_exact << "\n";
}

// Flag the M the bound formulas use whenever T is not a union of full
// classes; every formula below plugs in M_exact.
void print_m_choice(std::ostream& out, const Resolved& r) {
    out << "M_exact=" << r.m_exact << "\n";
    out << "M_paper=" << rat_str(r.m_paper) << "\n";
    if (!r.exact_flag)
        out << "warning: #T is not an integer multiple of q-1 (M_paper=" << rat_str(r.m_paper)
            << "); bounds use M=M_exact=" << r.m_exact << "\n";
}

void print_bounds(std::ostream& out, const BoundsReport& rep) {
    out << "M=" << rep.m << "\n";
    out << "lb_paper=" << fmt(rep.lb_paper) << "\n";
    out << "lb_integer=" << rep.lb_integer << "\n";
    if (rep.lb_paper_overshoot) out << "lb_paper_flag=" << kLbPaperCaveat << "\n";
    out << "theta_M=" << fmt(rep.theta_m) << "\n";
    out << "ub_existence=" << rep.ub_existence << "\n";
    out << "ub_paper=" << fmt(rep.ub_paper) << "\n";
}

std::vector<double> parse_eps_grid(const std::string& text) {
    double a = 0, b = 0, step = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &a, &b, &step, &extra) != 3)
        throw ParseError("--eps-grid expects A:B:STEP");
    if (!(a > 0) || !(step > 0) || b < a) throw ParseError("--eps-grid needs 0 < A <= B and STEP > 0");
    std::vector<double> out;
    for (unsigned k = 0;; ++k) {
        const double x = a + k * step;
        if (x > b + 1e-12) break;
        out.push_back(x);
    }
    return out;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    return out;
}

// ---- subcommands ----------------------------------------------------------

int run_field_info(std::uint32_t p, std::uint32_t m) {
    Field f = Field::make(p, m);
    std::ostream& out = std::cout;
    out << "# field-info p=" << p << " m=" << m << "\n";
    out << "p=" << f.p() << "\n";
    out << "m=" << f.m() << "\n";
    out << "q=" << f.q() << "\n";
    out << "modulus=" << poly_str(f.modulus()) << "\n";
    std::vector<point_t> mod_codes(f.modulus().begin(), f.modulus().end());
    out << "modulus_codes=" << codes_str(mod_codes) << "\n";
    if (f.q() > 64) {
        out << "tables omitted (q > 64)\n";
        return 0;
    }
    out << "add_table:\n";
    for (elem_t a = 0; a < f.q(); ++a) {
        for (elem_t b = 0; b < f.q(); ++b) out << (b ? " " : "") << f.add(a, b);
        out << "\n";
    }
    out << "mul_table:\n";
    for (elem_t a = 0; a < f.q(); ++a) {
        for (elem_t b = 0; b < f.q(); ++b) out << (b ? " " : "") << f.mul(a, b);
        out << "\n";
    }
    out << "inv_table:\n";
    for (elem_t a = 0; a < f.q(); ++a) out << (a ? " " : "") << (a == 0 ? std::string("-") : std::to_string(f.inv(a)));
    out << "\n";
    return 0;
}

int run_bounds(const Resolved& r, const std::optional<std::string>& eps_grid) {
    print_instance_header(std::cout, "bounds", r);
    print_m_choice(std::cout, r);
    BoundsReport rep = bounds_report(r.space.field().q(), r.space.dim(), r.m_exact);
    print_bounds(std::cout, rep);
    if (eps_grid) {
        for (double eps : parse_eps_grid(*eps_grid)) {
            EpsilonBounds eb = epsilon_bounds(r.space.field().q(), r.space.dim(), eps);
            std::cout << "eps=" << fmt(eps) << " M_real=" << fmt(eb.m_real) << " Delta=" << fmt(eb.delta)
                      << " ub_eps=" << fmt(eb.ub_eps) << "\n";
        }
    }
    return 0;
}

int run_exact(const Resolved& r, const ExactOptions& opt) {
    const double est = exact_search_space(r.space, r.classes.size(), opt.fix_translation);
    print_instance_header(std::cout, "exact", r);
    std::cout << "# fix_translation=" << (opt.fix_translation ? 1 : 0) << " node_budget=" << opt.node_budget << "\n";
    if (est > 1e8)
        std::cout << "warning: search space ~" << fmt(est) << " coset tuples exceeds 1e8; rely on --node-budget\n";
    ExactResult res = exact_min_kakeya(r.space, r.classes, opt);
    std::cout << "status=" << to_string(res.status) << "\n";
    std::cout << "min_size=" << res.min_size << "\n";
    std::cout << "nodes=" << res.nodes_explored << "\n";
    PointSet set(r.space.size());
    for (const Line& l : res.witness) {
        std::cout << "witness dir=" << vec_str(l.dir.rep) << " base=" << l.base << " points=" << codes_str(l.points)
                  << "\n";
        for (point_t pt : l.points) set.insert(pt);
    }
    if (!res.witness.empty()) std::cout << "set=" << codes_str(set.to_sorted_codes()) << "\n";
    return res.status == SolveStatus::optimal ? 0 : 2;
}

int run_verify(const Resolved& r, const std::string& points_path) {
    const std::vector<point_t> codes = load_point_file(points_path);
    PointSet set(r.space.size());
    for (point_t c : codes) {
        if (c >= r.space.size())
            throw std::invalid_argument("point code " + std::to_string(c) + " outside F^n of size " +
                                        std::to_string(r.space.size()));
        set.insert(c);
    }
    VerifyResult res = is_kakeya(r.space, set, r.classes);
    print_instance_header(std::cout, "verify", r);
    std::cout << "points=" << set.size() << "\n";
    std::cout << "ok=" << (res.ok ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < res.classes.size(); ++i) {
        if (res.witness[i])
            std::cout << "witness dir=" << vec_str(res.classes[i].rep) << " base=" << res.witness[i]->base
                      << " points=" << codes_str(res.witness[i]->points) << "\n";
        else
            std::cout << "missing dir=" << vec_str(res.classes[i].rep) << "\n";
    }
    return 0;
}

int run_construct(const Resolved& r, std::uint64_t seed, const std::string& csv_path) {
    Construction c = build_random_kakeya(r.space, r.classes, seed);
    print_instance_header(std::cout, "construct", r);
    std::cout << "# seed=" << seed << "\n";
    std::cout << "# bases=" << codes_str(c.bases) << "\n";
    std::cout << "# trajectory=";
    for (std::size_t i = 0; i < c.trajectory.size(); ++i) std::cout << (i ? "," : "") << c.trajectory[i];
    std::cout << "\n";
    std::cout << "# size=" << c.set.size() << "\n";
    write_point_file(std::cout, c.set);
    if (!csv_path.empty()) {
        std::ofstream out = open_output(csv_path);
        write_point_file(out, c.set);
    }
    return 0;
}

int run_mc(const Resolved& r, std::uint64_t trials, std::uint64_t seed, unsigned threads,
           const std::string& csv_path) {
    MonteCarlo mc = monte_carlo(r.space, r.classes, trials, seed, threads);
    const Rational expected = expected_union_size_closed(r.space.field().q(), r.space.dim(), r.m_exact);
    const double theta = expected.to_double();
    print_instance_header(std::cout, "mc", r);
    std::cout << "# seed=" << seed << " trials=" << trials << "\n";
    std::cout << "trials=" << trials << "\n";
    std::cout << "mean=" << fmt(mc.mean) << "\n";
    std::cout << "sample_variance=" << fmt(mc.sample_variance) << "\n";
    std::cout << "std_error=" << fmt(mc.std_error) << "\n";
    std::cout << "theta_M=" << fmt(theta) << "\n";
    std::cout << "abs_error=" << fmt(std::abs(mc.mean - theta)) << "\n";
    for (const auto& [size, count] : mc.histogram) std::cout << "histogram size=" << size << " count=" << count << "\n";
    if (!csv_path.empty()) {
        std::ofstream out = open_output(csv_path);
        out << "size,count\n";
        for (const auto& [size, count] : mc.histogram) out << size << "," << count << "\n";
    }
    return 0;
}

struct SweepArgs {
    std::optional<std::uint64_t> trials;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::optional<std::uint64_t> node_budget;
    unsigned threads = 1;
    std::optional<std::string> eps_grid;
    std::string csv_path;
};

int run_sweep(const Resolved& r, const SweepArgs& args) {
    const std::uint32_t q = r.space.field().q();
    const unsigned n = r.space.dim();
    BoundsReport rep = bounds_report(q, n, r.m_exact);

    std::optional<MonteCarlo> mc;
    if (args.trials) {
        if (!args.seed_set) throw ParseError("sweep with --trials is randomized and requires --seed");
        mc = monte_carlo(r.space, r.classes, *args.trials, args.seed, args.threads);
    }
    std::optional<ExactResult> exact;
    if (args.node_budget) {
        ExactOptions opt;
        opt.node_budget = *args.node_budget;
        opt.threads = args.threads;
        exact = exact_min_kakeya(r.space, r.classes, opt);
    }
    std::vector<std::optional<EpsilonBounds>> eps_rows;
    if (args.eps_grid) {
        for (double eps : parse_eps_grid(*args.eps_grid)) eps_rows.emplace_back(epsilon_bounds(q, n, eps));
    } else {
        eps_rows.emplace_back(std::nullopt);
    }

    std::ostringstream csv;
    csv << "p,m,q,n,M_exact,M_paper,lb_paper,lb_integer,theta_M,ub_existence,ub_paper,"
           "eps,Delta,ub_eps,mc_mean,mc_stderr,exact_min,exact_status\n";
    for (const auto& eps : eps_rows) {
        csv << r.inst.p << "," << r.inst.m << "," << q << "," << n << "," << r.m_exact << ","
            << fmt(r.m_paper.to_double()) << "," << fmt(rep.lb_paper) << "," << rep.lb_integer << ","
            << fmt(rep.theta_m) << "," << rep.ub_existence << "," << fmt(rep.ub_paper) << ",";
        if (eps) csv << fmt(eps->eps) << "," << fmt(eps->delta) << "," << fmt(eps->ub_eps);
        else csv << ",,";
        csv << ",";
        if (mc) csv << fmt(mc->mean) << "," << fmt(mc->std_error);
        else csv << ",";
        csv << ",";
        if (exact && exact->status == SolveStatus::optimal) csv << exact->min_size << ",optimal";
        else if (exact) csv << ",budget_exceeded";
        else csv << ",";
        csv << "\n";
    }

    if (args.trials) std::cout << "# seed=" << args.seed << "\n";
    std::cout << csv.str();
    if (!args.csv_path.empty()) {
        std::ofstream out = open_output(args.csv_path);
        out << csv.str();
    }
    return exact && exact->status == SolveStatus::budget_exceeded ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local finite-field Kakeya sets: build, verify, bound, and solve exactly"};
    app.require_subcommand(1);
    std::function<int()> run;

    // field-info
    {
        auto* cmd = app.add_subcommand("field-info", "print field parameters and operation tables");
        auto p = std::make_shared<std::uint32_t>(0);
        auto m = std::make_shared<std::uint32_t>(1);
        cmd->add_option("--p", *p, "field characteristic (prime)")->required();
        cmd->add_option("--m", *m, "extension degree (default 1)");
        cmd->callback([&run, p, m] { run = [p, m] { return run_field_info(*p, *m); }; });
    }
    // bounds
    {
        auto* cmd = app.add_subcommand("bounds", "size bounds for one instance");
        auto ia = std::make_shared<InstanceArgs>();
        ia->attach(cmd);
        auto eps = std::make_shared<std::string>();
        cmd->add_option("--eps-grid", *eps, "corollary grid A:B:STEP over eps");
        cmd->callback([&run, cmd, ia, eps] {
            run = [cmd, ia, eps] {
                Resolved r = resolve_instance(ia->resolve(cmd));
                return run_bounds(r, eps->empty() ? std::nullopt : std::optional<std::string>(*eps));
            };
        });
    }
    // exact
    {
        auto* cmd = app.add_subcommand("exact", "exact minimum size by branch and bound");
        auto ia = std::make_shared<InstanceArgs>();
        ia->attach(cmd);
        auto opt = std::make_shared<ExactOptions>();
        opt->node_budget = 100000000ull;  // desk-scale default
        auto no_fix = std::make_shared<bool>(false);
        cmd->add_option("--node-budget", opt->node_budget, "search node budget (default 1e8)");
        cmd->add_flag("--no-fix-translation", *no_fix, "search all cosets of the first class too");
        cmd->add_option("--threads", opt->threads, "worker threads (default 1)");
        cmd->callback([&run, cmd, ia, opt, no_fix] {
            run = [cmd, ia, opt, no_fix] {
                opt->fix_translation = !*no_fix;
                Resolved r = resolve_instance(ia->resolve(cmd));
                return run_exact(r, *opt);
            };
        });
    }
    // verify
    {
        auto* cmd = app.add_subcommand("verify", "check the defining property for a point-set file");
        auto ia = std::make_shared<InstanceArgs>();
        ia->attach(cmd);
        auto points = std::make_shared<std::string>();
        cmd->add_option("points", *points, "point-set file (one code per line, ascending)")->required();
        cmd->callback([&run, cmd, ia, points] {
            run = [cmd, ia, points] {
                Resolved r = resolve_instance(ia->resolve(cmd));
                return run_verify(r, *points);
            };
        });
    }
    // construct
    {
        auto* cmd = app.add_subcommand("construct", "randomized line-union construction");
        auto ia = std::make_shared<InstanceArgs>();
        ia->attach(cmd);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto csv = std::make_shared<std::string>();
        cmd->add_option("--seed", *seed, "master seed (required)")->required();
        cmd->add_option("--csv", *csv, "also write the point-set file here");
        cmd->callback([&run, cmd, ia, seed, csv] {
            run = [cmd, ia, seed, csv] {
                Resolved r = resolve_instance(ia->resolve(cmd));
                return run_construct(r, *seed, *csv);
            };
        });
    }
    // mc
    {
        auto* cmd = app.add_subcommand("mc", "Monte Carlo estimate of the random-union size");
        auto ia = std::make_shared<InstanceArgs>();
        ia->attach(cmd);
        auto trials = std::make_shared<std::uint64_t>(0);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto threads = std::make_shared<unsigned>(1);
        auto csv = std::make_shared<std::string>();
        cmd->add_option("--trials", *trials, "number of trials")->required();
        cmd->add_option("--seed", *seed, "master seed (required)")->required();
        cmd->add_option("--threads", *threads, "worker threads (default 1)");
        cmd->add_option("--csv", *csv, "write the size histogram as CSV here");
        cmd->callback([&run, cmd, ia, trials, seed, threads, csv] {
            run = [cmd, ia, trials, seed, threads, csv] {
                Resolved r = resolve_instance(ia->resolve(cmd));
                return run_mc(r, *trials, *seed, *threads, *csv);
            };
        });
    }
    // sweep
    {
        auto* cmd = app.add_subcommand("sweep", "one CSV row per eps with every computed quantity");
        auto ia = std::make_shared<InstanceArgs>();
        ia->attach(cmd);
        auto args = std::make_shared<SweepArgs>();
        auto trials = std::make_shared<std::uint64_t>(0);
        auto budget = std::make_shared<std::uint64_t>(0);
        auto eps = std::make_shared<std::string>();
        cmd->add_option("--trials", *trials, "Monte Carlo trials (requires --seed)");
        cmd->add_option("--seed", args->seed, "master seed for --trials");
        cmd->add_option("--node-budget", *budget, "run the exact solver under this budget");
        cmd->add_option("--threads", args->threads, "worker threads (default 1)");
        cmd->add_option("--eps-grid", *eps, "corollary grid A:B:STEP over eps");
        cmd->add_option("--csv", args->csv_path, "also write the CSV here");
        cmd->callback([&run, cmd, ia, args, trials, budget, eps] {
            run = [cmd, ia, args, trials, budget, eps] {
                if (cmd->count("--trials")) args->trials = *trials;
                if (cmd->count("--node-budget")) args->node_budget = *budget;
                if (cmd->count("--eps-grid")) args->eps_grid = *eps;
                args->seed_set = cmd->count("--seed") > 0;
                Resolved r = resolve_instance(ia->resolve(cmd));
                return run_sweep(r, *args);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
