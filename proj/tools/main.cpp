// Command-line harness: instance generation, exact fronts, NSGA-II runs,
// preference-based front reduction, and quality metrics.

#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "biatsp/errors.hpp"
#include "biatsp/exact.hpp"
#include "biatsp/io.hpp"
#include "biatsp/metrics.hpp"
#include "biatsp/moga.hpp"
#include "biatsp/reduction.hpp"

namespace fs = std::filesystem;
using namespace biatsp;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitGuard = 4;

int worker_count() {
    const char* env = std::getenv("BIATSP_WORKERS");
    if (!env) return 1;
    const int n = std::atoi(env);
    return n > 0 ? n : 1;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Instance load_instance(const fs::path& path) {
    if (!fs::exists(path)) throw input_error("no such file: " + path.string());
    if (path.extension() == ".atsp" || path.extension() == ".tsp") {
        std::ifstream in(path);
        return parse_tsplib(in);
    }
    return read_instance_json(path);
}

struct GenArgs {
    std::string series;
    int n = 0;
    std::string ranges;
    int count = 5;
    std::uint64_t seed = 1;
    std::string out;
    std::string tsplib;
};

void run_gen(const GenArgs& a) {
    fs::create_directories(a.out);
    std::array<std::int64_t, 4> r{1, 10, 1, 10};
    if (a.series == "random") {
        if (a.ranges.empty())
            throw std::invalid_argument("gen --series random requires --ranges lo1,hi1,lo2,hi2");
        std::istringstream in(a.ranges);
        char comma;
        if (!(in >> r[0] >> comma >> r[1] >> comma >> r[2] >> comma >> r[3]))
            throw std::invalid_argument("gen: --ranges must be four integers lo1,hi1,lo2,hi2");
    }
    if ((a.series == "random" || a.series == "contr") && a.n < 3)
        throw std::invalid_argument("gen: --n is required and must be >= 3");

    Instance base;
    if (a.series == "ftv") {
        if (a.tsplib.empty()) throw std::invalid_argument("gen --series ftv requires --tsplib");
        base = load_instance(a.tsplib);
        if (base.has_second_criterion())
            throw input_error("gen ftv: base file already carries two criteria");
    }

    for (int i = 1; i <= a.count; ++i) {
        const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(i) - 1;
        Instance inst;
        if (a.series == "random") {
            inst = generate_random(a.n, r[0], r[1], r[2], r[3], seed);
        } else if (a.series == "contr") {
            inst = generate_contradicting(a.n, seed);
        } else {
            inst = generate_ftv_derived(base, seed);
        }
        const std::string stem =
            a.series + std::to_string(inst.n) + "_" + std::to_string(i);
        inst.name = stem;
        const fs::path path = fs::path(a.out) / (stem + ".json");
        write_instance_json(inst, path);
        std::cerr << "wrote " << path.string() << "\n";
    }
}

struct SolveArgs {
    std::string instance;
    std::string crossover = "dec";
    int pop = 50;
    int iters = 1000;
    int tournament = 10;
    double pmut = 0.1;
    std::uint64_t seed = 1;
    std::string seed_range;
    std::string reference;
    std::string out;
};

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("--seed-range must look like A..B");
    try {
        const std::uint64_t a = std::stoull(text.substr(0, dots));
        const std::uint64_t b = std::stoull(text.substr(dots + 2));
        if (a > b) throw std::invalid_argument("--seed-range: A must not exceed B");
        return {a, b};
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("--seed-range must look like A..B");
    }
}

void run_solve(const SolveArgs& a) {
    const Instance inst = load_instance(a.instance);
    if (!inst.has_second_criterion())
        throw input_error("solve: instance carries a single criterion; derive the second first");
    fs::create_directories(a.out);

    Front reference;
    const bool has_reference = !a.reference.empty();
    if (has_reference) reference = read_front_csv(a.reference);

    std::uint64_t seed_from = a.seed, seed_to = a.seed;
    if (!a.seed_range.empty()) std::tie(seed_from, seed_to) = parse_seed_range(a.seed_range);

    MogaConfig cfg;
    cfg.population_size = a.pop;
    cfg.iterations = a.iters;
    cfg.tournament_size = a.tournament;
    cfg.mutation_probability = a.pmut;
    cfg.crossover = a.crossover == "dpx" ? Crossover::kDpx : Crossover::kDec;
    cfg.validate();

    const std::string stem = fs::path(a.instance).stem().string();
    const std::size_t n_tasks = static_cast<std::size_t>(seed_to - seed_from + 1);
    std::vector<std::string> summaries(n_tasks);
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
        for (std::size_t task = next.fetch_add(1); task < n_tasks; task = next.fetch_add(1)) {
            MogaConfig local = cfg;
            local.seed = seed_from + task;
            const RunReport report =
                biatsp::run(inst, local, has_reference ? &reference : nullptr);
            const std::string base = stem + "_s" + std::to_string(local.seed);
            write_front_csv(report.front, fs::path(a.out) / (base + ".front.csv"));
            write_text_file(fs::path(a.out) / (base + ".report.json"), report_to_json(report));
            std::ostringstream line;
            line << "seed " << local.seed << " front " << report.front.size() << " points";
            if (has_reference)
                line << " gd " << format_double(report.gd_trace.back()) << " igd "
                     << format_double(report.igd_trace.back());
            summaries[task] = line.str();
        }
    };

    const int workers = std::min<int>(worker_count(), static_cast<int>(n_tasks));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (const auto& s : summaries) std::cout << s << "\n";
}

struct ExactArgs {
    std::string instance;
    std::string method = "enum";
    std::string out;
    int limit = kEnumerationLimit;
};

void run_exact(const ExactArgs& a) {
    const Instance inst = load_instance(a.instance);
    const Front front =
        a.method == "dp" ? dp_pareto(inst) : enumerate_pareto(inst, a.limit);
    write_front_csv(front, a.out);
    std::cerr << "exact front: " << front.size() << " points -> " << a.out << "\n";
}

struct ReduceArgs {
    std::string front;
    std::string theta12;
    std::string theta21;
    bool sweep = false;
    std::string out = "-";
};

void emit(const std::string& text, const std::string& out) {
    if (out == "-") {
        std::cout << text;
    } else {
        write_text_file(out, text);
    }
}

void run_reduce(const ReduceArgs& a) {
    const Front front = read_front_csv(a.front);
    if (a.sweep) {
        std::vector<Rational> grid;
        for (int i = 1; i <= 9; ++i) grid.emplace_back(i, 10);
        emit(sweep_to_csv(theta_sweep(front, grid)), a.out);
        return;
    }
    if (a.theta12.empty() && a.theta21.empty())
        throw std::invalid_argument("reduce: provide --theta12 and/or --theta21, or --sweep");

    Front reduced;
    if (!a.theta12.empty() && !a.theta21.empty()) {
        const QuantumPair pair(Rational::parse(a.theta12), Rational::parse(a.theta21));
        reduced = reduce_double(front, pair);
    } else if (!a.theta12.empty()) {
        reduced = reduce_single(front, Quantum::from_theta(1, 2, Rational::parse(a.theta12)));
    } else {
        reduced = reduce_single(front, Quantum::from_theta(2, 1, Rational::parse(a.theta21)));
    }
    std::cerr << "kept " << reduced.size() << " of " << front.size() << " ("
              << format_double(exclusion_percentage(front, reduced)) << "% excluded)\n";
    emit(front_to_csv(reduced), a.out);
}

struct MetricsArgs {
    std::string approx;
    std::string reference;
};

void run_metrics(const MetricsArgs& a) {
    const Front approx = read_front_csv(a.approx);
    const Front reference = read_front_csv(a.reference);
    std::cout << "GD " << format_double(gd(approx, reference)) << "\n";
    std::cout << "IGD " << format_double(igd(approx, reference)) << "\n";
}

struct CompareArgs {
    std::string a;
    std::string b;
    std::string metric = "gd";
    double alpha = 0.05;
};

std::map<std::string, double> collect_finals(const fs::path& dir, const std::string& metric) {
    if (!fs::is_directory(dir)) throw input_error("not a directory: " + dir.string());
    std::map<std::string, double> finals;  // sorted by filename
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.size() < 12 || name.substr(name.size() - 12) != ".report.json") continue;
        const auto j = nlohmann::json::parse(read_text_file(entry.path()));
        const auto& value = j.at(metric == "gd" ? "final_gd" : "final_igd");
        if (value.is_null())
            throw input_error(name + ": no final " + metric +
                              " (solve must be run with --reference)");
        finals[name] = value.get<double>();
    }
    if (finals.empty()) throw input_error("no *.report.json files in " + dir.string());
    return finals;
}

void run_compare(const CompareArgs& a) {
    const auto fa = collect_finals(a.a, a.metric);
    const auto fb = collect_finals(a.b, a.metric);
    if (fa.size() != fb.size())
        throw input_error("compare: run counts differ (" + std::to_string(fa.size()) + " vs " +
                          std::to_string(fb.size()) + ")");
    std::vector<double> xs, ys;
    double mean_a = 0, mean_b = 0;
    for (auto ia = fa.begin(), ib = fb.begin(); ia != fa.end(); ++ia, ++ib) {
        xs.push_back(ia->second);
        ys.push_back(ib->second);
        mean_a += ia->second;
        mean_b += ib->second;
    }
    mean_a /= static_cast<double>(xs.size());
    mean_b /= static_cast<double>(ys.size());
    const WilcoxonResult w = wilcoxon_signed_rank(xs, ys, a.alpha);
    std::cout << "runs " << xs.size() << "\n";
    std::cout << "mean_a " << format_double(mean_a) << "\n";
    std::cout << "mean_b " << format_double(mean_b) << "\n";
    std::cout << "W " << format_double(w.statistic) << "\n";
    std::cout << "p " << format_double(w.p_value) << "\n";
    if (!w.conclusive) {
        std::cout << "verdict inconclusive (fewer than 6 non-zero differences)\n";
    } else if (w.significant) {
        std::cout << "verdict significant: " << (mean_a < mean_b ? "a" : "b")
                  << " has the better (smaller) mean " << a.metric << "\n";
    } else {
        std::cout << "verdict no significant difference at alpha "
                  << format_double(a.alpha) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bi-objective asymmetric TSP toolkit"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate instance files");
    gen->add_option("--series", gen_args.series, "random | contr | ftv")
        ->required()
        ->check(CLI::IsMember({"random", "contr", "ftv"}));
    gen->add_option("--n", gen_args.n, "vertex count (random/contr)");
    gen->add_option("--ranges", gen_args.ranges, "lo1,hi1,lo2,hi2 (random)");
    gen->add_option("--count", gen_args.count, "instances to write")->default_val(5);
    gen->add_option("--seed", gen_args.seed, "base seed")->default_val(1);
    gen->add_option("--out", gen_args.out, "output directory")->required();
    gen->add_option("--tsplib", gen_args.tsplib, "TSPLIB ATSP file (ftv)");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "run the genetic solver");
    solve->add_option("--instance", solve_args.instance)->required();
    solve->add_option("--crossover", solve_args.crossover)
        ->check(CLI::IsMember({"dec", "dpx"}))
        ->default_val("dec");
    solve->add_option("--pop", solve_args.pop)->default_val(50);
    solve->add_option("--iters", solve_args.iters)->default_val(1000);
    solve->add_option("--tournament", solve_args.tournament)->default_val(10);
    solve->add_option("--pmut", solve_args.pmut)->default_val(0.1);
    solve->add_option("--seed", solve_args.seed)->default_val(1);
    solve->add_option("--seed-range", solve_args.seed_range, "A..B runs one seed per value");
    solve->add_option("--reference", solve_args.reference, "reference front CSV for GD/IGD");
    solve->add_option("--out", solve_args.out, "output directory")->required();

    ExactArgs exact_args;
    auto* exact = app.add_subcommand("exact", "exact Pareto front");
    exact->add_option("--instance", exact_args.instance)->required();
    exact->add_option("--method", exact_args.method)
        ->check(CLI::IsMember({"enum", "dp"}))
        ->default_val("enum");
    exact->add_option("--limit", exact_args.limit)->default_val(kEnumerationLimit);
    exact->add_option("--out", exact_args.out, "front CSV path")->required();

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand("reduce", "preference-based front reduction");
    reduce->add_option("--front", reduce_args.front)->required();
    reduce->add_option("--theta12", reduce_args.theta12, "first criterion more important");
    reduce->add_option("--theta21", reduce_args.theta21, "second criterion more important");
    reduce->add_flag("--sweep", reduce_args.sweep, "full grid 0.1..0.9");
    reduce->add_option("--out", reduce_args.out, "output path, '-' for stdout")->default_val("-");

    MetricsArgs metrics_args;
    auto* metrics = app.add_subcommand("metrics", "GD / IGD of an approximation");
    metrics->add_option("--approx", metrics_args.approx)->required();
    metrics->add_option("--reference", metrics_args.reference)->required();

    CompareArgs compare_args;
    auto* compare = app.add_subcommand("compare", "Wilcoxon test over paired runs");
    compare->add_option("--a", compare_args.a)->required();
    compare->add_option("--b", compare_args.b)->required();
    compare->add_option("--metric", compare_args.metric)
        ->check(CLI::IsMember({"gd", "igd"}))
        ->default_val("gd");
    compare->add_option("--alpha", compare_args.alpha)->default_val(0.05);

    gen->callback([&]() { run_gen(gen_args); });
    solve->callback([&]() { run_solve(solve_args); });
    exact->callback([&]() { run_exact(exact_args); });
    reduce->callback([&]() { run_reduce(reduce_args); });
    metrics->callback([&]() { run_metrics(metrics_args); });
    compare->callback([&]() { run_compare(compare_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const guard_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitGuard;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
