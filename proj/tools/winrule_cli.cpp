// Command-line front end: dataset generation, noise injection, redundancy
// estimation, single learning runs and learning-curve experiments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "winrule/plan_json.hpp"
#include "winrule/winrule.hpp"

namespace {

using namespace winrule;

struct InputOptions {
    std::string in = "-";
    std::string positive_class;

    std::optional<std::string> positive() const {
        if (positive_class.empty()) return std::nullopt;
        return positive_class;
    }
};

Dataset read_input(const InputOptions& opt) {
    if (opt.in == "-") return read_csv(std::cin, opt.positive());
    return load_csv(opt.in, opt.positive());
}

void write_output(const Dataset& data, const std::string& out) {
    if (out == "-") write_csv(data, std::cout);
    else save_csv(data, out);
}

void add_input(CLI::App* cmd, InputOptions& opt) {
    cmd->add_option("--in", opt.in, "Input CSV dataset ('-' for stdin)");
    cmd->add_option("--positive-class", opt.positive_class,
                    "Class value treated as positive (default: first declared)");
}

struct WindowOptions {
    std::string learner = "dos";
    std::string strategy = "none";
    std::size_t init_size = 100;
    std::size_t max_inc_size = 50;
    std::string alpha = "0";
    Seed seed = 0;

    WindowConfig config() const {
        WindowConfig c;
        c.init_size = init_size;
        c.max_inc_size = max_inc_size;
        c.alpha = Alpha::parse(alpha);
        c.seed = seed;
        c.validate();
        return c;
    }
};

void add_window(CLI::App* cmd, WindowOptions& opt) {
    cmd->add_option("--learner", opt.learner, "Base learner: dos | irip")->capture_default_str();
    cmd->add_option("--strategy", opt.strategy,
                    "Windowing: none | basic | integrative | noise-tolerant")
        ->capture_default_str();
    cmd->add_option("--init-size", opt.init_size, "Initial window size")->capture_default_str();
    cmd->add_option("--max-inc-size", opt.max_inc_size, "Maximum examples added per iteration")
        ->capture_default_str();
    cmd->add_option("--alpha", opt.alpha, "Significance tolerance (number or 'inf')")
        ->capture_default_str();
    cmd->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        auto token = text.substr(start, end == std::string::npos ? end : end - start);
        try {
            std::size_t used = 0;
            long long v = std::stoll(token, &used);
            if (used != token.size() || v < 1) throw std::invalid_argument(token);
            sizes.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw Error("--sizes expects comma-separated positive integers, got '" + text + "'");
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return sizes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rule induction with windowing"};
    app.require_subcommand(1);

    // generate krk
    auto* generate = app.add_subcommand("generate", "Generate a synthetic dataset");
    generate->require_subcommand(1);
    auto* gen_krk = generate->add_subcommand("krk", "KRK illegality, 18 boolean features");
    std::size_t krk_count = 10000;
    Seed krk_seed = 0;
    bool with_replacement = false;
    std::string gen_out = "-";
    gen_krk->add_option("--count", krk_count, "Number of positions")->capture_default_str();
    gen_krk->add_option("--seed", krk_seed, "Random seed")->capture_default_str();
    gen_krk->add_flag("--with-replacement", with_replacement, "Sample positions with replacement");
    gen_krk->add_flag("--full", "Emit all 262144 positions in enumeration order");
    gen_krk->add_option("--out", gen_out, "Output CSV ('-' for stdout)");

    // noise
    auto* noise = app.add_subcommand("noise", "Replace labels with random labels");
    InputOptions noise_in;
    double noise_level = 0.0;
    Seed noise_seed = 0;
    std::string noise_out = "-";
    add_input(noise, noise_in);
    noise->add_option("--level", noise_level, "Fraction of examples relabelled at random")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    noise->add_option("--seed", noise_seed, "Random seed")->capture_default_str();
    noise->add_option("--out", noise_out, "Output CSV ('-' for stdout)");

    // redundancy
    auto* redundancy = app.add_subcommand("redundancy", "Conditional population entropy estimate");
    InputOptions red_in;
    add_input(redundancy, red_in);

    // learn
    auto* learn_cmd = app.add_subcommand("learn", "Learn one theory and print it");
    InputOptions learn_in;
    WindowOptions learn_opt;
    add_input(learn_cmd, learn_in);
    add_window(learn_cmd, learn_opt);

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Run a learning-curve experiment");
    InputOptions exp_in;
    WindowOptions exp_opt;
    std::string plan_file, sizes_text, eval_text = "full", exp_out = "-";
    std::size_t repeats = 10;
    std::size_t exp_krk_count = 0;
    Seed exp_krk_seed = 0;
    add_input(experiment, exp_in);
    add_window(experiment, exp_opt);
    experiment->add_option("--plan", plan_file, "JSON plan file (replaces the flags below)");
    experiment->add_option("--krk", exp_krk_count,
                           "Draw data from a generated KRK sample of this size instead of --in");
    experiment->add_option("--krk-seed", exp_krk_seed, "Seed for --krk")->capture_default_str();
    experiment->add_option("--sizes", sizes_text, "Training sizes, e.g. 1000,5000,10000");
    experiment->add_option("--repeats", repeats, "Runs per size")->capture_default_str();
    experiment->add_option("--eval", eval_text, "full | file:<path>")->capture_default_str();
    experiment->add_option("--out", exp_out, "Results CSV ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            Dataset d = gen_krk->count("--full") > 0
                            ? krk::enumeration()
                            : krk::generate(krk_count, krk_seed, with_replacement);
            write_output(d, gen_out);
        } else if (noise->parsed()) {
            write_output(inject_noise(read_input(noise_in), {noise_level, noise_seed}), noise_out);
        } else if (redundancy->parsed()) {
            const auto r = compute_redundancy(read_input(red_in));
            std::printf("cpe %.6f\nmax_cpe %.6f\nred %.6f\n", r.cpe, r.max_cpe, r.red);
        } else if (learn_cmd->parsed()) {
            const Dataset data = read_input(learn_in);
            const auto outcome = learn(data, parse_learner(learn_opt.learner),
                                       parse_strategy(learn_opt.strategy), learn_opt.config());
            std::cout << format_theory(outcome.theory, data);
            std::cerr << "rules " << outcome.theory.size() << ", training accuracy "
                      << accuracy(outcome.theory, data) << ", iterations "
                      << outcome.windowing.iterations() << ", processed examples "
                      << outcome.windowing.processed_examples() << '\n';
        } else if (experiment->parsed()) {
            ExperimentPlan plan;
            if (!plan_file.empty()) {
                plan = load_plan(plan_file);
            } else {
                if (exp_krk_count > 0) plan.source = KrkSource{exp_krk_count, exp_krk_seed, false};
                else if (exp_in.in != "-") plan.source = FileSource{exp_in.in};
                else throw Error("experiment needs --plan, --in <csv> or --krk <count>");
                plan.positive_class = exp_in.positive();
                plan.learner = parse_learner(exp_opt.learner);
                plan.strategy = parse_strategy(exp_opt.strategy);
                if (sizes_text.empty()) throw Error("--sizes is required without --plan");
                plan.sizes = parse_sizes(sizes_text);
                plan.repeats = repeats;
                plan.window = exp_opt.config();
                plan.eval = EvalTarget::parse(eval_text);
            }
            warning_sink() = {};
            const auto records = run_plan(plan);
            if (exp_out == "-") write_results(records, std::cout);
            else emit_results(records, exp_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
