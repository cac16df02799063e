// Copyright 2026 graphweaver Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphweaver/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "graphweaver/errors.hpp"
#include "graphweaver/graph_model.hpp"
#include "graphweaver/linear_optics.hpp"
#include "graphweaver/qubus_model.hpp"
#include "graphweaver/schedule_io.hpp"
#include "graphweaver/simulate.hpp"
#include "graphweaver/weave_planner.hpp"
#include "json.hpp"

namespace gw::cli {

namespace {

/// Bad user input; maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot write '" + path + "'");
    f << text;
}

bool ends_with(const std::string &s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

GraphSpec load_graph(const std::string &file, const std::string &lattice) {
    if (!lattice.empty() && !file.empty())
        throw InputError("give either a graph file or --lattice, not both");
    if (!lattice.empty())
        return make_lattice(parse_lattice(lattice));
    if (file.empty())
        throw InputError("no graph given: pass a graph file or --lattice");
    auto text = read_file(file);
    if (ends_with(file, ".dot") || ends_with(file, ".gv"))
        return parse_dot(text);
    return parse_edge_list(text);
}

std::size_t default_capacity() {
    if (const char *env = std::getenv(kCapacityEnv)) {
        try {
            std::size_t pos = 0;
            auto v = std::stoul(env, &pos);
            if (pos == std::string(env).size() && v > 0)
                return v;
        } catch (const std::exception &) {
        }
        throw InputError(std::string(kCapacityEnv) + " must be a positive integer, got '" + env + "'");
    }
    return kDefaultCapacity;
}

template <typename T>
std::vector<T> parse_list(const std::string &text, const char *what) {
    std::vector<T> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty())
            continue;
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size() || v < 0)
                throw InputError("");
            out.push_back(static_cast<T>(v));
        } catch (const std::exception &) {
            throw InputError(std::string("malformed ") + what + " list '" + text + "'");
        }
    }
    return out;
}

// "v", "a,b,c" or "start:stop:count" (inclusive linspace).
std::vector<double> parse_range(const std::string &text, const char *name) {
    auto number = [&](const std::string &s) {
        try {
            std::size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos != s.size() || !std::isfinite(v))
                throw InputError("");
            return v;
        } catch (const std::exception &) {
            throw InputError(std::string("malformed range for --") + name + ": '" + text + "'");
        }
    };
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ':');)
            parts.push_back(p);
        if (parts.size() != 3)
            throw InputError(std::string("malformed range for --") + name + ": '" + text + "' (want start:stop:count)");
        double a = number(parts[0]);
        double b = number(parts[1]);
        double count = number(parts[2]);
        if (count < 1 || count != std::floor(count))
            throw InputError(std::string("range count for --") + name + " must be a positive integer");
        auto n = static_cast<std::size_t>(count);
        for (std::size_t i = 0; i < n; i++)
            out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
        return out;
    }
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');)
        out.push_back(number(p));
    if (out.empty())
        throw InputError(std::string("empty range for --") + name);
    return out;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

int cmd_plan(const std::string &file, const std::string &lattice, const std::vector<std::string> &blocks,
             const std::string &output, std::ostream &out) {
    GraphSpec g = load_graph(file, lattice);
    PlannerOptions opts;
    for (const auto &b : blocks) {
        std::vector<VertexId> chain;
        std::stringstream ss(b);
        for (std::string v; std::getline(ss, v, ',');)
            chain.push_back(v);
        opts.blocks.push_back(std::move(chain));
    }
    auto schedule = plan_schedule(g, opts);
    emit(schedule_to_json(schedule), output, out);
    return kExitOk;
}

int cmd_count(const std::string &lattice, const std::string &schedule_file, bool as_json, std::ostream &out) {
    if (lattice.empty() && schedule_file.empty())
        throw InputError("count needs --lattice or --schedule");
    nlohmann::ordered_json doc;
    std::vector<std::pair<std::string, std::string>> rows;
    if (!lattice.empty()) {
        auto kind = parse_lattice(lattice);
        GraphSpec g = make_lattice(kind);
        doc["lattice"] = lattice_name(kind);
        doc["edges"] = g.num_edges();
        rows.emplace_back("lattice", lattice_name(kind));
        rows.emplace_back("edges", std::to_string(g.num_edges()));
        if (const auto *cu = std::get_if<Cubic>(&kind)) {
            if (cu->n < 2)
                throw InputError("operation-count formulas need cubic:N with N >= 2");
            auto c = formula_counts(static_cast<std::int64_t>(cu->n));
            doc["cascade"] = c.cascade_ops;
            doc["box"] = c.box_ops;
            doc["direct"] = c.direct_ops;
            rows.emplace_back("cascade", std::to_string(c.cascade_ops));
            rows.emplace_back("box", std::to_string(c.box_ops));
            rows.emplace_back("direct", std::to_string(c.direct_ops));
        }
        if (schedule_file.empty()) {
            auto planned = count_operations(plan_schedule(g));
            doc["planned_schedule_ops"] = planned;
            rows.emplace_back("planned_schedule_ops", std::to_string(planned));
        }
    }
    if (!schedule_file.empty()) {
        auto s = schedule_from_json(read_file(schedule_file));
        auto ops = count_operations(s);
        doc["schedule_ops"] = ops;
        rows.emplace_back("schedule_ops", std::to_string(ops));
    }
    if (as_json) {
        out << doc.dump(2) << "\n";
    } else {
        for (const auto &[k, v] : rows) {
            out << k;
            for (std::size_t i = k.size(); i < 22; i++)
                out << ' ';
            out << v << "\n";
        }
    }
    return kExitOk;
}

struct SimulateArgs {
    std::string schedule_file;
    std::string backend = "auto";
    std::uint64_t seed = 0;
    std::size_t capacity = 0;
    std::string forced_outcomes;
    std::string forced_bits;
    bool check_preconditions = false;
    bool qnd_errors = false;
    double alpha_sin_theta = 4.0;
    double gamma_theta = 10.0;
    double theta = 0.01;
    double eta = 1.0;
    bool timing = false;
    std::string output;
};

int cmd_simulate(const SimulateArgs &a, std::ostream &out, std::ostream &err) {
    auto s = schedule_from_json(read_file(a.schedule_file));
    RunOptions opts;
    opts.capacity = a.capacity ? a.capacity : default_capacity();
    opts.forced_outcomes = parse_list<std::int64_t>(a.forced_outcomes, "--force-outcomes");
    opts.forced_detach_bits = parse_list<int>(a.forced_bits, "--force-detach");
    for (int b : opts.forced_detach_bits)
        if (b > 1)
            throw InputError("--force-detach takes bits 0 or 1");
    opts.entangler.check_preconditions = a.check_preconditions;
    opts.entangler.qnd_errors = a.qnd_errors;
    try {
        opts.entangler.qubus = QubusParams::from_products(a.alpha_sin_theta, a.gamma_theta, a.theta, a.eta);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }

    Backend backend;
    if (a.backend == "vector") {
        backend = Backend::Vector;
    } else if (a.backend == "symbolic") {
        backend = Backend::Symbolic;
    } else {
        backend = s.vertices.size() + 1 <= opts.capacity ? Backend::Vector : Backend::Symbolic;
    }
    RunReport report;
    try {
        report = run_schedule(s, backend, a.seed, opts);
    } catch (const CapacityError &e) {
        err << "graphweaver: " << e.what() << "\n"
            << "hint: rerun with --backend symbolic, or raise the cap with --capacity / " << kCapacityEnv << "\n";
        return kExitCapacity;
    }
    emit(run_report_to_json(report, a.timing), a.output, out);
    return kExitOk;
}

struct SweepArgs {
    std::string theta = "0.01";
    std::string gamma_theta = "10";
    std::string alpha_sin_theta = "5";
    std::string eta = "1";
    std::string output;
};

int cmd_qnd_sweep(const SweepArgs &a, std::ostream &out) {
    auto thetas = parse_range(a.theta, "theta");
    auto gts = parse_range(a.gamma_theta, "gamma-theta");
    auto asts = parse_range(a.alpha_sin_theta, "alpha-sin-theta");
    auto etas = parse_range(a.eta, "eta");
    std::string csv = "alpha,theta,gamma,eta,formula,sum_linearized,sum_cosine\n";
    for (double t : thetas) {
        for (double gt : gts) {
            for (double ast : asts) {
                for (double e : etas) {
                    QubusParams p;
                    try {
                        p = QubusParams::from_products(ast, gt, t, e);
                    } catch (const std::invalid_argument &ex) {
                        throw InputError(ex.what());
                    }
                    csv += fmt_double(p.alpha) + "," + fmt_double(p.theta) + "," + fmt_double(p.gamma) + "," +
                           fmt_double(p.eta) + "," + fmt_double(qnd_error_formula(p)) + "," +
                           fmt_double(qnd_error_sum(p, ProbeModel::Linearized)) + "," +
                           fmt_double(qnd_error_sum(p, ProbeModel::Cosine)) + "\n";
                }
            }
        }
    }
    emit(csv, a.output, out);
    return kExitOk;
}

int cmd_linear(std::size_t n, std::uint64_t trials, std::uint64_t seed, const std::string &output,
               std::ostream &out) {
    LinearTrialConfig cfg;
    cfg.string_length = n;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.capacity = default_capacity();
    LinearStringReport r;
    try {
        r = simulate_string(cfg);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    emit(linear_report_to_json(r), output, out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"graphweaver: plan and simulate spider-photon weaving of photonic graph states"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "graphweaver 0.1.0");

    std::string graph_file, lattice, output, schedule_file;
    std::vector<std::string> blocks;
    bool as_json = false;

    auto *plan = app.add_subcommand("plan", "Decompose a graph into spider trails and emit a schedule (JSON)");
    plan->add_option("graph", graph_file, "Edge-list file (or .dot/.gv)");
    plan->add_option("--lattice", lattice, "square:RxC, honeycomb:RxC or cubic:N");
    plan->add_option("--block", blocks, "Pre-linked chain a,b,c emitted as a prepare_block step (repeatable)");
    plan->add_option("-o,--output", output, "Output file (default stdout)");

    auto *count = app.add_subcommand("count", "Entangler-operation counts");
    count->add_option("--lattice", lattice, "Lattice; cubic:N also prints the closed-form counts");
    count->add_option("--schedule", schedule_file, "Schedule JSON to count");
    count->add_flag("--json", as_json, "Emit JSON instead of a table");

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "Execute a schedule and report outcomes (JSON)");
    simulate->add_option("schedule", sim.schedule_file, "Schedule JSON")->required();
    simulate->add_option("--backend", sim.backend, "vector, symbolic or auto")
        ->check(CLI::IsMember({"vector", "symbolic", "auto"}));
    simulate->add_option("--seed", sim.seed, "RNG seed");
    simulate->add_option("--capacity", sim.capacity, "Max state-vector qubits (default 22 or $GRAPHWEAVER_CAPACITY)");
    simulate->add_option("--force-outcomes", sim.forced_outcomes, "Comma list of photon numbers for entangler passes");
    simulate->add_option("--force-detach", sim.forced_bits, "Comma list of spider measurement bits");
    simulate->add_flag("--check-preconditions", sim.check_preconditions, "Verify the anchored form before each link");
    simulate->add_flag("--qnd-errors", sim.qnd_errors, "Let the QND detector miss photons");
    simulate->add_option("--alpha-sin-theta", sim.alpha_sin_theta, "Qubus alpha*sin(theta)");
    simulate->add_option("--gamma-theta", sim.gamma_theta, "QND probe gamma*theta");
    simulate->add_option("--theta", sim.theta, "XPM phase theta");
    simulate->add_option("--eta", sim.eta, "Detector efficiency");
    simulate->add_flag("--timing", sim.timing, "Include wall_time_s in the report");
    simulate->add_option("-o,--output", sim.output, "Output file (default stdout)");

    SweepArgs sweep;
    auto *qnd = app.add_subcommand("qnd-sweep", "QND error probability over a parameter grid (CSV)");
    qnd->add_option("--theta", sweep.theta, "theta range: v, a,b,c or start:stop:count");
    qnd->add_option("--gamma-theta", sweep.gamma_theta, "gamma*theta range");
    qnd->add_option("--alpha-sin-theta", sweep.alpha_sin_theta, "alpha*sin(theta) range");
    qnd->add_option("--eta", sweep.eta, "detector efficiency range");
    qnd->add_option("-o,--output", sweep.output, "Output file (default stdout)");

    std::size_t string_length = 3;
    std::uint64_t trials = 100000, seed = 0;
    auto *linear = app.add_subcommand("linear", "Monte-Carlo of the linear-optics cascade entangler (JSON)");
    linear->add_option("--n", string_length, "Photons in the string");
    linear->add_option("--trials", trials, "String attempts");
    linear->add_option("--seed", seed, "RNG seed");
    linear->add_option("-o,--output", output, "Output file (default stdout)");

    auto *dot = app.add_subcommand("dot", "Print a graph as DOT");
    dot->add_option("graph", graph_file, "Edge-list file (or .dot/.gv)");
    dot->add_option("--lattice", lattice, "square:RxC, honeycomb:RxC or cubic:N");
    dot->add_option("-o,--output", output, "Output file (default stdout)");

    std::vector<std::string> argv_store{"graphweaver"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &a : argv_store)
        argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << "graphweaver 0.1.0\n";
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "graphweaver: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (plan->parsed())
            return cmd_plan(graph_file, lattice, blocks, output, out);
        if (count->parsed())
            return cmd_count(lattice, schedule_file, as_json, out);
        if (simulate->parsed())
            return cmd_simulate(sim, out, err);
        if (qnd->parsed())
            return cmd_qnd_sweep(sweep, out);
        if (linear->parsed())
            return cmd_linear(string_length, trials, seed, output, out);
        if (dot->parsed()) {
            emit(to_dot(load_graph(graph_file, lattice)), output, out);
            return kExitOk;
        }
    } catch (const CapacityError &e) {
        err << "graphweaver: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const InputError &e) {
        err << "graphweaver: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument &e) {
        // GraphError, ParseError, PlanningError, ScheduleError
        err << "graphweaver: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error &e) {
        err << "graphweaver: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace gw::cli
