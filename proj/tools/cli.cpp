#include "cli.hpp"

#include "tricolor/build_info.hpp"
#include "tricolor/cutset.hpp"
#include "tricolor/dynamics.hpp"
#include "tricolor/entropy.hpp"
#include "tricolor/markov.hpp"
#include "tricolor/oracle.hpp"
#include "tricolor/peierls.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace tricolor::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kCommands{"enumerate", "sample",      "mixing",  "influence",  "flow-check",
                                         "cutsets",   "conductance", "entropy", "torpid-demo"};

json to_json(const RunConfig& c) {
    return json{{"command", c.command},
                {"kind", c.kind},
                {"d", c.d},
                {"n", c.n},
                {"q", c.q},
                {"rho", c.rho},
                {"seed", c.seed},
                {"cap", c.cap},
                {"max_states", c.max_states},
                {"exact_cap", c.exact_cap},
                {"max_iterations", c.max_iterations},
                {"threads", c.threads},
                {"out", c.out},
                {"bc", c.bc},
                {"steps", c.steps},
                {"thinning", c.thinning},
                {"start", c.start},
                {"input", c.input},
                {"chains", c.chains},
                {"sweeps", c.sweeps},
                {"widths", c.widths},
                {"entropy_n", c.entropy_n},
                {"m_values", c.m_values},
                {"list", c.list},
                {"with_tau", c.with_tau}};
}

json rational_json(const Rational& r) { return json{{"exact", format_rational(r)}, {"approx", to_double(r)}}; }

std::string big(const BigInt& x) { return x.str(); }

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::CapExceeded: return kCapRefused;
    case ErrorCode::PropertyViolation: return kPropertyViolation;
    default: return kInvalidConfig;
    }
}

void error_line(std::ostream& err, const std::string& code, const std::string& message, int exit_code) {
    err << json{{"error", code}, {"message", message}, {"exit_code", exit_code}}.dump() << '\n';
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::InvalidArgument, "cannot write " + path.string());
    f << text;
}

/// Report file, timestamp sidecar, and the echo on `out`.
void emit_report(const RunConfig& c, const std::string& provenance, json result, std::ostream& out, bool echo = true) {
    json report{{"command", c.command},
                {"build_id", kBuildId},
                {"provenance", provenance},
                {"config", to_json(c)},
                {"result", std::move(result)}};
    const std::string text = report.dump(2) + "\n";
    const fs::path dir(c.out);
    write_file(dir / (c.command + ".json"), text);
    write_file(dir / (c.command + ".meta.json"),
               json{{"report", c.command + ".json"}, {"written_at", utc_timestamp()}}.dump(2) + "\n");
    if (echo) out << text;
}

unsigned threads_of(const RunConfig& c) { return c.threads == 0 ? default_thread_count() : c.threads; }

std::shared_ptr<const Lattice> lattice_of(const RunConfig& c) {
    if (c.kind == "box") return Lattice::make(LatticeSpec::box(c.d, c.n));
    if (c.kind == "torus") return Lattice::make(LatticeSpec::torus(c.d, c.n));
    fail(ErrorCode::InvalidArgument, "kind must be box or torus (got " + c.kind + ")");
}

BoundaryCondition bc_of(const RunConfig& c, const Lattice& lattice) {
    BoundaryCondition bc;
    if (c.bc == "none") bc = BoundaryCondition::none();
    else if (c.bc == "odd-zero") bc = BoundaryCondition::odd_boundary_zero();
    else if (c.bc == "even-zero") bc = BoundaryCondition::even_boundary_zero();
    else if (c.bc == "odd-zero-center") bc = BoundaryCondition::odd_boundary_with_center(lattice, lattice.origin());
    else fail(ErrorCode::InvalidArgument, "bc must be none, odd-zero, even-zero or odd-zero-center (got " + c.bc + ")");
    bc.check_applicable(lattice, c.q);
    return bc;
}

Coloring read_coloring(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::InvalidArgument, "cannot read coloring file " + path);
    std::stringstream s;
    s << f.rdbuf();
    return deserialize(s.str());
}

json report_json(const PropertyReport& p) {
    json j;
    j["p1"] = p.p1 ? json(*p.p1) : json(nullptr);
    j["p2"] = p.p2;
    j["p3"] = p.p3;
    j["p4"] = p.p4;
    j["p5"] = p.p5;
    j["size_identity"] = p.size_identity;
    j["p8a"] = p.p8a ? json(*p.p8a) : json(nullptr);
    j["minimal"] = p.minimal;
    j["two_layer"] = p.two_layer;
    return j;
}

// ---------------------------------------------------------------- commands

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
    const auto lat = lattice_of(c);
    const auto bc = bc_of(c, *lat);
    const BigInt count = count_colorings(*lat, c.q, bc, c.cap, threads_of(c));
    json result{{"lattice", describe(lat->spec())}, {"bc", bc.describe()}, {"count", big(count)}};
    if (c.list) {
        std::ofstream f(fs::path(c.out) / "colorings.txt", std::ios::binary);
        long long written = 0;
        for_each_coloring(
            *lat, c.q, bc,
            [&](std::span<const std::uint8_t> colors) {
                f << serialize(Coloring(lat, c.q, colors));
                ++written;
            },
            c.cap);
        result["listed"] = written;
        result["list_file"] = "colorings.txt";
    }
    emit_report(c, "exact", std::move(result), out);
    return kOk;
}

int cmd_sample(const RunConfig& c, std::ostream& out) {
    const auto lat = lattice_of(c);
    Coloring chi0 = c.input.empty()
                        ? phase_coloring(lat, c.start == "odd" ? Parity::Odd : Parity::Even, 1, c.q)
                        : read_coloring(c.input);
    if (!c.input.empty() && chi0.lattice().spec() != lat->spec())
        fail(ErrorCode::InvalidArgument, "input coloring lattice does not match the configured lattice");
    if (c.input.empty() && c.start != "even" && c.start != "odd")
        fail(ErrorCode::InvalidArgument, "start must be even or odd (got " + c.start + ")");
    if (!c.input.empty()) chi0 = Coloring(lat, chi0.q(), chi0.colors());
    ChainSpec spec;
    spec.q = c.q;
    spec.rho = parse_rational(c.rho);
    spec.seed = c.seed;
    const long long steps = c.steps > 0 ? c.steps : 100LL * lat->size();
    const long long thin = c.thinning > 0 ? c.thinning : lat->size();
    const auto traj = run_chain(spec, chi0, steps, thin, c.input.empty() ? "phase-" + c.start : c.input);
    const std::string csv = "sample_seed" + std::to_string(c.seed) + "_" +
                            (c.input.empty() ? "phase-" + c.start : fs::path(c.input).stem().string()) + ".csv";
    {
        std::ofstream f(fs::path(c.out) / csv, std::ios::binary);
        write_trajectory_csv(f, traj);
    }
    const auto& last = traj.records.back();
    emit_report(c, "simulated",
                json{{"lattice", describe(lat->spec())},
                     {"steps", steps},
                     {"thinning", thin},
                     {"records", traj.records.size()},
                     {"final_imbalance", last.imbalance},
                     {"final_class", to_string(last.cls)},
                     {"trajectory_file", csv}},
                out);
    return kOk;
}

json conductance_json(const ConductanceReport& r) {
    json j{{"pi_A", rational_json(r.pi_a)},
           {"pi_odd", rational_json(r.pi_odd)},
           {"pi_M", rational_json(r.pi_m)},
           {"bound", r.bound ? rational_json(*r.bound) : json("infinity")},
           {"bound_infinite", !r.bound.has_value()},
           {"pi_A_at_most_half", r.pi_a_at_most_half},
           {"classes_symmetric", r.classes_symmetric}};
    if (r.tau) j["tau"] = *r.tau;
    if (r.bound_holds) j["bound_holds"] = *r.bound_holds;
    return j;
}

MixingResult mixing_of(const RunConfig& c, const StateSpace& states, const TransitionMatrix& p) {
    MixingOptions opt;
    opt.max_iterations = c.max_iterations;
    opt.exact_state_cap = c.exact_cap;
    opt.threads = threads_of(c);
    return tv_mixing_time(p, states, opt);
}

int cmd_mixing(const RunConfig& c, std::ostream& out) {
    const auto lat = lattice_of(c);
    const auto bc = bc_of(c, *lat);
    const StateSpace states(lat, c.q, bc, c.cap);
    require(states.size() > 0, "the state space is empty");
    const auto p = transition_matrix(states, MatrixLimits{c.max_states});
    const auto checks = check_matrix(p);
    const auto mix = mixing_of(c, states, p);
    json result{{"lattice", describe(lat->spec())},
                {"bc", bc.describe()},
                {"states", states.size()},
                {"matrix",
                 {{"symmetric", checks.symmetric},
                  {"stochastic", checks.stochastic},
                  {"uniform_stationary", checks.uniform_stationary},
                  {"connected", checks.connected},
                  {"components", checks.components}}},
                {mix.exact ? "tau_exact" : "tau_float", mix.tau},
                {"arithmetic", mix.exact ? "exact" : "float"},
                {"worst_start", mix.worst_start},
                {"starts_iterated", mix.starts},
                {"symmetry_reduced", mix.symmetry_reduced},
                {"tv_at_tau", mix.tv_at_tau},
                {"tv_after_tau", mix.tv_after_tau}};
    if (!mix.exact) {
        result["error_budget"] = mix.error_budget;
        result["decided"] = mix.decided;
    }
    bool ok = checks.symmetric && checks.stochastic && checks.uniform_stationary;
    if (lat->is_torus() && bc.is_none()) {
        const auto rho = parse_rational(c.rho);
        const auto cond = conductance_bound(states, rho, mix.tau);
        const json cj = conductance_json(cond);
        for (const auto& [k, v] : cj.items()) result[k] = v;
        const auto block = single_site_blocking(states, p, rho);
        result["blocking"] = {{"moves", block.moves},
                              {"even_to_odd", block.even_to_odd},
                              {"max_imbalance_change", block.max_imbalance_change},
                              {"blocked", block.blocked()}};
        if (cond.bound_holds && !*cond.bound_holds) ok = false;
    }
    emit_report(c, mix.exact ? "exact" : "float", std::move(result), out);
    return ok ? kOk : kPropertyViolation;
}

int cmd_conductance(const RunConfig& c, std::ostream& out) {
    const auto lat = lattice_of(c);
    require(lat->is_torus(), "conductance needs a torus");
    const StateSpace states(lat, c.q, {}, c.cap);
    std::optional<long long> tau;
    if (c.with_tau) {
        const auto p = transition_matrix(states, MatrixLimits{c.max_states});
        tau = mixing_of(c, states, p).tau;
    }
    const auto cond = conductance_bound(states, parse_rational(c.rho), tau);
    json result = conductance_json(cond);
    result["states"] = states.size();
    emit_report(c, "exact", std::move(result), out);
    return cond.bound_holds && !*cond.bound_holds ? kPropertyViolation : kOk;
}

int cmd_influence(const RunConfig& c, std::ostream& out) {
    require(c.kind == "box", "influence needs --kind box");
    require(c.q == 3, "influence is defined for q = 3");
    const auto lat = lattice_of(c);
    const auto r = influence_ratio(lat, lat->origin(), c.cap, threads_of(c));
    json hist = json::object();
    for (const auto& [size, count] : r.by_size) hist[std::to_string(size)] = big(count);
    emit_report(c, "exact",
                json{{"lattice", describe(lat->spec())},
                     {"with_center", big(r.with_center)},
                     {"total", big(r.total)},
                     {"ratio", rational_json(r.ratio)},
                     {"histogram_by_cutset_size", hist}},
                out);
    return kOk;
}

int cmd_flow_check(const RunConfig& c, std::ostream& out) {
    require(c.kind == "box", "flow-check needs --kind box");
    require(c.q == 3, "flow-check is defined for q = 3");
    const auto lat = lattice_of(c);
    const Vertex v0 = lat->origin();
    std::ofstream lines(fs::path(c.out) / "flow-check.jsonl", std::ios::binary);
    long long id = 0, all_ok = 0;
    for_each_coloring(
        *lat, 3, BoundaryCondition::odd_boundary_with_center(*lat, v0),
        [&](std::span<const std::uint8_t> colors) {
            const Coloring chi(lat, 3, colors);
            const auto cut = build_box_cutset(chi, v0);
            const auto region = ShiftRegion::of(cut);
            const auto a = Approximation::exact(region).set;
            const auto dir = select_direction(*lat, region, a);
            const auto cert = flow_certificate(*lat, region, a, dir.s);
            const auto total = flow_out_total(chi, region, cert);
            const bool closed_ok = total.closed_form == 1 && (!total.explicit_sum || *total.explicit_sum == 1);
            const bool round_ok = total.roundtrip_ok && total.proper_ok;
            if (closed_ok && round_ok) ++all_ok;
            const json line{{"chi_id", id++},
                            {"s", dir.s.value()},
                            {"|W^s|", cert.layer.count()},
                            {"|C|", cert.c.count()},
                            {"|D|", cert.d.count()},
                            {"nu_total", format_rational(total.explicit_sum ? *total.explicit_sum : total.closed_form)},
                            {"nu_summed", total.explicit_sum.has_value()},
                            {"closed_form_ok", closed_ok},
                            {"roundtrip_ok", round_ok}};
            lines << line.dump() << '\n';
            out << line.dump() << '\n';
        },
        c.cap);
    emit_report(c, "exact",
                json{{"lattice", describe(lat->spec())},
                     {"colorings", id},
                     {"all_ok", all_ok == id},
                     {"lines_file", "flow-check.jsonl"}},
                out, false);
    return all_ok == id ? kOk : kPropertyViolation;
}

int cmd_cutsets(const RunConfig& c, std::ostream& out) {
    require(c.q == 3, "cutsets are defined for q = 3");
    const auto lat = lattice_of(c);
    std::ofstream lines(fs::path(c.out) / "cutsets.jsonl", std::ios::binary);
    long long id = 0, cutsets = 0, asserted = 0, violations = 0, reported_only_failures = 0;
    auto handle = [&](const Coloring& chi) {
        std::vector<std::pair<Cutset, bool>> list;  // cutset, properties asserted
        if (lat->is_torus()) {
            const auto family = select_family(chi);
            for (auto& cut : build_torus_cutsets(chi)) {
                bool member = false;
                for (const auto& f : family.cutsets)
                    if (f.seed_parity == cut.seed_parity && f.region == cut.region) member = true;
                const bool assert_it = member || cut.interior_is_region();
                list.emplace_back(std::move(cut), assert_it);
            }
        } else {
            list.emplace_back(build_box_cutset(chi, lat->origin()), true);
        }
        for (const auto& [cut, assert_it] : list) {
            const auto props = verify_properties(cut, chi);
            const bool ok = props.asserted_hold();
            ++cutsets;
            if (assert_it) {
                ++asserted;
                if (!ok) ++violations;
            } else if (!ok) {
                ++reported_only_failures;
            }
            const json line{{"chi_id", id},
                            {"size", cut.size()},
                            {"|W|", cut.region.count()},
                            {"|W_E|", (cut.region & lat->even()).count()},
                            {"|W_O|", (cut.region & lat->odd()).count()},
                            {"parity", cut.seed_parity == Parity::Even ? "even" : "odd"},
                            {"interior_size", cut.interior.count()},
                            {"asserted", assert_it},
                            {"properties", report_json(props)}};
            lines << line.dump() << '\n';
            out << line.dump() << '\n';
        }
        ++id;
    };
    if (!c.input.empty()) {
        const Coloring chi = read_coloring(c.input);
        if (chi.lattice().spec() != lat->spec())
            fail(ErrorCode::InvalidArgument, "input coloring lattice does not match the configured lattice");
        handle(Coloring(lat, 3, chi.colors()));
    } else {
        const auto bc = lat->is_torus() ? BoundaryCondition::none()
                                        : BoundaryCondition::odd_boundary_with_center(*lat, lat->origin());
        for_each_coloring(
            *lat, 3, bc, [&](std::span<const std::uint8_t> colors) { handle(Coloring(lat, 3, colors)); }, c.cap);
    }
    emit_report(c, "exact",
                json{{"lattice", describe(lat->spec())},
                     {"colorings", id},
                     {"cutsets", cutsets},
                     {"asserted", asserted},
                     {"violations", violations},
                     {"reported_only_failures", reported_only_failures},
                     {"lines_file", "cutsets.jsonl"}},
                out, false);
    return violations == 0 ? kOk : kPropertyViolation;
}

int cmd_entropy(const RunConfig& c, std::ostream& out) {
    const auto topo = topological_entropy_estimate(c.d, c.widths);
    json counts = json::array();
    for (const auto& x : topo.counts) counts.push_back(big(x));
    json result{{"base", "nats"},
                {"topological",
                 {{"d", topo.d},
                  {"widths", topo.widths},
                  {"counts", counts},
                  {"per_site", topo.per_site},
                  {"aitken", topo.aitken},
                  {"estimate", topo.estimate},
                  {"spread", topo.spread},
                  {"bounds_ok", topo.bounds_ok}}}};
    bool ok = topo.bounds_ok;
    json gaps = json::array();
    if (c.d >= 2) {
        for (int m : c.m_values) {
            const auto g = max_entropy_gap_check(c.d, c.entropy_n, m, threads_of(c));
            ok = ok && g.all_hold();
            gaps.push_back({{"n", g.n},
                            {"m", g.m},
                            {"inner_boundary", g.inner_boundary},
                            {"colorings", big(g.colorings)},
                            {"extendable", big(g.extendable)},
                            {"c_star", big(g.c_star)},
                            {"support_total", big(g.support_total)},
                            {"support", g.support},
                            {"entropy", g.entropy},
                            {"entropy_lower", g.entropy_lower},
                            {"sums_to_one", g.sums_to_one},
                            {"support_in_extendable", g.support_in_extendable},
                            {"grouped_by_boundary", g.grouped_by_boundary},
                            {"entropy_bound", g.entropy_bound},
                            {"max_probability_bound", g.max_probability_bound},
                            {"c_star_mass", g.c_star_mass},
                            {"c_star_dominates", g.c_star_dominates}});
        }
    }
    result["gap_checks"] = gaps;
    emit_report(c, "exact", std::move(result), out);
    return ok ? kOk : kPropertyViolation;
}

/// Nearest-rank quantile of sorted values.
int nearest_rank(const std::vector<int>& sorted, double p) {
    const auto n = static_cast<long long>(sorted.size());
    long long rank = static_cast<long long>(std::ceil(p * static_cast<double>(n)));
    rank = std::clamp<long long>(rank, 1, n);
    return sorted[static_cast<std::size_t>(rank - 1)];
}

int cmd_torpid(const RunConfig& c, std::ostream& out) {
    require(c.kind == "torus", "torpid-demo runs on a torus");
    require(c.chains >= 1 && c.sweeps >= 1, "torpid-demo needs at least one chain and one sweep");
    const auto lat = lattice_of(c);
    const Coloring chi0 = phase_coloring(lat, Parity::Even, 1, c.q);
    const auto rho = parse_rational(c.rho);
    const long long sweep = lat->size();
    std::vector<Trajectory> trajs(static_cast<std::size_t>(c.chains));
    parallel_for(trajs.size(), threads_of(c), [&](std::size_t i) {
        ChainSpec spec;
        spec.q = c.q;
        spec.rho = rho;
        spec.seed = c.seed;
        spec.stream = i;
        trajs[i] = run_chain(spec, chi0, c.sweeps * sweep, sweep, "even-phase");
    });
    const fs::path dir = fs::path(c.out) / "torpid-chains";
    fs::create_directories(dir);
    std::vector<int> finals, minima;
    int flipped = 0;
    json per_chain = json::array();
    for (std::size_t i = 0; i < trajs.size(); ++i) {
        std::ostringstream name;
        name << "chain_" << std::setw(2) << std::setfill('0') << i << "_seed" << c.seed << "_even-phase.csv";
        std::ofstream f(dir / name.str(), std::ios::binary);
        write_trajectory_csv(f, trajs[i]);
        int lo = trajs[i].records.front().imbalance;
        bool odd_heavy = false;
        for (const auto& r : trajs[i].records) {
            lo = std::min(lo, r.imbalance);
            if (r.cls == ImbalanceClass::OddHeavy) odd_heavy = true;
        }
        const bool flip = lo < 0;
        if (flip) ++flipped;
        finals.push_back(trajs[i].records.back().imbalance);
        minima.push_back(lo);
        per_chain.push_back({{"chain", i},
                             {"file", "torpid-chains/" + name.str()},
                             {"final_imbalance", trajs[i].records.back().imbalance},
                             {"min_imbalance", lo},
                             {"sign_flip", flip},
                             {"reached_odd_heavy", odd_heavy}});
    }
    std::sort(finals.begin(), finals.end());
    json quantiles = json::object();
    for (double p : {0.05, 0.25, 0.5, 0.75, 0.95}) {
        std::ostringstream key;
        key << "q" << std::setw(2) << std::setfill('0') << static_cast<int>(std::lround(p * 100));
        quantiles[key.str()] = nearest_rank(finals, p);
    }
    emit_report(c, "simulated",
                json{{"lattice", describe(lat->spec())},
                     {"start", "0 on even, 1 on odd"},
                     {"chains", c.chains},
                     {"sweeps", c.sweeps},
                     {"sweep_steps", sweep},
                     {"sign_flip_fraction", rational_json(Rational(flipped, c.chains))},
                     {"final_imbalance_quantiles", quantiles},
                     {"per_chain", per_chain}},
                out);
    return kOk;
}

int dispatch(const RunConfig& c, std::ostream& out) {
    if (c.command == "enumerate") return cmd_enumerate(c, out);
    if (c.command == "sample") return cmd_sample(c, out);
    if (c.command == "mixing") return cmd_mixing(c, out);
    if (c.command == "influence") return cmd_influence(c, out);
    if (c.command == "flow-check") return cmd_flow_check(c, out);
    if (c.command == "cutsets") return cmd_cutsets(c, out);
    if (c.command == "conductance") return cmd_conductance(c, out);
    if (c.command == "entropy") return cmd_entropy(c, out);
    if (c.command == "torpid-demo") return cmd_torpid(c, out);
    fail(ErrorCode::InvalidArgument, "unknown command " + c.command);
}

}  // namespace

int parse(int argc, const char* const* argv, RunConfig& c, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and simulated analysis of proper 3-colourings of boxes and tori", "tricolor"};
    app.set_config("--config", "", "key = value configuration file; flags win");
    app.add_option("command", c.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
    app.add_option("--kind", c.kind, "Lattice kind: box or torus")->check(CLI::IsMember({"box", "torus"}));
    app.add_option("--d", c.d, "Dimension");
    app.add_option("--n", c.n, "Box half-width or torus side");
    app.add_option("--q", c.q, "Number of colours");
    app.add_option("--rho", c.rho, "Class threshold as p/q");
    app.add_option("--seed", c.seed, "Random seed");
    app.add_option("--cap", c.cap, "Enumeration cap");
    app.add_option("--max-states", c.max_states, "Transition-matrix state cap");
    app.add_option("--exact-cap", c.exact_cap, "Exact TV arithmetic up to this many states");
    app.add_option("--max-iterations", c.max_iterations, "Mixing-time iteration cap");
    app.add_option("--threads", c.threads, "Worker threads (0 = available parallelism)");
    app.add_option("--out", c.out, "Output directory");
    app.add_option("--bc", c.bc, "Boundary condition: none, odd-zero, even-zero, odd-zero-center");
    app.add_option("--steps", c.steps, "Sampler steps (0 = 100 sweeps)");
    app.add_option("--thinning", c.thinning, "Record every this many steps (0 = one sweep)");
    app.add_option("--start", c.start, "Phase start: even or odd");
    app.add_option("--input", c.input, "Coloring file");
    app.add_option("--chains", c.chains, "Number of chains");
    app.add_option("--sweeps", c.sweeps, "Sweeps per chain");
    app.add_option("--widths", c.widths, "Box widths for the topological entropy")->delimiter(',');
    app.add_option("--entropy-n", c.entropy_n, "Inner box half-width for the entropy gap check");
    app.add_option("--m", c.m_values, "Outer box half-widths for the entropy gap check")->delimiter(',');
    app.add_flag("--list", c.list, "enumerate: also write every coloring");
    app.add_flag("--with-tau", c.with_tau, "conductance: also compute the exact mixing time");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        error_line(err, "invalid_config", e.what(), kInvalidConfig);
        return kInvalidConfig;
    }
    return -1;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        parse_rational(c.rho);
        std::error_code ec;
        fs::create_directories(c.out, ec);
        if (ec || !fs::is_directory(c.out))
            fail(ErrorCode::InvalidArgument, "cannot create output directory " + c.out);
        return dispatch(c, out);
    } catch (const Error& e) {
        const int code = exit_code_for(e.code());
        error_line(err, to_string(e.code()), e.what(), code);
        return code;
    } catch (const std::exception& e) {
        error_line(err, "failure", e.what(), kFailure);
        return kFailure;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    const int parsed = parse(argc, argv, c, out, err);
    if (parsed >= 0) return parsed;
    return run(c, out, err);
}

}  // namespace tricolor::cli
