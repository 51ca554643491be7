#include "cli.hpp"

#include "chordcut/certificate.hpp"
#include "chordcut/errors.hpp"
#include "chordcut/facet.hpp"
#include "chordcut/inequality.hpp"
#include "chordcut/solver.hpp"
#include "chordcut/tight_set.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace chordcut::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
    int k = 0;
    int q = 0;
    int lift = 0;
    int kmax = 0;
    std::string method = "structured";
    std::string format = "text";
    bool count = false;

    std::string path;
    std::vector<std::string> cuts{"triangle", "chorded"};
    int max_k = 5;
    std::string separation = "exhaustive";
    std::uint64_t seed = 1;
    int restarts = 16;
    bool brute = false;
    std::size_t max_cuts = 64;
    std::size_t node_limit = 100000;
};

TightMethod parse_method(const std::string& name)
{
    return name == "brute" ? TightMethod::brute : TightMethod::structured;
}

Json witness_json(const FaceReport& r)
{
    if (!r.witness) return nullptr;
    return Json{{"kind", to_string(r.witness->kind)},
                {"holds", r.witness->holds},
                {"value", to_string(r.witness->value)}};
}

Json report_json(const FaceReport& r)
{
    return Json{{"k", r.k},
                {"q", r.q},
                {"method", to_string(r.method)},
                {"tight_count", r.tight_count},
                {"face_dimension", r.face_dimension},
                {"ambient_dimension", r.ambient_dimension},
                {"predicted_facet", r.predicted_facet},
                {"observed_facet", r.observed_facet},
                {"cross_checked", r.cross_checked},
                {"witness", witness_json(r)}};
}

// Blocks of a binary clique partition vector.
Partition partition_of(const EdgeVector& x)
{
    const int n = x.node_count();
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    for (Node i = 0; i < n; ++i)
        for (Node j = i + 1; j < n; ++j)
            if (x.at(Edge{i, j}) == 1) label[j] = std::min(label[j], label[i]);
    return Partition::from_labels(label);
}

int cmd_gen(const Options& o, std::ostream& out)
{
    Inequality ineq = chorded_cycle_inequality(o.k, o.q);
    if (o.lift) {
        if (o.lift < o.k) throw std::invalid_argument("--lift must be at least k");
        ineq = zero_lift(ineq, o.lift);
    }
    out << format_inequality(ineq);
    return ok;
}

int cmd_certificate(const Options& o, std::ostream& out)
{
    const CgCertificate cert = cg_certificate(o.k, o.q);
    out << format_certificate(cert);
    out << "verified=" << (verify_certificate(cert, chorded_cycle_inequality(o.k, o.q)) ? "true" : "false") << '\n';
    return ok;
}

int cmd_verify_facet(const Options& o, std::ostream& out, std::ostream& err)
{
    const FaceReport r = verify_theorem(o.k, o.q, parse_method(o.method));
    if (o.format == "json") out << report_json(r).dump() << '\n';
    else out << format_face_report(r);
    if (!r.agrees()) {
        err << "facet status disagrees with the predicate for k=" << o.k << " q=" << o.q << '\n';
        return mismatch;
    }
    return ok;
}

int cmd_verify_sweep(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.kmax < 4) throw std::invalid_argument("--kmax must be at least 4");
    bool all = true;
    Json rows = Json::array();
    for (int k = 4; k <= o.kmax; ++k)
        for (int q = 2; 2 * q <= k; ++q) {
            const FaceReport r = verify_theorem(k, q, parse_method(o.method));
            if (o.format == "json") rows.push_back(report_json(r));
            else out << format_face_report_line(r) << '\n';
            if (!r.agrees()) {
                err << "facet status disagrees with the predicate for k=" << k << " q=" << q << '\n';
                all = false;
            }
        }
    if (o.format == "json") out << rows.dump() << '\n';
    return all ? ok : mismatch;
}

int cmd_tight(const Options& o, std::ostream& out)
{
    require_chord_parameters(o.k, o.q);
    const TightSet set = enumerate_tight(o.k, o.q, parse_method(o.method));
    if (o.count) {
        out << set.vertices.size() << '\n';
        return ok;
    }
    for (const auto& v : set.vertices) out << v.to_string() << ' ' << partition_of(v).to_string() << '\n';
    return ok;
}

int cmd_solve(const Options& o, std::ostream& out)
{
    std::ifstream in(o.path);
    if (!in) throw std::invalid_argument("cannot read instance file '" + o.path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const Instance inst = parse_instance(buffer.str());

    SolveResult result;
    if (o.brute) {
        result = brute_force_solve(inst);
    } else {
        BranchAndCutConfig config;
        config.triangle_cuts = std::find(o.cuts.begin(), o.cuts.end(), "triangle") != o.cuts.end();
        config.chorded_cuts = std::find(o.cuts.begin(), o.cuts.end(), "chorded") != o.cuts.end();
        config.chorded.max_k = o.max_k;
        config.chorded.mode = o.separation == "heuristic" ? SeparationMode::heuristic : SeparationMode::exhaustive;
        config.chorded.seed = o.seed;
        config.chorded.restarts = o.restarts;
        config.max_cuts_per_round = o.max_cuts;
        config.node_limit = o.node_limit;
        result = branch_and_cut(inst, config);
    }
    if (o.format == "json") {
        Json stats{{"nodes", result.stats.nodes},
                   {"lp_iterations", result.stats.lp_iterations},
                   {"triangle_cuts", result.stats.triangle_cuts},
                   {"chorded_cuts", result.stats.chorded_cuts},
                   {"separation_rounds", result.stats.separation_rounds},
                   {"max_depth", result.stats.max_depth}};
        Json bounds = Json::array();
        for (const auto& b : result.root_bounds) bounds.push_back(to_string(b));
        out << Json{{"optimum", to_string(result.optimum)},
                    {"partition", result.partition.to_string()},
                    {"stats", stats},
                    {"root_bounds", bounds}}
                   .dump()
            << '\n';
    } else {
        out << format_result(result);
    }
    return ok;
}

void add_kq(CLI::App* cmd, Options& o)
{
    cmd->add_option("--k", o.k, "Cycle length")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--q", o.q, "Chord length, 2 <= q <= k/2")->required()->check(CLI::PositiveNumber);
}

void add_format(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void add_method(CLI::App* cmd, Options& o)
{
    cmd->add_option("--method", o.method, "Tight-set enumeration")
        ->check(CLI::IsMember({"brute", "structured"}))
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Chorded cycle inequalities for clique partitioning: generation, certificates, facet checks "
                 "and an exact branch-and-cut solver."};
    app.name("chordcut");
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Print the q-chorded k-cycle inequality");
    add_kq(gen, o);
    gen->add_option("--lift", o.lift, "Zero-lift to this many nodes (>= k)");

    auto* cert = app.add_subcommand("certificate", "Print and check the Chvatal-Gomory certificate");
    add_kq(cert, o);

    auto* facet = app.add_subcommand("verify-facet", "Compare face dimension with the facet predicate");
    add_kq(facet, o);
    add_method(facet, o);
    add_format(facet, o);

    auto* sweep = app.add_subcommand("verify-sweep", "verify-facet for every (k,q) with 4 <= k <= kmax");
    sweep->add_option("--kmax", o.kmax, "Largest cycle length")->required();
    add_method(sweep, o);
    add_format(sweep, o);

    auto* tight = app.add_subcommand("tight", "List the tight vertices (bit vector and partition)");
    add_kq(tight, o);
    add_method(tight, o);
    tight->add_flag("--count", o.count, "Print only the number of tight vertices");

    auto* solve = app.add_subcommand("solve", "Solve a clique partitioning instance exactly");
    solve->add_option("path", o.path, "Instance file")->required();
    solve->add_option("--cuts", o.cuts, "Cut families, comma separated (triangle,chorded or none)")
        ->delimiter(',')
        ->check(CLI::IsMember({"triangle", "chorded", "none"}))
        ->capture_default_str();
    solve->add_option("--max-k", o.max_k, "Longest separated cycle")->capture_default_str();
    solve->add_option("--separation", o.separation, "Chorded separation mode")
        ->check(CLI::IsMember({"exhaustive", "heuristic"}))
        ->capture_default_str();
    solve->add_option("--seed", o.seed, "Seed for heuristic restarts")->capture_default_str();
    solve->add_option("--restarts", o.restarts, "Heuristic restarts")->capture_default_str();
    solve->add_option("--max-cuts", o.max_cuts, "Cuts added per round")->capture_default_str();
    solve->add_option("--node-limit", o.node_limit, "Branch-and-cut node budget")->capture_default_str();
    solve->add_flag("--brute", o.brute, "Enumerate all partitions instead (n <= 10)");
    add_format(solve, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*gen) return cmd_gen(o, out);
        if (*cert) return cmd_certificate(o, out);
        if (*facet) return cmd_verify_facet(o, out, err);
        if (*sweep) return cmd_verify_sweep(o, out, err);
        if (*tight) return cmd_tight(o, out);
        if (*solve) return cmd_solve(o, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return budget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::logic_error& e) {
        // Structured and brute-force tight sets disagree.
        err << "mismatch: " << e.what() << '\n';
        return mismatch;
    }
    return usage;
}

}  // namespace chordcut::cli
