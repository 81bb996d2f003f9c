#include "prefdom/cli.hpp"

#include "prefdom/json_io.hpp"
#include "prefdom/recognition.hpp"
#include "prefdom/reductions.hpp"
#include "prefdom/solvers.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace prefdom {

namespace {

struct RecognizeArgs {
    std::string property;
    std::string input;
    bool witness = false;
    bool json = false;
};

struct DistanceArgs {
    std::string property;
    std::string mode;
    std::string input;
    std::optional<std::size_t> k;
    std::string method = "auto";
    bool json = false;
    bool timing = false;
};

struct GenerateArgs {
    std::string reduction;
    std::string graph;
    std::string max2sat;
    std::optional<std::size_t> k;
    std::string output;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

DomainProperty property_arg(const std::string& name)
{
    if (auto p = parse_domain_property(name))
        return *p;
    throw UsageError("unknown property '" + name + "'");
}

std::string joined(const std::vector<Index>& indices, const std::vector<std::string>& names)
{
    std::string out;
    for (Index i : indices) {
        if (!out.empty())
            out += ' ';
        out += names.at(static_cast<std::size_t>(i));
    }
    return out.empty() ? "(none)" : out;
}

void describe_witness(std::ostream& out, const Profile& profile, const ConfigurationWitness& w)
{
    out << "violation: " << to_string(w.kind) << " on voters " << joined(w.voters, profile.voter_names())
        << "; roles";
    for (std::size_t i = 0; i < w.alternatives.size(); ++i)
        out << ' ' << static_cast<char>('a' + i) << '=' << profile.alternative_name(w.alternatives[i]);
    out << '\n';
}

int run_recognize(const RecognizeArgs& args, std::ostream& out)
{
    const DomainProperty property = property_arg(args.property);
    const Profile profile = read_profile_file(args.input);
    const RecognitionResult result = check(profile, property);
    if (args.json) {
        out << recognition_json(profile, result).dump(2) << '\n';
    } else {
        out << to_string(property) << ": " << (result.holds ? "holds" : "violated") << '\n';
        if (args.witness) {
            if (result.violation)
                describe_witness(out, profile, *result.violation);
            if (result.certificate)
                out << "certificate: " << joined(*result.certificate, profile.voter_names()) << '\n';
        }
    }
    return result.holds ? kExitYes : kExitNo;
}

int run_distance(const DistanceArgs& args, std::ostream& out)
{
    const DomainProperty property = property_arg(args.property);
    const auto mode = parse_deletion_mode(args.mode);
    if (!mode)
        throw UsageError("unknown mode '" + args.mode + "'");
    auto method = parse_method_choice(args.method);
    if (!method)
        throw UsageError("unknown method '" + args.method + "'");
    const bool poly_ok = property == DomainProperty::SingleCrossing && *mode == DeletionMode::Voters;
    if (*method == MethodChoice::Poly && !poly_ok)
        throw UsageError("--method poly only supports single-crossing with --mode voters");

    const Profile profile = read_profile_file(args.input);
    SolveOutcome outcome;
    if (!args.k) {
        outcome = min_distance(profile, property, *mode, *method);
    } else if (*method == MethodChoice::Brute) {
        outcome = brute_force(profile, property, *mode, *args.k);
    } else if (*method == MethodChoice::Fpt || !poly_ok) {
        outcome = fpt_branch(profile, property, *mode, *args.k);
    } else {
        outcome = min_distance(profile, property, *mode, MethodChoice::Poly);
        if (outcome.size() > *args.k) {
            outcome.feasible = false;
            outcome.deleted.clear();
            outcome.certificate.reset();
        }
        outcome.k = *args.k;
    }

    const auto& names = *mode == DeletionMode::Voters ? profile.voter_names() : profile.alternative_names();
    if (args.json) {
        out << outcome_json(profile, outcome, args.timing).dump(2) << '\n';
    } else {
        if (args.k)
            out << "feasible at k=" << *args.k << ": " << (outcome.feasible ? "yes" : "no") << '\n';
        else
            out << "distance: " << outcome.k << '\n';
        if (outcome.feasible)
            out << "deleted: " << joined(outcome.deleted, names) << '\n';
        out << "method: " << to_string(outcome.method) << ", explored " << outcome.explored << '\n';
        if (args.timing)
            out << "elapsed: " << outcome.elapsed_ms << " ms\n";
    }
    return !args.k || outcome.feasible ? kExitYes : kExitNo;
}

int run_generate(const GenerateArgs& args, std::ostream& out)
{
    const bool wants_graph = args.reduction != "max2sat-sc-ad";
    if (wants_graph && args.graph.empty())
        throw UsageError(args.reduction + " needs --graph");
    if (!wants_graph && args.max2sat.empty())
        throw UsageError("max2sat-sc-ad needs --max2sat");

    std::optional<Profile> profile;
    std::optional<std::size_t> derived_k;
    if (wants_graph) {
        const Graph g = read_graph_file(args.graph);
        if (args.reduction == "vc-value-md") {
            profile = vc_to_value_md(g);
        } else if (args.reduction == "vc-value-ad") {
            derived_k = args.k ? *args.k : oracle_vertex_cover(g);
            profile = vc_to_value_ad(g, *derived_k);
        } else if (args.reduction == "vc-beta-md") {
            profile = vc_to_beta_md(g);
        } else {
            profile = vc_to_beta_ad(g);
        }
    } else {
        auto reduced = max2sat_to_sc_ad(read_max2sat_file(args.max2sat));
        profile = std::move(reduced.profile);
        derived_k = reduced.k;
    }

    if (args.output.empty()) {
        if (derived_k)
            out << "# k=" << *derived_k << '\n';
        serialize_profile(*profile, out);
        return kExitYes;
    }
    std::ofstream file(args.output, std::ios::binary);
    if (!file)
        throw ParseError("cannot write '" + args.output + "'");
    serialize_profile(*profile, file);
    if (derived_k)
        out << "k=" << *derived_k << '\n';
    return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Preference domain recognition and deletion distances", "prefdom"};
    app.require_subcommand(1);

    RecognizeArgs rec;
    auto* recognize = app.add_subcommand("recognize", "Check whether a profile lies in a domain");
    recognize->add_option("--property", rec.property, "Domain property, e.g. single-peaked")->required();
    recognize->add_option("--input", rec.input, "Profile file")->required();
    recognize->add_flag("--witness", rec.witness, "Print the violation or certificate");
    recognize->add_flag("--json", rec.json, "Print the result as JSON");

    DistanceArgs dist;
    auto* distance = app.add_subcommand("distance", "Voters or alternatives to delete to reach a domain");
    distance->add_option("--property", dist.property, "Domain property")->required();
    distance->add_option("--mode", dist.mode, "voters or alternatives")->required();
    distance->add_option("--input", dist.input, "Profile file")->required();
    distance->add_option("--k", dist.k, "Decide feasibility for this budget instead of minimizing");
    distance->add_option("--method", dist.method, "auto, fpt, brute or poly");
    distance->add_flag("--json", dist.json, "Print the outcome as JSON");
    distance->add_flag("--timing", dist.timing, "Report wall-clock time");

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Build a profile from a graph or Max2Sat instance");
    generate->add_option("reduction", gen.reduction, "Reduction name")
        ->required()
        ->check(CLI::IsMember({"vc-value-md", "vc-value-ad", "vc-beta-md", "vc-beta-ad", "max2sat-sc-ad"}));
    generate->add_option("--graph", gen.graph, "Graph file");
    generate->add_option("--max2sat", gen.max2sat, "Max2Sat file");
    generate->add_option("--k", gen.k, "Budget for vc-value-ad (default: minimum vertex cover)");
    generate->add_option("--output", gen.output, "Write the profile here instead of standard output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitYes : kExitUsage;
    }

    try {
        if (recognize->parsed())
            return run_recognize(rec, out);
        if (distance->parsed())
            return run_distance(dist, out);
        return run_generate(gen, out);
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace prefdom
