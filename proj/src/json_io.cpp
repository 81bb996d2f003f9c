#include "prefdom/json_io.hpp"

#include <string>

namespace prefdom {

namespace {

nlohmann::ordered_json names_of(const std::vector<Index>& indices, const std::vector<std::string>& names)
{
    auto out = nlohmann::ordered_json::array();
    for (Index i : indices)
        out.push_back(names.at(static_cast<std::size_t>(i)));
    return out;
}

}  // namespace

nlohmann::ordered_json witness_json(const Profile& profile, const ConfigurationWitness& w)
{
    nlohmann::ordered_json roles = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < w.alternatives.size(); ++i)
        roles[std::string(1, static_cast<char>('a' + i))] =
            profile.alternative_names().at(static_cast<std::size_t>(w.alternatives[i]));
    nlohmann::ordered_json out;
    out["kind"] = std::string(to_string(w.kind));
    out["voters"] = names_of(w.voters, profile.voter_names());
    out["alternatives"] = names_of(w.alternatives, profile.alternative_names());
    out["roles"] = roles;
    return out;
}

nlohmann::ordered_json recognition_json(const Profile& profile, const RecognitionResult& result)
{
    nlohmann::ordered_json out;
    out["property"] = std::string(to_string(result.property));
    out["holds"] = result.holds;
    out["violation"] = result.violation ? witness_json(profile, *result.violation) : nlohmann::ordered_json();
    out["certificate"] =
        result.certificate ? names_of(*result.certificate, profile.voter_names()) : nlohmann::ordered_json();
    return out;
}

nlohmann::ordered_json outcome_json(const Profile& profile, const SolveOutcome& outcome, bool with_timing)
{
    const auto& names =
        outcome.mode == DeletionMode::Voters ? profile.voter_names() : profile.alternative_names();
    nlohmann::ordered_json out;
    out["feasible"] = outcome.feasible;
    out["mode"] = std::string(to_string(outcome.mode));
    out["property"] = std::string(to_string(outcome.property));
    out["k"] = outcome.k;
    out["size"] = outcome.size();
    out["deleted"] = names_of(outcome.deleted, names);
    out["method"] = std::string(to_string(outcome.method));
    out["explored"] = outcome.explored;
    out["elapsed_ms"] = with_timing ? outcome.elapsed_ms : 0.0;
    return out;
}

}  // namespace prefdom
