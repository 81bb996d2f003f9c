#include "prefdom/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace prefdom {

std::string_view to_string(DeletionMode mode)
{
    return mode == DeletionMode::Voters ? "voters" : "alternatives";
}

std::optional<DeletionMode> parse_deletion_mode(std::string_view name)
{
    if (name == "voters")
        return DeletionMode::Voters;
    if (name == "alternatives")
        return DeletionMode::Alternatives;
    return std::nullopt;
}

std::string_view to_string(SolveMethod method)
{
    switch (method) {
    case SolveMethod::Poly: return "poly";
    case SolveMethod::Fpt: return "fpt";
    case SolveMethod::Brute: return "brute";
    }
    return "unknown";
}

std::string_view to_string(MethodChoice method)
{
    switch (method) {
    case MethodChoice::Auto: return "auto";
    case MethodChoice::Fpt: return "fpt";
    case MethodChoice::Brute: return "brute";
    case MethodChoice::Poly: return "poly";
    }
    return "unknown";
}

std::optional<MethodChoice> parse_method_choice(std::string_view name)
{
    for (auto m : {MethodChoice::Auto, MethodChoice::Fpt, MethodChoice::Brute, MethodChoice::Poly})
        if (to_string(m) == name)
            return m;
    return std::nullopt;
}

InclusionDag build_inclusion_dag(const std::vector<PreferenceOrder>& distinct_orders,
                                 const std::vector<std::size_t>& multiplicity)
{
    const std::size_t q = distinct_orders.size();
    if (multiplicity.size() != q)
        throw std::invalid_argument("multiplicity count does not match order count");
    for (std::size_t i = 0; i < q; ++i) {
        if (multiplicity[i] == 0)
            throw std::invalid_argument("multiplicities must be positive");
        if (distinct_orders[i].size() != distinct_orders[0].size())
            throw std::invalid_argument("orders over different alternative sets");
        for (std::size_t j = 0; j < i; ++j)
            if (distinct_orders[i] == distinct_orders[j])
                throw std::invalid_argument("duplicate order in inclusion DAG input");
    }

    InclusionDag dag{distinct_orders, multiplicity, std::vector<std::vector<DagArc>>(1 + q * q)};
    for (std::size_t z = 0; z < q; ++z) {
        dag.out[InclusionDag::kRoot].push_back({dag.vertex(z, z), multiplicity[z]});
        std::vector<ConflictPairSet> delta(q);
        for (std::size_t i = 0; i < q; ++i)
            delta[i] = conflict_pairs(distinct_orders[z], distinct_orders[i]);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                if (i != j && delta[i].is_subset_of(delta[j]))
                    dag.out[dag.vertex(z, i)].push_back({dag.vertex(z, j), multiplicity[j]});
    }
    return dag;
}

namespace {

// Longest path restricted to vertices whose order is allowed.
WeightedPath heaviest_path(const InclusionDag& dag, const std::vector<bool>& allowed)
{
    const std::size_t count = dag.out.size();
    std::vector<std::size_t> best(count, 0);
    std::vector<bool> done(count, false);
    auto usable = [&](std::size_t v) { return allowed[dag.order_of(v)] && allowed[dag.anchor_of(v)]; };

    std::function<std::size_t(std::size_t)> solve = [&](std::size_t v) -> std::size_t {
        if (done[v])
            return best[v];
        std::size_t value = 0;
        for (const auto& arc : dag.out[v])
            if (usable(arc.to))
                value = std::max(value, arc.weight + solve(arc.to));
        done[v] = true;
        return best[v] = value;
    };

    WeightedPath path;
    path.weight = solve(InclusionDag::kRoot);
    path.vertices.push_back(InclusionDag::kRoot);
    std::size_t v = InclusionDag::kRoot;
    while (best[v] > 0) {
        for (const auto& arc : dag.out[v])
            if (usable(arc.to) && arc.weight + best[arc.to] == best[v]) {
                v = arc.to;
                break;
            }
        path.vertices.push_back(v);
    }
    return path;
}

}  // namespace

WeightedPath max_weight_path(const InclusionDag& dag)
{
    return heaviest_path(dag, std::vector<bool>(dag.order_count(), true));
}

SingleCrossingSubset max_single_crossing_voters(const Profile& profile)
{
    const Dedup groups = dedup(profile);
    const std::size_t q = groups.distinct_orders.size();
    if (q == 0)
        return {};
    const InclusionDag dag = build_inclusion_dag(groups.distinct_orders, groups.multiplicity);

    std::vector<bool> allowed(q, true);
    std::vector<bool> decided(q, false);
    const std::size_t target = heaviest_path(dag, allowed).weight;
    // Drop groups greedily by smallest voter index while the optimum survives.
    for (std::size_t v = 0; v < profile.num_voters(); ++v) {
        const std::size_t g = groups.group_of_voter[v];
        if (decided[g])
            continue;
        decided[g] = true;
        allowed[g] = false;
        if (heaviest_path(dag, allowed).weight != target)
            allowed[g] = true;
    }

    const WeightedPath path = heaviest_path(dag, allowed);
    SingleCrossingSubset result;
    for (std::size_t p = 1; p < path.vertices.size(); ++p) {
        const auto& members = groups.voter_groups[dag.order_of(path.vertices[p])];
        result.order.insert(result.order.end(), members.begin(), members.end());
    }
    result.kept = result.order;
    std::sort(result.kept.begin(), result.kept.end());
    return result;
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::size_t domain_size(const Profile& profile, DeletionMode mode)
{
    return mode == DeletionMode::Voters ? profile.num_voters() : profile.num_alternatives();
}

Restriction remove(const Profile& profile, DeletionMode mode, const std::vector<Index>& deleted)
{
    auto keep = complement(domain_size(profile, mode), deleted);
    if (mode == DeletionMode::Voters)
        return restrict(profile, keep, std::nullopt);
    return restrict(profile, std::nullopt, keep);
}

SolveOutcome blank_outcome(DomainProperty property, DeletionMode mode, std::size_t k, SolveMethod method)
{
    SolveOutcome out;
    out.property = property;
    out.mode = mode;
    out.k = k;
    out.method = method;
    return out;
}

void finish_feasible(SolveOutcome& out, const Profile& profile, std::vector<Index> deleted)
{
    std::sort(deleted.begin(), deleted.end());
    out.feasible = true;
    out.deleted = std::move(deleted);
    out.certificate = check(remove(profile, out.mode, out.deleted).profile, out.property);
}

double binomial(std::size_t n, std::size_t r)
{
    double c = 1.0;
    for (std::size_t i = 0; i < r; ++i)
        c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return c;
}

// Tries every subset of exactly `size` elements in lexicographic order.
std::optional<std::vector<Index>> first_feasible_of_size(const Profile& profile, DomainProperty property,
                                                         DeletionMode mode, std::size_t size,
                                                         std::size_t& explored)
{
    const std::size_t total = domain_size(profile, mode);
    std::vector<Index> subset(size);
    for (std::size_t i = 0; i < size; ++i)
        subset[i] = static_cast<Index>(i);
    while (true) {
        ++explored;
        if (!find_violation(remove(profile, mode, subset).profile, property))
            return subset;
        // next combination
        std::size_t i = size;
        while (i > 0 && static_cast<std::size_t>(subset[i - 1]) == total - size + (i - 1))
            --i;
        if (i == 0)
            return std::nullopt;
        ++subset[i - 1];
        for (std::size_t j = i; j < size; ++j)
            subset[j] = subset[j - 1] + 1;
    }
}

void check_guard(std::size_t total, std::size_t k)
{
    double needed = 0.0;
    for (std::size_t j = 0; j <= k; ++j)
        needed += binomial(total, j);
    if (needed > kBruteForceSubsetLimit)
        throw GuardExceeded("brute force would enumerate " + std::to_string(static_cast<long long>(needed)) +
                            " subsets (limit " + std::to_string(static_cast<long long>(kBruteForceSubsetLimit)) + ")");
}

}  // namespace

SolveOutcome fpt_branch(const Profile& profile, DomainProperty property, DeletionMode mode, std::size_t k)
{
    const auto start = Clock::now();
    SolveOutcome out = blank_outcome(property, mode, k, SolveMethod::Fpt);
    std::set<std::vector<Index>> failed;
    std::vector<Index> deleted;

    std::function<bool(std::size_t)> search = [&](std::size_t budget) -> bool {
        ++out.explored;
        std::vector<Index> key = deleted;
        std::sort(key.begin(), key.end());
        if (failed.count(key))
            return false;
        const Restriction rest = remove(profile, mode, deleted);
        const auto witness = find_violation(rest.profile, property);
        if (!witness)
            return true;
        if (budget > 0) {
            const auto& members = mode == DeletionMode::Voters ? witness->voters : witness->alternatives;
            const auto& to_original = mode == DeletionMode::Voters ? rest.voter_map : rest.alternative_map;
            std::vector<Index> tried;
            for (Index local : members) {
                const Index x = to_original[static_cast<std::size_t>(local)];
                if (std::find(tried.begin(), tried.end(), x) != tried.end())
                    continue;
                tried.push_back(x);
                deleted.push_back(x);
                if (search(budget - 1))
                    return true;
                deleted.pop_back();
            }
        }
        failed.insert(std::move(key));
        return false;
    };

    if (search(std::min(k, domain_size(profile, mode))))
        finish_feasible(out, profile, deleted);
    out.elapsed_ms = millis_since(start);
    return out;
}

SolveOutcome brute_force(const Profile& profile, DomainProperty property, DeletionMode mode, std::size_t k)
{
    const auto start = Clock::now();
    const std::size_t total = domain_size(profile, mode);
    const std::size_t limit = std::min(k, total);
    check_guard(total, limit);
    SolveOutcome out = blank_outcome(property, mode, k, SolveMethod::Brute);
    for (std::size_t size = 0; size <= limit; ++size)
        if (auto found = first_feasible_of_size(profile, property, mode, size, out.explored)) {
            finish_feasible(out, profile, std::move(*found));
            break;
        }
    out.elapsed_ms = millis_since(start);
    return out;
}

SolveOutcome min_distance(const Profile& profile, DomainProperty property, DeletionMode mode, MethodChoice method)
{
    const bool poly_ok = property == DomainProperty::SingleCrossing && mode == DeletionMode::Voters;
    if (method == MethodChoice::Poly && !poly_ok)
        throw std::invalid_argument("poly method only supports single-crossing voter deletion");
    if (method == MethodChoice::Auto)
        method = poly_ok ? MethodChoice::Poly : MethodChoice::Fpt;

    const auto start = Clock::now();
    const std::size_t total = domain_size(profile, mode);

    if (method == MethodChoice::Poly) {
        const auto subset = max_single_crossing_voters(profile);
        SolveOutcome out = blank_outcome(property, mode, total - subset.kept.size(), SolveMethod::Poly);
        out.explored = 1;
        finish_feasible(out, profile, complement(total, subset.kept));
        out.elapsed_ms = millis_since(start);
        return out;
    }

    if (method == MethodChoice::Brute) {
        SolveOutcome out = blank_outcome(property, mode, 0, SolveMethod::Brute);
        for (std::size_t size = 0; size <= total; ++size) {
            check_guard(total, size);
            if (auto found = first_feasible_of_size(profile, property, mode, size, out.explored)) {
                out.k = size;
                finish_feasible(out, profile, std::move(*found));
                break;
            }
        }
        out.elapsed_ms = millis_since(start);
        return out;
    }

    std::size_t explored = 0;
    for (std::size_t k = 0;; ++k) {
        SolveOutcome out = fpt_branch(profile, property, mode, k);
        explored += out.explored;
        if (out.feasible || k >= total) {
            out.explored = explored;
            out.elapsed_ms = millis_since(start);
            return out;
        }
    }
}

}  // namespace prefdom
