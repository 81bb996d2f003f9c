#include "prefdom/profile.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace prefdom {

namespace {

std::vector<std::string> default_names(std::size_t count, const std::string& prefix)
{
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        names.push_back(prefix + std::to_string(i + 1));
    return names;
}

std::string strip_comment(const std::string& line)
{
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokenize(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token)
        tokens.push_back(token);
    return tokens;
}

long long parse_integer(const std::string& token, std::size_t line_no)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + token + "'");
    return value;
}

}  // namespace

PreferenceOrder::PreferenceOrder(std::vector<Index> ranking) : ranking_(std::move(ranking))
{
    rank_of_.assign(ranking_.size(), -1);
    for (std::size_t p = 0; p < ranking_.size(); ++p) {
        Index a = ranking_[p];
        if (a < 0 || static_cast<std::size_t>(a) >= ranking_.size() || rank_of_[static_cast<std::size_t>(a)] != -1)
            throw std::invalid_argument("ranking is not a permutation of 0..m-1");
        rank_of_[static_cast<std::size_t>(a)] = static_cast<Index>(p);
    }
}

PreferenceOrder PreferenceOrder::identity(std::size_t m)
{
    std::vector<Index> r(m);
    for (std::size_t i = 0; i < m; ++i)
        r[i] = static_cast<Index>(i);
    return PreferenceOrder(std::move(r));
}

PreferenceOrder PreferenceOrder::reversed() const
{
    return PreferenceOrder(std::vector<Index>(ranking_.rbegin(), ranking_.rend()));
}

Profile::Profile(std::size_t m, std::vector<PreferenceOrder> voters,
                 std::vector<std::string> alternative_names, std::vector<std::string> voter_names)
    : m_(m), voters_(std::move(voters)), alternative_names_(std::move(alternative_names)),
      voter_names_(std::move(voter_names))
{
    for (const auto& v : voters_)
        if (v.size() != m_)
            throw std::invalid_argument("voter ranks " + std::to_string(v.size()) + " alternatives, expected " +
                                        std::to_string(m_));
    if (alternative_names_.empty())
        alternative_names_ = default_names(m_, "");
    if (voter_names_.empty())
        voter_names_ = default_names(voters_.size(), "v");
    if (alternative_names_.size() != m_)
        throw std::invalid_argument("alternative name count does not match m");
    if (voter_names_.size() != voters_.size())
        throw std::invalid_argument("voter name count does not match n");
}

std::optional<Index> Profile::find_alternative(const std::string& name) const
{
    auto it = std::find(alternative_names_.begin(), alternative_names_.end(), name);
    if (it == alternative_names_.end())
        return std::nullopt;
    return static_cast<Index>(it - alternative_names_.begin());
}

std::optional<Index> Profile::find_voter(const std::string& name) const
{
    auto it = std::find(voter_names_.begin(), voter_names_.end(), name);
    if (it == voter_names_.end())
        return std::nullopt;
    return static_cast<Index>(it - voter_names_.begin());
}

bool operator==(const Profile& x, const Profile& y)
{
    return x.m_ == y.m_ && x.voters_ == y.voters_ && x.alternative_names_ == y.alternative_names_ &&
           x.voter_names_ == y.voter_names_;
}

ConflictPairSet::ConflictPairSet(std::size_t m) : m_(m)
{
    std::size_t slots = m < 2 ? 0 : m * (m - 1) / 2;
    words_.assign((slots + 63) / 64, 0);
}

std::size_t ConflictPairSet::slot(std::size_t m, Index a, Index b)
{
    auto lo = static_cast<std::size_t>(std::min(a, b));
    auto hi = static_cast<std::size_t>(std::max(a, b));
    // pairs (lo, *) start after all pairs with a smaller first element
    return lo * m - lo * (lo + 1) / 2 + (hi - lo - 1);
}

std::pair<Index, Index> ConflictPairSet::unslot(std::size_t m, std::size_t s)
{
    std::size_t lo = 0;
    std::size_t row = m - 1;
    while (s >= row) {
        s -= row;
        ++lo;
        --row;
    }
    return {static_cast<Index>(lo), static_cast<Index>(lo + 1 + s)};
}

void ConflictPairSet::insert(Index a, Index b)
{
    if (a == b)
        throw std::invalid_argument("conflict pair needs distinct endpoints");
    std::size_t s = slot(m_, a, b);
    std::uint64_t bit = std::uint64_t{1} << (s % 64);
    if (!(words_[s / 64] & bit)) {
        words_[s / 64] |= bit;
        ++count_;
    }
}

bool ConflictPairSet::contains(Index a, Index b) const
{
    if (a == b)
        return false;
    std::size_t s = slot(m_, a, b);
    return (words_[s / 64] >> (s % 64)) & 1U;
}

std::vector<std::pair<Index, Index>> ConflictPairSet::pairs() const
{
    std::vector<std::pair<Index, Index>> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            auto b = static_cast<std::size_t>(std::countr_zero(bits));
            out.push_back(unslot(m_, w * 64 + b));
            bits &= bits - 1;
        }
    }
    return out;
}

bool ConflictPairSet::is_subset_of(const ConflictPairSet& other) const
{
    if (count_ > other.count_)
        return false;
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w])
            return false;
    return true;
}

bool ConflictPairSet::intersects(const ConflictPairSet& other) const
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & other.words_[w])
            return true;
    return false;
}

ConflictPairSet ConflictPairSet::intersection(const ConflictPairSet& other) const
{
    ConflictPairSet out(m_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        out.words_[w] = words_[w] & other.words_[w];
        out.count_ += static_cast<std::size_t>(std::popcount(out.words_[w]));
    }
    return out;
}

std::optional<std::pair<Index, Index>> ConflictPairSet::first() const
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return unslot(m_, w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    return std::nullopt;
}

ConflictPairSet conflict_pairs(const PreferenceOrder& o1, const PreferenceOrder& o2)
{
    if (o1.size() != o2.size())
        throw std::invalid_argument("orders are over different numbers of alternatives");
    const std::size_t m = o1.size();
    ConflictPairSet out(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            auto ia = static_cast<Index>(a), ib = static_cast<Index>(b);
            if (o1.prefers(ia, ib) != o2.prefers(ia, ib))
                out.insert(ia, ib);
        }
    return out;
}

namespace {

std::vector<Index> checked_sorted_unique(const std::vector<Index>& indices, std::size_t bound, const char* what)
{
    std::vector<Index> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Index i : sorted)
        if (i < 0 || static_cast<std::size_t>(i) >= bound)
            throw std::out_of_range(std::string(what) + " index " + std::to_string(i) + " out of range");
    return sorted;
}

std::vector<Index> iota_indices(std::size_t n)
{
    std::vector<Index> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<Index>(i);
    return out;
}

}  // namespace

Restriction restrict(const Profile& profile, const std::optional<std::vector<Index>>& keep_voters,
                     const std::optional<std::vector<Index>>& keep_alternatives)
{
    Restriction out;
    out.voter_map = keep_voters ? checked_sorted_unique(*keep_voters, profile.num_voters(), "voter")
                                : iota_indices(profile.num_voters());
    out.alternative_map = keep_alternatives
                              ? checked_sorted_unique(*keep_alternatives, profile.num_alternatives(), "alternative")
                              : iota_indices(profile.num_alternatives());

    std::vector<Index> renumber(profile.num_alternatives(), -1);
    for (std::size_t i = 0; i < out.alternative_map.size(); ++i)
        renumber[static_cast<std::size_t>(out.alternative_map[i])] = static_cast<Index>(i);

    std::vector<PreferenceOrder> voters;
    std::vector<std::string> voter_names;
    voters.reserve(out.voter_map.size());
    for (Index v : out.voter_map) {
        std::vector<Index> ranking;
        ranking.reserve(out.alternative_map.size());
        for (Index a : profile.voter(static_cast<std::size_t>(v)).ranking())
            if (Index r = renumber[static_cast<std::size_t>(a)]; r >= 0)
                ranking.push_back(r);
        voters.emplace_back(std::move(ranking));
        voter_names.push_back(profile.voter_name(v));
    }
    std::vector<std::string> alternative_names;
    for (Index a : out.alternative_map)
        alternative_names.push_back(profile.alternative_name(a));

    out.profile = Profile(out.alternative_map.size(), std::move(voters), std::move(alternative_names),
                          std::move(voter_names));
    return out;
}

std::vector<Index> complement(std::size_t size, const std::vector<Index>& removed)
{
    std::vector<bool> gone(size, false);
    for (Index i : removed)
        if (i >= 0 && static_cast<std::size_t>(i) < size)
            gone[static_cast<std::size_t>(i)] = true;
    std::vector<Index> out;
    for (std::size_t i = 0; i < size; ++i)
        if (!gone[i])
            out.push_back(static_cast<Index>(i));
    return out;
}

Profile reverse_profile(const Profile& profile)
{
    std::vector<PreferenceOrder> voters;
    voters.reserve(profile.num_voters());
    for (const auto& v : profile.voters())
        voters.push_back(v.reversed());
    return Profile(profile.num_alternatives(), std::move(voters), profile.alternative_names(),
                   profile.voter_names());
}

Dedup dedup(const Profile& profile)
{
    Dedup out;
    std::map<std::vector<Index>, std::size_t> seen;
    out.group_of_voter.resize(profile.num_voters());
    for (std::size_t v = 0; v < profile.num_voters(); ++v) {
        const auto& order = profile.voter(v);
        auto [it, inserted] = seen.try_emplace(order.ranking(), out.distinct_orders.size());
        if (inserted) {
            out.distinct_orders.push_back(order);
            out.multiplicity.push_back(0);
            out.voter_groups.emplace_back();
        }
        ++out.multiplicity[it->second];
        out.voter_groups[it->second].push_back(static_cast<Index>(v));
        out.group_of_voter[v] = it->second;
    }
    return out;
}

Profile parse_profile(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::pair<std::size_t, std::size_t>> header;
    std::vector<std::string> names;
    std::vector<PreferenceOrder> voters;
    bool names_allowed = true;

    while (std::getline(in, raw)) {
        ++line_no;
        auto tokens = tokenize(strip_comment(raw));
        if (tokens.empty())
            continue;
        if (!header) {
            if (tokens.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": header must be 'm n'");
            long long m = parse_integer(tokens[0], line_no);
            long long n = parse_integer(tokens[1], line_no);
            if (m < 0 || n < 0)
                throw ParseError("line " + std::to_string(line_no) + ": negative size in header");
            header = {static_cast<std::size_t>(m), static_cast<std::size_t>(n)};
            continue;
        }
        const auto [m, n] = *header;
        if (names_allowed && tokens[0].rfind("names:", 0) == 0) {
            names_allowed = false;
            if (tokens[0].size() > 6)
                tokens[0] = tokens[0].substr(6);
            else
                tokens.erase(tokens.begin());
            if (tokens.size() != m)
                throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                                 " alternative names");
            std::unordered_set<std::string> unique(tokens.begin(), tokens.end());
            if (unique.size() != tokens.size())
                throw ParseError("line " + std::to_string(line_no) + ": duplicate alternative name");
            names = tokens;
            continue;
        }
        names_allowed = false;

        long long count = 1;
        if (auto colon = tokens[0].find(':'); colon != std::string::npos) {
            std::string rest = tokens[0].substr(colon + 1);
            count = parse_integer(tokens[0].substr(0, colon), line_no);
            if (rest.empty())
                tokens.erase(tokens.begin());
            else
                tokens[0] = rest;
            if (count <= 0)
                throw ParseError("line " + std::to_string(line_no) + ": multiplicity must be positive");
        }
        if (tokens.size() != m)
            throw ParseError("line " + std::to_string(line_no) + ": ranking has " + std::to_string(tokens.size()) +
                             " entries, expected " + std::to_string(m));
        std::vector<Index> ranking;
        ranking.reserve(m);
        for (const auto& t : tokens) {
            long long a = parse_integer(t, line_no);
            if (a < 1 || static_cast<std::size_t>(a) > m)
                throw ParseError("line " + std::to_string(line_no) + ": alternative " + t + " out of range 1.." +
                                 std::to_string(m));
            ranking.push_back(static_cast<Index>(a - 1));
        }
        PreferenceOrder order;
        try {
            order = PreferenceOrder(std::move(ranking));
        } catch (const std::invalid_argument&) {
            throw ParseError("line " + std::to_string(line_no) + ": ranking is not a permutation of 1.." +
                             std::to_string(m));
        }
        if (voters.size() + static_cast<std::size_t>(count) > n)
            throw ParseError("line " + std::to_string(line_no) + ": more than " + std::to_string(n) + " voters");
        for (long long c = 0; c < count; ++c)
            voters.push_back(order);
    }
    if (!header)
        throw ParseError("missing header line 'm n'");
    const auto [m, n] = *header;
    if (m == 0 && voters.empty())
        voters.assign(n, PreferenceOrder{});
    if (voters.size() != n)
        throw ParseError("expected " + std::to_string(n) + " voters, found " + std::to_string(voters.size()));
    return Profile(m, std::move(voters), std::move(names));
}

Profile parse_profile_string(const std::string& text)
{
    std::istringstream in(text);
    return parse_profile(in);
}

Profile read_profile_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_profile(in);
}

void serialize_profile(const Profile& profile, std::ostream& out)
{
    out << profile.num_alternatives() << ' ' << profile.num_voters() << '\n';
    if (profile.num_alternatives() > 0) {
        out << "names:";
        for (const auto& name : profile.alternative_names())
            out << ' ' << name;
        out << '\n';
        for (const auto& v : profile.voters()) {
            for (std::size_t p = 0; p < v.size(); ++p)
                out << (p ? " " : "") << v.at(p) + 1;
            out << '\n';
        }
    }
}

std::string serialize_profile_string(const Profile& profile)
{
    std::ostringstream out;
    serialize_profile(profile, out);
    return out.str();
}

}  // namespace prefdom
