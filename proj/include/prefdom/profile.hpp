#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prefdom {

/// Dense 0-based index of an alternative or a voter.
using Index = int;

/// Raised on malformed profile, graph or Max2Sat text input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive routine would exceed its resource guard.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A strict linear order over alternatives 0..m-1, most preferred first.
class PreferenceOrder {
public:
    PreferenceOrder() = default;

    /// Throws std::invalid_argument unless `ranking` is a permutation of 0..m-1.
    explicit PreferenceOrder(std::vector<Index> ranking);

    static PreferenceOrder identity(std::size_t m);

    std::size_t size() const { return ranking_.size(); }
    const std::vector<Index>& ranking() const { return ranking_; }
    Index at(std::size_t position) const { return ranking_[position]; }
    Index rank_of(Index alternative) const { return rank_of_[static_cast<std::size_t>(alternative)]; }

    /// True iff `a` is strictly preferred to `b`.
    bool prefers(Index a, Index b) const { return rank_of(a) < rank_of(b); }

    PreferenceOrder reversed() const;

    friend bool operator==(const PreferenceOrder& x, const PreferenceOrder& y) { return x.ranking_ == y.ranking_; }
    friend bool operator<(const PreferenceOrder& x, const PreferenceOrder& y) { return x.ranking_ < y.ranking_; }

private:
    std::vector<Index> ranking_;
    std::vector<Index> rank_of_;
};

/// Voters with linear orders over a common set of m alternatives.
class Profile {
public:
    Profile() = default;

    /// Names default to "1".."m" for alternatives and "v1".."vn" for voters when left empty.
    Profile(std::size_t m, std::vector<PreferenceOrder> voters,
            std::vector<std::string> alternative_names = {},
            std::vector<std::string> voter_names = {});

    std::size_t num_alternatives() const { return m_; }
    std::size_t num_voters() const { return voters_.size(); }
    bool empty() const { return voters_.empty() || m_ == 0; }

    const PreferenceOrder& voter(std::size_t i) const { return voters_[i]; }
    const std::vector<PreferenceOrder>& voters() const { return voters_; }
    const std::vector<std::string>& alternative_names() const { return alternative_names_; }
    const std::vector<std::string>& voter_names() const { return voter_names_; }
    const std::string& alternative_name(Index a) const { return alternative_names_[static_cast<std::size_t>(a)]; }
    const std::string& voter_name(Index v) const { return voter_names_[static_cast<std::size_t>(v)]; }

    std::optional<Index> find_alternative(const std::string& name) const;
    std::optional<Index> find_voter(const std::string& name) const;

    friend bool operator==(const Profile& x, const Profile& y);

private:
    std::size_t m_ = 0;
    std::vector<PreferenceOrder> voters_;
    std::vector<std::string> alternative_names_;
    std::vector<std::string> voter_names_;
};

/// Unordered alternative pairs {a,b}, a<b, on which two orders disagree.
///
/// Stored as a bitset over the m(m-1)/2 canonical pair slots so that equality
/// and inclusion tests cost O(m^2 / 64).
class ConflictPairSet {
public:
    ConflictPairSet() = default;
    explicit ConflictPairSet(std::size_t m);

    std::size_t num_alternatives() const { return m_; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    void insert(Index a, Index b);
    bool contains(Index a, Index b) const;

    /// Canonical pairs (min,max) in lexicographic order.
    std::vector<std::pair<Index, Index>> pairs() const;

    bool is_subset_of(const ConflictPairSet& other) const;
    bool intersects(const ConflictPairSet& other) const;
    ConflictPairSet intersection(const ConflictPairSet& other) const;

    /// Smallest pair (lexicographically) present, if any.
    std::optional<std::pair<Index, Index>> first() const;

    friend bool operator==(const ConflictPairSet& x, const ConflictPairSet& y)
    {
        return x.m_ == y.m_ && x.words_ == y.words_;
    }

    static std::size_t slot(std::size_t m, Index a, Index b);
    static std::pair<Index, Index> unslot(std::size_t m, std::size_t slot);

private:
    std::size_t m_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

ConflictPairSet conflict_pairs(const PreferenceOrder& o1, const PreferenceOrder& o2);

/// Induced subprofile plus new-index -> old-index translation maps.
struct Restriction {
    Profile profile;
    std::vector<Index> voter_map;
    std::vector<Index> alternative_map;
};

/// Keeps the given voters/alternatives (all when absent). Index sets may be unsorted;
/// the result keeps the original relative order and renumbers densely.
Restriction restrict(const Profile& profile,
                     const std::optional<std::vector<Index>>& keep_voters,
                     const std::optional<std::vector<Index>>& keep_alternatives);

/// Complement helper: the sorted indices of 0..size-1 not in `removed`.
std::vector<Index> complement(std::size_t size, const std::vector<Index>& removed);

Profile reverse_profile(const Profile& profile);

struct Dedup {
    std::vector<PreferenceOrder> distinct_orders;
    std::vector<std::size_t> multiplicity;
    std::vector<std::vector<Index>> voter_groups;
    std::vector<std::size_t> group_of_voter;
};

/// Distinct orders in order of first appearance.
Dedup dedup(const Profile& profile);

Profile parse_profile(std::istream& in);
Profile parse_profile_string(const std::string& text);
Profile read_profile_file(const std::string& path);

void serialize_profile(const Profile& profile, std::ostream& out);
std::string serialize_profile_string(const Profile& profile);

}  // namespace prefdom
