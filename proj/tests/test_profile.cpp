#include "support.hpp"

#include "prefdom/profile.hpp"

#include <doctest.h>

#include <sstream>

using namespace prefdom;

namespace {

PreferenceOrder order(std::vector<Index> r)
{
    return PreferenceOrder(std::move(r));
}

}  // namespace

TEST_CASE("preference order keeps ranks consistent")
{
    auto o = order({2, 0, 1});
    CHECK(o.rank_of(2) == 0);
    CHECK(o.rank_of(1) == 2);
    CHECK(o.prefers(0, 1));
    CHECK_FALSE(o.prefers(1, 2));
    CHECK(o.reversed().ranking() == std::vector<Index>{1, 0, 2});
    CHECK_THROWS_AS(order({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(order({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("parse plain and multiplicity lines")
{
    auto p = parse_profile_string("3 2\n1 2 3\n3 2 1\n");
    CHECK(p.num_alternatives() == 3);
    CHECK(p.num_voters() == 2);
    CHECK(p.voter(1).ranking() == std::vector<Index>{2, 1, 0});

    auto q = parse_profile_string("# comment\n\n3 2\n2: 1 2 3  # trailing\n");
    CHECK(q.num_voters() == 2);
    CHECK(q.voter(0) == q.voter(1));
    CHECK(q.voter_names() == std::vector<std::string>{"v1", "v2"});

    auto named = parse_profile_string("2 1\nnames: x y\n2 1\n");
    CHECK(named.alternative_names() == std::vector<std::string>{"x", "y"});
    CHECK(named.find_alternative("y") == 1);
}

TEST_CASE("parse rejects malformed input")
{
    CHECK_THROWS_AS(parse_profile_string("3 2\n1 1 3\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("3 2\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("3 1\n0: 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("3 1\n1 2 3\n3 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("3 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("x 1\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string(""), ParseError);
    CHECK_THROWS_AS(parse_profile_string("2 1\nnames: x x\n1 2\n"), ParseError);
}

TEST_CASE("empty profiles are legal")
{
    auto p = parse_profile_string("0 0\n");
    CHECK(p.num_voters() == 0);
    auto q = parse_profile_string("0 3\n");
    CHECK(q.num_voters() == 3);
    CHECK(parse_profile_string(serialize_profile_string(q)) == q);
}

TEST_CASE("serialize round trip on random profiles")
{
    testsupport::Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        auto p = testsupport::sample_profile(rng, 6, 6);
        CHECK(parse_profile_string(serialize_profile_string(p)) == p);
    }
}

TEST_CASE("conflict pairs")
{
    // a=0 b=1 c=2: (b>a>c, c>b>a) -> {a,c},{b,c}
    auto d = conflict_pairs(order({1, 0, 2}), order({2, 1, 0}));
    CHECK(d.pairs() == std::vector<std::pair<Index, Index>>{{0, 2}, {1, 2}});
    CHECK(conflict_pairs(order({1, 0, 2}), order({1, 0, 2})).empty());
    auto o = order({3, 1, 0, 2});
    CHECK(conflict_pairs(o, o.reversed()).size() == 6);
    CHECK_THROWS(conflict_pairs(order({0, 1}), order({0, 1, 2})));
}

TEST_CASE("conflict pairs are symmetric and determine the second order")
{
    testsupport::Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = testsupport::uniform(rng, 0, 7);
        auto o1 = order(testsupport::shuffled(rng, m));
        auto o2 = order(testsupport::shuffled(rng, m));
        auto d = conflict_pairs(o1, o2);
        CHECK(d == conflict_pairs(o2, o1));
        // flip the conflicting pairs of o1 and sort by pairwise wins
        std::vector<Index> rebuilt(m);
        std::iota(rebuilt.begin(), rebuilt.end(), 0);
        std::sort(rebuilt.begin(), rebuilt.end(), [&](Index a, Index b) {
            bool before = o1.prefers(a, b);
            return d.contains(std::min(a, b), std::max(a, b)) ? !before : before;
        });
        CHECK(rebuilt == o2.ranking());
    }
}

TEST_CASE("conflict pair set operations")
{
    ConflictPairSet x(4), y(4);
    x.insert(0, 1);
    y.insert(1, 0);
    y.insert(2, 3);
    CHECK(x.is_subset_of(y));
    CHECK_FALSE(y.is_subset_of(x));
    CHECK(x.intersects(y));
    CHECK(x.intersection(y) == x);
    CHECK(y.first() == std::pair<Index, Index>{0, 1});
    for (std::size_t s = 0; s < 6; ++s) {
        auto [a, b] = ConflictPairSet::unslot(4, s);
        CHECK(ConflictPairSet::slot(4, a, b) == s);
    }
}

TEST_CASE("restrict")
{
    auto path5 = read_profile_file(PREFDOM_TEST_DATA "/path5_value_md.profile");
    auto all = restrict(path5, std::nullopt, std::nullopt);
    CHECK(all.profile == path5);

    auto three = restrict(path5, std::vector<Index>{0, 2, 4}, std::nullopt);
    CHECK(three.profile.num_voters() == 3);
    CHECK(three.profile.voter_names() == std::vector<std::string>{"v1", "v3", "v5"});
    CHECK(three.voter_map == std::vector<Index>{0, 2, 4});

    auto one = restrict(path5, std::nullopt, std::vector<Index>{5});
    for (const auto& v : one.profile.voters())
        CHECK(v.ranking() == std::vector<Index>{0});
    CHECK(one.profile.alternative_names() == std::vector<std::string>{"c2"});

    CHECK_THROWS_AS(restrict(path5, std::vector<Index>{7}, std::nullopt), std::out_of_range);
    CHECK(complement(5, {1, 3}) == std::vector<Index>{0, 2, 4});
}

TEST_CASE("restrict composes")
{
    testsupport::Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        auto p = testsupport::uniform_profile(rng, 6, 6);
        auto s1 = testsupport::shuffled(rng, 6);
        s1.resize(4);
        auto first = restrict(p, s1, s1);
        std::vector<Index> s2 = {0, 2, 3};
        auto second = restrict(first.profile, s2, s2);
        std::vector<Index> composed;
        for (Index i : s2)
            composed.push_back(first.voter_map[static_cast<std::size_t>(i)]);
        std::vector<Index> composed_alts;
        for (Index i : s2)
            composed_alts.push_back(first.alternative_map[static_cast<std::size_t>(i)]);
        auto direct = restrict(p, composed, composed_alts);
        CHECK(direct.profile.voters() == second.profile.voters());
    }
}

TEST_CASE("reverse profile")
{
    auto p = parse_profile_string("3 1\n1 2 3\n");
    CHECK(reverse_profile(p).voter(0).ranking() == std::vector<Index>{2, 1, 0});
    testsupport::Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        auto q = testsupport::uniform_profile(rng, 4, 5);
        CHECK(reverse_profile(reverse_profile(q)) == q);
    }
}

TEST_CASE("dedup")
{
    auto four_voters = read_profile_file(PREFDOM_TEST_DATA "/four_voters.profile");
    auto d = dedup(four_voters);
    CHECK(d.distinct_orders.size() == 3);
    CHECK(d.multiplicity == std::vector<std::size_t>{2, 1, 1});
    CHECK(d.voter_groups[0] == std::vector<Index>{0, 1});
    CHECK(d.group_of_voter == std::vector<std::size_t>{0, 0, 1, 2});

    auto same = parse_profile_string("3 4\n4: 2 1 3\n");
    CHECK(dedup(same).multiplicity == std::vector<std::size_t>{4});
    auto distinct = parse_profile_string("2 2\n1 2\n2 1\n");
    CHECK(dedup(distinct).multiplicity == std::vector<std::size_t>{1, 1});
}
