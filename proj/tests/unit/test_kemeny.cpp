#include <algorithm>
#include <random>

#include "agorum/error.hpp"
#include "agorum/kemeny.hpp"
#include "agorum/logic.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace agorum;

namespace {

PreferenceProfile single(std::vector<std::string> order) {
  std::vector<std::string> candidates = order;
  return PreferenceProfile{candidates, {order}};
}

}  // namespace

TEST_CASE("agenda shape") {
  const Agenda three = build_kemeny_agenda({"a", "b", "c"});
  CHECK(three.size() == 6 + (6 + 3) * 10);
  CHECK(three.variables().size() == 6);
  const Agenda two = build_kemeny_agenda({"a", "b"});
  CHECK(two.size() == 2 + 5);
  CHECK(two.positive(2) == parse_formula("p_a_b <-> ~p_b_a"));
  for (std::size_t i = 6; i < three.size(); ++i) {
    const Formula& f = three.positive(i);
    const std::size_t base = 6 + ((i - 6) / 10) * 10;
    CHECK(are_equivalent(f, three.positive(base)));
  }
  CHECK_THROWS_AS(build_kemeny_agenda({"a"}), Error);
  CHECK_THROWS_AS(build_kemeny_agenda({"a_b", "c", "a", "b_c"}), Error);
}

TEST_CASE("encoding a single order") {
  const PreferenceProfile pp = single({"a", "b", "c"});
  const Profile p = encode_preference_profile(pp);
  const Agenda& agenda = p.agenda();
  const auto accepted = formulas_of(p.agent(0), agenda);
  for (const char* text : {"p_a_b", "~p_b_a", "p_b_c", "~p_c_b", "p_a_c", "~p_c_a"})
    CHECK(std::find(accepted.begin(), accepted.end(), parse_formula(text)) != accepted.end());
  for (std::size_t i = 6; i < agenda.size(); ++i) CHECK(p.agent(0)[i] == Verdict::positive);
}

TEST_CASE("preference distance counts ordered pairs") {
  CHECK(preference_distance({"a", "b", "c"}, {"a", "b", "c"}) == 0);
  CHECK(preference_distance({"a", "b", "c"}, {"c", "b", "a"}) == 6);
  CHECK(preference_distance({"a", "b", "c"}, {"b", "a", "c"}) == 2);
  PreferenceProfile pp{{"a", "b", "c"}, {{"a", "b", "c"}, {"c", "b", "a"}, {"a", "b", "c"}}};
  const Profile p = encode_preference_profile(pp);
  CHECK(hamming(p.agent(0), p.agent(1)) == 6);
  CHECK(hamming(p.agent(0), p.agent(2)) == 0);
}

TEST_CASE("winners against the permutation oracle") {
  CHECK(kemeny_winner(single({"a", "b", "c"}), "a", false));
  CHECK_FALSE(kemeny_winner(single({"a", "b", "c"}), "c", false));
  CHECK_THROWS_AS(kemeny_winner(single({"a", "b"}), "z", true), Error);

  std::mt19937_64 rng(404);
  for (int round = 0; round < 12; ++round) {
    std::vector<std::string> cands{"a", "b", "c"};
    PreferenceProfile pp{cands, {}};
    for (int v = 0; v < 3; ++v) {
      std::shuffle(cands.begin(), cands.end(), rng);
      pp.orders.push_back(cands);
    }
    const auto best = oracle::kemeny_rankings(pp);
    for (const std::string& c : pp.candidates) {
      const bool expected =
          std::any_of(best.begin(), best.end(), [&](const auto& order) { return order.front() == c; });
      CHECK(kemeny_winner(pp, c, true) == expected);
      CHECK(kemeny_winner(pp, c, false) == expected);
    }
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(PreferenceProfile{{"a", "b"}, {{"a", "a"}}}), Error);
  CHECK_THROWS_AS(validate(PreferenceProfile{{"a", "a"}, {}}), Error);
  CHECK_THROWS_AS(validate(PreferenceProfile{{"a", "b"}, {{"a", "b", "c"}}}), Error);
  CHECK_NOTHROW(validate(PreferenceProfile{{"x", "y"}, {{"y", "x"}}}));
}
