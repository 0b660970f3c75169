#include <random>

#include "agorum/error.hpp"
#include "agorum/io.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace agorum;

TEST_CASE("agenda files") {
  const Agenda a = parse_agenda("p\n\n# the conclusion\nq\np & q   # joint\n");
  CHECK(a == oracle::doctrinal_agenda());
  CHECK(write_agenda(a) == "p\nq\np & q\n");
  CHECK(parse_agenda(write_agenda(a)) == a);

  const Agenda premised = parse_agenda("premise: p\npremise: q\np & q\n");
  CHECK(premised.has_premise_partition());
  CHECK(premised.is_premise(0));
  CHECK_FALSE(premised.is_premise(2));
  CHECK(parse_agenda(write_agenda(premised)) == premised);

  CHECK_THROWS_AS(parse_agenda("# nothing\n"), Error);
  CHECK_THROWS_AS(parse_agenda("p\n~p\n"), Error);
  try {
    parse_agenda("p\nq\n  p & | q\n");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 7);
    CHECK(std::string(e.what()).starts_with("line 3, column 7"));
  }
}

TEST_CASE("agenda round trip on random formulas") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    std::vector<Formula> positives;
    while (positives.size() < 4) {
      Formula g = oracle::random_formula(rng, {"p", "q", "r"}, 3);
      if (g.is_negation()) continue;
      if (std::find(positives.begin(), positives.end(), g) == positives.end()) positives.push_back(g);
    }
    const Agenda a(positives);
    CHECK(parse_agenda(write_agenda(a)) == a);
  }
}

TEST_CASE("profile files") {
  const Agenda a = oracle::doctrinal_agenda();
  const Profile p = parse_profile("111\n100\n010\n", a);
  CHECK(p == oracle::doctrinal_profile());
  CHECK(write_profile(p) == "111\n100\n010\n");
  CHECK(parse_profile(write_profile(p), a) == p);
  CHECK_THROWS_AS(parse_profile("111\n110\n010\n", a), Error);
  CHECK_THROWS_AS(parse_profile("111\n100\n", a), Error);
  CHECK_THROWS_AS(parse_profile("11\n10\n01\n", a), Error);
  CHECK_THROWS_AS(parse_profile("111\n1x0\n010\n", a), Error);
  CHECK_THROWS_AS(parse_profile("111\n", a), Error);
}

TEST_CASE("preference files") {
  const PreferenceProfile pp = parse_preferences("a > b > c\nc>b>a\n  b > a > c\n");
  CHECK(pp.candidates == std::vector<std::string>{"a", "b", "c"});
  CHECK(pp.orders.size() == 3);
  CHECK(pp.orders[1] == std::vector<std::string>{"c", "b", "a"});
  CHECK(parse_preferences(write_preferences(pp)).orders == pp.orders);
  CHECK_THROWS_AS(parse_preferences("a > > b\n"), ParseError);
  CHECK_THROWS_AS(parse_preferences("a > b\na > c\n"), Error);
  CHECK_THROWS_AS(parse_preferences(""), Error);
}

TEST_CASE("qbf files") {
  const QbfInstance q = parse_qbf("forall x1 x2 exists y : (x1 | y) & (x2 -> ~y)\n");
  CHECK(q.universal == std::vector<std::string>{"x1", "x2"});
  CHECK(q.existential == std::vector<std::string>{"y"});
  CHECK(q.matrix == parse_formula("(x1 | y) & (x2 -> ~y)"));
  const QbfInstance back = parse_qbf(write_qbf(q));
  CHECK(back.matrix == q.matrix);
  CHECK(back.universal == q.universal);
  CHECK(parse_qbf("exists y : y").universal.empty());
  CHECK_THROWS_AS(parse_qbf("forall x : x & z"), Error);
  CHECK_THROWS_AS(parse_qbf("forall x x"), ParseError);
  CHECK_THROWS_AS(parse_qbf("exists y forall x : x"), ParseError);
}

TEST_CASE("quota files") {
  const Agenda a = oracle::doctrinal_agenda();
  const QuotaRule r = parse_quotas("2 2\n2 2\n3 1 # strict on the conclusion\n", a, 3);
  CHECK(r.quota(Member{2, true}, 3) == 3);
  CHECK(r.quota(Member{2, false}, 3) == 1);
  CHECK_THROWS_AS(parse_quotas("2 2\n", a, 3), Error);
  CHECK_THROWS_AS(parse_quotas("2 2\n2 x\n2 2\n", a, 3), ParseError);
}

TEST_CASE("missing files") {
  try {
    (void)read_text_file("/nonexistent/agenda.txt");
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io);
  }
}
