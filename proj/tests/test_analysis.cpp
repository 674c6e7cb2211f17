#include <set>

#include "doctest.h"
#include "mobility/analysis.hpp"

using namespace mobility;

namespace {

using Pair = std::pair<std::string, std::string>;

bool has_pair(const std::vector<Pair>& pairs, const std::string& a, const std::string& b) {
  for (const Pair& p : pairs)
    if ((p.first == a && p.second == b) || (p.first == b && p.second == a)) return true;
  return false;
}

std::set<std::int64_t> transition_set(std::int64_t lo, std::int64_t hi) {
  std::set<std::int64_t> out;
  for (const Transition& t : scan_transitions(lo, hi)) out.insert(t.n);
  return out;
}

}  // namespace

TEST_CASE("signature examples") {
  Signature s6 = signature(6);
  std::vector<std::vector<std::string>> tied;
  for (const auto& b : s6.blocks)
    if (b.size() > 1) tied.push_back(b);
  REQUIRE(tied.size() == 3);
  CHECK(tied[0] == std::vector<std::string>{"Am", "Nork"});
  CHECK(tied[1] == std::vector<std::string>{"Q", "Kook"});
  CHECK(tied[2] == std::vector<std::string>{"AB", "C"});

  Signature s8 = signature(8);
  tied.clear();
  for (const auto& b : s8.blocks)
    if (b.size() > 1) tied.push_back(b);
  REQUIRE(tied.size() == 1);
  CHECK(tied[0] == std::vector<std::string>{"R", "AB"});

  Signature s30 = signature(30);
  std::vector<std::vector<std::string>> chain = {{"Am"}, {"Q"},  {"Nork"}, {"Kook"}, {"Em"},
                                                 {"R"},  {"AB"}, {"AK"},   {"Bee"},  {"B"},
                                                 {"C"},  {"K"},  {"N"}};
  CHECK(s30.blocks == chain);
  CHECK(s30.str() == "Am > Q > Nork > Kook > Em > R > AB > AK > Bee > B > C > K > N");

  CHECK_THROWS_AS(signature(3), std::domain_error);
}

TEST_CASE("no block ever has three pieces (canonical alphabet)") {
  for (std::int64_t n = 4; n <= 500; ++n)
    for (const auto& block : signature(n).blocks) CHECK(block.size() <= 2);
}

TEST_CASE("scan_transitions golden set") {
  CHECK(transition_set(5, 30) == std::set<std::int64_t>{5, 6, 7, 8, 9, 11, 12, 13, 24});
  CHECK(scan_transitions(25, 100).empty());
  CHECK_THROWS_AS(scan_transitions(4, 10), std::domain_error);
  CHECK_THROWS_AS(scan_transitions(10, 5), std::domain_error);
}

TEST_CASE("transition rows contain the expected pairs") {
  std::vector<Transition> ts = scan_transitions(5, 30);
  auto at = [&](std::int64_t n) -> const Transition& {
    for (const Transition& t : ts)
      if (t.n == n) return t;
    REQUIRE(false);
    return ts.front();
  };

  CHECK(has_pair(at(5).changed_pairs, "Q", "AK"));
  CHECK(has_pair(at(5).changed_pairs, "AB", "Bee"));
  CHECK(at(5).coincidences_at_n.empty());

  CHECK(has_pair(at(6).changed_pairs, "R", "Bee"));
  CHECK(has_pair(at(6).changed_pairs, "Em", "AK"));
  CHECK(has_pair(at(6).coincidences_at_n, "Am", "Nork"));
  CHECK(has_pair(at(6).coincidences_at_n, "Q", "Kook"));
  CHECK(has_pair(at(6).coincidences_at_n, "C", "AB"));

  CHECK(has_pair(at(7).changed_pairs, "R", "C"));
  CHECK(has_pair(at(7).changed_pairs, "Am", "Nork"));
  CHECK(has_pair(at(7).changed_pairs, "Q", "Kook"));
  CHECK(has_pair(at(7).changed_pairs, "AB", "C"));

  CHECK(has_pair(at(8).coincidences_at_n, "R", "AB"));
  CHECK(has_pair(at(9).changed_pairs, "R", "AB"));

  CHECK(has_pair(at(11).changed_pairs, "R", "AK"));
  CHECK(has_pair(at(11).changed_pairs, "Bee", "C"));
  CHECK(has_pair(at(11).changed_pairs, "B", "N"));

  CHECK(has_pair(at(12).changed_pairs, "Q", "Nork"));
  CHECK(has_pair(at(12).coincidences_at_n, "K", "B"));
  CHECK(has_pair(at(12).coincidences_at_n, "AB", "AK"));

  CHECK(has_pair(at(13).changed_pairs, "B", "K"));
  CHECK(has_pair(at(13).changed_pairs, "AB", "AK"));

  CHECK(has_pair(at(24).changed_pairs, "B", "C"));
}

TEST_CASE("every unreported n has an unchanged signature") {
  Signature prev = signature(4);
  std::set<std::int64_t> reported = transition_set(5, 60);
  for (std::int64_t n = 5; n <= 60; ++n) {
    Signature cur = signature(n);
    CHECK((cur != prev) == (reported.count(n) > 0));
    prev = cur;
  }
}

TEST_CASE("scan_coincidences canonical golden set") {
  std::vector<Coincidence> cs = scan_coincidences(4, 1000);
  REQUIRE(cs.size() == 6);
  auto expect = [&](std::size_t i, std::int64_t n, const char* p, const char* q, std::int64_t total) {
    CHECK(cs[i].n == n);
    CHECK(cs[i].p == p);
    CHECK(cs[i].q == q);
    CHECK(cs[i].total == total);
  };
  expect(0, 6, "Q", "Kook", 580);
  expect(1, 6, "AB", "C", 380);
  expect(2, 6, "Am", "Nork", 740);
  expect(3, 8, "R", "AB", 896);
  expect(4, 12, "K", "B", 1012);
  expect(5, 12, "AB", "AK", 2904);
}

TEST_CASE("scan_coincidences with extension pieces") {
  Alphabet wazir = Alphabet::with_extensions("Wazir leaper 1 0\n");
  std::vector<Coincidence> cs = scan_coincidences(4, 100, wazir);
  REQUIRE(cs.size() == 7);
  CHECK(cs[0].n == 4);
  CHECK(cs[0].p == "N");
  CHECK(cs[0].q == "Wazir");
  CHECK(cs[0].total == 48);

  Alphabet dabbabah = Alphabet::with_extensions("Dabbabah leaper 0 2\n");
  cs = scan_coincidences(4, 100, dabbabah);
  REQUIRE(cs.size() == 7);
  CHECK(cs[0].n == 5);
  CHECK(cs[0].p == "B");
  CHECK(cs[0].q == "Dabbabah");
  CHECK(cs[0].total == 60);

  // Three leapers with the same total at n = 8: a triple coincidence, so the
  // no-three-pieces-tied property is a fact about the alphabet, not boards.
  Alphabet trio = Alphabet::with_extensions("L05 leaper 0 5\nL26 leaper 2 6\nL45 leaper 4 5\n");
  cs = scan_coincidences(8, 8, trio);
  int trio_pairs = 0;
  for (const Coincidence& c : cs)
    if (c.total == 96) {
      ++trio_pairs;
      CHECK((c.p[0] == 'L' && c.q[0] == 'L'));
    }
  CHECK(trio_pairs == 3);
  bool triple_block = false;
  for (const auto& block : signature(8, trio).blocks)
    if (block.size() == 3) triple_block = true;
  CHECK(triple_block);
}

TEST_CASE("stable ordering certificate") {
  StabilityCertificate cert = stable_ordering_certificate();
  CHECK(cert.verified);
  REQUIRE(cert.pairs.size() == 12);

  auto pair = [&](const char* hi, const char* lo) -> const PairCertificate& {
    for (const PairCertificate& pc : cert.pairs)
      if (pc.stronger == hi && pc.weaker == lo) return pc;
    REQUIRE(false);
    return cert.pairs.front();
  };

  // T_B - T_C = (n-1)(2n^2 - 49n + 60)/3
  Poly expected = Poly({Rat(-1), Rat(1)}) * Poly({Rat(60), Rat(-49), Rat(2)}) * Rat(1, 3);
  CHECK(pair("B", "C").difference == expected);
  CHECK(pair("B", "C").positive_from == 24);
  CHECK(pair("B", "C").cauchy_bound >= 24);

  // T_R - T_AB = 2(n-1)(n-3)(n-8)/3
  expected = Poly({Rat(-1), Rat(1)}) * Poly({Rat(-3), Rat(1)}) * Poly({Rat(-8), Rat(1)}) * Rat(2, 3);
  CHECK(pair("R", "AB").difference == expected);
  CHECK(pair("R", "AB").positive_from == 9);

  // T_Kook - T_Em = T_K - T_N = 12(n-1)
  CHECK(pair("Kook", "Em").difference == Poly({Rat(-12), Rat(12)}));
  CHECK(pair("K", "N").difference == Poly({Rat(-12), Rat(12)}));

  // T_AB - T_AK = T_B - T_K = (n-1)(2n-1)(n-12)/3
  expected = Poly({Rat(-1), Rat(1)}) * Poly({Rat(-1), Rat(2)}) * Poly({Rat(-12), Rat(1)}) * Rat(1, 3);
  CHECK(pair("AB", "AK").difference == expected);
  CHECK(pair("AB", "AK").positive_from == 13);

  CHECK(pair("Q", "Nork").positive_from == 12);

  for (const PairCertificate& pc : cert.pairs) {
    CHECK(pc.difference.leading_coeff().sign() > 0);
    CHECK(pc.positive_from <= 24);
    // the sign table really covers [4, N0]
    CHECK(static_cast<std::int64_t>(pc.signs.size()) == std::max<std::int64_t>(pc.cauchy_bound - 3, 0));
  }

  CHECK(cert.counterexample_n == 23);
  CHECK(cert.counterexample_bishop_total == 7590);
  CHECK(cert.counterexample_centaur_total == 7656);
}

TEST_CASE("near_coincidence examples") {
  NearCoincidence nb = near_coincidence("N", "B", 4, 100);
  CHECK(nb.n == 10);
  CHECK(nb.gap == Rat(1, 1650));

  // stable under enlarging the range
  for (std::int64_t hi : {10, 50, 1000}) {
    NearCoincidence r = near_coincidence("N", "B", 4, hi);
    CHECK(r.n == 10);
    CHECK(r.gap == Rat(1, 1650));
  }

  NearCoincidence rab = near_coincidence("R", "AB", 4, 100);
  CHECK(rab.n == 8);
  CHECK(rab.gap == Rat(0));

  CHECK_THROWS_AS(near_coincidence("N", "N", 4, 100), std::domain_error);
  CHECK_THROWS_AS(near_coincidence("N", "B", 3, 100), std::domain_error);
}

TEST_CASE("bishop overtakes knight exactly at n = 11") {
  const Alphabet& a = Alphabet::canonical();
  for (std::int64_t n = 4; n <= 2000; ++n) {
    bool bishop_stronger = total_moves_closed(a.piece("B"), n) > total_moves_closed(a.piece("N"), n);
    CHECK(bishop_stronger == (n >= 11));
  }
}

TEST_CASE("identity suite passes over [4, 1000]") {
  IdentityReport report = verify_identity_suite(4, 1000);
  for (const IdentityCheck& c : report.checks) {
    INFO(c.name, ": ", c.details);
    CHECK(c.pass);
  }
  CHECK(report.all_pass());
  CHECK(report.checks.size() >= 9);
  CHECK_THROWS_AS(verify_identity_suite(3, 10), std::domain_error);
}

TEST_CASE("signature census") {
  SignatureCensus census = signature_census(4, 200);
  CHECK(census.entries.size() == 10);

  int tied = 0, strict = 0;
  for (const auto& e : census.entries) {
    bool has_tie = false;
    for (const auto& b : e.sig.blocks) has_tie = has_tie || b.size() > 1;
    (has_tie ? tied : strict)++;
  }
  CHECK(strict == 7);
  CHECK(tied == 3);

  // the tied signatures occur exactly at the magic boards
  for (const auto& e : census.entries) {
    bool has_tie = false;
    for (const auto& b : e.sig.blocks) has_tie = has_tie || b.size() > 1;
    if (has_tie) {
      REQUIRE(e.intervals.size() == 1);
      CHECK(e.intervals[0].first == e.intervals[0].second);
      std::int64_t n = e.intervals[0].first;
      CHECK((n == 6 || n == 8 || n == 12));
    }
  }

  CHECK(signature_census(24, 200).entries.size() == 1);
  CHECK(signature_census(13, 23).entries.size() == 1);
  // the intervals of the stable signature
  SignatureCensus late = signature_census(13, 200);
  REQUIRE(late.entries.size() == 2);
  CHECK(late.entries[0].intervals == std::vector<std::pair<std::int64_t, std::int64_t>>{{13, 23}});
  CHECK(late.entries[1].intervals == std::vector<std::pair<std::int64_t, std::int64_t>>{{24, 200}});
}
