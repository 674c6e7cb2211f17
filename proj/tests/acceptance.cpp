// Acceptance suite: nine end-to-end criteria over the full library, one
// pass/fail line per criterion. Everything is exact; no tolerances beyond
// those stated inline. Exit code 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mobility/algebra.hpp"
#include "mobility/analysis.hpp"
#include "mobility/movegen.hpp"

using namespace mobility;

namespace {

struct Runner {
  int failures = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
  }

  bool criterion(int number, const std::string& name, const std::function<void(Runner&)>& body) {
    notes.clear();
    auto start = std::chrono::steady_clock::now();
    try {
      body(*this);
    } catch (const std::exception& e) {
      notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = notes.empty();
    std::printf("%s criterion %d: %s [%.2fs]\n", ok ? "PASS" : "FAIL", number, name.c_str(), secs);
    for (const std::string& note : notes) std::printf("       - %s\n", note.c_str());
    if (!ok) ++failures;
    return ok;
  }
};

std::int64_t closed(const char* id, std::int64_t n) {
  return total_moves_closed(Alphabet::canonical().piece(id), n);
}

void criterion1(Runner& r) {
  const Alphabet& a = Alphabet::canonical();
  struct Golden {
    const char* id;
    std::int64_t total;
  };
  const Golden goldens[] = {{"K", 420}, {"N", 336}, {"B", 280},  {"R", 896},  {"Q", 1456},
                            {"AB", 896}, {"Em", 1232}, {"C", 756}, {"Am", 1792}};
  for (const Golden& g : goldens) {
    r.check(closed(g.id, 8) == g.total, std::string(g.id) + " closed total at 8");
    r.check(total_moves_bruteforce(a.piece(g.id).def, 8) == g.total,
            std::string(g.id) + " brute-force total at 8");
  }
  r.check(strength(a.piece("Am"), 8) == Rat(4, 9), "str(Am) = 4/9");
  r.check(strength(a.piece("R"), 8) == Rat(2, 9), "str(R) = 2/9");
  r.check(strength(a.piece("AB"), 8) == Rat(2, 9), "str(AB) = str(R) = 2/9");
}

void criterion2(Runner& r) {
  const Alphabet& a = Alphabet::canonical();
  for (const PieceInfo& p : a.pieces())
    for (int n = 2; n <= 60; ++n)
      if (total_moves_closed(p, n) != total_moves_bruteforce(p.def, n)) {
        r.check(false, p.id + " total mismatch at n=" + std::to_string(n));
        return;
      }
  for (const char* id : {"K", "N", "B", "R"})
    for (int n = 2; n <= 60; ++n) {
      ParitySplit c = parity_split_closed(id, n);
      ParitySplit o = parity_split_bruteforce(a.piece(id).def, n, Character::color);
      if (c.plus != o.plus || c.minus != o.minus) {
        r.check(false, std::string(id) + " parity mismatch at n=" + std::to_string(n));
        return;
      }
    }
}

void criterion3(Runner& r) {
  std::vector<Coincidence> cs = scan_coincidences(4, 10000);
  r.check(cs.size() == 6, "expected exactly six coincidence records, got " + std::to_string(cs.size()));
  auto has = [&](std::int64_t n, const char* p, const char* q) {
    for (const Coincidence& c : cs)
      if (c.n == n && c.p == p && c.q == q) return true;
    return false;
  };
  r.check(has(6, "Q", "Kook") && has(6, "AB", "C") && has(6, "Am", "Nork"), "three records at n=6");
  r.check(has(8, "R", "AB"), "record {R, AB} at n=8");
  r.check(has(12, "K", "B") && has(12, "AB", "AK"), "two records at n=12");

  StabilityCertificate cert = stable_ordering_certificate();
  r.check(cert.verified, "certificate verified");
  r.check(cert.pairs.size() == 12, "twelve adjacent pairs");
  for (const PairCertificate& pc : cert.pairs)
    r.check(pc.positive_from <= 24 && pc.difference.leading_coeff().sign() > 0,
            pc.stronger + "-" + pc.weaker + " positive from 24");
  r.check(cert.counterexample_n == 23 && cert.counterexample_bishop_total == 7590 &&
              cert.counterexample_centaur_total == 7656,
          "n=23 counterexample T_B=7590 < T_C=7656");
}

void criterion4(Runner& r) {
  std::vector<std::int64_t> got;
  for (const Transition& t : scan_transitions(5, 100)) got.push_back(t.n);
  std::vector<std::int64_t> want = {5, 6, 7, 8, 9, 11, 12, 13, 24};
  r.check(got == want, "transition set over [5, 100]");
  r.check(signature_census(4, 200).entries.size() == 10, "ten distinct signatures over [4, 200]");
}

void criterion5(Runner& r) {
  IdentityReport report = verify_identity_suite(4, 1000);
  for (const IdentityCheck& c : report.checks) r.check(c.pass, "identity " + c.name + ": " + c.details);
  NearCoincidence nc = near_coincidence("N", "B", 4, 1000);
  r.check(nc.n == 10 && nc.gap == Rat(1, 1650), "near_coincidence(N, B) = (10, 1/1650)");
  ParitySplit k6 = parity_split_closed("K", 6), bb6 = parity_split_closed("BB", 6);
  r.check(k6.plus == 100 && bb6.plus == 220 && k6.minus == 120 && bb6.minus == 0,
          "parity values at n=6");
  ParitySplit r8 = parity_split_closed("R", 8);
  ParitySplit bb8 = parity_split_closed("BB", 8), n8 = parity_split_closed("N", 8);
  r.check(r8.plus == 384 && r8.minus == 512 && bb8.plus + n8.plus == 560 && bb8.minus + n8.minus == 336,
          "parity values at n=8");
  ParitySplit k12 = parity_split_closed("K", 12), b12 = parity_split_closed("B", 12);
  r.check(k12.plus == 484 && k12.minus == 528 && b12.plus == 1012 && b12.minus == 0,
          "parity values at n=12");
  r.check(parity_split_closed("K", 4).minus == 48 && parity_split_closed("N", 4).minus == 48,
          "parity coincidence 48 at n=4");
  ParitySplit k5 = parity_split_closed("K", 5), r5 = parity_split_closed("R", 5);
  ParitySplit bb5 = parity_split_closed("BB", 5);
  r.check(k5.minus == 80 && r5.plus == 80 && bb5.plus == 120 && r5.minus == 120,
          "parity coincidences 80 and 120 at n=5");
}

void criterion6(Runner& r) {
  r.check(army_atomic_vector(Army::standard()) == AtomicVec{1, 2, 4, 3}, "a(Std) = (1,2,4,3)");
  const std::pair<std::int64_t, Rat> std_values[] = {
      {8, Rat(175, 144)}, {10, Rat(793, 825)}, {12, Rat(371, 468)}};
  for (const auto& [n, s] : std_values) {
    r.check(army_strength(Army::standard(), n) == s,
            "Std strength via atomic vector at n=" + std::to_string(n));
    r.check(std_army_strength_closed(n) == s, "Std strength via closed form at n=" + std::to_string(n));
  }

  r.check(single_piece_kernel_directions(6) == std::vector<AtomicVec>{{1, 0, -2, 0}},
          "kernel direction at n=6");
  r.check(single_piece_kernel_directions(8) == std::vector<AtomicVec>{{0, 1, 2, -1}},
          "kernel direction at n=8");
  r.check(single_piece_kernel_directions(12) == std::vector<AtomicVec>{{1, 0, -1, 0}},
          "kernel direction at n=12");

  std::vector<SubstitutionRule> six = substitution_rules(6, 2);
  std::set<std::string> one_one, one_two;
  for (const SubstitutionRule& rule : six)
    (rule.rhs.size() == 1 ? one_one : one_two).insert(rule.str());
  r.check(one_one == std::set<std::string>{"Q <-> Kook", "Am <-> Nork", "AB <-> C"},
          "the three piece-for-piece rules at n=6");
  r.check(one_two.size() == 9, "exactly nine piece-for-pair rules at n=6");
  r.check(one_two.count("K <-> B+B") == 1, "K <-> B+B present at n=6");

  std::vector<SubstitutionRule> twelve = substitution_rules(12, 1);
  std::set<std::string> names;
  for (const SubstitutionRule& rule : twelve) names.insert(rule.str());
  r.check(names == std::set<std::string>{"K <-> B", "AB <-> AK"}, "the two rules at n=12");

  r.check(orbit_under_rule(Army::standard(), find_rule(8, "R", {"AB"})).size() == 3,
          "orbit of Std under R <-> AB has three armies");
  r.check(army_count() == 77520, "77520 armies");

  auto contains = [](const std::vector<AtomicVec>& vs, const AtomicVec& v) {
    for (const AtomicVec& x : vs)
      if (x == v) return true;
    return false;
  };
  r.check(contains(kernel_lattice_search(7, 3), {3, 1, 0, -2}), "(3,1,0,-2) in ker T(7)");
  r.check(contains(kernel_lattice_search(6, 3), {3, -1, 2, -2}), "(3,-1,2,-2) in ker T(6)");
}

void criterion7(Runner& r) {
  Alphabet wazir = Alphabet::with_extensions("Wazir leaper 1 0\n");
  std::vector<Coincidence> cs = scan_coincidences(4, 100, wazir);
  r.check(cs.size() == 7, "Wazir alphabet has one extra coincidence in [4, 100]");
  r.check(!cs.empty() && cs[0].n == 4 && cs[0].p == "N" && cs[0].q == "Wazir" && cs[0].total == 48,
          "coincidence (4, {N, Wazir})");

  Alphabet dabbabah = Alphabet::with_extensions("Dabbabah leaper 0 2\n");
  cs = scan_coincidences(4, 100, dabbabah);
  r.check(!cs.empty() && cs[0].n == 5 && cs[0].p == "B" && cs[0].q == "Dabbabah" && cs[0].total == 60,
          "coincidence (5, {B, Dabbabah}) with totals 60");

  Alphabet trio = Alphabet::with_extensions("L05 leaper 0 5\nL26 leaper 2 6\nL45 leaper 4 5\n");
  int trio_pairs = 0;
  for (const Coincidence& c : scan_coincidences(8, 8, trio))
    if (c.total == 96) ++trio_pairs;
  r.check(trio_pairs == 3, "triple coincidence of totals 96 at n=8");
  bool triple_block = false;
  for (const auto& block : signature(8, trio).blocks)
    if (block.size() == 3) triple_block = true;
  r.check(triple_block, "a three-piece tied block exists for the extended alphabet");
}

void criterion8(Runner& r) {
  std::vector<RatioEntry> entries = polynomial_ratio_scan();
  r.check(entries.size() == 1, "single polynomial ratio");
  r.check(!entries.empty() && entries[0].p == "B" && entries[0].q == "K" &&
              entries[0].quotient == Poly({Rat(0), Rat(1, 12)}),
          "T_B/T_K = n/12");
}

void criterion9(Runner& r) {
  std::mt19937_64 rng(0x5eedc0ffee);
  const Alphabet& a = Alphabet::canonical();

  // compound additivity on random boards
  std::uniform_int_distribution<int> size(4, 40);
  for (int trial = 0; trial < 12; ++trial) {
    int n = size(rng);
    std::int64_t basics[4] = {
        total_moves_bruteforce(a.at(piece::K).def, n), total_moves_bruteforce(a.at(piece::N).def, n),
        total_moves_bruteforce(a.at(piece::B).def, n), total_moves_bruteforce(a.at(piece::R).def, n)};
    for (const PieceInfo& p : a.pieces()) {
      if (p.basic) continue;
      std::int64_t sum = 0;
      for (int k = 0; k < 4; ++k) sum += (*p.atomic)[static_cast<std::size_t>(k)] * basics[k];
      if (total_moves_bruteforce(p.def, n) != sum)
        r.check(false, "compound additivity " + p.id + " at n=" + std::to_string(n));
    }
  }

  // arrow symmetry: totals and split components even
  std::uniform_int_distribution<int> small(2, 24);
  std::uniform_int_distribution<int> which(0, piece::count - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const PieceInfo& p = a.at(static_cast<std::size_t>(which(rng)));
    int n = small(rng);
    if (total_moves_bruteforce(p.def, n) % 2 != 0)
      r.check(false, "odd total for " + p.id + " at n=" + std::to_string(n));
    ParitySplit s = parity_split_bruteforce(p.def, n, Character::color);
    if (s.total() != total_moves_bruteforce(p.def, n))
      r.check(false, "split does not sum to total for " + p.id);
  }

  // grid dihedral symmetry
  for (int trial = 0; trial < 20; ++trial) {
    const PieceInfo& p = a.at(static_cast<std::size_t>(which(rng)));
    int n = small(rng);
    MobilityGrid g = mobility_grid(p.def, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (g.at(i, j) != g.at(j, i) || g.at(i, j) != g.at(n - 1 - i, j))
          r.check(false, "grid asymmetry for " + p.id + " at n=" + std::to_string(n));
  }

  // kernel rank at bound 20 for every n in [4, 50]
  for (std::int64_t n = 4; n <= 50; ++n) {
    std::vector<AtomicVec> vs = kernel_lattice_search(n, 20);
    // fraction-free elimination over the found vectors
    std::vector<std::array<long long, 4>> m;
    for (const AtomicVec& v : vs) m.push_back({v[0], v[1], v[2], v[3]});
    int rank = 0;
    for (int col = 0; col < 4 && rank < static_cast<int>(m.size()); ++col) {
      int pivot = -1;
      for (int row = rank; row < static_cast<int>(m.size()); ++row)
        if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
          pivot = row;
          break;
        }
      if (pivot < 0) continue;
      std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
      for (int row = 0; row < static_cast<int>(m.size()); ++row) {
        if (row == rank) continue;
        long long lead = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        if (lead == 0) continue;
        long long plead = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (int c = 0; c < 4; ++c)
          m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] =
              m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] * plead -
              m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] * lead;
      }
      ++rank;
    }
    if (rank < 3) r.check(false, "kernel rank below 3 at n=" + std::to_string(n));
  }

  // substitution rules preserve strength on random armies
  std::uniform_int_distribution<int> extra(0, 7);
  for (std::int64_t n : {6, 8, 12})
    for (const SubstitutionRule& rule : substitution_rules(n, 2))
      for (int trial = 0; trial < 100; ++trial) {
        Army f;
        f.counts[piece::K] = 1;
        int additions = extra(rng);
        for (int i = 0; i < additions; ++i) f.counts[static_cast<std::size_t>(which(rng))]++;
        Rat before = army_strength(f, n);
        for (const Army& g : orbit_under_rule(f, rule))
          if (army_strength(g, n) != before) {
            r.check(false, "rule " + rule.str() + " changed strength at n=" + std::to_string(n));
            return;
          }
      }
}

}  // namespace

int main() {
  Runner runner;
  runner.criterion(1, "golden n=8 totals and strengths (oracle and closed forms)", criterion1);
  runner.criterion(2, "oracle equivalence for 2 <= n <= 60 with parity splits", criterion2);
  runner.criterion(3, "coincidence classification over [4, 10000] and stable-ordering certificate",
                   criterion3);
  runner.criterion(4, "transition set over [5, 100] and signature census over [4, 200]", criterion4);
  runner.criterion(5, "identity suite over [4, 1000]", criterion5);
  runner.criterion(6, "strength algebra: atomic vectors, kernels, rules, orbits, army count",
                   criterion6);
  runner.criterion(7, "extension alphabets: Wazir, Dabbabah, leaper triple", criterion7);
  runner.criterion(8, "polynomial ratio scan", criterion8);
  runner.criterion(9, "property suites under a fixed seed", criterion9);

  if (runner.failures == 0) {
    std::printf("ALL 9 CRITERIA PASS\n");
    return 0;
  }
  std::printf("%d CRITERIA FAILED\n", runner.failures);
  return 1;
}
