#include "mobility/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mobility {

namespace {

std::vector<std::int64_t> totals_at(const Alphabet& alphabet, std::int64_t n) {
  std::vector<std::int64_t> t(alphabet.size());
  for (std::size_t i = 0; i < alphabet.size(); ++i) t[i] = total_moves_closed(alphabet.at(i), n);
  return t;
}

void require_nontrivial(std::int64_t n) {
  if (n < 4) throw std::domain_error("board size " + std::to_string(n) + " is trivial (need n >= 4)");
}

void require_range(std::int64_t lo, std::int64_t hi, std::int64_t min_lo) {
  if (lo < min_lo)
    throw std::domain_error("range start " + std::to_string(lo) + " below " + std::to_string(min_lo));
  if (lo > hi) throw std::domain_error("range bounds out of order");
}

Rat pair_count(std::int64_t n) {
  Int128 nn(n);
  return Rat(nn * nn * (nn * nn - Int128(1)));
}

}  // namespace

std::string Signature::str() const {
  std::string out;
  for (const auto& block : blocks) {
    if (!out.empty()) out += " > ";
    if (block.size() == 1) {
      out += block[0];
    } else {
      out += "{";
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) out += ", ";
        out += block[i];
      }
      out += "}";
    }
  }
  return out;
}

Signature signature(std::int64_t n, const Alphabet& alphabet) {
  require_nontrivial(n);
  std::vector<std::int64_t> totals = totals_at(alphabet, n);
  std::vector<std::size_t> order(alphabet.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return totals[a] > totals[b]; });

  Signature sig;
  sig.n = n;
  for (std::size_t k = 0; k < order.size();) {
    std::vector<std::string> block;
    std::size_t m = k;
    while (m < order.size() && totals[order[m]] == totals[order[k]])
      block.push_back(alphabet.at(order[m++]).id);
    sig.blocks.push_back(std::move(block));
    k = m;
  }
  return sig;
}

std::vector<Transition> scan_transitions(std::int64_t lo, std::int64_t hi, const Alphabet& alphabet) {
  require_range(lo, hi, 5);
  std::vector<Transition> out;
  std::vector<std::int64_t> prev = totals_at(alphabet, lo - 1);
  for (std::int64_t n = lo; n <= hi; ++n) {
    std::vector<std::int64_t> cur = totals_at(alphabet, n);
    Transition tr;
    tr.n = n;
    for (std::size_t a = 0; a < alphabet.size(); ++a)
      for (std::size_t b = a + 1; b < alphabet.size(); ++b) {
        auto rel = [](std::int64_t x, std::int64_t y) { return x < y ? -1 : x > y ? 1 : 0; };
        if (rel(prev[a], prev[b]) != rel(cur[a], cur[b]))
          tr.changed_pairs.emplace_back(alphabet.at(a).id, alphabet.at(b).id);
        if (cur[a] == cur[b]) tr.coincidences_at_n.emplace_back(alphabet.at(a).id, alphabet.at(b).id);
      }
    if (!tr.changed_pairs.empty()) out.push_back(std::move(tr));
    prev = std::move(cur);
  }
  return out;
}

std::vector<Coincidence> scan_coincidences(std::int64_t lo, std::int64_t hi, const Alphabet& alphabet) {
  require_range(lo, hi, 4);
  std::vector<Coincidence> out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    std::vector<std::int64_t> totals = totals_at(alphabet, n);
    for (std::size_t a = 0; a < alphabet.size(); ++a)
      for (std::size_t b = a + 1; b < alphabet.size(); ++b)
        if (totals[a] == totals[b])
          out.push_back({n, alphabet.at(a).id, alphabet.at(b).id, totals[a]});
  }
  return out;
}

StabilityCertificate stable_ordering_certificate() {
  const Alphabet& alphabet = Alphabet::canonical();
  static const char* stable_order[] = {"Am", "Q",  "Nork", "Kook", "Em", "R", "AB",
                                       "AK", "Bee", "B",    "C",    "K",  "N"};
  StabilityCertificate cert;
  for (int k = 0; k + 1 < 13; ++k) {
    PairCertificate pc;
    pc.stronger = stable_order[k];
    pc.weaker = stable_order[k + 1];
    pc.difference = *alphabet.piece(pc.stronger).total_poly - *alphabet.piece(pc.weaker).total_poly;
    if (pc.difference.is_zero()) throw std::logic_error("identical totals in stable order");
    pc.cauchy_bound = sign_stabilization_bound(pc.difference);
    if (pc.difference.leading_coeff().sign() <= 0)
      throw std::logic_error("nonpositive leading coefficient for " + pc.stronger + "-" + pc.weaker);
    for (std::int64_t n = 4; n <= pc.cauchy_bound; ++n)
      pc.signs.push_back(pc.difference.eval(Int128(n)).sign());
    pc.positive_from = pc.cauchy_bound + 1;
    for (std::int64_t n = pc.cauchy_bound; n >= 4; --n) {
      if (pc.signs[static_cast<std::size_t>(n - 4)] <= 0) break;
      pc.positive_from = n;
    }
    if (pc.positive_from > 24)
      throw std::logic_error("stable order not positive from 24 for " + pc.stronger + "-" + pc.weaker);
    cert.pairs.push_back(std::move(pc));
  }

  cert.counterexample_n = 23;
  cert.counterexample_bishop_total = total_moves_closed(alphabet.piece("B"), 23);
  cert.counterexample_centaur_total = total_moves_closed(alphabet.piece("C"), 23);
  if (cert.counterexample_bishop_total >= cert.counterexample_centaur_total)
    throw std::logic_error("expected the bishop below the centaur at n=23");
  cert.verified = true;
  return cert;
}

NearCoincidence near_coincidence(std::string_view p, std::string_view q, std::int64_t lo,
                                 std::int64_t hi, const Alphabet& alphabet) {
  if (p == q) throw std::domain_error("near coincidence requires two distinct pieces");
  require_range(lo, hi, 4);
  const PieceInfo& pp = alphabet.piece(p);
  const PieceInfo& qq = alphabet.piece(q);
  NearCoincidence best;
  bool have = false;
  for (std::int64_t n = lo; n <= hi; ++n) {
    std::int64_t diff = total_moves_closed(pp, n) - total_moves_closed(qq, n);
    Rat gap = Rat(Int128(diff < 0 ? -diff : diff)) / pair_count(n);
    if (!have || gap < best.gap) {
      best = {n, gap};
      have = true;
    }
  }
  return best;
}

bool IdentityReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using CheckFn = IdentityCheck (*)(std::int64_t, std::int64_t);

IdentityCheck range_check(const std::string& name, std::int64_t lo, std::int64_t hi,
                          bool (*holds)(std::int64_t), const std::string& statement) {
  for (std::int64_t n = lo; n <= hi; ++n)
    if (!holds(n))
      return {name, false, statement + " fails at n=" + std::to_string(n)};
  return {name, true, statement + " for all n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"};
}

std::int64_t total_of(const char* id, std::int64_t n) {
  return total_moves_closed(Alphabet::canonical().piece(id), n);
}

Rat strength_of(const char* id, std::int64_t n) {
  return strength(Alphabet::canonical().piece(id), n);
}

}  // namespace

IdentityReport verify_identity_suite(std::int64_t lo, std::int64_t hi) {
  require_range(lo, hi, 4);
  IdentityReport report;
  report.lo = lo;
  report.hi = hi;

  report.checks.push_back(range_check(
      "king-knight-gap", lo, hi,
      [](std::int64_t n) {
        Int128 nn(n);
        return strength_of("K", n) - strength_of("N", n) == Rat(Int128(12), nn * nn * (nn + Int128(1)));
      },
      "str(K) - str(N) = 12/(n^2(n+1))"));

  report.checks.push_back(range_check(
      "kook-empress-gap", lo, hi,
      [](std::int64_t n) {
        Int128 nn(n);
        return strength_of("Kook", n) - strength_of("Em", n) ==
               Rat(Int128(12), nn * nn * (nn + Int128(1)));
      },
      "str(Kook) - str(Em) = 12/(n^2(n+1))"));

  report.checks.push_back(range_check(
      "bishop-king-proportionality", lo, hi,
      [](std::int64_t n) { return 12 * total_of("B", n) == n * total_of("K", n); },
      "12 T_B(n) = n T_K(n)"));

  {
    // Integer ratios T_K = k T_B occur exactly at the divisors of 12, which
    // for nontrivial boards means (k, n) in {(3,4), (2,6), (1,12)}.
    IdentityCheck check{"divisor-of-12", true, ""};
    std::vector<std::pair<std::int64_t, std::int64_t>> found, expected;
    for (auto [k, n] : {std::pair<std::int64_t, std::int64_t>{3, 4}, {2, 6}, {1, 12}})
      if (n >= lo && n <= hi) expected.emplace_back(k, n);
    for (std::int64_t n = lo; n <= hi; ++n) {
      std::int64_t tb = total_of("B", n), tk = total_of("K", n);
      if (tb != 0 && tk % tb == 0) found.emplace_back(tk / tb, n);
    }
    check.pass = found == expected;
    check.details = "integer-ratio boards (k, n): ";
    for (auto [k, n] : found) check.details += "(" + std::to_string(k) + ", " + std::to_string(n) + ") ";
    report.checks.push_back(std::move(check));
  }

  {
    // The knight-bishop crossing quadratic 2n^2 - 25n + 48 has discriminant
    // 241, strictly between 15^2 and 16^2, so its roots are irrational and
    // the totals never meet at an integer.
    IdentityCheck check{"knight-bishop-irrational", true, ""};
    std::int64_t disc = 25 * 25 - 4 * 2 * 48;
    bool square = false;
    for (std::int64_t r = 0; r * r <= disc; ++r)
      if (r * r == disc) square = true;
    check.pass = disc == 241 && !square;
    for (std::int64_t n = lo; n <= hi && check.pass; ++n)
      if (total_of("N", n) == total_of("B", n)) {
        check.pass = false;
        check.details = "totals meet at n=" + std::to_string(n);
      }
    if (check.pass)
      check.details = "discriminant 241 is not a perfect square; no integer crossing in range";
    report.checks.push_back(std::move(check));
  }

  {
    // The magic-board identities hold for totals but fail on both
    // parity components.
    IdentityCheck check{"parity-non-refinement", true, ""};
    auto fail = [&](std::int64_t n, const std::string& what) {
      check.pass = false;
      check.details += "n=" + std::to_string(n) + ": " + what + "; ";
    };
    if (lo <= 6 && 6 <= hi) {
      ParitySplit k = parity_split_closed("K", 6), bb = parity_split_closed("BB", 6);
      if (k.total() != bb.total()) fail(6, "base identity T_K = T_BB missing");
      if (k.plus == bb.plus || k.minus == bb.minus) fail(6, "parity components unexpectedly equal");
      if (k.plus != 100 || bb.plus != 220 || k.minus != 120 || bb.minus != 0)
        fail(6, "parity values differ from (100,120) vs (220,0)");
    }
    if (lo <= 8 && 8 <= hi) {
      ParitySplit r = parity_split_closed("R", 8);
      ParitySplit bb = parity_split_closed("BB", 8), nn = parity_split_closed("N", 8);
      if (r.total() != bb.total() + nn.total()) fail(8, "base identity T_R = T_BB + T_N missing");
      if (r.plus == bb.plus + nn.plus || r.minus == bb.minus + nn.minus)
        fail(8, "parity components unexpectedly equal");
      if (r.plus != 384 || bb.plus + nn.plus != 560 || r.minus != 512 || bb.minus + nn.minus != 336)
        fail(8, "parity values differ from (384,512) vs (560,336)");
    }
    if (lo <= 12 && 12 <= hi) {
      ParitySplit k = parity_split_closed("K", 12), b = parity_split_closed("B", 12);
      if (k.total() != b.total()) fail(12, "base identity T_K = T_B missing");
      if (k.plus == b.plus || k.minus == b.minus) fail(12, "parity components unexpectedly equal");
      if (k.plus != 484 || b.plus != 1012 || k.minus != 528 || b.minus != 0)
        fail(12, "parity values differ from (484,528) vs (1012,0)");
    }
    if (check.pass) check.details = "magic-board identities do not refine to parity components";
    report.checks.push_back(std::move(check));
  }

  {
    IdentityCheck check{"parity-small-coincidences", true, ""};
    if (lo <= 4 && 4 <= hi) {
      ParitySplit k = parity_split_closed("K", 4), n4 = parity_split_closed("N", 4);
      if (!(k.minus == 48 && n4.minus == 48)) {
        check.pass = false;
        check.details += "expected T_K- = T_N- = 48 at n=4; ";
      }
    }
    if (lo <= 5 && 5 <= hi) {
      ParitySplit k = parity_split_closed("K", 5), r = parity_split_closed("R", 5);
      ParitySplit bb = parity_split_closed("BB", 5);
      if (!(k.minus == 80 && r.plus == 80 && bb.plus == 120 && r.minus == 120)) {
        check.pass = false;
        check.details += "expected T_K- = T_R+ = 80 and T_BB+ = T_R- = 120 at n=5; ";
      }
    }
    if (check.pass) check.details = "small-board parity coincidences hold at n=4 and n=5";
    report.checks.push_back(std::move(check));
  }

  report.checks.push_back(range_check(
      "knight-bishop-fourier-orthogonality", lo, hi,
      [](std::int64_t n) {
        return parity_split_closed("N", n).plus == 0 && parity_split_closed("BB", n).minus == 0;
      },
      "T_N+ = 0 and T_BB- = 0 (disjoint Fourier support)"));

  if (lo <= 10 && 10 <= hi) {
    NearCoincidence nc = near_coincidence("N", "B", lo, hi);
    bool ok = nc.n == 10 && nc.gap == Rat(1, 1650);
    report.checks.push_back({"bishop-knight-near-coincidence", ok,
                             "minimum gap " + nc.gap.str() + " at n=" + std::to_string(nc.n)});
  }

  return report;
}

SignatureCensus signature_census(std::int64_t lo, std::int64_t hi, const Alphabet& alphabet) {
  require_range(lo, hi, 4);
  SignatureCensus census;
  for (std::int64_t n = lo; n <= hi; ++n) {
    Signature sig = signature(n, alphabet);
    SignatureCensus::Entry* entry = nullptr;
    for (auto& e : census.entries)
      if (e.sig == sig) entry = &e;
    if (!entry) {
      census.entries.push_back({std::move(sig), {}});
      entry = &census.entries.back();
    }
    if (!entry->intervals.empty() && entry->intervals.back().second == n - 1)
      entry->intervals.back().second = n;
    else
      entry->intervals.emplace_back(n, n);
  }
  return census;
}

}  // namespace mobility
