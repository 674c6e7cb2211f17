// Command-line front end. Every subcommand prints a table by default and
// byte-deterministic JSON or CSV with --format; exact rationals render as
// "p/q" with decimals as a presentation-only extra column.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mobility/algebra.hpp"
#include "mobility/analysis.hpp"
#include "mobility/movegen.hpp"

using namespace mobility;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

enum class Format { table, json, csv };

struct Options {
  Format format = Format::table;
  int decimals = 4;
  std::string alphabet_file;
};

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw CLI::ValidationError("--format", "expected table, json or csv");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

// Uniform tabular output: one header row plus string cells.
struct TableOut {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;

  void emit(Format format, const std::string& command) const {
    if (format == Format::csv) {
      auto line = [](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) out += ",";
          out += csv_field(cells[i]);
        }
        return out;
      };
      std::cout << line(headers) << "\n";
      for (const auto& row : rows) std::cout << line(row) << "\n";
      return;
    }
    if (format == Format::json) {
      ordered_json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = command;
      ordered_json out = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json obj;
        for (std::size_t i = 0; i < headers.size(); ++i) obj[headers[i]] = row[i];
        out.push_back(obj);
      }
      doc["rows"] = out;
      std::cout << doc.dump(2) << "\n";
      return;
    }
    std::vector<std::size_t> width(headers.size());
    for (std::size_t i = 0; i < headers.size(); ++i) width[i] = headers[i].size();
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto print_row = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) std::cout << "  ";
        std::cout << cells[i];
        if (i + 1 < cells.size()) std::cout << std::string(width[i] - cells[i].size(), ' ');
      }
      std::cout << "\n";
    };
    print_row(headers);
    for (const auto& row : rows) print_row(row);
  }
};

Alphabet load_alphabet(const Options& opt) {
  if (opt.alphabet_file.empty()) return Alphabet::canonical();
  return Alphabet::with_extensions_from_file(opt.alphabet_file);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) next = s.size();
    if (next > pos) out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

const PieceInfo& lookup_piece(const Alphabet& alphabet, const std::string& id) {
  if (id == "BB") return double_bishop();
  return alphabet.piece(id);
}

std::vector<const PieceInfo*> select_pieces(const Alphabet& alphabet, const std::string& list) {
  std::vector<const PieceInfo*> out;
  if (list.empty()) {
    for (const PieceInfo& p : alphabet.pieces()) out.push_back(&p);
  } else {
    for (const std::string& id : split_list(list, ',')) out.push_back(&lookup_piece(alphabet, id));
  }
  return out;
}

std::string pair_str(const std::pair<std::string, std::string>& p) {
  return "{" + p.first + "," + p.second + "}";
}

std::string atomic_str(const AtomicVec& v) {
  std::string out = "(";
  for (int k = 0; k < 4; ++k) {
    if (k) out += ",";
    out += std::to_string(v[static_cast<std::size_t>(k)]);
  }
  return out + ")";
}

// -- subcommand bodies ------------------------------------------------------

int cmd_totals(const Options& opt, std::int64_t n) {
  Alphabet alphabet = load_alphabet(opt);
  TableOut t;
  t.headers = {"piece", "total"};
  for (const PieceInfo& p : alphabet.pieces())
    t.rows.push_back({p.id, std::to_string(total_moves_closed(p, n))});
  t.emit(opt.format, "totals");
  return 0;
}

int cmd_strength(const Options& opt, std::int64_t n, const std::string& pieces) {
  Alphabet alphabet = load_alphabet(opt);
  TableOut t;
  t.headers = {"piece", "total", "strength", "decimal"};
  for (const PieceInfo* p : select_pieces(alphabet, pieces)) {
    Rat s = strength(*p, n);
    t.rows.push_back({p->id, std::to_string(total_moves_closed(*p, n)), s.str(),
                      s.decimal_str(opt.decimals)});
  }
  t.emit(opt.format, "strength");
  return 0;
}

int cmd_grid(const Options& opt, const std::string& piece, std::int64_t n) {
  Alphabet alphabet = load_alphabet(opt);
  MobilityGrid grid = mobility_grid(lookup_piece(alphabet, piece).def, static_cast<int>(n));
  if (opt.format == Format::json) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "grid";
    doc["piece"] = piece;
    doc["n"] = n;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < grid.n; ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < grid.n; ++j) row.push_back(grid.at(i, j));
      rows.push_back(row);
    }
    doc["counts"] = rows;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  if (opt.format == Format::csv) {
    TableOut t;
    t.headers = {"i", "j", "count"};
    for (int i = 0; i < grid.n; ++i)
      for (int j = 0; j < grid.n; ++j)
        t.rows.push_back({std::to_string(i), std::to_string(j), std::to_string(grid.at(i, j))});
    t.emit(opt.format, "grid");
    return 0;
  }
  for (int i = 0; i < grid.n; ++i) {
    for (int j = 0; j < grid.n; ++j) std::printf("%4lld", static_cast<long long>(grid.at(i, j)));
    std::printf("\n");
  }
  return 0;
}

int cmd_parity(const Options& opt, std::int64_t n, const std::string& character,
               const std::string& pieces) {
  Alphabet alphabet = load_alphabet(opt);
  Character chi = parse_character(character);
  TableOut t;
  t.headers = {"piece", "character", "plus", "minus", "total"};
  for (const PieceInfo* p : select_pieces(alphabet, pieces)) {
    ParitySplit s = parity_split_bruteforce(p->def, static_cast<int>(n), chi);
    t.rows.push_back({p->id, character_name(chi), std::to_string(s.plus), std::to_string(s.minus),
                      std::to_string(s.total())});
  }
  t.emit(opt.format, "parity");
  return 0;
}

int cmd_signature(const Options& opt, std::int64_t n) {
  Alphabet alphabet = load_alphabet(opt);
  Signature sig = signature(n, alphabet);
  if (opt.format == Format::json) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "signature";
    doc["n"] = n;
    doc["blocks"] = sig.blocks;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  if (opt.format == Format::csv) {
    TableOut t;
    t.headers = {"rank", "pieces"};
    for (std::size_t i = 0; i < sig.blocks.size(); ++i) {
      std::string ids;
      for (const std::string& id : sig.blocks[i]) ids += (ids.empty() ? "" : "+") + id;
      t.rows.push_back({std::to_string(i + 1), ids});
    }
    t.emit(opt.format, "signature");
    return 0;
  }
  std::cout << "n=" << n << ": " << sig.str() << "\n";
  return 0;
}

int cmd_transitions(const Options& opt, std::int64_t lo, std::int64_t hi) {
  Alphabet alphabet = load_alphabet(opt);
  TableOut t;
  t.headers = {"n", "changed_pairs", "coincidences"};
  for (const Transition& tr : scan_transitions(lo, hi, alphabet)) {
    std::string changed, ties;
    for (const auto& p : tr.changed_pairs) changed += (changed.empty() ? "" : " ") + pair_str(p);
    for (const auto& p : tr.coincidences_at_n) ties += (ties.empty() ? "" : " ") + pair_str(p);
    t.rows.push_back({std::to_string(tr.n), changed, ties});
  }
  t.emit(opt.format, "transitions");
  return 0;
}

int cmd_coincidences(const Options& opt, std::int64_t lo, std::int64_t hi) {
  Alphabet alphabet = load_alphabet(opt);
  TableOut t;
  t.headers = {"n", "p", "q", "total"};
  for (const Coincidence& c : scan_coincidences(lo, hi, alphabet))
    t.rows.push_back({std::to_string(c.n), c.p, c.q, std::to_string(c.total)});
  t.emit(opt.format, "coincidences");
  return 0;
}

int cmd_certify(const Options& opt) {
  StabilityCertificate cert = stable_ordering_certificate();
  if (opt.format == Format::json) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "certify";
    doc["verified"] = cert.verified;
    ordered_json pairs = ordered_json::array();
    for (const PairCertificate& pc : cert.pairs) {
      ordered_json e;
      e["stronger"] = pc.stronger;
      e["weaker"] = pc.weaker;
      ordered_json coeffs = ordered_json::array();
      for (const Rat& c : pc.difference.coeffs()) coeffs.push_back(c.str());
      e["difference_coeffs_ascending"] = coeffs;
      e["difference"] = pc.difference.str();
      e["cauchy_bound"] = pc.cauchy_bound;
      e["positive_from"] = pc.positive_from;
      std::string signs;
      for (int s : pc.signs) signs += s > 0 ? '+' : s < 0 ? '-' : '0';
      e["sign_table_4_to_bound"] = signs;
      pairs.push_back(e);
    }
    doc["pairs"] = pairs;
    doc["counterexample"] = {{"n", cert.counterexample_n},
                             {"bishop_total", cert.counterexample_bishop_total},
                             {"centaur_total", cert.counterexample_centaur_total}};
    std::cout << doc.dump(2) << "\n";
    return cert.verified ? 0 : 3;
  }
  TableOut t;
  t.headers = {"stronger", "weaker", "difference", "cauchy_bound", "positive_from", "signs[4..N0]"};
  for (const PairCertificate& pc : cert.pairs) {
    std::string signs;
    for (int s : pc.signs) signs += s > 0 ? '+' : s < 0 ? '-' : '0';
    t.rows.push_back({pc.stronger, pc.weaker, pc.difference.str(), std::to_string(pc.cauchy_bound),
                      std::to_string(pc.positive_from), signs});
  }
  t.emit(opt.format, "certify");
  if (opt.format == Format::table) {
    std::cout << "counterexample at n=" << cert.counterexample_n
              << ": T_B=" << cert.counterexample_bishop_total
              << " < T_C=" << cert.counterexample_centaur_total << "\n"
              << (cert.verified ? "CERTIFIED: strict order fixed for all n >= 24\n" : "FAILED\n");
  }
  return cert.verified ? 0 : 3;
}

int cmd_identities(const Options& opt, std::int64_t lo, std::int64_t hi) {
  IdentityReport report = verify_identity_suite(lo, hi);
  TableOut t;
  t.headers = {"check", "result", "details"};
  for (const IdentityCheck& c : report.checks)
    t.rows.push_back({c.name, c.pass ? "PASS" : "FAIL", c.details});
  t.emit(opt.format, "identities");
  return report.all_pass() ? 0 : 3;
}

int cmd_kernel(const Options& opt, std::int64_t n, int bound) {
  TableOut t;
  t.headers = {"kind", "vector"};
  for (const AtomicVec& v : single_piece_kernel_directions(n))
    t.rows.push_back({"single-piece", atomic_str(v)});
  for (const AtomicVec& v : kernel_lattice_search(n, bound))
    t.rows.push_back({"lattice", atomic_str(v)});
  t.emit(opt.format, "kernel");
  return 0;
}

int cmd_rules(const Options& opt, std::int64_t n, int max_rhs) {
  TableOut t;
  t.headers = {"rule", "atomic_delta", "piece_count_delta", "n"};
  for (const SubstitutionRule& r : substitution_rules(n, max_rhs))
    t.rows.push_back({r.str(), atomic_str(r.delta), std::to_string(r.piece_count_delta),
                      std::to_string(r.n)});
  t.emit(opt.format, "rules");
  return 0;
}

int cmd_army(const Options& opt, const std::string& literal, std::int64_t n) {
  Army f = Army::parse(literal);
  Rat s = army_strength(f, n);
  TableOut t;
  t.headers = {"army", "pieces", "atomic_vector", "strength", "decimal"};
  t.rows.push_back({f.str(), std::to_string(f.total_pieces()), atomic_str(army_atomic_vector(f)),
                    s.str(), s.decimal_str(opt.decimals)});
  t.emit(opt.format, "army");
  return 0;
}

int cmd_armies(const Options& opt, std::int64_t n, const std::string& target, const std::string& eps,
               bool list, std::int64_t limit) {
  if (target.empty()) {
    TableOut t;
    t.headers = {"armies"};
    t.rows.push_back({std::to_string(army_count())});
    t.emit(opt.format, "armies");
    return 0;
  }
  AppropriateArmies res = appropriate_armies(n, Rat::parse(target), Rat::parse(eps), list);
  TableOut t;
  if (list) {
    t.headers = {"army", "strength", "decimal"};
    std::int64_t shown = 0;
    for (const Army& f : res.matches) {
      if (limit > 0 && shown >= limit) break;
      Rat s = army_strength(f, n);
      t.rows.push_back({f.str(), s.str(), s.decimal_str(opt.decimals)});
      ++shown;
    }
  } else {
    t.headers = {"matching_armies", "n", "target", "eps"};
    t.rows.push_back({std::to_string(res.count), std::to_string(n), Rat::parse(target).str(),
                      Rat::parse(eps).str()});
  }
  t.emit(opt.format, "armies");
  return 0;
}

int cmd_orbit(const Options& opt, const std::string& literal, const std::string& rule_text,
              std::int64_t n) {
  auto eq = rule_text.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("rule literal must look like LHS=RHS or LHS=R1+R2");
  std::string lhs = rule_text.substr(0, eq);
  std::vector<std::string> rhs = split_list(rule_text.substr(eq + 1), '+');
  SubstitutionRule rule = find_rule(n, lhs, rhs);

  Army f = Army::parse(literal);
  TableOut t;
  t.headers = {"army", "pieces", "strength"};
  for (const Army& g : orbit_under_rule(f, rule))
    t.rows.push_back({g.str(), std::to_string(g.total_pieces()), army_strength(g, n).str()});
  t.emit(opt.format, "orbit");
  return 0;
}

int cmd_ratios(const Options& opt) {
  TableOut t;
  t.headers = {"p", "q", "quotient"};
  for (const RatioEntry& e : polynomial_ratio_scan()) t.rows.push_back({e.p, e.q, e.quotient.str()});
  t.emit(opt.format, "ratios");
  return 0;
}

int cmd_plotdata(const Options& opt, std::int64_t lo, std::int64_t hi, const std::string& pieces) {
  Alphabet alphabet = load_alphabet(opt);
  TableOut t;
  t.headers = {"n", "piece", "strength", "decimal"};
  for (std::int64_t n = lo; n <= hi; ++n)
    for (const PieceInfo* p : select_pieces(alphabet, pieces)) {
      Rat s = strength(*p, n);
      t.rows.push_back({std::to_string(n), p->id, s.str(), s.decimal_str(opt.decimals)});
    }
  t.emit(opt.format == Format::table ? Format::csv : opt.format, "plotdata");
  return 0;
}

// Cross-checks everything the library computes over a range; one PASS/FAIL
// line per check.
int cmd_verify(std::int64_t lo, std::int64_t hi) {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) std::cout << " - " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  };

  IdentityReport ids = verify_identity_suite(lo, hi);
  for (const IdentityCheck& c : ids.checks) report("identity/" + c.name, c.pass, c.details);

  {
    std::vector<Coincidence> cs = scan_coincidences(lo, std::min<std::int64_t>(hi, 10000));
    std::vector<std::tuple<std::int64_t, std::string, std::string>> got, want;
    for (const Coincidence& c : cs) got.emplace_back(c.n, c.p, c.q);
    std::vector<std::tuple<std::int64_t, std::string, std::string>> all = {
        {6, "Q", "Kook"}, {6, "AB", "C"}, {6, "Am", "Nork"},
        {8, "R", "AB"},   {12, "K", "B"}, {12, "AB", "AK"}};
    for (const auto& e : all)
      if (std::get<0>(e) >= lo && std::get<0>(e) <= hi) want.push_back(e);
    report("coincidence-classification", got == want,
           std::to_string(got.size()) + " coincidences in range");
  }

  {
    bool ok = true;
    std::int64_t first_bad = -1;
    std::vector<std::int64_t> sample;
    for (std::int64_t n = 2; n <= std::min<std::int64_t>(hi, 16); ++n) sample.push_back(n);
    for (std::int64_t n : {20, 24, 32, 48, 60})
      if (n <= hi) sample.push_back(n);
    const Alphabet& alphabet = Alphabet::canonical();
    for (std::int64_t n : sample)
      for (const PieceInfo& p : alphabet.pieces())
        if (total_moves_closed(p, n) != total_moves_bruteforce(p.def, static_cast<int>(n))) {
          ok = false;
          first_bad = n;
        }
    for (std::int64_t n : sample)
      for (const char* id : {"K", "N", "B", "R"}) {
        ParitySplit closed = parity_split_closed(id, n);
        ParitySplit oracle =
            parity_split_bruteforce(alphabet.piece(id).def, static_cast<int>(n), Character::color);
        if (closed.plus != oracle.plus || closed.minus != oracle.minus) {
          ok = false;
          first_bad = n;
        }
      }
    report("oracle-equivalence", ok,
           ok ? "closed forms match the brute-force oracle at " + std::to_string(sample.size()) +
                    " sampled board sizes"
              : "mismatch at n=" + std::to_string(first_bad));
  }

  try {
    StabilityCertificate cert = stable_ordering_certificate();
    report("stable-ordering-certificate", cert.verified,
           "12 adjacent differences positive from 24; counterexample at 23");
  } catch (const std::exception& e) {
    report("stable-ordering-certificate", false, e.what());
  }

  if (hi >= 5) {
    std::int64_t tlo = std::max<std::int64_t>(lo, 5), thi = std::min<std::int64_t>(hi, 100);
    std::vector<std::int64_t> got;
    for (const Transition& t : scan_transitions(tlo, thi)) got.push_back(t.n);
    std::vector<std::int64_t> want;
    for (std::int64_t n : {5, 6, 7, 8, 9, 11, 12, 13, 24})
      if (n >= tlo && n <= thi) want.push_back(n);
    report("transition-set", got == want, std::to_string(got.size()) + " transitions in range");

    SignatureCensus census = signature_census(lo, std::min<std::int64_t>(hi, 200));
    std::size_t expected = got.size() + 1;
    bool ok = census.entries.size() == expected;
    if (lo == 4 && hi >= 24) ok = ok && census.entries.size() == 10;
    report("signature-census", ok, std::to_string(census.entries.size()) + " distinct signatures");
  }

  {
    bool ok = army_count() == 77520;
    report("army-count", ok, "77520 armies");
    ok = army_strength(Army::standard(), 8) == Rat(175, 144) &&
         std_army_strength_closed(8) == Rat(175, 144) &&
         army_strength(Army::standard(), 10) == Rat(793, 825) &&
         std_army_strength_closed(10) == Rat(793, 825) &&
         army_strength(Army::standard(), 12) == Rat(371, 468) &&
         std_army_strength_closed(12) == Rat(371, 468);
    report("standard-army-strength", ok, "175/144, 793/825, 371/468 via both routes");

    ok = single_piece_kernel_directions(6) == std::vector<AtomicVec>{{1, 0, -2, 0}} &&
         single_piece_kernel_directions(8) == std::vector<AtomicVec>{{0, 1, 2, -1}} &&
         single_piece_kernel_directions(12) == std::vector<AtomicVec>{{1, 0, -1, 0}} &&
         single_piece_kernel_directions(10).empty();
    report("kernel-directions", ok, "magic boards 6, 8, 12 only");

    ok = substitution_rules(6, 2).size() == 12 && substitution_rules(12, 1).size() == 2 &&
         orbit_under_rule(Army::standard(), find_rule(8, "R", {"AB"})).size() == 3;
    report("substitution-rules", ok, "6: 3+9 rules; 12: 2 single-piece; orbit of Std has 3 armies");

    std::vector<RatioEntry> ratios = polynomial_ratio_scan();
    ok = ratios.size() == 1 && ratios[0].p == "B" && ratios[0].q == "K" &&
         ratios[0].quotient == Poly({Rat(0), Rat(1, 12)});
    report("polynomial-ratio-scan", ok, "T_B/T_K = n/12 is the only polynomial ratio");
  }

  {
    Alphabet wazir = Alphabet::with_extensions("Wazir leaper 1 0\n");
    std::vector<Coincidence> cs = scan_coincidences(4, 100, wazir);
    bool ok = !cs.empty() && cs[0].n == 4 && cs[0].p == "N" && cs[0].q == "Wazir" && cs[0].total == 48;
    Alphabet dabbabah = Alphabet::with_extensions("Dabbabah leaper 0 2\n");
    cs = scan_coincidences(4, 100, dabbabah);
    ok = ok && !cs.empty() && cs[0].n == 5 && cs[0].p == "B" && cs[0].q == "Dabbabah" && cs[0].total == 60;
    Alphabet trio = Alphabet::with_extensions("L05 leaper 0 5\nL26 leaper 2 6\nL45 leaper 4 5\n");
    int trio_pairs = 0;
    for (const Coincidence& c : scan_coincidences(8, 8, trio))
      if (c.total == 96) ++trio_pairs;
    ok = ok && trio_pairs == 3;
    report("extension-alphabets", ok, "Wazir at 4, Dabbabah at 5, leaper triple at 8");
  }

  if (failures == 0) {
    std::cout << "ALL PASS\n";
    return 0;
  }
  std::cout << failures << " FAILURES\n";
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mobility, strength and coincidence analysis for chess pieces on n x n boards"};
  app.require_subcommand(1);

  Options opt;
  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format: table, json or csv")->capture_default_str();
  app.add_option("--decimals", opt.decimals, "Decimal places in presentation columns")
      ->capture_default_str();
  app.add_option("--alphabet", opt.alphabet_file, "Extension piece definition file");

  std::int64_t n = 8, lo = 4, hi = 100;
  int bound = 8, max_rhs = 2;
  std::int64_t limit = 0;
  std::string pieces, piece_id = "K", army_literal, rule_text, target, eps = "0";
  std::string character = "color";
  bool list = false;

  CLI::App* totals = app.add_subcommand("totals", "Move totals of every piece at one board size");
  totals->add_option("--n", n, "Board size")->required();

  CLI::App* strength_cmd = app.add_subcommand("strength", "Exact strengths at one board size");
  strength_cmd->add_option("--n", n, "Board size")->required();
  strength_cmd->add_option("--pieces", pieces, "Comma-separated piece ids (default: all)");

  CLI::App* grid = app.add_subcommand("grid", "Per-square mobility grid (raw counts)");
  grid->add_option("--piece", piece_id, "Piece id (BB for the double bishop)")->required();
  grid->add_option("--n", n, "Board size")->required();

  CLI::App* parity = app.add_subcommand("parity", "Character parity split of move totals");
  parity->add_option("--n", n, "Board size")->required();
  parity->add_option("--character", character, "color, row or col")->capture_default_str();
  parity->add_option("--pieces", pieces, "Comma-separated piece ids (default: all)");

  CLI::App* sig = app.add_subcommand("signature", "Strength ordering with ties at one board size");
  sig->add_option("--n", n, "Board size")->required();

  CLI::App* trans = app.add_subcommand("transitions", "Board sizes where the ordering changes");
  trans->add_option("--from", lo, "Range start")->required();
  trans->add_option("--to", hi, "Range end")->required();

  CLI::App* coin = app.add_subcommand("coincidences", "Equal-strength piece pairs over a range");
  coin->add_option("--from", lo, "Range start")->required();
  coin->add_option("--to", hi, "Range end")->required();

  app.add_subcommand("certify", "Stable-ordering certificate for n >= 24");

  CLI::App* ident = app.add_subcommand("identities", "Exact identity suite over a range");
  ident->add_option("--from", lo, "Range start")->required();
  ident->add_option("--to", hi, "Range end")->required();

  CLI::App* kernel = app.add_subcommand("kernel", "Kernel directions of the strength functional");
  kernel->add_option("--n", n, "Board size")->required();
  kernel->add_option("--bound", bound, "Lattice search bound (<= 20)")->capture_default_str();

  CLI::App* rules = app.add_subcommand("rules", "Strength-preserving substitution rules");
  rules->add_option("--n", n, "Board size")->required();
  rules->add_option("--max-rhs", max_rhs, "Largest right side (1 or 2)")->capture_default_str();

  CLI::App* army = app.add_subcommand("army", "Strength of an army literal");
  army->add_option("--army", army_literal, "Army literal, e.g. K:1,Q:1,R:2,B:2,N:2")->required();
  army->add_option("--n", n, "Board size")->required();

  CLI::App* armies = app.add_subcommand("armies", "Count or filter the valid armies");
  armies->add_option("--n", n, "Board size (with --target)");
  armies->add_option("--target", target, "Target strength p/q");
  armies->add_option("--eps", eps, "Tolerance p/q")->capture_default_str();
  armies->add_flag("--list", list, "List matching armies");
  armies->add_option("--limit", limit, "Cap listed armies (0 = no cap)");

  CLI::App* orbit = app.add_subcommand("orbit", "Closure of an army under one substitution rule");
  orbit->add_option("--army", army_literal, "Army literal")->required();
  orbit->add_option("--rule", rule_text, "Rule literal, e.g. R=AB or K=B+B")->required();
  orbit->add_option("--n", n, "Board size")->required();

  app.add_subcommand("ratios", "Polynomial ratios among basic-piece totals");

  CLI::App* plot = app.add_subcommand("plotdata", "Strength-versus-n data for plotting (CSV)");
  plot->add_option("--from", lo, "Range start")->required();
  plot->add_option("--to", hi, "Range end")->required();
  plot->add_option("--pieces", pieces, "Comma-separated piece ids (default: all)");

  CLI::App* verify = app.add_subcommand("verify", "Run every verification suite over a range");
  verify->add_option("--from", lo, "Range start")->required();
  verify->add_option("--to", hi, "Range end")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    opt.format = parse_format(format_name);
    if (totals->parsed()) return cmd_totals(opt, n);
    if (strength_cmd->parsed()) return cmd_strength(opt, n, pieces);
    if (grid->parsed()) return cmd_grid(opt, piece_id, n);
    if (parity->parsed()) return cmd_parity(opt, n, character, pieces);
    if (sig->parsed()) return cmd_signature(opt, n);
    if (trans->parsed()) return cmd_transitions(opt, lo, hi);
    if (coin->parsed()) return cmd_coincidences(opt, lo, hi);
    if (app.get_subcommand("certify")->parsed()) return cmd_certify(opt);
    if (ident->parsed()) return cmd_identities(opt, lo, hi);
    if (kernel->parsed()) return cmd_kernel(opt, n, bound);
    if (rules->parsed()) return cmd_rules(opt, n, max_rhs);
    if (army->parsed()) return cmd_army(opt, army_literal, n);
    if (armies->parsed()) return cmd_armies(opt, n, target, eps, list, limit);
    if (orbit->parsed()) return cmd_orbit(opt, army_literal, rule_text, n);
    if (app.get_subcommand("ratios")->parsed()) return cmd_ratios(opt);
    if (plot->parsed()) return cmd_plotdata(opt, lo, hi, pieces);
    if (verify->parsed()) return cmd_verify(lo, hi);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
