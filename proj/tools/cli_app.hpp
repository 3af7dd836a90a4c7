#pragma once

// Command-line front end. Every command builds a Report (sorted JSON) and,
// for tabular commands, a table that can also be written as CSV.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qclass/qclass.hpp"

namespace qclass::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<json> rows;  // objects keyed by column
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<std::string> provenance;
  std::optional<Table> table;

  json to_json() const {
    json out;
    out["command"] = command;
    out["inputs"] = inputs;
    out["results"] = results;
    out["provenance"] = provenance;
    if (table) out["results"]["table"] = table->rows;
    return out;
  }
};

struct GlobalOptions {
  Bits bits = kDefaultBits;
  std::size_t max_terms = 10000;
  std::string format = "json";
  int digits = 20;
};

// --- serialization ---------------------------------------------------------

inline json enclosure(const RigorousReal& x, int digits) {
  return {{"enclosure", {x.lower_string(digits), x.upper_string(digits)}},
          {"mid", x.mid_string(digits)},
          {"digits", digits}};
}

inline bool is_enclosure(const json& v) { return v.is_object() && v.contains("enclosure"); }

inline std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string csv_cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << csv_quote(cells[i]);
  }
  out << '\n';
}

// Enclosure cells expand into _lo, _hi and _mid columns.
inline void write_csv_table(std::ostream& out, const Table& table) {
  std::vector<std::string> header;
  std::vector<bool> expand;
  for (const auto& c : table.columns) {
    const bool enc = !table.rows.empty() && is_enclosure(table.rows.front().value(c, json()));
    expand.push_back(enc);
    if (enc) {
      header.insert(header.end(), {c + "_lo", c + "_hi", c + "_mid"});
    } else {
      header.push_back(c);
    }
  }
  write_csv_row(out, header);
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      const json v = row.value(table.columns[i], json());
      if (expand[i] && is_enclosure(v)) {
        cells.push_back(v["enclosure"][0].get<std::string>());
        cells.push_back(v["enclosure"][1].get<std::string>());
        cells.push_back(v["mid"].get<std::string>());
      } else if (expand[i]) {
        cells.insert(cells.end(), {csv_cell(v), "", ""});
      } else {
        cells.push_back(csv_cell(v));
      }
    }
    write_csv_row(out, cells);
  }
}

// Non-tabular results as key,value rows with dotted keys.
inline void flatten(const json& v, const std::string& prefix, std::vector<std::vector<std::string>>& rows) {
  if (is_enclosure(v)) {
    rows.push_back({prefix + ".lo", v["enclosure"][0].get<std::string>()});
    rows.push_back({prefix + ".hi", v["enclosure"][1].get<std::string>()});
    rows.push_back({prefix + ".mid", v["mid"].get<std::string>()});
  } else if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten(child, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), rows);
  } else {
    rows.push_back({prefix, csv_cell(v)});
  }
}

inline void emit(std::ostream& out, const Report& report, const std::string& format) {
  if (format == "json") {
    out << report.to_json().dump(2) << '\n';
    return;
  }
  if (report.table) {
    write_csv_table(out, *report.table);
    return;
  }
  std::vector<std::vector<std::string>> rows;
  flatten(report.results, "", rows);
  write_csv_row(out, {"key", "value"});
  for (const auto& r : rows) write_csv_row(out, r);
}

// --- argument helpers --------------------------------------------------------

inline mpq_class rational_arg(const std::string& text, const std::string& name) {
  try {
    return parse_rational(text);
  } catch (const DomainError&) {
    throw UsageError(name + ": expected a decimal or p/q, got '" + text + "'");
  }
}

inline RigorousReal enclosure_arg(const std::string& text, const std::string& name) {
  try {
    return parse_enclosure(text);
  } catch (const DomainError&) {
    throw UsageError(name + ": expected a decimal or p/q, got '" + text + "'");
  }
}

struct FamilyOptions {
  std::string family;
  long n = 0;
  std::string qq;
  std::string dimq;
};

inline void add_family_options(CLI::App* sub, FamilyOptions& f) {
  sub->add_option("--family", f.family, "o-plus | su2-ladder | so3-ladder | aut | u-plus")
      ->required()
      ->check(CLI::IsMember({"o-plus", "su2-ladder", "so3-ladder", "aut", "u-plus"}));
  sub->add_option("--N,--dim", f.n, "classical dimension of the fundamental representation")->required();
  auto* qq = sub->add_option("--qq", f.qq, "deformation q in (0, 1] of the quantum dimension");
  auto* dq = sub->add_option("--dimq", f.dimq, "quantum dimension of the fundamental representation");
  qq->excludes(dq);
  dq->excludes(qq);
}

inline FamilyKind family_kind(const std::string& name) {
  if (name == "o-plus" || name == "su2-ladder") return FamilyKind::Su2Ladder;
  if (name == "so3-ladder" || name == "aut") return FamilyKind::So3Ladder;
  if (name == "u-plus") return FamilyKind::FreeUnitary;
  throw UsageError("unknown family '" + name + "'");
}

inline FusionFamily make_family(const FamilyOptions& f) {
  const FamilyKind kind = family_kind(f.family);
  if (f.qq.empty() && f.dimq.empty()) throw UsageError("one of --qq or --dimq is required");
  if (!f.qq.empty()) return FusionFamily::from_deformation(kind, f.n, rational_arg(f.qq, "--qq"));
  const mpq_class d = rational_arg(f.dimq, "--dimq");
  return FusionFamily(kind, f.n, d);
}

inline json family_inputs(const FamilyOptions& f) {
  json j = {{"family", f.family}, {"N", f.n}};
  if (!f.qq.empty()) j["qq"] = f.qq;
  if (!f.dimq.empty()) j["dimq"] = f.dimq;
  return j;
}

inline json series_json(const SeriesResult& s, int digits) {
  json j = {{"verdict", to_string(s.verdict)},
            {"partial_sum", enclosure(s.partial_sum, digits)},
            {"terms_used", s.terms_used},
            {"bits_used", s.bits_used}};
  if (s.tail_bound) {
    j["tail_bound"] = enclosure(*s.tail_bound, digits);
    j["sum"] = enclosure(s.enclosure(), digits);
  }
  return j;
}

// --- commands ------------------------------------------------------------------

struct DimsArgs {
  FamilyOptions family;
  unsigned max = 10;
  unsigned word_len = 3;
};

inline Report cmd_dims(const DimsArgs& a, const GlobalOptions& g) {
  const FusionFamily family = make_family(a.family);
  Report r;
  r.command = "dims";
  r.inputs = family_inputs(a.family);
  r.provenance = {"quantum dimension of alternating words is [n+1]_q", "ladder dimension recursion"};
  std::vector<IrrepLabel> labels;
  if (is_ladder(family.kind())) {
    r.inputs["max"] = a.max;
    for (unsigned n = 0; n <= a.max; ++n) labels.emplace_back(Ladder{n});
  } else {
    r.inputs["word_len"] = a.word_len;
    if (a.word_len > kMaxKacWordLength) throw UsageError("--word-len must be at most 16");
    for (const FreeWord& w : qclass::detail::words_up_to(a.word_len)) labels.emplace_back(w);
  }
  const RigorousReal q = family.quantum_q();
  Table t{{"label", "dim", "dim_q", "ratio"}, {}};
  for (const auto& label : labels) {
    const mpz_class dc = classical_dim(label, family);
    const RigorousReal dq = quantum_dim_with_q(label, family, q);
    t.rows.push_back({{"label", to_string(label)},
                      {"dim", dc.get_str()},
                      {"dim_q", enclosure(dq, g.digits)},
                      {"ratio", enclosure(RigorousReal::from_mpz(dc) / dq, g.digits)}});
  }
  r.results["family"] = family.describe();
  r.results["rows"] = t.rows.size();
  r.table = std::move(t);
  return r;
}

struct SeriesArgs {
  FamilyOptions family;
  std::string tol = "1e-6";
};

inline json masa_json(const MasaVerdict& v) {
  return {{"quasi_split", to_string(v.quasi_split)},
          {"all_nontrivial_rho_nontrivial", v.all_nontrivial_rho_nontrivial},
          {"verdict", v.verdict_text}};
}

inline Report cmd_series(const SeriesArgs& a, const GlobalOptions& g) {
  const FusionFamily family = make_family(a.family);
  const RigorousReal tol = enclosure_arg(a.tol, "--tol");
  const SeriesBudget budget{g.max_terms, std::max<Bits>(1024, g.bits)};
  Report r;
  r.command = "series";
  r.inputs = family_inputs(a.family);
  r.inputs["tol"] = a.tol;
  r.results["family"] = family.describe();
  MasaBudget mb;
  mb.tol = tol;
  mb.series = budget;
  if (is_ladder(family.kind())) {
    r.provenance = {"quasi-split summability criterion", "exponential decay of A_n = dim_q(n) / dim(n)"};
    const SeriesResult s = quasi_split_sum_ladder(family, tol, budget);
    r.results["series"] = series_json(s, g.digits);
    r.results["verdict"] = to_string(s.verdict);
    if (!family.possibly_kac()) r.results["decay_certified_to_50"] = verify_decay(family, 50);
  } else {
    r.provenance = {"quasi-split summability criterion", "block series S and total sum (1 + S) / (1 - S)",
                    "closed-form upper bounds of S"};
    const RigorousReal qc = family.classical_q();
    const RigorousReal qq = family.quantum_q();
    const SeriesResult s = block_sum_S(qc, qq, tol, budget);
    r.results["S"] = series_json(s, g.digits);
    r.results["q_c"] = enclosure(qc, g.digits);
    r.results["q_q"] = enclosure(qq, g.digits);
    FreeTotal total;
    if (s.verdict == Verdict::Diverges) {
      total.verdict = Verdict::Diverges;
    } else if (s.verdict == Verdict::Converges) {
      total = total_sum_free(s.enclosure());
    }
    r.results["total"] = {{"verdict", to_string(total.verdict)}};
    if (total.value) r.results["total"]["value"] = enclosure(*total.value, g.digits);
    r.results["verdict"] = to_string(total.verdict);
    if (family.dim_c_fund() == 2 && certainly_lt(qq, 1L)) {
      r.results["bound_S"] = enclosure(bound_S_dim2(qq), g.digits);
    } else if (family.dim_c_fund() > 2 && certainly_lt(qq, qc)) {
      r.results["bound_S"] = enclosure(bound_S_dimge3(qc, qq), g.digits);
    }
  }
  r.results["masa"] = masa_json(masa_verdict(family, mb));
  return r;
}

struct ThresholdArgs {
  std::string which;
  std::string tol = "1e-4";
};

inline Report cmd_threshold(const ThresholdArgs& a, const GlobalOptions& g) {
  const RigorousReal tol = enclosure_arg(a.tol, "--tol");
  if (!certainly_gt(tol, 0L)) throw UsageError("--tol must be positive");
  Report r;
  r.command = "threshold";
  r.inputs = {{"which", a.which}};
  RigorousReal value;
  if (a.which == "dim2") {
    r.inputs["tol"] = a.tol;
    r.provenance = {"dim(alpha) = 2 threshold where the closed-form bound of S equals 1"};
    value = threshold_dim2(tol);
  } else if (a.which == "remark") {
    r.inputs["tol"] = a.tol;
    r.provenance = {"two-term lower bound of S equals 1"};
    value = threshold_remark(tol);
  } else {
    r.provenance = {"dim(alpha) >= 3 threshold ratio q_q / q_c"};
    value = threshold_ratio_dimge3();
  }
  r.results["value"] = enclosure(value, g.digits);
  return r;
}

struct MomentsArgs {
  FamilyOptions family;
  unsigned k_max = 8;
  std::string word;
};

inline Report cmd_moments(const MomentsArgs& a, const GlobalOptions&) {
  const FusionFamily family = make_family(a.family);
  Report r;
  r.command = "moments";
  r.inputs = family_inputs(a.family);
  r.provenance = {"moments of the fundamental character count invariant vectors"};
  Table t{{"k", "sequence", "multiplicity", "oracle", "oracle_value", "match"}, {}};
  auto add_row = [&](unsigned k, const std::string& text, const std::vector<IrrepLabel>& seq) {
    const auto got = invariant_multiplicity(seq, family);
    std::uint64_t expected = 0;
    std::string oracle;
    switch (family.kind()) {
      case FamilyKind::Su2Ladder:
        oracle = "noncrossing pairings";
        expected = combinatorics::noncrossing_pairings(static_cast<int>(k));
        break;
      case FamilyKind::So3Ladder:
        oracle = "noncrossing partitions without singletons";
        expected = combinatorics::noncrossing_without_singletons(static_cast<int>(k));
        break;
      case FamilyKind::FreeUnitary:
        oracle = "noncrossing A-B pairings";
        expected = combinatorics::noncrossing_ab_pairings(text);
        break;
    }
    t.rows.push_back({{"k", k},
                      {"sequence", text.empty() ? "e" : text},
                      {"multiplicity", got},
                      {"oracle", oracle},
                      {"oracle_value", expected},
                      {"match", got == expected}});
  };
  if (!a.word.empty()) {
    if (family.kind() != FamilyKind::FreeUnitary) throw UsageError("--word needs --family u-plus");
    r.inputs["word"] = a.word;
    std::vector<IrrepLabel> seq;
    for (char c : a.word) {
      if (c != 'A' && c != 'B') throw UsageError("--word letters must be A or B");
      seq.emplace_back(FreeWord(std::string(1, c)));
    }
    add_row(static_cast<unsigned>(a.word.size()), a.word, seq);
  } else {
    if (a.k_max > 16) throw UsageError("--k-max must be at most 16");
    r.inputs["k_max"] = a.k_max;
    for (unsigned k = 0; k <= a.k_max; ++k) {
      std::vector<IrrepLabel> seq;
      std::string text;
      for (unsigned i = 0; i < k; ++i) {
        if (family.kind() == FamilyKind::FreeUnitary) {
          text.push_back(i % 2 == 0 ? 'A' : 'B');
          seq.emplace_back(FreeWord(std::string(1, text.back())));
        } else {
          text += i ? " 1" : "1";
          seq.emplace_back(Ladder{1});
        }
      }
      add_row(k, text, seq);
    }
  }
  bool all = true;
  for (const auto& row : t.rows) all = all && row["match"].get<bool>();
  r.results["all_match"] = all;
  r.table = std::move(t);
  return r;
}

struct SpectralArgs {
  std::optional<unsigned> rho_ladder;
  std::string rho;
  std::string q = "0.5";
  std::string b = "0";
  std::string t;
};

inline Report cmd_spectral(const SpectralArgs& a, const GlobalOptions& g) {
  Report r;
  r.command = "spectral";
  r.provenance = {"norm of modular twists of an irreducible character", "modular action on coefficients"};
  RhoSpectrum rho;
  if (a.rho_ladder) {
    r.inputs["rho_ladder"] = *a.rho_ladder;
    r.inputs["q"] = a.q;
    rho = rho_spectrum(Ladder{*a.rho_ladder}, enclosure_arg(a.q, "--q"));
  } else if (!a.rho.empty()) {
    r.inputs["rho"] = a.rho;
    std::stringstream ss(a.rho);
    std::string item;
    while (std::getline(ss, item, ',')) rho.eigenvalues.push_back(enclosure_arg(item, "--rho"));
  } else {
    throw UsageError("one of --rho-ladder or --rho is required");
  }
  r.inputs["b"] = a.b;
  r.results["modular_norm_sq"] = enclosure(modular_norm_sq(rho, enclosure_arg(a.b, "--b")), g.digits);
  r.results["trace"] = enclosure(rho.trace(), g.digits);
  r.results["inverse_trace"] = enclosure(rho.inverse_trace(), g.digits);
  r.results["trace_balanced"] = rho.is_trace_balanced();
  json eig = json::array();
  for (const auto& l : rho.eigenvalues) eig.push_back(enclosure(l, g.digits));
  r.results["eigenvalues"] = eig;
  if (!a.t.empty()) {
    r.inputs["t"] = a.t;
    json coeffs = json::array();
    for (const auto& c : modular_eigencoefficients(rho, enclosure_arg(a.t, "--t"))) {
      coeffs.push_back({{"re", enclosure(c.re, g.digits)}, {"im", enclosure(c.im, g.digits)}});
    }
    r.results["eigencoefficients"] = coeffs;
  }
  return r;
}

struct JacobiArgs {
  std::size_t m = 8;
  std::string q = "0.5";
  double phase = 0;
};

inline std::string format_ld(long double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << static_cast<double>(v);
  return os.str();
}

inline Report cmd_jacobi(const JacobiArgs& a, const GlobalOptions&) {
  const mpq_class q = rational_arg(a.q, "--q");
  const long double ql = static_cast<long double>(q.get_d());
  Report r;
  r.command = "jacobi";
  r.inputs = {{"M", a.m}, {"q", a.q}, {"phase", a.phase}};
  r.provenance = {"cyclic vector and maximal abelian commutant of the weighted shift, at finite rank"};
  const JacobiOperator t = build_jacobi(a.m, ql);
  r.results["krylov_rank"] = krylov_rank(t);
  r.results["commutant_dim"] = commutant_dim(t);
  r.results["min_eigenvalue_gap"] = format_ld(min_eigenvalue_gap(t));
  json off = json::array();
  for (long double v : t.off_diagonal) off.push_back(format_ld(v));
  r.results["off_diagonal"] = off;
  if (a.m >= 4) {
    const RelationResiduals res = suq2_relation_residuals(a.m, ql, std::polar(1.0L, static_cast<long double>(a.phase)));
    json per = json::object();
    for (std::size_t i = 0; i < kRelationNames.size(); ++i) per[kRelationNames[i]] = format_ld(res.interior[i]);
    r.results["residuals"] = {{"interior_max", format_ld(res.interior_max)},
                              {"boundary_max", format_ld(res.boundary_max)},
                              {"interior", per}};
  }
  return r;
}

struct BicrossedArgs {
  std::string q;
  std::string mode;
  std::string ratio;
  std::string nu = "1";
  std::vector<std::string> times;
};

inline Report cmd_bicrossed(const BicrossedArgs& a, const GlobalOptions&) {
  const mpq_class q = rational_arg(a.q, "--q");
  std::optional<BicrossedParams> params;
  Report r;
  r.command = "bicrossed";
  r.inputs = {{"q", a.q}, {"mode", a.mode}};
  r.provenance = {"trivial and inner scaling automorphisms", "center and factoriality of the bicrossed product"};
  if (a.mode == "rational") {
    if (a.ratio.empty()) throw UsageError("--ratio is required in rational mode");
    r.inputs["ratio"] = a.ratio;
    params = BicrossedParams::rational(q, rational_arg(a.ratio, "--ratio"));
  } else {
    r.inputs["nu"] = a.nu;
    params = BicrossedParams::irrational(q, enclosure_arg(a.nu, "--nu"));
  }
  Table t{{"r", "s", "trivial", "inner"}, {}};
  r.inputs["t"] = a.times;
  for (const auto& item : a.times) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw UsageError("--t expects r,s");
    ScalingTime st{rational_arg(item.substr(0, comma), "--t"), rational_arg(item.substr(comma + 1), "--t")};
    t.rows.push_back({{"r", st.r.get_str()},
                      {"s", st.s.get_str()},
                      {"trivial", is_trivial_scaling(st, *params)},
                      {"inner", is_inner_scaling(st, *params)}});
  }
  const CenterDescription center = center_description(*params);
  r.results["center"] = {{"trivial", center.trivial}, {"description", center.to_string()}};
  if (!center.trivial) r.results["center"]["generator"] = center.generator.get_str();
  r.results["factor_report"] = factor_report(*params);
  r.table = std::move(t);
  return r;
}

inline Report cmd_report(const GlobalOptions&) {
  Report r;
  r.command = "report";
  r.provenance = {"acceptance grid"};
  Table t{{"id", "title", "pass", "detail"}, {}};
  std::size_t passed = 0;
  for (const auto& c : acceptance::run_all()) {
    passed += c.pass;
    t.rows.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
  }
  r.results["passed"] = passed;
  r.results["total"] = t.rows.size();
  r.table = std::move(t);
  return r;
}

// --- driver --------------------------------------------------------------------

// Reads --config FILE and appends its entries as flags not already given.
inline std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  json config;
  try {
    in >> config;
  } catch (const json::parse_error& e) {
    throw UsageError("invalid config file: " + std::string(e.what()));
  }
  if (!config.is_object()) throw UsageError("config file must hold a JSON object");
  std::set<std::string> given;
  for (const auto& a : args) {
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  }
  for (const auto& [key, value] : config.items()) {
    if (given.count(key)) continue;
    auto push = [&](const json& v) {
      args.push_back("--" + key);
      args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    };
    if (value.is_array()) {
      for (const auto& v : value) push(v);
    } else {
      push(value);
    }
  }
  return args;
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Class-function calculus of compact quantum groups"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--bits", g.bits, "working precision in bits")
      ->envname("QCLASS_BITS")
      ->check(CLI::Range(Bits{32}, kMaxBits));
  app.add_option("--max-terms", g.max_terms, "series term budget")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--digits", g.digits, "significant digits of enclosure endpoints")->check(CLI::Range(5, 200));

  DimsArgs dims;
  auto* dims_cmd = app.add_subcommand("dims", "table of dim, dim_q and ratio");
  add_family_options(dims_cmd, dims.family);
  dims_cmd->add_option("--max", dims.max, "largest ladder label");
  dims_cmd->add_option("--word-len", dims.word_len, "longest free word");

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "quasi-split summability series");
  add_family_options(series_cmd, series.family);
  series_cmd->add_option("--tol", series.tol, "tail tolerance");

  ThresholdArgs threshold;
  auto* threshold_cmd = app.add_subcommand("threshold", "certified thresholds of the block series");
  threshold_cmd->add_option("--which", threshold.which, "dim2 | ratio3 | remark")
      ->required()
      ->check(CLI::IsMember({"dim2", "ratio3", "remark"}));
  threshold_cmd->add_option("--tol", threshold.tol, "enclosure width");

  MomentsArgs moments;
  auto* moments_cmd = app.add_subcommand("moments", "invariant multiplicities against combinatorial counts");
  add_family_options(moments_cmd, moments.family);
  moments_cmd->add_option("--k-max", moments.k_max, "largest moment");
  moments_cmd->add_option("--word", moments.word, "explicit word over A, B (u-plus)");

  SpectralArgs spectral;
  auto* spectral_cmd = app.add_subcommand("spectral", "modular twists of characters");
  spectral_cmd->add_option("--rho-ladder", spectral.rho_ladder, "ladder label n");
  spectral_cmd->add_option("--rho", spectral.rho, "explicit comma-separated spectrum");
  spectral_cmd->add_option("--q", spectral.q, "deformation q");
  spectral_cmd->add_option("--b", spectral.b, "imaginary part b of z = a + ib");
  spectral_cmd->add_option("--t", spectral.t, "real time t for eigencoefficients");

  JacobiArgs jacobi;
  auto* jacobi_cmd = app.add_subcommand("jacobi", "finite weighted-shift checks");
  jacobi_cmd->add_option("--M", jacobi.m, "truncation size")->required()->check(CLI::Range(std::size_t{2}, kMaxCommutantSize));
  jacobi_cmd->add_option("--q", jacobi.q, "deformation q in (0, 1)");
  jacobi_cmd->add_option("--phase", jacobi.phase, "argument of lambda");

  BicrossedArgs bicrossed;
  auto* bicrossed_cmd = app.add_subcommand("bicrossed", "scaling and center of Q bowtie SU_q(2)");
  bicrossed_cmd->add_option("--q", bicrossed.q, "rational q in (-1, 1), nonzero")->required();
  bicrossed_cmd->add_option("--mode", bicrossed.mode, "rational | irrational")
      ->required()
      ->check(CLI::IsMember({"rational", "irrational"}));
  bicrossed_cmd->add_option("--ratio", bicrossed.ratio, "nu log|q| / pi in rational mode");
  bicrossed_cmd->add_option("--nu", bicrossed.nu, "nu in irrational mode");
  bicrossed_cmd->add_option("--t", bicrossed.times, "scaling time r,s (repeatable)");

  auto* report_cmd = app.add_subcommand("report", "run the acceptance grid");

  try {
    args = apply_config(std::move(args));
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    PrecisionScope scope(g.bits);
    Report report;
    if (*dims_cmd) {
      report = cmd_dims(dims, g);
    } else if (*series_cmd) {
      report = cmd_series(series, g);
    } else if (*threshold_cmd) {
      report = cmd_threshold(threshold, g);
    } else if (*moments_cmd) {
      report = cmd_moments(moments, g);
    } else if (*spectral_cmd) {
      report = cmd_spectral(spectral, g);
    } else if (*jacobi_cmd) {
      report = cmd_jacobi(jacobi, g);
    } else if (*bicrossed_cmd) {
      report = cmd_bicrossed(bicrossed, g);
    } else if (*report_cmd) {
      report = cmd_report(g);
    }
    report.inputs["bits"] = g.bits;
    emit(out, report, g.format);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(std::move(args), out, err);
}

}  // namespace qclass::cli
