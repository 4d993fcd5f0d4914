#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "galorb/errors.hpp"
#include "galorb/galois.hpp"
#include "galorb/report.hpp"
#include "galorb/resolvent.hpp"
#include "galorb/text.hpp"

namespace galorb::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  int n = 0;
  long d = 1;
  std::string matrix;
  std::string c = "0";
  unsigned prime_budget = 100;
  std::uint64_t search_budget = 1000;
  int height = 3;
  long prec_bits = 256;
  double int_tol = 1e-6;
  int power = 0;
  int digits = 20;
  bool json = false;
  std::string find_type;
  std::string in;
  std::string out;
};

class Clock {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Error in the command line or its inputs; maps to exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json inputs_json(const RunConfig& cfg) {
  json j = {{"n", cfg.n}, {"D", cfg.d}};
  if (!cfg.matrix.empty()) j["matrix"] = cfg.matrix;
  j["C"] = cfg.c;
  if (!cfg.in.empty()) j["in"] = cfg.in;
  return j;
}

struct Output {
  std::ostringstream text;
  json certificate;
  int code = kOk;
};

FieldSpec spec_of(const RunConfig& cfg) {
  auto s = find_field_spec(cfg.n, cfg.d);
  if (!s) {
    throw InputError("(n, D) = (" + std::to_string(cfg.n) + ", " + std::to_string(cfg.d) +
                     ") is not a supported field row");
  }
  return *s;
}

ConstructionParams params_of(const RunConfig& cfg) {
  if (cfg.matrix.empty()) throw InputError("--matrix is required");
  return {spec_of(cfg), parse_matrix(cfg.matrix, cfg.d), parse_quadrat(cfg.c, cfg.d)};
}

// Validates and builds f1; reports an invalid matrix as input error.
std::optional<Construction> build(const RunConfig& cfg, Output& o) {
  ConstructionParams params = params_of(cfg);
  ValidityReport v = validate_matrix(params.spec, params.matrix);
  if (!v.ok) {
    o.text << "invalid matrix: " << v.reason << "\n";
    o.certificate = {{"validity", to_json(v)}};
    o.code = kInvalidInput;
    return std::nullopt;
  }
  return construct_f1(params);
}

void cmd_construct(const RunConfig& cfg, Output& o) {
  auto con = build(cfg, o);
  if (!con) return;
  o.certificate = to_json(*con);
  o.text << format_poly(con->f1) << "\n";
  o.text << "degree: " << con->degree << " (n = " << cfg.n << ")\n";
  o.text << "matched t: " << format_quadrat(*con->validity.matched_t) << "\n";
  if (spec_of(cfg).extension) o.text << "note: (n, D) row is an extension beyond the worked cases\n";
  if (!con->full_degree) {
    o.text << "degree drop: f1 has degree " << con->degree << " < n\n";
    o.code = kIncomplete;
  }
}

void report_cyclic(const CyclicCertificate& cert, Output& o) {
  for (size_t i = 0; i < cert.zero_exprs.size(); ++i) {
    o.text << "P_" << i + 2 << " = " << format_poly(cert.zero_exprs[i]) << "\n";
  }
  for (const auto& c : cert.checks) {
    o.text << (c.ok ? "ok   " : c.informational ? "no   " : "FAIL ") << c.name;
    if (c.index) o.text << " k=" << c.index;
    if (c.informational) o.text << " (numbering only, informational)";
    o.text << "\n";
  }
  if (cert.pass) {
    o.text << "PASS\n";
  } else {
    o.text << "FAIL";
    if (cert.failed_index) o.text << " at k=" << *cert.failed_index;
    o.text << "\n";
    o.code = kIncomplete;
  }
  o.certificate = to_json(cert);
}

void cmd_verify(const RunConfig& cfg, Output& o) {
  if (!cfg.in.empty()) {
    auto lines = read_fixture_file(cfg.in, cfg.d);
    if (lines.empty()) throw InputError("fixture file has no polynomials");
    const Poly& f = lines.front().poly;
    if (lines.size() > 1) {
      std::vector<Poly> ps;
      for (size_t i = 1; i < lines.size(); ++i) ps.push_back(lines[i].poly);
      report_cyclic(verify_cyclic(f, ps), o);
      return;
    }
    if (cfg.matrix.empty()) throw InputError("single-polynomial fixture needs --matrix");
    report_cyclic(verify_cyclic(f, parse_matrix(cfg.matrix, cfg.d)), o);
    return;
  }
  auto con = build(cfg, o);
  if (!con) return;
  if (!con->full_degree) {
    o.text << "f1 has degree " << con->degree << " < n\n";
    o.code = kIncomplete;
    return;
  }
  o.text << "f1 = " << format_poly(con->f1) << "\n";
  report_cyclic(verify_cyclic(con->f1, parse_matrix(cfg.matrix, cfg.d)), o);
}

std::optional<WreathReport> wreath_of(const RunConfig& cfg, Output& o) {
  if (cfg.d == 1) throw InputError("wreath needs a quadratic field (D > 1)");
  auto con = build(cfg, o);
  if (!con) return std::nullopt;
  if (!con->full_degree) {
    o.text << "f1 has degree " << con->degree << " < n\n";
    o.code = kIncomplete;
    return std::nullopt;
  }
  return certify_wreath(con->f1, parse_matrix(cfg.matrix, cfg.d), cfg.prime_budget);
}

void print_wreath(const WreathReport& r, Output& o) {
  o.text << "f1  = " << format_poly(r.f1) << "\n";
  o.text << "f1' = " << format_poly(r.f1_conj) << "\n";
  o.text << "f   = " << format_poly(r.wreath.f) << "\n";
  o.text << "m   = " << r.wreath.m.get_str() << "\n";
  o.text << "irreducible over Q: " << to_string(r.irreducibility.status) << " ("
         << r.irreducibility.reason << ")\n";
  if (r.witness) {
    o.text << "witness: p = " << r.witness->p << ", type " << r.witness->type.str() << "\n";
  }
  o.text << "scan types consistent with C" << r.n << " wr C2: " << (r.types_consistent ? "yes" : "no")
         << "\n";
  if (r.complete) {
    o.text << "[L:Q] = " << r.degree_claim << "\n";
  } else {
    o.text << "incomplete certification: " << r.reason << "\n";
  }
}

void cmd_wreath(const RunConfig& cfg, Output& o) {
  auto rep = wreath_of(cfg, o);
  if (!rep) return;
  print_wreath(*rep, o);
  o.certificate = to_json(*rep);
  if (!rep->complete) o.code = kIncomplete;
}

void cmd_dihedral(const RunConfig& cfg, Output& o) {
  if (cfg.power < 0 || cfg.power > 2) throw InputError("--power must be 0, 1 or 2");
  if (cfg.prec_bits < 64) throw InputError("--prec-bits must be at least 64");
  auto rep = wreath_of(cfg, o);
  if (!rep) return;
  if (!rep->complete) {
    print_wreath(*rep, o);
    o.certificate = {{"wreath", to_json(*rep)}};
    o.code = kIncomplete;
    return;
  }
  ResolventOptions opts;
  opts.prec = static_cast<mpfr_prec_t>(cfg.prec_bits);
  opts.int_tol = cfg.int_tol;
  opts.power = cfg.power;
  opts.prime_budget = cfg.prime_budget;
  DihedralResult res;
  try {
    res = dihedral_resolvent(*rep, parse_matrix(cfg.matrix, cfg.d), opts);
  } catch (const std::runtime_error& e) {
    o.text << "resolvent failure: " << e.what() << "\n";
    o.certificate = {{"wreath", to_json(*rep)}, {"error", e.what()}};
    o.code = kNumericFailure;
    return;
  }
  o.text << "g = " << format_poly(res.g) << "\n";
  o.text << "resolvent: sum x_j^" << res.power << " y_j^" << res.power << " at " << res.prec_used
         << " bits";
  if (res.scale != 1) o.text << ", scaled by " << res.scale.get_str();
  o.text << "\n";
  o.text << "x_1 = " << res.orbit.xs.front().re.str(cfg.digits) << "\n";
  o.text << "recompute at " << 2 * res.prec_used << " bits: " << (res.recompute_ok ? "identical" : "DIFFERENT")
         << "\n";
  o.text << "irreducible over Q: " << to_string(res.irreducibility.status) << "\n";
  o.text << "types in D" << rep->n << ": " << (res.types_admissible ? "yes" : "no") << "\n";
  for (const auto& e : res.type_scan.log) o.text << scan_entry_json(e) << "\n";
  o.text << (res.verified() ? "consistent with Galois group D" : "NOT verified for D") << rep->n << "\n";
  o.certificate = {{"wreath", to_json(*rep)}, {"dihedral", to_json(res, cfg.digits)}};
  if (!res.verified()) o.code = kNumericFailure;
}

void cmd_scan(const RunConfig& cfg, Output& o) {
  if (cfg.in.empty()) throw InputError("scan needs --in <polynomial file>");
  auto lines = read_fixture_file(cfg.in, 1);
  if (lines.empty()) throw InputError("polynomial file is empty");
  IntPoly f = integralize(lines.front().poly).g;
  if (f.degree() < 1) throw InputError("scan needs a nonconstant polynomial");
  TypePredicate pred;
  std::optional<FactorType> target;
  if (!cfg.find_type.empty()) {
    target = parse_factor_type(cfg.find_type);
    pred = [t = *target](const FactorType& x) { return x == t; };
  }
  ScanResult res = scan_primes(f, pred, cfg.prime_budget);
  for (const auto& e : res.log) o.text << scan_entry_json(e) << "\n";
  if (target) {
    if (res.match) {
      o.text << "# match: p=" << res.match->p << " type=" << res.match->type.str() << "\n";
    } else {
      o.text << "# no prime with type " << target->str() << " among " << res.primes_examined << " primes\n";
    }
  }
  o.certificate = to_json(res);
}

void cmd_search(const RunConfig& cfg, Output& o) {
  SearchOptions opts;
  opts.budget = cfg.search_budget;
  opts.height = cfg.height;
  opts.max_hits = 0;
  opts.prime_budget = cfg.prime_budget;
  auto spec = spec_of(cfg);
  if (!cfg.matrix.empty()) opts.seeds.push_back(params_of(cfg));
  SearchResult res = search_params(spec, opts);
  json hits = json::array();
  for (const auto& h : res.hits) {
    o.text << "A = " << format_matrix(h.params.matrix) << "  C = " << format_quadrat(h.params.c)
           << "  f1 = " << format_poly(h.f1) << "\n";
    hits.push_back({{"index", h.index},
                    {"matrix", format_matrix(h.params.matrix)},
                    {"C", format_quadrat(h.params.c)},
                    {"f1", format_poly(h.f1)}});
  }
  o.text << "# " << res.hits.size() << " irreducible degree-" << cfg.n << " hits in " << res.evaluated
         << " candidates" << (res.exhausted ? " (enumeration exhausted)" : "") << "\n";
  o.certificate = {{"hits", hits}, {"evaluated", res.evaluated}, {"exhausted", res.exhausted}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Cyclic, wreath-product and dihedral polynomials from Moebius orbit sums", "galorb"};
  app.require_subcommand(1);

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "degree n")->required();
    sub->add_option("--D", cfg.d, "ground field Q[sqrt D]; 1 means Q");
  };
  auto add_matrix = [&](CLI::App* sub, bool required) {
    auto* m = sub->add_option("--matrix", cfg.matrix, "matrix a,b;c,d");
    if (required) m->required();
    sub->add_option("--C", cfg.c, "orbit-sum constant");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "emit a JSON report");
    sub->add_option("--out", cfg.out, "write output to a file");
    sub->add_option("--prime-budget", cfg.prime_budget, "number of primes to examine")
        ->check(CLI::PositiveNumber);
  };

  auto* construct = app.add_subcommand("construct", "build f1 from A and C");
  add_field(construct);
  add_matrix(construct, true);
  add_common(construct);

  auto* verify = app.add_subcommand("verify", "check the cyclic zero identities");
  verify->add_option("--n", cfg.n, "degree n");
  verify->add_option("--D", cfg.d, "ground field Q[sqrt D]");
  add_matrix(verify, false);
  verify->add_option("--in", cfg.in, "fixture: f, then optionally P_2..P_n");
  add_common(verify);

  auto* wreath = app.add_subcommand("wreath", "certify f = f1*f1' with group Cn wr C2");
  add_field(wreath);
  add_matrix(wreath, true);
  add_common(wreath);

  auto* dihedral = app.add_subcommand("dihedral", "dihedral resolvent g");
  add_field(dihedral);
  add_matrix(dihedral, true);
  add_common(dihedral);
  dihedral->add_option("--prec-bits", cfg.prec_bits, "working precision in bits");
  dihedral->add_option("--int-tol", cfg.int_tol, "integer rounding tolerance");
  dihedral->add_option("--power", cfg.power, "resolvent power: 1, 2, or 0 for automatic");
  dihedral->add_option("--digits", cfg.digits, "decimal digits for printed roots");

  auto* scan = app.add_subcommand("scan", "factorization types modulo primes");
  scan->add_option("--in", cfg.in, "polynomial file")->required();
  scan->add_option("--find-type", cfg.find_type, "stop at this type, e.g. (5,1,1,1,1,1)");
  add_common(scan);

  auto* search = app.add_subcommand("search", "enumerate matrices and constants");
  add_field(search);
  add_matrix(search, false);
  add_common(search);
  search->add_option("--search-budget", cfg.search_budget, "candidates to evaluate");
  search->add_option("--height", cfg.height, "height bound for entries")->check(CLI::NonNegativeNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  Clock clock;
  Output o;
  try {
    if (cfg.command == "construct") cmd_construct(cfg, o);
    else if (cfg.command == "verify") cmd_verify(cfg, o);
    else if (cfg.command == "wreath") cmd_wreath(cfg, o);
    else if (cfg.command == "dihedral") cmd_dihedral(cfg, o);
    else if (cfg.command == "scan") cmd_scan(cfg, o);
    else if (cfg.command == "search") cmd_search(cfg, o);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DegenerateError& e) {
    err << "degenerate construction: " << e.what() << "\n";
    return kIncomplete;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kNumericFailure;
  }

  std::string payload;
  if (cfg.json) {
    json report = {{"command", cfg.command},
                   {"inputs", inputs_json(cfg)},
                   {"certificate", o.certificate},
                   {"exit_code", o.code},
                   {"timings", {{"total_ms", clock.ms()}}}};
    payload = report.dump(2) + "\n";
  } else {
    payload = o.text.str();
  }
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return kInvalidInput;
    }
    f << payload;
  } else {
    out << payload;
  }
  return o.code;
}

}  // namespace galorb::cli
