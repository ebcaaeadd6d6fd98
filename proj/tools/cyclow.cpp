#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclow/bigint.hpp"
#include "cyclow/cyclic.hpp"
#include "cyclow/errors.hpp"
#include "cyclow/field.hpp"
#include "cyclow/fpoly.hpp"
#include "cyclow/lowweight.hpp"
#include "cyclow/relation.hpp"

namespace {

using cyclow::BigInt;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInternal = 5;

struct Options {
  std::int64_t p = 2;
  int m = 0;
  int g = 0;
  std::int64_t t = 0;
  std::int64_t q = 0;
  int w = 0;
  int wmax = 4;
  int f = 0;
  int k = 0;
  std::vector<std::int64_t> modulus;
  std::vector<std::int64_t> exps;
  std::vector<std::string> weights;
  std::vector<std::string> nws;
  bool witnesses = false;
  std::string format = "table";
  std::uint64_t budget = cyclow::kDefaultBudget;
};

bool is_json(const Options& o) { return o.format == "json"; }

cyclow::Field make_field(const Options& o) {
  if (!o.modulus.empty()) {
    return cyclow::Field(o.p, o.m, o.modulus);
  }
  return cyclow::Field(o.p, o.m);
}

BigInt parse_count(const std::string& s) {
  if (s.empty()) {
    throw std::invalid_argument("empty integer in list");
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("'" + s + "' is not a nonnegative integer");
    }
  }
  return BigInt(s);
}

std::vector<BigInt> parse_counts(const std::vector<std::string>& in) {
  std::vector<BigInt> out;
  out.reserve(in.size());
  for (const std::string& s : in) {
    out.push_back(parse_count(s));
  }
  return out;
}

int log2_exact(std::int64_t q) {
  if (q < 2 || (q & (q - 1)) != 0) {
    throw std::invalid_argument("q must be a power of 2, got " + std::to_string(q));
  }
  int m = 0;
  while ((std::int64_t{1} << m) < q) ++m;
  return m;
}

json field_json(const cyclow::Field& f) {
  return json{{"p", f.characteristic()},
              {"m", f.extension_degree()},
              {"modulus", f.modulus().coeffs()}};
}

json field_json(std::int64_t p, int m) {
  return json{{"p", p}, {"m", m}, {"modulus", nullptr}};
}

json counts_json(const std::vector<BigInt>& counts) {
  json arr = json::array();
  for (const BigInt& c : counts) {
    arr.push_back(c.str());
  }
  return arr;
}

void emit(const json& field, const json& code, const json& result,
          const std::string& method) {
  json doc{{"field", field}, {"code", code}, {"result", result}, {"method", method}};
  std::cout << doc.dump(2) << "\n";
}

void print_field(const cyclow::Field& f) {
  std::cout << "field: GF(" << f.characteristic() << "^" << f.extension_degree()
            << "), modulus = " << f.modulus().to_string() << "\n";
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

void print_code(const cyclow::CyclicCode& code) {
  std::cout << "exponents = " << join(code.exponents()) << "\n";
}

void print_weights(const std::vector<BigInt>& a) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    std::cout << "A" << w << " = " << a[w].str() << "\n";
  }
}

int cmd_a2(const Options& o) {
  cyclow::Field field = make_field(o);
  cyclow::CyclicCode code(field, o.exps);
  const std::int64_t d = cyclow::weight2_gcd(code);
  const BigInt a2 = cyclow::a2_count(code);
  if (is_json(o)) {
    emit(field_json(field), json{{"exponents", code.exponents()}},
         json{{"D", d}, {"A2", a2.str()}}, "formula");
  } else {
    print_field(field);
    print_code(code);
    std::cout << "D = " << d << "\n";
    std::cout << "A2 = " << a2.str() << "\n";
  }
  return kExitOk;
}

int cmd_a3_bound(const Options& o) {
  const BigInt bound = cyclow::a3_lower_bound(o.p, o.m, o.g, o.t, o.exps);
  json result{{"A3_lower_bound", bound.str()}};
  std::optional<cyclow::Field> field;
  std::vector<cyclow::Weight3Witness> found;
  if (o.witnesses) {
    field = make_field(o);
    found = cyclow::weight3_witnesses(*field, o.g, o.t, o.exps);
    json arr = json::array();
    for (const auto& wit : found) {
      arr.push_back(json{{"a", wit.a},
                         {"b", wit.b},
                         {"i", wit.i},
                         {"j", wit.j},
                         {"e1", wit.e1},
                         {"e2", wit.e2}});
    }
    result["witnesses"] = arr;
  }
  if (is_json(o)) {
    emit(field ? field_json(*field) : field_json(o.p, o.m),
         json{{"exponents", o.exps}}, result, "formula");
    return kExitOk;
  }
  if (field) {
    print_field(*field);
  } else {
    std::cout << "field: GF(" << o.p << "^" << o.m << ")\n";
  }
  std::cout << "exponents = " << join(o.exps) << "\n";
  std::cout << "g = " << o.g << ", t = " << o.t << "\n";
  std::cout << "A3 lower bound = " << bound.str() << "\n";
  for (const auto& wit : found) {
    cyclow::FpPoly poly(o.p, std::vector<std::int64_t>(wit.codeword.begin(),
                                                       wit.codeword.end()));
    std::cout << "witness: " << poly.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_a3_c1t(const Options& o) {
  Options fo = o;
  fo.p = 2;
  cyclow::Field field = make_field(fo);
  const cyclow::FpPoly g = cyclow::weight3_poly_gcd(field, o.t);
  const bool has = cyclow::has_weight3_c1t(field, o.t);
  const BigInt a3 = cyclow::a3_count_c1t(field, o.t);
  if (is_json(o)) {
    emit(field_json(field), json{{"exponents", {1, o.t}}},
         json{{"gcd_degree", g.degree()},
              {"has_weight3", has},
              {"A3", a3.str()}},
         "formula");
  } else {
    print_field(field);
    std::cout << "t = " << o.t << "\n";
    std::cout << "gcd = " << g.to_string() << "\n";
    std::cout << "gcd degree = " << g.degree() << "\n";
    std::cout << "has weight-3 = " << (has ? "yes" : "no") << "\n";
    std::cout << "A3 = " << a3.str() << "\n";
  }
  return kExitOk;
}

int cmd_no_w3(const Options& o) {
  const bool no3 = cyclow::easy_no_weight3(o.m, o.t);
  if (is_json(o)) {
    emit(field_json(2, o.m), json{{"exponents", {1, o.t}}},
         json{{"no_weight3", no3}}, "formula");
  } else {
    std::cout << "m = " << o.m << ", t = " << o.t << "\n";
    std::cout << "no weight-3 guaranteed = " << (no3 ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_nw(const Options& o) {
  const int m = log2_exact(o.q);
  cyclow::WeightPrefix prefix(parse_counts(o.weights));
  const BigInt nw = cyclow::nw_from_weights(o.q, prefix, o.w);
  if (is_json(o)) {
    emit(field_json(2, m), nullptr, json{{"w", o.w}, {"N", nw.str()}}, "formula");
  } else {
    std::cout << "q = " << o.q << "\n";
    std::cout << "N" << o.w << " = " << nw.str() << "\n";
  }
  return kExitOk;
}

int cmd_invert(const Options& o) {
  const int m = log2_exact(o.q);
  cyclow::NwSequence seq(parse_counts(o.nws));
  cyclow::WeightPrefix prefix = cyclow::weights_from_nw(o.q, seq);
  if (is_json(o)) {
    emit(field_json(2, m), nullptr, json{{"A", counts_json(prefix.counts())}},
         "formula");
  } else {
    std::cout << "q = " << o.q << "\n";
    print_weights(prefix.counts());
  }
  return kExitOk;
}

int cmd_brute_weights(const Options& o) {
  cyclow::Field field = make_field(o);
  cyclow::CyclicCode code(field, o.exps);
  cyclow::WeightPrefix prefix = cyclow::brute_weight_distribution(code, o.wmax, o.budget);
  if (is_json(o)) {
    emit(field_json(field), json{{"exponents", code.exponents()}},
         json{{"A", counts_json(prefix.counts())}}, "bruteforce");
  } else {
    print_field(field);
    print_code(code);
    print_weights(prefix.counts());
  }
  return kExitOk;
}

int cmd_brute_nw(const Options& o) {
  Options fo = o;
  fo.p = 2;
  cyclow::Field field = make_field(fo);
  cyclow::DiagonalSystem sys(field, o.exps, o.w);
  const BigInt nw = cyclow::diagonal_count_bruteforce(sys, o.budget);
  if (is_json(o)) {
    emit(field_json(field), json{{"exponents", sys.exponents}},
         json{{"w", o.w}, {"N", nw.str()}}, "bruteforce");
  } else {
    print_field(field);
    std::cout << "exponents = " << join(sys.exponents) << "\n";
    std::cout << "N" << o.w << " = " << nw.str() << "\n";
  }
  return kExitOk;
}

int cmd_family(const Options& o) {
  cyclow::WeightPrefix low = cyclow::family_low_weights(o.f, o.k);  // validates f, k
  const int m = 2 * o.f + 1;
  /* The second exponent is 2^k + 1; k can be reduced mod 2f+1 without
   * changing the code because squaring permutes the coset. */
  const std::int64_t t = (std::int64_t{1} << (o.k % m)) + 1;
  std::vector<BigInt> nws;
  for (int w = 2; w <= o.wmax; ++w) {
    nws.push_back(cyclow::family_nw(o.f, o.k, w));
  }
  if (is_json(o)) {
    json nw_json = json::object();
    for (int w = 2; w <= o.wmax; ++w) {
      nw_json["N" + std::to_string(w)] = nws[static_cast<std::size_t>(w - 2)].str();
    }
    emit(field_json(2, m), json{{"exponents", {1, t}}},
         json{{"A", counts_json(low.counts())}, {"N", nw_json}}, "formula");
    return kExitOk;
  }
  std::cout << "q = 2^" << m << " = " << (std::int64_t{1} << m) << "\n";
  std::cout << "exponents = 1," << t << "\n";
  for (int w = 2; w <= o.wmax; ++w) {
    std::cout << "N" << w << " = " << nws[static_cast<std::size_t>(w - 2)].str() << "\n";
  }
  print_weights(low.counts());
  return kExitOk;
}

int cmd_verify(const Options& o) {
  cyclow::Field field = make_field(o);
  cyclow::CyclicCode code(field, o.exps);
  cyclow::WeightPrefix brute =
      cyclow::brute_weight_distribution(code, o.wmax, o.budget);

  struct Check {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Check> checks;

  const BigInt a2 = cyclow::a2_count(code);
  checks.push_back({"A2", a2 == brute.at(2),
                    "formula " + a2.str() + " vs brute " + brute.at(2).str()});

  if (field.characteristic() == 2) {
    /* The weight prefix determines every N_w and vice versa; both
     * directions must match plain enumeration. */
    cyclow::NwSequence seq;
    for (int w = 2; w <= o.wmax; ++w) {
      const BigInt formula = cyclow::nw_from_weights(field.order(), brute, w);
      cyclow::DiagonalSystem sys(field, o.exps, w);
      const BigInt counted = cyclow::diagonal_count_bruteforce(sys, o.budget);
      checks.push_back({"N" + std::to_string(w), formula == counted,
                        "formula " + formula.str() + " vs brute " + counted.str()});
      seq.append(counted);
    }
    cyclow::WeightPrefix inverted = cyclow::weights_from_nw(field.order(), seq);
    checks.push_back({"roundtrip", inverted == brute,
                      "weights_from_nw(brute N) vs brute A"});

    const auto& exps = code.exponents();
    if (exps.size() == 2 && exps[0] == 1 && o.wmax >= 3) {
      const BigInt a3 = cyclow::a3_count_c1t(field, exps[1]);
      checks.push_back({"A3", a3 == brute.at(3),
                        "formula " + a3.str() + " vs brute " + brute.at(3).str()});
    }
  }

  bool all_ok = true;
  for (const Check& c : checks) {
    all_ok = all_ok && c.ok;
  }
  if (is_json(o)) {
    json arr = json::array();
    for (const Check& c : checks) {
      arr.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    }
    emit(field_json(field), json{{"exponents", code.exponents()}},
         json{{"checks", arr}, {"ok", all_ok}}, "bruteforce");
  } else {
    print_field(field);
    print_code(code);
    for (const Check& c : checks) {
      std::cout << "check " << c.name << ": " << (c.ok ? "ok" : "MISMATCH") << " ("
                << c.detail << ")\n";
    }
  }
  return all_ok ? kExitOk : kExitMismatch;
}

void add_format_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
}

void add_field_flags(CLI::App* cmd, Options& o, bool with_p) {
  if (with_p) {
    cmd->add_option("--p", o.p, "Field characteristic (prime)")->required();
  }
  cmd->add_option("--m", o.m, "Extension degree")->required();
  cmd->add_option("--modulus", o.modulus,
                  "Field modulus coefficients c0,c1,...,cm (default: smallest "
                  "primitive polynomial)")
      ->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-weight codeword counts of cyclic codes over GF(p^m) and the\n"
               "matching diagonal-equation solution counts."};
  app.require_subcommand(1);
  Options o;

  CLI::App* a2 = app.add_subcommand("a2", "Weight-2 count A2 and the gcd D behind it");
  add_field_flags(a2, o, true);
  a2->add_option("--exps", o.exps, "Code exponents t1,t2,...")->delimiter(',')->required();
  add_format_flags(a2, o);

  CLI::App* a3b = app.add_subcommand(
      "a3-bound", "Weight-3 lower bound from the subfield GF(p^g), with witnesses");
  add_field_flags(a3b, o, true);
  a3b->add_option("--g", o.g, "Subfield degree (divides m)")->required();
  a3b->add_option("--t", o.t, "Base exponent, invertible mod p^g-1")->required();
  a3b->add_option("--exps", o.exps, "Code exponents t1,t2,...")->delimiter(',')->required();
  a3b->add_flag("--witnesses", o.witnesses, "List the constructed weight-3 codewords");
  add_format_flags(a3b, o);

  CLI::App* a3c = app.add_subcommand(
      "a3-c1t", "Exact A3 of the binary code with exponents 1,t via a gcd degree");
  add_field_flags(a3c, o, false);
  a3c->add_option("--t", o.t, "Second exponent")->required();
  add_format_flags(a3c, o);

  CLI::App* no3 = app.add_subcommand(
      "no-w3", "Quick criterion: the binary code with exponents 1,t has no "
               "weight-3 codewords when t < r+3 for every prime r dividing m");
  no3->add_option("--m", o.m, "Extension degree")->required();
  no3->add_option("--t", o.t, "Second exponent")->required();
  add_format_flags(no3, o);

  CLI::App* nw = app.add_subcommand(
      "nw", "Diagonal-system solution count N_w from a weight prefix");
  nw->add_option("--q", o.q, "Field size (power of 2)")->required();
  nw->add_option("--weights", o.weights, "Weight prefix A0,A1,...,AW")
      ->delimiter(',')
      ->required();
  nw->add_option("--w", o.w, "Arity")->required();
  add_format_flags(nw, o);

  CLI::App* inv = app.add_subcommand(
      "invert", "Recover the weight prefix A0..AW from solution counts N2..NW");
  inv->add_option("--q", o.q, "Field size (power of 2)")->required();
  inv->add_option("--nw", o.nws, "Solution counts N2,N3,...,NW")
      ->delimiter(',')
      ->required();
  add_format_flags(inv, o);

  CLI::App* bw = app.add_subcommand(
      "brute-weights", "Weight prefix by direct support enumeration");
  add_field_flags(bw, o, true);
  bw->add_option("--exps", o.exps, "Code exponents t1,t2,...")->delimiter(',')->required();
  bw->add_option("--wmax", o.wmax, "Largest weight to count")->required();
  bw->add_option("--budget", o.budget, "Enumeration budget (candidate count)");
  add_format_flags(bw, o);

  CLI::App* bn = app.add_subcommand(
      "brute-nw", "Diagonal-system solution count by direct enumeration");
  add_field_flags(bn, o, false);
  bn->add_option("--exps", o.exps, "System exponents t1,t2,...")->delimiter(',')->required();
  bn->add_option("--w", o.w, "Arity")->required();
  bn->add_option("--budget", o.budget, "Enumeration budget (candidate count)");
  add_format_flags(bn, o);

  CLI::App* fam = app.add_subcommand(
      "family", "Closed forms for the binary codes with exponents 1,2^k+1 over "
                "GF(2^(2f+1)), gcd(k,2f+1)=1");
  fam->add_option("--f", o.f, "Half of m-1")->required();
  fam->add_option("--k", o.k, "Exponent parameter")->required();
  fam->add_option("--wmax", o.wmax, "Largest arity for N_w (default 6)")
      ->capture_default_str();
  add_format_flags(fam, o);

  CLI::App* ver = app.add_subcommand(
      "verify", "Cross-check every applicable closed form against brute force");
  add_field_flags(ver, o, true);
  ver->add_option("--exps", o.exps, "Code exponents t1,t2,...")->delimiter(',')->required();
  ver->add_option("--wmax", o.wmax, "Largest weight/arity to check (default 4)")
      ->capture_default_str();
  ver->add_option("--budget", o.budget, "Enumeration budget (candidate count)");
  add_format_flags(ver, o);

  /* family's default N range is the full span of the closed-form prefix. */
  fam->parse_complete_callback([&o, fam] {
    if (fam->count("--wmax") == 0) o.wmax = 6;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(a2)) return cmd_a2(o);
    if (app.got_subcommand(a3b)) return cmd_a3_bound(o);
    if (app.got_subcommand(a3c)) return cmd_a3_c1t(o);
    if (app.got_subcommand(no3)) return cmd_no_w3(o);
    if (app.got_subcommand(nw)) return cmd_nw(o);
    if (app.got_subcommand(inv)) return cmd_invert(o);
    if (app.got_subcommand(bw)) return cmd_brute_weights(o);
    if (app.got_subcommand(bn)) return cmd_brute_nw(o);
    if (app.got_subcommand(fam)) return cmd_family(o);
    if (app.got_subcommand(ver)) return cmd_verify(o);
  } catch (const cyclow::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;  // unreachable: a subcommand is required
}
