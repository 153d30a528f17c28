#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <logiw/logiw.hpp>

using namespace logiw;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
  unsigned prec = kDefaultPrecision;
  std::string format = "json";
};

ojson padic_json(const PadicInt &x) {
  ojson j;
  j["ell"] = x.ell();
  j["prec"] = x.precision();
  j["value"] = x.value().get_str();
  return j;
}

ojson coeffs_json(const std::vector<Integer> &c) {
  ojson j = ojson::array();
  for (const auto &x : c) j.push_back(x.get_str());
  return j;
}

ojson group_json(const AbelianLGroup &g) { return coeffs_json(g.factors()); }

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  if (s.back() == sep) out.emplace_back();
  return out;
}

Integer parse_integer(const std::string &s) {
  Integer x;
  std::string t;
  for (char ch : s)
    if (ch != ' ') t += ch;
  if (t.empty() || x.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0)
    fail(ErrorCode::ParseError, "not an integer: '" + s + "'");
  return x;
}

std::string scalar_text(const ojson &v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  if (v.is_object() && v.contains("value") && v.contains("ell") && v.contains("prec"))
    return v["value"].get<std::string>() + " (mod " + std::to_string(v["ell"].get<unsigned long>()) + "^" +
           std::to_string(v["prec"].get<unsigned>()) + ")";
  if (v.is_object()) {
    std::string s;
    for (const auto &[k, x] : v.items()) s += (s.empty() ? "" : " ") + k + "=" + scalar_text(x);
    return s;
  }
  if (v.is_null()) return "none";
  return v.dump();
}

void print_text(const ojson &j, const std::string &indent = "") {
  if (j.is_object() && !(j.contains("value") && j.contains("prec"))) {
    for (const auto &[k, v] : j.items()) {
      if ((v.is_object() && !v.contains("prec")) || (v.is_array() && !v.empty() && v[0].is_object())) {
        std::cout << indent << k << ":\n";
        print_text(v, indent + "  ");
      } else {
        std::cout << indent << k << ": " << scalar_text(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto &v : j) {
      if (!v.is_object()) {
        std::cout << indent << "- " << scalar_text(v) << "\n";
        continue;
      }
      bool first = true;
      for (const auto &[k, x] : v.items()) {
        std::cout << indent << (first ? "- " : "  ") << k << ": " << scalar_text(x) << "\n";
        first = false;
      }
    }
  } else {
    std::cout << indent << scalar_text(j) << "\n";
  }
}

void emit(const Options &o, const ojson &j) {
  if (o.format == "text") print_text(j);
  else std::cout << j.dump(2) << "\n";
}

ojson error_json(const Error &e) { return ojson(std::string(e.what())); }

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Logarithmic class group invariants: l-adic valuations, local indices, Lambda-modules and tower tables"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--prec", opt.prec, "l-adic working precision in digits")->check(CLI::Range(1u, 4096u));
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));

  int status = 0;

  unsigned long ell = 3;
  std::string p_str, x_str;
  auto *logval = app.add_subcommand("logval", "logarithmic valuation of x at the prime p");
  logval->add_option("--ell", ell)->required();
  logval->add_option("--p", p_str)->required();
  logval->add_option("--x", x_str, "NUM/DEN")->required();
  logval->callback([&] {
    const Rational x = parse_rational(x_str);
    ojson j;
    j["p"] = parse_integer(p_str).get_str();
    j["x"] = x.get_str();
    j["log_valuation"] = padic_json(log_valuation(parse_integer(p_str), x, ell, opt.prec));
    emit(opt, j);
  });

  auto *divisor = app.add_subcommand("divisor", "principal logarithmic divisor of x and its degree");
  divisor->add_option("--ell", ell)->required();
  divisor->add_option("--x", x_str, "NUM/DEN")->required();
  divisor->callback([&] {
    const Rational x = parse_rational(x_str);
    const LogDivisor d = principal_divisor(x, ell, opt.prec);
    ojson entries = ojson::array();
    for (const auto &[p, a] : d.entries) entries.push_back({{"p", p.get_str()}, {"coefficient", padic_json(a)}});
    ojson j;
    j["x"] = x.get_str();
    j["divisor"] = entries;
    j["degree"] = padic_json(divisor_degree(d));
    emit(opt, j);
  });

  std::uint32_t p = 3, m = 1;
  std::string subgroup;
  auto *localidx = app.add_subcommand("localidx", "classical and logarithmic indices of the fixed field of H in Q_p(mu_m)");
  localidx->add_option("--p", p)->required();
  localidx->add_option("--m", m)->required();
  localidx->add_option("--subgroup", subgroup, "generators of H mod m, comma separated (default: trivial H)");
  localidx->callback([&] {
    std::vector<std::uint32_t> gens;
    for (const auto &g : split(subgroup, ',')) {
      const Integer v = parse_integer(g);
      if (v < 0 || !v.fits_uint_p()) fail(ErrorCode::ParseError, "bad generator '" + g + "'");
      gens.push_back(static_cast<std::uint32_t>(v.get_ui()));
    }
    const IndexQuadruple q = indices(make_local_field(p, m, gens));
    ojson j;
    j["e"] = std::to_string(q.e);
    j["f"] = std::to_string(q.f);
    j["e_log"] = std::to_string(q.e_log);
    j["f_log"] = std::to_string(q.f_log);
    emit(opt, j);
  });

  std::string coeffs;
  std::size_t degree_bound = 0;
  auto *prep = app.add_subcommand("weierstrass", "f = ell^mu * P * U for a power series given by its coefficients");
  prep->add_option("--ell", ell)->required();
  prep->add_option("--coeffs", coeffs, "c0,c1,... (index = power of T)")->required();
  prep->add_option("--degree-bound", degree_bound, "truncation T^M (default: number of coefficients)");
  prep->callback([&] {
    std::vector<Integer> c;
    for (const auto &s : split(coeffs, ',')) c.push_back(parse_integer(s));
    const std::size_t bound = degree_bound ? degree_bound : std::max<std::size_t>(c.size(), 1);
    const WeierstrassFactorization w = weierstrass(LambdaElem(ell, opt.prec, bound, c));
    ojson j;
    j["mu"] = std::to_string(w.mu);
    j["lambda"] = std::to_string(w.lambda());
    j["P"] = coeffs_json(w.P.poly.coeffs());
    j["P_text"] = w.P.poly.str();
    j["U"] = coeffs_json(w.U.raw());
    j["U_prec"] = std::to_string(w.U.precision());
    emit(opt, j);
  });

  std::vector<unsigned> ell_parts;
  std::string polys;
  unsigned max_n = 3;
  auto *growth = app.add_subcommand("growth", "exponent of |E/omega_n E| for an elementary module, by two routes");
  growth->add_option("--ell", ell)->required();
  growth->add_option("--ell-parts", ell_parts, "m1,m2,...")->delimiter(',');
  growth->add_option("--polys", polys, "distinguished polynomials separated by ';'");
  growth->add_option("--max-n", max_n)->check(CLI::Range(0u, 12u));
  growth->callback([&] {
    std::vector<IntPoly> ps;
    for (const auto &s : split(polys, ';')) ps.push_back(parse_poly(s));
    const ElementaryModule e = make_elementary_module(ell, ell_parts, ps);
    ojson layers = ojson::array();
    std::vector<long> seq;
    bool complete = true;
    for (unsigned n = 0; n <= max_n; ++n) {
      ojson l;
      l["n"] = std::to_string(n);
      std::optional<long> a, b;
      try {
        a = quotient_order_exponent(e, n);
        l["resultant"] = std::to_string(*a);
      } catch (const Error &err) {
        l["resultant"] = error_json(err);
      }
      try {
        b = quotient_order_snf(e, n);
        l["snf"] = std::to_string(*b);
      } catch (const Error &err) {
        l["snf"] = error_json(err);
      }
      if (a && b && *a != *b) status = 1;
      if (a) seq.push_back(*a);
      else complete = false;
      layers.push_back(std::move(l));
    }
    ojson j;
    j["mu"] = std::to_string(e.mu());
    j["lambda"] = std::to_string(e.lambda());
    j["layers"] = layers;
    if (complete && seq.size() >= 3) {
      try {
        const InvariantTriple t = fit_invariants(seq, ell);
        j["fit"] = {{"mu", std::to_string(t.mu)}, {"lambda", std::to_string(t.lambda)},
                    {"nu", std::to_string(t.nu)}, {"n0", std::to_string(t.n0)}};
      } catch (const Error &err) {
        j["fit"] = error_json(err);
      }
    }
    if (status) j["mismatch"] = true;
    emit(opt, j);
  });

  std::vector<long> orders;
  std::optional<long> known_mu;
  auto *fit = app.add_subcommand("fit", "mu, lambda, nu from exponents e_0, e_1, ...");
  fit->add_option("--ell", ell)->required();
  fit->add_option("--orders", orders, "e0,e1,...")->delimiter(',')->required();
  fit->add_option("--mu", known_mu, "known mu; lambda and nu then come from the last difference");
  fit->callback([&] {
    const InvariantTriple t = known_mu ? fit_with_known_mu(orders, ell, *known_mu) : fit_invariants(orders, ell);
    ojson j;
    j["mu"] = std::to_string(t.mu);
    j["lambda"] = std::to_string(t.lambda);
    j["nu"] = std::to_string(t.nu);
    j["n0"] = std::to_string(t.n0);
    emit(opt, j);
  });

  auto *gold = app.add_subcommand("gold", "lambda' from the first jump e'_n - e'_(n-1) below phi(ell^n)");
  gold->add_option("--ell", ell)->required();
  gold->add_option("--orders", orders, "e'0,e'1,...")->delimiter(',')->required();
  gold->callback([&] {
    const auto g = gold_lambda(orders, ell);
    ojson j;
    j["lambda_prime"] = g ? ojson(std::to_string(*g)) : ojson(nullptr);
    emit(opt, j);
  });

  long long d = 0;
  auto *classgroup = app.add_subcommand("classgroup", "class group of Q(sqrt d), d < 0, and its ell-parts");
  classgroup->add_option("--d", d)->required();
  classgroup->add_option("--ell", ell)->required();
  classgroup->callback([&] {
    require_odd_prime(ell);
    const ClassGroup g = class_group(d);
    ojson j;
    j["h"] = std::to_string(g.order());
    j["ell_part"] = group_json(ell_part(g, ell));
    j["cl_prime"] = group_json(cl_prime(d, ell));
    emit(opt, j);
  });

  std::string input, report_path;
  auto *vt = app.add_subcommand("verify-tables", "check tower tables against fitted invariants and the forms oracle");
  vt->add_option("--input", input, "JSON or CSV table file")->required();
  vt->add_option("--report", report_path, "write the report here instead of stdout");
  vt->callback([&] {
    const VerificationReport rep = verify(parse_tables(input));
    const std::string body = opt.format == "text" ? report_text(rep) : report_json(rep).dump(2) + "\n";
    if (report_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(report_path, std::ios::binary);
      if (!out) fail(ErrorCode::InvalidArgument, "cannot write '" + report_path + "'");
      out << body;
      std::cout << "rows=" << rep.rows.size() << " pass=" << rep.passed << " fail=" << rep.failed
                << " skip=" << rep.skipped << " info=" << rep.info << "\n";
    }
    if (!rep.ok()) status = 1;
  });

  std::string values;
  auto *rel = app.add_subcommand("relations", "evaluate the relations between invariant families");
  rel->add_option("--values", values, "name=value,... e.g. mu=1,mu_tilde=1")->required();
  rel->callback([&] {
    InvariantRelations r;
    for (const auto &kv : split(values, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) fail(ErrorCode::ParseError, "expected name=value, got '" + kv + "'");
      auto *slot = r.field(kv.substr(0, eq));
      if (!slot) fail(ErrorCode::ParseError, "unknown invariant '" + kv.substr(0, eq) + "'");
      const Integer v = parse_integer(kv.substr(eq + 1));
      if (!v.fits_slong_p()) fail(ErrorCode::ParseError, "value out of range in '" + kv + "'");
      *slot = v.get_si();
    }
    const auto results = check_relations(r);
    emit(opt, relations_json(results));
    for (const auto &x : results)
      if (!x.pass) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidGroupShape) ? 2 : 1;
  }
  return status;
}
