#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "classgroups.hpp"
#include "error.hpp"
#include "integer.hpp"
#include "invariants.hpp"

// Ingestion of tower tables (group shapes per layer plus printed invariants)
// and their verification against the fitting routines and the forms oracle.
namespace logiw {

enum class Tower { Cyclotomic, Anticyclotomic };

inline std::string to_string(Tower t) { return t == Tower::Cyclotomic ? "cyclotomic" : "anticyclotomic"; }

struct TableLayer {
  unsigned n = 0;
  AbelianLGroup clog;
  std::optional<AbelianLGroup> clog_ell;
  std::optional<AbelianLGroup> clp;
};

/// Printed invariant columns. mu, lambda, nu are the logarithmic ones.
struct TableExpected {
  std::optional<long> mu, lambda, nu;
  std::optional<long> lambda_classical, nu_classical;
  std::optional<std::vector<long>> e_diffs;
};

struct TableRow {
  std::string table;
  unsigned long ell = 3;
  long long d = 0;
  Tower tower = Tower::Cyclotomic;
  std::optional<bool> ell_splits;
  std::vector<TableLayer> layers;
  std::optional<TableExpected> expected;

  std::vector<long> clog_exponents() const {
    std::vector<long> e;
    for (const auto &l : layers) e.push_back(l.clog.exponent_sum());
    return e;
  }
  std::optional<std::vector<long>> clp_exponents() const {
    std::vector<long> e;
    for (const auto &l : layers) {
      if (!l.clp) return std::nullopt;
      e.push_back(l.clp->exponent_sum());
    }
    return e;
  }
};

namespace detail {

/// Re-raises a library error with row/field context, keeping its code.
template <class F> auto with_context(const std::string &where, F &&fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error &e) {
    const ErrorCode code = e.code() == ErrorCode::InvalidGroupShape ? e.code() : ErrorCode::ParseError;
    std::string msg = e.what();
    const std::string prefix = std::string(to_string(e.code())) + ": ";
    if (msg.starts_with(prefix) && e.code() == code) msg.erase(0, prefix.size());
    fail(code, where + ": " + msg);
  } catch (const nlohmann::json::exception &e) {
    fail(ErrorCode::ParseError, where + ": " + e.what());
  }
}

inline AbelianLGroup group_from_json(const nlohmann::json &j, unsigned long ell) {
  if (j.is_string()) return parse_group(j.get<std::string>(), ell);
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected a list of factors");
  std::vector<Integer> factors;
  for (const auto &x : j) {
    if (x.is_number_unsigned()) factors.emplace_back(std::to_string(x.get<std::uint64_t>()), 10);
    else if (x.is_string() && !x.get<std::string>().empty() &&
             x.get<std::string>().find_first_not_of("0123456789") == std::string::npos)
      factors.emplace_back(x.get<std::string>(), 10);
    else fail(ErrorCode::ParseError, "bad factor " + x.dump());
  }
  return make_group(ell, factors);
}

inline std::optional<long> optional_long(const nlohmann::json &obj, const char *key) {
  if (!obj.contains(key) || obj[key].is_null()) return std::nullopt;
  return obj[key].get<long>();
}

inline unsigned long parse_ell(long long ell) {
  if (ell < 3 || !is_prime(ell)) fail(ErrorCode::ParseError, "ell = " + std::to_string(ell) + " is not an odd prime");
  return static_cast<unsigned long>(ell);
}

inline Tower parse_tower(const std::string &s) {
  if (s == "cyclotomic") return Tower::Cyclotomic;
  if (s == "anticyclotomic") return Tower::Anticyclotomic;
  fail(ErrorCode::ParseError, "unknown tower '" + s + "'");
}

inline void check_contiguous(const TableRow &row, const std::string &where) {
  if (row.layers.empty()) fail(ErrorCode::ParseError, where + ": no layers");
  for (std::size_t i = 0; i < row.layers.size(); ++i)
    if (row.layers[i].n != i)
      fail(ErrorCode::ParseError, where + ": layer indices must run 0, 1, 2, ... (found n = " +
                                      std::to_string(row.layers[i].n) + " at position " + std::to_string(i) + ")");
}

inline TableRow row_from_json(const nlohmann::json &j, const std::string &where) {
  if (!j.is_object()) fail(ErrorCode::ParseError, where + ": expected an object");
  TableRow row;
  with_context(where + ", field 'ell'", [&] { row.ell = parse_ell(j.at("ell").get<long long>()); });
  with_context(where + ", field 'd'", [&] { row.d = j.at("d").get<long long>(); });
  with_context(where + ", field 'tower'", [&] { row.tower = parse_tower(j.at("tower").get<std::string>()); });
  if (j.contains("table")) with_context(where + ", field 'table'", [&] { row.table = j["table"].get<std::string>(); });
  if (j.contains("ell_splits"))
    with_context(where + ", field 'ell_splits'", [&] { row.ell_splits = j["ell_splits"].get<bool>(); });
  const auto &layers = with_context(where + ", field 'layers'", [&]() -> const nlohmann::json & {
    const auto &l = j.at("layers");
    if (!l.is_array()) fail(ErrorCode::ParseError, "expected an array");
    return l;
  });
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const std::string lw = where + ", layer " + std::to_string(i);
    const auto &lj = layers[i];
    TableLayer layer;
    with_context(lw + ", field 'n'", [&] { layer.n = lj.at("n").get<unsigned>(); });
    with_context(lw + ", field 'clog'", [&] { layer.clog = group_from_json(lj.at("clog"), row.ell); });
    for (auto [key, slot] : {std::pair{"clog_ell", &layer.clog_ell}, std::pair{"clp", &layer.clp}}) {
      if (lj.contains(key) && !lj[key].is_null())
        with_context(lw + ", field '" + key + "'", [&] { *slot = group_from_json(lj[key], row.ell); });
    }
    row.layers.push_back(std::move(layer));
  }
  check_contiguous(row, where);
  if (j.contains("expected") && !j["expected"].is_null()) {
    with_context(where + ", field 'expected'", [&] {
      const auto &e = j["expected"];
      if (!e.is_object()) fail(ErrorCode::ParseError, "expected an object");
      TableExpected x;
      x.mu = optional_long(e, "mu");
      x.lambda = optional_long(e, "lambda");
      x.nu = optional_long(e, "nu");
      x.lambda_classical = optional_long(e, "lambda_classical");
      x.nu_classical = optional_long(e, "nu_classical");
      if (e.contains("e_diffs") && !e["e_diffs"].is_null()) x.e_diffs = e["e_diffs"].get<std::vector<long>>();
      row.expected = std::move(x);
    });
  }
  return row;
}

/// Splits one CSV line; fields may be double-quoted so "[9, 3]" survives.
inline std::vector<std::string> split_csv_line(const std::string &line, const std::string &where) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else if (ch != '\r') {
      out.back() += ch;
    }
  }
  if (quoted) fail(ErrorCode::ParseError, where + ": unterminated quote");
  for (auto &f : out) {
    const auto b = f.find_first_not_of(" \t");
    const auto e = f.find_last_not_of(" \t");
    f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
  }
  return out;
}

inline long long parse_csv_int(const std::string &s, const std::string &where) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used, 10);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception &) {
    fail(ErrorCode::ParseError, where + ": '" + s + "' is not an integer");
  }
}

} // namespace detail

inline std::vector<TableRow> parse_tables_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) fail(ErrorCode::ParseError, "top level must be an array of rows");
  std::vector<TableRow> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(detail::row_from_json(j[i], "row " + std::to_string(i)));
  return rows;
}

/// CSV with header ell,d,tower,n,clog,clog_ell,clp; consecutive lines with the
/// same (ell, d, tower) form one row. Empty optional fields mean "not printed".
inline std::vector<TableRow> parse_tables_csv(const std::string &text) {
  static const std::vector<std::string> header{"ell", "d", "tower", "n", "clog", "clog_ell", "clp"};
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool seen_header = false;
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto f = detail::split_csv_line(line, where);
    if (!seen_header) {
      if (f != header) fail(ErrorCode::ParseError, where + ": header must be ell,d,tower,n,clog,clog_ell,clp");
      seen_header = true;
      continue;
    }
    if (f.size() != header.size())
      fail(ErrorCode::ParseError, where + ": expected 7 fields, found " + std::to_string(f.size()));
    const unsigned long ell =
        detail::with_context(where + ", field 'ell'", [&] { return detail::parse_ell(detail::parse_csv_int(f[0], where)); });
    const long long d = detail::parse_csv_int(f[1], where + ", field 'd'");
    const Tower tower = detail::with_context(where + ", field 'tower'", [&] { return detail::parse_tower(f[2]); });
    const long long n = detail::parse_csv_int(f[3], where + ", field 'n'");
    if (n < 0) fail(ErrorCode::ParseError, where + ", field 'n': negative layer");
    if (rows.empty() || rows.back().ell != ell || rows.back().d != d || rows.back().tower != tower) {
      if (!rows.empty()) detail::check_contiguous(rows.back(), "row ending before " + where);
      rows.push_back(TableRow{"", ell, d, tower, std::nullopt, {}, std::nullopt});
    }
    TableLayer layer;
    layer.n = static_cast<unsigned>(n);
    layer.clog = detail::with_context(where + ", field 'clog'", [&] { return parse_group(f[4], ell); });
    if (!f[5].empty()) layer.clog_ell = detail::with_context(where + ", field 'clog_ell'", [&] { return parse_group(f[5], ell); });
    if (!f[6].empty()) layer.clp = detail::with_context(where + ", field 'clp'", [&] { return parse_group(f[6], ell); });
    rows.back().layers.push_back(std::move(layer));
  }
  if (!seen_header && lineno > 0 && !rows.empty()) fail(ErrorCode::ParseError, "missing CSV header");
  if (!rows.empty()) detail::check_contiguous(rows.back(), "last row");
  return rows;
}

/// JSON if the first non-blank character is '[', CSV otherwise.
inline std::vector<TableRow> parse_tables_text(const std::string &text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return parse_tables_json(text);
  return parse_tables_csv(text);
}

inline std::vector<TableRow> parse_tables(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_tables_text(ss.str());
}

enum class CheckStatus { Pass, Fail, Skip, Info };

inline std::string to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Pass: return "pass";
  case CheckStatus::Fail: return "fail";
  case CheckStatus::Skip: return "skip";
  case CheckStatus::Info: return "info";
  }
  return "?";
}

using NamedValues = std::vector<std::pair<std::string, std::string>>;

/// One named check. Tags: GrowthLaw, Gold, EDiffs, OrderIdentity,
/// ClPrimeOracle, FW, Splitting.
struct CheckResult {
  std::string check;
  CheckStatus status = CheckStatus::Skip;
  NamedValues computed;
  NamedValues expected;
  std::string detail;
};

struct RowReport {
  std::string table;
  unsigned long ell = 3;
  long long d = 0;
  Tower tower = Tower::Cyclotomic;
  std::vector<CheckResult> checks;
};

struct VerificationReport {
  std::vector<RowReport> rows;
  std::size_t passed = 0, failed = 0, skipped = 0, info = 0;

  bool ok() const { return failed == 0; }
};

namespace detail {

inline std::string join_longs(const std::vector<long> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline NamedValues triple_values(const InvariantTriple &t) {
  return {{"mu", std::to_string(t.mu)},
          {"lambda", std::to_string(t.lambda)},
          {"nu", std::to_string(t.nu)},
          {"n0", std::to_string(t.n0)}};
}

inline CheckResult skip(std::string tag, std::string why) { return {std::move(tag), CheckStatus::Skip, {}, {}, std::move(why)}; }

inline CheckResult check_growth_law(const TableRow &row) {
  const std::vector<long> e = row.clog_exponents();
  const auto &x = row.expected;
  if (!x || !x->lambda || !x->nu) return skip("GrowthLaw", "insufficient data: no printed invariants");
  CheckResult r{"GrowthLaw", CheckStatus::Fail, {}, {}, ""};
  r.expected = {{"lambda", std::to_string(*x->lambda)}, {"nu", std::to_string(*x->nu)}};
  InvariantTriple t;
  try {
    if (row.tower == Tower::Anticyclotomic) {
      if (!x->mu) return skip("GrowthLaw", "insufficient data: mu is not printed");
      t = fit_with_known_mu(e, row.ell, *x->mu, true);
      r.detail = "mu taken from the row, formula assumed from layer 0";
    } else if (e.size() >= 3) {
      try {
        t = fit_invariants(e, row.ell);
        r.detail = "three-layer fit";
      } catch (const Error &err) {
        if (err.code() != ErrorCode::InconsistentSequence) throw;
        t = fit_with_known_mu(e, row.ell, 0);
        r.detail = "three-layer fit inconsistent; mu = 0 from the last difference";
      }
    } else {
      t = fit_with_known_mu(e, row.ell, 0);
      r.detail = "two-layer fit with mu = 0";
    }
  } catch (const Error &err) {
    r.detail = err.what();
    return r;
  }
  r.computed = triple_values(t);
  bool ok = t.lambda == *x->lambda && t.nu == *x->nu;
  if (x->mu) {
    r.expected.insert(r.expected.begin(), {"mu", std::to_string(*x->mu)});
    ok = ok && t.mu == *x->mu;
  }
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

inline CheckResult check_gold(const TableRow &row) {
  if (row.tower != Tower::Cyclotomic || row.d >= 0) return skip("Gold", "applies to cyclotomic towers of imaginary quadratic fields");
  const auto ep = row.clp_exponents();
  if (!ep) return skip("Gold", "clp not printed at every layer");
  CheckResult r{"Gold", CheckStatus::Info, {}, {}, ""};
  const auto g = gold_lambda(*ep, row.ell);
  r.computed = {{"e_prime", join_longs(*ep)}, {"lambda_prime", g ? std::to_string(*g) : "none"}};
  if (!row.expected || !row.expected->lambda) {
    r.detail = "no printed lambda to compare";
    return r;
  }
  r.expected = {{"lambda", std::to_string(*row.expected->lambda)}};
  if (!g) {
    r.status = CheckStatus::Fail;
    r.detail = "no layer satisfies e'_n - e'_(n-1) < phi(ell^n)";
  } else {
    r.status = *g == *row.expected->lambda ? CheckStatus::Pass : CheckStatus::Fail;
  }
  return r;
}

inline CheckResult check_e_diffs(const TableRow &row) {
  if (!row.expected || !row.expected->e_diffs) return skip("EDiffs", "no printed differences");
  const auto ep = row.clp_exponents();
  if (!ep) return skip("EDiffs", "clp not printed at every layer");
  std::vector<long> diffs;
  for (std::size_t i = 1; i < ep->size(); ++i) diffs.push_back((*ep)[i] - (*ep)[i - 1]);
  const bool ok = diffs == *row.expected->e_diffs;
  return {"EDiffs", ok ? CheckStatus::Pass : CheckStatus::Fail, {{"e_diffs", join_longs(diffs)}},
          {{"e_diffs", join_longs(*row.expected->e_diffs)}}, ""};
}

inline CheckResult check_order_identity(const TableRow &row) {
  CheckResult r{"OrderIdentity", CheckStatus::Pass, {}, {}, "exponent of clog = exponent of clog_ell + exponent of clp"};
  for (const auto &l : row.layers) {
    if (!l.clog_ell || !l.clp) continue;
    const long lhs = l.clog.exponent_sum(), rhs = l.clog_ell->exponent_sum() + l.clp->exponent_sum();
    const std::string key = "n" + std::to_string(l.n);
    r.computed.emplace_back(key, std::to_string(lhs));
    r.expected.emplace_back(key, std::to_string(rhs));
    if (lhs != rhs) r.status = CheckStatus::Fail;
  }
  if (r.computed.empty()) return skip("OrderIdentity", "clog_ell and clp not both printed");
  return r;
}

inline CheckResult check_cl_prime(const TableRow &row) {
  if (row.tower != Tower::Cyclotomic || row.d >= 0) return skip("ClPrimeOracle", "forms oracle covers imaginary quadratic fields only");
  if (!row.layers.front().clp) return skip("ClPrimeOracle", "clp not printed at layer 0");
  CheckResult r{"ClPrimeOracle", CheckStatus::Fail, {}, {{"clp", row.layers.front().clp->str()}}, ""};
  try {
    const AbelianLGroup g = cl_prime(row.d, row.ell);
    r.computed = {{"clp", g.str()}};
    r.status = g == *row.layers.front().clp ? CheckStatus::Pass : CheckStatus::Fail;
  } catch (const Error &err) {
    r.detail = err.what();
  }
  return r;
}

/// mu~ = 0 for cyclotomic towers: from a consistent three-layer fit, or else
/// from the last difference, which is below ell^k (ell - 1) only when mu = 0.
inline CheckResult check_fw(const TableRow &row) {
  if (row.tower != Tower::Cyclotomic) return skip("FW", "not a cyclotomic tower");
  const std::vector<long> e = row.clog_exponents();
  if (e.size() < 2) return skip("FW", "insufficient data: one layer");
  CheckResult r{"FW", CheckStatus::Fail, {}, {{"mu", "0"}}, ""};
  if (e.size() >= 3) {
    try {
      const InvariantTriple t = fit_invariants(e, row.ell);
      r.computed = {{"mu", std::to_string(t.mu)}};
      r.detail = "three-layer fit";
      r.status = t.mu == 0 ? CheckStatus::Pass : CheckStatus::Fail;
      return r;
    } catch (const Error &err) {
      if (err.code() != ErrorCode::InconsistentSequence) {
        r.detail = err.what();
        return r;
      }
    }
  }
  const std::size_t k = e.size() - 2;
  const long delta = e[k + 1] - e[k];
  const Integer unit = ipow(row.ell, k) * (row.ell - 1);
  if (delta < 0) {
    r.detail = "exponent decreases between the last two layers";
    return r;
  }
  const Integer bound = Integer(delta) / unit;
  r.computed = {{"mu", bound.get_str()}};
  r.detail = "last difference " + std::to_string(delta) + " against ell^k(ell-1) = " + unit.get_str();
  r.status = bound == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

/// Legendre symbol of the field discriminant at ell, from d alone.
inline int ell_splitting_symbol(long long d, unsigned long ell) {
  const long long disc = (((d % 4) + 4) % 4 == 1) ? d : 4 * d;
  Integer r;
  const Integer base = mod(Integer(std::to_string(disc), 10), Integer(ell));
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (ell - 1) / 2, Integer(ell).get_mpz_t());
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

inline CheckResult check_splitting(const TableRow &row) {
  if (!row.ell_splits) return skip("Splitting", "no splitting claim");
  const int s = ell_splitting_symbol(row.d, row.ell);
  const bool splits = s == 1;
  return {"Splitting", splits == *row.ell_splits ? CheckStatus::Pass : CheckStatus::Fail,
          {{"kronecker", std::to_string(s)}}, {{"splits", *row.ell_splits ? "true" : "false"}}, ""};
}

} // namespace detail

inline RowReport verify_row(const TableRow &row) {
  RowReport r{row.table, row.ell, row.d, row.tower, {}};
  r.checks.push_back(detail::check_growth_law(row));
  r.checks.push_back(detail::check_gold(row));
  r.checks.push_back(detail::check_e_diffs(row));
  r.checks.push_back(detail::check_order_identity(row));
  r.checks.push_back(detail::check_cl_prime(row));
  r.checks.push_back(detail::check_fw(row));
  r.checks.push_back(detail::check_splitting(row));
  return r;
}

inline VerificationReport verify(const std::vector<TableRow> &rows) {
  VerificationReport rep;
  for (const auto &row : rows) {
    rep.rows.push_back(verify_row(row));
    for (const auto &c : rep.rows.back().checks) {
      switch (c.status) {
      case CheckStatus::Pass: ++rep.passed; break;
      case CheckStatus::Fail: ++rep.failed; break;
      case CheckStatus::Skip: ++rep.skipped; break;
      case CheckStatus::Info: ++rep.info; break;
      }
    }
  }
  return rep;
}

namespace detail {

inline nlohmann::ordered_json values_json(const NamedValues &v) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto &[k, x] : v) j[k] = x;
  return j;
}

} // namespace detail

/// Numbers are written as decimal strings; key order is fixed.
inline nlohmann::ordered_json report_json(const VerificationReport &rep) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto &r : rep.rows) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto &c : r.checks) {
      nlohmann::ordered_json cj;
      cj["check"] = c.check;
      cj["status"] = to_string(c.status);
      cj["computed"] = detail::values_json(c.computed);
      cj["expected"] = detail::values_json(c.expected);
      cj["detail"] = c.detail;
      checks.push_back(std::move(cj));
    }
    nlohmann::ordered_json rj;
    rj["table"] = r.table;
    rj["ell"] = std::to_string(r.ell);
    rj["d"] = std::to_string(r.d);
    rj["tower"] = to_string(r.tower);
    rj["checks"] = std::move(checks);
    rows.push_back(std::move(rj));
  }
  nlohmann::ordered_json out;
  out["rows"] = std::move(rows);
  out["summary"] = {{"rows", std::to_string(rep.rows.size())},
                    {"pass", std::to_string(rep.passed)},
                    {"fail", std::to_string(rep.failed)},
                    {"skip", std::to_string(rep.skipped)},
                    {"info", std::to_string(rep.info)}};
  return out;
}

inline std::string report_text(const VerificationReport &rep) {
  auto fmt = [](const NamedValues &v) {
    std::string s;
    for (const auto &[k, x] : v) s += (s.empty() ? "" : " ") + k + "=" + x;
    return s;
  };
  std::ostringstream out;
  for (const auto &r : rep.rows) {
    out << (r.table.empty() ? "-" : r.table) << " d=" << r.d << " ell=" << r.ell << " " << to_string(r.tower) << "\n";
    for (const auto &c : r.checks) {
      out << "  " << c.check << std::string(c.check.size() < 14 ? 14 - c.check.size() : 1, ' ') << to_string(c.status);
      if (!c.computed.empty()) out << "  got " << fmt(c.computed);
      if (!c.expected.empty()) out << "  want " << fmt(c.expected);
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      out << "\n";
    }
  }
  out << "summary: rows=" << rep.rows.size() << " pass=" << rep.passed << " fail=" << rep.failed
      << " skip=" << rep.skipped << " info=" << rep.info << "\n";
  return out.str();
}

inline nlohmann::ordered_json relations_json(const std::vector<RelationResult> &results) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto &r : results) {
    nlohmann::ordered_json j;
    j["relation"] = r.relation;
    nlohmann::ordered_json ops = nlohmann::ordered_json::object();
    for (const auto &[k, v] : r.operands) ops[k] = std::to_string(v);
    j["operands"] = std::move(ops);
    j["expected"] = std::to_string(r.expected);
    j["actual"] = std::to_string(r.actual);
    j["pass"] = r.pass;
    out.push_back(std::move(j));
  }
  return out;
}

} // namespace logiw
