#include "appell/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "appell/classical.hpp"
#include "appell/errors.hpp"
#include "appell/fourier.hpp"
#include "appell/higher_order.hpp"
#include "appell/json_io.hpp"
#include "appell/oracle.hpp"
#include "appell/symmetry.hpp"

namespace appell::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv, Tsv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "tsv") return Format::Tsv;
  throw UsageError("unknown format '" + s + "' (text, json, csv, tsv)");
}

Rational parse_rational_arg(const std::string& s, const std::string& flag) {
  try {
    return Rational::parse(s);
  } catch (const DomainError&) {
    throw UsageError(flag + " expects p/q or an integer, got '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s, const std::string& flag) {
  std::vector<Rational> out;
  for (const auto& piece : split(s, ',')) out.push_back(parse_rational_arg(piece, flag));
  if (out.empty()) throw UsageError(flag + " needs at least one coefficient");
  return out;
}

// Builtin names: bernoulli, euler, bernoulli-R, euler-R, optionally with a
// "-scaled" suffix. Anything else is an inline list of exponential
// coefficients a_0,a_1,...
TruncatedSeries parse_series(const std::string& spec, std::size_t order, const std::string& flag) {
  std::string name = spec;
  bool scaled = false;
  if (name.size() > 7 && name.ends_with("-scaled")) {
    scaled = true;
    name.resize(name.size() - 7);
  }
  for (const std::string family : {"bernoulli", "euler"}) {
    if (!name.starts_with(family)) continue;
    unsigned r = 1;
    if (name.size() > family.size()) {
      if (name[family.size()] != '-') break;
      const std::string digits = name.substr(family.size() + 1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw UsageError(flag + ": bad builtin series '" + spec + "'");
      r = static_cast<unsigned>(std::stoul(digits));
      if (r == 0) throw UsageError(flag + ": order must be positive");
    }
    return family == "bernoulli" ? bernoulli_f_series(r, scaled, order)
                                 : euler_f_series(r, scaled, order);
  }
  auto a = parse_rational_list(spec, flag);
  a.resize(order + 1);
  return TruncatedSeries::from_exponential(a);
}

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

std::vector<std::string> strs(std::span<const Rational> v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Rows of cells; header is shown only in text mode.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit_table(std::ostream& out, const Table& t, Format f) {
  if (f == Format::Csv || f == Format::Tsv) {
    const std::string sep = f == Format::Csv ? ", " : "\t";
    for (const auto& r : t.rows) out << join(r, sep) << "\n";
    return;
  }
  std::vector<std::size_t> width(t.header.size());
  auto widen = [&](const std::vector<std::string>& r) {
    if (width.size() < r.size()) width.resize(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) s += "  ";
      s += r[i];
      if (i + 1 < r.size()) s += std::string(width[i] - r[i].size(), ' ');
    }
    out << s << "\n";
  };
  if (!t.header.empty()) line(t.header);
  for (const auto& r : t.rows) line(r);
}

// key/value records: text "key: value", csv/tsv "key, value" rows.
void emit_record(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& kv, Format f) {
  if (f == Format::Text) {
    for (const auto& [k, v] : kv) out << k << ": " << v << "\n";
    return;
  }
  Table t;
  for (const auto& [k, v] : kv) t.rows.push_back({k, v});
  emit_table(out, t, f);
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

struct Context {
  std::ostream& out;
  std::ostream& err;
  Format format;
};

// ---- numbers -------------------------------------------------------------

struct NumbersArgs {
  std::string kind;
  unsigned order = 1;
  std::size_t max = 10;
};

int cmd_numbers(const NumbersArgs& a, const Context& c) {
  if (a.kind == "stirling") {
    const StirlingTable s(a.max);
    if (c.format == Format::Json) {
      Json rows = Json::array();
      for (std::size_t n = 0; n <= a.max; ++n) {
        Json row = Json::array();
        for (const auto& v : s.row(n)) row.push_back(v.get_str());
        rows.push_back(row);
      }
      emit_json(c.out, Json{{"kind", "stirling"}, {"max", a.max}, {"rows", rows}});
      return kOk;
    }
    Table t;
    t.header = {"n", "s(n,0..n)"};
    for (std::size_t n = 0; n <= a.max; ++n) {
      std::vector<std::string> row{std::to_string(n)};
      for (const auto& v : s.row(n)) row.push_back(v.get_str());
      t.rows.push_back(row);
    }
    emit_table(c.out, t, c.format);
    return kOk;
  }

  std::function<Rational(std::size_t)> value;
  if (a.kind == "bernoulli") value = [](std::size_t n) { return bernoulli_number(n); };
  else if (a.kind == "euler0") value = [](std::size_t n) { return euler_at_zero(n); };
  else if (a.kind == "higher-bernoulli") value = [&](std::size_t n) { return bernoulli_higher_number(n, a.order); };
  else if (a.kind == "higher-euler") value = [&](std::size_t n) { return euler_higher_number(n, a.order); };
  else throw UsageError("unknown --kind '" + a.kind + "'");

  std::vector<Rational> values;
  for (std::size_t n = 0; n <= a.max; ++n) values.push_back(value(n));
  if (c.format == Format::Json) {
    Json j{{"kind", a.kind}};
    if (a.kind.starts_with("higher")) j["order"] = a.order;
    j["values"] = strs(values);
    emit_json(c.out, j);
    return kOk;
  }
  Table t;
  t.header = {"n", "value"};
  for (std::size_t n = 0; n <= a.max; ++n) t.rows.push_back({std::to_string(n), values[n].str()});
  emit_table(c.out, t, c.format);
  return kOk;
}

// ---- poly ----------------------------------------------------------------

struct PolyArgs {
  std::string kind;
  unsigned order = 1;
  std::size_t n = 0;
  std::optional<std::string> at;
};

int cmd_poly(const PolyArgs& a, const Context& c) {
  Polynomial p;
  std::string label;
  if (a.kind == "bernoulli") {
    p = bernoulli_polynomial(a.n);
    label = "B_" + std::to_string(a.n);
  } else if (a.kind == "euler") {
    p = euler_polynomial(a.n);
    label = "E_" + std::to_string(a.n);
  } else if (a.kind == "higher-bernoulli" || a.kind == "higher-euler") {
    const Family fam = a.kind == "higher-bernoulli" ? Family::Bernoulli : Family::Euler;
    p = higher_oracle_polys(fam, a.order, a.n).polynomials[a.n];
    label = std::string(fam == Family::Bernoulli ? "B" : "E") + "_" + std::to_string(a.n) + "^(" +
            std::to_string(a.order) + ")";
  } else {
    throw UsageError("unknown --kind '" + a.kind + "'");
  }
  std::optional<Rational> x;
  if (a.at) x = parse_rational_arg(*a.at, "--at");

  switch (c.format) {
    case Format::Json: {
      Json j = p;
      if (x) {
        j["at"] = *x;
        j["value"] = p(*x);
      }
      emit_json(c.out, j);
      break;
    }
    case Format::Text:
      c.out << label << "(x) = " << p << "\n";
      if (x) c.out << label << "(" << *x << ") = " << p(*x) << "\n";
      break;
    default: {
      Table t;
      std::vector<std::string> row{std::to_string(a.n)};
      for (const auto& s : strs(p.coefficients())) row.push_back(s);
      t.rows.push_back(row);
      if (x) t.rows.push_back({"value", x->str(), p(*x).str()});
      emit_table(c.out, t, c.format);
    }
  }
  return kOk;
}

// ---- symmetry ------------------------------------------------------------

struct SymmetryArgs {
  std::string f;
  std::optional<std::string> g;
  std::string a;
  std::size_t max = 30;
};

int cmd_symmetry(const SymmetryArgs& args, const Context& c) {
  const Rational a = parse_rational_arg(args.a, "--a");
  const auto f = parse_series(args.f, args.max, "--f");
  const auto g = args.g ? parse_series(*args.g, args.max, "--g") : TruncatedSeries::variable(args.max);
  const auto report = characterize(f, g, a);
  if (c.format == Format::Json) {
    emit_json(c.out, report);
    return kOk;
  }
  std::vector<std::pair<std::string, std::string>> kv{
      {"a", report.parameter_a.str()},         {"order", std::to_string(report.order_checked)},
      {"symmetric", yes_no(report.symmetric)}, {"g_odd", yes_no(report.g_odd)},
      {"h_even", yes_no(report.h_even)},       {"psi_odd", yes_no(report.psi_odd)},
      {"equ1_holds", yes_no(report.equ1_holds)}};
  if (report.first_failure) {
    const auto& ff = *report.first_failure;
    kv.emplace_back("first_failure",
                    "n=" + std::to_string(ff.n) + " x^" + std::to_string(ff.power) + " lhs=" +
                        ff.lhs.str() + " rhs=" + ff.rhs.str());
  }
  emit_record(c.out, kv, c.format);
  return kOk;
}

// ---- basis / member ------------------------------------------------------

struct BasisArgs {
  std::string kind = "bernoulli";
  std::size_t n = 0;
  std::string a = "1";
};

int cmd_basis(const BasisArgs& args, const Context& c) {
  const Family fam = parse_family(args.kind);
  const Rational a = parse_rational_arg(args.a, "--a");
  const auto basis = vn_basis(fam, args.n, a);
  if (c.format == Format::Json) {
    emit_json(c.out, Json{{"kind", args.kind}, {"n", args.n}, {"a", a}, {"basis", basis}});
    return kOk;
  }
  Table t;
  t.header = {"k", "coefficients"};
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (c.format == Format::Text) {
      t.rows.push_back({std::to_string(k), to_string(basis[k])});
      continue;
    }
    std::vector<std::string> row{std::to_string(k)};
    for (const auto& s : strs(basis[k].coefficients())) row.push_back(s);
    t.rows.push_back(row);
  }
  emit_table(c.out, t, c.format);
  return kOk;
}

struct MemberArgs {
  std::string coeffs;
  std::string kind = "bernoulli";
  std::size_t n = 0;
  std::string a = "1";
};

int cmd_member(const MemberArgs& args, const Context& c) {
  const Family fam = parse_family(args.kind);
  const Polynomial p(parse_rational_list(args.coeffs, "--coeffs"));
  const Rational a = parse_rational_arg(args.a, "--a");
  const auto coords = vn_membership(p, args.n, a, fam);
  if (c.format == Format::Json) {
    Json j{{"member", coords.has_value()}};
    j["coordinates"] = coords ? Json(strs(*coords)) : Json(nullptr);
    emit_json(c.out, j);
    return kOk;
  }
  std::vector<std::pair<std::string, std::string>> kv{{"member", yes_no(coords.has_value())}};
  if (coords) kv.emplace_back("coordinates", join(strs(*coords), " "));
  emit_record(c.out, kv, c.format);
  return kOk;
}

// ---- decompose -----------------------------------------------------------

struct DecomposeArgs {
  std::string f;
  std::string a;
  std::string parity;
  std::size_t n = 0;
};

int cmd_decompose(const DecomposeArgs& args, const Context& c) {
  const Rational a = parse_rational_arg(args.a, "--a");
  if (args.parity != "odd" && args.parity != "even") throw UsageError("--parity must be odd or even");
  const Parity parity = args.parity == "odd" ? Parity::Odd : Parity::Even;
  const auto f = parse_series(args.f, args.n + 1, "--f");
  const auto d = decompose(f, a, parity);
  const Polynomial rebuilt = parity == Parity::Odd ? reconstruct_euler_form(d, args.n)
                                                   : reconstruct_bernoulli_form(d, args.n);
  const Polynomial oracle = appell_from_f(f, args.n).polynomials[args.n];
  if (c.format == Format::Json) {
    emit_json(c.out, Json{{"decomposition", d},
                          {"n", args.n},
                          {"reconstructed", rebuilt},
                          {"oracle", oracle},
                          {"matches", rebuilt == oracle}});
    return kOk;
  }
  emit_record(c.out,
              {{"a", a.str()},
               {"parity", args.parity},
               {"a_coeffs", join(strs(d.a_coeffs), " ")},
               {"remainder_F", join(strs(d.remainder_F.coefficients()), " ")},
               {"reconstructed", c.format == Format::Text ? to_string(rebuilt) : join(strs(rebuilt.coefficients()), " ")},
               {"oracle", c.format == Format::Text ? to_string(oracle) : join(strs(oracle.coefficients()), " ")},
               {"matches", yes_no(rebuilt == oracle)}},
              c.format);
  return kOk;
}

// ---- validate ------------------------------------------------------------

struct ValidateArgs {
  std::string kind;
  std::string formula = "all";
  unsigned order = 1;
  std::size_t max = 12;
};

int cmd_validate(const ValidateArgs& args, const Context& c) {
  const Family fam = parse_family(args.kind);
  std::vector<ValidationReport> reports;
  if (args.formula == "all") {
    reports = validate_formulas(fam, args.order, args.max);
  } else {
    const auto ids = formula_ids(fam);
    if (std::find(ids.begin(), ids.end(), args.formula) == ids.end())
      throw UsageError("unknown --formula '" + args.formula + "' for " + args.kind + " (one of: all, " +
                       join(ids, ", ") + ")");
    reports.push_back(validate_formula(fam, args.formula, args.order, args.max));
  }
  const bool clean = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.all_match(); });

  if (c.format == Format::Json) {
    if (reports.size() == 1) emit_json(c.out, reports.front());
    else emit_json(c.out, Json(reports));
  } else {
    Table t;
    t.header = {"formula", "r", "checked", "mismatches", "first_mismatch_n"};
    for (const auto& r : reports) {
      const auto fm = r.first_mismatch();
      t.rows.push_back({r.formula_id, std::to_string(r.r), std::to_string(r.checked_n.size()),
                        std::to_string(r.mismatches.size()), fm ? std::to_string(fm->n) : "-"});
    }
    emit_table(c.out, t, c.format);
  }
  return clean ? kOk : kMismatch;
}

// ---- fourier -------------------------------------------------------------

struct FourierArgs {
  std::string target;
  std::size_t n = 0;
  unsigned order = 1;
  std::optional<std::string> x;
  std::size_t terms = 1000;
  std::string variant = "derived";
  std::optional<std::size_t> grid;
  std::optional<std::string> f;
  std::optional<std::string> a;
  std::string parity = "odd";
  std::optional<std::size_t> cutoff;
};

FourierTarget build_target(const FourierArgs& args) {
  if (args.target == "bernoulli") return BernoulliTarget{args.n};
  if (args.target == "euler") return EulerTarget{args.n};
  if (args.target == "euler-order") {
    EulerOrderVariant v;
    if (args.variant == "literal") v = EulerOrderVariant::Literal;
    else if (args.variant == "literal-order2") v = EulerOrderVariant::LiteralOrder2;
    else if (args.variant == "derived") v = EulerOrderVariant::Derived;
    else throw UsageError("--variant must be literal, literal-order2 or derived");
    return EulerOrderTarget{args.n, args.order, v};
  }
  if (args.target == "appell") {
    if (!args.f || !args.a) throw UsageError("--target appell needs --f and --a");
    if (args.parity != "odd" && args.parity != "even") throw UsageError("--parity must be odd or even");
    AppellFourierOptions opts;
    opts.cutoff = args.cutoff;
    if (args.variant == "literal") opts.variant = FourierVariant::Literal;
    else if (args.variant != "derived") throw UsageError("--variant must be literal or derived for appell");
    const Rational a = parse_rational_arg(*args.a, "--a");
    const std::size_t order = std::max(args.n + 1, args.cutoff.value_or(0));
    const auto series = parse_series(*args.f, order, "--f");
    const auto d = decompose(series, a, args.parity == "odd" ? Parity::Odd : Parity::Even);
    return AppellTarget{d, args.n, opts};
  }
  throw UsageError("unknown --target '" + args.target + "' (bernoulli, euler, euler-order, appell)");
}

std::vector<Rational> grid_points(const FourierDomain& dom, std::size_t K) {
  std::vector<Rational> xs;
  const Rational width = dom.hi - dom.lo;
  if (!dom.lo_open && !dom.hi_open) {
    if (K == 0) return {dom.lo};
    for (std::size_t i = 0; i <= K; ++i)
      xs.push_back(dom.lo + width * Rational(static_cast<long>(i)) / Rational(static_cast<long>(K)));
  } else {
    // open interval: K+1 cell midpoints keep every point admissible
    for (std::size_t i = 0; i <= K; ++i)
      xs.push_back(dom.lo + width * Rational(static_cast<long>(2 * i + 1)) /
                                Rational(static_cast<long>(2 * (K + 1))));
  }
  return xs;
}

int cmd_fourier(const FourierArgs& args, const Context& c, bool format_given) {
  const FourierTarget target = build_target(args);
  if (args.grid) {
    const Format f = format_given ? c.format : Format::Tsv;
    std::vector<FourierEvaluation> evals;
    for (const auto& x : grid_points(fourier_domain(target), *args.grid))
      evals.push_back(evaluate(target, x, args.terms));
    if (f == Format::Json) {
      emit_json(c.out, Json(evals));
      return kOk;
    }
    Table t;
    t.header = {"x", "partial_sum", "exact", "abs_error"};
    for (const auto& e : evals)
      t.rows.push_back({e.x.str(), fmt_double(e.partial_sum), fmt_double(e.exact_value.to_double()),
                        fmt_double(e.abs_error)});
    emit_table(c.out, t, f);
    return kOk;
  }
  if (!args.x) throw UsageError("fourier needs --x or --grid");
  const auto e = evaluate(target, parse_rational_arg(*args.x, "--x"), args.terms);
  if (c.format == Format::Json) {
    emit_json(c.out, e);
    return kOk;
  }
  emit_record(c.out,
              {{"n", std::to_string(e.n)},
               {"x", e.x.str()},
               {"terms_M", std::to_string(e.terms_M)},
               {"partial_sum", fmt_double(e.partial_sum)},
               {"imag_residue", fmt_double(e.imag_residue)},
               {"exact_value", e.exact_value.str()},
               {"abs_error", fmt_double(e.abs_error)}},
              c.format);
  return kOk;
}

constexpr const char* kFourierDomains =
    "Admissible x (open ends excluded):\n"
    "  bernoulli    n >= 1: 0 < x < 1 when n = 1, 0 <= x <= 1 when n >= 2\n"
    "  euler        0 < x < 1 when n = 0, 0 <= x <= 1 when n >= 1\n"
    "  appell       on y = x/a: odd parity 0 < y < 1 when n = 0, else 0 <= y <= 1;\n"
    "               even parity 0 < y < 1 when n = 1, else 0 <= y <= 1\n"
    "  euler-order  0 < x < r\n"
    "--grid K emits K+1 equally spaced points (cell midpoints on open intervals).";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Appell sequences: Bernoulli/Euler tables, symmetry checks, "
               "closed-form validation and Fourier partial sums"};
  app.name("appell");
  app.require_subcommand(1, 1);

  std::string format_name;
  if (const char* env = std::getenv("APPELL_FORMAT")) format_name = env;
  bool format_given = false;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option_function<std::string>(
           "--format",
           [&](const std::string& v) {
             format_name = v;
             format_given = true;
           },
           "Output format: text, json, csv, tsv (default text, or $APPELL_FORMAT)")
        ->check(CLI::IsMember({"text", "json", "csv", "tsv"}));
  };

  NumbersArgs numbers;
  auto* s_numbers = app.add_subcommand("numbers", "Tables of Bernoulli, Euler, higher-order and Stirling numbers");
  s_numbers->add_option("--kind", numbers.kind, "bernoulli | euler0 | higher-bernoulli | higher-euler | stirling")
      ->required()
      ->check(CLI::IsMember({"bernoulli", "euler0", "higher-bernoulli", "higher-euler", "stirling"}));
  s_numbers->add_option("--order", numbers.order, "Order r for higher-* kinds")->check(CLI::PositiveNumber);
  s_numbers->add_option("--max", numbers.max, "Largest index N")->required();
  add_format(s_numbers);

  PolyArgs poly;
  auto* s_poly = app.add_subcommand("poly", "One polynomial B_n, E_n, B_n^(r) or E_n^(r)");
  s_poly->add_option("--kind", poly.kind, "bernoulli | euler | higher-bernoulli | higher-euler")
      ->required()
      ->check(CLI::IsMember({"bernoulli", "euler", "higher-bernoulli", "higher-euler"}));
  s_poly->add_option("--order", poly.order, "Order r for higher-* kinds")->check(CLI::PositiveNumber);
  s_poly->add_option("--n", poly.n, "Degree n")->required();
  s_poly->add_option("--at", poly.at, "Also evaluate at x = p/q");
  add_format(s_poly);

  SymmetryArgs sym;
  auto* s_sym = app.add_subcommand("symmetry", "Check P_n(a-x) = (-1)^n P_n(x) and the parity criteria for f, g");
  s_sym->add_option("--f", sym.f, "Series: bernoulli[-R][-scaled], euler[-R][-scaled] or a_0,a_1,...")->required();
  s_sym->add_option("--g", sym.g, "Series g with g(0) = 0 (default t), same syntax as --f");
  s_sym->add_option("--a", sym.a, "Parameter a as p/q")->required();
  s_sym->add_option("--max", sym.max, "Series order N")->required();
  s_sym->footer("Inline series list exponential coefficients a_k (the t^k/k! convention).");
  add_format(s_sym);

  BasisArgs basis;
  auto* s_basis = app.add_subcommand("basis", "Basis {B_{n-2k}(x/a)} or {E_{n-2k}(x/a)} of the symmetric space V_n(a)");
  s_basis->add_option("--kind", basis.kind, "bernoulli | euler")->required()->check(CLI::IsMember({"bernoulli", "euler"}));
  s_basis->add_option("--n", basis.n, "Degree n")->required();
  s_basis->add_option("--a", basis.a, "Nonzero parameter a as p/q")->required();
  add_format(s_basis);

  MemberArgs member;
  auto* s_member = app.add_subcommand("member", "Coordinates of a polynomial in the V_n(a) basis, if it lies there");
  s_member->add_option("--coeffs", member.coeffs, "c_0,c_1,... ascending powers")->required();
  s_member->add_option("--kind", member.kind, "Basis family: bernoulli | euler")->check(CLI::IsMember({"bernoulli", "euler"}));
  s_member->add_option("--n", member.n, "Degree n")->required();
  s_member->add_option("--a", member.a, "Nonzero parameter a as p/q")->required();
  add_format(s_member);

  DecomposeArgs dec;
  auto* s_dec = app.add_subcommand("decompose", "Split f into an odd/even remainder plus a_k terms and rebuild P_n");
  s_dec->add_option("--f", dec.f, "Series: builtin name or a_0,a_1,...")->required();
  s_dec->add_option("--a", dec.a, "Nonzero parameter a as p/q")->required();
  s_dec->add_option("--parity", dec.parity, "Parity of the remainder F: odd | even")->required()->check(CLI::IsMember({"odd", "even"}));
  s_dec->add_option("--n", dec.n, "Index n of the rebuilt polynomial")->required();
  add_format(s_dec);

  ValidateArgs val;
  auto* s_val = app.add_subcommand("validate", "Compare closed forms against the generating-function oracle");
  s_val->add_option("--kind", val.kind, "bernoulli | euler")->required()->check(CLI::IsMember({"bernoulli", "euler"}));
  s_val->add_option("--formula", val.formula,
                    "Formula id or 'all'. bernoulli: numbers decomp stirling stirling-derived order2 order3 "
                    "order3-general; euler: numbers decomp stirling order2 fourier fourier-order2");
  s_val->add_option("--order", val.order, "Order r")->required()->check(CLI::PositiveNumber);
  s_val->add_option("--max", val.max, "Largest n")->required();
  s_val->footer("Exit code 3 means the run completed and found mismatches.");
  add_format(s_val);

  FourierArgs four;
  auto* s_four = app.add_subcommand("fourier", "Fourier partial sums against exact values");
  s_four->add_option("--target", four.target, "bernoulli | euler | euler-order | appell")
      ->required()
      ->check(CLI::IsMember({"bernoulli", "euler", "euler-order", "appell"}));
  s_four->add_option("--n", four.n, "Index n")->required();
  s_four->add_option("--order", four.order, "Order r for euler-order")->check(CLI::PositiveNumber);
  s_four->add_option("--x", four.x, "Point x as p/q");
  s_four->add_option("--terms", four.terms, "Number M of conjugate term pairs");
  s_four->add_option("--variant", four.variant, "derived | literal | literal-order2 (euler-order only)")
      ->check(CLI::IsMember({"derived", "literal", "literal-order2"}));
  s_four->add_option("--grid", four.grid, "Emit K+1 points across the admissible domain (TSV by default)");
  s_four->add_option("--f", four.f, "appell: series, builtin name or a_0,a_1,...");
  s_four->add_option("--a", four.a, "appell: parameter a as p/q");
  s_four->add_option("--parity", four.parity, "appell: remainder parity odd | even")->check(CLI::IsMember({"odd", "even"}));
  s_four->add_option("--cutoff", four.cutoff, "appell: use a_k for k <= cutoff only");
  s_four->footer(kFourierDomains);
  add_format(s_four);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsage;
  }

  try {
    const Format format = format_name.empty() ? Format::Text : parse_format(format_name);
    const Context ctx{out, err, format};
    if (*s_numbers) return cmd_numbers(numbers, ctx);
    if (*s_poly) return cmd_poly(poly, ctx);
    if (*s_sym) return cmd_symmetry(sym, ctx);
    if (*s_basis) return cmd_basis(basis, ctx);
    if (*s_member) return cmd_member(member, ctx);
    if (*s_dec) return cmd_decompose(dec, ctx);
    if (*s_val) return cmd_validate(val, ctx);
    if (*s_four) return cmd_fourier(four, ctx, format_given);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}

}  // namespace appell::cli
