#include "coinv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "coinv/basis.hpp"
#include "coinv/oracle.hpp"
#include "coinv/smirnov.hpp"
#include "coinv/symfun.hpp"

namespace coinv {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

BasisVariant variant_from_flag(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::toupper(c); });
  return parse_basis_variant(text);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct TableRow {
  SegmentedWord sigma;
  BasisElement b;
  IndexSubset split;
};

std::vector<TableRow> bijection_rows(int n) {
  std::vector<TableRow> rows;
  for_each_segmented_permutation(n, [&](const SegmentedWord& w) {
    rows.push_back({w, psi_inverse(w), split_set(w)});
  });
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    const auto& wa = a.sigma;
    const auto& wb = b.sigma;
    if (wa.block_count() != wb.block_count()) return wa.block_count() < wb.block_count();
    if (wa.bars().mask() != wb.bars().mask()) return wa.bars().mask() < wb.bars().mask();
    return wa.letters() < wb.letters();
  });
  return rows;
}

}  // namespace

std::string bijection_csv(int n) {
  std::ostringstream out;
  out << "sigma,basis_element,k,l,sminv,split\n";
  for (const auto& row : bijection_rows(n)) {
    out << csv_field(row.sigma.to_string()) << ',' << csv_field(row.b.to_string()) << ',' << row.sigma.ascents() << ','
        << row.sigma.descents() << ',' << sminv(row.sigma) << ',' << csv_field(row.split.to_brace_string()) << '\n';
  }
  return out.str();
}

namespace {

struct Options {
  int n = 0;
  std::string variant = "a12";
  std::optional<int> k, l, d;
  std::string mu;
  std::string format;
  std::string form = "schur";
  int jobs = 1;
  std::optional<int> max_x_degree;
  bool long_run = false;
};

void require_n(const Options& o, int lo, int hi) {
  if (o.n < lo || o.n > hi)
    throw UsageError("--n must be between " + std::to_string(lo) + " and " + std::to_string(hi));
}

void cmd_basis(const Options& o, std::ostream& out) {
  const BasisVariant v = variant_from_flag(o.variant);
  require_n(o, path_variant(v) == PathVariant::TypeA ? 1 : 0, 8);
  const std::string fmt = o.format.empty() ? "text" : o.format;
  if (fmt == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for_each_basis_element(o.n, v, [&](const BasisElement& b) { arr.push_back(b.to_json()); });
    out << arr.dump(2) << '\n';
    return;
  }
  if (fmt == "csv") out << "basis_element,x_degree,theta_degree,xi_degree\n";
  for_each_basis_element(o.n, v, [&](const BasisElement& b) {
    if (fmt == "csv")
      out << b.to_string() << ',' << b.deg_x() << ',' << b.deg_theta() << ',' << b.deg_xi() << '\n';
    else
      out << b.to_string() << '\n';
  });
}

void cmd_hilbert(const Options& o, std::ostream& out) {
  const BasisVariant v = variant_from_flag(o.variant);
  require_n(o, path_variant(v) == PathVariant::TypeA ? 1 : 0, 10);
  const QuvPolynomial h = hilbert_series(o.n, v);
  const std::string fmt = o.format.empty() ? "text" : o.format;
  if (fmt == "json")
    out << h.to_json().dump(2) << '\n';
  else if (fmt == "latex")
    out << h.to_grouped_string() << '\n';
  else
    out << h.to_string() << '\n';
}

void cmd_frobenius(const Options& o, std::ostream& out) {
  require_n(o, 1, 7);
  if (o.k.has_value() != o.l.has_value()) throw UsageError("--k and --l must be given together");
  const BasisVariant v = variant_from_flag(o.variant);
  if (path_variant(v) != PathVariant::TypeA) throw UsageError("frobenius is available for a12, a11 and a02");
  if (o.k && v != BasisVariant::A12) throw UsageError("--k/--l refinement is available for a12 only");
  const QSymExpansion f = o.k ? frobenius_qsym_refined(o.n, *o.k, *o.l) : frobenius_qsym(o.n, v, o.jobs);
  const std::string fmt = o.format.empty() ? (o.form == "schur" ? "latex" : "text") : o.format;
  if (o.form == "qsym") {
    if (fmt == "json") {
      out << f.to_json().dump(2) << '\n';
    } else if (fmt == "text") {
      for (const auto& [s, c] : f.coeffs()) out << s.to_brace_string() << ": " << c.to_string() << '\n';
    } else {
      throw UsageError("qsym form supports --format text or json");
    }
    return;
  }
  const SchurExpansion sch = schur_expansion(f);
  if (fmt == "json") {
    out << sch.to_json().dump(2) << '\n';
  } else if (fmt == "latex") {
    out << sch.to_latex() << '\n';
  } else if (fmt == "text") {
    for (const auto& [lambda, c] : sch.coeffs()) out << lambda.to_string() << ": " << c.to_string() << '\n';
  } else {
    throw UsageError("schur form supports --format text, latex or json");
  }
}

void cmd_bijection(const Options& o, std::ostream& out) {
  require_n(o, 1, 7);
  const std::string fmt = o.format.empty() ? "csv" : o.format;
  if (fmt == "csv") {
    out << bijection_csv(o.n);
  } else if (fmt == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : bijection_rows(o.n))
      arr.push_back({{"sigma", row.sigma.to_string()},
                     {"basis_element", row.b.to_string()},
                     {"k", row.sigma.ascents()},
                     {"l", row.sigma.descents()},
                     {"sminv", sminv(row.sigma)},
                     {"split", row.split.elements()}});
    out << arr.dump(2) << '\n';
  } else {
    throw UsageError("bijection supports --format csv or json");
  }
}

std::vector<std::pair<int, int>> degree_pairs(const Options& o) {
  if (o.k.has_value() != o.l.has_value()) throw UsageError("--k and --l must be given together");
  if (o.k) {
    if (*o.k < 0 || *o.l < 0 || *o.k + *o.l >= o.n) throw UsageError("--k and --l must satisfy 0 <= k, l and k + l < n");
    return {{*o.k, *o.l}};
  }
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < o.n; ++k)
    for (int l = 0; k + l < o.n; ++l) out.emplace_back(k, l);
  return out;
}

int cmd_hook(const Options& o, std::ostream& out) {
  require_n(o, 1, 7);
  if (!o.d) throw UsageError("hook needs --d");
  if (*o.d < 0 || *o.d > o.n - 1) throw UsageError("--d must satisfy 0 <= d <= n-1");
  const bool json = o.format == "json";
  nlohmann::json arr = nlohmann::json::array();
  bool all_equal = true;
  for (auto [k, l] : degree_pairs(o)) {
    const QuvPolynomial enumerated = hook_schur_coefficient(o.n, k, l, *o.d);
    const QuvPolynomial formula = hook_qbinomial_formula(o.n, k, l, *o.d);
    const bool equal = enumerated == formula;
    all_equal = all_equal && equal;
    if (json)
      arr.push_back({{"k", k}, {"l", l}, {"d", *o.d}, {"enumeration", enumerated.to_json()}, {"formula", formula.to_json()},
                     {"equal", equal}});
    else
      out << "k=" << k << " l=" << l << " d=" << *o.d << ": enumeration " << enumerated.to_string() << " | formula "
          << formula.to_string() << (equal ? "" : "  MISMATCH") << '\n';
  }
  if (json) out << arr.dump(2) << '\n';
  return all_equal ? kExitOk : kExitVerificationFailed;
}

void cmd_hmu(const Options& o, std::ostream& out) {
  require_n(o, 1, 7);
  if (o.mu.empty()) throw UsageError("hmu needs --mu");
  const Partition mu = Partition::parse(o.mu);
  if (mu.size() != o.n) throw UsageError("--mu must be a partition of n");
  const bool json = o.format == "json";
  nlohmann::json arr = nlohmann::json::array();
  for (auto [k, l] : degree_pairs(o)) {
    const QuvPolynomial c = h_mu_coefficient(o.n, k, l, mu);
    if (json)
      arr.push_back({{"k", k}, {"l", l}, {"mu", mu.parts()}, {"coeff", c.to_json()}});
    else
      out << "k=" << k << " l=" << l << " mu=" << mu.to_string() << ": " << c.to_string() << '\n';
  }
  if (json) out << arr.dump(2) << '\n';
}

/// Runs one named check; on failure prints the witness and reports false.
class Verifier {
 public:
  explicit Verifier(std::ostream& out) : out_(out) {}

  template <typename F>
  void check(const std::string& name, F&& body) {
    if (failed_) return;
    std::string witness;
    bool ok = false;
    try {
      ok = body(witness);
    } catch (const std::exception& e) {
      witness = std::string("exception: ") + e.what();
    }
    if (ok) {
      out_ << "PASS " << name << '\n';
    } else {
      out_ << "FAIL " << name << ": " << witness << '\n';
      failed_ = true;
    }
  }

  bool failed() const { return failed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

int cmd_verify(const Options& o, std::ostream& out) {
  require_n(o, 1, 7);
  const int top = o.n;
  Verifier v(out);
  for (int n = 1; n <= top; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    v.check("cardinality a12" + tag, [&](std::string& w) {
      const Integer expected = factorial(n) * (Integer(1) << (n - 1));
      const Integer got = count_basis(n, BasisVariant::A12);
      w = "count " + got.str() + " expected " + expected.str();
      return got == expected;
    });
    v.check("cardinality b12" + tag, [&](std::string& w) {
      const Integer expected = factorial(n) * (Integer(1) << (2 * n));
      const Integer got = count_basis(n, BasisVariant::B12);
      w = "count " + got.str() + " expected " + expected.str();
      return got == expected && count_type_b(n) == expected;
    });
    v.check("height refinement" + tag, [&](std::string& w) {
      std::vector<Integer> by_height(n, 0);
      for_each_path(n, PathVariant::TypeA, [&](const MotzkinPath& p) {
        Integer prod = 1;
        for (int a : alpha_sequence(p.theta_set(), p.xi_set()).values) prod *= a + 1;
        by_height[p.final_height() - 1] += prod;
      });
      for (int r = 0; r < n; ++r)
        if (by_height[r] != count_by_height(n, r) || by_height[r] != count_by_height_recursive(n, r)) {
          w = "r=" + std::to_string(r) + " enumerated " + by_height[r].str();
          return false;
        }
      return true;
    });
    v.check("bijection" + tag, [&](std::string& w) {
      bool ok = true;
      for_each_basis_element(n, BasisVariant::A12, [&](const BasisElement& b) {
        if (!ok) return;
        const SegmentedWord s = psi(b);
        if (psi_inverse(s) != b || s.ascents() != b.deg_theta() || s.descents() != b.deg_xi() ||
            sminv(s) != b.deg_x() || split_set(s) != ascent_set(b) || s.block_count() != b.path().final_height()) {
          w = b.to_string() + " -> " + s.to_string();
          ok = false;
        }
      });
      for_each_segmented_permutation(n, [&](const SegmentedWord& s) {
        if (ok && psi(psi_inverse(s)) != s) {
          w = s.to_string();
          ok = false;
        }
      });
      return ok;
    });
    v.check("recursion vs enumeration" + tag, [&](std::string& w) {
      std::map<std::pair<int, int>, QuvPolynomial> direct;
      for_each_segmented_permutation(n, [&](const SegmentedWord& s) {
        direct[{s.ascents(), s.descents()}] += QuvPolynomial::q_power(sminv(s));
      });
      QuvPolynomial assembled;
      for (int k = 0; k < n; ++k)
        for (int l = 0; k + l < n; ++l) {
          const QuvPolynomial rec = sw_q_recursion(n, k, l);
          if (rec != direct[{k, l}]) {
            w = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " recursion " + rec.to_string();
            return false;
          }
          assembled += QuvPolynomial::monomial({0, k, l}) * rec;
        }
      w = "assembled " + assembled.to_string();
      return assembled == hilbert_series(n, BasisVariant::A12);
    });
    v.check("frobenius routes agree" + tag, [&](std::string& w) {
      const auto a = frobenius_qsym(n, BasisVariant::A12, o.jobs);
      const auto b = frobenius_qsym_via_words(n);
      w = "basis and word expansions differ";
      return a == b && a.total() == hilbert_series(n, BasisVariant::A12);
    });
    v.check("hook identity" + tag, [&](std::string& w) {
      for (int d = 0; d < n; ++d)
        for (int k = 0; k < n; ++k)
          for (int l = 0; k + l < n; ++l) {
            const auto lhs = hook_schur_coefficient(n, k, l, d);
            if (lhs != hook_qbinomial_formula(n, k, l, d) ||
                hook_h_coefficient(n, k, l, d) != h_mu_coefficient(n, k, l, Partition::hook(n, d)) ||
                (d == 0 && lhs != sign_character_formula(n, k, l))) {
              w = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " d=" + std::to_string(d);
              return false;
            }
          }
      return true;
    });
    v.check("ascent characterization" + tag, [&](std::string& w) {
      bool ok = true;
      for_each_basis_element(n, BasisVariant::A12, [&](const BasisElement& b) {
        if (!ok) return;
        const IndexSubset asc = ascent_set(b);
        for (int d = 0; d < n && ok; ++d)
          if (hook_asc_characterization(b, d) != (asc == IndexSubset::interval_to_end(n, d + 1))) {
            w = b.to_string() + " d=" + std::to_string(d);
            ok = false;
          }
      });
      return ok;
    });
    v.check("q-Stirling specializations" + tag, [&](std::string& w) {
      const auto a = hilbert_series(n, BasisVariant::A12).with_v_zero();
      const auto b = hilbert_series(n, BasisVariant::B12).with_v_zero();
      w = "v=0 specialization differs";
      return a == hilbert_11_formula(n, WeylType::TypeA) && b == hilbert_11_formula(n, WeylType::TypeB);
    });
    v.check("q-Vandermonde" + tag, [&](std::string& w) {
      for (int d = 0; d < n; ++d)
        for (int k = 0; k < n - d; ++k)
          for (int l = 0; l < n - d; ++l)
            if (vandermonde_lhs(n, k, l, d) != vandermonde_rhs(n, k, l, d)) {
              w = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " d=" + std::to_string(d);
              return false;
            }
      return true;
    });
  }
  if (v.failed()) return kExitVerificationFailed;
  out << "all checks passed up to n=" << top << '\n';
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const BasisVariant v = variant_from_flag(o.variant);
  if (v != BasisVariant::A12 && v != BasisVariant::B12) throw UsageError("oracle supports --variant a12 or b12");
  const bool type_a = v == BasisVariant::A12;
  const int desk_limit = type_a ? 3 : 2;
  require_n(o, 1, desk_limit + 1);
  if (o.n > desk_limit && !o.long_run)
    throw UsageError("n=" + std::to_string(o.n) + " is a long run; pass --long to enable it");
  const QuvPolynomial expected = hilbert_series(o.n, v);
  OracleOptions opts;
  opts.max_x_degree = o.max_x_degree.value_or(expected.max_q_degree() + 2);
  opts.jobs = o.jobs;
  const OracleResult r = hilbert_via_oracle(o.n, type_a ? GroupType::Symmetric : GroupType::Hyperoctahedral, opts);
  const bool matches = r.hilbert == expected;
  if (o.format == "text") {
    for (const auto& p : r.pieces)
      out << "(" << p.degree.r << "," << p.degree.s << "," << p.degree.t << ") ambient=" << p.ambient
          << " ideal_rank=" << p.ideal_rank << " quotient=" << p.quotient << '\n';
    out << "hilbert: " << r.hilbert.to_string() << '\n';
    out << "complete: " << (r.complete ? "yes" : "no") << '\n';
    out << "matches basis: " << (matches ? "yes" : "no") << '\n';
  } else {
    nlohmann::json j{{"pieces", r.report_json()},
                     {"hilbert", r.hilbert.to_string()},
                     {"complete", r.complete},
                     {"matches_basis", matches}};
    out << j.dump(2) << '\n';
  }
  return matches && r.complete ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bases, series and verification for (1,2) coinvariant rings", "coinv"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", o.n, "Number of variables");
    if (required) opt->required();
    return opt;
  };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", o.variant, "Basis family")
        ->check(CLI::IsMember({"a02", "a11", "a12", "b11", "b12"}));
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };
  auto add_kl = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "theta-degree");
    sub->add_option("--l", o.l, "xi-degree");
  };
  auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)"); };

  auto* basis = app.add_subcommand("basis", "List basis elements");
  add_n(basis, true);
  add_variant(basis);
  add_format(basis, {"text", "json", "csv"});

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a basis family");
  add_n(hilbert, true);
  add_variant(hilbert);
  add_format(hilbert, {"text", "json", "latex"});

  auto* frob = app.add_subcommand("frobenius", "Conjectural Frobenius series");
  add_n(frob, true);
  add_variant(frob);
  add_kl(frob);
  add_jobs(frob);
  frob->add_option("--form", o.form, "qsym or schur")->check(CLI::IsMember({"qsym", "schur"}));
  add_format(frob, {"text", "json", "latex"});

  auto* bij = app.add_subcommand("bijection", "Basis elements against segmented permutations");
  add_n(bij, true);
  add_format(bij, {"csv", "json"});

  auto* hook = app.add_subcommand("hook", "Hook Schur coefficients: enumeration and closed form");
  add_n(hook, true);
  add_kl(hook);
  hook->add_option("--d", o.d, "Hook arm length")->required();
  add_format(hook, {"text", "json"});

  auto* hmu = app.add_subcommand("hmu", "Pairings with complete homogeneous functions");
  add_n(hmu, true);
  add_kl(hmu);
  hmu->add_option("--mu", o.mu, "Partition, e.g. \"2,1\"")->required();
  add_format(hmu, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "Run the exhaustive property suite up to n");
  o.n = 5;
  add_n(verify, false);
  add_jobs(verify);

  auto* oracle = app.add_subcommand("oracle", "Quotient dimensions by exact linear algebra");
  add_n(oracle, true);
  add_variant(oracle);
  add_jobs(oracle);
  oracle->add_option("--max-x-degree", o.max_x_degree, "Largest x-degree to compute");
  oracle->add_flag("--long", o.long_run, "Allow the long-running sizes");
  add_format(oracle, {"text", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalidInput;
  }

  try {
    if (*basis) cmd_basis(o, out);
    if (*hilbert) cmd_hilbert(o, out);
    if (*frob) cmd_frobenius(o, out);
    if (*bij) cmd_bijection(o, out);
    if (*hook) return cmd_hook(o, out);
    if (*hmu) cmd_hmu(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*oracle) return cmd_oracle(o, out);
  } catch (const std::invalid_argument& e) {
    CLI::App* active = app.get_subcommands().front();
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitInvalidInput;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace coinv
