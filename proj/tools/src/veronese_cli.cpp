#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "veronese/edgewise.hpp"
#include "veronese/errors.hpp"
#include "veronese/int_polynomial.hpp"
#include "veronese/integer.hpp"
#include "veronese/kruskal_katona.hpp"
#include "veronese/macaulay.hpp"
#include "veronese/series.hpp"
#include "veronese/simplicial.hpp"
#include "veronese/simplicial_io.hpp"
#include "veronese/sturm.hpp"
#include "veronese/transform.hpp"

namespace {

using veronese::Int;
using veronese::IntPolynomial;
using json = nlohmann::ordered_json;

Int parse_integer(const std::string& tok) {
  const size_t start = (!tok.empty() && tok[0] == '-') ? 1 : 0;
  if (tok.size() == start)
    throw veronese::DomainError("invalid integer token '" + tok + "'");
  for (size_t i = start; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9')
      throw veronese::DomainError("invalid integer token '" + tok + "'");
  return Int(tok);
}

// Comma-separated base-10 integers, optional leading '-', no whitespace.
std::vector<Int> parse_vector(const std::string& text) {
  std::vector<Int> out;
  size_t pos = 0;
  while (true) {
    const size_t comma = text.find(',', pos);
    const size_t len = (comma == std::string::npos) ? std::string::npos : comma - pos;
    out.push_back(parse_integer(text.substr(pos, len)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

std::string join_point(const std::vector<int>& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ':';
    os << p[i];
  }
  return os.str();
}

// ---- verify machinery ------------------------------------------------------

struct CheckEntry {
  std::string id;
  long long d = 0;
  long long r = 0;
  long long case_idx = -1;  // -1: the check has no per-case granularity
  bool pass = true;
  json witness;  // null unless failing
};

// Fixed test set for the oracle and main-theorem suites: every h with
// h_0 = 1, deg <= 2 and small coefficients, in a deterministic order.
const std::vector<std::vector<Int>>& suite_cases() {
  static const std::vector<std::vector<Int>> cases = [] {
    std::vector<std::vector<Int>> v;
    v.push_back({1});
    for (int c = 1; c <= 3; ++c) v.push_back({Int(1), Int(c)});
    for (int c = 0; c <= 3; ++c)
      for (int e = 1; e <= 3; ++e) v.push_back({Int(1), Int(c), Int(e)});
    return v;
  }();
  return cases;
}

using LemmaCheck = veronese::CheckReport (*)(long long, long long);

void run_lemma_suite(const std::string& id, LemmaCheck fn, long long rmax,
                     long long dmax, std::vector<CheckEntry>& out) {
  for (long long d = 1; d <= dmax; ++d)
    for (long long r = d; r <= rmax; ++r) {
      const veronese::CheckReport rep = fn(r, d);
      CheckEntry e;
      e.id = id;
      e.d = d;
      e.r = r;
      e.pass = rep.pass;
      if (!rep.pass)
        e.witness = json{{"violation", rep.violations.empty() ? std::string("unspecified")
                                                              : rep.violations.front()}};
      out.push_back(std::move(e));
    }
}

void run_oracle_suite(long long rmax, long long dmax, std::vector<CheckEntry>& out) {
  const auto& cases = suite_cases();
  for (long long d = 1; d <= dmax; ++d)
    for (long long r = d; r <= rmax; ++r)
      for (size_t c = 0; c < cases.size(); ++c) {
        const IntPolynomial h(cases[c]);
        const IntPolynomial lhs = veronese::trim(veronese::veronese_h(h, d, r));
        const IntPolynomial rhs =
            veronese::veronese_by_expansion(veronese::make_series(h, d), r).numerator;
        CheckEntry e;
        e.id = "oracle";
        e.d = d;
        e.r = r;
        e.case_idx = static_cast<long long>(c);
        e.pass = lhs == rhs;
        if (!e.pass)
          e.witness = json{{"h", join(cases[c])},
                           {"transform", join(lhs.coeffs())},
                           {"expansion", join(rhs.coeffs())}};
        out.push_back(std::move(e));
      }
}

void run_main_theorem_suite(long long rmax, long long dmax,
                            std::vector<CheckEntry>& out) {
  const auto& cases = suite_cases();
  for (long long d = 1; d <= dmax; ++d)
    for (long long r = d; r <= rmax; ++r)
      for (size_t c = 0; c < cases.size(); ++c) {
        const IntPolynomial h(cases[c]);
        if (r < h.degree()) continue;  // transform precondition r >= max(deg h, d)
        const std::vector<Int> g = veronese::veronese_g(h, d, r);
        CheckEntry e;
        e.id = "main-theorem";
        e.d = d;
        e.r = r;
        e.case_idx = static_cast<long long>(c);
        e.pass = veronese::is_f_vector(g);
        if (!e.pass) e.witness = json{{"h", join(cases[c])}, {"g", join(g)}};
        out.push_back(std::move(e));
      }
}

int run_verify(const std::string& suite, long long rmax, long long dmax) {
  std::vector<CheckEntry> checks;
  const bool all = suite == "all";
  if (all || suite == "symmetry")
    run_lemma_suite("symmetry", &veronese::check_symmetry, rmax, dmax, checks);
  if (all || suite == "recursion")
    run_lemma_suite("recursion", &veronese::check_recursion, rmax, dmax, checks);
  if (all || suite == "signs")
    run_lemma_suite("signs", &veronese::check_sign_pattern, rmax, dmax, checks);
  if (all || suite == "growth")
    run_lemma_suite("growth", &veronese::check_growth, rmax, dmax, checks);
  if (all || suite == "oracle") run_oracle_suite(rmax, dmax, checks);
  if (all || suite == "main-theorem") run_main_theorem_suite(rmax, dmax, checks);

  std::sort(checks.begin(), checks.end(), [](const CheckEntry& a, const CheckEntry& b) {
    return std::tie(a.id, a.d, a.r, a.case_idx) < std::tie(b.id, b.d, b.r, b.case_idx);
  });

  bool pass = true;
  json jchecks = json::array();
  for (const CheckEntry& e : checks) {
    pass = pass && e.pass;
    json params{{"d", e.d}, {"r", e.r}};
    if (e.case_idx >= 0) params["case"] = e.case_idx;
    json jc{{"id", e.id}, {"params", params}, {"pass", e.pass}};
    if (!e.witness.is_null()) jc["witness"] = e.witness;
    jchecks.push_back(std::move(jc));
  }
  json report{{"suite", suite},
              {"grid", json{{"rmax", rmax}, {"dmax", dmax}}},
              {"checks", jchecks},
              {"pass", pass}};
  std::cout << report.dump(2) << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Veronese transforms of rational series, bounded-composition "
               "matrices, and simplicial-complex constructions"};
  app.require_subcommand(1);
  // Long-form help only: the default -h short flag collides with --h below.
  app.set_help_flag("--help", "print help and exit");
  int exit_code = 0;

  // cmatrix
  auto* cmat = app.add_subcommand("cmatrix", "Print the (d+1) x r composition-count matrix");
  long long cmat_r = 0, cmat_d = 0;
  std::string cmat_format = "tsv";
  cmat->add_option("--r", cmat_r, "Veronese parameter r")->required();
  cmat->add_option("--d", cmat_d, "pole order d")->required();
  cmat->add_option("--format", cmat_format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  cmat->callback([&] {
    const veronese::CMatrix m = veronese::c_matrix(cmat_r, cmat_d);
    if (cmat_format == "tsv") {
      for (const auto& row : m.rows) {
        for (size_t j = 0; j < row.size(); ++j) {
          if (j) std::cout << '\t';
          std::cout << row[j];
        }
        std::cout << '\n';
      }
    } else {
      json rows = json::array();
      for (const auto& row : m.rows) {
        json jrow = json::array();
        for (const Int& x : row) jrow.push_back(x.str());
        rows.push_back(std::move(jrow));
      }
      json out{{"r", m.r}, {"d", m.d}, {"rows", rows}};
      std::cout << out.dump(2) << "\n";
    }
  });

  // count
  auto* count = app.add_subcommand("count", "Bounded-composition count C(r,d,i)");
  long long count_r = 0, count_d = 0, count_i = 0;
  count->add_option("--r", count_r, "entry bound")->required();
  count->add_option("--d", count_d, "tuple length")->required();
  count->add_option("--i", count_i, "entry sum")->required();
  count->callback(
      [&] { std::cout << veronese::c_count(count_r, count_d, count_i) << "\n"; });

  // transform
  auto* transform = app.add_subcommand("transform", "Veronese h-vector (or g-vector) transform");
  std::string transform_h;
  long long transform_d = 0, transform_r = 0;
  bool transform_g = false;
  transform->add_option("--h", transform_h, "h-vector, comma-separated")->required();
  transform->add_option("--d", transform_d, "pole order d")->required();
  transform->add_option("--r", transform_r, "Veronese parameter r")->required();
  transform->add_flag("--g", transform_g, "print the g-vector transform instead");
  transform->callback([&] {
    const IntPolynomial h(parse_vector(transform_h));
    const std::vector<Int> out = transform_g
                                     ? veronese::veronese_g(h, transform_d, transform_r)
                                     : veronese::veronese_h(h, transform_d, transform_r);
    std::cout << join(out) << "\n";
  });

  // expand
  auto* expand = app.add_subcommand("expand", "Series coefficients a_0..a_N of h(t)/(1-t)^d");
  std::string expand_h;
  long long expand_d = 0, expand_n = 0;
  expand->add_option("--h", expand_h, "numerator, comma-separated")->required();
  expand->add_option("--d", expand_d, "pole order d")->required();
  expand->add_option("-n,--n", expand_n, "last index N")->required();
  expand->callback([&] {
    const IntPolynomial h(parse_vector(expand_h));
    for (const Int& a : veronese::expand(veronese::make_series(h, expand_d), expand_n))
      std::cout << a << "\n";
  });

  // characteristic
  auto* chr = app.add_subcommand("characteristic", "Constant term of the polynomial part");
  std::string chr_h;
  long long chr_d = 0;
  chr->add_option("--h", chr_h, "numerator, comma-separated")->required();
  chr->add_option("--d", chr_d, "pole order d")->required();
  chr->callback([&] {
    const IntPolynomial h(parse_vector(chr_h));
    std::cout << veronese::characteristic(veronese::make_series(h, chr_d)) << "\n";
  });

  // sturm
  auto* sturm = app.add_subcommand("sturm", "Real-rootedness via Sturm chains");
  std::string sturm_poly;
  sturm->add_option("--poly", sturm_poly, "coefficients c_0,c_1,...")->required();
  sturm->callback([&] {
    const bool rooted = veronese::is_real_rooted(IntPolynomial(parse_vector(sturm_poly)));
    std::cout << "real-rooted: " << (rooted ? "true" : "false") << "\n";
    if (!rooted) exit_code = 1;
  });

  // kk
  auto* kk = app.add_subcommand("kk", "Kruskal-Katona f-vector test");
  std::string kk_vector;
  kk->add_option("--vector", kk_vector, "candidate f-vector")->required();
  kk->callback([&] {
    const bool ok = veronese::is_f_vector(parse_vector(kk_vector));
    std::cout << (ok ? "true" : "false") << "\n";
    if (!ok) exit_code = 1;
  });

  // msequence
  auto* mseq = app.add_subcommand("msequence", "Macaulay M-sequence test");
  std::string mseq_vector;
  mseq->add_option("--vector", mseq_vector, "candidate sequence")->required();
  mseq->callback([&] {
    const bool ok = veronese::is_m_sequence(parse_vector(mseq_vector));
    std::cout << (ok ? "true" : "false") << "\n";
    if (!ok) exit_code = 1;
  });

  // realize
  auto* realize = app.add_subcommand("realize", "Compressed complex realizing an f-vector");
  std::string realize_vector;
  realize->add_option("--vector", realize_vector, "f-vector")->required();
  realize->callback([&] {
    veronese::write_facets(std::cout,
                           veronese::revlex_realize(parse_vector(realize_vector)));
  });

  // edgewise
  auto* edge = app.add_subcommand("edgewise", "r-fold edgewise subdivision");
  std::string edge_file;
  long long edge_r = 0;
  bool edge_check = false;
  edge->add_option("--facets", edge_file, "facet file")->required();
  edge->add_option("--r", edge_r, "subdivision parameter")->required();
  edge->add_flag("--check-hilbert", edge_check,
                 "compare the subdivision h-vector with the Veronese transform");
  edge->callback([&] {
    std::ifstream in(edge_file);
    if (!in) throw veronese::DomainError("cannot open facet file '" + edge_file + "'");
    const veronese::SimplicialComplex base = veronese::read_facets(in);
    if (edge_check) {
      const veronese::HilbertCheck rep = veronese::check_edgewise_hilbert(base, edge_r);
      std::cout << "h(subdivision): " << join(rep.h_subdivision) << "\n";
      std::cout << "h(veronese): " << join(rep.h_veronese) << "\n";
      if (!rep.pass) exit_code = 1;
    } else {
      const veronese::EdgewiseResult res = veronese::edgewise(base, edge_r);
      for (size_t i = 0; i < res.complex.facet_count(); ++i) {
        const auto f = res.complex.facet(i);
        for (size_t j = 0; j < f.size(); ++j) {
          if (j) std::cout << ' ';
          std::cout << join_point(res.points[static_cast<size_t>(f[j]) - 1]);
        }
        std::cout << '\n';
      }
    }
  });

  // threshold
  auto* threshold = app.add_subcommand("threshold", "Smallest R with positive transforms up to max-r");
  std::string threshold_h;
  long long threshold_d = 0, threshold_max = 0;
  threshold->add_option("--h", threshold_h, "h-vector, comma-separated")->required();
  threshold->add_option("--d", threshold_d, "pole order d")->required();
  threshold->add_option("--max-r", threshold_max, "search bound")->required();
  threshold->callback([&] {
    const IntPolynomial h(parse_vector(threshold_h));
    const std::optional<long long> R =
        veronese::find_positivity_threshold(h, threshold_d, threshold_max);
    if (R) {
      std::cout << *R << "\n";
    } else {
      std::cout << "not-found\n";
      exit_code = 1;
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run property suites over a (d, r) grid");
  long long verify_rmax = 0, verify_dmax = 0;
  std::string verify_suite = "all";
  verify->add_option("--rmax", verify_rmax, "largest r")->required();
  verify->add_option("--dmax", verify_dmax, "largest d")->required();
  verify->add_option("--suite", verify_suite, "suite to run")
      ->check(CLI::IsMember(
          {"symmetry", "recursion", "signs", "growth", "oracle", "main-theorem", "all"}));
  verify->callback([&] {
    if (verify_rmax < 1 || verify_dmax < 1)
      throw veronese::DomainError("--rmax and --dmax must be >= 1");
    exit_code = run_verify(verify_suite, verify_rmax, verify_dmax);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
      return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const veronese::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const veronese::ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const veronese::NotAnFVector& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const veronese::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
