// Command-line front end: expression evaluation, Gram families, the
// identity-check suite, Fubini tables and the norm-conjecture search.
// Exit codes: 0 success / all pass, 1 failed check or counterexample found,
// 2 usage or parse error.

#include "weyl/combinatorics.hpp"
#include "weyl/expr.hpp"
#include "weyl/forms.hpp"
#include "weyl/identities.hpp"
#include "weyl/json_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

using nlohmann::json;
using namespace weyl;

namespace {

int resolve_arity_for(const std::vector<std::string>& exprs, std::optional<int> declared) {
  if (declared) return *declared;
  int n = 1;
  for (const auto& e : exprs) n = std::max(n, infer_arity(e));
  return n;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_qsqrt2(const QSqrt2& v, bool as_json, bool with_approx) {
  if (as_json) {
    json j = qsqrt2_to_json(v);
    if (with_approx) j["approx"] = approx(v);
    emit(j);
    return;
  }
  std::cout << to_string(v) << "\n";
  if (with_approx) std::cout << "approx " << approx(v) << " (display only)\n";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// gram output

template <typename Ring, typename Renderer>
void print_gram_text(const Matrix<Ring>& m, Renderer render, const std::string& pd_verdict) {
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(render(m.at(i, j)));
    std::cout << "[" << join(row, ", ") << "]\n";
  }
  std::cout << "det: " << render(det(m)) << "\n";
  std::vector<std::string> minors;
  for (const Ring& v : leading_minors(m)) minors.push_back(render(v));
  std::cout << "leading minors: " << join(minors, ", ") << "\n";
  std::cout << "positive definite: " << pd_verdict << "\n";
}

template <typename Ring, typename EntryJson>
json gram_json(json header, const Matrix<Ring>& m, EntryJson entry_json,
               const json& positive_definite) {
  header["matrix"] = matrix_to_json(m);
  header["det"] = entry_json(det(m));
  json minors = json::array();
  for (const Ring& v : leading_minors(m)) minors.push_back(entry_json(v));
  header["leading_minors"] = minors;
  header["positive_definite"] = positive_definite;
  return header;
}

// ---------------------------------------------------------------------------
// check suite

struct CheckOutcome {
  CheckOutcome(std::string check_id, std::string check_range)
      : id(std::move(check_id)), range(std::move(check_range)) {}

  std::string id;
  std::string range;
  bool pass = true;
  std::string counterexample;  // first failing tuple, empty when pass

  void fail(const std::string& where) {
    if (pass) {
      pass = false;
      counterexample = where;
    }
  }
};

struct CheckRanges {
  std::optional<int> max_n, max_entry, max_exp, max_abc, max_a, max_k;
};

CheckOutcome run_check_1(const CheckRanges& r) {
  const int max_n = r.max_n.value_or(6);
  CheckOutcome out{"1", "n <= " + std::to_string(max_n)};
  for (int n = 0; n <= max_n; ++n)
    if (!lemma1_check(n)) out.fail("n=" + std::to_string(n));
  return out;
}

CheckOutcome run_check_2(const CheckRanges& r) {
  const int max_n = r.max_n.value_or(8);
  CheckOutcome out{"2", "n <= " + std::to_string(max_n) + ", a,b <= n"};
  for (int n = 0; n <= max_n; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        if (!corollary2_check(n, a, b))
          out.fail("n=" + std::to_string(n) + ", a=" + std::to_string(a) +
                   ", b=" + std::to_string(b));
  return out;
}

std::string index_str(const MultiIndex& m) {
  std::vector<std::string> parts;
  for (int i = 0; i < m.arity(); ++i) parts.push_back(std::to_string(m[i]));
  return "(" + join(parts, ",") + ")";
}

CheckOutcome run_check_3(const CheckRanges& r) {
  const int max_entry = r.max_entry.value_or(3);
  CheckOutcome out{"3", "n in {1,2}, entries <= " + std::to_string(max_entry)};
  for (int arity = 1; arity <= 2; ++arity) {
    MultiIndex bound(arity);
    for (int i = 0; i < arity; ++i) bound.set(i, max_entry);
    const auto values = all_upto(bound);
    for (const auto& alpha : values)
      for (const auto& beta : values)
        for (const auto& theta : values)
          if (!lemma3_check(alpha, beta, theta))
            out.fail("alpha=" + index_str(alpha) + ", beta=" + index_str(beta) +
                     ", theta=" + index_str(theta));
  }
  return out;
}

CheckOutcome run_check_4(const CheckRanges& r) {
  const int max_exp = r.max_exp.value_or(4);
  CheckOutcome out{"4", "n in {1,2}, exponents <= " + std::to_string(max_exp)};
  for (int arity = 1; arity <= 2; ++arity) {
    MultiIndex bound(arity);
    for (int i = 0; i < arity; ++i) bound.set(i, max_exp);
    const auto values = all_upto(bound);
    for (const auto& a : values)
      for (const auto& b : values)
        for (const auto& a2 : values)
          for (const auto& b2 : values)
            if (frob_pair_closed(a, b, a2, b2) !=
                frob(WeylElement::monomial({a, b}), WeylElement::monomial({a2, b2})))
              out.fail("alpha=" + index_str(a) + ", beta=" + index_str(b) +
                       ", alpha'=" + index_str(a2) + ", beta'=" + index_str(b2));
  }
  return out;
}

CheckOutcome run_check_98(const CheckRanges& r) {
  const int max_a = r.max_a.value_or(3);
  const int max_k = r.max_k.value_or(5);
  CheckOutcome out{"98",
                   "a <= " + std::to_string(max_a) + ", k <= " + std::to_string(max_k)};
  for (int a = 0; a <= max_a; ++a) {
    for (int k = 0; k <= max_k; ++k) {
      const MultiPoly expected =
          MultiPoly::monomial(MultiIndex{k * (k + 1) / 2}, BigRat(1));
      if (!(poly_det(build_M(a, k)) == expected))
        out.fail("a=" + std::to_string(a) + ", k=" + std::to_string(k));
    }
  }
  return out;
}

CheckOutcome run_check_100(const CheckRanges& r) {
  const int max_abc = r.max_abc.value_or(6);
  CheckOutcome out{"100", "a,b,c <= " + std::to_string(max_abc)};
  for (int a = 0; a <= max_abc; ++a)
    for (int b = 0; b <= max_abc; ++b)
      for (int c = 0; c <= max_abc; ++c)
        if (!lemma100_check(a, b, c))
          out.fail("a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                   ", c=" + std::to_string(c));
  return out;
}

CheckOutcome run_check_101(const CheckRanges& r) {
  const int max_abc = r.max_abc.value_or(5);
  CheckOutcome out{"101", "a,b,c <= " + std::to_string(max_abc)};
  for (int a = 0; a <= max_abc; ++a)
    for (int b = 0; b <= max_abc; ++b)
      for (int c = 0; c <= max_abc; ++c)
        if (!lemma101_check(a, b, c))
          out.fail("a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                   ", c=" + std::to_string(c));
  return out;
}

CheckOutcome run_check_102(const CheckRanges& r) {
  const int max_a = r.max_a.value_or(3);
  const int max_k = r.max_k.value_or(4);
  CheckOutcome out{"102",
                   "a <= " + std::to_string(max_a) + ", k <= " + std::to_string(max_k)};
  const MultiPoly x = MultiPoly::variable(3, 0);
  const MultiPoly y = MultiPoly::variable(3, 1);
  const MultiPoly z = MultiPoly::variable(3, 2);
  for (int a = 0; a <= max_a; ++a) {
    for (int k = 0; k <= max_k; ++k) {
      const MultiPoly expected = pow(x, a * (k + 1)) * pow(x * y + z, k * (k + 1) / 2);
      if (!(poly_det(build_Mtilde(a, k)) == expected))
        out.fail("a=" + std::to_string(a) + ", k=" + std::to_string(k));
    }
  }
  return out;
}

CheckOutcome run_check_103(const CheckRanges& r) {
  const int max_a = r.max_a.value_or(4);
  const int max_k = r.max_k.value_or(5);
  CheckOutcome out{"103",
                   "a <= " + std::to_string(max_a) + ", k <= " + std::to_string(max_k)};
  for (int a = 0; a <= max_a; ++a) {
    for (int k = 0; k <= max_k; ++k) {
      const BigInt d = det(build_N(a, k));
      BigInt closed = BigInt(1) << (k * (k + 1) / 2);
      for (int i = 0; i <= k; ++i) closed *= factorial(i) * factorial(a + i);
      if (d <= 0 || d != closed)
        out.fail("a=" + std::to_string(a) + ", k=" + std::to_string(k));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// conjecture-search sampling; self-contained so runs are seed-stable

struct SearchRng {
  explicit SearchRng(uint64_t seed) : eng(seed) {}
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(eng() % static_cast<uint64_t>(hi - lo + 1));
  }
  int nonzero(int bound) {
    const int v = uniform(1, bound);
    return uniform(0, 1) ? v : -v;
  }
  std::mt19937_64 eng;
};

WeylElement sample_element(SearchRng& rng, int n, int max_terms, int max_exp,
                           int coeff_bound) {
  for (;;) {
    WeylElement x(n);
    const int terms = rng.uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      MultiIndex alpha(n), beta(n);
      for (int i = 0; i < n; ++i) {
        alpha.set(i, rng.uniform(0, max_exp));
        beta.set(i, rng.uniform(0, max_exp));
      }
      x.add_term({alpha, beta}, BigRat(rng.nonzero(coeff_bound)));
    }
    if (!x.is_zero()) return x;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in the Weyl algebra: composition, gradings,"
               " trace and bilinear forms, Gram families, identity checks."};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- expression commands --------------------------------------------------
  struct ExprCmd {
    std::vector<std::string> exprs;
    std::optional<int> n;
    bool as_json = false;
    bool with_approx = false;
    int weight_arg = 0;
    std::string multiweight_arg;
  };

  auto add_expr_cmd = [&](const std::string& name, const std::string& desc, int expr_count) {
    auto state = std::make_shared<ExprCmd>();
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("expr", state->exprs, "expression(s)")->required()->expected(expr_count);
    cmd->add_option("--n", state->n, "number of variables (inferred when omitted)");
    cmd->add_flag("--json", state->as_json, "emit JSON");
    return std::pair<CLI::App*, std::shared_ptr<ExprCmd>>(cmd, state);
  };

  auto [compose_cmd, compose_state] =
      add_expr_cmd("compose", "compose two elements (X o Y)", 2);
  compose_cmd->callback([state = compose_state]() {
    const int n = resolve_arity_for(state->exprs, state->n);
    const WeylElement r =
        compose(parse_element(state->exprs[0], n), parse_element(state->exprs[1], n));
    if (state->as_json)
      emit(element_to_json(r));
    else
      std::cout << format_element(r) << "\n";
  });

  auto [trace_cmd, trace_state] = add_expr_cmd("trace", "trace of an element", 1);
  trace_cmd->callback([state = trace_state]() {
    const int n = resolve_arity_for(state->exprs, state->n);
    const BigRat r = trace(parse_element(state->exprs[0], n));
    if (state->as_json)
      emit(rat_to_json(r));
    else
      std::cout << to_string(r) << "\n";
  });

  auto [frob_cmd, frob_state] = add_expr_cmd("frob", "Frobenius pairing (X, Y)", 2);
  frob_cmd->callback([state = frob_state]() {
    const int n = resolve_arity_for(state->exprs, state->n);
    const BigRat r =
        frob(parse_element(state->exprs[0], n), parse_element(state->exprs[1], n));
    if (state->as_json)
      emit(rat_to_json(r));
    else
      std::cout << to_string(r) << "\n";
  });

  auto [euclid_cmd, euclid_state] = add_expr_cmd("euclid", "Euclid scalar product <X, Y>", 2);
  euclid_cmd->add_flag("--approx", euclid_state->with_approx,
                       "also print a decimal rendering (display only)");
  euclid_cmd->callback([state = euclid_state]() {
    const int n = resolve_arity_for(state->exprs, state->n);
    const QSqrt2 r =
        euclid(parse_element(state->exprs[0], n), parse_element(state->exprs[1], n));
    print_qsqrt2(r, state->as_json, state->with_approx);
  });

  auto [norm2_cmd, norm2_state] = add_expr_cmd("norm2", "squared length <X, X>", 1);
  norm2_cmd->add_flag("--approx", norm2_state->with_approx,
                      "also print a decimal rendering (display only)");
  norm2_cmd->callback([state = norm2_state]() {
    const int n = resolve_arity_for(state->exprs, state->n);
    const QSqrt2 r = norm2(parse_element(state->exprs[0], n));
    print_qsqrt2(r, state->as_json, state->with_approx);
  });

  auto [bar_cmd, bar_state] = add_expr_cmd("bar", "adjoint involution", 1);
  bar_cmd->callback([state = bar_state]() {
    const int n = resolve_arity_for(state->exprs, state->n);
    const WeylElement r = bar(parse_element(state->exprs[0], n));
    if (state->as_json)
      emit(element_to_json(r));
    else
      std::cout << format_element(r) << "\n";
  });

  auto [weight_cmd, weight_state] =
      add_expr_cmd("weight", "weight/multi-weight of a homogeneous element", 1);
  weight_cmd->callback([state = weight_state]() {
    const int n = resolve_arity_for(state->exprs, state->n);
    const WeylElement x = parse_element(state->exprs[0], n);
    const auto l = homogeneous_weight(x);
    const auto w = homogeneous_multiweight(x);
    if (state->as_json) {
      json j;
      j["weight"] = l ? json(*l) : json(nullptr);
      j["multiweight"] = w ? json(*w) : json(nullptr);
      emit(j);
    } else {
      if (l)
        std::cout << "weight: " << *l << "\n";
      else
        std::cout << "weight: not homogeneous\n";
      if (w) {
        std::vector<std::string> parts;
        for (int v : *w) parts.push_back(std::to_string(v));
        std::cout << "multiweight: (" << join(parts, ",") << ")\n";
      } else {
        std::cout << "multiweight: not homogeneous\n";
      }
    }
  });

  auto [project_cmd, project_state] =
      add_expr_cmd("project", "projection onto a weight or multi-weight component", 1);
  CLI::Option* wopt = project_cmd->add_option("--weight", project_state->weight_arg,
                                              "weight of the component to keep");
  CLI::Option* mwopt =
      project_cmd->add_option("--multiweight", project_state->multiweight_arg,
                              "comma-separated multi-weight, e.g. \"1,-1\"");
  wopt->excludes(mwopt);
  project_cmd->callback([state = project_state, wopt]() {
    const int n = resolve_arity_for(state->exprs, state->n);
    const WeylElement x = parse_element(state->exprs[0], n);
    WeylElement r(n);
    if (wopt->count() > 0) {
      r = project_weight(x, state->weight_arg);
    } else if (!state->multiweight_arg.empty()) {
      std::vector<int> w;
      std::stringstream ss(state->multiweight_arg);
      std::string part;
      while (std::getline(ss, part, ',')) w.push_back(std::stoi(part));
      if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("--multiweight length must equal the arity");
      r = project_multiweight(x, w);
    } else {
      throw std::invalid_argument("project needs --weight or --multiweight");
    }
    if (state->as_json)
      emit(element_to_json(r));
    else
      std::cout << format_element(r) << "\n";
  });

  // ---- gram -------------------------------------------------------------------
  struct GramCmd {
    std::string family;
    int a = 0;
    int k = 0;
    std::string basis;
    std::optional<int> n;
    bool as_json = false;
  };
  auto gram_state = std::make_shared<GramCmd>();
  CLI::App* gram_cmd = app.add_subcommand(
      "gram", "Gram matrix of a family (N, M, Mtilde) or a monomial basis");
  gram_cmd->add_option("--family", gram_state->family, "family name")
      ->check(CLI::IsMember({"N", "M", "Mtilde"}));
  gram_cmd->add_option("--a", gram_state->a, "family parameter a (>= 0)");
  gram_cmd->add_option("--k", gram_state->k, "family parameter k (>= 0)");
  gram_cmd->add_option("--basis", gram_state->basis,
                       "semicolon-separated monomials, e.g. \"1; x*d; x^2*d^2\"");
  gram_cmd->add_option("--n", gram_state->n, "number of variables for --basis");
  gram_cmd->add_flag("--json", gram_state->as_json, "emit JSON");
  gram_cmd->callback([state = gram_state]() {
    if (!state->family.empty() && !state->basis.empty())
      throw std::invalid_argument("--family and --basis are mutually exclusive");
    if (state->family.empty() && state->basis.empty())
      throw std::invalid_argument("gram needs --family or --basis");
    if (state->a < 0 || state->k < 0)
      throw std::invalid_argument("--a and --k must be non-negative");

    if (state->family == "N") {
      const auto m = build_N(state->a, state->k);
      const bool pd = is_positive_definite(m);
      if (state->as_json) {
        emit(gram_json(json{{"family", "N"}, {"a", state->a}, {"k", state->k}}, m,
                       [](const BigInt& v) { return json(v.str()); }, json(pd)));
      } else {
        print_gram_text(m, [](const BigInt& v) { return v.str(); }, pd ? "yes" : "no");
      }
      return;
    }
    if (!state->family.empty()) {
      const auto m = state->family == "M" ? build_M(state->a, state->k)
                                          : build_Mtilde(state->a, state->k);
      const auto names = default_poly_names(m.at(0, 0).arity());
      json header{{"family", state->family},
                  {"a", state->a},
                  {"k", state->k},
                  {"variables", names}};
      if (state->as_json) {
        emit(gram_json(std::move(header), m,
                       [](const MultiPoly& v) { return poly_to_json(v); }, json(nullptr)));
      } else {
        print_gram_text(m, [&](const MultiPoly& v) { return to_string(v, names); }, "n/a");
      }
      return;
    }

    std::vector<std::string> parts;
    std::stringstream ss(state->basis);
    std::string part;
    while (std::getline(ss, part, ';')) {
      const auto lo = part.find_first_not_of(" \t");
      const auto hi = part.find_last_not_of(" \t");
      if (lo == std::string::npos) throw std::invalid_argument("--basis has an empty entry");
      parts.push_back(part.substr(lo, hi - lo + 1));
    }
    if (parts.empty()) throw std::invalid_argument("--basis is empty");
    const int n = resolve_arity_for(parts, state->n);
    std::vector<WeylMonomial> basis;
    for (const auto& text : parts) {
      const WeylElement e = parse_element(text, n);
      if (e.term_count() != 1 || e.terms().begin()->second != 1)
        throw std::invalid_argument("--basis entries must be plain monomials: '" + text + "'");
      basis.push_back(e.terms().begin()->first);
    }
    const auto m = gram_euclid(basis);
    const bool pd = is_positive_definite(m);
    if (state->as_json) {
      emit(gram_json(json{{"basis", parts}, {"n", n}}, m,
                     [](const QSqrt2& v) { return qsqrt2_to_json(v); }, json(pd)));
    } else {
      print_gram_text(m, [](const QSqrt2& v) { return to_string(v); }, pd ? "yes" : "no");
    }
  });

  // ---- matrix (consumes the documented matrix JSON) -----------------------------
  struct MatrixCmd {
    std::string file;
    bool as_json = false;
  };
  auto matrix_state = std::make_shared<MatrixCmd>();
  CLI::App* matrix_cmd = app.add_subcommand(
      "matrix", "determinant, leading minors and definiteness of a matrix JSON file");
  matrix_cmd->add_option("--file", matrix_state->file, "path to a matrix JSON document")
      ->required();
  matrix_cmd->add_flag("--json", matrix_state->as_json, "emit JSON");
  matrix_cmd->callback([state = matrix_state]() {
    std::ifstream in(state->file);
    if (!in) throw std::invalid_argument("cannot open '" + state->file + "'");
    json doc;
    in >> doc;
    const AnyMatrix any = matrix_from_json(doc);
    const bool as_json = state->as_json;

    auto report = [&](const auto& m, auto render, auto entry_json, const json& pd,
                      const std::string& pd_text) {
      if (as_json) {
        using Ring = std::decay_t<decltype(m.at(0, 0))>;
        json out{{"ring", doc.at("ring")}};
        out["det"] = entry_json(det(m));
        json minors = json::array();
        for (const Ring& v : leading_minors(m)) minors.push_back(entry_json(v));
        out["leading_minors"] = minors;
        out["positive_definite"] = pd;
        emit(out);
      } else {
        print_gram_text(m, render, pd_text);
      }
    };

    auto pd_of = [](const auto& m) -> std::optional<bool> {
      if (!m.is_square()) return std::nullopt;
      for (int i = 0; i < m.rows(); ++i)
        for (int c = i + 1; c < m.cols(); ++c)
          if (!(m.at(i, c) == m.at(c, i))) return std::nullopt;
      return is_positive_definite(m);
    };
    auto pd_json = [](std::optional<bool> pd) { return pd ? json(*pd) : json(nullptr); };
    auto pd_text = [](std::optional<bool> pd) {
      return pd ? (*pd ? std::string("yes") : std::string("no")) : std::string("n/a");
    };

    if (const auto* mi = std::get_if<Matrix<BigInt>>(&any)) {
      const auto pd = pd_of(*mi);
      report(*mi, [](const BigInt& v) { return v.str(); },
             [](const BigInt& v) { return json(v.str()); }, pd_json(pd), pd_text(pd));
    } else if (const auto* mr = std::get_if<Matrix<BigRat>>(&any)) {
      const auto pd = pd_of(*mr);
      report(*mr, [](const BigRat& v) { return to_string(v); },
             [](const BigRat& v) { return rat_to_json(v); }, pd_json(pd), pd_text(pd));
    } else if (const auto* mq = std::get_if<Matrix<QSqrt2>>(&any)) {
      const auto pd = pd_of(*mq);
      report(*mq, [](const QSqrt2& v) { return to_string(v); },
             [](const QSqrt2& v) { return qsqrt2_to_json(v); }, pd_json(pd), pd_text(pd));
    } else {
      const auto& mp = std::get<Matrix<MultiPoly>>(any);
      const auto names = default_poly_names(mp.at(0, 0).arity());
      report(mp, [&](const MultiPoly& v) { return to_string(v, names); },
             [](const MultiPoly& v) { return poly_to_json(v); }, json(nullptr), "n/a");
    }
  });

  // ---- check --------------------------------------------------------------------
  struct CheckCmd {
    std::string lemma = "all";
    CheckRanges ranges;
    bool as_json = false;
  };
  auto check_state = std::make_shared<CheckCmd>();
  CLI::App* check_cmd = app.add_subcommand("check", "run the identity suite");
  check_cmd->add_option("--lemma", check_state->lemma, "all|1|2|3|4|98|100|101|102|103")
      ->check(CLI::IsMember({"all", "1", "2", "3", "4", "98", "100", "101", "102", "103"}));
  check_cmd->add_option("--max-n", check_state->ranges.max_n, "range for checks 1 and 2")
      ->check(CLI::NonNegativeNumber);
  check_cmd
      ->add_option("--max-entry", check_state->ranges.max_entry, "entry bound for check 3")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--max-exp", check_state->ranges.max_exp, "exponent bound for check 4")
      ->check(CLI::NonNegativeNumber);
  check_cmd
      ->add_option("--max-abc", check_state->ranges.max_abc, "bound for checks 100 and 101")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--max-a", check_state->ranges.max_a, "a bound for 98/102/103")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--max-k", check_state->ranges.max_k, "k bound for 98/102/103")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_flag("--json", check_state->as_json, "emit JSON");
  check_cmd->callback([state = check_state, &exit_code]() {
    std::vector<CheckOutcome> outcomes;
    const std::string& which = state->lemma;
    const CheckRanges& r = state->ranges;
    if (which == "all" || which == "1") outcomes.push_back(run_check_1(r));
    if (which == "all" || which == "2") outcomes.push_back(run_check_2(r));
    if (which == "all" || which == "3") outcomes.push_back(run_check_3(r));
    if (which == "all" || which == "4") outcomes.push_back(run_check_4(r));
    if (which == "all" || which == "98") outcomes.push_back(run_check_98(r));
    if (which == "all" || which == "100") outcomes.push_back(run_check_100(r));
    if (which == "all" || which == "101") outcomes.push_back(run_check_101(r));
    if (which == "all" || which == "102") outcomes.push_back(run_check_102(r));
    if (which == "all" || which == "103") outcomes.push_back(run_check_103(r));
    bool all_pass = true;
    for (const auto& o : outcomes) all_pass = all_pass && o.pass;
    if (state->as_json) {
      json results = json::array();
      for (const auto& o : outcomes)
        results.push_back(
            json{{"check", o.id},
                 {"range", o.range},
                 {"pass", o.pass},
                 {"counterexample", o.pass ? json(nullptr) : json(o.counterexample)}});
      emit(json{{"results", results}, {"all_pass", all_pass}});
    } else {
      for (const auto& o : outcomes) {
        if (o.pass)
          std::cout << "check " << o.id << ": PASS (" << o.range << ")\n";
        else
          std::cout << "check " << o.id << ": FAIL at " << o.counterexample << "\n";
      }
    }
    if (!all_pass) exit_code = 1;
  });

  // ---- fubini-table ---------------------------------------------------------------
  struct FubiniCmd {
    int k = 6;
    bool as_json = false;
  };
  auto fub_state = std::make_shared<FubiniCmd>();
  CLI::App* fub_cmd = app.add_subcommand(
      "fubini-table", "ordered-partition counts vs <(xd)^i, (xd)^(k-i)> for all i");
  fub_cmd->add_option("--k", fub_state->k, "largest k")->check(CLI::NonNegativeNumber);
  fub_cmd->add_flag("--json", fub_state->as_json, "emit JSON");
  fub_cmd->callback([state = fub_state, &exit_code]() {
    const WeylElement xd = WeylElement::monomial({MultiIndex{1}, MultiIndex{1}});
    std::vector<WeylElement> powers{WeylElement::one(1)};
    for (int i = 1; i <= state->k; ++i) powers.push_back(compose(powers.back(), xd));
    bool all_consistent = true;
    json rows = json::array();
    for (int k = 0; k <= state->k; ++k) {
      const QSqrt2 expected{BigRat(fubini(k)), BigRat(0)};
      std::vector<QSqrt2> values;
      bool consistent = true;
      for (int i = 0; i <= k; ++i) {
        values.push_back(
            euclid(powers[static_cast<size_t>(i)], powers[static_cast<size_t>(k - i)]));
        consistent = consistent && values.back() == expected;
      }
      all_consistent = all_consistent && consistent;
      if (state->as_json) {
        json vals = json::array();
        for (const auto& v : values) vals.push_back(qsqrt2_to_json(v));
        rows.push_back(json{{"k", k},
                            {"fubini", fubini(k).str()},
                            {"euclid", vals},
                            {"independent_of_i", consistent}});
      } else {
        std::vector<std::string> vals;
        for (const auto& v : values) vals.push_back(to_string(v));
        std::cout << "k=" << k << " fubini=" << fubini(k).str() << " values=["
                  << join(vals, ", ") << "] independent_of_i=" << (consistent ? "yes" : "NO")
                  << "\n";
      }
    }
    if (state->as_json) emit(json{{"rows", rows}, {"all_consistent", all_consistent}});
    if (!all_consistent) exit_code = 1;
  });

  // ---- conjecture-search -------------------------------------------------------------
  struct SearchCmd {
    int trials = 1000;
    uint64_t seed = 1;
    int max_exp = 3;
    int max_terms = 3;
    int n = 1;
    int coeff_bound = 3;
    bool as_json = false;
  };
  auto search_state = std::make_shared<SearchCmd>();
  CLI::App* search_cmd = app.add_subcommand(
      "conjecture-search", "random search for counterexamples to |X o Y|^2 >= |X|^2 * |Y|^2");
  search_cmd->add_option("--trials", search_state->trials, "number of random pairs")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", search_state->seed, "RNG seed");
  search_cmd->add_option("--max-exp", search_state->max_exp, "largest exponent")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--max-terms", search_state->max_terms, "largest term count")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--n", search_state->n, "number of variables")
      ->check(CLI::PositiveNumber);
  search_cmd
      ->add_option("--coeff-bound", search_state->coeff_bound,
                   "coefficients drawn from [-bound, bound] minus zero")
      ->check(CLI::PositiveNumber);
  search_cmd->add_flag("--json", search_state->as_json, "emit JSON");
  search_cmd->callback([state = search_state, &exit_code]() {
    SearchRng rng(state->seed);
    json params{{"trials", state->trials},       {"seed", state->seed},
                {"n", state->n},                 {"max_exp", state->max_exp},
                {"max_terms", state->max_terms}, {"coeff_bound", state->coeff_bound}};
    std::optional<QSqrt2> min_gap;
    std::string min_x, min_y;
    int min_trial = 0;
    for (int trial = 1; trial <= state->trials; ++trial) {
      const WeylElement x =
          sample_element(rng, state->n, state->max_terms, state->max_exp, state->coeff_bound);
      const WeylElement y =
          sample_element(rng, state->n, state->max_terms, state->max_exp, state->coeff_bound);
      const QSqrt2 lhs = norm2(compose(x, y));
      const QSqrt2 rhs = norm2(x) * norm2(y);
      const QSqrt2 gap = lhs - rhs;
      if (!min_gap || compare(gap, *min_gap) < 0) {
        min_gap = gap;
        min_x = format_element(x);
        min_y = format_element(y);
        min_trial = trial;
      }
      if (ring_sign(gap) < 0) {
        if (state->as_json) {
          json j = params;
          j["counterexample"] = json{{"trial", trial},
                                     {"n", state->n},
                                     {"x", format_element(x)},
                                     {"y", format_element(y)},
                                     {"norm2_x", qsqrt2_to_json(norm2(x))},
                                     {"norm2_y", qsqrt2_to_json(norm2(y))},
                                     {"norm2_xy", qsqrt2_to_json(lhs)},
                                     {"gap", qsqrt2_to_json(gap)}};
          emit(j);
        } else {
          std::cout << "COUNTEREXAMPLE at trial " << trial << " (n=" << state->n << ")\n"
                    << "  X = " << format_element(x) << "\n"
                    << "  Y = " << format_element(y) << "\n"
                    << "  |X|^2 = " << to_string(norm2(x)) << "\n"
                    << "  |Y|^2 = " << to_string(norm2(y)) << "\n"
                    << "  |X o Y|^2 = " << to_string(lhs) << "\n"
                    << "  gap = " << to_string(gap) << "\n";
        }
        exit_code = 1;
        return;
      }
    }
    if (state->as_json) {
      json j = params;
      j["counterexample"] = nullptr;
      j["min_gap"] = qsqrt2_to_json(*min_gap);
      j["min_gap_trial"] = min_trial;
      j["min_gap_x"] = min_x;
      j["min_gap_y"] = min_y;
      emit(j);
    } else {
      std::cout << "no counterexample in " << state->trials << " trials (seed " << state->seed
                << ", n=" << state->n << ")\n"
                << "smallest gap " << to_string(*min_gap) << " at trial " << min_trial
                << ": X = " << min_x << ", Y = " << min_y << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
