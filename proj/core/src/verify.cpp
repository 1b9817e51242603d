#include "qtsym/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "qtsym/creationops.hpp"
#include "qtsym/dyck.hpp"
#include "qtsym/macdonald.hpp"

namespace qtsym {

const char* status_name(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::pass: return "pass";
    case CheckReport::Status::fail: return "fail";
    case CheckReport::Status::skipped: return "skipped";
  }
  return "?";
}

std::optional<std::string> diff_witness(const SymFunc& lhs, const SymFunc& rhs) {
  if (lhs == rhs) return std::nullopt;
  return "lhs = " + convert(lhs, Basis::s).to_string() +
         " ; rhs = " + convert(rhs, Basis::s).to_string();
}

std::optional<std::string> diff_witness(const Scalar& lhs, const Scalar& rhs) {
  if (lhs == rhs) return std::nullopt;
  return "lhs = " + lhs.to_string() + " ; rhs = " + rhs.to_string();
}

namespace {

struct CheckContext {
  int n_max;
  CheckReport& report;

  void instance(const std::string& label, const SymFunc& lhs, const SymFunc& rhs) {
    ++report.instances;
    if (auto w = diff_witness(lhs, rhs)) report.witnesses.push_back(label + ": " + *w);
  }
  void instance(const std::string& label, const Scalar& lhs, const Scalar& rhs) {
    ++report.instances;
    if (auto w = diff_witness(lhs, rhs)) report.witnesses.push_back(label + ": " + *w);
  }
  void expect(const std::string& label, bool ok, const std::string& detail) {
    ++report.instances;
    if (!ok) report.witnesses.push_back(label + ": " + detail);
  }
};

// --- catalog entries --------------------------------------------------------

void check_en_sum_C(CheckContext& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    SymFunc sum;
    for (const Composition& alpha : compositions_of(n)) sum = sum + build_C(alpha);
    ctx.instance("n=" + std::to_string(n), SymFunc::elementary(n), sum);
  }
}

void check_hook_schur(CheckContext& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    for (int k = 0; k < n; ++k) {
      SymFunc sum;
      for (const Composition& alpha : compositions_of(n))
        if (alpha.part(0) >= n - k) sum = sum + build_C(alpha);
      sum = sum * (-Scalar::q()).pow(n - k - 1);
      std::vector<int> hook{n - k};
      hook.insert(hook.end(), static_cast<size_t>(k), 1);
      ctx.instance("n=" + std::to_string(n) + " k=" + std::to_string(k),
                   SymFunc::schur(Partition(std::move(hook))), sum);
    }
  }
}

void check_enk_partition_form(CheckContext& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      SymFunc rhs;
      for (const Partition& mu : partitions_of(n, k)) {
        std::vector<int> mult;
        for (int m : mu.multiplicity_vector())
          mult.push_back(m);
        Scalar coeff = q_pow(-mu.n_stat() - k + static_cast<int>(m_stat(mu))) *
                       q_multinomial(k, mult);
        rhs = rhs + build_C(Composition::of(mu)) * coeff;
      }
      ctx.instance("n=" + std::to_string(n) + " k=" + std::to_string(k), E_nk(n, k), rhs);
    }
  }
}

void check_enk_composition_form(CheckContext& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      SymFunc rhs;
      for (const Composition& alpha : compositions_of(n, k)) rhs = rhs + build_C(alpha);
      ctx.instance("n=" + std::to_string(n) + " k=" + std::to_string(k), E_nk(n, k), rhs);
    }
  }
}

// <nabla E_{m,r}, e_m>, with the empty conventions E_{0,0} = 1 and
// E_{m,0} = 0 for m >= 1.
Scalar nabla_enk_pairing(int m, int r) {
  if (m == 0 && r == 0) return Scalar::one();
  if (r == 0) return Scalar::zero();
  return hall_inner(nabla(E_nk(m, r)), SymFunc::elementary(m));
}

void check_enk_recurrence(CheckContext& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      Scalar lhs = nabla_enk_pairing(n, k);
      Scalar rhs;
      for (int r = 0; r <= n - k; ++r)
        rhs += q_binomial(r + k - 1, r) * nabla_enk_pairing(n - k, r);
      rhs = rhs * q_pow(static_cast<int>(binomial(k, 2))) * t_pow(n - k);
      ctx.instance("n=" + std::to_string(n) + " k=" + std::to_string(k), lhs, rhs);
    }
  }
}

void check_B_to_C(CheckContext& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      SymFunc rhs;
      for (const Composition& beta : compositions_of(n))
        if (refines(beta, alpha))
          rhs = rhs + build_C(beta) * q_pow(doff(alpha, dp_of(beta)));
      ctx.instance("alpha=" + alpha.to_string(), build_B(alpha), rhs);
    }
  }
}

void check_C_to_B(CheckContext& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      Composition ra = alpha.reversed();
      SymFunc rhs;
      for (const Composition& beta : compositions_of(n)) {
        if (!refines(beta, alpha)) continue;
        Scalar c = (-Scalar::q()).pow(alpha.length() - beta.length()) *
                   q_pow(-doff(ra, dp_of(beta.reversed())));
        rhs = rhs + build_B(beta) * c;
      }
      ctx.instance("alpha=" + alpha.to_string(), build_C(alpha), rhs);
    }
  }
}

void check_doff_inversion(CheckContext& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    auto comps = compositions_of(n);
    for (const Composition& alpha : comps) {
      for (const Composition& gamma : comps) {
        if (!refines(gamma, alpha)) continue;
        Scalar sum;
        for (const Composition& beta : comps) {
          if (!refines(gamma, beta) || !refines(beta, alpha)) continue;
          int sign = alpha.length() - beta.length();
          Scalar term = q_pow(sign + doff(beta, dp_of(gamma)) -
                              doff(alpha.reversed(), dp_of(beta.reversed())));
          sum += (sign % 2 == 0) ? term : -term;
        }
        Scalar expected = (gamma == alpha) ? Scalar::one() : Scalar::zero();
        ctx.instance("gamma=" + gamma.to_string() + " alpha=" + alpha.to_string(), sum,
                     expected);
      }
    }
  }
}

void check_q1_B(CheckContext& ctx) {
  auto at_q1 = [](const Scalar& c) { return c.specialize(Var::q, Scalar::one()); };
  for (int n = 1; n <= ctx.n_max; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      SymFunc b1 = build_B(alpha).map_coeffs(at_q1);
      Scalar lhs = hall_inner(nabla_q1(b1), SymFunc::elementary(n));
      Scalar rhs = comb_B_scalar(alpha).specialize(Var::q, Scalar::one());
      ctx.instance("alpha=" + alpha.to_string(), lhs, rhs);
    }
  }
}

void check_q1_C(CheckContext& ctx) {
  auto at_q1 = [](const Scalar& c) { return c.specialize(Var::q, Scalar::one()); };
  for (int n = 1; n <= ctx.n_max; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      SymFunc c1 = build_C(alpha).map_coeffs(at_q1);
      Scalar lhs = hall_inner(nabla_q1(c1), SymFunc::elementary(n));
      Scalar rhs = comb_C_scalar(alpha).specialize(Var::q, Scalar::one());
      ctx.instance("alpha=" + alpha.to_string(), lhs, rhs);
    }
  }
}

void check_conj_B_scalar(CheckContext& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n)
    for (const Composition& alpha : compositions_of(n))
      ctx.instance("alpha=" + alpha.to_string(),
                   hall_inner(nabla(build_B(alpha)), SymFunc::elementary(n)),
                   comb_B_scalar(alpha));
}

void check_conj_C_scalar(CheckContext& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n)
    for (const Composition& alpha : compositions_of(n))
      ctx.instance("alpha=" + alpha.to_string(),
                   hall_inner(nabla(build_C(alpha)), SymFunc::elementary(n)),
                   comb_C_scalar(alpha));
}

std::string render_monomial_map(const MonomialMap& m, size_t limit = 4) {
  std::string s = "{";
  size_t count = 0;
  for (const auto& [expo, c] : m) {
    if (count++ == limit) {
      s += " ...";
      break;
    }
    s += " x^[";
    for (size_t i = 0; i < expo.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(expo[i]);
    }
    s += "]: " + c.to_string() + ";";
  }
  return s + " }";
}

void monomial_conjecture(CheckContext& ctx, bool b_flavor) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      SymFunc lhs_sym = b_flavor ? nabla(build_B(alpha)) : nabla(build_C(alpha));
      MonomialMap lhs = to_monomials(lhs_sym, n);
      MonomialMap rhs = b_flavor ? comb_B_monomial(alpha) : comb_C_monomial(alpha);
      ++ctx.report.instances;
      if (lhs != rhs)
        ctx.report.witnesses.push_back("alpha=" + alpha.to_string() +
                                       ": lhs = " + render_monomial_map(lhs) +
                                       " ; rhs = " + render_monomial_map(rhs));
    }
  }
}

void check_conj_B_monomial(CheckContext& ctx) { monomial_conjecture(ctx, true); }
void check_conj_C_monomial(CheckContext& ctx) { monomial_conjecture(ctx, false); }

void check_qt_catalan(CheckContext& ctx) {
  for (int n = 1; n <= ctx.n_max; ++n) {
    Scalar lhs = hall_inner(nabla(SymFunc::elementary(n)), SymFunc::elementary(n));
    Scalar rhs;
    for (const DyckPath& d : all_paths(n)) rhs += t_pow(d.area()) * q_pow(d.dinv());
    ctx.instance("n=" + std::to_string(n), lhs, rhs);
  }
}

void check_BC_relation(CheckContext& ctx) {
  auto q_to_inv = [](const Scalar& c) {
    return c.specialize(Var::q, Scalar::one() / Scalar::q());
  };
  for (int n = 0; n <= ctx.n_max; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      SymFunc qp = hall_littlewood_Qp(lambda);
      Composition as_comp = Composition::of(lambda);
      SymFunc via_B = omega(build_B(as_comp.reversed()));
      SymFunc via_C = build_C(as_comp).map_coeffs(q_to_inv) *
                      (-Scalar::q()).pow(lambda.length() - lambda.size());
      ctx.instance("lambda=" + lambda.to_string() + " (omega B)", qp, via_B);
      ctx.instance("lambda=" + lambda.to_string() + " (C at 1/q)", qp, via_C);
    }
  }
}

void check_op_commutations(CheckContext& ctx) {
  const int index_lo = -1, index_hi = 4;
  int dmax = std::min(ctx.n_max, 4);
  std::vector<SymFunc> inputs;
  std::vector<std::string> input_names;
  for (int d = 0; d <= dmax; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      inputs.push_back(convert(SymFunc::schur(lambda), Basis::p));
      input_names.push_back("s" + lambda.to_string());
    }
  }

  Scalar q = Scalar::q();
  for (size_t fi = 0; fi < inputs.size(); ++fi) {
    const SymFunc& f = inputs[fi];
    const std::string& fname = input_names[fi];

    for (int m = index_lo; m <= index_hi; ++m) {
      // The remark form of the C operator agrees with the summation form.
      ctx.instance("C-alt m=" + std::to_string(m) + " f=" + fname, apply_C_alt(m, f),
                   apply_C(m, f));
      // Adjacent relations.
      ctx.instance("CC-adjacent m=" + std::to_string(m) + " f=" + fname,
                   apply_C(m, apply_C(m + 1, f)),
                   apply_C(m + 1, apply_C(m, f)) * (Scalar::one() / q));
      ctx.instance("BB-adjacent m=" + std::to_string(m) + " f=" + fname,
                   apply_B(m, apply_B(m + 1, f)), apply_B(m + 1, apply_B(m, f)) * q);

      for (int n = index_lo; n <= index_hi; ++n) {
        std::string mn = " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                         " f=" + fname;
        ctx.instance("CC-straighten" + mn,
                     apply_C(m, apply_C(n, f)) * q - apply_C(m + 1, apply_C(n - 1, f)),
                     apply_C(n, apply_C(m, f)) - apply_C(n - 1, apply_C(m + 1, f)) * q);
        ctx.instance("BB-straighten" + mn,
                     apply_B(m, apply_B(n, f)) - apply_B(m + 1, apply_B(n - 1, f)) * q,
                     apply_B(n, apply_B(m, f)) * q - apply_B(n - 1, apply_B(m + 1, f)));
        ctx.instance("SS-straighten" + mn, apply_S(m, apply_S(n, f)),
                     -apply_S(n - 1, apply_S(m + 1, f)));
        if (m + n > 0) {
          ctx.instance("BC-commute" + mn, apply_B(n, apply_C(m, f)),
                       apply_C(m, apply_B(n, f)) * q);
        }
      }
    }
  }

  // The BC relation genuinely fails once m + n <= 0: require a witness.
  bool found_failure = false;
  for (int m = index_lo; m <= index_hi && !found_failure; ++m) {
    for (int n = index_lo; n <= index_hi && !found_failure; ++n) {
      if (m + n > 0) continue;
      for (const SymFunc& f : inputs) {
        if (apply_B(n, apply_C(m, f)) != apply_C(m, apply_B(n, f)) * q) {
          found_failure = true;
          break;
        }
      }
    }
  }
  ctx.expect("BC-breaks-at-nonpositive", found_failure,
             "no pair with m + n <= 0 violated the commutation");
}

void check_S_expansion(CheckContext& ctx) {
  int dmax = std::min(ctx.n_max, 4);
  for (int d = 0; d <= dmax; ++d) {
    for (const Partition& lambda : partitions_of(d)) {
      SymFunc f = convert(SymFunc::schur(lambda), Basis::p);
      for (int m = 1; m <= 4; ++m) {
        SymFunc rhs;
        for (int i = 0; i <= d; ++i) {
          SymFunc skewed = skew(SymFunc::elementary(i), f);
          if (!skewed.is_zero()) rhs = rhs + apply_C(m + i, skewed);
        }
        rhs = rhs * (-Scalar::q()).pow(m - 1);
        ctx.instance("m=" + std::to_string(m) + " f=s" + lambda.to_string(),
                     apply_S(m, f), rhs);
      }
    }
  }
}

void check_HL_specialization(CheckContext& ctx) {
  auto hl_slice = [](const Scalar& c) {
    return c.substitute(Scalar::zero(), Scalar::one() / Scalar::q(), Scalar::z());
  };
  for (int n = 0; n <= ctx.n_max; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      SymFunc qp = hall_littlewood_Qp(lambda);
      SymFunc from_macd =
          macd_basis(n)->row(lambda).map_coeffs(hl_slice) * q_pow(lambda.n_stat());
      ctx.instance("lambda=" + lambda.to_string() + " (table slice)", qp, from_macd);
      ctx.instance("lambda=" + lambda.to_string() + " (h_n pairing)",
                   hall_inner(qp, SymFunc::homogeneous(n)), q_pow(lambda.n_stat()));
    }
  }
}

// --- registry ----------------------------------------------------------------

struct CheckDef {
  const char* id;
  void (*fn)(CheckContext&);
  const char* params_pattern;  // rendered with n substituted
  int suite_cap;               // n cap applied by run_suite
  const char* note;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"en_sum_C", check_en_sum_C, "n=1..%", 8, ""},
      {"hook_schur", check_hook_schur, "n=1..%, 0<=k<n", 8, ""},
      {"enk_partition_form", check_enk_partition_form, "n=1..%, 1<=k<=n", 8, ""},
      {"enk_composition_form", check_enk_composition_form, "n=1..%, 1<=k<=n", 8, ""},
      {"enk_recurrence", check_enk_recurrence, "n=1..%, 1<=k<=n", 8, ""},
      {"B_to_C", check_B_to_C, "alpha |= n, n=1..%", 8, ""},
      {"C_to_B", check_C_to_B, "alpha |= n, n=1..%", 8, ""},
      {"doff_inversion", check_doff_inversion, "gamma<=alpha |= n, n=1..%", 8, ""},
      {"q1_B", check_q1_B, "alpha |= n, n=1..%", 8, ""},
      {"q1_C", check_q1_C, "alpha |= n, n=1..%", 8, ""},
      {"conj_B_scalar", check_conj_B_scalar, "alpha |= n, n=1..%", 8,
       "conjecture (proven in later literature)"},
      {"conj_C_scalar", check_conj_C_scalar, "alpha |= n, n=1..%", 8,
       "conjecture (proven in later literature)"},
      {"conj_B_monomial", check_conj_B_monomial, "alpha |= n, n=1..%", 5,
       "conjecture (proven in later literature); area read on the underlying path"},
      {"conj_C_monomial", check_conj_C_monomial, "alpha |= n, n=1..%", 5,
       "conjecture (proven in later literature)"},
      {"qt_catalan", check_qt_catalan, "n=1..%", 8, ""},
      {"BC_relation", check_BC_relation, "lambda |- n, n=0..%", 8, ""},
      {"op_commutations", check_op_commutations, "deg<=min(%,4), indices in [-1,4]", 4, ""},
      {"S_expansion", check_S_expansion, "deg<=min(%,4), m in [1,4]", 4, ""},
      {"HL_specialization", check_HL_specialization, "lambda |- n, n=0..%", 8, ""},
  };
  return defs;
}

std::string render_params(const char* pattern, int n_max) {
  std::string s(pattern);
  auto pos = s.find('%');
  if (pos != std::string::npos) s.replace(pos, 1, std::to_string(n_max));
  return s;
}

CheckReport run_def(const CheckDef& def, int n_max) {
  CheckReport report;
  report.check_id = def.id;
  report.params = render_params(def.params_pattern, n_max);
  report.note = def.note;
  auto start = std::chrono::steady_clock::now();
  CheckContext ctx{n_max, report};
  try {
    def.fn(ctx);
    report.status = report.instances == 0 ? CheckReport::Status::skipped
                    : report.witnesses.empty() ? CheckReport::Status::pass
                                               : CheckReport::Status::fail;
  } catch (const std::exception& e) {
    report.status = CheckReport::Status::fail;
    report.witnesses.push_back(std::string("exception: ") + e.what());
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const CheckDef& def : registry()) v.push_back(def.id);
    return v;
  }();
  return ids;
}

CheckReport run_check(const std::string& check_id, int n_max) {
  for (const CheckDef& def : registry())
    if (check_id == def.id) return run_def(def, n_max);
  throw std::invalid_argument("run_check: unknown check id '" + check_id + "'");
}

std::vector<CheckReport> run_suite(int n_max, const std::vector<std::string>& only) {
  std::vector<CheckReport> reports;
  for (const CheckDef& def : registry()) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), std::string(def.id)) == only.end())
      continue;
    reports.push_back(run_def(def, std::min(n_max, def.suite_cap)));
  }

  const CheckReport* bsc = nullptr;
  const CheckReport* csc = nullptr;
  for (const CheckReport& r : reports) {
    if (r.check_id == "conj_B_scalar") bsc = &r;
    if (r.check_id == "conj_C_scalar") csc = &r;
  }
  if (bsc && csc) {
    CheckReport eq;
    eq.check_id = "conj_scalar_equivalence";
    eq.params = "outcomes of conj_B_scalar and conj_C_scalar";
    eq.instances = 1;
    eq.note = "the two path-side conjectures stand or fall together";
    if (bsc->status == csc->status) {
      eq.status = CheckReport::Status::pass;
    } else {
      eq.status = CheckReport::Status::fail;
      eq.witnesses.push_back(std::string("conj_B_scalar is ") + status_name(bsc->status) +
                             " but conj_C_scalar is " + status_name(csc->status));
    }
    reports.push_back(std::move(eq));
  }

  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
  return reports;
}

}  // namespace qtsym
