#include "qtsym/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "qtsym/linsolve.hpp"

namespace qtsym {

Basis basis_from_char(char c) {
  switch (c) {
    case 'p': return Basis::p;
    case 'm': return Basis::m;
    case 'e': return Basis::e;
    case 'h': return Basis::h;
    case 's': return Basis::s;
    default: throw std::invalid_argument("unknown basis tag");
  }
}

char basis_to_char(Basis b) { return static_cast<char>(b); }

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama characters

namespace {

// Removes border strips via beta numbers: with m = len(lambda) beta numbers
// b_i = lambda_i + (m - i), a strip of size k is the replacement of one b by
// b - k (staying nonnegative and distinct); the sign counts the crossings.
long long mn_rec(const std::vector<int>& betas, const std::vector<int>& mu_parts, size_t pos) {
  if (pos == mu_parts.size()) return 1;
  int k = mu_parts[pos];
  long long total = 0;
  for (size_t i = 0; i < betas.size(); ++i) {
    int target = betas[i] - k;
    if (target < 0) continue;
    bool clash = false;
    int crossings = 0;
    for (size_t j = 0; j < betas.size(); ++j) {
      if (j == i) continue;
      if (betas[j] == target) {
        clash = true;
        break;
      }
      if (betas[j] > target && betas[j] < betas[i]) ++crossings;
    }
    if (clash) continue;
    std::vector<int> next = betas;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<int>());
    long long sub = mn_rec(next, mu_parts, pos + 1);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("mn_character: sizes differ");
  int m = lambda.length();
  std::vector<int> betas(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) betas[static_cast<size_t>(i)] = lambda.part(i) + (m - 1 - i);
  return mn_rec(betas, mu.parts(), 0);
}

// ---------------------------------------------------------------------------
// Per-degree transition data

namespace {

struct DegreeData {
  std::vector<Partition> parts;        // decreasing lex order
  std::map<Partition, int> index;
  std::vector<long long> zvals;
  std::vector<std::vector<long long>> chi;  // chi[lambda][mu]

  // Column j = expansion of basis element j over p (indexed like `parts`).
  Matrix e2p, h2p, s2p, p2m;
  // Lazily built inverses for p -> e/h and m -> p.
  std::unique_ptr<Matrix> p2e, p2h, m2p;
  std::mutex inverse_mutex;
};

MonomialMap monomial_expand_p(const Partition& shape, const Scalar& coeff, int nvars);

class TransitionCache {
 public:
  static TransitionCache& instance() {
    static TransitionCache cache;
    return cache;
  }

  DegreeData& degree(int d) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = data_.find(d);
    if (it != data_.end()) return *it->second;
    auto dd = std::make_unique<DegreeData>();
    build(*dd, d);
    return *data_.emplace(d, std::move(dd)).first->second;
  }

 private:
  void build(DegreeData& dd, int d);
  std::map<int, std::unique_ptr<DegreeData>> data_;
  std::mutex mutex_;
};

// p expansion of e_k and h_k as coefficient maps over partitions of k.
SymFunc::CoeffMap ehp_expansion(int k, bool elementary) {
  SymFunc::CoeffMap out;
  for (const Partition& mu : partitions_of(k)) {
    Scalar c = Scalar::ratio(1, Int(z_mu(mu)));
    if (elementary && (k - mu.length()) % 2 != 0) c = -c;
    out.emplace(mu, std::move(c));
  }
  return out;
}

// Union of parts, as a partition.
Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<int>());
  return Partition(std::move(parts));
}

SymFunc::CoeffMap pmap_mul(const SymFunc::CoeffMap& a, const SymFunc::CoeffMap& b) {
  SymFunc::CoeffMap out;
  for (const auto& [la, ca] : a) {
    for (const auto& [lb, cb] : b) {
      Scalar c = ca * cb;
      if (c.is_zero()) continue;
      Partition key = merge_parts(la, lb);
      auto [it, fresh] = out.emplace(std::move(key), c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

void TransitionCache::build(DegreeData& dd, int d) {
  dd.parts = partitions_of(d);
  int n = static_cast<int>(dd.parts.size());
  for (int i = 0; i < n; ++i) dd.index.emplace(dd.parts[static_cast<size_t>(i)], i);
  dd.zvals.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) dd.zvals[static_cast<size_t>(i)] = z_mu(dd.parts[static_cast<size_t>(i)]);

  dd.chi.assign(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n)));
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      dd.chi[static_cast<size_t>(l)][static_cast<size_t>(m)] =
          mn_character(dd.parts[static_cast<size_t>(l)], dd.parts[static_cast<size_t>(m)]);

  auto column_from_map = [&](const SymFunc::CoeffMap& map) {
    std::vector<Scalar> col(static_cast<size_t>(n), Scalar::zero());
    for (const auto& [shape, c] : map) col[static_cast<size_t>(dd.index.at(shape))] = c;
    return col;
  };

  dd.e2p.resize(static_cast<size_t>(n));
  dd.h2p.resize(static_cast<size_t>(n));
  dd.s2p.resize(static_cast<size_t>(n));
  dd.p2m.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Partition& shape = dd.parts[static_cast<size_t>(j)];
    SymFunc::CoeffMap eprod{{Partition::empty(), Scalar::one()}};
    SymFunc::CoeffMap hprod = eprod;
    for (int part : shape.parts()) {
      eprod = pmap_mul(eprod, ehp_expansion(part, true));
      hprod = pmap_mul(hprod, ehp_expansion(part, false));
    }
    dd.e2p[static_cast<size_t>(j)] = column_from_map(eprod);
    dd.h2p[static_cast<size_t>(j)] = column_from_map(hprod);

    std::vector<Scalar> scol(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m)
      scol[static_cast<size_t>(m)] =
          Scalar::ratio(Int(dd.chi[static_cast<size_t>(j)][static_cast<size_t>(m)]),
                        Int(dd.zvals[static_cast<size_t>(m)]));
    dd.s2p[static_cast<size_t>(j)] = std::move(scol);

    // p_mu in the m basis: expand into d variables and read off the
    // coefficients at sorted exponent vectors.
    MonomialMap mono = monomial_expand_p(shape, Scalar::one(), d);
    std::vector<Scalar> mcol(static_cast<size_t>(n), Scalar::zero());
    for (int l = 0; l < n; ++l) {
      const Partition& lam = dd.parts[static_cast<size_t>(l)];
      std::vector<int> expo(static_cast<size_t>(d), 0);
      for (int i = 0; i < lam.length(); ++i) expo[static_cast<size_t>(i)] = lam.part(i);
      auto it = mono.find(expo);
      if (it != mono.end()) mcol[static_cast<size_t>(l)] = it->second;
    }
    dd.p2m[static_cast<size_t>(j)] = std::move(mcol);
  }
}

const Matrix& basis_to_p_matrix(DegreeData& dd, Basis b) {
  switch (b) {
    case Basis::e: return dd.e2p;
    case Basis::h: return dd.h2p;
    case Basis::s: return dd.s2p;
    default: break;
  }
  throw std::logic_error("basis_to_p_matrix: unsupported basis");
}

// Matrix with columns = p coefficients of basis elements, as a square matrix
// M[i][j]; the inverse converts p coefficient vectors into basis b.
const Matrix& inverse_for(DegreeData& dd, Basis b) {
  std::lock_guard<std::mutex> lock(dd.inverse_mutex);
  std::unique_ptr<Matrix>* slot = nullptr;
  const Matrix* forward = nullptr;
  switch (b) {
    case Basis::e: slot = &dd.p2e; forward = &dd.e2p; break;
    case Basis::h: slot = &dd.p2h; forward = &dd.h2p; break;
    case Basis::m: slot = &dd.m2p; forward = &dd.p2m; break;
    default: throw std::logic_error("inverse_for: unsupported basis");
  }
  if (!*slot) {
    size_t n = dd.parts.size();
    Matrix m(n, std::vector<Scalar>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m[i][j] = (*forward)[j][i];
    *slot = std::make_unique<Matrix>(lin_invert(std::move(m)));
  }
  return **slot;
}

}  // namespace

// ---------------------------------------------------------------------------
// SymFunc basics

SymFunc::SymFunc(Basis b, CoeffMap coeffs) : basis_(b), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second.is_zero())
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

SymFunc SymFunc::one() { return basis_element(Basis::p, Partition::empty()); }

SymFunc SymFunc::basis_element(Basis b, const Partition& shape) {
  SymFunc f(b);
  f.coeffs_.emplace(shape, Scalar::one());
  return f;
}

SymFunc SymFunc::elementary(int n) {
  if (n < 0) return zero(Basis::e);
  if (n == 0) return basis_element(Basis::e, Partition::empty());
  return basis_element(Basis::e, Partition({n}));
}

SymFunc SymFunc::homogeneous(int n) {
  if (n < 0) return zero(Basis::h);
  if (n == 0) return basis_element(Basis::h, Partition::empty());
  return basis_element(Basis::h, Partition({n}));
}

SymFunc SymFunc::power(int n) {
  if (n < 1) throw std::invalid_argument("SymFunc::power: n must be >= 1");
  return basis_element(Basis::p, Partition({n}));
}

SymFunc SymFunc::schur(const Partition& shape) { return basis_element(Basis::s, shape); }
SymFunc SymFunc::monomial(const Partition& shape) { return basis_element(Basis::m, shape); }

int SymFunc::degree() const {
  int d = -1;
  for (const auto& [shape, c] : coeffs_) d = std::max(d, shape.size());
  return d;
}

bool SymFunc::is_homogeneous() const {
  int d = -1;
  for (const auto& [shape, c] : coeffs_) {
    if (d < 0) d = shape.size();
    if (shape.size() != d) return false;
  }
  return true;
}

Scalar SymFunc::coefficient(const Partition& shape) const {
  auto it = coeffs_.find(shape);
  return it == coeffs_.end() ? Scalar::zero() : it->second;
}

SymFunc SymFunc::operator-() const {
  SymFunc out(basis_);
  for (const auto& [shape, c] : coeffs_) out.coeffs_.emplace(shape, -c);
  return out;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  if (basis_ != o.basis_) return convert(*this, Basis::p) + convert(o, Basis::p);
  SymFunc out(basis_);
  out.coeffs_ = coeffs_;
  for (const auto& [shape, c] : o.coeffs_) {
    auto [it, fresh] = out.coeffs_.emplace(shape, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.coeffs_.erase(it);
    }
  }
  return out;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator*(const SymFunc& o) const { return multiply(*this, o); }

SymFunc SymFunc::operator*(const Scalar& c) const {
  if (c.is_zero()) return zero(basis_);
  SymFunc out(basis_);
  for (const auto& [shape, v] : coeffs_) out.coeffs_.emplace(shape, v * c);
  return out;
}

SymFunc operator*(const Scalar& c, const SymFunc& f) { return f * c; }

bool SymFunc::operator==(const SymFunc& o) const {
  if (basis_ == o.basis_) return coeffs_ == o.coeffs_;
  return convert(*this, Basis::p).coeffs_ == convert(o, Basis::p).coeffs_;
}

SymFunc SymFunc::homogeneous_component(int d) const {
  SymFunc out(basis_);
  for (const auto& [shape, c] : coeffs_)
    if (shape.size() == d) out.coeffs_.emplace(shape, c);
  return out;
}

std::vector<int> SymFunc::degrees() const {
  std::vector<int> ds;
  for (const auto& [shape, c] : coeffs_) {
    int d = shape.size();
    if (ds.empty() || ds.back() != d) {
      if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<std::pair<Partition, std::string>> SymFunc::dump() const {
  std::vector<std::pair<Partition, std::string>> rows;
  rows.reserve(coeffs_.size());
  for (const auto& [shape, c] : coeffs_) rows.emplace_back(shape, c.to_string());
  // Decreasing lex order, largest shapes first.
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return b.first < a.first; });
  return rows;
}

std::string SymFunc::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [shape, cstr] : dump()) {
    std::string term;
    std::string body = std::string(1, basis_to_char(basis_)) + shape.to_string();
    if (cstr == "1") {
      term = body;
    } else if (cstr == "-1") {
      term = "-" + body;
    } else if (cstr.find(' ') != std::string::npos) {
      term = "(" + cstr + ")*" + body;
    } else {
      term = cstr + "*" + body;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------
// Conversions

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  SymFunc::CoeffMap out;
  auto& cache = TransitionCache::instance();
  for (int d : f.degrees()) {
    SymFunc block = f.homogeneous_component(d);
    DegreeData& dd = cache.degree(d);
    size_t n = dd.parts.size();

    // Step 1: into the p basis.
    std::vector<Scalar> pvec(n, Scalar::zero());
    if (f.basis() == Basis::p) {
      for (const auto& [shape, c] : block.coeffs())
        pvec[static_cast<size_t>(dd.index.at(shape))] = c;
    } else if (f.basis() == Basis::m) {
      const Matrix& m2p = inverse_for(dd, Basis::m);
      std::vector<Scalar> w(n, Scalar::zero());
      for (const auto& [shape, c] : block.coeffs())
        w[static_cast<size_t>(dd.index.at(shape))] = c;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          if (!w[j].is_zero()) pvec[i] += m2p[i][j] * w[j];
    } else {
      const Matrix& b2p = basis_to_p_matrix(dd, f.basis());
      for (const auto& [shape, c] : block.coeffs()) {
        size_t j = static_cast<size_t>(dd.index.at(shape));
        for (size_t i = 0; i < n; ++i)
          if (!b2p[j][i].is_zero()) pvec[i] += b2p[j][i] * c;
      }
    }

    // Step 2: from p into the target.
    std::vector<Scalar> tvec(n, Scalar::zero());
    if (target == Basis::p) {
      tvec = std::move(pvec);
    } else if (target == Basis::s) {
      // <f, s_lambda> = sum_mu c_mu chi^lambda(mu)
      for (size_t l = 0; l < n; ++l) {
        Scalar acc;
        for (size_t m = 0; m < n; ++m) {
          if (pvec[m].is_zero()) continue;
          long long x = dd.chi[l][m];
          if (x != 0) acc += pvec[m] * Scalar(Int(x));
        }
        tvec[l] = std::move(acc);
      }
    } else if (target == Basis::m) {
      for (size_t l = 0; l < n; ++l) {
        Scalar acc;
        for (size_t j = 0; j < n; ++j)
          if (!pvec[j].is_zero()) acc += dd.p2m[j][l] * pvec[j];
        tvec[l] = std::move(acc);
      }
    } else {
      const Matrix& inv = inverse_for(dd, target);
      for (size_t i = 0; i < n; ++i) {
        Scalar acc;
        for (size_t j = 0; j < n; ++j)
          if (!pvec[j].is_zero()) acc += inv[i][j] * pvec[j];
        tvec[i] = std::move(acc);
      }
    }

    for (size_t i = 0; i < n; ++i)
      if (!tvec[i].is_zero()) out.emplace(dd.parts[i], std::move(tvec[i]));
  }
  return SymFunc(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Algebra in the p basis

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  SymFunc fp = convert(f, Basis::p);
  SymFunc gp = convert(g, Basis::p);
  SymFunc::CoeffMap out;
  for (const auto& [la, ca] : fp.coeffs()) {
    for (const auto& [lb, cb] : gp.coeffs()) {
      Scalar c = ca * cb;
      if (c.is_zero()) continue;
      Partition key = Partition::sorted([&] {
        std::vector<int> parts = la.parts();
        parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
        return parts;
      }());
      auto [it, fresh] = out.emplace(std::move(key), c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return SymFunc(Basis::p, std::move(out));
}

Scalar hall_inner(const SymFunc& f, const SymFunc& g) {
  SymFunc fp = convert(f, Basis::p);
  SymFunc gp = convert(g, Basis::p);
  const auto& a = fp.coeffs();
  const auto& b = gp.coeffs();
  Scalar acc;
  for (const auto& [shape, ca] : a) {
    auto it = b.find(shape);
    if (it == b.end()) continue;
    acc += ca * it->second * Scalar(Int(z_mu(shape)));
  }
  return acc;
}

SymFunc omega(const SymFunc& f) {
  SymFunc fp = convert(f, Basis::p);
  SymFunc::CoeffMap out;
  for (const auto& [shape, c] : fp.coeffs()) {
    bool flip = ((shape.size() + shape.length()) % 2) != 0;
    out.emplace(shape, flip ? -c : c);
  }
  return SymFunc(Basis::p, std::move(out));
}

namespace {

// p_r-perp acting on a p coefficient map: r * d/d(p_r).
SymFunc::CoeffMap skew_by_pr(const SymFunc::CoeffMap& f, int r) {
  SymFunc::CoeffMap out;
  for (const auto& [shape, c] : f) {
    int mult = shape.multiplicity(r);
    if (mult == 0) continue;
    std::vector<int> parts = shape.parts();
    parts.erase(std::find(parts.begin(), parts.end(), r));
    Partition reduced(std::move(parts));
    Scalar v = c * Scalar(static_cast<long>(r) * mult);
    auto [it, fresh] = out.emplace(std::move(reduced), v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

}  // namespace

SymFunc skew(const SymFunc& g, const SymFunc& f) {
  SymFunc gp = convert(g, Basis::p);
  SymFunc fp = convert(f, Basis::p);
  SymFunc::CoeffMap acc;
  for (const auto& [mu, b] : gp.coeffs()) {
    SymFunc::CoeffMap cur = fp.coeffs();
    for (int r : mu.parts()) {
      cur = skew_by_pr(cur, r);
      if (cur.empty()) break;
    }
    for (const auto& [shape, c] : cur) {
      Scalar v = c * b;
      if (v.is_zero()) continue;
      auto [it, fresh] = acc.emplace(shape, v);
      if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  return SymFunc(Basis::p, std::move(acc));
}

// ---------------------------------------------------------------------------
// Monomial expansion

namespace {

MonomialMap monomial_mul_pr(const MonomialMap& f, int r, int nvars) {
  MonomialMap out;
  for (const auto& [expo, c] : f) {
    for (int v = 0; v < nvars; ++v) {
      std::vector<int> e = expo;
      e[static_cast<size_t>(v)] += r;
      auto [it, fresh] = out.emplace(std::move(e), c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

MonomialMap monomial_expand_p(const Partition& shape, const Scalar& coeff, int nvars) {
  MonomialMap acc{{std::vector<int>(static_cast<size_t>(nvars), 0), coeff}};
  for (int r : shape.parts()) acc = monomial_mul_pr(acc, r, nvars);
  return acc;
}

}  // namespace

MonomialMap to_monomials(const SymFunc& f, int nvars) {
  if (nvars < f.degree())
    throw std::invalid_argument("to_monomials: fewer variables than the degree is lossy");
  if (nvars < 0) throw std::invalid_argument("to_monomials: negative variable count");
  SymFunc fp = convert(f, Basis::p);
  MonomialMap out;
  for (const auto& [shape, c] : fp.coeffs()) {
    for (auto& [expo, v] : monomial_expand_p(shape, c, nvars)) {
      auto [it, fresh] = out.emplace(expo, v);
      if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace qtsym
