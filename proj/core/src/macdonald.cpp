#include "qtsym/macdonald.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "qtsym/alphabet.hpp"
#include "qtsym/creationops.hpp"
#include "qtsym/linsolve.hpp"

namespace qtsym {

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates: sizes differ");
  int sa = 0, sb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

MacdonaldTable::MacdonaldTable(int degree, std::vector<Partition> parts,
                               std::vector<SymFunc> rows)
    : degree_(degree), parts_(std::move(parts)), rows_(std::move(rows)) {}

const SymFunc& MacdonaldTable::row(const Partition& mu) const {
  for (size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i] == mu) return rows_[i];
  throw std::invalid_argument("MacdonaldTable::row: not a partition of this degree");
}

namespace {

struct DegreeData {
  std::shared_ptr<const MacdonaldTable> table;
  std::vector<SymFunc> rows_p;     // rows in the p basis
  std::vector<Scalar> eigen;       // t^{n(mu)} q^{n(mu')}

  // Expansion machinery from the twisted orthogonality
  //   < H_mu[X(1-1/t)], H_lambda[X(1-q)] > = d_mu chi(mu = lambda):
  // the coordinate of f on row mu is < dual[mu], f[X(1-q)] > / d_mu.
  std::vector<SymFunc> dual;       // H_mu[X(1-1/t)], p basis
  std::vector<Scalar> dual_norm;   // d_mu, nonzero

  // q = 1 slice: rows specialize to polynomials in t only, expansion by a
  // cached matrix inverse (univariate, cheap).
  Matrix k_q1_inv;                 // inverse of K_q1[mu][lambda]
  std::vector<SymFunc> rows_q1;    // rows at q = 1, Schur basis
  std::vector<Scalar> eigen_q1;    // t^{n(mu)}

  // Matrices of the operator over Schur coordinates, built lazily on first
  // use: out_lambda = sum_nu N[lambda][nu] in_nu.
  std::unique_ptr<Matrix> nabla_s, nabla_inv_s;
  Matrix nabla_q1_s;
  std::mutex matrix_mutex;
};

// Schur-to-Schur matrix of f -> f[X(1-v)]: column lambda holds the expansion
// of s_lambda[X(1-v)].
Matrix plethysm_matrix(const std::vector<Partition>& parts, Var v) {
  Alphabet a = Alphabet::X() * (Alphabet::constant(1) - Alphabet::scalar(Scalar::variable(v)));
  Matrix m(parts.size(), std::vector<Scalar>(parts.size()));
  std::map<Partition, int> index;
  for (size_t i = 0; i < parts.size(); ++i) index.emplace(parts[i], static_cast<int>(i));
  for (size_t j = 0; j < parts.size(); ++j) {
    SymFunc image = convert(plethysm(SymFunc::schur(parts[j]), a), Basis::s);
    for (const auto& [shape, c] : image.coeffs())
      m[static_cast<size_t>(index.at(shape))][j] = c;
  }
  return m;
}

class MacdCache {
 public:
  static MacdCache& instance() {
    static MacdCache cache;
    return cache;
  }

  DegreeData& degree(int n) {
    if (n < 0) throw std::invalid_argument("macd_basis: negative degree");
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = data_.find(n);
    if (it != data_.end()) return *it->second;
    auto de = std::make_unique<DegreeData>();
    build(*de, n);
    return *data_.emplace(n, std::move(de)).first->second;
  }

 private:
  static void build(DegreeData& de, int n);
  std::map<int, std::unique_ptr<DegreeData>> data_;
  std::mutex mutex_;
};

void MacdCache::build(DegreeData& de, int n) {
  std::vector<Partition> parts = partitions_of(n);
  size_t np = parts.size();

  Matrix aq = plethysm_matrix(parts, Var::q);
  Matrix at = plethysm_matrix(parts, Var::t);

  std::vector<SymFunc> rows;
  rows.reserve(np);
  Matrix k(np, std::vector<Scalar>(np, Scalar::zero()));

  for (size_t mi = 0; mi < np; ++mi) {
    const Partition& mu = parts[mi];
    Partition muc = mu.conjugate();

    // Triangularity: f[X(1-q)] is supported on { s_nu : nu >= mu } and
    // f[X(1-t)] on { s_nu : nu >= mu' } (dominance); each excluded nu
    // contributes one linear constraint on the Schur coefficients of f.
    Matrix sys;
    for (size_t nu = 0; nu < np; ++nu) {
      if (dominates(parts[nu], mu)) continue;
      std::vector<Scalar> row(np);
      for (size_t l = 0; l < np; ++l) row[l] = aq[nu][l];
      sys.push_back(std::move(row));
    }
    for (size_t nu = 0; nu < np; ++nu) {
      if (dominates(parts[nu], muc)) continue;
      std::vector<Scalar> row(np);
      for (size_t l = 0; l < np; ++l) row[l] = at[nu][l];
      sys.push_back(std::move(row));
    }

    std::vector<Scalar> c;
    if (sys.empty()) {
      c.assign(np, Scalar::one());  // degree 0 or 1
    } else {
      c = lin_kernel_1d(std::move(sys), static_cast<int>(np));
    }

    // Normalize <f, s_(n)> = 1; the one-row shape sits first in the order.
    if (c[0].is_zero())
      throw std::logic_error("macd_basis: kernel vector has zero leading coefficient");
    Scalar inv = Scalar::one() / c[0];
    SymFunc::CoeffMap coeffs;
    for (size_t l = 0; l < np; ++l) {
      Scalar v = c[l] * inv;
      k[mi][l] = v;
      if (!v.is_zero()) coeffs.emplace(parts[l], std::move(v));
    }
    rows.push_back(SymFunc(Basis::s, std::move(coeffs)));
  }

  de.table = std::make_shared<const MacdonaldTable>(n, parts, rows);

  de.rows_p.reserve(np);
  de.dual.reserve(np);
  Alphabet tilt_t =
      Alphabet::X() *
      (Alphabet::constant(1) - Alphabet::scalar(Scalar::one() / Scalar::t()));
  Alphabet tilt_q = Alphabet::X() * (Alphabet::constant(1) - Alphabet::q());
  std::vector<SymFunc> tilted_q;
  tilted_q.reserve(np);
  for (size_t mi = 0; mi < np; ++mi) {
    de.rows_p.push_back(convert(rows[mi], Basis::p));
    de.dual.push_back(plethysm(de.rows_p[mi], tilt_t));
    tilted_q.push_back(plethysm(de.rows_p[mi], tilt_q));
  }
  de.dual_norm.resize(np);
  for (size_t mi = 0; mi < np; ++mi) {
    // The defining orthogonality, asserted while extracting the norms.
    for (size_t li = 0; li < np; ++li) {
      Scalar pairing = hall_inner(de.dual[mi], tilted_q[li]);
      if (mi == li) {
        if (pairing.is_zero())
          throw std::logic_error("macd_basis: vanishing orthogonality norm");
        de.dual_norm[mi] = std::move(pairing);
      } else if (!pairing.is_zero()) {
        throw std::logic_error("macd_basis: twisted orthogonality failed");
      }
    }
  }

  de.eigen.resize(np);
  de.eigen_q1.resize(np);
  for (size_t mi = 0; mi < np; ++mi) {
    de.eigen[mi] = t_pow(parts[mi].n_stat()) * q_pow(parts[mi].conjugate().n_stat());
    de.eigen_q1[mi] = t_pow(parts[mi].n_stat());
  }

  Matrix k_q1(np, std::vector<Scalar>(np));
  for (size_t i = 0; i < np; ++i)
    for (size_t j = 0; j < np; ++j)
      k_q1[i][j] = k[i][j].specialize(Var::q, Scalar::one());
  de.rows_q1.reserve(np);
  for (size_t mi = 0; mi < np; ++mi)
    de.rows_q1.push_back(rows[mi].map_coeffs(
        [](const Scalar& c) { return c.specialize(Var::q, Scalar::one()); }));
  de.k_q1_inv = lin_invert(std::move(k_q1));

  // Schur matrix of the q = 1 operator (entries univariate in t, so this is
  // cheap to assemble eagerly).
  de.nabla_q1_s.assign(np, std::vector<Scalar>(np, Scalar::zero()));
  std::map<Partition, int> index;
  for (size_t i = 0; i < np; ++i) index.emplace(parts[i], static_cast<int>(i));
  for (size_t nu = 0; nu < np; ++nu) {
    for (size_t mi = 0; mi < np; ++mi) {
      Scalar w = de.k_q1_inv[nu][mi];
      if (w.is_zero()) continue;
      Scalar scaled = w * de.eigen_q1[mi];
      for (const auto& [shape, c] : de.rows_q1[mi].coeffs()) {
        size_t l = static_cast<size_t>(index.at(shape));
        de.nabla_q1_s[l][nu] += scaled * c;
      }
    }
  }
}

// Expands the degree-d Schur coefficient vector of f through the twisted
// orthogonality and reassembles with eigenvalues applied; used only to build
// the cached per-degree matrices.
std::vector<Scalar> nabla_column(DegreeData& de, const Partition& nu, bool inverse) {
  size_t np = de.rows_p.size();
  // s_nu[X(1-q)] in the p basis.
  SymFunc block = convert(SymFunc::schur(nu), Basis::p);
  SymFunc::CoeffMap tilted;
  for (const auto& [shape, c] : block.coeffs()) {
    Scalar factor = Scalar::one();
    for (int r : shape.parts()) factor *= Scalar::one() - q_pow(r);
    tilted.emplace(shape, c * factor);
  }
  SymFunc fq(Basis::p, std::move(tilted));

  std::vector<Scalar> out(np, Scalar::zero());
  std::map<Partition, int> index;
  const auto& parts = de.table->partitions();
  for (size_t i = 0; i < np; ++i) index.emplace(parts[i], static_cast<int>(i));
  for (size_t mi = 0; mi < np; ++mi) {
    Scalar u = hall_inner(de.dual[mi], fq) / de.dual_norm[mi];
    if (u.is_zero()) continue;
    Scalar scaled = inverse ? u / de.eigen[mi] : u * de.eigen[mi];
    for (const auto& [shape, c] : de.table->rows()[mi].coeffs())
      out[static_cast<size_t>(index.at(shape))] += scaled * c;
  }
  return out;
}

const Matrix& nabla_matrix(DegreeData& de, bool inverse) {
  std::lock_guard<std::mutex> lock(de.matrix_mutex);
  std::unique_ptr<Matrix>& slot = inverse ? de.nabla_inv_s : de.nabla_s;
  if (!slot) {
    const auto& parts = de.table->partitions();
    size_t np = parts.size();
    auto m = std::make_unique<Matrix>(np, std::vector<Scalar>(np));
    for (size_t nu = 0; nu < np; ++nu) {
      std::vector<Scalar> col = nabla_column(de, parts[nu], inverse);
      for (size_t l = 0; l < np; ++l) (*m)[l][nu] = std::move(col[l]);
    }
    slot = std::move(m);
  }
  return *slot;
}

SymFunc nabla_generic(const SymFunc& f, bool q1, bool inverse) {
  SymFunc acc(Basis::s);
  for (int d : f.degrees()) {
    DegreeData& de = MacdCache::instance().degree(d);
    const auto& parts = de.table->partitions();
    size_t np = parts.size();
    const Matrix& m = q1 ? de.nabla_q1_s : nabla_matrix(de, inverse);

    SymFunc block = convert(f.homogeneous_component(d), Basis::s);
    std::map<Partition, int> index;
    for (size_t i = 0; i < np; ++i) index.emplace(parts[i], static_cast<int>(i));
    std::vector<Scalar> v(np, Scalar::zero());
    for (const auto& [shape, c] : block.coeffs())
      v[static_cast<size_t>(index.at(shape))] = c;

    SymFunc::CoeffMap out;
    for (size_t l = 0; l < np; ++l) {
      Scalar x;
      for (size_t nu = 0; nu < np; ++nu)
        if (!v[nu].is_zero()) x += m[l][nu] * v[nu];
      if (!x.is_zero()) out.emplace(parts[l], std::move(x));
    }
    acc = acc + SymFunc(Basis::s, std::move(out));
  }
  return acc;
}

}  // namespace

std::shared_ptr<const MacdonaldTable> macd_basis(int n) {
  return MacdCache::instance().degree(n).table;
}

SymFunc nabla(const SymFunc& f) { return nabla_generic(f, false, false); }
SymFunc nabla_inv(const SymFunc& f) { return nabla_generic(f, false, true); }
SymFunc nabla_q1(const SymFunc& f) { return nabla_generic(f, true, false); }

SymFunc hall_littlewood_Qp(const Partition& lambda) {
  static std::map<std::vector<int>, SymFunc> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(lambda.parts());
  if (it != cache.end()) return it->second;

  SymFunc f = SymFunc::one();
  const auto& parts = lambda.parts();
  for (auto p = parts.rbegin(); p != parts.rend(); ++p) f = apply_H(*p, f);
  return cache.emplace(lambda.parts(), std::move(f)).first->second;
}

}  // namespace qtsym
