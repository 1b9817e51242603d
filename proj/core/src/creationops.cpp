#include "qtsym/creationops.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "qtsym/alphabet.hpp"

namespace qtsym {

namespace {

// Cached p expansions of the skewing kernels, indexed by r.
class SkewKernels {
 public:
  enum class Kind { e_plain, e_one_minus_q, h_one_minus_q, e_one_minus_qinv };

  static const SymFunc& get(Kind kind, int r) {
    static SkewKernels cache;
    std::lock_guard<std::mutex> lock(cache.mutex_);
    auto& table = cache.tables_[static_cast<int>(kind)];
    auto it = table.find(r);
    if (it != table.end()) return it->second;
    return table.emplace(r, build(kind, r)).first->second;
  }

 private:
  static SymFunc build(Kind kind, int r) {
    switch (kind) {
      case Kind::e_plain:
        return convert(SymFunc::elementary(r), Basis::p);
      case Kind::e_one_minus_q:
        return plethysm(SymFunc::elementary(r),
                        (Alphabet::constant(1) - Alphabet::q()) * Alphabet::X());
      case Kind::h_one_minus_q:
        return plethysm(SymFunc::homogeneous(r),
                        Alphabet::X() * (Alphabet::constant(1) - Alphabet::q()));
      case Kind::e_one_minus_qinv:
        return plethysm(
            SymFunc::elementary(r),
            (Alphabet::constant(1) - Alphabet::scalar(Scalar::one() / Scalar::q())) *
                Alphabet::X());
    }
    throw std::logic_error("SkewKernels: bad kind");
  }

  std::map<int, SymFunc> tables_[4];
  std::mutex mutex_;
};

SymFunc h_times(int k, const SymFunc& f) {
  if (k < 0 || f.is_zero()) return SymFunc::zero();
  return multiply(SymFunc::homogeneous(k), f);
}

SymFunc e_times(int k, const SymFunc& f) {
  if (k < 0 || f.is_zero()) return SymFunc::zero();
  return multiply(SymFunc::elementary(k), f);
}

}  // namespace

SymFunc apply_H(int m, const SymFunc& f) {
  SymFunc fp = convert(f, Basis::p);
  int d = std::max(0, fp.degree());
  SymFunc acc;
  for (int r = 0; r <= d; ++r) {
    if (m + r < 0) continue;
    SymFunc skewed = skew(SkewKernels::get(SkewKernels::Kind::e_one_minus_q, r), fp);
    if (skewed.is_zero()) continue;
    SymFunc term = h_times(m + r, skewed);
    acc = (r % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

SymFunc apply_S(int m, const SymFunc& f) {
  SymFunc fp = convert(f, Basis::p);
  int d = std::max(0, fp.degree());
  SymFunc acc;
  for (int r = 0; r <= d; ++r) {
    if (m + r < 0) continue;
    SymFunc skewed = skew(SkewKernels::get(SkewKernels::Kind::e_plain, r), fp);
    if (skewed.is_zero()) continue;
    SymFunc term = h_times(m + r, skewed);
    acc = (r % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

SymFunc apply_B(int m, const SymFunc& f) {
  SymFunc fp = convert(f, Basis::p);
  int d = std::max(0, fp.degree());
  SymFunc acc;
  for (int r = 0; r <= d; ++r) {
    if (m + r < 0) continue;
    SymFunc skewed = skew(SkewKernels::get(SkewKernels::Kind::h_one_minus_q, r), fp);
    if (skewed.is_zero()) continue;
    SymFunc term = e_times(m + r, skewed);
    acc = (r % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

SymFunc apply_C(int m, const SymFunc& f) {
  SymFunc fp = convert(f, Basis::p);
  int d = std::max(0, fp.degree());
  SymFunc acc;
  for (int r = 0; r <= d; ++r) {
    if (m + r < 0) continue;
    SymFunc skewed = skew(SkewKernels::get(SkewKernels::Kind::h_one_minus_q, r), fp);
    if (skewed.is_zero()) continue;
    acc = acc + h_times(m + r, skewed) * q_pow(-r);
  }
  return acc * (-Scalar::one() / Scalar::q()).pow(m - 1);
}

SymFunc apply_C_alt(int m, const SymFunc& f) {
  SymFunc fp = convert(f, Basis::p);
  int d = std::max(0, fp.degree());
  SymFunc acc;
  for (int r = 0; r <= d; ++r) {
    if (m + r < 0) continue;
    SymFunc skewed = skew(SkewKernels::get(SkewKernels::Kind::e_one_minus_qinv, r), fp);
    if (skewed.is_zero()) continue;
    SymFunc term = h_times(m + r, skewed);
    acc = (r % 2 == 0) ? acc + term : acc - term;
  }
  return acc * (-Scalar::one() / Scalar::q()).pow(m - 1);
}

SymFunc apply(OperatorKind op, const SymFunc& f) {
  switch (op.tag) {
    case OperatorKind::Tag::H: return apply_H(op.index, f);
    case OperatorKind::Tag::S: return apply_S(op.index, f);
    case OperatorKind::Tag::B: return apply_B(op.index, f);
    case OperatorKind::Tag::C: return apply_C(op.index, f);
  }
  throw std::logic_error("apply: bad operator tag");
}

namespace {

class FamilyCache {
 public:
  static FamilyCache& instance() {
    static FamilyCache cache;
    return cache;
  }

  SymFunc b_family(const Composition& alpha) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = b_.find(alpha.parts());
      if (it != b_.end()) return it->second;
    }
    // alpha_1 acts first.
    SymFunc f = SymFunc::one();
    for (int part : alpha.parts()) f = apply_B(part, f);
    std::lock_guard<std::mutex> lock(mutex_);
    return b_.emplace(alpha.parts(), std::move(f)).first->second;
  }

  SymFunc c_family(const Composition& alpha) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = c_.find(alpha.parts());
      if (it != c_.end()) return it->second;
    }
    // alpha_l acts first.
    SymFunc f = SymFunc::one();
    const auto& parts = alpha.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) f = apply_C(*it, f);
    std::lock_guard<std::mutex> lock(mutex_);
    return c_.emplace(alpha.parts(), std::move(f)).first->second;
  }

 private:
  std::map<std::vector<int>, SymFunc> b_, c_;
  std::mutex mutex_;
};

}  // namespace

SymFunc build_B(const Composition& alpha) { return FamilyCache::instance().b_family(alpha); }
SymFunc build_C(const Composition& alpha) { return FamilyCache::instance().c_family(alpha); }

SymFunc E_nk(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("E_nk: require 1 <= k <= n");

  static std::map<int, std::vector<SymFunc>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    // e_n[X (1-z)/(1-q)], with z-degree components F_j.
    Scalar ratio = (Scalar::one() - Scalar::z()) / (Scalar::one() - Scalar::q());
    SymFunc expanded =
        plethysm(SymFunc::elementary(n), Alphabet::X() * Alphabet::scalar(ratio));

    std::vector<SymFunc> f_of_z(static_cast<size_t>(n + 1));
    for (const auto& [shape, c] : expanded.coeffs()) {
      std::vector<Scalar> zc = c.z_coefficients();
      for (size_t j = 0; j < zc.size(); ++j) {
        if (zc[j].is_zero()) continue;
        if (j > static_cast<size_t>(n)) throw std::logic_error("E_nk: z degree exceeds n");
        f_of_z[j] = f_of_z[j] + SymFunc::basis_element(Basis::p, shape) * zc[j];
      }
    }

    // M[j][k] = [z^j] (z;q)_k / (q;q)_k, upper triangular (zero for j > k).
    std::vector<std::vector<Scalar>> m(static_cast<size_t>(n + 1),
                                       std::vector<Scalar>(static_cast<size_t>(n + 1)));
    for (int kk = 0; kk <= n; ++kk) {
      Scalar denom = pochhammer(Scalar::q(), kk);
      std::vector<Scalar> zc = (pochhammer(Scalar::z(), kk) / denom).z_coefficients();
      for (size_t j = 0; j < zc.size(); ++j) m[j][static_cast<size_t>(kk)] = zc[j];
    }

    // Back substitution from k = n down to 0.
    std::vector<SymFunc> e(static_cast<size_t>(n + 1));
    for (int kk = n; kk >= 0; --kk) {
      SymFunc rhs = f_of_z[static_cast<size_t>(kk)];
      for (int kp = kk + 1; kp <= n; ++kp)
        rhs = rhs - e[static_cast<size_t>(kp)] * m[static_cast<size_t>(kk)][static_cast<size_t>(kp)];
      e[static_cast<size_t>(kk)] =
          rhs * (Scalar::one() / m[static_cast<size_t>(kk)][static_cast<size_t>(kk)]);
    }

    if (!e[0].is_zero()) throw std::logic_error("E_nk: nonzero k = 0 component");
    for (const SymFunc& piece : e)
      for (const auto& [shape, c] : piece.coeffs())
        if (c.depends_on(Var::z)) throw std::logic_error("E_nk: residual z dependence");

    it = cache.emplace(n, std::move(e)).first;
  }
  return it->second[static_cast<size_t>(k)];
}

}  // namespace qtsym
