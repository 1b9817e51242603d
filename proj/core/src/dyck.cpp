#include "qtsym/dyck.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace qtsym {

DyckPath::DyckPath(std::vector<int> arm) : arm_(std::move(arm)) {
  if (arm_.empty()) throw std::invalid_argument("DyckPath: empty arm sequence");
  if (arm_[0] != 0) throw std::invalid_argument("DyckPath: a_1 must be 0");
  for (size_t i = 1; i < arm_.size(); ++i)
    if (arm_[i] < 0 || arm_[i] > arm_[i - 1] + 1)
      throw std::invalid_argument("DyckPath: need 0 <= a_{i+1} <= a_i + 1");
}

int DyckPath::area() const {
  int acc = 0;
  for (int a : arm_) acc += a;
  return acc;
}

int DyckPath::dinv() const {
  int acc = 0;
  for (size_t i = 0; i < arm_.size(); ++i)
    for (size_t j = i + 1; j < arm_.size(); ++j) {
      int d = arm_[i] - arm_[j];
      if (d == 0 || d == 1) ++acc;
    }
  return acc;
}

Composition DyckPath::touch() const {
  std::vector<int> zeros;
  for (size_t i = 0; i < arm_.size(); ++i)
    if (arm_[i] == 0) zeros.push_back(static_cast<int>(i));
  std::vector<int> parts;
  for (size_t k = 0; k < zeros.size(); ++k) {
    int next = (k + 1 < zeros.size()) ? zeros[k + 1] : static_cast<int>(arm_.size());
    parts.push_back(next - zeros[k]);
  }
  return Composition(std::move(parts));
}

std::string DyckPath::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < arm_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(arm_[i]);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const DyckPath& d) { return os << d.to_string(); }

bool path_leq(const DyckPath& a, const DyckPath& b) {
  if (a.size() != b.size()) throw std::invalid_argument("path_leq: sizes differ");
  for (int i = 0; i < a.size(); ++i)
    if (a.arm()[static_cast<size_t>(i)] > b.arm()[static_cast<size_t>(i)]) return false;
  return true;
}

DyckPath dp_of(const Composition& alpha) {
  std::vector<int> arm;
  arm.reserve(static_cast<size_t>(alpha.size()));
  for (int part : alpha.parts())
    for (int j = 0; j < part; ++j) arm.push_back(j);
  return DyckPath(std::move(arm));
}

int doff(const Composition& alpha, const DyckPath& d) {
  if (alpha.size() != d.size()) throw std::invalid_argument("doff: sizes differ");
  if (!refines(d.touch(), alpha))
    throw std::invalid_argument("doff: touch(D) does not refine alpha");
  int len = alpha.length();
  int acc = 0;
  int row = 0;
  for (int k = 0; k < len; ++k) {
    int zeros = 0;
    for (int j = 0; j < alpha.part(k); ++j, ++row)
      if (d.arm()[static_cast<size_t>(row)] == 0) ++zeros;
    acc += (len - 1 - k) * zeros;
  }
  return acc;
}

namespace {

// Depth-first arm extension; bound[i] >= 0 caps a_i, force_zero/forbid_zero
// encode touch constraints.  Candidates ascend, so emission is lexicographic.
void enumerate(int n, const std::vector<int>* bound, const std::vector<bool>* zero_forced,
               std::vector<int>& arm, std::vector<DyckPath>& out) {
  size_t i = arm.size();
  if (i == static_cast<size_t>(n)) {
    out.push_back(DyckPath(arm));
    return;
  }
  int hi = i == 0 ? 0 : arm[i - 1] + 1;
  if (bound) hi = std::min(hi, (*bound)[i]);
  int lo = 0;
  if (zero_forced) {
    if ((*zero_forced)[i]) hi = 0;
    else lo = 1;
  }
  for (int a = lo; a <= hi; ++a) {
    arm.push_back(a);
    enumerate(n, bound, zero_forced, arm, out);
    arm.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> all_paths(int n) {
  if (n < 1) throw std::invalid_argument("all_paths: n must be >= 1");
  std::vector<DyckPath> out;
  std::vector<int> arm;
  enumerate(n, nullptr, nullptr, arm, out);
  return out;
}

std::vector<DyckPath> paths_with_touch(const Composition& alpha) {
  int n = alpha.size();
  if (n < 1) throw std::invalid_argument("paths_with_touch: empty composition");
  std::vector<bool> zero_forced(static_cast<size_t>(n), false);
  int row = 0;
  for (int part : alpha.parts()) {
    zero_forced[static_cast<size_t>(row)] = true;
    row += part;
  }
  std::vector<DyckPath> out;
  std::vector<int> arm;
  enumerate(n, nullptr, &zero_forced, arm, out);
  return out;
}

std::vector<DyckPath> paths_below(const Composition& alpha) {
  int n = alpha.size();
  if (n < 1) throw std::invalid_argument("paths_below: empty composition");
  std::vector<int> bound = dp_of(alpha).arm();
  std::vector<DyckPath> out;
  std::vector<int> arm;
  enumerate(n, &bound, nullptr, arm, out);
  return out;
}

std::vector<Word> words_of(const DyckPath& d) {
  int n = d.size();
  std::vector<Word> out;
  Word w;
  std::function<void()> rec = [&] {
    size_t i = w.size();
    if (i == static_cast<size_t>(n)) {
      out.push_back(w);
      return;
    }
    int lo = 1;
    if (i > 0 && d.arm()[i - 1] < d.arm()[i]) lo = w[i - 1] + 1;
    for (int letter = lo; letter <= n; ++letter) {
      w.push_back(letter);
      rec();
      w.pop_back();
    }
  };
  rec();
  return out;
}

int dinv_word(const DyckPath& d, const Word& w) {
  int n = d.size();
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("dinv_word: word length mismatch");
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 1 || w[i] > n) throw std::invalid_argument("dinv_word: letter out of range");
    if (i > 0 && d.arm()[i - 1] < d.arm()[i] && !(w[i - 1] < w[i]))
      throw std::invalid_argument("dinv_word: word not compatible with the path");
  }
  int acc = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (d.arm()[i] == d.arm()[j] && w[i] < w[j]) ++acc;
      if (d.arm()[i] == d.arm()[j] + 1 && w[i] > w[j]) ++acc;
    }
  return acc;
}

Scalar comb_B_scalar(const Composition& alpha) {
  Scalar acc;
  for (const DyckPath& d : paths_below(alpha))
    acc += t_pow(d.area()) * q_pow(d.dinv() + doff(alpha, d));
  return acc;
}

Scalar comb_C_scalar(const Composition& alpha) {
  Scalar acc;
  for (const DyckPath& d : paths_with_touch(alpha))
    acc += t_pow(d.area()) * q_pow(d.dinv());
  return acc;
}

namespace {

void accumulate_words(const DyckPath& d, int extra_q, MonomialMap& acc) {
  int n = d.size();
  Scalar tfac = t_pow(d.area());
  for (const Word& w : words_of(d)) {
    std::vector<int> expo(static_cast<size_t>(n), 0);
    for (int letter : w) expo[static_cast<size_t>(letter - 1)]++;
    Scalar v = tfac * q_pow(dinv_word(d, w) + extra_q);
    auto [it, fresh] = acc.emplace(std::move(expo), v);
    if (!fresh) it->second += v;
  }
}

}  // namespace

MonomialMap comb_B_monomial(const Composition& alpha) {
  MonomialMap acc;
  for (const DyckPath& d : paths_below(alpha)) accumulate_words(d, doff(alpha, d), acc);
  return acc;
}

MonomialMap comb_C_monomial(const Composition& alpha) {
  MonomialMap acc;
  for (const DyckPath& d : paths_with_touch(alpha)) accumulate_words(d, 0, acc);
  return acc;
}

}  // namespace qtsym
