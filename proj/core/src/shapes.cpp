#include "qtsym/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qtsym {

namespace {

std::vector<int> parse_bracket_list(std::string_view text, const char* what) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    throw std::invalid_argument(std::string(what) + ": expected '['");
  ++i;
  std::vector<int> parts;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw std::invalid_argument(std::string(what) + ": expected an integer");
      long v = std::stol(std::string(text.substr(start, i - start)));
      if (v <= 0 || v > 1'000'000)
        throw std::invalid_argument(std::string(what) + ": parts must be positive");
      parts.push_back(static_cast<int>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw std::invalid_argument(std::string(what) + ": expected ',' or ']'");
    }
  }
  skip_ws();
  if (i != text.size()) throw std::invalid_argument(std::string(what) + ": trailing input");
  return parts;
}

std::string render_bracket_list(const std::vector<int>& parts) {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  s += ']';
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be >= 1");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

Partition Partition::sorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (!parts_.empty()) {
    conj.resize(static_cast<size_t>(parts_[0]));
    for (size_t i = 0; i < conj.size(); ++i) {
      int count = 0;
      for (int p : parts_)
        if (p >= static_cast<int>(i) + 1) ++count;
      conj[i] = count;
    }
  }
  return Partition(std::move(conj));
}

int Partition::n_stat() const {
  int acc = 0;
  for (size_t i = 0; i < parts_.size(); ++i) acc += static_cast<int>(i) * parts_[i];
  return acc;
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::vector<int> Partition::multiplicity_vector() const {
  std::vector<int> m(static_cast<size_t>(size()), 0);
  for (int p : parts_) m[static_cast<size_t>(p - 1)]++;
  return m;
}

std::string Partition::to_string() const { return render_bracket_list(parts_); }

Partition Partition::parse(std::string_view text) {
  return Partition(parse_bracket_list(text, "Partition"));
}

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("Composition: parts must be >= 1");
}

Composition Composition::of(const Partition& p) {
  Composition c;
  c.parts_ = p.parts();
  return c;
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::n_stat() const {
  int acc = 0;
  for (size_t i = 0; i < parts_.size(); ++i) acc += static_cast<int>(i) * parts_[i];
  return acc;
}

std::set<int> Composition::descent_set() const {
  std::set<int> des;
  int sum = 0;
  for (size_t i = 0; i + 1 < parts_.size(); ++i) {
    sum += parts_[i];
    des.insert(sum);
  }
  return des;
}

std::uint64_t Composition::descent_mask() const {
  std::uint64_t mask = 0;
  int sum = 0;
  for (size_t i = 0; i + 1 < parts_.size(); ++i) {
    sum += parts_[i];
    mask |= std::uint64_t{1} << sum;
  }
  return mask;
}

Composition Composition::reversed() const {
  Composition c;
  c.parts_.assign(parts_.rbegin(), parts_.rend());
  return c;
}

Partition Composition::sorted() const { return Partition::sorted(parts_); }

std::string Composition::to_string() const { return render_bracket_list(parts_); }

Composition Composition::parse(std::string_view text) {
  return Composition(parse_bracket_list(text, "Composition"));
}

bool refines(const Composition& a, const Composition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("refines: sizes differ");
  std::uint64_t da = a.descent_mask(), db = b.descent_mask();
  return (db & ~da) == 0;
}

long m_stat(const Partition& p) {
  long acc = 0;
  for (int m : p.multiplicity_vector()) acc += static_cast<long>(m + 1) * m / 2;
  return acc;
}

long long z_mu(const Partition& p) {
  long long acc = 1;
  int n = p.size();
  for (int i = 1; i <= n; ++i) {
    int m = p.multiplicity(i);
    for (int j = 2; j <= m; ++j) acc *= j;
    for (int j = 0; j < m; ++j) acc *= i;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& stack,
                    std::optional<int> length, std::vector<Partition>& out) {
  if (remaining == 0) {
    if (!length || static_cast<int>(stack.size()) == *length)
      out.push_back(Partition(stack));
    return;
  }
  if (length && static_cast<int>(stack.size()) >= *length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    stack.push_back(p);
    gen_partitions(remaining - p, p, stack, length, out);
    stack.pop_back();
  }
}

void gen_compositions(int remaining, std::vector<int>& stack,
                      std::optional<int> length, std::vector<Composition>& out) {
  if (remaining == 0) {
    if (!length || static_cast<int>(stack.size()) == *length)
      out.push_back(Composition(stack));
    return;
  }
  if (length && static_cast<int>(stack.size()) >= *length) return;
  for (int p = 1; p <= remaining; ++p) {
    stack.push_back(p);
    gen_compositions(remaining - p, stack, length, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> length) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> stack;
  gen_partitions(n, n, stack, length, out);
  return out;
}

std::vector<Composition> compositions_of(int n, std::optional<int> length) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative n");
  std::vector<Composition> out;
  std::vector<int> stack;
  gen_compositions(n, stack, length, out);
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

long long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.to_string(); }

}  // namespace qtsym
