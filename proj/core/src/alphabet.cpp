#include "qtsym/alphabet.hpp"

#include <stdexcept>

namespace qtsym {

struct Alphabet::Node {
  enum Kind { kX, kEps, kScalar, kAdd, kSub, kMul };
  int kind;
  Scalar value;  // for kScalar
  std::shared_ptr<const Node> lhs, rhs;
};

Alphabet Alphabet::X() {
  static const auto node =
      std::make_shared<const Node>(Node{Node::kX, Scalar(), nullptr, nullptr});
  return Alphabet(node);
}

Alphabet Alphabet::eps() {
  static const auto node =
      std::make_shared<const Node>(Node{Node::kEps, Scalar(), nullptr, nullptr});
  return Alphabet(node);
}

Alphabet Alphabet::scalar(Scalar value) {
  return Alphabet(std::make_shared<const Node>(
      Node{Node::kScalar, std::move(value), nullptr, nullptr}));
}

Alphabet Alphabet::combine(int kind, const Alphabet& a, const Alphabet& b) {
  return Alphabet(std::make_shared<const Node>(Node{kind, Scalar(), a.node_, b.node_}));
}

Alphabet operator+(const Alphabet& a, const Alphabet& b) {
  return Alphabet::combine(Alphabet::Node::kAdd, a, b);
}
Alphabet operator-(const Alphabet& a, const Alphabet& b) {
  return Alphabet::combine(Alphabet::Node::kSub, a, b);
}
Alphabet operator*(const Alphabet& a, const Alphabet& b) {
  return Alphabet::combine(Alphabet::Node::kMul, a, b);
}
Alphabet operator*(const Scalar& c, const Alphabet& a) { return Alphabet::scalar(c) * a; }

namespace {

SymFunc p_image_node(const Alphabet::Node& node, int r) {
  using Node = Alphabet::Node;
  switch (node.kind) {
    case Node::kX:
      return SymFunc::power(r);
    case Node::kEps:
      return SymFunc::one() * Scalar(r % 2 == 0 ? 1 : -1);
    case Node::kScalar:
      return SymFunc::one() *
             node.value.substitute(Scalar::q().pow(r), Scalar::t().pow(r), Scalar::z().pow(r));
    case Node::kAdd:
      return p_image_node(*node.lhs, r) + p_image_node(*node.rhs, r);
    case Node::kSub:
      return p_image_node(*node.lhs, r) - p_image_node(*node.rhs, r);
    case Node::kMul:
      return p_image_node(*node.lhs, r) * p_image_node(*node.rhs, r);
    default:
      throw std::logic_error("Alphabet: bad node");
  }
}

}  // namespace

SymFunc Alphabet::p_image(int r) const {
  if (r < 1) throw std::invalid_argument("Alphabet::p_image: r must be >= 1");
  return p_image_node(*node_, r);
}

SymFunc plethysm(const SymFunc& f, const Alphabet& a) {
  SymFunc fp = convert(f, Basis::p);
  SymFunc acc;
  for (const auto& [shape, c] : fp.coeffs()) {
    SymFunc term = SymFunc::one();
    for (int r : shape.parts()) term = term * a.p_image(r);
    acc = acc + term * c;
  }
  return acc;
}

}  // namespace qtsym
