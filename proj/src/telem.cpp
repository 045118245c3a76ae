#include "rank2/telem.hpp"

#include <algorithm>

#include "rank2/envgroup.hpp"
#include "rank2/errors.hpp"
#include "rank2/quandle.hpp"

namespace rank2 {

namespace {

TStructure build() {
  TStructure t{groups::sl2_3(), {}, {}};
  auto f = find_quandle_embedding(catalog("(123)^{A4}"), t.sl23);
  if (!f) throw InvariantViolation("no embedding of (123)^A4 into SL(2,3)");
  t.x_images = *f;
  const auto q8 = commutator_subgroup(t.sl23);
  t.grade.assign(t.sl23.order(), -1);
  GElem power = 0;
  for (int k = 0; k < 3; ++k) {
    for (GElem y : q8) t.grade[t.sl23.mul(power, y)] = k;
    power = t.sl23.mul(power, t.x_images[0]);
  }
  if (std::count(t.grade.begin(), t.grade.end(), -1) != 0) throw InvariantViolation("SL(2,3) grading incomplete");
  for (GElem x : t.x_images)
    if (t.grade[x] != 1) throw InvariantViolation("SL(2,3) grading: generator not of degree 1");
  return t;
}

long mod3(long d) { return ((d % 3) + 3) % 3; }

}  // namespace

const TStructure& t_structure() {
  static const TStructure t = build();
  return t;
}

TElem TElem::make(long z_exp, long deg, GElem image) {
  const auto& t = t_structure();
  if (image < 0 || image >= t.sl23.order()) throw ArgumentError("TElem: image out of range");
  if (t.grade[image] != mod3(deg)) throw ArgumentError("TElem: image not in the component of its degree");
  return TElem{z_exp, deg, image};
}

TElem TElem::z() { return {1, 0, 0}; }

TElem TElem::x(int i) {
  if (i < 1 || i > 4) throw ArgumentError("TElem::x: index must be 1..4");
  return {0, 1, t_structure().x_images[i - 1]};
}

std::string TElem::to_string() const {
  return "z^" + std::to_string(z_exp) + " deg " + std::to_string(deg) + " " + t_structure().sl23.name(image);
}

TElem t_mul(const TElem& a, const TElem& b) {
  return {a.z_exp + b.z_exp, a.deg + b.deg, t_structure().sl23.mul(a.image, b.image)};
}

TElem t_inv(const TElem& a) { return {-a.z_exp, -a.deg, t_structure().sl23.inv(a.image)}; }

}  // namespace rank2
