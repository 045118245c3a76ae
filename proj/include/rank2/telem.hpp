#pragma once

#include <string>
#include <vector>

#include "rank2/fingroup.hpp"

namespace rank2 {

/// SL(2,3) together with the images of x_1..x_4 of the enveloping group of
/// (123)^{A4} and the Z/3 grading with deg π(x_i) = 1.
struct TStructure {
  FinGroup sl23;
  std::vector<GElem> x_images;  // x_images[i-1] = π(x_i)
  std::vector<int> grade;       // grade[s] in {0,1,2}
};
const TStructure& t_structure();

/// An element z^{z_exp} u of T = ⟨z⟩ × G_X, X = (123)^{A4}, stored as the
/// pair (deg u, π(u)). Faithful because ker π = ⟨x_1^3⟩ has nonzero degree.
struct TElem {
  long z_exp = 0;
  long deg = 0;
  GElem image = 0;

  /// Throws ArgumentError unless grade(image) ≡ deg (mod 3).
  static TElem make(long z_exp, long deg, GElem image);
  static TElem one() { return {}; }
  static TElem z();
  static TElem x(int i);  // 1 ≤ i ≤ 4

  std::string to_string() const;
  friend bool operator==(const TElem&, const TElem&) = default;
};

TElem t_mul(const TElem& a, const TElem& b);
TElem t_inv(const TElem& a);

}  // namespace rank2
