#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rank2/fingroup.hpp"

namespace rank2 {

// A word in generators: +k is the k-th generator (1-based), -k its inverse.
using Word = std::vector<int>;

Word inverse_word(const Word& w);
// Free reduction and cyclic reduction.
Word free_reduce(const Word& w);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Throws ArgumentError if a relator letter is out of range.
  void validate() const;
  /// One relator per line, generator names joined by spaces, inverses as "x^-1".
  std::string to_text() const;
};

struct CosetOptions {
  // Every coset ever defined counts against the budget.
  std::size_t max_cosets = 100000;
};

/// The group defined by a presentation, found by Todd–Coxeter enumeration
/// over the trivial subgroup (HLT strategy). Group generator i is the image
/// of presentation generator i. Throws ResourceError when the budget is
/// exhausted; the group may then be infinite.
struct EnumeratedGroup {
  FinGroup group;
  std::vector<GElem> generator_images;
  std::size_t cosets_defined;
};
EnumeratedGroup enumerate_cosets(const Presentation& p, const CosetOptions& opts = {});

/// Evaluates a word in G, given images of the generators.
GElem evaluate_word(const FinGroup& g, const std::vector<GElem>& images, const Word& w);

}  // namespace rank2
