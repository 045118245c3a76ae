#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rank2 {

// One-line permutation of {1..n}: p[i-1] is the image of i.
using Perm = std::vector<int>;

namespace perm {

Perm identity(int n);
// (a*b)(x) = a(b(x)); b is applied first.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_permutation(const std::vector<int>& p);
int order(const Perm& p);
// Cycle lengths, sorted descending, fixed points included.
std::vector<int> cycle_type(const Perm& p);
// Parses "(243)", "(25)(34)", "id", "()" on n points. Multi-digit points
// need a separator: "(10 11 12)".
Perm parse_cycles(std::string_view text, int n);
std::string to_cycles(const Perm& p);

}  // namespace perm
}  // namespace rank2
