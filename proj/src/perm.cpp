#include "rank2/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "rank2/errors.hpp"

namespace rank2::perm {

Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i] - 1];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

bool is_permutation(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 1 || x > static_cast<int>(p.size()) || seen[x - 1]) return false;
    seen[x - 1] = 1;
  }
  return true;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> lens;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j] - 1) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

int order(const Perm& p) {
  int r = 1;
  for (int len : cycle_type(p)) r = std::lcm(r, len);
  return r;
}

Perm parse_cycles(std::string_view text, int n) {
  Perm p = identity(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos) == "id") return p;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw ArgumentError("cycle notation: expected '(' in \"" + std::string(text) + "\"");
    ++pos;
    std::vector<int> cycle;
    bool spaced = false;
    for (std::size_t k = pos; k < text.size() && text[k] != ')'; ++k)
      if (text[k] == ' ' || text[k] == ',') spaced = true;
    while (pos < text.size() && text[pos] != ')') {
      if (text[pos] == ' ' || text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ArgumentError("cycle notation: unexpected character in \"" + std::string(text) + "\"");
      int v = 0;
      if (spaced) {
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          v = v * 10 + (text[pos++] - '0');
      } else {
        v = text[pos++] - '0';
      }
      if (v < 1 || v > n) throw ArgumentError("cycle notation: point out of range in \"" + std::string(text) + "\"");
      cycle.push_back(v);
    }
    if (pos >= text.size()) throw ArgumentError("cycle notation: unterminated cycle");
    ++pos;
    // Disjointness from earlier cycles.
    for (int v : cycle)
      if (p[v - 1] != v) throw ArgumentError("cycle notation: cycles not disjoint");
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    if (!is_permutation(p)) throw ArgumentError("cycle notation: repeated point");
  }
  return p;
}

std::string to_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  const bool spaced = p.size() > 9;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i) + 1) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = p[j] - 1) {
      seen[j] = 1;
      if (spaced && !first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

}  // namespace rank2::perm
