#include "logtor/mpoly.hpp"

#include <sstream>

namespace logtor {

namespace {

// Exponent vectors (e_0, ..., e_n) with sum = a, descending lexicographic.
void compositions(int a, int nvars, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == nvars - 1) {
    int rest = a;
    for (int v : cur) rest -= v;
    cur.push_back(rest);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  int used = 0;
  for (int v : cur) used += v;
  for (int e = a - used; e >= 0; --e) {
    cur.push_back(e);
    compositions(a, nvars, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> monomial_basis(const Shape& shape, const MultiDegree& degree) {
  if (shape.factors() != degree.size()) throw ShapeMismatchError("degree length does not match shape");
  for (std::size_t i = 0; i < degree.size(); ++i)
    if (degree[i] < 0) return {};
  std::vector<std::vector<std::vector<int>>> per_factor(shape.factors());
  for (std::size_t i = 0; i < shape.factors(); ++i) {
    std::vector<int> cur;
    compositions(degree[i], static_cast<int>(shape.vars(i)), cur, per_factor[i]);
  }
  std::vector<std::vector<int>> basis;
  std::vector<std::size_t> idx(shape.factors(), 0);
  while (true) {
    std::vector<int> mono;
    mono.reserve(shape.total_vars());
    for (std::size_t i = 0; i < shape.factors(); ++i)
      mono.insert(mono.end(), per_factor[i][idx[i]].begin(), per_factor[i][idx[i]].end());
    basis.push_back(std::move(mono));
    std::size_t i = shape.factors();
    while (i-- > 0) {
      if (++idx[i] < per_factor[i].size()) break;
      idx[i] = 0;
      if (i == 0) return basis;
    }
  }
}

std::size_t monomial_count(const Shape& shape, const MultiDegree& degree) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (degree[i] < 0) return 0;
    // C(n_i + a_i, n_i)
    std::size_t c = 1;
    for (int k = 1; k <= shape.dim(i); ++k)
      c = c * static_cast<std::size_t>(degree[i] + k) / static_cast<std::size_t>(k);
    total *= c;
  }
  return total;
}

}  // namespace logtor
