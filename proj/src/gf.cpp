#include "logtor/gf.hpp"

namespace logtor {

thread_local std::uint32_t FpScalar::p_ = 101;

std::uint32_t GFp::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t base = a % p_, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t GFp::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) throw std::domain_error("GFp: inverse of zero");
  return pow(a, p_ - 2);
}

std::optional<std::uint32_t> GFp::reduce(const Rational& q) const {
  Integer n = num(q) % p_, d = den(q) % p_;
  if (d == 0) return std::nullopt;
  std::uint32_t nn = static_cast<std::uint32_t>((n + p_) % p_);
  std::uint32_t dd = static_cast<std::uint32_t>(d);
  return mul(nn, inv(dd));
}

std::uint32_t MPolyModP::evaluate(const GFp& gf,
                                  const std::vector<std::vector<std::uint32_t>>& points) const {
  std::uint32_t acc = 0;
  for (const auto& [e, c] : terms) {
    std::uint32_t t = c;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < shape.factors(); ++i)
      for (std::size_t j = 0; j < shape.vars(i); ++j, ++pos)
        for (int rep = 0; rep < e[pos]; ++rep) t = gf.mul(t, points[i][j]);
    acc = gf.add(acc, t);
  }
  return acc;
}

std::optional<MPolyModP> reduce_mpoly(const MPoly& f, const GFp& gf) {
  MPolyModP out{f.shape(), f.degree(), {}};
  for (const auto& [e, c] : f.terms()) {
    auto r = gf.reduce(c);
    if (!r) return std::nullopt;
    if (*r != 0) out.terms.emplace_back(e, *r);
  }
  return out;
}

void for_each_projective_point(const GFp& gf, int n,
                               const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> pt(static_cast<std::size_t>(n) + 1, 0);
  // leading-one position k: coordinates before k are 0, coordinate k is 1
  for (int k = 0; k <= n; ++k) {
    pt.assign(static_cast<std::size_t>(n) + 1, 0);
    pt[static_cast<std::size_t>(k)] = 1;
    // odometer over the free coordinates k+1..n
    while (true) {
      visit(pt);
      int i = n;
      for (; i > k; --i) {
        if (++pt[static_cast<std::size_t>(i)] < gf.p()) break;
        pt[static_cast<std::size_t>(i)] = 0;
      }
      if (i == k) break;
    }
  }
}

long long projective_point_count(std::uint32_t p, int n) {
  if (n < 0) return 0;
  long long acc = 0, pw = 1;
  for (int i = 0; i <= n; ++i) {
    acc += pw;
    pw *= p;
  }
  return acc;
}

std::optional<long long> singular_count_p1xp1(const MPoly& f, std::uint32_t p) {
  if (f.shape() != Shape({1, 1})) throw ShapeMismatchError("singular_count_p1xp1 needs shape (1,1)");
  GFp gf(p);
  std::vector<MPolyModP> partials;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      auto r = reduce_mpoly(f.partial(i, j), gf);
      if (!r) return std::nullopt;
      partials.push_back(std::move(*r));
    }
  long long count = 0;
  std::vector<std::vector<std::uint32_t>> xs, ys;
  for_each_projective_point(gf, 1, [&](const std::vector<std::uint32_t>& pt) { xs.push_back(pt); });
  ys = xs;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      bool all_zero = true;
      for (const auto& d : partials)
        if (d.evaluate(gf, {x, y}) != 0) {
          all_zero = false;
          break;
        }
      if (all_zero) ++count;
    }
  return count;
}

namespace {

// Row-reduce in place, returning pivot columns.
std::vector<std::size_t> eliminate(const GFp& gf, std::vector<std::vector<std::uint32_t>>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::uint32_t inv = gf.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = gf.mul(m[r][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint32_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = gf.sub(m[i][j], gf.mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod_p(const GFp& gf, std::vector<std::vector<std::uint32_t>> m) {
  return eliminate(gf, m).size();
}

std::vector<std::vector<std::uint32_t>> kernel_mod_p(const GFp& gf,
                                                     const std::vector<std::vector<std::uint32_t>>& m_in) {
  auto m = m_in;
  auto pivots = eliminate(gf, m);
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = gf.neg(m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<IncidenceCensus> incidence_census(const GFp& gf,
                                                const std::vector<std::vector<std::uint32_t>>& covectors,
                                                int r) {
  const std::size_t m = covectors.size();
  if (m > 63) throw std::invalid_argument("incidence_census: too many hyperplanes for bitmask");
  IncidenceCensus census;
  auto canonical = [&](std::vector<std::uint32_t> pt) {
    std::size_t lead = 0;
    while (lead < pt.size() && pt[lead] == 0) ++lead;
    std::uint32_t inv = gf.inv(pt[lead]);
    for (auto& v : pt) v = gf.mul(v, inv);
    return pt;
  };
  auto dot = [&](const std::vector<std::uint32_t>& h, const std::vector<std::uint32_t>& z) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < h.size(); ++i) acc += static_cast<std::uint64_t>(h[i]) * z[i] % gf.p();
    return static_cast<std::uint32_t>(acc % gf.p());
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<std::vector<std::uint32_t>> pair{covectors[i], covectors[j]};
      if (rank_mod_p(gf, pair) < 2) return std::nullopt;  // bad reduction
      auto basis = kernel_mod_p(gf, {covectors[i], covectors[j]});
      // flat ~ P^(r-2): enumerate combinations of the kernel basis
      for_each_projective_point(gf, static_cast<int>(basis.size()) - 1,
                                [&](const std::vector<std::uint32_t>& combo) {
                                  std::vector<std::uint32_t> z(static_cast<std::size_t>(r) + 1, 0);
                                  for (std::size_t b = 0; b < basis.size(); ++b) {
                                    if (combo[b] == 0) continue;
                                    for (std::size_t t = 0; t <= static_cast<std::size_t>(r); ++t)
                                      z[t] = gf.add(z[t], gf.mul(combo[b], basis[b][t]));
                                  }
                                  auto key = canonical(std::move(z));
                                  auto it = census.points.find(key);
                                  if (it != census.points.end()) return;
                                  std::uint64_t mask = 0;
                                  for (std::size_t k = 0; k < m; ++k)
                                    if (dot(covectors[k], key) == 0) mask |= (1ULL << k);
                                  census.points.emplace(std::move(key), mask);
                                });
    }
  return census;
}

}  // namespace logtor
