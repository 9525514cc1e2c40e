#include "logtor/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace logtor {

namespace {

void enumerate_subsets(std::size_t m, std::size_t max_size, std::size_t from,
                       std::vector<std::size_t>& cur,
                       const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (!cur.empty() && !visit(cur)) return;  // visit returns false to stop deepening
  if (cur.size() == max_size) return;
  for (std::size_t i = from; i < m; ++i) {
    cur.push_back(i);
    enumerate_subsets(m, max_size, i + 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

HArrangement::HArrangement(int r, std::vector<Hyperplane> hyperplanes)
    : r_(r), hyperplanes_(std::move(hyperplanes)) {
  if (r_ < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (hyperplanes_.empty()) throw std::invalid_argument("arrangement needs at least one hyperplane");
  for (const auto& h : hyperplanes_)
    if (h.ambient_coords() != static_cast<std::size_t>(r_) + 1)
      throw ShapeMismatchError("hyperplane covector length does not match ambient dimension");
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
    for (std::size_t j = i + 1; j < hyperplanes_.size(); ++j)
      if (hyperplanes_[i] == hyperplanes_[j])
        throw std::invalid_argument("arrangement has a repeated hyperplane (indices " +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
}

Matrix HArrangement::covector_matrix(const std::vector<std::size_t>& subset) const {
  Matrix m(subset.size(), static_cast<std::size_t>(r_) + 1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const auto& h = hyperplanes_.at(subset[i]).h();
    for (std::size_t j = 0; j < h.size(); ++j) m(i, j) = h[j];
  }
  return m;
}

SncReport is_snc(const HArrangement& a) {
  SncReport report;
  const std::size_t cap = std::min<std::size_t>(a.size(), static_cast<std::size_t>(a.r()) + 1);
  std::vector<std::size_t> cur;
  enumerate_subsets(a.size(), cap, 0, cur, [&](const std::vector<std::size_t>& s) {
    if (!report.snc) return false;
    if (rank(a.covector_matrix(s)) < s.size()) {
      report.snc = false;
      report.witness = s;
      return false;
    }
    return true;
  });
  return report;
}

bool nc_outside_finite(const HArrangement& a) {
  if (a.r() < 3) throw AmbientTooSmallError("normal crossings outside finitely many points needs r >= 3");
  const int r = a.r();
  // Every positive-dimensional flat is cut out by an independent subset of at
  // most r-1 covectors, so visiting subsets up to that size sees every flat.
  bool ok = true;
  std::vector<std::size_t> cur;
  enumerate_subsets(a.size(), static_cast<std::size_t>(r - 1), 0, cur,
                    [&](const std::vector<std::size_t>& s) {
                      if (!ok) return false;
                      const int rho = static_cast<int>(rank(a.covector_matrix(s)));
                      const int dim = r - rho;
                      if (dim < 1 || dim > r - 2) return true;
                      // count all hyperplanes containing the flat cut out by s
                      int incident = 0;
                      for (std::size_t k = 0; k < a.size(); ++k) {
                        std::vector<std::size_t> ext = s;
                        if (std::find(ext.begin(), ext.end(), k) == ext.end()) ext.push_back(k);
                        if (static_cast<int>(rank(a.covector_matrix(ext))) == rho) ++incident;
                      }
                      if (incident > r - dim) {
                        ok = false;
                        return false;
                      }
                      return true;
                    });
  return ok;
}

std::vector<std::vector<Rational>> sigma_points(const HArrangement& a) {
  if (!nc_outside_finite(a))
    throw InfiniteLocusError("arrangement is not normal crossings outside finitely many points");
  const int r = a.r();
  std::set<std::vector<Rational>> found;
  std::vector<std::size_t> cur;
  // candidate points: intersections of rank-r subsets of size r
  enumerate_subsets(a.size(), static_cast<std::size_t>(r), 0, cur,
                    [&](const std::vector<std::size_t>& s) {
                      if (s.size() != static_cast<std::size_t>(r)) return true;
                      Matrix m = a.covector_matrix(s);
                      auto basis = kernel_basis(m);
                      if (basis.size() != 1) return true;  // rank < r: no isolated point
                      std::vector<Rational> pt = canonical_projective(basis[0]);
                      int incident = 0;
                      for (const auto& h : a.hyperplanes()) {
                        Rational dot(0);
                        for (std::size_t j = 0; j < pt.size(); ++j) dot += h.h()[j] * pt[j];
                        if (is_zero(dot)) ++incident;
                      }
                      if (incident >= r + 1) found.insert(std::move(pt));
                      return true;
                    });
  return {found.begin(), found.end()};
}

SectionConfig::SectionConfig(Quadric q, std::vector<Hyperplane> sections)
    : q_(std::move(q)), sections_(std::move(sections)) {
  if (sections_.empty()) throw std::invalid_argument("configuration needs at least one section");
  for (const auto& h : sections_)
    if (h.ambient_coords() != q_.matrix().rows())
      throw ShapeMismatchError("section hyperplane does not match the quadric ambient");
  for (std::size_t i = 0; i < sections_.size(); ++i)
    for (std::size_t j = i + 1; j < sections_.size(); ++j)
      if (sections_[i] == sections_[j])
        throw std::invalid_argument("configuration has a repeated section (indices " +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
}

bool is_tame(const SectionConfig& c) {
  std::vector<std::size_t> singular;
  for (std::size_t i = 0; i < c.sections().size(); ++i)
    if (!section_is_smooth(c.quadric(), c.sections()[i])) singular.push_back(i);
  if (!singular.empty()) {
    std::string idx;
    for (auto i : singular) idx += (idx.empty() ? "" : ", ") + std::to_string(i);
    throw SingularSectionError("sections are singular at indices " + idx);
  }
  HArrangement lifted(static_cast<int>(c.quadric().dim()) + 1, c.sections());
  return is_snc(lifted).snc;
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long acc = 1;
  for (long long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

long long torelli_threshold(const ThresholdQuery& q) {
  if (q.n < 1) throw std::invalid_argument("threshold: n >= 1 required");
  switch (q.variety) {
    case ThresholdQuery::Variety::Pn:
      return q.n + 3;
    case ThresholdQuery::Variety::Qn: {
      if (q.d < 1) throw std::invalid_argument("threshold: d >= 1 required");
      return binomial(q.n + 1 + q.d, q.n + 1) - binomial(q.n - 1 + q.d, q.n + 1) + 2;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace logtor
