#include "pathdepth/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "pathdepth/gf_rank.hpp"

namespace pathdepth {

namespace {

bool face_order(std::uint32_t a, std::uint32_t b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

// Faces of a complex on the vertices listed in `verts`, given as a bitmap
// over local masks (bit i of a local mask <-> verts[i]).
std::vector<std::uint32_t> lift_faces(const std::vector<std::uint8_t>& local, std::span<const std::size_t> verts) {
  std::vector<std::uint32_t> faces;
  for (std::uint32_t lm = 0; lm < local.size(); ++lm) {
    if (!local[lm]) continue;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (lm & (1u << i)) mask |= 1u << verts[i];
    faces.push_back(mask);
  }
  return faces;
}

// A nonempty subset-closed family that is a cone over some vertex has no
// reduced homology.
bool is_cone(const std::vector<std::uint8_t>& local, std::size_t nverts) {
  for (std::size_t v = 0; v < nverts; ++v) {
    std::uint32_t bit = 1u << v;
    bool cone = true;
    for (std::uint32_t lm = 0; lm < local.size() && cone; ++lm)
      if (local[lm] && !(lm & bit) && !local[lm | bit]) cone = false;
    if (cone) return true;
  }
  return false;
}

std::size_t boundary_rank(std::span<const std::uint32_t> lower, std::span<const std::uint32_t> upper,
                          std::uint32_t p) {
  if (lower.empty() || upper.empty()) return 0;
  auto row_of = [&](std::uint32_t face) {
    auto it = std::lower_bound(lower.begin(), lower.end(), face);
    return static_cast<std::size_t>(it - lower.begin());
  };
  const std::int64_t minus_one = static_cast<std::int64_t>(p) - 1;
  if (upper.size() < kSparseColumnThreshold) {
    ModMatrix m = ModMatrix::Zero(static_cast<Eigen::Index>(lower.size()), static_cast<Eigen::Index>(upper.size()));
    for (std::size_t c = 0; c < upper.size(); ++c) {
      std::uint32_t f = upper[c];
      int pos = 0;
      for (std::uint32_t rest = f; rest; rest &= rest - 1, ++pos) {
        std::uint32_t bit = rest & (~rest + 1);
        m(static_cast<Eigen::Index>(row_of(f ^ bit)), static_cast<Eigen::Index>(c)) = (pos % 2 == 0) ? 1 : minus_one;
      }
    }
    return rank_mod_p(std::move(m), p);
  }
  // Sparse path stores the transpose: one row per upper face. Rank is unchanged.
  SparseModMatrix s;
  s.rows = upper.size();
  s.cols = lower.size();
  s.entries.resize(upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    std::uint32_t f = upper[c];
    int pos = 0;
    for (std::uint32_t rest = f; rest; rest &= rest - 1, ++pos) {
      std::uint32_t bit = rest & (~rest + 1);
      s.entries[c].emplace_back(static_cast<std::uint32_t>(row_of(f ^ bit)), (pos % 2 == 0) ? 1 : minus_one);
    }
  }
  return rank_mod_p(std::move(s), p);
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertices, std::vector<std::uint32_t> faces) : vertices_(vertices) {
  if (vertices > 31) throw std::invalid_argument("simplicial complex limited to 31 vertices");
  std::vector<std::uint32_t> closed;
  for (std::uint32_t f : faces) {
    if (vertices < 32 && (f >> vertices) != 0) throw std::invalid_argument("face uses a vertex out of range");
    // all submasks of f, including 0
    for (std::uint32_t sub = f;; sub = (sub - 1) & f) {
      closed.push_back(sub);
      if (sub == 0) break;
    }
  }
  std::sort(closed.begin(), closed.end(), face_order);
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  faces_ = std::move(closed);
}

bool SimplicialComplex::contains(std::uint32_t face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_order);
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -2;
  return std::popcount(faces_.back()) - 1;
}

std::vector<std::uint32_t> SimplicialComplex::facets() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f : faces_) {
    bool maximal = true;
    for (std::size_t v = 0; v < vertices_ && maximal; ++v) {
      std::uint32_t bit = 1u << v;
      if (!(f & bit) && contains(f | bit)) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (std::uint32_t face : faces_) {
    auto k = static_cast<std::size_t>(std::popcount(face));
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& a) {
  check_same_ambient(ideal.ambient(), a.ambient());
  auto supp = a.support();
  std::vector<std::uint32_t> faces;
  std::vector<Exponent> b(a.exponents().begin(), a.exponents().end());
  for (std::uint32_t lm = 0; lm < (1u << supp.size()); ++lm) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if (lm & (1u << i)) {
        --b[supp[i]];
        mask |= 1u << supp[i];
      }
    }
    if (ideal.contains(Monomial(b))) faces.push_back(mask);
    for (std::size_t i = 0; i < supp.size(); ++i)
      if (lm & (1u << i)) ++b[supp[i]];
  }
  return SimplicialComplex(ideal.ambient(), std::move(faces));
}

std::vector<int> reduced_homology_ranks(const SimplicialComplex& complex, std::uint32_t p) {
  if (complex.is_void()) return {};
  const int top = complex.dimension();
  // by_size[k] holds the faces with k vertices, i.e. dimension k-1.
  std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(top) + 2);
  for (std::uint32_t f : complex.faces()) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& v : by_size) std::sort(v.begin(), v.end());

  // rank[k] = rank of the boundary map from size-k faces to size-(k-1) faces.
  std::vector<std::size_t> rank(by_size.size() + 1, 0);
  for (std::size_t k = 1; k < by_size.size(); ++k) rank[k] = boundary_rank(by_size[k - 1], by_size[k], p);

  std::vector<int> out(by_size.size());
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    out[k] = static_cast<int>(by_size[k].size()) - static_cast<int>(rank[k]) - static_cast<int>(rank[k + 1]);
  }
  return out;
}

namespace {

struct Lattice {
  std::vector<std::size_t> points;  // box indices, ascending
};

// lcm of the generators dividing x^a, for every a in the box; a lies in the
// lcm lattice iff that lcm equals a.
Lattice build_lattice(const MembershipTable& table, std::size_t max_degrees) {
  const ExponentBox& box = table.box();
  const std::size_t n = box.dims();
  for (std::size_t i = 0; i < n; ++i)
    if (box.cap(i) > 255) throw BudgetExceeded("exponent above 255 in lcm lattice");
  std::vector<std::uint8_t> below(box.size() * n, 0);
  std::vector<std::uint8_t> has(box.size(), 0);
  Lattice lat;
  std::vector<Exponent> a(n, 0);
  std::size_t idx = 0;
  do {
    std::uint8_t* cur = &below[idx * n];
    if (table.is_generator(idx)) {
      for (std::size_t i = 0; i < n; ++i) cur[i] = static_cast<std::uint8_t>(a[i]);
      has[idx] = 1;
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        std::size_t prev = idx - box.stride(i);
        if (!has[prev]) continue;
        has[idx] = 1;
        const std::uint8_t* q = &below[prev * n];
        for (std::size_t j = 0; j < n; ++j) cur[j] = std::max(cur[j], q[j]);
      }
    }
    if (has[idx]) {
      bool equal = true;
      for (std::size_t i = 0; i < n && equal; ++i) equal = cur[i] == a[i];
      if (equal) {
        lat.points.push_back(idx);
        if (lat.points.size() > max_degrees) {
          throw BudgetExceeded("lcm lattice exceeds " + std::to_string(max_degrees) + " degrees");
        }
      }
    }
    ++idx;
  } while (box.next(a));
  return lat;
}

}  // namespace

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_degrees, std::size_t max_box) {
  if (ideal.is_unit() || ideal.is_zero()) return {};
  MembershipTable table(ideal, max_box);
  Lattice lat = build_lattice(table, max_degrees);
  std::vector<Monomial> out;
  out.reserve(lat.points.size());
  for (std::size_t idx : lat.points) out.emplace_back(table.box().point(idx));
  std::sort(out.begin(), out.end());
  return out;
}

DepthReport depth_quotient(const MonomialIdeal& ideal, const DepthOptions& options) {
  if (!is_prime(options.characteristic)) throw std::invalid_argument("characteristic must be prime");
  if (ideal.is_unit()) throw std::invalid_argument("depth of S/I needs a proper ideal");
  DepthReport report;
  const std::size_t n = ideal.ambient();
  report.ambient = n;
  report.characteristic = options.characteristic;
  if (ideal.is_zero()) {
    report.depth = static_cast<int>(n);
    report.projective_dimension = 0;
    return report;
  }
  if (n > 24) throw std::invalid_argument("depth_quotient supports at most 24 variables");

  try {
    MembershipTable table(ideal, options.box_budget);
    Lattice lat = build_lattice(table, options.lattice_budget);
    report.lattice_size = lat.points.size();
    const ExponentBox& box = table.box();

    int pd = 0;
    std::vector<std::size_t> supp;
    std::vector<std::uint8_t> local;
    for (std::size_t idx : lat.points) {
      supp.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (box.coord(idx, i) > 0) supp.push_back(i);
      const std::uint32_t subsets = 1u << supp.size();
      local.assign(subsets, 0);
      for (std::uint32_t lm = 0; lm < subsets; ++lm) {
        std::size_t sub = idx;
        for (std::size_t i = 0; i < supp.size(); ++i)
          if (lm & (1u << i)) sub -= box.stride(supp[i]);
        local[lm] = table.at(sub) ? 1 : 0;
      }
      if (is_cone(local, supp.size())) continue;
      SimplicialComplex k(n, lift_faces(local, supp));
      auto ranks = reduced_homology_ranks(k, options.characteristic);
      for (std::size_t j = 0; j < ranks.size(); ++j) {
        if (ranks[j] == 0) continue;
        // ranks[j] = dim H~_{j-1} = beta_{j,a}(I) = beta_{j+1,a}(S/I)
        int degree = static_cast<int>(j) + 1;
        report.betti.push_back({degree, box.point(idx), ranks[j]});
        pd = std::max(pd, degree);
      }
    }
    std::sort(report.betti.begin(), report.betti.end(), [](const BettiEntry& x, const BettiEntry& y) {
      return x.homological_degree != y.homological_degree ? x.homological_degree < y.homological_degree
                                                          : x.multidegree < y.multidegree;
    });
    report.projective_dimension = pd;
    report.depth = static_cast<int>(n) - pd;
  } catch (const BudgetExceeded& e) {
    report.note = e.what();
    report.betti.clear();
  }
  return report;
}

bool is_socle_witness(const MonomialIdeal& ideal, const Monomial& u) {
  if (ideal.contains(u)) return false;
  for (std::size_t i = 0; i < ideal.ambient(); ++i)
    if (!ideal.contains(u * Monomial::variable(ideal.ambient(), i))) return false;
  return true;
}

std::optional<Monomial> depth_zero_witness(const MonomialIdeal& ideal, const Monomial& bound,
                                           const std::optional<Monomial>& hint, std::size_t max_box) {
  check_same_ambient(ideal.ambient(), bound.ambient());
  if (ideal.is_unit()) return std::nullopt;
  if (ideal.is_zero()) return std::nullopt;
  if (hint && is_socle_witness(ideal, *hint)) return hint;

  MembershipTable table(ideal, max_box);
  const ExponentBox& box = table.box();
  const std::size_t n = ideal.ambient();
  // If u_i >= g_i then any generator dividing x_i u already divides u, so
  // witnesses live strictly below g in every coordinate.
  std::vector<Exponent> cap(n);
  for (std::size_t i = 0; i < n; ++i) {
    cap[i] = std::min(bound[i], box.cap(i) - 1);
    if (cap[i] < 0) return std::nullopt;
  }
  ExponentBox search(cap, max_box);
  std::vector<std::pair<int, std::size_t>> order;  // (degree, index in search box)
  std::vector<Exponent> u(n, 0);
  std::size_t sidx = 0;
  do {
    order.emplace_back(std::accumulate(u.begin(), u.end(), 0), sidx++);
  } while (search.next(u));
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto [deg, s] : order) {
    std::vector<Exponent> p = search.point(s);
    if (table.contains(p)) continue;
    bool socle = true;
    for (std::size_t i = 0; i < n && socle; ++i) {
      ++p[i];
      socle = table.contains(p);
      --p[i];
    }
    if (socle) return Monomial(std::move(p));
  }
  return std::nullopt;
}

std::optional<Monomial> depth_zero_witness(const MonomialIdeal& ideal, const std::optional<Monomial>& hint,
                                           std::size_t max_box) {
  if (ideal.is_unit() || ideal.is_zero()) return std::nullopt;
  return depth_zero_witness(ideal, generator_lcm(ideal), hint, max_box);
}

const char* to_string(DepthMethod method) {
  switch (method) {
    case DepthMethod::kBetti:
      return "betti";
    case DepthMethod::kWitness:
      return "witness";
    case DepthMethod::kClosedForm:
      return "closed-form";
  }
  return "?";
}

}  // namespace pathdepth
