#include "cartan/liealg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "cartan/error.hpp"
#include "cartan/ratspace.hpp"

namespace cartan {

namespace {

RationalVector unit(std::size_t dim, std::size_t i, const Rational& c = 1) {
  RationalVector v(dim);
  v[i] = c;
  return v;
}

RationalVector diff(std::size_t dim, std::size_t i, std::size_t j) {
  RationalVector v(dim);
  v[i] = 1;
  v[j] = -1;
  return v;
}

// Simple roots in Bourbaki order.
std::vector<RationalVector> bourbaki_simple_roots(SimpleType t, std::size_t& ambient) {
  const auto l = static_cast<std::size_t>(t.rank());
  std::vector<RationalVector> s;
  switch (t.series()) {
    case Series::A:
      ambient = l + 1;
      for (std::size_t i = 0; i < l; ++i) s.push_back(diff(ambient, i, i + 1));
      break;
    case Series::B:
      ambient = l;
      for (std::size_t i = 0; i + 1 < l; ++i) s.push_back(diff(ambient, i, i + 1));
      s.push_back(unit(ambient, l - 1));
      break;
    case Series::C:
      ambient = l;
      for (std::size_t i = 0; i + 1 < l; ++i) s.push_back(diff(ambient, i, i + 1));
      s.push_back(unit(ambient, l - 1, 2));
      break;
    case Series::D: {
      ambient = l;
      for (std::size_t i = 0; i + 1 < l; ++i) s.push_back(diff(ambient, i, i + 1));
      RationalVector last(ambient);
      last[l - 2] = 1;
      last[l - 1] = 1;
      s.push_back(last);
      break;
    }
    case Series::G: {
      ambient = 3;
      s.push_back(diff(3, 0, 1));
      s.push_back(RationalVector{-2, 1, 1});
      break;
    }
    case Series::F: {
      ambient = 4;
      const Rational h(1, 2);
      s.push_back(diff(4, 1, 2));
      s.push_back(diff(4, 2, 3));
      s.push_back(unit(4, 3));
      s.push_back(RationalVector{h, -h, -h, -h});
      break;
    }
    case Series::E: {
      ambient = 8;
      const Rational h(1, 2);
      std::vector<RationalVector> e8;
      e8.push_back(RationalVector{h, -h, -h, -h, -h, -h, -h, h});
      e8.push_back(RationalVector{1, 1, 0, 0, 0, 0, 0, 0});
      for (std::size_t i = 0; i < 6; ++i) e8.push_back(diff(8, i + 1, i));
      s.assign(e8.begin(), e8.begin() + static_cast<std::ptrdiff_t>(l));
      break;
    }
  }
  return s;
}

// VO label (0-based) -> Bourbaki label (0-based).
std::vector<std::size_t> vo_permutation(SimpleType t) {
  const auto l = static_cast<std::size_t>(t.rank());
  std::vector<std::size_t> p(l);
  for (std::size_t i = 0; i < l; ++i) p[i] = i;
  if (t.series() == Series::E && l == 6) p = {0, 2, 3, 4, 5, 1};
  if (t.series() == Series::E && l == 7) p = {6, 5, 4, 3, 2, 0, 1};
  if (t.series() == Series::E && l == 8) p = {7, 6, 5, 4, 3, 2, 0, 1};
  if (t.series() == Series::F) p = {3, 2, 1, 0};
  return p;
}

std::vector<RationalVector> inverse(std::vector<RationalVector> m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n);
    m[i][n + i] = 1;
  }
  const auto piv = row_reduce(m, 2 * n);
  if (piv.size() != n || piv.back() != n - 1) throw ContractError("singular matrix");
  for (auto& row : m) row.erase(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
  return m;
}

RationalVector scaled(const RationalVector& v, const Rational& c) {
  RationalVector w = v;
  for (auto& x : w) x *= c;
  return w;
}

}  // namespace

char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

bool valid_rank(Series series, int rank) {
  switch (series) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 3;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

SimpleType::SimpleType(Series series, int rank) : series_(series), rank_(rank) {
  if (!valid_rank(series, rank))
    throw ConstraintError(std::string("invalid rank ") + std::to_string(rank) + " for series " +
                          series_letter(series));
}

std::string SimpleType::name() const { return series_letter(series_) + std::to_string(rank_); }

int SimpleType::dimension() const {
  const int l = rank_;
  switch (series_) {
    case Series::A: return l * (l + 2);
    case Series::B: case Series::C: return l * (2 * l + 1);
    case Series::D: return l * (2 * l - 1);
    case Series::E: return l == 6 ? 78 : (l == 7 ? 133 : 248);
    case Series::F: return 52;
    case Series::G: return 14;
  }
  return 0;
}

RootSystem::RootSystem(SimpleType type) : type_(type) {
  const auto bourbaki = bourbaki_simple_roots(type, ambient_dim_);
  vo_to_bourbaki_ = vo_permutation(type);
  const auto l = static_cast<std::size_t>(type.rank());
  for (std::size_t i = 0; i < l; ++i) simple_.push_back(bourbaki[vo_to_bourbaki_[i]]);

  // Every root is Weyl-conjugate to a simple root.
  auto reflect = [](const RationalVector& v, const RationalVector& a) {
    RationalVector w = v;
    return axpy(w, -2 * dot(v, a) / dot(a, a), a);
  };
  std::set<RationalVector> seen(simple_.begin(), simple_.end());
  std::vector<RationalVector> frontier = simple_;
  while (!frontier.empty()) {
    std::vector<RationalVector> next;
    for (const auto& v : frontier)
      for (const auto& a : simple_) {
        auto w = reflect(v, a);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  roots_.assign(seen.begin(), seen.end());

  Rational longest = 0;
  for (const auto& r : roots_) longest = std::max(longest, Rational(dot(r, r)));
  scale_ = 2 / longest;

  cartan_.assign(l, std::vector<int>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      cartan_[i][j] = static_cast<int>(to_long(pairing(simple_[j], simple_[i])));

  // pi_i = sum_k M[i][k] alpha_k with M = (A^T)^{-1}.
  std::vector<RationalVector> at(l, RationalVector(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) at[i][j] = cartan_[j][i];
  const auto m = inverse(at);
  for (std::size_t i = 0; i < l; ++i) {
    RationalVector w(ambient_dim_);
    for (std::size_t k = 0; k < l; ++k) axpy(w, m[i][k], simple_[k]);
    fundamental_.push_back(std::move(w));
  }

  Rational best_height = -1;
  for (const auto& r : roots_) {
    const auto c = root_coords(r);
    if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; })) {
      positive_.push_back(r);
      Rational h = 0;
      for (const auto& x : c) h += x;
      if (h > best_height) {
        best_height = h;
        highest_ = r;
      }
    }
  }

  // -w0: drive pi_i to the antidominant chamber; the negative is pi_{i*}.
  dual_.resize(l);
  for (std::size_t i = 0; i < l; ++i) {
    RationalVector v = fundamental_[i];
    for (bool moved = true; moved;) {
      moved = false;
      for (const auto& a : simple_)
        if (dot(v, a) > 0) {
          v = reflect(v, a);
          moved = true;
        }
    }
    const auto neg = scaled(v, -1);
    const auto it = std::find(fundamental_.begin(), fundamental_.end(), neg);
    if (it == fundamental_.end()) throw ContractError("dual weight not fundamental");
    dual_[i] = static_cast<std::size_t>(it - fundamental_.begin());
  }
}

Rational RootSystem::form(const RationalVector& u, const RationalVector& v) const {
  return scale_ * dot(u, v);
}

Rational RootSystem::pairing(const RationalVector& u, const RationalVector& v) const {
  return 2 * dot(u, v) / dot(v, v);
}

bool RootSystem::is_long(const RationalVector& root) const { return form(root, root) == 2; }

RationalVector RootSystem::weight_vector(const RationalVector& coords) const {
  if (coords.size() != fundamental_.size()) throw DimensionError("weight of wrong length");
  RationalVector v(ambient_dim_);
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(v, coords[i], fundamental_[i]);
  return v;
}

RationalVector RootSystem::weight_coords(const RationalVector& v) const {
  RationalVector c(simple_.size());
  for (std::size_t i = 0; i < simple_.size(); ++i) c[i] = pairing(v, simple_[i]);
  return c;
}

RationalVector RootSystem::root_coords(const RationalVector& v) const {
  RationalVector c(simple_.size());
  for (std::size_t i = 0; i < simple_.size(); ++i)
    c[i] = 2 * dot(v, fundamental_[i]) / dot(simple_[i], simple_[i]);
  return c;
}

RootSystem build_root_system(SimpleType t) { return RootSystem(t); }

const RootSystem& root_system(SimpleType t) {
  static std::mutex mu;
  static std::map<SimpleType, std::unique_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, std::make_unique<const RootSystem>(t)).first;
  return *it->second;
}

Integer k_value(const RootSystem& rs) { return k_value(rs, rs.highest_root()); }

Integer k_value(const RootSystem& rs, const RationalVector& long_root) {
  if (!rs.is_long(long_root)) throw DomainError("k_value needs a long root");
  Rational s = 0;
  for (const auto& b : rs.roots()) {
    const auto p = rs.pairing(b, long_root);
    s += p * p;
  }
  return s.get_num();
}

Integer k_value_closed_form(SimpleType t) {
  const long l = t.rank();
  switch (t.series()) {
    case Series::A: return 4 * l + 4;
    case Series::B: return 8 * l - 4;
    case Series::C: return 4 * l + 4;
    case Series::D: return 8 * l - 8;
    case Series::E: return l == 6 ? 48 : (l == 7 ? 72 : 120);
    case Series::F: return 36;
    case Series::G: return 16;
  }
  return 0;
}

Integer weyl_dim(const RootSystem& rs, const RationalVector& lambda) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank()))
    throw DimensionError("weyl_dim: weight of wrong length");
  for (const auto& x : lambda)
    if (!is_integer(x) || x < 0) throw DomainError("weyl_dim: weight is not dominant integral");
  RationalVector shifted = lambda;
  for (auto& x : shifted) x += 1;
  const auto lr = rs.weight_vector(shifted);
  const auto rho = rs.weight_vector(RationalVector(lambda.size(), Rational(1)));
  Rational d = 1;
  for (const auto& b : rs.positive_roots()) d *= dot(lr, b) / dot(rho, b);
  if (!is_integer(d)) throw ContractError("Weyl dimension is not an integer");
  return d.get_num();
}

Rational casimir(const RootSystem& rs, const RationalVector& lambda) {
  const auto lv = rs.weight_vector(lambda);
  auto shifted = lv;
  axpy(shifted, 2, rs.weight_vector(RationalVector(lambda.size(), Rational(1))));
  return rs.form(lv, shifted);
}

Rational module_dynkin_index(const RootSystem& rs, const RationalVector& lambda) {
  const Rational dim_g = rs.type().dimension();
  return Rational(weyl_dim(rs, lambda)) * casimir(rs, lambda) / dim_g;
}

std::vector<std::vector<std::size_t>> diagram_automorphisms(const RootSystem& rs) {
  const auto& a = rs.cartan_matrix();
  const std::size_t l = a.size();
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> perm(l);
  std::vector<bool> used(l, false);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == l) {
      found.push_back(perm);
      return;
    }
    for (std::size_t c = 0; c < l; ++c) {
      if (used[c]) continue;
      bool ok = a[c][c] == a[i][i];
      for (std::size_t j = 0; ok && j < i; ++j)
        ok = a[perm[j]][c] == a[j][i] && a[c][perm[j]] == a[i][j];
      if (!ok) continue;
      used[c] = true;
      perm[i] = c;
      extend(i + 1);
      used[c] = false;
    }
  };
  extend(0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace cartan
