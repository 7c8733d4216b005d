#include "idealkit/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "idealkit/simplex.hpp"

namespace idealkit {

bool MonomialIdeal::is_m_primary() const {
  for (int i = 0; i < dim; ++i)
    if (pure_power_bound(i) < 0) return false;
  return true;
}

int MonomialIdeal::pure_power_bound(int i) const {
  int best = -1;
  for (auto& g : gens) {
    if (g.degree() != g[i]) continue;  // pure power of x_i (or 1)
    if (best < 0 || g[i] < best) best = g[i];
  }
  return best;
}

bool MonomialIdeal::operator<(const MonomialIdeal& o) const {
  if (dim != o.dim) return dim < o.dim;
  auto lt = DegrevlexLess{};
  return std::lexicographical_compare(gens.begin(), gens.end(), o.gens.begin(),
                                      o.gens.end(), lt);
}

MonomialIdeal minimalize(int dim, std::vector<Monomial> gens) {
  if (gens.empty()) throw std::invalid_argument("empty generating set");
  std::vector<Monomial> keep;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < gens.size() && !dominated; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) &&
          (gens[i] != gens[j] || j < i))
        dominated = true;
    }
    if (!dominated) keep.push_back(gens[i]);
  }
  std::sort(keep.begin(), keep.end(), DegrevlexLess{});
  return MonomialIdeal{dim, std::move(keep)};
}

std::optional<long> colength(const MonomialIdeal& I) {
  if (!I.is_m_primary()) return std::nullopt;
  std::vector<int> bound(I.dim);
  for (int i = 0; i < I.dim; ++i) bound[i] = I.pure_power_bound(i);
  long count = 0;
  std::vector<int> v(I.dim, 0);
  std::function<void(int)> scan = [&](int pos) {
    if (pos == I.dim) {
      if (!I.contains(Monomial(v))) ++count;
      return;
    }
    for (v[pos] = 0; v[pos] < bound[pos]; ++v[pos]) scan(pos + 1);
    v[pos] = 0;
  };
  scan(0);
  return count;
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim != J.dim) throw std::invalid_argument("dimension mismatch");
  std::vector<Monomial> prods;
  for (auto& a : I.gens)
    for (auto& b : J.gens) prods.push_back(a * b);
  return minimalize(I.dim, std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& I, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  MonomialIdeal r = unit_ideal(I.dim);
  for (int k = 0; k < n; ++k) r = product(r, I);
  return r;
}

MonomialIdeal max_ideal(int dim) {
  std::vector<Monomial> g;
  for (int i = 0; i < dim; ++i) g.push_back(Monomial::var(dim, i));
  return minimalize(dim, std::move(g));
}

MonomialIdeal unit_ideal(int dim) {
  return MonomialIdeal{dim, {Monomial::one(dim)}};
}

int monomial_ord(const MonomialIdeal& I) {
  int s = -1;
  for (auto& g : I.gens) {
    int d = g.degree();
    if (s < 0 || d < s) s = d;
  }
  return s;
}

int monomial_loewy(const MonomialIdeal& I) {
  if (!I.is_m_primary()) throw std::invalid_argument("not m-primary");
  for (int n = 0;; ++n) {
    bool inside = true;
    for (auto& m : monomials_of_degree(I.dim, n))
      if (!I.contains(m)) { inside = false; break; }
    if (inside) return n;
  }
}

bool NewtonMembershipCertificate::verify(const MonomialIdeal& I) const {
  if (weights.size() != I.gens.size() || (int)slack.size() != I.dim)
    return false;
  Q total = 0;
  for (auto& w : weights) {
    if (w < 0) return false;
    total += w;
  }
  if (total != 1) return false;
  for (int j = 0; j < I.dim; ++j) {
    if (slack[j] < 0) return false;
    Q coord = 0;
    for (size_t i = 0; i < weights.size(); ++i)
      coord += weights[i] * I.gens[i][j];
    if (coord + slack[j] != point[j]) return false;
  }
  return true;
}

std::optional<NewtonMembershipCertificate> newton_member(
    const Monomial& v, const MonomialIdeal& I) {
  if (v.nvars() != I.dim) throw std::invalid_argument("dimension mismatch");
  const int k = static_cast<int>(I.gens.size());
  const int d = I.dim;
  // Variables: w_1..w_k (convex weights), s_1..s_d (slack).
  // Rows: sum w_i g_i[j] + s_j = v[j] for each j, and sum w_i = 1.
  std::vector<std::vector<Q>> A(d + 1, std::vector<Q>(k + d, Q(0)));
  std::vector<Q> b(d + 1);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < k; ++i) A[j][i] = I.gens[i][j];
    A[j][k + j] = 1;
    b[j] = v[j];
  }
  for (int i = 0; i < k; ++i) A[d][i] = 1;
  b[d] = 1;
  auto sol = solve_feasibility(A, b);
  if (!sol) return std::nullopt;
  NewtonMembershipCertificate cert;
  cert.point = v;
  cert.weights.assign(sol->begin(), sol->begin() + k);
  cert.slack.assign(sol->begin() + k, sol->end());
  if (!cert.verify(I)) throw std::logic_error("LP produced a bad certificate");
  return cert;
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
  if (!I.is_m_primary())
    throw std::invalid_argument("integral closure: ideal is not m-primary");
  // Any minimal closure generator is dominated by the pure-power box corner.
  std::vector<int> bound(I.dim);
  for (int i = 0; i < I.dim; ++i) bound[i] = I.pure_power_bound(i);
  std::vector<Monomial> members;
  std::vector<int> v(I.dim, 0);
  std::function<void(int)> scan = [&](int pos) {
    if (pos == I.dim) {
      Monomial m(v);
      if (I.contains(m) || newton_member(m, I))
        members.push_back(m);
      return;
    }
    for (v[pos] = 0; v[pos] <= bound[pos]; ++v[pos]) scan(pos + 1);
    v[pos] = 0;
  };
  scan(0);
  return minimalize(I.dim, std::move(members));
}

namespace {

struct Pt2 {
  Q x, y;
};

Q cross(const Pt2& o, const Pt2& a, const Pt2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Q hull_area(std::vector<Pt2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Pt2& a, const Pt2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Pt2& a, const Pt2& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  const int n = static_cast<int>(pts.size());
  if (n < 3) return Q(0);
  std::vector<Pt2> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (int i = n - 2, t = k + 1; i >= 0; --i) {  // upper
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  Q area = 0;
  for (size_t i = 0; i < h.size(); ++i) {
    auto& a = h[i];
    auto& b = h[(i + 1) % h.size()];
    area += a.x * b.y - b.x * a.y;
  }
  return abs(area) / 2;
}

Q volume2(const MonomialIdeal& I) {
  // Lower-left hull chain of the generators from (0,b) to (a,0); the
  // staircase region is the polygon it closes off with the origin.
  std::vector<Pt2> pts;
  for (auto& g : I.gens) pts.push_back(Pt2{Q(g[0]), Q(g[1])});
  std::sort(pts.begin(), pts.end(), [](const Pt2& a, const Pt2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<Pt2> chain;
  for (auto& p : pts) {
    while (chain.size() >= 2 &&
           cross(chain[chain.size() - 2], chain.back(), p) <= 0)
      chain.pop_back();
    chain.push_back(p);
  }
  std::vector<Pt2> poly;
  poly.push_back(Pt2{Q(0), Q(0)});
  for (auto& p : chain) poly.push_back(p);
  Q twice_area = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    auto& a = poly[i];
    auto& b = poly[(i + 1) % poly.size()];
    twice_area += a.x * b.y - b.x * a.y;
  }
  return abs(twice_area);  // 2! * area
}

struct Pt3 {
  Q x, y, z;
};

// vol(conv(pts)) by slicing along x.  Between consecutive vertex
// abscissae the slice combinatorics is fixed, so the cross-section area
// is a quadratic in x and Simpson's rule integrates it exactly.
Q convex_volume3(const std::vector<Pt3>& pts) {
  std::vector<Q> xs;
  for (auto& p : pts) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() < 2) return Q(0);

  auto slice_area = [&](const Q& t) {
    std::vector<Pt2> sec;
    for (auto& p : pts)
      if (p.x == t) sec.push_back(Pt2{p.y, p.z});
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        auto& a = pts[i];
        auto& b = pts[j];
        if ((a.x < t && b.x > t) || (a.x > t && b.x < t)) {
          Q lam = (t - a.x) / (b.x - a.x);
          sec.push_back(Pt2{a.y + lam * (b.y - a.y), a.z + lam * (b.z - a.z)});
        }
      }
    return hull_area(std::move(sec));
  };

  Q vol = 0;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    Q a = xs[i], b = xs[i + 1];
    Q mid = (a + b) / 2;
    vol += (b - a) * (slice_area(a) + 4 * slice_area(mid) + slice_area(b)) / 6;
  }
  return vol;
}

Q volume3(const MonomialIdeal& I) {
  Q B0(I.pure_power_bound(0)), B1(I.pure_power_bound(1)),
      B2(I.pure_power_bound(2));
  // NP intersected with the pure-power box is the hull of the corners
  // {g, B}^3 over the generators g (each g + orthant meets the box in
  // the sub-box [g, B]).
  std::vector<Pt3> pts;
  for (auto& g : I.gens) {
    Q gx(g[0]), gy(g[1]), gz(g[2]);
    for (int mask = 0; mask < 8; ++mask)
      pts.push_back(Pt3{(mask & 1) ? B0 : gx, (mask & 2) ? B1 : gy,
                        (mask & 4) ? B2 : gz});
  }
  Q inside = convex_volume3(pts);
  return 6 * (B0 * B1 * B2 - inside);
}

}  // namespace

Q normalized_volume(const MonomialIdeal& I) {
  if (!I.is_m_primary())
    throw std::invalid_argument("normalized volume: ideal is not m-primary");
  if (I.dim == 1) return Q(I.pure_power_bound(0));
  if (I.dim == 2) return volume2(I);
  if (I.dim == 3) return volume3(I);
  throw std::invalid_argument("normalized volume capped at 3 variables");
}

MonomialIdeal staircase_from_heights(const std::vector<int>& heights) {
  const int k = static_cast<int>(heights.size());
  for (int i = 0; i + 1 < k; ++i)
    if (heights[i] < heights[i + 1])
      throw std::invalid_argument("heights must be weakly decreasing");
  if (k && heights.back() < 1)
    throw std::invalid_argument("heights must be positive");
  std::vector<Monomial> gens;
  gens.push_back(Monomial(std::vector<int>{k, 0}));
  for (int i = 0; i < k; ++i) {
    if (i == 0 || heights[i] < heights[i - 1])
      gens.push_back(Monomial(std::vector<int>{i, heights[i]}));
  }
  if (k == 0) gens = {Monomial::one(2)};
  return minimalize(2, std::move(gens));
}

std::vector<int> heights_from_staircase(const MonomialIdeal& I) {
  if (I.dim != 2) throw std::invalid_argument("two variables only");
  int a = I.pure_power_bound(0);
  std::vector<int> h;
  for (int i = 0; i < a; ++i) {
    int y = 0;
    while (!I.contains(Monomial(std::vector<int>{i, y}))) ++y;
    h.push_back(y);
  }
  return h;
}

std::vector<MonomialIdeal> enumerate_integrally_closed(int d, int max_colength,
                                                       int cap) {
  if (d != 2)
    throw std::invalid_argument("enumeration supports 2 variables only");
  if (max_colength > cap)
    throw std::invalid_argument("max_colength exceeds configured cap");
  std::vector<MonomialIdeal> out;
  // Partitions of c as weakly decreasing height sequences, lexicographic.
  std::vector<int> h;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      MonomialIdeal I = staircase_from_heights(h);
      if (integral_closure(I) == I) out.push_back(I);
      return;
    }
    for (int part = std::min(remaining, maxpart); part >= 1; --part) {
      h.push_back(part);
      rec(remaining - part, part);
      h.pop_back();
    }
  };
  for (int c = 1; c <= max_colength; ++c) rec(c, c);
  return out;
}

}  // namespace idealkit
