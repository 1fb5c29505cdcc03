#include "polyguard/arrangement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace polyguard {

RegionSide loop_side(const std::vector<Vec2>& loop, const Vec2& p) {
  int n = static_cast<int>(loop.size());
  for (int i = 0; i < n; ++i) {
    if (on_segment2(loop[i], loop[(i + 1) % n], p)) return RegionSide::Boundary;
  }
  // Crossing parity of the ray +x from p.
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    const Vec2& a = loop[i];
    const Vec2& b = loop[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      // x coordinate of the edge at height p.y
      Rational xc = a.x + (b.x - a.x) * (p.y - a.y) / (b.y - a.y);
      if (xc > p.x) inside = !inside;
    }
  }
  return inside ? RegionSide::Inside : RegionSide::Outside;
}

RegionSide region_side(const RegionPolygon& region, const Vec2& p) {
  RegionSide s = loop_side(region.outer, p);
  if (s != RegionSide::Inside) return s;
  for (const auto& h : region.holes) {
    RegionSide hs = loop_side(h, p);
    if (hs == RegionSide::Boundary) return RegionSide::Boundary;
    if (hs == RegionSide::Inside) return RegionSide::Outside;
  }
  return RegionSide::Inside;
}

namespace {

struct LineKey {
  Rational a, b, c;  // a x + b y = c, first nonzero of (a, b) scaled to 1
  bool operator==(const LineKey& o) const { return a == o.a && b == o.b && c == o.c; }
};
struct LineKeyHash {
  std::size_t operator()(const LineKey& k) const {
    std::size_t seed = hash_rational(k.a);
    hash_combine(seed, hash_rational(k.b));
    hash_combine(seed, hash_rational(k.c));
    return seed;
  }
};

LineKey line_of(const Vec2& p, const Vec2& q) {
  Rational a = q.y - p.y, b = p.x - q.x;
  Rational c = a * p.x + b * p.y;
  Rational s = a != 0 ? a : b;
  return LineKey{a / s, b / s, c / s};
}

struct LineData {
  Vec2 dir;                                       // direction along the line
  Vec2 base;                                      // a point on the line
  std::vector<std::pair<Rational, Rational>> iv;  // raw intervals (t0 < t1)
  std::vector<Rational> cuts;                     // endpoint/crossing params
};

struct VKey {
  Vec2 p;
  bool operator==(const VKey& o) const { return p == o.p; }
};
struct VKeyHash {
  std::size_t operator()(const VKey& k) const { return Vec2Hash{}(k.p); }
};

}  // namespace

Arrangement2D arrangement_2d(const std::vector<std::pair<Vec2, Vec2>>& segments,
                             const RegionPolygon& region) {
  if (region.outer.size() < 3) throw std::invalid_argument("arrangement region needs an outer loop");

  // Gather all segments: inputs plus region boundary. Degenerate inputs
  // become isolated points.
  std::vector<std::pair<Vec2, Vec2>> segs;
  std::vector<Vec2> isolated;
  auto add_loop = [&](const std::vector<Vec2>& loop) {
    int n = static_cast<int>(loop.size());
    for (int i = 0; i < n; ++i) segs.emplace_back(loop[i], loop[(i + 1) % n]);
  };
  add_loop(region.outer);
  for (const auto& h : region.holes) add_loop(h);
  for (const auto& s : segments) {
    if (s.first == s.second)
      isolated.push_back(s.first);
    else
      segs.push_back(s);
  }

  // Group by supporting line and merge collinear overlaps.
  std::unordered_map<LineKey, LineData, LineKeyHash> lines;
  for (const auto& s : segs) {
    LineKey key = line_of(s.first, s.second);
    auto& ld = lines[key];
    if (ld.iv.empty() && ld.cuts.empty()) {
      ld.dir = Vec2{-key.b, key.a};
      ld.base = s.first;
    }
    Rational t0 = dot2(s.first - ld.base, ld.dir);
    Rational t1 = dot2(s.second - ld.base, ld.dir);
    if (t0 > t1) std::swap(t0, t1);
    ld.iv.emplace_back(t0, t1);
    ld.cuts.push_back(t0);
    ld.cuts.push_back(t1);
  }

  // Union of intervals per line -> maximal chunks.
  struct Chunk {
    const LineData* ld;
    Rational t0, t1;
    std::vector<Rational> cuts;
    Vec2 at(const Rational& t) const { return ld->base + ld->dir * (t / sqnorm2(ld->dir)); }
  };
  std::vector<Chunk> chunks;
  for (auto& [key, ld] : lines) {
    std::sort(ld.iv.begin(), ld.iv.end(),
              [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
    Rational lo, hi;
    bool open = false;
    auto flush = [&]() {
      if (open) chunks.push_back(Chunk{&ld, lo, hi, {}});
      open = false;
    };
    for (const auto& [a, b] : ld.iv) {
      if (!open) {
        lo = a;
        hi = b;
        open = true;
      } else if (a <= hi) {
        if (b > hi) hi = b;
      } else {
        flush();
        lo = a;
        hi = b;
        open = true;
      }
    }
    flush();
    // Endpoint params subdivide the chunks they fall into.
    for (auto& ch : chunks) {
      if (ch.ld != &ld) continue;
      for (const auto& t : ld.cuts)
        if (t > ch.t0 && t < ch.t1) ch.cuts.push_back(t);
    }
  }

  // Note: at(t) above divides by |dir|^2 because t was measured with dot2.
  // Cross-line intersections.
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    for (std::size_t j = i + 1; j < chunks.size(); ++j) {
      Chunk &ca = chunks[i], &cb = chunks[j];
      if (ca.ld == cb.ld) continue;
      // Solve ca.line x cb.line.
      Vec2 pa = ca.at(ca.t0), qa = ca.at(ca.t1);
      Vec2 pb = cb.at(cb.t0), qb = cb.at(cb.t1);
      Vec2 da = qa - pa, db = qb - pb;
      Rational den = cross2(da, db);
      if (den == 0) continue;  // parallel distinct lines
      Rational s = cross2(pb - pa, db) / den;
      if (s < 0 || s > 1) continue;
      Vec2 x = pa + da * s;
      Rational tb = dot2(x - pb, db);
      if (tb < 0 || tb > sqnorm2(db)) continue;
      Rational ta_line = dot2(x - ca.ld->base, ca.ld->dir);
      Rational tb_line = dot2(x - cb.ld->base, cb.ld->dir);
      if (ta_line > ca.t0 && ta_line < ca.t1) ca.cuts.push_back(ta_line);
      if (tb_line > cb.t0 && tb_line < cb.t1) cb.cuts.push_back(tb_line);
    }
  }
  // Isolated points subdivide chunks they lie on.
  for (const auto& p : isolated) {
    for (auto& ch : chunks) {
      Vec2 a = ch.at(ch.t0), b = ch.at(ch.t1);
      if (on_segment2(a, b, p)) {
        Rational t = dot2(p - ch.ld->base, ch.ld->dir);
        if (t > ch.t0 && t < ch.t1) ch.cuts.push_back(t);
      }
    }
  }

  // Vertex table and final edges.
  std::unordered_map<VKey, int, VKeyHash> vid;
  std::vector<Vec2> verts;
  auto vertex = [&](const Vec2& p) {
    auto it = vid.find(VKey{p});
    if (it != vid.end()) return it->second;
    int id = static_cast<int>(verts.size());
    vid.emplace(VKey{p}, id);
    verts.push_back(p);
    return id;
  };
  std::vector<std::pair<int, int>> edges;
  for (auto& ch : chunks) {
    ch.cuts.push_back(ch.t0);
    ch.cuts.push_back(ch.t1);
    std::sort(ch.cuts.begin(), ch.cuts.end());
    ch.cuts.erase(std::unique(ch.cuts.begin(), ch.cuts.end()), ch.cuts.end());
    for (std::size_t k = 0; k + 1 < ch.cuts.size(); ++k) {
      int u = vertex(ch.at(ch.cuts[k]));
      int v = vertex(ch.at(ch.cuts[k + 1]));
      if (u != v) edges.emplace_back(u, v);
    }
  }
  for (const auto& p : isolated) vertex(p);

  // Half-edge structure. halfedge 2e = u->v, 2e+1 = v->u.
  int ne = static_cast<int>(edges.size());
  std::vector<std::vector<int>> out(verts.size());  // halfedge ids leaving each vertex
  auto he_src = [&](int h) { return h % 2 == 0 ? edges[h / 2].first : edges[h / 2].second; };
  auto he_dst = [&](int h) { return h % 2 == 0 ? edges[h / 2].second : edges[h / 2].first; };
  for (int e = 0; e < ne; ++e) {
    out[edges[e].first].push_back(2 * e);
    out[edges[e].second].push_back(2 * e + 1);
  }
  for (auto& lst : out) {
    std::sort(lst.begin(), lst.end(), [&](int h1, int h2) {
      Vec2 d1 = verts[he_dst(h1)] - verts[he_src(h1)];
      Vec2 d2 = verts[he_dst(h2)] - verts[he_src(h2)];
      return angle_less(d1, d2);
    });
  }
  // next(h): predecessor of twin(h) in CCW order around head(h).
  std::vector<int> nxt(2 * ne, -1);
  for (int h = 0; h < 2 * ne; ++h) {
    int v = he_dst(h);
    int twin = h ^ 1;
    const auto& lst = out[v];
    int pos = -1;
    for (std::size_t k = 0; k < lst.size(); ++k)
      if (lst[k] == twin) {
        pos = static_cast<int>(k);
        break;
      }
    nxt[h] = lst[(pos + lst.size() - 1) % lst.size()];
  }

  // Trace face loops.
  std::vector<int> loop_of(2 * ne, -1);
  std::vector<std::vector<int>> loops;  // vertex id sequences
  for (int h0 = 0; h0 < 2 * ne; ++h0) {
    if (loop_of[h0] != -1) continue;
    int id = static_cast<int>(loops.size());
    std::vector<int> cyc;
    int h = h0;
    do {
      loop_of[h] = id;
      cyc.push_back(he_src(h));
      h = nxt[h];
    } while (h != h0);
    loops.push_back(std::move(cyc));
  }

  auto loop_area2 = [&](const std::vector<int>& cyc) {
    Rational a(0);
    int n = static_cast<int>(cyc.size());
    for (int i = 0; i < n; ++i) a += cross2(verts[cyc[i]], verts[cyc[(i + 1) % n]]);
    return a;  // twice the signed area
  };

  // Strictly-inside test against a traced loop (by vertex ids).
  auto points_of = [&](const std::vector<int>& cyc) {
    std::vector<Vec2> ps;
    ps.reserve(cyc.size());
    for (int v : cyc) ps.push_back(verts[v]);
    return ps;
  };

  std::vector<std::vector<Vec2>> loop_pts;
  std::vector<Rational> loop_a2;
  for (const auto& cyc : loops) {
    loop_pts.push_back(points_of(cyc));
    loop_a2.push_back(loop_area2(cyc));
  }

  auto on_any_edge = [&](const Vec2& p) {
    for (const auto& e : edges)
      if (on_segment2(verts[e.first], verts[e.second], p)) return true;
    return false;
  };

  auto lexmin_index = [&](const std::vector<int>& cyc) {
    int best = 0;
    for (std::size_t k = 1; k < cyc.size(); ++k) {
      const Vec2 &a = verts[cyc[k]], &b = verts[cyc[best]];
      if (a.x < b.x || (a.x == b.x && a.y < b.y)) best = static_cast<int>(k);
    }
    return best;
  };

  // Interior sample of the cell whose outer boundary is loop li.
  auto cell_sample = [&](std::size_t li) -> Vec2 {
    const auto& cyc = loops[li];
    const auto& pts = loop_pts[li];
    int n = static_cast<int>(cyc.size());
    // Candidate: vertex average, accepted if provably inside this very cell.
    {
      Vec2 avg{Rational(0), Rational(0)};
      for (const auto& p : pts) avg = avg + p;
      avg = avg / Rational(n);
      if (loop_side(pts, avg) == RegionSide::Inside && !on_any_edge(avg)) {
        bool clean = true;
        for (std::size_t lj = 0; lj < loops.size() && clean; ++lj) {
          if (lj == li) continue;
          int mi = lexmin_index(loops[lj]);
          if (loop_side(pts, verts[loops[lj][mi]]) == RegionSide::Inside &&
              loop_side(loop_pts[lj], avg) == RegionSide::Inside)
            clean = false;
        }
        if (clean) return avg;
      }
    }
    // Wedge shrink at the lexicographically smallest vertex.
    int k = lexmin_index(cyc);
    const Vec2& v = pts[k];
    Vec2 u1 = pts[(k + 1) % n] - v;           // outgoing loop edge
    Vec2 u2 = pts[(k + n - 1) % n] - v;       // incoming, reversed
    auto linf = [](const Vec2& w) { return std::max(rat_abs(w.x), rat_abs(w.y)); };
    Vec2 d;
    if (cross2(u1, u2) > 0)
      d = u1 / linf(u1) + u2 / linf(u2);
    else  // straight-through vertex: interior is strictly to the left of u1
      d = Vec2{-u1.y, u1.x} / linf(u1);
    // Minimum squared distance from v to features not incident to v.
    Rational minsq(-1);
    for (const auto& e : edges) {
      if (verts[e.first] == v || verts[e.second] == v) continue;
      Rational d2 = sqdist_point_segment2(verts[e.first], verts[e.second], v);
      if (minsq < 0 || d2 < minsq) minsq = d2;
    }
    for (const auto& w : verts) {
      if (w == v) continue;
      Rational d2 = sqnorm2(w - v);
      if (minsq < 0 || d2 < minsq) minsq = d2;
    }
    if (minsq < 0) minsq = Rational(1);
    Rational dd = sqnorm2(d);
    Rational scale(1);
    while (dd * scale * scale >= minsq) scale /= 2;
    return v + d * scale;
  };

  Arrangement2D result;
  for (std::size_t li = 0; li < loops.size(); ++li) {
    if (loop_a2[li] <= 0) continue;  // holes and the unbounded face
    Vec2 s = cell_sample(li);
    RegionSide rs = region_side(region, s);
    if (rs == RegionSide::Outside) continue;
    if (rs == RegionSide::Boundary)
      throw std::logic_error("2-cell sample on region boundary");
    result.cells.push_back(ArrCell{2, s, false});
    ++result.count2;
  }
  for (const auto& e : edges) {
    Vec2 m = (verts[e.first] + verts[e.second]) / Rational(2);
    RegionSide rs = region_side(region, m);
    if (rs == RegionSide::Outside) continue;
    bool onb = rs == RegionSide::Boundary;
    result.cells.push_back(ArrCell{1, m, onb});
    if (!onb) ++result.count1;
  }
  for (const auto& v : verts) {
    RegionSide rs = region_side(region, v);
    if (rs == RegionSide::Outside) continue;
    bool onb = rs == RegionSide::Boundary;
    result.cells.push_back(ArrCell{0, v, onb});
    if (!onb) ++result.count0;
  }
  return result;
}

}  // namespace polyguard
