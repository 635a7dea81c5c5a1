// Exact planar curve engine on the square torus, used to derive the
// point-push automorphism tables.
//
// Model: the torus is R^2 modulo the lattice (4,0),(0,2).  Four punctures
// sit on the row y = 1 at x = 1/2, 3/2, 5/2, 7/2 (named p1, q1, p2, q2 in
// that order); the deck transformation of the degree-2 quotient is
// tau(x, y) = (x + 2, 2 - y).  The basepoint is * = (1/64, 1/64).
//
// Words are read off a cut system: the vertical lines x in 4Z (letter x,
// positive crossing eastward), the horizontal lines y in 2Z (letter y,
// positive northward, conjugated by the puncture loops west of the crossing
// within its strip), and one vertical slit above each puncture from (c, 1)
// to (c, 2) modulo the lattice (letter s_i, positive crossing westward).
// The complement of the cuts is a disc, so each crossing emits a fixed word
// and a curve's class is the product of its emissions in travel order.  The
// five-generator basis is x, y and the loops around the first three
// punctures; the loop around the fourth equals x y x^-1 y^-1 s1^-1 s2^-1
// s3^-1 by the boundary relation of the cut square.
//
// A Dehn twist along a simple closed curve d sends a transverse curve g to
// the curve that follows g and, at every crossing with d, inserts one copy
// of d based at the crossing point, directed by the crossing sign.  A point
// push along a simple loop through a marked point is the twist along one
// side push-off composed with the inverse twist along the other.  All
// arithmetic is exact rational and every computation asserts genericity:
// no tangencies, no contacts at endpoints or vertices, no coincident
// crossing parameters.

#pragma once

#include <cmath>
#include <numeric>
#include <optional>
#include <tuple>

#include "morphisms.hpp"

namespace fg::planar {

struct DegenerateGeometry : Error {
  using Error::Error;
};

// --- exact rationals ---------------------------------------------------------

struct Rat {
  long long n = 0;
  long long d = 1;

  Rat() = default;
  Rat(long long num) : n(num), d(1) {}
  Rat(long long num, long long den) : n(num), d(den) { normalize(); }

  void normalize() {
    if (d == 0) throw DegenerateGeometry("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.n * b.d + b.n * a.d, a.d * b.d); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.n * b.d - b.n * a.d, a.d * b.d); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.n * b.n, a.d * b.d); }
  friend Rat operator/(Rat a, Rat b) {
    if (b.n == 0) throw DegenerateGeometry("division by zero");
    return Rat(a.n * b.d, a.d * b.n);
  }
  friend Rat operator-(Rat a) { return Rat(-a.n, a.d); }

  friend bool operator==(Rat a, Rat b) { return a.n == b.n && a.d == b.d; }
  friend bool operator!=(Rat a, Rat b) { return !(a == b); }
  friend bool operator<(Rat a, Rat b) {
    return static_cast<__int128>(a.n) * b.d < static_cast<__int128>(b.n) * a.d;
  }
  friend bool operator<=(Rat a, Rat b) { return a < b || a == b; }
  friend bool operator>(Rat a, Rat b) { return b < a; }
  friend bool operator>=(Rat a, Rat b) { return b <= a; }

  double approx() const { return static_cast<double>(n) / static_cast<double>(d); }
  bool is_integer_multiple_of(long long k) const { return d == 1 && n % k == 0; }
};

struct Pt {
  Rat x, y;
  friend Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
  friend Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(Pt a, Pt b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(Pt a, Pt b) { return !(a == b); }
};

inline Rat cross(Pt a, Pt b) { return a.x * b.y - a.y * b.x; }

// An open polyline; closed on the torus when the endpoint differs from the
// start by a lattice vector.
struct Curve {
  std::vector<Pt> pts;

  size_t segments() const { return pts.empty() ? 0 : pts.size() - 1; }
  Pt seg_a(size_t i) const { return pts[i]; }
  Pt seg_b(size_t i) const { return pts[i + 1]; }

  bool closed_on_torus() const {
    if (pts.size() < 2) return false;
    Pt d = pts.back() - pts.front();
    return d.x.is_integer_multiple_of(4) && d.y.is_integer_multiple_of(2);
  }

  Curve translated(Rat dx, Rat dy) const {
    Curve c;
    for (Pt p : pts) c.pts.push_back({p.x + dx, p.y + dy});
    return c;
  }

  // The deck transformation of the degree-2 quotient.
  Curve deck_image() const {
    Curve c;
    for (Pt p : pts) c.pts.push_back({p.x + Rat(2), Rat(2) - p.y});
    return c;
  }

  Curve reversed() const {
    Curve c = *this;
    std::reverse(c.pts.begin(), c.pts.end());
    return c;
  }
};

// A position along a curve: segment index plus parameter within it.
struct CurvePos {
  size_t seg = 0;
  Rat t;
  friend bool operator<(const CurvePos& a, const CurvePos& b) {
    return a.seg != b.seg ? a.seg < b.seg : a.t < b.t;
  }
  friend bool operator==(const CurvePos& a, const CurvePos& b) {
    return a.seg == b.seg && a.t == b.t;
  }
};

// Proper interior intersection of two segments; endpoint contact and
// collinear overlap are degeneracies.
inline std::optional<std::pair<Rat, Rat>> segment_intersection(Pt a, Pt b, Pt c, Pt d) {
  Pt r = b - a, s = d - c;
  Rat denom = cross(r, s);
  if (denom == Rat(0)) {
    if (cross(c - a, r) == Rat(0)) {
      Rat len2 = r.x * r.x + r.y * r.y;
      Rat t0 = ((c - a).x * r.x + (c - a).y * r.y) / len2;
      Rat t1 = ((d - a).x * r.x + (d - a).y * r.y) / len2;
      if (t0 > t1) std::swap(t0, t1);
      if (t1 >= Rat(0) && t0 <= Rat(1)) throw DegenerateGeometry("collinear segment overlap");
    }
    return std::nullopt;
  }
  Rat t = cross(c - a, s) / denom;
  Rat u = cross(c - a, r) / denom;
  bool t_in = t > Rat(0) && t < Rat(1), u_in = u > Rat(0) && u < Rat(1);
  bool t_on = t >= Rat(0) && t <= Rat(1), u_on = u >= Rat(0) && u <= Rat(1);
  if (t_in && u_in) return std::make_pair(t, u);
  if (t_on && u_on) throw DegenerateGeometry("segment contact at an endpoint");
  return std::nullopt;
}

// --- the marked torus --------------------------------------------------------

class TorusModel {
 public:
  TorusModel()
      : formal_(make_alphabet({"x", "y", "s1", "s2", "s3", "s4"})),
        group_(make_alphabet({"x", "y", "s", "t", "u"})) {
    for (int i = 0; i < 4; ++i) punctures_[i] = Pt{Rat(1 + 2 * i, 2), Rat(1)};
    std::vector<Word> images;
    for (size_t g = 0; g < 5; ++g)
      images.emplace_back(group_, std::vector<Letter>{Letter::make(g, +1)});
    images.push_back(parse_word("x y x^-1 y^-1 s^-1 t^-1 u^-1", group_));
    formal_to_group_ = GenMap(formal_, group_, std::move(images));
    build_generator_curves();
  }

  const AlphabetRef& group() const { return group_; }
  Pt puncture(int i) const { return punctures_[i]; }
  Pt basepoint() const { return Pt{Rat(1, 64), Rat(1, 64)}; }
  const Curve& generator_curve(size_t g) const { return gen_curves_[g]; }
  const Word& fourth_puncture_loop() const { return formal_to_group_.image(5); }

  struct Event {
    CurvePos pos;
    std::vector<Letter> emission;  // formal letters
  };

  std::vector<Event> read_events(const Curve& c) const {
    std::vector<Event> events;
    for (size_t i = 0; i < c.segments(); ++i) segment_events(c.seg_a(i), c.seg_b(i), i, events);
    std::sort(events.begin(), events.end(),
              [](const Event& e1, const Event& e2) { return e1.pos < e2.pos; });
    for (size_t i = 0; i + 1 < events.size(); ++i)
      if (events[i].pos == events[i + 1].pos)
        throw DegenerateGeometry("coincident crossing parameters");
    return events;
  }

  Word read(const Curve& c) const {
    std::vector<Letter> formal;
    for (const auto& e : read_events(c))
      formal.insert(formal.end(), e.emission.begin(), e.emission.end());
    return apply(formal_to_group_, Word(formal_, std::move(formal)));
  }

  struct Crossing {
    CurvePos on_g;
    CurvePos on_d;
    int sign;  // sign of cross(dir_g, dir_d)
  };

  // All torus intersections of g with d: plane intersections of g against
  // every relevant lattice translate of d.  Positions on d refer to the
  // untranslated parametrization.
  std::vector<Crossing> torus_intersections(const Curve& g, const Curve& d) const {
    std::vector<Crossing> out;
    auto [gx0, gx1, gy0, gy1] = bbox(g);
    auto [dx0, dx1, dy0, dy1] = bbox(d);
    long long ax_lo = lattice_floor(gx0 - dx1, 4), ax_hi = lattice_ceil(gx1 - dx0, 4);
    long long ay_lo = lattice_floor(gy0 - dy1, 2), ay_hi = lattice_ceil(gy1 - dy0, 2);
    for (long long ax = ax_lo; ax <= ax_hi; ax += 4)
      for (long long ay = ay_lo; ay <= ay_hi; ay += 2) {
        Curve dt = d.translated(Rat(ax), Rat(ay));
        for (size_t i = 0; i < g.segments(); ++i)
          for (size_t j = 0; j < dt.segments(); ++j) {
            auto hit = segment_intersection(g.seg_a(i), g.seg_b(i), dt.seg_a(j), dt.seg_b(j));
            if (!hit) continue;
            Rat cr = cross(g.seg_b(i) - g.seg_a(i), dt.seg_b(j) - dt.seg_a(j));
            out.push_back({{i, hit->first}, {j, hit->second}, cr > Rat(0) ? +1 : -1});
          }
      }
    return out;
  }

  // Image of the basis under the twist along the simple closed curve d,
  // raised to power +1 or -1.
  GenMap twist(const Curve& d, int power) const {
    if (!d.closed_on_torus()) throw DegenerateGeometry("twist curve must be closed");
    std::vector<Event> devents = read_events(d);
    std::vector<Word> images;
    for (size_t g = 0; g < 5; ++g) {
      const Curve& gc = gen_curves_[g];
      std::vector<Event> events = read_events(gc);
      for (const Crossing& cr : torus_intersections(gc, d)) {
        std::vector<Letter> ins = rotation_word(devents, cr.on_d);
        if (cr.sign * power < 0) ins = invert_letters(ins);
        events.push_back({cr.on_g, std::move(ins)});
      }
      std::sort(events.begin(), events.end(),
                [](const Event& a, const Event& b) { return a.pos < b.pos; });
      for (size_t i = 0; i + 1 < events.size(); ++i)
        if (events[i].pos == events[i + 1].pos)
          throw DegenerateGeometry("crossing coincides with a cut event");
      std::vector<Letter> formal;
      for (const auto& e : events)
        formal.insert(formal.end(), e.emission.begin(), e.emission.end());
      images.push_back(apply(formal_to_group_, Word(formal_, std::move(formal))));
    }
    return GenMap(group_, group_, std::move(images));
  }

  // Push-offs of a simple closed curve at perpendicular distance between
  // dist and dist*sqrt(2); side +1 lies to the left of the travel direction.
  Curve offset(const Curve& c, int side, Rat dist) const {
    if (!c.closed_on_torus()) throw DegenerateGeometry("offset needs a closed curve");
    const size_t n = c.segments();
    Pt lattice = c.pts.back() - c.pts.front();
    std::vector<Pt> off(n);
    for (size_t i = 0; i < n; ++i) {
      Pt dir = c.seg_b(i) - c.seg_a(i);
      if (dir == Pt{Rat(0), Rat(0)}) throw DegenerateGeometry("zero-length segment");
      Pt normal{-dir.y * Rat(side), dir.x * Rat(side)};
      Rat m = std::max(normal.x < Rat(0) ? -normal.x : normal.x,
                       normal.y < Rat(0) ? -normal.y : normal.y);
      off[i] = {normal.x * dist / m, normal.y * dist / m};
    }
    auto join = [&](size_t i, size_t j, Pt shift_j) -> Pt {
      Pt ai = c.seg_a(i) + off[i], di = c.seg_b(i) - c.seg_a(i);
      Pt aj = c.seg_a(j) + off[j] + shift_j, dj = c.seg_b(j) - c.seg_a(j);
      Rat denom = cross(di, dj);
      if (denom == Rat(0)) {
        if (off[i] != off[j]) throw DegenerateGeometry("reversing collinear join");
        return c.seg_b(i) + off[i];
      }
      Rat t = cross(aj - ai, dj) / denom;
      return {ai.x + di.x * t, ai.y + di.y * t};
    };
    std::vector<Pt> pts(n + 1);
    pts[0] = join(n - 1, 0, lattice) - lattice;
    for (size_t i = 1; i < n; ++i) pts[i] = join(i - 1, i, Pt{});
    pts[n] = pts[0] + lattice;
    return normalize_closed(Curve{std::move(pts)}, lattice);
  }

  // Rotates a closed curve's start to a genuine corner and removes interior
  // vertices between collinear segments, so no segment is split at a point
  // that could sit on a cut.
  static Curve normalize_closed(Curve c, Pt lattice) {
    size_t n = c.segments();
    auto collinear_at = [&](size_t v) {
      // Vertex v (cyclic, 0 = closure point) between segment (v-1+n)%n and v.
      Pt din = c.seg_b((v + n - 1) % n) - c.seg_a((v + n - 1) % n);
      Pt dout = c.seg_b(v % n) - c.seg_a(v % n);
      if (cross(din, dout) != Rat(0)) return false;
      if (din.x * dout.x + din.y * dout.y <= Rat(0))
        throw DegenerateGeometry("curve doubles back on itself");
      return true;
    };
    if (collinear_at(0)) {
      size_t start = 0;
      for (size_t i = 1; i < n; ++i)
        if (!collinear_at(i)) {
          start = i;
          break;
        }
      if (start == 0) throw DegenerateGeometry("closed curve with no corner");
      std::vector<Pt> rotated(c.pts.begin() + start, c.pts.end());
      for (size_t i = 1; i <= start; ++i) rotated.push_back(c.pts[i] + lattice);
      c.pts = std::move(rotated);
      n = c.segments();
    }
    std::vector<Pt> out;
    out.push_back(c.pts[0]);
    for (size_t v = 1; v < n; ++v)
      if (!collinear_at(v)) out.push_back(c.pts[v]);
    out.push_back(c.pts[n]);
    return Curve{std::move(out)};
  }

  // Point push along a simple loop through one marked point: twist along the
  // left push-off times inverse twist along the right one.  This fixes which
  // of the two push directions the tables record.
  GenMap push(const Curve& loop) const {
    Rat d(1, 64);
    return compose(twist(offset(loop, +1, d), +1), twist(offset(loop, -1, d), -1));
  }
  GenMap push_inverse(const Curve& loop) const {
    Rat d(1, 64);
    return compose(twist(offset(loop, -1, d), +1), twist(offset(loop, +1, d), -1));
  }

  // Class of a closed curve as a loop based at *, transported along the
  // given connector path.
  Word read_based(const Curve& connector, const Curve& loop) const {
    if (connector.pts.back() != loop.pts.front())
      throw DegenerateGeometry("connector must end at the loop basepoint");
    Curve c;
    c.pts = connector.pts;
    Pt lattice = loop.pts.back() - loop.pts.front();
    c.pts.insert(c.pts.end(), loop.pts.begin() + 1, loop.pts.end());
    Curve back = connector.reversed().translated(lattice.x, lattice.y);
    c.pts.insert(c.pts.end(), back.pts.begin() + 1, back.pts.end());
    return read(c);
  }

 private:
  static std::vector<Letter> invert_letters(const std::vector<Letter>& w) {
    std::vector<Letter> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
  }

  static std::tuple<Rat, Rat, Rat, Rat> bbox(const Curve& c) {
    Rat x0 = c.pts[0].x, x1 = x0, y0 = c.pts[0].y, y1 = y0;
    for (Pt p : c.pts) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    return {x0, x1, y0, y1};
  }

  // Largest/smallest multiples of `step` below/above r; approximate bounds
  // are fine here because they only widen candidate ranges.
  static long long lattice_floor(Rat r, long long step) {
    return static_cast<long long>(std::floor(r.approx() / step) - 1) * step;
  }
  static long long lattice_ceil(Rat r, long long step) {
    return static_cast<long long>(std::ceil(r.approx() / step) + 1) * step;
  }

  static std::vector<Letter> rotation_word(const std::vector<Event>& devents,
                                           const CurvePos& start) {
    std::vector<Letter> out;
    for (const auto& e : devents)
      if (start < e.pos) out.insert(out.end(), e.emission.begin(), e.emission.end());
    for (const auto& e : devents) {
      if (e.pos == start) throw DegenerateGeometry("crossing at a cut event");
      if (!(start < e.pos)) out.insert(out.end(), e.emission.begin(), e.emission.end());
    }
    return out;
  }

  Letter F(size_t g, int s) const { return Letter::make(g, s); }

  void segment_events(Pt a, Pt b, size_t seg, std::vector<Event>& events) const {
    Pt d = b - a;
    if (d == Pt{Rat(0), Rat(0)}) throw DegenerateGeometry("zero-length segment");
    Rat x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
    Rat y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);

    // Vertical cut lines x = 4k.
    if (d.x == Rat(0)) {
      if (a.x.is_integer_multiple_of(4))
        throw DegenerateGeometry("vertical segment on a vertical cut");
    } else {
      for (long long k = lattice_floor(x0, 4); Rat(k) <= x1; k += 4) {
        Rat X(k);
        if (X < x0) continue;
        if (X == a.x || X == b.x) throw DegenerateGeometry("vertex on a vertical cut");
        events.push_back({{seg, (X - a.x) / d.x}, {F(0, d.x > Rat(0) ? +1 : -1)}});
      }
    }

    // Horizontal cut lines y = 2m, conjugated by the puncture loops west of
    // the crossing within its strip.
    if (d.y == Rat(0)) {
      if (a.y.is_integer_multiple_of(2))
        throw DegenerateGeometry("horizontal segment on a horizontal cut");
    } else {
      for (long long m = lattice_floor(y0, 2); Rat(m) <= y1; m += 2) {
        Rat Y(m);
        if (Y < y0) continue;
        if (Y == a.y || Y == b.y) throw DegenerateGeometry("vertex on a horizontal cut");
        Rat t = (Y - a.y) / d.y;
        Rat x_at = a.x + d.x * t;
        Rat xm = x_at - Rat(4 * static_cast<long long>(std::floor(x_at.approx() / 4)));
        while (xm < Rat(0)) xm = xm + Rat(4);
        while (xm >= Rat(4)) xm = xm - Rat(4);
        if (xm == Rat(0)) throw DegenerateGeometry("crossing at a lattice corner");
        int corridor = 0;
        for (int i = 0; i < 4; ++i) {
          if (xm == Rat(1 + 2 * i, 2)) throw DegenerateGeometry("crossing at a slit foot");
          if (Rat(1 + 2 * i, 2) < xm) corridor = i + 1;
        }
        std::vector<Letter> em;
        for (int i = corridor; i >= 1; --i) em.push_back(F(1 + i, +1));
        em.push_back(F(1, +1));
        if (d.y < Rat(0)) em = invert_letters(em);
        events.push_back({{seg, t}, std::move(em)});
      }
    }

    // Slits x = c_i + 4k, y in (1 + 2m, 2 + 2m); crossing westward is
    // positive.  The open bottom endpoint is the puncture, where pushing
    // loops are allowed to be based.
    for (int i = 0; i < 4; ++i) {
      Rat ci(1 + 2 * i, 2);
      if (d.x == Rat(0)) {
        Rat diff = a.x - ci;
        if (diff.is_integer_multiple_of(4)) {
          for (long long m = lattice_floor(y0, 2) - 2; Rat(1 + m) < y1; m += 2)
            if (y1 > Rat(1 + m) && y0 < Rat(2 + m))
              throw DegenerateGeometry("vertical segment inside a slit");
        }
        continue;
      }
      for (long long k = lattice_floor(x0 - ci, 4); ci + Rat(k) <= x1; k += 4) {
        Rat cx = ci + Rat(k);
        if (cx < x0) continue;
        Rat t = (cx - a.x) / d.x;
        if (t < Rat(0) || t > Rat(1)) continue;
        Rat y_at = a.y + d.y * t;
        long long mbase = 2 * static_cast<long long>(std::floor((y_at.approx() - 1) / 2));
        for (long long m = mbase - 2; m <= mbase + 2; m += 2) {
          Rat lo = Rat(1 + m), hi = Rat(2 + m);
          if (y_at <= lo || y_at >= hi) continue;
          if (t == Rat(0) || t == Rat(1))
            throw DegenerateGeometry("vertex inside a slit");
          events.push_back({{seg, t}, {F(2 + i, d.x < Rat(0) ? +1 : -1)}});
        }
      }
    }

    // No segment may pass through a puncture translate (basepoints of the
    // pushing loops sit at punctures and are exempt as segment endpoints).
    for (int i = 0; i < 4; ++i)
      for (long long k = -12; k <= 12; k += 4)
        for (long long m = -6; m <= 6; m += 2) {
          Pt p{Rat(1 + 2 * i, 2) + Rat(k), Rat(1 + m)};
          if (p == a || p == b) continue;
          if (cross(p - a, d) == Rat(0)) {
            Rat t = d.x != Rat(0) ? (p - a).x / d.x : (p - a).y / d.y;
            if (t > Rat(0) && t < Rat(1))
              throw DegenerateGeometry("segment passes through a puncture");
          }
        }
  }

  void build_generator_curves() {
    Pt base = basepoint();
    gen_curves_[0].pts = {base, base + Pt{Rat(4), Rat(0)}};
    gen_curves_[1].pts = {base, base + Pt{Rat(0), Rat(2)}};
    // Loops around the first three punctures: a thin-tailed balloon whose
    // counterclockwise square of radius 1/8 is entered on the south side.
    for (int i = 0; i < 3; ++i) {
      Rat c = puncture(i).x;
      Rat r(1, 8);
      gen_curves_[2 + i].pts = {base,
                                Pt{c - Rat(1, 32), Rat(1) - r},
                                Pt{c + r, Rat(1) - r},
                                Pt{c + r, Rat(1) + r},
                                Pt{c - r, Rat(1) + r},
                                Pt{c - r, Rat(1) - r},
                                Pt{c - Rat(1, 24), Rat(1) - r},
                                base};
    }
  }

  AlphabetRef formal_;
  AlphabetRef group_;
  GenMap formal_to_group_;
  Pt punctures_[4];
  Curve gen_curves_[5];
};

// --- the pushing loops -------------------------------------------------------
//
// The three loops through p1 lift the Schreier basis of the even subgroup of
// the base: a = (diagonal)(horizontal)^-1, b = horizontal^2, c =
// (horizontal)(diagonal), where the horizontal base loop passes south of the
// puncture q and the diagonal descends to the southeast.  Junctions at the
// other marked point are rounded on the side away from it.  The loops for
// p2 are the deck images of these.

inline Curve loop_p1_a() {
  auto R = [](long long n, long long d) { return Rat(n, d); };
  Curve c;
  c.pts = {{R(1, 2), Rat(1)},      {R(9, 8), R(1, 4)},     {R(11, 8), R(-1, 4)},
           {R(37, 16), R(-13, 16)}, {R(27, 16), R(-13, 16)}, {R(27, 16), R(-19, 16)},
           {R(21, 16), R(-19, 16)}, {R(21, 16), R(-13, 16)}, {R(9, 16), R(-13, 16)},
           {R(9, 16), R(-15, 16)},  {R(1, 2), Rat(-1)}};
  return c;
}

inline Curve loop_p1_b() {
  auto R = [](long long n, long long d) { return Rat(n, d); };
  Rat y1(1), lo = R(13, 16), hi = R(19, 16), w = R(3, 16);
  Curve c;
  c.pts = {{R(1, 2), y1}};
  auto detour_south = [&](Rat cx) {
    c.pts.push_back({cx - w, y1});
    c.pts.push_back({cx - w, lo});
    c.pts.push_back({cx + w, lo});
    c.pts.push_back({cx + w, y1});
  };
  detour_south(R(3, 2));
  detour_south(R(5, 2));
  c.pts.push_back({R(7, 2) - w, y1});
  c.pts.push_back({R(7, 2) - w, hi});
  c.pts.push_back({R(7, 2) + w, hi});
  c.pts.push_back({R(7, 2) + w, y1});
  c.pts.push_back({R(9, 2), y1});
  return c;
}

inline Curve loop_p1_c() {
  auto R = [](long long n, long long d) { return Rat(n, d); };
  Rat y1(1), lo = R(13, 16), w = R(3, 16);
  Curve c;
  c.pts = {{R(1, 2), y1}};
  c.pts.push_back({R(3, 2) - w, y1});
  c.pts.push_back({R(3, 2) - w, lo});
  c.pts.push_back({R(3, 2) + w, lo});
  c.pts.push_back({R(3, 2) + w, y1});
  c.pts.push_back({R(5, 2) - w, y1});
  c.pts.push_back({R(5, 2) - w, lo});
  c.pts.push_back({R(5, 2) + w, lo});
  c.pts.push_back({R(5, 2) + w, R(9, 8)});
  c.pts.push_back({R(13, 4), R(15, 8)});
  c.pts.push_back({R(9, 2), R(11, 4)});
  c.pts.push_back({R(9, 2), Rat(3)});
  return c;
}

// Connector from * to tau(*), clear of the punctures.
inline Curve deck_connector() {
  Curve c;
  c.pts = {{Rat(1, 64), Rat(1, 64)}, {Rat(2) + Rat(1, 64), Rat(2) - Rat(1, 64)}};
  return c;
}

}  // namespace fg::planar
