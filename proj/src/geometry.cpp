#include "geometry.hpp"

#include <array>
#include <cmath>

namespace kpoly {

using detail::PlacementNum;

CellPlacement neighbor_placement(int k, const CellPlacement& c, int d) {
  if (d < 0 || d >= 2 * k)
    throw BadSlotError("slot out of range");
  if ((d & 1) != (c.parity & 1))
    throw BadSlotError("slot parity does not match cell orientation");
  CellPlacement n;
  n.center = c.center + CycNum::unit(k, d);
  n.parity = (c.parity + k) & 1;
  return n;
}

int discrete_angle(int k, int d1, int d2) {
  if (d1 < 0 || d1 >= 2 * k || d2 < 0 || d2 >= 2 * k)
    throw BadSlotError("slot out of range");
  if (d1 == d2) throw BadSlotError("slots must differ");
  if (((d1 ^ d2) & 1) != 0) throw BadSlotError("slots of unequal parity");
  int diff = std::abs(d1 - d2);
  return std::min(diff, 2 * k - diff) / 2;
}

bool chain3_admissible(int k, int delta) { return delta >= (k + 5) / 6; }

bool chain3_touching(int k) { return k % 6 == 0; }

bool chain4_admissible(int k, int delta1, int delta2) {
  return delta1 + delta2 >= (k + 1) / 2;
}

bool chain4_closes_cycle(int k, int delta1, int delta2) {
  return k % 2 == 0 && delta1 + delta2 == k / 2;
}

namespace {

// 2cos(pi/k) * c as a ring element (the positive scale that turns vertex
// coordinates into ring elements).
CycNum scaled_center(const CycNum& c) {
  return c.shifted(1) + c.shifted(2 * c.k() - 1);
}

// Projection of a scaled point z onto direction zeta^d, doubled:
// z*zeta^-d + conj(z*zeta^-d). Real by construction.
CycNum proj_elem(const CycNum& scaled, int d) {
  CycNum w = scaled.shifted(-d);
  return w + w.conj();
}

// 2cos(pi*t/k) as a ring element, 0 <= t <= k.
CycNum off_elem(int k, int t) {
  CycNum r(k);
  if (t == 0) {
    r.coeff(0) = 2;
  } else if (t == k) {
    r.coeff(0) = -2;
  } else {
    r.add_unit(t);
    r.add_unit(2 * k - t);
  }
  return r;
}

// Slot distance from axis d to the nearest vertex slot of a cell with the
// given parity (vertices sit at slots of parity parity+1).
int vertex_near_dist(int d, int parity) {
  return ((d ^ (parity + 1)) & 1) == 0 ? 0 : 1;
}
int vertex_far_dist(int k, int t_near) { return k - ((k - t_near) & 1); }

double pair_err(int k, const PlacementNum& an, const PlacementNum& bn) {
  return (an.sum_abs + bn.sum_abs + 8.0) * (k + 16.0) * std::ldexp(1.0, -46);
}

enum class SatOutcome { Strict, Touch, Overlap };

// Separating-axis scan over the <= k distinct edge-normal lines of the two
// cells. Numeric gaps are trusted only outside the certified error margin;
// ambiguous comparisons are settled exactly in the ring.
SatOutcome sat_scan(int k, const CellPlacement& a, const PlacementNum& an,
                    const CellPlacement& b, const PlacementNum& bn, double err) {
  const auto& tab = detail::slot_tables(k);
  const double g4 = 4.0 * std::cos(M_PI / k);
  bool saw_touch = false;
  bool have_exact = false;
  CycNum sa, sb;

  for (int d = 0; d < k; ++d) {
    bool axis_of_a = (k % 2 == 1) || ((d & 1) == (a.parity & 1));
    bool axis_of_b = (k % 2 == 1) || ((d & 1) == (b.parity & 1));
    if (!axis_of_a && !axis_of_b) continue;

    double pa = g4 * (an.z.real() * tab.cs[d] + an.z.imag() * tab.sn[d]);
    double pb = g4 * (bn.z.real() * tab.cs[d] + bn.z.imag() * tab.sn[d]);
    int ta_n = vertex_near_dist(d, a.parity), ta_f = vertex_far_dist(k, ta_n);
    int tb_n = vertex_near_dist(d, b.parity), tb_f = vertex_far_dist(k, tb_n);
    double a_hi = pa + 2.0 * tab.cs[ta_n], a_lo = pa + 2.0 * tab.cs[ta_f];
    double b_hi = pb + 2.0 * tab.cs[tb_n], b_lo = pb + 2.0 * tab.cs[tb_f];

    double gap1 = b_lo - a_hi;  // b beyond a along +zeta^d
    double gap2 = a_lo - b_hi;  // a beyond b
    if (gap1 > err || gap2 > err) return SatOutcome::Strict;
    if (gap1 < -err && gap2 < -err) continue;  // certified overlap on this axis

    if (!have_exact) {
      sa = scaled_center(a.center);
      sb = scaled_center(b.center);
      have_exact = true;
    }
    if (gap1 >= -err) {
      CycNum g = proj_elem(sb, d) + off_elem(k, tb_f) - proj_elem(sa, d) -
                 off_elem(k, ta_n);
      int s = detail::sign_real_unchecked(g);
      if (s > 0) return SatOutcome::Strict;
      if (s == 0) {
        saw_touch = true;
        continue;
      }
    }
    if (gap2 >= -err) {
      CycNum g = proj_elem(sa, d) + off_elem(k, ta_f) - proj_elem(sb, d) -
                 off_elem(k, tb_n);
      int s = detail::sign_real_unchecked(g);
      if (s > 0) return SatOutcome::Strict;
      if (s == 0) saw_touch = true;
    }
  }
  return saw_touch ? SatOutcome::Touch : SatOutcome::Overlap;
}

int orient_exact(const CycNum& p, const CycNum& q, const CycNum& r) {
  CycNum u = q - p, v = r - p;
  return sign_imag(u.conj() * v);
}

bool on_segment_exact(const CycNum& p, const CycNum& q, const CycNum& r) {
  // r collinear with pq: is it within the segment?
  CycNum u = q - p, v = r - p;
  CycNum dot = u.conj() * v + v.conj() * u;
  if (detail::sign_real_unchecked(dot) < 0) return false;
  CycNum nn = u.conj() * u;
  nn += nn;
  return detail::sign_real_unchecked(dot - nn) <= 0;
}

struct SegPoint {
  CycNum exact;
  std::complex<double> z;
};

int orient_filtered(const SegPoint& p, const SegPoint& q, const SegPoint& r,
                    double coord_err) {
  double ux = q.z.real() - p.z.real(), uy = q.z.imag() - p.z.imag();
  double vx = r.z.real() - p.z.real(), vy = r.z.imag() - p.z.imag();
  double cross = ux * vy - uy * vx;
  double m = std::abs(ux) + std::abs(uy) + std::abs(vx) + std::abs(vy) + 1.0;
  double bound = 8.0 * m * (coord_err + m * std::ldexp(1.0, -50));
  if (cross > bound) return 1;
  if (cross < -bound) return -1;
  return orient_exact(p.exact, q.exact, r.exact);
}

bool segments_meet(const SegPoint& a1, const SegPoint& a2, const SegPoint& b1,
                   const SegPoint& b2, double coord_err) {
  double alox = std::min(a1.z.real(), a2.z.real()) - coord_err;
  double ahix = std::max(a1.z.real(), a2.z.real()) + coord_err;
  double aloy = std::min(a1.z.imag(), a2.z.imag()) - coord_err;
  double ahiy = std::max(a1.z.imag(), a2.z.imag()) + coord_err;
  double blox = std::min(b1.z.real(), b2.z.real()) - coord_err;
  double bhix = std::max(b1.z.real(), b2.z.real()) + coord_err;
  double bloy = std::min(b1.z.imag(), b2.z.imag()) - coord_err;
  double bhiy = std::max(b1.z.imag(), b2.z.imag()) + coord_err;
  if (ahix < blox || bhix < alox || ahiy < bloy || bhiy < aloy) return false;

  int d1 = orient_filtered(b1, b2, a1, coord_err);
  int d2 = orient_filtered(b1, b2, a2, coord_err);
  int d3 = orient_filtered(a1, a2, b1, coord_err);
  int d4 = orient_filtered(a1, a2, b2, coord_err);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment_exact(b1.exact, b2.exact, a1.exact)) return true;
  if (d2 == 0 && on_segment_exact(b1.exact, b2.exact, a2.exact)) return true;
  if (d3 == 0 && on_segment_exact(a1.exact, a2.exact, b1.exact)) return true;
  if (d4 == 0 && on_segment_exact(a1.exact, a2.exact, b2.exact)) return true;
  return false;
}

std::vector<SegPoint> scaled_vertex_points(int k, const CellPlacement& c,
                                           const PlacementNum& cn) {
  const auto& tab = detail::slot_tables(k);
  double g2 = 2.0 * std::cos(M_PI / k);
  std::complex<double> zc = cn.z * g2;
  CycNum sc = scaled_center(c.center);
  std::vector<SegPoint> pts;
  pts.reserve(static_cast<size_t>(k));
  int start = (c.parity + 1) & 1;
  for (int v = start; v < 2 * k; v += 2) {
    SegPoint p;
    p.exact = sc + CycNum::unit(k, v);
    p.z = zc + std::complex<double>(tab.cs[v], tab.sn[v]);
    pts.push_back(std::move(p));
  }
  return pts;
}

// Boundary contact test for two cells whose interiors are already known to be
// disjoint: the closed shapes meet iff some pair of edge segments meets.
bool boundaries_meet(int k, const CellPlacement& a, const PlacementNum& an,
                     const CellPlacement& b, const PlacementNum& bn, double err) {
  std::vector<SegPoint> va = scaled_vertex_points(k, a, an);
  std::vector<SegPoint> vb = scaled_vertex_points(k, b, bn);
  double coord_err = err + 1e-12;
  for (int i = 0; i < k; ++i) {
    const SegPoint& a1 = va[i];
    const SegPoint& a2 = va[(i + 1) % k];
    for (int j = 0; j < k; ++j) {
      if (segments_meet(a1, a2, vb[j], vb[(j + 1) % k], coord_err)) return true;
    }
  }
  return false;
}

// Shared front end: everything up to (and including) the separating-axis
// scan. Touch/disjoint refinement is layered on top by classify_pair.
struct FrontEnd {
  enum Kind { Identical, Overlapping, Adjacent, Apart, Sat } kind;
  int slot = -1;
  SatOutcome sat = SatOutcome::Overlap;
};

FrontEnd pair_front(int k, const CellPlacement& a, const PlacementNum& an,
                    const CellPlacement& b, const PlacementNum& bn) {
  const auto& tab = detail::slot_tables(k);
  double err = pair_err(k, an, bn);
  std::complex<double> dz = bn.z - an.z;
  double tol = 2.0 * err + 1e-11;

  if (std::norm(dz) <= tol * tol) {
    if ((b.center - a.center).is_zero()) {
      return {a.parity == b.parity ? FrontEnd::Identical : FrontEnd::Overlapping};
    }
  }

  // Full-edge adjacency: center difference equal to an admissible unit step.
  if (std::abs(std::norm(dz) - 1.0) <= 4.0 * tol) {
    for (int d = 0; d < 2 * k; ++d) {
      double dx = dz.real() - tab.cs[d], dy = dz.imag() - tab.sn[d];
      if (dx * dx + dy * dy > tol * tol) continue;
      if ((b.center - a.center - CycNum::unit(k, d)).is_zero()) {
        if ((d & 1) == (a.parity & 1) && b.parity == ((a.parity + k) & 1)) {
          return {FrontEnd::Adjacent, d};
        }
      }
      break;  // at most one unit can match
    }
  }

  // Circumcircle cull: centers further apart than twice the circumradius
  // certify disjointness without any polygon work.
  double gamma = std::cos(M_PI / k);
  double dd = std::norm(dz);
  double r2 = 1.0 / (gamma * gamma);
  double margin = (std::abs(dz) + 2.0) * 4.0 * err + 1e-10;
  if (dd - r2 > margin) return {FrontEnd::Apart};
  if (std::abs(dd - r2) <= margin) {
    CycNum delta = b.center - a.center;
    CycNum nrm = delta * delta.conj();
    CycNum e1 = off_elem(k, 1);
    CycNum lhs = nrm * e1 * e1 - CycNum::integer(k, 4);
    if (detail::sign_real_unchecked(lhs) > 0) return {FrontEnd::Apart};
  }

  FrontEnd fe{FrontEnd::Sat};
  fe.sat = sat_scan(k, a, an, b, bn, err);
  return fe;
}

}  // namespace

namespace detail {

PlacementNum placement_num(const CellPlacement& c) {
  PlacementNum n;
  n.z = c.center.approx();
  n.sum_abs = c.center.sum_abs();
  return n;
}

PairRelation pair_relation(int k, const CellPlacement& a, const PlacementNum& an,
                           const CellPlacement& b, const PlacementNum& bn) {
  FrontEnd fe = pair_front(k, a, an, b, bn);
  PairRelation r;
  switch (fe.kind) {
    case FrontEnd::Identical:
    case FrontEnd::Overlapping:
      r.overlapping = true;
      break;
    case FrontEnd::Adjacent:
      r.adjacent = true;
      r.slot = fe.slot;
      break;
    case FrontEnd::Apart:
      break;
    case FrontEnd::Sat:
      r.overlapping = (fe.sat == SatOutcome::Overlap);
      break;
  }
  return r;
}

}  // namespace detail

std::vector<CycNum> vertices(int k, const CellPlacement& c) {
  CycNum sc = scaled_center(c.center);
  std::vector<CycNum> out;
  out.reserve(static_cast<size_t>(k));
  int start = (c.parity + 1) & 1;
  for (int v = start; v < 2 * k; v += 2) out.push_back(sc + CycNum::unit(k, v));
  return out;
}

PairClass classify_pair(int k, const CellPlacement& a, const CellPlacement& b) {
  if (a.center.k() != k || b.center.k() != k) throw KMismatchError();
  PlacementNum an = detail::placement_num(a);
  PlacementNum bn = detail::placement_num(b);
  FrontEnd fe = pair_front(k, a, an, b, bn);
  switch (fe.kind) {
    case FrontEnd::Identical:
      return {PairKind::Identical};
    case FrontEnd::Overlapping:
      return {PairKind::Overlapping};
    case FrontEnd::Adjacent:
      return {PairKind::EdgeAdjacent, fe.slot};
    case FrontEnd::Apart:
      return {PairKind::Disjoint};
    case FrontEnd::Sat:
      break;
  }
  if (fe.sat == SatOutcome::Overlap) return {PairKind::Overlapping};
  if (fe.sat == SatOutcome::Strict) return {PairKind::Disjoint};
  double err = pair_err(k, an, bn);
  return boundaries_meet(k, a, an, b, bn, err) ? PairClass{PairKind::Touching}
                                               : PairClass{PairKind::Disjoint};
}

}  // namespace kpoly
