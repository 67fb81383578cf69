#include "chroma/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace chroma {

namespace {

using i128 = __int128;

int sign_i128(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

constexpr long long kIntViewLimit = 1LL << 40;

} // namespace

Point make_point(std::initializer_list<long> coords) {
  std::vector<Rat> c;
  c.reserve(coords.size());
  for (long v : coords) c.emplace_back(v);
  return Point(std::move(c));
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  dim_ = points_[0].dim();
  if (dim_ < 1) throw std::invalid_argument("points must have dimension >= 1");
  for (const Point& p : points_)
    if (p.dim() != dim_) throw std::invalid_argument("mixed point dimensions");
  for (size_t i = 0; i < points_.size(); ++i)
    for (size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j])
        throw std::invalid_argument("duplicate point at indices " + std::to_string(i) +
                                    "," + std::to_string(j));

  int_view_.reserve(points_.size() * dim_);
  for (const Point& p : points_) {
    for (const Rat& c : p.coords) {
      auto v = rational_to_int64(c);
      if (!v || *v > kIntViewLimit || *v < -kIntViewLimit) {
        int_view_.clear();
        return;
      }
      int_view_.push_back(*v);
    }
  }
}

bool Box::contains(const Point& p) const {
  for (int i = 0; i < p.dim(); ++i)
    if (p[i] < low[i] || p[i] > high[i]) return false;
  return true;
}

int SignSequence::type_index() const {
  int idx = 0;
  for (size_t i = 1; i < signs.size(); ++i)
    if (signs[i] < 0) idx |= 1 << (i - 1);
  return idx;
}

int orientation(const Point& a, const Point& b, const Point& c) {
  Rat v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return sign_of(v);
}

int orientation(const PointSet& s, int a, int b, int c) {
  const auto& iv = s.int_view();
  if (!iv.empty()) {
    const int d = s.dim();
    i128 abx = iv[b * d] - iv[a * d];
    i128 aby = iv[b * d + 1] - iv[a * d + 1];
    i128 acx = iv[c * d] - iv[a * d];
    i128 acy = iv[c * d + 1] - iv[a * d + 1];
    return sign_i128(abx * acy - aby * acx);
  }
  return orientation(s[a], s[b], s[c]);
}

int compare_coord(const PointSet& s, int axis, int a, int b) {
  const auto& iv = s.int_view();
  if (!iv.empty()) {
    long long va = iv[a * s.dim() + axis], vb = iv[b * s.dim() + axis];
    return va < vb ? -1 : (va > vb ? 1 : 0);
  }
  return cmp(s[a][axis], s[b][axis]);
}

int Circle::side(const Point& p) const {
  Rat dx = p[0] - cx, dy = p[1] - cy;
  return sign_of(dx * dx + dy * dy - r2);
}

std::optional<Circle> circumcircle(const Point& a, const Point& b, const Point& c) {
  // 2(b-a).center = |b|^2-|a|^2 ; 2(c-a).center = |c|^2-|a|^2
  Rat ax = a[0], ay = a[1], bx = b[0], by = b[1], cx = c[0], cy = c[1];
  Rat m00 = 2 * (bx - ax), m01 = 2 * (by - ay);
  Rat m10 = 2 * (cx - ax), m11 = 2 * (cy - ay);
  Rat r0 = bx * bx + by * by - ax * ax - ay * ay;
  Rat r1 = cx * cx + cy * cy - ax * ax - ay * ay;
  Rat det = m00 * m11 - m01 * m10;
  if (det == 0) return std::nullopt;
  Circle out;
  out.cx = (r0 * m11 - r1 * m01) / det;
  out.cy = (m00 * r1 - m10 * r0) / det;
  Rat dx = ax - out.cx, dy = ay - out.cy;
  out.r2 = dx * dx + dy * dy;
  return out;
}

Circle diametral_circle(const Point& a, const Point& b) {
  Circle out;
  out.cx = (a[0] + b[0]) / 2;
  out.cy = (a[1] + b[1]) / 2;
  Rat dx = a[0] - out.cx, dy = a[1] - out.cy;
  out.r2 = dx * dx + dy * dy;
  return out;
}

Box bounding_box(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("bounding_box: dimension mismatch");
  Box b;
  b.low.coords.resize(p.dim());
  b.high.coords.resize(p.dim());
  for (int i = 0; i < p.dim(); ++i) {
    b.low[i] = std::min(p[i], q[i]);
    b.high[i] = std::max(p[i], q[i]);
  }
  return b;
}

SignSequence directed_type(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("directed_type: dimension mismatch");
  SignSequence seq;
  seq.signs.resize(p.dim());
  int flip = 0;
  for (int i = 0; i < p.dim(); ++i) {
    int s = sign_of(Rat(q[i] - p[i]));
    if (s == 0)
      throw GeneralPositionError("directed_type: zero coordinate difference at axis " +
                                 std::to_string(i));
    if (i == 0) flip = s; // normalize so the first sign is +
    seq.signs[i] = s * flip;
  }
  return seq;
}

std::vector<int> convex_hull(const PointSet& s) {
  if (s.dim() != 2) throw std::invalid_argument("convex_hull: requires d=2");
  const int n = s.size();
  if (n == 0) return {};
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    int c = compare_coord(s, 0, a, b);
    if (c != 0) return c < 0;
    return compare_coord(s, 1, a, b) < 0;
  });
  if (n <= 2) return idx;

  // Monotone chain; strict turns only, so collinear interior points drop out.
  std::vector<int> lower, upper;
  for (int i : idx) {
    while (lower.size() >= 2 &&
           orientation(s, lower[lower.size() - 2], lower.back(), i) <= 0)
      lower.pop_back();
    lower.push_back(i);
  }
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    while (upper.size() >= 2 &&
           orientation(s, upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower; // CCW, starts at the lexicographically smallest point
}

PointSet shear_general_position(const PointSet& s) {
  if (s.dim() != 2) throw std::invalid_argument("shear_general_position: requires d=2");
  const int n = s.size();
  if (n <= 1) return s;

  // eps below delta/(2*span) realizes lexicographic tie-breaking exactly:
  // whenever coordinates differ, the eps term cannot overturn the comparison.
  Rat delta = 0, span = 0;
  bool have_delta = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int axis = 0; axis < 2; ++axis) {
        Rat d = abs(Rat(s[i][axis] - s[j][axis]));
        if (d > span) span = d;
        if (d > 0 && (!have_delta || d < delta)) {
          delta = d;
          have_delta = true;
        }
      }
  if (!have_delta)
    throw std::invalid_argument("shear_general_position: degenerate point set");
  Rat eps = delta / (2 * (span + 1));

  std::vector<Point> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Rat x = s[i][0], y = s[i][1];
    out.push_back(Point({x + eps * y, y + eps * x}));
  }
  return PointSet(std::move(out));
}

} // namespace chroma
