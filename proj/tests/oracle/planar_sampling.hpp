#pragma once

// Test-only face oracle for line arrangements in the plane. It never solves
// an inequality system: it picks explicit rational witness points (every
// vertex, one point inside every edge, and points just off each edge on both
// sides) and records their sign vectors. Every face of a line arrangement
// contains at least one of these points.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct Line {
  mpq_class a, b, c;  // a*x + b*y = c
};

using Point = std::pair<mpq_class, mpq_class>;

inline mpq_class value(const Line& l, const Point& p) { return l.a * p.first + l.b * p.second - l.c; }

inline std::string signs_at(const std::vector<Line>& lines, const Point& p) {
  std::string s;
  for (const auto& l : lines) {
    const int v = sgn(value(l, p));
    s += v > 0 ? '+' : (v < 0 ? '-' : '0');
  }
  return s;
}

/// Map from sign string to face dimension.
inline std::map<std::string, int> planar_faces(const std::vector<Line>& lines) {
  std::map<std::string, int> faces;
  if (lines.empty()) {
    faces.emplace("", 2);
    return faces;
  }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& l = lines[i];
    // Parametrise l as base + t * dir.
    const Point dir{-l.b, l.a};
    const Point base = l.a != 0 ? Point{l.c / l.a, 0} : Point{0, l.c / l.b};

    std::set<mpq_class> ts;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j == i) continue;
      const Line& k = lines[j];
      const mpq_class slope = k.a * dir.first + k.b * dir.second;
      if (slope == 0) continue;
      const mpq_class t = -value(k, base) / slope;
      ts.insert(t);
      const Point v{base.first + t * dir.first, base.second + t * dir.second};
      faces.emplace(signs_at(lines, v), 0);
    }

    std::vector<mpq_class> samples;
    if (ts.empty()) {
      samples.push_back(0);
    } else {
      std::vector<mpq_class> sorted(ts.begin(), ts.end());
      samples.push_back(sorted.front() - 1);
      for (std::size_t k = 0; k + 1 < sorted.size(); ++k) samples.push_back((sorted[k] + sorted[k + 1]) / 2);
      samples.push_back(sorted.back() + 1);
    }

    for (const auto& t : samples) {
      const Point q{base.first + t * dir.first, base.second + t * dir.second};
      faces.emplace(signs_at(lines, q), 1);

      // Step off the line by less than the distance (in value terms) to any
      // other line at q, so every other sign is preserved.
      mpq_class eps = 1;
      for (std::size_t j = 0; j < lines.size(); ++j) {
        if (j == i) continue;
        const mpq_class gap = abs(value(lines[j], q));
        const mpq_class rate = abs(lines[j].a * l.a + lines[j].b * l.b) + 1;
        eps = std::min<mpq_class>(eps, gap / (2 * rate));
      }
      const Point plus{q.first + eps * l.a, q.second + eps * l.b};
      const Point minus{q.first - eps * l.a, q.second - eps * l.b};
      faces.emplace(signs_at(lines, plus), 2);
      faces.emplace(signs_at(lines, minus), 2);
    }
  }
  return faces;
}

}  // namespace oracle
