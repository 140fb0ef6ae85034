// Copyright 2026 The qutrit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qutrit/contour.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <utility>

namespace qutrit {
namespace {

// Entropy continued past the triangle by its value at the nearest edge point.
double extended_entropy(const DiagPoint& p) {
  return diagonal_entropy(TriangleRegion::project(p));
}

DiagPoint lerp(const DiagPoint& a, const DiagPoint& b, double t) {
  return {a.n3 + t * (b.n3 - a.n3), a.n8 + t * (b.n8 - a.n8)};
}

// Root of extended_entropy - level on segment [a, b], given the signs at the
// endpoints differ (or one is zero). Illinois variant of regula falsi.
DiagPoint refine_crossing(const DiagPoint& a, const DiagPoint& b, double ga, double gb, double level) {
  if (ga == 0.0) return a;
  if (gb == 0.0) return b;
  double lo = 0.0, hi = 1.0;
  double glo = ga, ghi = gb;
  int side = 0;
  double t = glo / (glo - ghi);
  for (int it = 0; it < 200; ++it) {
    t = (lo * ghi - hi * glo) / (ghi - glo);
    const double gt = extended_entropy(lerp(a, b, t)) - level;
    if (gt == 0.0 || hi - lo < 1e-15) break;
    if ((gt > 0.0) == (glo > 0.0)) {
      lo = t;
      glo = gt;
      if (side == -1) ghi *= 0.5;
      side = -1;
    } else {
      hi = t;
      ghi = gt;
      if (side == 1) glo *= 0.5;
      side = 1;
    }
    if (std::abs(gt) < 1e-15) break;
  }
  return lerp(a, b, t);
}

// Grid edges are keyed so that std::map iteration order is deterministic.
// kind 0: horizontal edge from node (i, j) to (i + 1, j)
// kind 1: vertical edge from node (i, j) to (i, j + 1)
struct EdgeKey {
  int j;
  int i;
  int kind;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

class MarchingSquares {
 public:
  MarchingSquares(double level, int resolution) : level_(level), n_(resolution) {
    nodes_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    values_.resize(nodes_.size());
    for (int j = 0; j < n_; ++j) {
      for (int i = 0; i < n_; ++i) {
        const DiagPoint p{grid_n3(i, n_), grid_n8(j, n_)};
        nodes_[index(i, j)] = p;
        values_[index(i, j)] = extended_entropy(p) - level_;
      }
    }
  }

  std::vector<Polyline> run() {
    for (int j = 0; j + 1 < n_; ++j) {
      for (int i = 0; i + 1 < n_; ++i) march_cell(i, j);
    }
    return link();
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
  }
  bool high(int i, int j) const { return values_[index(i, j)] >= 0.0; }

  void march_cell(int i, int j) {
    // Corner order: 0 (i,j), 1 (i+1,j), 2 (i+1,j+1), 3 (i,j+1).
    const int mask = (high(i, j) ? 1 : 0) | (high(i + 1, j) ? 2 : 0) | (high(i + 1, j + 1) ? 4 : 0) |
                     (high(i, j + 1) ? 8 : 0);
    if (mask == 0 || mask == 15) return;

    const EdgeKey bottom{j, i, 0}, right{j, i + 1, 1}, top{j + 1, i, 0}, left{j, i, 1};
    switch (mask) {
      case 1: case 14: add(left, bottom); break;
      case 2: case 13: add(bottom, right); break;
      case 3: case 12: add(left, right); break;
      case 4: case 11: add(right, top); break;
      case 6: case 9: add(bottom, top); break;
      case 7: case 8: add(left, top); break;
      case 5: case 10: {
        // Saddle: decide by the field at the cell centre.
        const DiagPoint c = lerp(nodes_[index(i, j)], nodes_[index(i + 1, j + 1)], 0.5);
        const bool centre_high = extended_entropy(c) - level_ >= 0.0;
        if ((mask == 5) == centre_high) {
          add(left, top);
          add(bottom, right);
        } else {
          add(left, bottom);
          add(right, top);
        }
        break;
      }
      default: break;
    }
  }

  void add(const EdgeKey& a, const EdgeKey& b) {
    const std::size_t id = segments_.size();
    segments_.emplace_back(a, b);
    incident_[a].push_back(id);
    incident_[b].push_back(id);
  }

  DiagPoint crossing(const EdgeKey& e) {
    auto it = crossings_.find(e);
    if (it != crossings_.end()) return it->second;
    const int i2 = e.kind == 0 ? e.i + 1 : e.i;
    const int j2 = e.kind == 0 ? e.j : e.j + 1;
    const DiagPoint a = nodes_[index(e.i, e.j)];
    const DiagPoint b = nodes_[index(i2, j2)];
    DiagPoint p = refine_crossing(a, b, values_[index(e.i, e.j)], values_[index(i2, j2)], level_);
    if (!TriangleRegion::contains(p, 0.0)) p = TriangleRegion::project(p);
    crossings_.emplace(e, p);
    return p;
  }

  static void push_unique(std::vector<DiagPoint>& pts, const DiagPoint& p) {
    if (!pts.empty() && std::hypot(pts.back().n3 - p.n3, pts.back().n8 - p.n8) < 1e-12) return;
    pts.push_back(p);
  }

  Polyline trace(const EdgeKey& start, std::vector<bool>& used) {
    Polyline line;
    EdgeKey at = start;
    push_unique(line.points, crossing(at));
    for (;;) {
      std::size_t next = segments_.size();
      for (std::size_t s : incident_[at]) {
        if (!used[s]) {
          next = s;
          break;
        }
      }
      if (next == segments_.size()) break;
      used[next] = true;
      at = segments_[next].first == at ? segments_[next].second : segments_[next].first;
      if (at == start) {
        line.closed = true;
        break;
      }
      push_unique(line.points, crossing(at));
    }
    if (line.closed && line.points.size() > 1) {
      const auto& f = line.points.front();
      const auto& l = line.points.back();
      if (std::hypot(f.n3 - l.n3, f.n8 - l.n8) < 1e-12) line.points.pop_back();
    }
    return line;
  }

  std::vector<Polyline> link() {
    std::vector<bool> used(segments_.size(), false);
    std::vector<Polyline> out;
    // Open chains first, starting from edges touched by a single segment.
    for (const auto& [edge, segs] : incident_) {
      if (segs.size() == 1 && !used[segs.front()]) out.push_back(trace(edge, used));
    }
    for (const auto& [edge, segs] : incident_) {
      for (std::size_t s : segs) {
        if (!used[s]) out.push_back(trace(edge, used));
      }
    }
    return out;
  }

  double level_;
  int n_;
  std::vector<DiagPoint> nodes_;
  std::vector<double> values_;
  std::vector<std::pair<EdgeKey, EdgeKey>> segments_;
  std::map<EdgeKey, std::vector<std::size_t>> incident_;
  std::map<EdgeKey, DiagPoint> crossings_;
};

}  // namespace

std::vector<Polyline> equi_entropy_contour(double level, double tol, int resolution) {
  if (!(level > 0.0 && level < 1.0)) {
    std::ostringstream msg;
    msg << "contour level " << level << " is outside (0, 1)";
    throw std::invalid_argument(msg.str());
  }
  if (resolution < 2) throw std::invalid_argument("contour resolution must be at least 2");

  auto lines = MarchingSquares(level, resolution).run();
  if (lines.empty()) {
    std::ostringstream msg;
    msg << "entropy level " << level << " is not crossed on a " << resolution << "x" << resolution
        << " grid";
    throw ContourError(msg.str());
  }
  for (const auto& line : lines) {
    for (const auto& p : line.points) {
      const double err = std::abs(diagonal_entropy(p) - level);
      if (!(err <= tol)) {
        std::ostringstream msg;
        msg << "contour point (" << p.n3 << ", " << p.n8 << ") misses level " << level << " by "
            << err;
        throw ContourError(msg.str());
      }
    }
  }
  return lines;
}

}  // namespace qutrit
