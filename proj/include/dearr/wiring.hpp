#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dearr/error.hpp"
#include "dearr/faces.hpp"
#include "dearr/poset.hpp"

namespace dearr {

/// The wires at positions top .. top+size-1 meet in one point and leave it
/// in reversed order.
struct CrossingEvent {
  int top = 0;
  int size = 2;

  friend bool operator==(const CrossingEvent&, const CrossingEvent&) = default;
};

/// A pseudoline arrangement in the plane: `wires` horizontal curves, entering
/// at positions 0 .. wires-1 (position 0 on top), and a left-to-right
/// sequence of crossing events.
struct WiringDiagram {
  int wires = 0;
  std::vector<CrossingEvent> events;

  friend bool operator==(const WiringDiagram&, const WiringDiagram&) = default;
};

struct ValidatedWiring {
  WiringDiagram diagram;
  std::vector<int> final_order;              // wire at each position after the last event
  std::vector<std::vector<int>> event_wires;  // wires meeting at each event, ascending
};

inline ValidatedWiring validate_wiring(WiringDiagram w) {
  if (w.wires < 1) throw Error(Errc::invalid_input, "a wiring diagram needs at least one wire");
  const auto n = static_cast<std::size_t>(w.wires);

  std::vector<int> order(n);
  for (std::size_t p = 0; p < n; ++p) order[p] = static_cast<int>(p);
  std::vector<std::vector<bool>> crossed(n, std::vector<bool>(n, false));
  std::vector<std::vector<int>> event_wires;

  for (std::size_t e = 0; e < w.events.size(); ++e) {
    const auto [top, size] = w.events[e];
    if (top < 0 || size < 2 || top + size > w.wires)
      throw Error(Errc::out_of_range, "event " + std::to_string(e) + " (top " + std::to_string(top) + ", size " +
                                          std::to_string(size) + ") does not fit " + std::to_string(w.wires) +
                                          " wires");
    const auto first = order.begin() + top;
    const auto last = first + size;
    for (auto a = first; a != last; ++a) {
      for (auto b = a + 1; b != last; ++b) {
        if (crossed[*a][*b])
          throw Error(Errc::repeated_crossing, "wires " + std::to_string(*a) + " and " + std::to_string(*b) +
                                                   " cross again at event " + std::to_string(e));
        crossed[*a][*b] = crossed[*b][*a] = true;
      }
    }
    std::vector<int> meeting(first, last);
    std::ranges::sort(meeting);
    event_wires.push_back(std::move(meeting));
    std::reverse(first, last);
  }
  return ValidatedWiring{std::move(w), std::move(order), std::move(event_wires)};
}

/// Flat ids: 0 for the plane, 1 + w for wire w, 1 + wires + e for event e.
inline Semilattice lattice_from_wiring(const ValidatedWiring& vw) {
  const int n = vw.diagram.wires;
  SemilatticeCandidate candidate;
  candidate.ambient_dim = 2;
  candidate.flats.push_back(Flat{0, 2, {}});
  for (int w = 0; w < n; ++w) {
    candidate.flats.push_back(Flat{1 + w, 1, {static_cast<std::size_t>(w)}});
    candidate.leq.emplace_back(0, 1 + w);
  }
  for (std::size_t e = 0; e < vw.event_wires.size(); ++e) {
    const FlatId id = 1 + n + static_cast<FlatId>(e);
    std::vector<std::size_t> support(vw.event_wires[e].begin(), vw.event_wires[e].end());
    candidate.flats.push_back(Flat{id, 0, std::move(support)});
    for (const int w : vw.event_wires[e]) candidate.leq.emplace_back(1 + w, id);
  }
  return validate_semilattice(std::move(candidate));
}

namespace detail {

// Sweeps the diagram left to right. Sign convention for wire u: '+' above it
// (smaller position), '-' below.
class WiringSweep {
 public:
  explicit WiringSweep(const ValidatedWiring& vw) : n_(static_cast<std::size_t>(vw.diagram.wires)) {
    order_.resize(n_);
    position_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p) order_[p] = position_[p] = static_cast<int>(p);
    for (std::size_t i = 0; i <= n_; ++i) open_region(i);
    for (std::size_t w = 0; w < n_; ++w) open_edge(static_cast<int>(w));

    const auto& events = vw.diagram.events;
    for (std::size_t e = 0; e < events.size(); ++e) apply(events[e], 1 + static_cast<FlatId>(n_ + e));
  }

  [[nodiscard]] FVector f_vector() const { return {Integer(vertices_), Integer(edges_), Integer(regions_)}; }
  [[nodiscard]] std::vector<FaceRecord> take_faces() { return std::move(faces_); }

 private:
  void open_region(std::size_t interval) {
    SignVector signs(n_);
    for (std::size_t u = 0; u < n_; ++u)
      signs[u] = interval <= static_cast<std::size_t>(position_[u]) ? Sign::plus : Sign::minus;
    faces_.push_back(FaceRecord{std::move(signs), 2, 0});
    ++regions_;
  }

  void open_edge(int w) {
    SignVector signs(n_);
    for (std::size_t u = 0; u < n_; ++u) signs[u] = position_[w] < position_[u] ? Sign::plus : Sign::minus;
    signs[static_cast<std::size_t>(w)] = Sign::zero;
    faces_.push_back(FaceRecord{std::move(signs), 1, 1 + w});
    ++edges_;
  }

  void apply(const CrossingEvent& ev, FlatId vertex_flat) {
    const auto top = static_cast<std::size_t>(ev.top);
    const auto end = top + static_cast<std::size_t>(ev.size);

    SignVector signs(n_);
    for (std::size_t u = 0; u < n_; ++u) {
      const auto p = static_cast<std::size_t>(position_[u]);
      signs[u] = p < top ? Sign::minus : (p >= end ? Sign::plus : Sign::zero);
    }
    faces_.push_back(FaceRecord{std::move(signs), 0, vertex_flat});
    ++vertices_;

    std::reverse(order_.begin() + ev.top, order_.begin() + static_cast<std::ptrdiff_t>(end));
    for (std::size_t p = top; p < end; ++p) position_[order_[p]] = static_cast<int>(p);

    // The size-1 regions strictly between the meeting wires close at the
    // vertex and as many fresh ones open to its right.
    for (std::size_t interval = top + 1; interval < end; ++interval) open_region(interval);
    for (std::size_t p = top; p < end; ++p) open_edge(order_[p]);
  }

  std::size_t n_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<FaceRecord> faces_;
  std::size_t vertices_ = 0;
  std::size_t edges_ = 0;
  std::size_t regions_ = 0;
};

}  // namespace detail

/// (f0, f1, f2) by direct sweep: vertices are events, each wire is cut into
/// one more edge than it has events, and regions are counted as distinct
/// region identities opened across the sweep.
inline FVector sweep_f_vector(const ValidatedWiring& vw) {
  FVector f(3, Integer(0));
  f[0] = static_cast<unsigned long>(vw.event_wires.size());
  for (int w = 0; w < vw.diagram.wires; ++w) {
    const auto on_wire = std::ranges::count_if(vw.event_wires, [w](const auto& meeting) {
      return std::ranges::binary_search(meeting, w);
    });
    f[1] += static_cast<unsigned long>(on_wire + 1);
  }
  f[2] = detail::WiringSweep(vw).f_vector()[2];
  return f;
}

/// Every face of the diagram with its sign vector, sorted by dimension and
/// then by sign string. Flat ids follow lattice_from_wiring.
inline std::vector<FaceRecord> sweep_faces(const ValidatedWiring& vw) {
  auto faces = detail::WiringSweep(vw).take_faces();
  std::ranges::sort(faces, [](const FaceRecord& a, const FaceRecord& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return to_string(a.signs) < to_string(b.signs);
  });
  return faces;
}

}  // namespace dearr
