#pragma once

#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "garagegen/grid.hpp"

namespace garagegen {

/// Weights of the layout fitness y' = k1*N_S + k2*T_S + k3*U_S.
struct EvalCoefficients {
  double k1 = 1.0;
  double k2 = -5.0;
  double k3 = -1.0;

  friend bool operator==(const EvalCoefficients&, const EvalCoefficients&) = default;
};

/// Parking spot taxonomy by drivable 4-neighbors:
///   Type1: three or more, or two facing each other;
///   Type2: two perpendicular;
///   Type3: exactly one.
/// Free cells with none are "unused squares" and never appear in a spot list.
enum class SpotType { Type1 = 1, Type2 = 2, Type3 = 3 };

struct Spot {
  Coord at;
  SpotType type;

  friend bool operator==(const Spot&, const Spot&) = default;
};

struct Evaluation {
  int n_spots = 0;
  double avg_time = 0.0;
  int unused = 0;
  double score = 0.0;
  std::vector<Spot> spots;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

namespace detail {

inline std::optional<SpotType> spot_type_for(const StructureMatrix& s, Coord c) {
  const auto nb = four_neighborhood(s, c);  // N, E, S, W
  const bool n = is_drivable(nb[0]), e = is_drivable(nb[1]);
  const bool so = is_drivable(nb[2]), w = is_drivable(nb[3]);
  const int degree = n + e + so + w;
  if (degree == 0) return std::nullopt;
  if (degree >= 3) return SpotType::Type1;
  if (degree == 2) return (n && so) || (e && w) ? SpotType::Type1 : SpotType::Type2;
  return SpotType::Type3;
}

// Multi-source BFS over drivable cells; distances are in moves (sources = 0).
inline std::vector<int> drivable_distances(const StructureMatrix& s,
                                           const std::vector<Coord>& sources) {
  const int w = s.cols();
  std::vector<int> dist(static_cast<size_t>(s.rows()) * w, -1);
  std::queue<Coord> frontier;
  for (const Coord& src : sources) {
    dist[static_cast<size_t>(src.row) * w + src.col] = 0;
    frontier.push(src);
  }
  while (!frontier.empty()) {
    const Coord cur = frontier.front();
    frontier.pop();
    const int d = dist[static_cast<size_t>(cur.row) * w + cur.col];
    for (Coord off : kFourOffsets) {
      const Coord nb = cur + off;
      if (!s.in_bounds(nb) || !is_drivable(s.at(nb))) continue;
      auto& entry = dist[static_cast<size_t>(nb.row) * w + nb.col];
      if (entry < 0) {
        entry = d + 1;
        frontier.push(nb);
      }
    }
  }
  return dist;
}

inline std::vector<Coord> cells_with(const StructureMatrix& s, Cell value) {
  std::vector<Coord> out;
  for (int r = 0; r < s.rows(); ++r) {
    for (int c = 0; c < s.cols(); ++c) {
      if (s.at({r, c}) == value) out.push_back({r, c});
    }
  }
  return out;
}

}  // namespace detail

/// All free cells with at least one drivable 4-neighbor, tagged by type.
inline std::pair<int, std::vector<Spot>> count_spots(const StructureMatrix& s) {
  std::vector<Spot> spots;
  for (int r = 0; r < s.rows(); ++r) {
    for (int c = 0; c < s.cols(); ++c) {
      const Coord at{r, c};
      if (s.at(at) != Cell::Free) continue;
      if (auto type = detail::spot_type_for(s, at)) spots.push_back({at, *type});
    }
  }
  return {static_cast<int>(spots.size()), std::move(spots)};
}

/// Free cells with no drivable 4-neighbor.
inline int unused_squares(const StructureMatrix& s) {
  int n = 0;
  for (int r = 0; r < s.rows(); ++r) {
    for (int c = 0; c < s.cols(); ++c) {
      const Coord at{r, c};
      if (s.at(at) == Cell::Free && drivable_degree(s, at) == 0) ++n;
    }
  }
  return n;
}

/// Mean time to park, in moves: shortest drivable path from the nearest
/// entrance to any drivable cell beside the spot, plus one wheel-in move.
/// Spots with no reachable adjacent drivable cell cost `unreachable_penalty`
/// moves (default: one full floor sweep, h*w). Zero spots yield zero.
inline double avg_parking_time(const StructureMatrix& s,
                               std::optional<double> unreachable_penalty = std::nullopt) {
  const std::vector<Coord> entrances = detail::cells_with(s, Cell::Entrance);
  if (entrances.empty()) throw std::domain_error("avg_parking_time: matrix has no entrance");
  const auto [n_spots, spots] = count_spots(s);
  if (n_spots == 0) return 0.0;

  const double penalty =
      unreachable_penalty.value_or(static_cast<double>(s.rows()) * s.cols());
  const std::vector<int> dist = detail::drivable_distances(s, entrances);
  double total = 0.0;
  for (const Spot& spot : spots) {
    int best = std::numeric_limits<int>::max();
    for (Coord off : kFourOffsets) {
      const Coord nb = spot.at + off;
      if (!s.in_bounds(nb) || !is_drivable(s.at(nb))) continue;
      const int d = dist[static_cast<size_t>(nb.row) * s.cols() + nb.col];
      if (d >= 0 && d < best) best = d;
    }
    total += best == std::numeric_limits<int>::max() ? penalty : best + 1.0;
  }
  return total / n_spots;
}

inline Evaluation evaluate(const StructureMatrix& s, const EvalCoefficients& k = {}) {
  Evaluation e;
  auto [n, spots] = count_spots(s);
  e.n_spots = n;
  e.spots = std::move(spots);
  e.unused = unused_squares(s);
  e.avg_time = avg_parking_time(s);
  e.score = k.k1 * e.n_spots + k.k2 * e.avg_time + k.k3 * e.unused;
  return e;
}

struct InfeasibleSpot {
  Coord at;
  std::string reason;  // "no-entrance-path" or "no-exit-path"

  friend bool operator==(const InfeasibleSpot&, const InfeasibleSpot&) = default;
};

/// Every parking spot must reach at least one entrance and one exit through
/// drivable cells. Returns the spots that cannot; empty means feasible.
inline std::vector<InfeasibleSpot> feasibility(const StructureMatrix& s) {
  const auto [n_spots, spots] = count_spots(s);
  std::vector<InfeasibleSpot> infeasible;
  if (n_spots == 0) return infeasible;

  const std::vector<int> from_entrances =
      detail::drivable_distances(s, detail::cells_with(s, Cell::Entrance));
  const std::vector<int> from_exits =
      detail::drivable_distances(s, detail::cells_with(s, Cell::Exit));
  for (const Spot& spot : spots) {
    bool entrance_ok = false, exit_ok = false;
    for (Coord off : kFourOffsets) {
      const Coord nb = spot.at + off;
      if (!s.in_bounds(nb) || !is_drivable(s.at(nb))) continue;
      const size_t idx = static_cast<size_t>(nb.row) * s.cols() + nb.col;
      entrance_ok = entrance_ok || from_entrances[idx] >= 0;
      exit_ok = exit_ok || from_exits[idx] >= 0;
    }
    if (!entrance_ok) {
      infeasible.push_back({spot.at, "no-entrance-path"});
    } else if (!exit_ok) {
      infeasible.push_back({spot.at, "no-exit-path"});
    }
  }
  return infeasible;
}

}  // namespace garagegen
