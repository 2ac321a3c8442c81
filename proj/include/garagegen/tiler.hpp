#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "garagegen/grid.hpp"

namespace garagegen {

enum class TileKind : uint8_t {
  Crossroads,
  TJunction,
  Straight,
  Park1,
  Park2,
  Park3,
  Free,  // unused square (no drivable neighbor)
  Entrance,
  Exit,
  Obstacle,
};

enum class Facing : uint8_t { N, E, S, W };

constexpr Facing opposite(Facing f) noexcept {
  switch (f) {
    case Facing::N: return Facing::S;
    case Facing::E: return Facing::W;
    case Facing::S: return Facing::N;
    case Facing::W: return Facing::E;
  }
  return Facing::N;
}

struct Tile {
  TileKind kind = TileKind::Obstacle;
  Facing facing = Facing::N;

  friend bool operator==(const Tile&, const Tile&) = default;
};

constexpr bool is_directional(TileKind k) noexcept {
  return k == TileKind::TJunction || k == TileKind::Straight || k == TileKind::Park1 ||
         k == TileKind::Park2 || k == TileKind::Park3;
}

namespace detail {
// Drivable flags in N, E, S, W order.
struct NeighborFlags {
  bool n, e, s, w;
  int degree() const noexcept { return n + e + s + w; }
};

inline NeighborFlags drivable_flags(const StructureMatrix& m, Coord c) {
  const auto nb = four_neighborhood(m, c);
  return {is_drivable(nb[0]), is_drivable(nb[1]), is_drivable(nb[2]), is_drivable(nb[3])};
}

inline Facing first_drivable(const NeighborFlags& f) {
  if (f.n) return Facing::N;
  if (f.e) return Facing::E;
  if (f.s) return Facing::S;
  return Facing::W;
}
}  // namespace detail

/// Lane tiles by drivable 4-neighbor count: 4 = crossroads, 3 = T-junction
/// (facing away from the missing side), otherwise straight (facing its axis;
/// N when the axis is ambiguous or the lane is isolated).
inline Tile classify_lane_tile(const StructureMatrix& m, Coord c) {
  detail::require_in_bounds(m, c, "classify_lane_tile");
  if (m.at(c) != Cell::Lane) {
    throw std::domain_error("classify_lane_tile: cell is not a lane");
  }
  const auto f = detail::drivable_flags(m, c);
  switch (f.degree()) {
    case 4:
      return {TileKind::Crossroads, Facing::N};
    case 3: {
      Facing missing = Facing::N;
      if (!f.n) missing = Facing::N;
      else if (!f.e) missing = Facing::E;
      else if (!f.s) missing = Facing::S;
      else missing = Facing::W;
      return {TileKind::TJunction, opposite(missing)};
    }
    case 2:
      if (f.n && f.s) return {TileKind::Straight, Facing::N};
      if (f.e && f.w) return {TileKind::Straight, Facing::E};
      // Perpendicular pair: no bend tile in the taxonomy; pick the vertical axis.
      return {TileKind::Straight, (f.n || f.s) ? Facing::N : Facing::E};
    default:
      return {TileKind::Straight, Facing::N};
  }
}

/// Parking tiles mirror the spot taxonomy; the facing points at a drivable
/// neighbor (the only one for Park3, the first in N, E, S, W order otherwise).
inline Tile classify_parking_tile(const StructureMatrix& m, Coord c) {
  detail::require_in_bounds(m, c, "classify_parking_tile");
  if (m.at(c) != Cell::Free) {
    throw std::domain_error("classify_parking_tile: cell is not free");
  }
  const auto f = detail::drivable_flags(m, c);
  const int n = f.degree();
  if (n == 0) return {TileKind::Free, Facing::N};
  const Facing toward = detail::first_drivable(f);
  if (n >= 3) return {TileKind::Park1, toward};
  if (n == 2) {
    const bool across = (f.n && f.s) || (f.e && f.w);
    return {across ? TileKind::Park1 : TileKind::Park2, toward};
  }
  return {TileKind::Park3, toward};
}

/// Per-cell tile classification of a whole matrix. Total: every cell gets a tile.
class TileMap {
 public:
  TileMap() = default;

  TileMap(int rows, int cols, uint64_t source_hash)
      : rows_(rows), cols_(cols), source_hash_(source_hash),
        tiles_(static_cast<size_t>(rows) * cols) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  uint64_t source_hash() const noexcept { return source_hash_; }

  const Tile& at(Coord c) const { return tiles_.at(static_cast<size_t>(c.row) * cols_ + c.col); }
  Tile& at(Coord c) { return tiles_.at(static_cast<size_t>(c.row) * cols_ + c.col); }
  const std::vector<Tile>& tiles() const noexcept { return tiles_; }

  int count(TileKind k) const noexcept {
    int n = 0;
    for (const Tile& t : tiles_) n += (t.kind == k);
    return n;
  }

  friend bool operator==(const TileMap&, const TileMap&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  uint64_t source_hash_ = 0;
  std::vector<Tile> tiles_;
};

inline TileMap tile_map(const StructureMatrix& m) {
  TileMap out(m.rows(), m.cols(), m.hash());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const Coord at{r, c};
      switch (m.at(at)) {
        case Cell::Lane: out.at(at) = classify_lane_tile(m, at); break;
        case Cell::Free: out.at(at) = classify_parking_tile(m, at); break;
        case Cell::Entrance: out.at(at) = {TileKind::Entrance, Facing::N}; break;
        case Cell::Exit: out.at(at) = {TileKind::Exit, Facing::N}; break;
        case Cell::Obstacle: out.at(at) = {TileKind::Obstacle, Facing::N}; break;
      }
    }
  }
  return out;
}

inline std::string to_string(TileKind k) {
  switch (k) {
    case TileKind::Crossroads: return "crossroads";
    case TileKind::TJunction: return "t_junction";
    case TileKind::Straight: return "straight";
    case TileKind::Park1: return "park1";
    case TileKind::Park2: return "park2";
    case TileKind::Park3: return "park3";
    case TileKind::Free: return "free";
    case TileKind::Entrance: return "entrance";
    case TileKind::Exit: return "exit";
    case TileKind::Obstacle: return "obstacle";
  }
  return "obstacle";
}

inline TileKind tile_kind_from_string(const std::string& s) {
  if (s == "crossroads") return TileKind::Crossroads;
  if (s == "t_junction") return TileKind::TJunction;
  if (s == "straight") return TileKind::Straight;
  if (s == "park1") return TileKind::Park1;
  if (s == "park2") return TileKind::Park2;
  if (s == "park3") return TileKind::Park3;
  if (s == "free") return TileKind::Free;
  if (s == "entrance") return TileKind::Entrance;
  if (s == "exit") return TileKind::Exit;
  if (s == "obstacle") return TileKind::Obstacle;
  throw std::domain_error("unknown tile kind: " + s);
}

inline std::string to_string(Facing f) {
  switch (f) {
    case Facing::N: return "N";
    case Facing::E: return "E";
    case Facing::S: return "S";
    case Facing::W: return "W";
  }
  return "N";
}

inline Facing facing_from_string(const std::string& s) {
  if (s == "N") return Facing::N;
  if (s == "E") return Facing::E;
  if (s == "S") return Facing::S;
  if (s == "W") return Facing::W;
  throw std::domain_error("unknown facing: " + s);
}

}  // namespace garagegen
