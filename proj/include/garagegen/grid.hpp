#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace garagegen {

/// Cell codes of the structure matrix.
enum class Cell : int8_t {
  Obstacle = -1,  // obstacle, or outside the floor plan (virtual border reads this too)
  Free = 0,       // parking space or free space
  Lane = 1,
  Entrance = 2,
  Exit = 3,
};

constexpr int code(Cell c) noexcept { return static_cast<int>(c); }

inline Cell cell_from_code(int v) {
  if (v < -1 || v > 3) {
    throw std::domain_error("invalid cell code: " + std::to_string(v));
  }
  return static_cast<Cell>(v);
}

/// Cars (and path searches) move over lanes, entrances and exits.
constexpr bool is_drivable(Cell c) noexcept {
  return c == Cell::Lane || c == Cell::Entrance || c == Cell::Exit;
}

struct Coord {
  int row = 0;
  int col = 0;
  friend constexpr bool operator==(const Coord&, const Coord&) = default;
};

constexpr Coord operator+(Coord a, Coord b) noexcept { return {a.row + b.row, a.col + b.col}; }

constexpr int manhattan(Coord a, Coord b) noexcept {
  const int dr = a.row < b.row ? b.row - a.row : a.row - b.row;
  const int dc = a.col < b.col ? b.col - a.col : a.col - b.col;
  return dr + dc;
}

// Fixed neighbor orders. Eight: N, NE, E, SE, S, SW, W, NW. Four: N, E, S, W.
inline constexpr std::array<Coord, 8> kEightOffsets = {
    {{-1, 0}, {-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}}};
inline constexpr std::array<Coord, 4> kFourOffsets = {{{-1, 0}, {0, 1}, {1, 0}, {0, -1}}};

inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 14695981039346656037ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

/// Rectangular grid of cell codes. Reads outside [0,h)x[0,w) return
/// Cell::Obstacle, so border cells need no special casing anywhere.
class StructureMatrix {
 public:
  static constexpr int kMaxDim = 1024;

  StructureMatrix() = default;

  StructureMatrix(int rows, int cols, Cell fill = Cell::Obstacle)
      : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1 || rows > kMaxDim || cols > kMaxDim) {
      throw std::invalid_argument("matrix dimensions out of range: " + std::to_string(rows) +
                                  "x" + std::to_string(cols));
    }
    cells_.assign(static_cast<size_t>(rows) * cols, fill);
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  bool in_bounds(Coord c) const noexcept {
    return c.row >= 0 && c.row < rows_ && c.col >= 0 && c.col < cols_;
  }

  /// Virtual-border read: out-of-bounds coordinates read Obstacle.
  Cell at(Coord c) const noexcept {
    if (!in_bounds(c)) return Cell::Obstacle;
    return cells_[static_cast<size_t>(c.row) * cols_ + c.col];
  }

  void set(Coord c, Cell value) {
    if (!in_bounds(c)) {
      throw std::out_of_range("set outside matrix: (" + std::to_string(c.row) + "," +
                              std::to_string(c.col) + ")");
    }
    cells_[static_cast<size_t>(c.row) * cols_ + c.col] = value;
  }

  const std::vector<Cell>& cells() const noexcept { return cells_; }

  int count(Cell value) const noexcept {
    int n = 0;
    for (Cell c : cells_) n += (c == value);
    return n;
  }

  friend bool operator==(const StructureMatrix&, const StructureMatrix&) = default;

  /// Content hash (dimensions + codes); used for archive dedup and provenance.
  uint64_t hash() const noexcept {
    const int32_t dims[2] = {rows_, cols_};
    uint64_t h = fnv1a64(dims, sizeof dims);
    return fnv1a64(cells_.data(), cells_.size(), h);
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cell> cells_;
};

namespace detail {
inline void require_in_bounds(const StructureMatrix& s, Coord c, const char* op) {
  if (!s.in_bounds(c)) {
    throw std::domain_error(std::string(op) + ": coordinate (" + std::to_string(c.row) + "," +
                            std::to_string(c.col) + ") outside " + std::to_string(s.rows()) +
                            "x" + std::to_string(s.cols()) + " matrix");
  }
}
}  // namespace detail

enum class Neighborhood { Eight, Four };

inline std::array<Cell, 8> eight_neighborhood(const StructureMatrix& s, Coord c) {
  detail::require_in_bounds(s, c, "eight_neighborhood");
  std::array<Cell, 8> out;
  for (size_t i = 0; i < 8; ++i) out[i] = s.at(c + kEightOffsets[i]);
  return out;
}

inline std::array<Cell, 4> four_neighborhood(const StructureMatrix& s, Coord c) {
  detail::require_in_bounds(s, c, "four_neighborhood");
  std::array<Cell, 4> out;
  for (size_t i = 0; i < 4; ++i) out[i] = s.at(c + kFourOffsets[i]);
  return out;
}

inline std::vector<Cell> neighborhood(const StructureMatrix& s, Coord c, Neighborhood kind) {
  if (kind == Neighborhood::Eight) {
    const auto n = eight_neighborhood(s, c);
    return {n.begin(), n.end()};
  }
  const auto n = four_neighborhood(s, c);
  return {n.begin(), n.end()};
}

/// Raw code sum over the eight neighbors; the virtual border contributes -1 per cell.
inline int neighbor_code_sum8(const StructureMatrix& s, Coord c) {
  int sum = 0;
  for (Cell n : eight_neighborhood(s, c)) sum += code(n);
  return sum;
}

/// Frontier: a free cell touching the outside or an obstacle (negative
/// eight-neighbor code sum). Inner: a free cell whose eight-neighbor code sum
/// is exactly zero. Everything else is Neither.
enum class SquareClass { Frontier, Inner, Neither };

inline SquareClass classify_square(const StructureMatrix& s, Coord c) {
  detail::require_in_bounds(s, c, "classify_square");
  if (s.at(c) != Cell::Free) return SquareClass::Neither;
  const int sum = neighbor_code_sum8(s, c);
  if (sum < 0) return SquareClass::Frontier;
  if (sum == 0) return SquareClass::Inner;
  return SquareClass::Neither;
}

/// Number of drivable 4-neighbors (lane, entrance or exit), in [0, 4].
inline int drivable_degree(const StructureMatrix& s, Coord c) {
  detail::require_in_bounds(s, c, "drivable_degree");
  int n = 0;
  for (Cell nb : four_neighborhood(s, c)) n += is_drivable(nb);
  return n;
}

/// True when the set of cells matching `keep` is 4-connected. An empty set
/// counts as connected.
template <class Pred>
bool connected4(const StructureMatrix& s, Pred keep) {
  Coord start{-1, -1};
  int total = 0;
  for (int r = 0; r < s.rows(); ++r) {
    for (int c = 0; c < s.cols(); ++c) {
      if (keep(s.at({r, c}))) {
        if (total == 0) start = {r, c};
        ++total;
      }
    }
  }
  if (total == 0) return true;

  std::vector<uint8_t> seen(static_cast<size_t>(s.rows()) * s.cols(), 0);
  std::vector<Coord> stack{start};
  seen[static_cast<size_t>(start.row) * s.cols() + start.col] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const Coord cur = stack.back();
    stack.pop_back();
    ++reached;
    for (Coord d : kFourOffsets) {
      const Coord nb = cur + d;
      if (!s.in_bounds(nb) || !keep(s.at(nb))) continue;
      auto& mark = seen[static_cast<size_t>(nb.row) * s.cols() + nb.col];
      if (!mark) {
        mark = 1;
        stack.push_back(nb);
      }
    }
  }
  return reached == total;
}

}  // namespace garagegen
