#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "garagegen/grid.hpp"
#include "garagegen/rng.hpp"

namespace garagegen {

/// Axis-aligned rectangle with inclusive corners, snapped to grid cells.
struct Rect {
  Coord top_left;
  Coord bottom_right;

  bool contains(Coord c) const noexcept {
    return c.row >= top_left.row && c.row <= bottom_right.row && c.col >= top_left.col &&
           c.col <= bottom_right.col;
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

struct StaticGenConfig {
  int height = 7;
  int width = 9;
  int n_rects = 3;
  int n_entrances = 1;
  int n_exits = 1;
  int sigma1 = 10;  // min pairwise Manhattan distance between entrance/exit cells
  int sigma2 = 4;   // min pairwise Manhattan distance between obstacle cells
  int n_obstacles = 0;
  uint64_t seed = 0;
  int max_retries = 1000;

  void validate() const {
    if (height < 1 || width < 1 || height > StructureMatrix::kMaxDim ||
        width > StructureMatrix::kMaxDim) {
      throw std::invalid_argument("static config: grid dimensions out of range");
    }
    if (n_rects < 1) throw std::invalid_argument("static config: n_rects must be >= 1");
    if (n_entrances < 1) throw std::invalid_argument("static config: n_entrances must be >= 1");
    if (n_exits < 1) throw std::invalid_argument("static config: n_exits must be >= 1");
    if (sigma1 < 1) throw std::invalid_argument("static config: sigma1 must be >= 1");
    if (sigma2 < 1) throw std::invalid_argument("static config: sigma2 must be >= 1");
    if (n_obstacles < 0) throw std::invalid_argument("static config: n_obstacles must be >= 0");
    if (max_retries < 1) throw std::invalid_argument("static config: max_retries must be >= 1");
  }
};

/// Thrown when rejection sampling exhausts its retry budget.
class generation_error : public std::runtime_error {
 public:
  generation_error(std::string constraint, int retries_used)
      : std::runtime_error("generation infeasible after " + std::to_string(retries_used) +
                           " retries (constraint: " + constraint + ")"),
        constraint_(std::move(constraint)),
        retries_used_(retries_used) {}

  const std::string& constraint() const noexcept { return constraint_; }
  int retries_used() const noexcept { return retries_used_; }

 private:
  std::string constraint_;
  int retries_used_;
};

struct Violation {
  std::string kind;    // stable identifier, see validate_static
  std::string detail;  // human-readable context
  Coord at{-1, -1};
};

struct StaticReport {
  int contour_cells = 0;
  std::vector<Coord> entrances;
  std::vector<Coord> exits;
  std::vector<Coord> obstacles;
  int retries_used = 0;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

inline Rect rect_from_diagonal(Coord a, Coord b) {
  return Rect{{std::min(a.row, b.row), std::min(a.col, b.col)},
              {std::max(a.row, b.row), std::max(a.col, b.col)}};
}

// Every obstacle/outside cell must be 4-reachable from the matrix edge through
// obstacle/outside cells; otherwise the union enclosed a hole.
inline bool complement_touches_border(const StructureMatrix& s) {
  const int h = s.rows(), w = s.cols();
  std::vector<uint8_t> seen(static_cast<size_t>(h) * w, 0);
  std::vector<Coord> stack;
  auto push_if_outside = [&](Coord c) {
    if (s.at(c) != Cell::Obstacle) return;
    auto& mark = seen[static_cast<size_t>(c.row) * w + c.col];
    if (!mark) {
      mark = 1;
      stack.push_back(c);
    }
  };
  for (int r = 0; r < h; ++r) {
    push_if_outside({r, 0});
    push_if_outside({r, w - 1});
  }
  for (int c = 0; c < w; ++c) {
    push_if_outside({0, c});
    push_if_outside({h - 1, c});
  }
  while (!stack.empty()) {
    const Coord cur = stack.back();
    stack.pop_back();
    for (Coord d : kFourOffsets) {
      const Coord nb = cur + d;
      if (s.in_bounds(nb)) push_if_outside(nb);
    }
  }
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (s.at({r, c}) == Cell::Obstacle && !seen[static_cast<size_t>(r) * w + c]) return false;
    }
  }
  return true;
}

// Interior blocked cells are the placed obstacles; border-connected blocked
// cells are the outside of the floor plan.
inline std::vector<Coord> interior_blocked_cells(const StructureMatrix& s) {
  const int h = s.rows(), w = s.cols();
  std::vector<uint8_t> outside(static_cast<size_t>(h) * w, 0);
  std::vector<Coord> stack;
  auto push_outside = [&](Coord c) {
    if (s.at(c) != Cell::Obstacle) return;
    auto& mark = outside[static_cast<size_t>(c.row) * w + c.col];
    if (!mark) {
      mark = 1;
      stack.push_back(c);
    }
  };
  for (int r = 0; r < h; ++r) {
    push_outside({r, 0});
    push_outside({r, w - 1});
  }
  for (int c = 0; c < w; ++c) {
    push_outside({0, c});
    push_outside({h - 1, c});
  }
  while (!stack.empty()) {
    const Coord cur = stack.back();
    stack.pop_back();
    for (Coord d : kFourOffsets) {
      const Coord nb = cur + d;
      if (s.in_bounds(nb)) push_outside(nb);
    }
  }
  std::vector<Coord> interior;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (s.at({r, c}) == Cell::Obstacle && !outside[static_cast<size_t>(r) * w + c]) {
        interior.push_back({r, c});
      }
    }
  }
  return interior;
}

}  // namespace detail

/// Draws n_rects random rectangles (two i.i.d. uniform grid points form each
/// diagonal) and regenerates the whole set until their union is a single
/// 4-connected region without enclosed holes. Deterministic in (cfg, rng).
inline StructureMatrix generate_contour(const StaticGenConfig& cfg, Rng& rng,
                                        std::vector<Rect>* rects_out = nullptr,
                                        int* retries_out = nullptr) {
  cfg.validate();
  int retries = 0;
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    std::vector<Rect> rects;
    rects.reserve(cfg.n_rects);
    for (int i = 0; i < cfg.n_rects; ++i) {
      const Coord a{rng.below_int(cfg.height), rng.below_int(cfg.width)};
      const Coord b{rng.below_int(cfg.height), rng.below_int(cfg.width)};
      rects.push_back(detail::rect_from_diagonal(a, b));
    }
    StructureMatrix s(cfg.height, cfg.width, Cell::Obstacle);
    for (const Rect& r : rects) {
      for (int row = r.top_left.row; row <= r.bottom_right.row; ++row) {
        for (int col = r.top_left.col; col <= r.bottom_right.col; ++col) {
          s.set({row, col}, Cell::Free);
        }
      }
    }
    if (connected4(s, [](Cell c) { return c == Cell::Free; }) &&
        detail::complement_touches_border(s)) {
      if (rects_out) *rects_out = std::move(rects);
      if (retries_out) *retries_out = retries;
      return s;
    }
    ++retries;
  }
  throw generation_error("contour-connectivity", retries);
}

/// Cells able to host an entrance or exit: free, on the frontier, and mid-wall
/// (eight-neighbor code sum exactly -3, which excludes corners).
inline std::vector<Coord> entrance_candidates(const StructureMatrix& s) {
  std::vector<Coord> pool;
  for (int r = 0; r < s.rows(); ++r) {
    for (int c = 0; c < s.cols(); ++c) {
      const Coord at{r, c};
      if (s.at(at) == Cell::Free && classify_square(s, at) == SquareClass::Frontier &&
          neighbor_code_sum8(s, at) == -3) {
        pool.push_back(at);
      }
    }
  }
  return pool;
}

/// Marks n_entrances cells Entrance and n_exits cells Exit, all drawn
/// uniformly from the same candidate pool, with pairwise Manhattan distance
/// >= sigma1 across the combined set. The whole assignment restarts when a
/// draw collides, so accepted assignments stay uniform over the feasible sets.
inline StructureMatrix place_entrances(const StructureMatrix& s, const StaticGenConfig& cfg,
                                       Rng& rng, int* retries_out = nullptr) {
  cfg.validate();
  const std::vector<Coord> pool = entrance_candidates(s);
  const int total = cfg.n_entrances + cfg.n_exits;
  if (static_cast<int>(pool.size()) < total) {
    throw generation_error("entrance-eligible", 0);
  }
  int retries = 0;
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    std::vector<Coord> chosen;
    chosen.reserve(total);
    bool ok = true;
    for (int i = 0; i < total && ok; ++i) {
      const Coord pick = pool[rng.below(pool.size())];
      for (const Coord& prev : chosen) {
        if (manhattan(pick, prev) < cfg.sigma1) {
          ok = false;
          break;
        }
      }
      if (ok) chosen.push_back(pick);
    }
    if (ok) {
      StructureMatrix out = s;
      for (int i = 0; i < total; ++i) {
        out.set(chosen[i], i < cfg.n_entrances ? Cell::Entrance : Cell::Exit);
      }
      if (retries_out) *retries_out = retries;
      return out;
    }
    ++retries;
  }
  throw generation_error("sigma1", retries);
}

/// Converts n_obstacles inner squares to obstacles, pairwise Manhattan
/// distance >= sigma2. Inner-ness is evaluated on the matrix as it stands at
/// each placement (entrances and exits included in the neighbor sums, so a
/// doorway's surroundings are never eligible).
inline StructureMatrix place_obstacles(const StructureMatrix& s, const StaticGenConfig& cfg,
                                       Rng& rng, int* retries_out = nullptr) {
  cfg.validate();
  if (cfg.n_obstacles == 0) {
    if (retries_out) *retries_out = 0;
    return s;
  }
  int retries = 0;
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    StructureMatrix work = s;
    std::vector<Coord> chosen;
    chosen.reserve(cfg.n_obstacles);
    bool ok = true;
    for (int i = 0; i < cfg.n_obstacles && ok; ++i) {
      std::vector<Coord> eligible;
      for (int r = 0; r < work.rows(); ++r) {
        for (int c = 0; c < work.cols(); ++c) {
          if (classify_square(work, {r, c}) == SquareClass::Inner) eligible.push_back({r, c});
        }
      }
      if (eligible.empty()) {
        if (i == 0) throw generation_error("obstacle-eligible", retries);
        ok = false;
        break;
      }
      const Coord pick = eligible[rng.below(eligible.size())];
      for (const Coord& prev : chosen) {
        if (manhattan(pick, prev) < cfg.sigma2) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen.push_back(pick);
        work.set(pick, Cell::Obstacle);
      }
    }
    if (ok) {
      if (retries_out) *retries_out = retries;
      return work;
    }
    ++retries;
  }
  throw generation_error("sigma2", retries);
}

/// Recomputes every placement constraint from the matrix alone and reports
/// violations instead of throwing. Violation kinds:
///   contour-empty, contour-disconnected, entrance-count, exit-count,
///   entrance-not-frontier, entrance-corner, sigma1,
///   obstacle-count, obstacle-not-inner, sigma2.
/// Entrance/exit wall checks run with those cells reverted to Free, matching
/// the pool they were drawn from; obstacle checks revert one obstacle at a
/// time, matching the state each placement saw.
inline StaticReport validate_static(const StructureMatrix& s, const StaticGenConfig& cfg) {
  StaticReport report;
  auto flag = [&report](std::string kind, std::string detail, Coord at = {-1, -1}) {
    report.violations.push_back({std::move(kind), std::move(detail), at});
  };

  for (int r = 0; r < s.rows(); ++r) {
    for (int c = 0; c < s.cols(); ++c) {
      switch (s.at({r, c})) {
        case Cell::Entrance: report.entrances.push_back({r, c}); break;
        case Cell::Exit: report.exits.push_back({r, c}); break;
        case Cell::Obstacle: break;
        default: break;
      }
      if (s.at({r, c}) != Cell::Obstacle) ++report.contour_cells;
    }
  }
  report.obstacles = detail::interior_blocked_cells(s);

  if (report.contour_cells == 0) {
    flag("contour-empty", "no floor cells present");
    return report;
  }
  if (!connected4(s, [](Cell c) { return c != Cell::Obstacle; })) {
    flag("contour-disconnected", "floor cells form more than one 4-connected region");
  }

  if (static_cast<int>(report.entrances.size()) != cfg.n_entrances) {
    flag("entrance-count", "found " + std::to_string(report.entrances.size()) + ", expected " +
                               std::to_string(cfg.n_entrances));
  }
  if (static_cast<int>(report.exits.size()) != cfg.n_exits) {
    flag("exit-count", "found " + std::to_string(report.exits.size()) + ", expected " +
                           std::to_string(cfg.n_exits));
  }

  StructureMatrix stripped = s;
  std::vector<Coord> doors = report.entrances;
  doors.insert(doors.end(), report.exits.begin(), report.exits.end());
  for (const Coord& d : doors) stripped.set(d, Cell::Free);
  for (const Coord& d : doors) {
    const int sum = neighbor_code_sum8(stripped, d);
    if (sum >= 0) {
      flag("entrance-not-frontier", "eight-neighbor sum " + std::to_string(sum), d);
    } else if (sum != -3) {
      flag("entrance-corner", "eight-neighbor sum " + std::to_string(sum) + ", expected -3", d);
    }
  }
  for (size_t i = 0; i < doors.size(); ++i) {
    for (size_t j = i + 1; j < doors.size(); ++j) {
      const int dist = manhattan(doors[i], doors[j]);
      if (dist < cfg.sigma1) {
        flag("sigma1", "distance " + std::to_string(dist) + " < " + std::to_string(cfg.sigma1),
             doors[j]);
      }
    }
  }

  if (static_cast<int>(report.obstacles.size()) != cfg.n_obstacles) {
    flag("obstacle-count", "found " + std::to_string(report.obstacles.size()) + ", expected " +
                               std::to_string(cfg.n_obstacles));
  }
  StructureMatrix reverted = s;
  for (const Coord& o : report.obstacles) {
    reverted.set(o, Cell::Free);
    if (classify_square(reverted, o) != SquareClass::Inner) {
      flag("obstacle-not-inner",
           "eight-neighbor sum " + std::to_string(neighbor_code_sum8(reverted, o)), o);
    }
    reverted.set(o, Cell::Obstacle);
  }
  for (size_t i = 0; i < report.obstacles.size(); ++i) {
    for (size_t j = i + 1; j < report.obstacles.size(); ++j) {
      const int dist = manhattan(report.obstacles[i], report.obstacles[j]);
      if (dist < cfg.sigma2) {
        flag("sigma2", "distance " + std::to_string(dist) + " < " + std::to_string(cfg.sigma2),
             report.obstacles[j]);
      }
    }
  }
  return report;
}

struct StaticResult {
  StructureMatrix matrix;
  StaticReport report;
  std::vector<Rect> rects;
};

/// Full static pipeline: contour, entrances/exits, obstacles, validation.
/// Deterministic in cfg.seed.
inline StaticResult run_static_pipeline(const StaticGenConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  StaticResult result;
  int retries_contour = 0, retries_doors = 0, retries_obstacles = 0;
  StructureMatrix contour = generate_contour(cfg, rng, &result.rects, &retries_contour);
  StructureMatrix with_doors = place_entrances(contour, cfg, rng, &retries_doors);
  result.matrix = place_obstacles(with_doors, cfg, rng, &retries_obstacles);
  result.report = validate_static(result.matrix, cfg);
  result.report.retries_used = retries_contour + retries_doors + retries_obstacles;
  return result;
}

}  // namespace garagegen
