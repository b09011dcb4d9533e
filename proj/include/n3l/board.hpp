#pragma once

// Board geometry and the no-3-in-line verifier: squares, queen lines
// (slopes 0, +1, -1, infinity), placements, goodness, lonely queens,
// and the uncovered region U.
//
// Squares are stored 0-based as (col, row) for every board size n.
// The centered view (x, y) = (col - (n-1)/2, row - (n-1)/2) exists only
// for odd n; line intercepts are reported in the centered frame for odd
// n and in the 0-based frame for even n.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace n3l {

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Square {
  int col = 0;
  int row = 0;
  friend constexpr auto operator<=>(const Square&, const Square&) = default;
};

constexpr bool on_board(Square s, int n) {
  return 0 <= s.col && s.col < n && 0 <= s.row && s.row < n;
}

// Row-major canonical index; also the DFS and CNF variable order.
constexpr int square_index(Square s, int n) { return s.row * n + s.col; }
constexpr Square square_at(int index, int n) { return {index % n, index / n}; }

constexpr bool has_centered_frame(int n) { return n % 2 == 1; }
constexpr int center_offset(int n) { return (n - 1) / 2; }

inline std::pair<int, int> to_centered(Square s, int n) {
  if (!has_centered_frame(n))
    throw std::invalid_argument("centered coordinates require odd n");
  return {s.col - center_offset(n), s.row - center_offset(n)};
}

inline Square from_centered(int x, int y, int n) {
  if (!has_centered_frame(n))
    throw std::invalid_argument("centered coordinates require odd n");
  return {x + center_offset(n), y + center_offset(n)};
}

enum class Slope : std::uint8_t { Vertical, Horizontal, DiagPlus, DiagMinus };

constexpr std::array<Slope, 4> all_slopes = {Slope::Vertical, Slope::Horizontal,
                                             Slope::DiagPlus, Slope::DiagMinus};

inline const char* slope_name(Slope s) {
  switch (s) {
    case Slope::Vertical: return "vertical";
    case Slope::Horizontal: return "horizontal";
    case Slope::DiagPlus: return "diag+";
    case Slope::DiagMinus: return "diag-";
  }
  return "?";
}

// A queen line. The intercept is frame-dependent (see header comment):
//   Vertical    x = intercept
//   Horizontal  y = intercept
//   DiagPlus    x - y = intercept
//   DiagMinus   x + y = intercept
struct Line {
  Slope slope = Slope::Vertical;
  int intercept = 0;
  friend constexpr auto operator<=>(const Line&, const Line&) = default;
};

namespace detail {

// Dense line ids for counting: verticals, horizontals, then diagonals.
constexpr int line_id_count(int n) { return 6 * n - 2; }

constexpr int line_id(Slope s, Square q, int n) {
  switch (s) {
    case Slope::Vertical: return q.col;
    case Slope::Horizontal: return n + q.row;
    case Slope::DiagPlus: return 2 * n + (q.col - q.row + n - 1);
    case Slope::DiagMinus: return 4 * n - 1 + (q.col + q.row);
  }
  return -1;
}

// Raw (0-based) intercept of the line of slope s through q.
constexpr int raw_intercept(Slope s, Square q) {
  switch (s) {
    case Slope::Vertical: return q.col;
    case Slope::Horizontal: return q.row;
    case Slope::DiagPlus: return q.col - q.row;
    case Slope::DiagMinus: return q.col + q.row;
  }
  return 0;
}

constexpr int reported_intercept(Slope s, Square q, int n) {
  int raw = raw_intercept(s, q);
  if (!has_centered_frame(n)) return raw;
  switch (s) {
    case Slope::Vertical:
    case Slope::Horizontal: return raw - center_offset(n);
    case Slope::DiagPlus: return raw;  // x - y == col - row
    case Slope::DiagMinus: return raw - 2 * center_offset(n);
  }
  return raw;
}

}  // namespace detail

inline Line line_through(Slope s, Square q, int n) {
  return {s, detail::reported_intercept(s, q, n)};
}

inline bool line_covers(const Line& l, Square q, int n) {
  return detail::reported_intercept(l.slope, q, n) == l.intercept;
}

inline std::vector<Square> squares_on_line(const Line& l, int n) {
  std::vector<Square> out;
  for (int idx = 0; idx < n * n; ++idx) {
    Square s = square_at(idx, n);
    if (line_covers(l, s, n)) out.push_back(s);
  }
  return out;
}

// The four lines through s, one per slope family.
inline std::array<Line, 4> lines_through(Square s, int n) {
  if (!on_board(s, n)) throw std::invalid_argument("square off the board");
  return {line_through(Slope::Vertical, s, n), line_through(Slope::Horizontal, s, n),
          line_through(Slope::DiagPlus, s, n), line_through(Slope::DiagMinus, s, n)};
}

// A set of queens on an n x n board. Queens are kept sorted by row-major
// index and must be distinct and on the board.
struct Placement {
  int n = 1;
  std::vector<Square> queens;

  Placement() = default;
  Placement(int board, std::vector<Square> qs) : n(board), queens(std::move(qs)) {
    if (n < 1) throw std::invalid_argument("board size must be >= 1");
    std::sort(queens.begin(), queens.end(), [&](Square a, Square b) {
      return square_index(a, n) < square_index(b, n);
    });
    for (std::size_t i = 0; i < queens.size(); ++i) {
      if (!on_board(queens[i], n)) throw std::invalid_argument("queen off the board");
      if (i > 0 && queens[i] == queens[i - 1])
        throw std::invalid_argument("duplicate queen");
    }
  }

  static Placement from_centered(int n, const std::vector<std::pair<int, int>>& xy) {
    std::vector<Square> qs;
    qs.reserve(xy.size());
    for (auto [x, y] : xy) qs.push_back(n3l::from_centered(x, y, n));
    return Placement(n, std::move(qs));
  }

  int size() const { return static_cast<int>(queens.size()); }

  bool occupied(Square s) const {
    return std::binary_search(queens.begin(), queens.end(), s,
                              [&](Square a, Square b) {
                                return square_index(a, n) < square_index(b, n);
                              });
  }

  friend bool operator==(const Placement&, const Placement&) = default;
};

namespace detail {

// Queens per line id.
inline std::vector<int> line_counts(const Placement& p) {
  std::vector<int> counts(line_id_count(p.n), 0);
  for (Square q : p.queens)
    for (Slope s : all_slopes) ++counts[line_id(s, q, p.n)];
  return counts;
}

}  // namespace detail

// Lines covering at least two queens.
inline std::vector<Line> defined_lines(const Placement& p) {
  auto counts = detail::line_counts(p);
  std::vector<Line> out;
  for (Square q : p.queens) {
    for (Slope s : all_slopes) {
      if (counts[detail::line_id(s, q, p.n)] >= 2)
        out.push_back(line_through(s, q, p.n));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool has_three_in_line(const Placement& p) {
  auto counts = detail::line_counts(p);
  return std::any_of(counts.begin(), counts.end(), [](int c) { return c >= 3; });
}

// Empty squares whose addition keeps the placement 3-in-line-free, i.e.
// squares with no incident line already holding two queens.
inline std::vector<Square> addable_squares(const Placement& p) {
  if (has_three_in_line(p))
    throw std::invalid_argument("placement already has three in a line");
  auto counts = detail::line_counts(p);
  std::vector<Square> out;
  for (int idx = 0; idx < p.n * p.n; ++idx) {
    Square s = square_at(idx, p.n);
    if (p.occupied(s)) continue;
    bool blocked = false;
    for (Slope sl : all_slopes)
      if (counts[detail::line_id(sl, s, p.n)] >= 2) blocked = true;
    if (!blocked) out.push_back(s);
  }
  return out;
}

inline bool is_good(const Placement& p) {
  return !has_three_in_line(p) && addable_squares(p).empty();
}

// Queens on no defined line (not collinear with any other queen).
inline std::vector<Square> lonely_queens(const Placement& p) {
  auto counts = detail::line_counts(p);
  std::vector<Square> out;
  for (Square q : p.queens) {
    bool collinear = false;
    for (Slope s : all_slopes)
      if (counts[detail::line_id(s, q, p.n)] >= 2) collinear = true;
    if (!collinear) out.push_back(q);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Region U: squares uncovered by defined lines of slope 0 or infinity.

struct RegionU {
  std::vector<Square> squares;  // row-major order
  // Extremal nonempty column/row indices (centered frame); unset if U is empty.
  std::optional<int> col_min, col_max;
  std::optional<int> row_min, row_max;
  std::vector<Square> perimeter;  // C_a, C_b, R_a', R_b' united

  bool empty() const { return squares.empty(); }
};

inline RegionU region_U(const Placement& p) {
  if (!has_centered_frame(p.n))
    throw UnsupportedError("region U requires an odd board (centered frame)");
  auto counts = detail::line_counts(p);
  std::vector<bool> col_covered(p.n, false), row_covered(p.n, false);
  for (Square q : p.queens) {
    if (counts[detail::line_id(Slope::Vertical, q, p.n)] >= 2) col_covered[q.col] = true;
    if (counts[detail::line_id(Slope::Horizontal, q, p.n)] >= 2) row_covered[q.row] = true;
  }
  RegionU u;
  for (int idx = 0; idx < p.n * p.n; ++idx) {
    Square s = square_at(idx, p.n);
    if (!col_covered[s.col] && !row_covered[s.row]) u.squares.push_back(s);
  }
  if (u.squares.empty()) return u;

  int off = center_offset(p.n);
  for (Square s : u.squares) {
    int x = s.col - off, y = s.row - off;
    u.col_min = u.col_min ? std::min(*u.col_min, x) : x;
    u.col_max = u.col_max ? std::max(*u.col_max, x) : x;
    u.row_min = u.row_min ? std::min(*u.row_min, y) : y;
    u.row_max = u.row_max ? std::max(*u.row_max, y) : y;
  }
  for (Square s : u.squares) {
    int x = s.col - off, y = s.row - off;
    if (x == *u.col_min || x == *u.col_max || y == *u.row_min || y == *u.row_max)
      u.perimeter.push_back(s);
  }
  return u;
}

// ---------------------------------------------------------------------------
// Dihedral group of the square.

enum class Dihedral : std::uint8_t {
  Identity,
  Rot90,   // counter-clockwise
  Rot180,
  Rot270,
  FlipH,   // mirror across the vertical axis (col -> n-1-col)
  FlipV,   // mirror across the horizontal axis
  FlipMain,  // main diagonal (col <-> row)
  FlipAnti
};

constexpr std::array<Dihedral, 8> all_dihedral = {
    Dihedral::Identity, Dihedral::Rot90, Dihedral::Rot180, Dihedral::Rot270,
    Dihedral::FlipH,    Dihedral::FlipV, Dihedral::FlipMain, Dihedral::FlipAnti};

constexpr Square apply(Dihedral g, Square s, int n) {
  int c = s.col, r = s.row, m = n - 1;
  switch (g) {
    case Dihedral::Identity: return {c, r};
    case Dihedral::Rot90: return {m - r, c};
    case Dihedral::Rot180: return {m - c, m - r};
    case Dihedral::Rot270: return {r, m - c};
    case Dihedral::FlipH: return {m - c, r};
    case Dihedral::FlipV: return {c, m - r};
    case Dihedral::FlipMain: return {r, c};
    case Dihedral::FlipAnti: return {m - r, m - c};
  }
  return s;
}

inline Placement transform(const Placement& p, Dihedral g) {
  std::vector<Square> qs;
  qs.reserve(p.queens.size());
  for (Square q : p.queens) qs.push_back(apply(g, q, p.n));
  return Placement(p.n, std::move(qs));
}

// ---------------------------------------------------------------------------
// The structural conditions of a "Case 2" placement on n = 4k+1: size n,
// no three in a line, exactly one lonely queen, and every other queen on a
// defined line of each of the four slopes. Returns the first violated
// condition, or nullopt if the placement qualifies.

inline std::optional<std::string> case2_structure_violation(const Placement& p) {
  if (p.n % 4 != 1 || p.n < 5)
    return "board size " + std::to_string(p.n) + " is not 4k+1 with k >= 1";
  if (p.size() != p.n)
    return "size " + std::to_string(p.size()) + " != n = " + std::to_string(p.n);
  if (has_three_in_line(p)) return "three queens in a line";
  auto lonely = lonely_queens(p);
  if (lonely.size() != 1)
    return std::to_string(lonely.size()) + " lonely queens (need exactly 1)";
  auto counts = detail::line_counts(p);
  for (Square q : p.queens) {
    if (q == lonely.front()) continue;
    for (Slope s : all_slopes) {
      if (counts[detail::line_id(s, q, p.n)] < 2) {
        auto [x, y] = to_centered(q, p.n);
        return "queen (" + std::to_string(x) + "," + std::to_string(y) +
               ") defines no " + slope_name(s) + " line";
      }
    }
  }
  return std::nullopt;
}

// Defined-line intercepts per slope, in the reporting frame, sorted.
inline std::array<std::vector<int>, 4> intercepts_by_slope(const Placement& p) {
  std::array<std::vector<int>, 4> out;
  for (const Line& l : defined_lines(p))
    out[static_cast<int>(l.slope)].push_back(l.intercept);
  return out;
}

}  // namespace n3l
