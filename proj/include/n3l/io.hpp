#pragma once

// Placement serialization: JSON files, algebraic piece lists ("Qe5"),
// and ASCII board rendering.
//
// JSON schema:
//   {"n": 9, "coords": "zero-based" | "centered", "queens": [[col,row], ...]}
// The loader normalizes to zero-based; the writer always emits zero-based.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "n3l/board.hpp"

namespace n3l {

inline nlohmann::ordered_json placement_to_json(const Placement& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["coords"] = "zero-based";
  auto& arr = j["queens"] = nlohmann::ordered_json::array();
  for (Square q : p.queens) arr.push_back({q.col, q.row});
  return j;
}

inline Placement placement_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("queens"))
    throw std::invalid_argument("placement JSON needs \"n\" and \"queens\"");
  int n = j.at("n").get<int>();
  std::string coords = j.value("coords", "zero-based");
  bool centered = false;
  if (coords == "centered")
    centered = true;
  else if (coords != "zero-based")
    throw std::invalid_argument("unknown coords frame: " + coords);
  std::vector<Square> qs;
  for (const auto& e : j.at("queens")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("queen entries must be [col,row] pairs");
    int a = e[0].get<int>(), b = e[1].get<int>();
    qs.push_back(centered ? from_centered(a, b, n) : Square{a, b});
  }
  return Placement(n, std::move(qs));
}

inline Placement load_placement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open placement file: " + path);
  nlohmann::json j;
  in >> j;
  return placement_from_json(j);
}

inline void save_placement(const Placement& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write placement file: " + path);
  out << placement_to_json(p).dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Algebraic notation: file letter a.. + 1-based rank, optional leading piece
// letter, e.g. "Qe5" or "e5". Files map to columns, ranks to rows.

inline Square parse_algebraic(std::string_view sq, int n) {
  std::size_t i = 0;
  if (i < sq.size() && (sq[i] == 'Q' || sq[i] == 'q')) ++i;
  if (i >= sq.size() || !std::islower(static_cast<unsigned char>(sq[i])))
    throw std::invalid_argument("bad algebraic square: " + std::string(sq));
  int col = sq[i] - 'a';
  ++i;
  int rank = 0;
  if (i >= sq.size()) throw std::invalid_argument("bad algebraic square: " + std::string(sq));
  for (; i < sq.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(sq[i])))
      throw std::invalid_argument("bad algebraic square: " + std::string(sq));
    rank = rank * 10 + (sq[i] - '0');
  }
  Square s{col, rank - 1};
  if (!on_board(s, n)) throw std::invalid_argument("square off the board: " + std::string(sq));
  return s;
}

// Comma- or whitespace-separated list of algebraic squares.
inline Placement placement_from_algebraic(const std::string& pieces, int n) {
  std::vector<Square> qs;
  std::string tok;
  std::istringstream in(pieces);
  while (std::getline(in, tok, ',')) {
    std::istringstream ws(tok);
    std::string sq;
    while (ws >> sq) qs.push_back(parse_algebraic(sq, n));
  }
  return Placement(n, std::move(qs));
}

// ---------------------------------------------------------------------------
// ASCII rendering: 'Q' queens, 'x' addable squares, '.' otherwise. The top
// line is the highest row, matching chessboard orientation.

inline std::string render_board(const Placement& p, bool mark_addable = true) {
  std::vector<Square> marks;
  if (mark_addable && !has_three_in_line(p)) marks = addable_squares(p);
  std::string out;
  for (int row = p.n - 1; row >= 0; --row) {
    for (int col = 0; col < p.n; ++col) {
      Square s{col, row};
      char c = '.';
      if (p.occupied(s))
        c = 'Q';
      else if (std::find(marks.begin(), marks.end(), s) != marks.end())
        c = 'x';
      out += c;
    }
    out += '\n';
  }
  return out;
}

}  // namespace n3l
