#pragma once

#include <array>
#include <compare>
#include <cstdlib>
#include <string>

namespace surfdeform {

// Doubled-integer lattice: data qubits sit on (even, even), interior check
// ancillas on (odd, odd) plaquette centers, boundary check ancillas on edge
// midpoints (one odd coordinate).
struct Coord {
    int row = 0;
    int col = 0;
    auto operator<=>(const Coord&) const = default;
    std::string str() const {
        return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
    }
};

inline bool is_data_site(Coord c) { return !(c.row & 1) && !(c.col & 1); }
inline bool is_plaquette_site(Coord c) { return (c.row & 1) && (c.col & 1); }
inline bool is_midpoint_site(Coord c) { return ((c.row & 1) != 0) != ((c.col & 1) != 0); }

enum class CheckType { X, Z };

inline CheckType opposite(CheckType t) { return t == CheckType::X ? CheckType::Z : CheckType::X; }
inline char check_char(CheckType t) { return t == CheckType::X ? 'X' : 'Z'; }

// Checkerboard color of a plaquette center (odd, odd).
inline CheckType plaquette_type(Coord p) {
    int s = p.row + p.col;
    return ((s % 4 + 4) % 4) == 2 ? CheckType::X : CheckType::Z;
}

// The four data corners of the cell centered at an (odd, odd) site.
inline std::array<Coord, 4> cell_corners(Coord p) {
    return {Coord{p.row - 1, p.col - 1}, Coord{p.row - 1, p.col + 1},
            Coord{p.row + 1, p.col - 1}, Coord{p.row + 1, p.col + 1}};
}

// The four plaquette centers diagonally adjacent to a data site.
inline std::array<Coord, 4> data_plaquettes(Coord q) {
    return {Coord{q.row - 1, q.col - 1}, Coord{q.row - 1, q.col + 1},
            Coord{q.row + 1, q.col - 1}, Coord{q.row + 1, q.col + 1}};
}

// Boundary naming: X_L terminates on the left/right sides (X boundaries),
// Z_L on the top/bottom sides (Z boundaries).
enum class BoundarySide { XL1 = 0, XL2 = 1, ZL1 = 2, ZL2 = 3 };  // left, right, top, bottom

inline CheckType boundary_type(BoundarySide s) {
    return (s == BoundarySide::XL1 || s == BoundarySide::XL2) ? CheckType::X : CheckType::Z;
}

inline const char* side_name(BoundarySide s) {
    switch (s) {
        case BoundarySide::XL1: return "XL1";
        case BoundarySide::XL2: return "XL2";
        case BoundarySide::ZL1: return "ZL1";
        default: return "ZL2";
    }
}

inline int manhattan(Coord a, Coord b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

}  // namespace surfdeform
