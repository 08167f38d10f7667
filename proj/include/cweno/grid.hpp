// grid.hpp
// Uniform 1D/2D cell grids with staggering bookkeeping.
#pragma once

#include <stdexcept>

namespace cweno {

// A staggered grid is shifted by +h/2 relative to the aligned grid of the
// same cell count. Two consecutive staggered steps return to aligned.
enum class GridOffset { aligned, staggered };

struct Grid1D {
    int n = 0;
    double x_left = 0.0;
    double x_right = 1.0;
    GridOffset offset = GridOffset::aligned;

    Grid1D() = default;
    Grid1D(int n_, double xl, double xr, GridOffset off = GridOffset::aligned)
        : n(n_), x_left(xl), x_right(xr), offset(off) {
        if (n < 4) throw std::invalid_argument("Grid1D: need at least 4 cells");
        if (!(x_right > x_left)) throw std::invalid_argument("Grid1D: empty domain");
    }

    double h() const { return (x_right - x_left) / n; }

    // Center of cell j; staggered grids are shifted by half a cell.
    double center(int j) const {
        double shift = (offset == GridOffset::staggered) ? 0.5 : 0.0;
        return x_left + (j + 0.5 + shift) * h();
    }

    double length() const { return x_right - x_left; }

    bool same_layout(const Grid1D& o) const {
        return n == o.n && x_left == o.x_left && x_right == o.x_right && offset == o.offset;
    }
};

struct Grid2D {
    int nx = 0, ny = 0;
    double x_left = 0.0, x_right = 1.0;
    double y_left = 0.0, y_right = 1.0;
    GridOffset offset_x = GridOffset::aligned;
    GridOffset offset_y = GridOffset::aligned;

    Grid2D() = default;
    Grid2D(int nx_, int ny_, double xl, double xr, double yl, double yr,
           GridOffset offx = GridOffset::aligned, GridOffset offy = GridOffset::aligned)
        : nx(nx_), ny(ny_), x_left(xl), x_right(xr), y_left(yl), y_right(yr),
          offset_x(offx), offset_y(offy) {
        if (nx < 4 || ny < 4) throw std::invalid_argument("Grid2D: need at least 4 cells per axis");
        if (!(x_right > x_left) || !(y_right > y_left))
            throw std::invalid_argument("Grid2D: empty domain");
    }

    double hx() const { return (x_right - x_left) / nx; }
    double hy() const { return (y_right - y_left) / ny; }

    double center_x(int i) const {
        double shift = (offset_x == GridOffset::staggered) ? 0.5 : 0.0;
        return x_left + (i + 0.5 + shift) * hx();
    }
    double center_y(int j) const {
        double shift = (offset_y == GridOffset::staggered) ? 0.5 : 0.0;
        return y_left + (j + 0.5 + shift) * hy();
    }

    double cell_area() const { return hx() * hy(); }

    bool same_layout(const Grid2D& o) const {
        return nx == o.nx && ny == o.ny && x_left == o.x_left && x_right == o.x_right &&
               y_left == o.y_left && y_right == o.y_right && offset_x == o.offset_x &&
               offset_y == o.offset_y;
    }
};

}  // namespace cweno
