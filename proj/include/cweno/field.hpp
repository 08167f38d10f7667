// field.hpp
// Multi-component cell-average storage and ghost-cell boundary handling.
#pragma once

#include <vector>

#include "cweno/grid.hpp"

namespace cweno {

enum class BcKind { periodic, outflow };

struct BoundaryCondition {
    BcKind x = BcKind::periodic;
    BcKind y = BcKind::periodic;  // ignored in 1D
};

// Cell averages on a 1D grid, d components per cell, cell-major storage.
struct CellField1D {
    Grid1D grid;
    int d = 1;
    double time = 0.0;
    std::vector<double> values;

    CellField1D() = default;
    CellField1D(const Grid1D& g, int d_, double t = 0.0)
        : grid(g), d(d_), time(t), values(static_cast<size_t>(g.n) * d_, 0.0) {
        if (d < 1) throw std::invalid_argument("CellField1D: d must be >= 1");
    }

    double& at(int j, int r = 0) { return values[static_cast<size_t>(j) * d + r]; }
    double at(int j, int r = 0) const { return values[static_cast<size_t>(j) * d + r]; }
};

// Cell averages on a 2D grid, row-major in cells (x fastest), cell-major in components.
struct CellField2D {
    Grid2D grid;
    int d = 1;
    double time = 0.0;
    std::vector<double> values;

    CellField2D() = default;
    CellField2D(const Grid2D& g, int d_, double t = 0.0)
        : grid(g), d(d_), time(t),
          values(static_cast<size_t>(g.nx) * g.ny * d_, 0.0) {
        if (d < 1) throw std::invalid_argument("CellField2D: d must be >= 1");
    }

    size_t idx(int i, int j, int r = 0) const {
        return (static_cast<size_t>(j) * grid.nx + i) * d + r;
    }
    double& at(int i, int j, int r = 0) { return values[idx(i, j, r)]; }
    double at(int i, int j, int r = 0) const { return values[idx(i, j, r)]; }
};

// Pads a field with `width` ghost cells per side. Periodic ghosts wrap around
// modulo n; outflow ghosts copy the nearest interior cell. The returned field
// lives on a grid whose bounds are extended by width*h, so cell centers of the
// interior part are unchanged.
CellField1D extend_with_ghosts(const CellField1D& field, BoundaryCondition bc, int width);
CellField2D extend_with_ghosts(const CellField2D& field, BoundaryCondition bc, int width);

// True iff the field sits on the same staggering offset as the reference grid.
// Used to ensure error norms are taken only after an even number of staggered steps.
inline bool destagger_pair_check(const CellField1D& field, const Grid1D& reference) {
    return field.grid.offset == reference.offset;
}
inline bool destagger_pair_check(const CellField2D& field, const Grid2D& reference) {
    return field.grid.offset_x == reference.offset_x && field.grid.offset_y == reference.offset_y;
}

}  // namespace cweno
