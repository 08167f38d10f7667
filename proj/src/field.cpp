// field.cpp
#include "cweno/field.hpp"

#include <cmath>
#include <string>

namespace cweno {

namespace {

int wrap(int j, int n) {
    int m = j % n;
    return m < 0 ? m + n : m;
}

int clamp_cell(int j, int n) {
    if (j < 0) return 0;
    if (j >= n) return n - 1;
    return j;
}

}  // namespace

CellField1D extend_with_ghosts(const CellField1D& field, BoundaryCondition bc, int width) {
    const int n = field.grid.n;
    if (width < 1) throw std::invalid_argument("extend_with_ghosts: width must be >= 1");
    if (width > n)
        throw std::invalid_argument("extend_with_ghosts: stencil width " + std::to_string(width) +
                                    " exceeds cell count " + std::to_string(n));
    const double h = field.grid.h();
    Grid1D g(n + 2 * width, field.grid.x_left - width * h, field.grid.x_right + width * h,
             field.grid.offset);
    CellField1D out(g, field.d, field.time);
    for (int j = -width; j < n + width; ++j) {
        int src = (bc.x == BcKind::periodic) ? wrap(j, n) : clamp_cell(j, n);
        for (int r = 0; r < field.d; ++r) out.at(j + width, r) = field.at(src, r);
    }
    return out;
}

CellField2D extend_with_ghosts(const CellField2D& field, BoundaryCondition bc, int width) {
    const int nx = field.grid.nx, ny = field.grid.ny;
    if (width < 1) throw std::invalid_argument("extend_with_ghosts: width must be >= 1");
    if (width > nx || width > ny)
        throw std::invalid_argument("extend_with_ghosts: stencil width exceeds cell count");
    const double hx = field.grid.hx(), hy = field.grid.hy();
    Grid2D g(nx + 2 * width, ny + 2 * width, field.grid.x_left - width * hx,
             field.grid.x_right + width * hx, field.grid.y_left - width * hy,
             field.grid.y_right + width * hy, field.grid.offset_x, field.grid.offset_y);
    CellField2D out(g, field.d, field.time);
    for (int j = -width; j < ny + width; ++j) {
        int sj = (bc.y == BcKind::periodic) ? wrap(j, ny) : clamp_cell(j, ny);
        for (int i = -width; i < nx + width; ++i) {
            int si = (bc.x == BcKind::periodic) ? wrap(i, nx) : clamp_cell(i, nx);
            for (int r = 0; r < field.d; ++r)
                out.at(i + width, j + width, r) = field.at(si, sj, r);
        }
    }
    return out;
}

}  // namespace cweno
