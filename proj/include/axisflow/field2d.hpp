#pragma once

#include <cmath>
#include <vector>

#include "axisflow/errors.hpp"

namespace axisflow::pde {

/// Uniform node grid on the (r, z) half-strip: r in [0, r_max] with nr cells
/// (nr+1 nodes, node 0 on the symmetry axis), z periodic with nz nodes.
struct Grid2D {
    int nr = 0;
    int nz = 0;
    double r_max = 0.0;
    double z_period = 0.0;
    double dr = 0.0;
    double dz = 0.0;

    Grid2D() = default;
    Grid2D(int nr_, int nz_, double r_max_, double z_period_)
        : nr(nr_), nz(nz_), r_max(r_max_), z_period(z_period_) {
        if (nr < 16 || nz < 16) throw DomainError("Grid2D requires nr >= 16 and nz >= 16");
        if (!(r_max > 0.0) || !(z_period > 0.0)) {
            throw DomainError("Grid2D requires positive extents");
        }
        dr = r_max / nr;
        dz = z_period / nz;
    }

    double r(int i) const { return i * dr; }
    double z(int j) const { return j * dz; }
    int jp(int j) const { return j + 1 < nz ? j + 1 : 0; }
    int jm(int j) const { return j > 0 ? j - 1 : nz - 1; }
};

/// Dense (nr+1) x nz array of samples, z-contiguous rows.
struct Field2D {
    int ni = 0;
    int nj = 0;
    std::vector<double> data;

    Field2D() = default;
    Field2D(int ni_, int nj_, double fill = 0.0) : ni(ni_), nj(nj_), data(ni_ * nj_, fill) {}
    explicit Field2D(const Grid2D& g, double fill = 0.0) : Field2D(g.nr + 1, g.nz, fill) {}

    double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * nj + j]; }
    double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * nj + j]; }
    const double* row(int i) const { return data.data() + static_cast<std::size_t>(i) * nj; }
    double* row(int i) { return data.data() + static_cast<std::size_t>(i) * nj; }

    bool all_finite() const {
        for (double v : data) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : data) m = std::max(m, std::abs(v));
        return m;
    }
};

}  // namespace axisflow::pde
