#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wavekin {

/// Finite-volume discretization of the truncated frequency domain [0, R].
///
/// Cells are K_i = [edges[i], edges[i+1]) with pivot (cell center) and width
/// stored per cell. Immutable after construction; all solver state references
/// one Grid, so concurrent reads are safe.
class Grid {
public:
    /// Build from an explicit, strictly increasing edge list starting at 0.
    explicit Grid(std::vector<double> edge_list) {
        if (edge_list.size() < 2)
            throw std::invalid_argument("Grid: need at least 2 edges");
        if (edge_list.front() != 0.0)
            throw std::invalid_argument("Grid: first edge must be 0");
        for (std::size_t i = 1; i < edge_list.size(); ++i)
            if (!(edge_list[i] > edge_list[i - 1]))
                throw std::invalid_argument("Grid: edges must be strictly increasing");
        edges_ = std::move(edge_list);
        const std::size_t m = edges_.size() - 1;
        pivots_.resize(m);
        widths_.resize(m);
        h_max_ = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            pivots_[i] = 0.5 * (edges_[i] + edges_[i + 1]);
            widths_[i] = edges_[i + 1] - edges_[i];
            h_max_ = std::max(h_max_, widths_[i]);
        }
    }

    std::size_t num_cells() const { return pivots_.size(); }
    double truncation() const { return edges_.back(); }
    double h_max() const { return h_max_; }
    double min_width() const {
        double h = widths_[0];
        for (double w : widths_) h = std::min(h, w);
        return h;
    }
    bool is_uniform(double rel_tol = 1e-12) const {
        const double h0 = widths_[0];
        for (double w : widths_)
            if (std::abs(w - h0) > rel_tol * h0) return false;
        return true;
    }

    const std::vector<double>& edges() const { return edges_; }
    const std::vector<double>& pivots() const { return pivots_; }
    const std::vector<double>& widths() const { return widths_; }

    double edge(std::size_t i) const { return edges_[i]; }
    double pivot(std::size_t i) const { return pivots_[i]; }
    double width(std::size_t i) const { return widths_[i]; }

private:
    std::vector<double> edges_;
    std::vector<double> pivots_;
    std::vector<double> widths_;
    double h_max_ = 0.0;
};

/// Uniform mesh of [0, R] with target cell width h. R/h must be integral to
/// within 1e-9 relative; non-integral ratios are rejected rather than
/// silently stretching the last cell (that would break the convolution-index
/// shortcut used on uniform grids).
inline Grid uniform_grid(double R, double h) {
    if (!(R > 0.0)) throw std::invalid_argument("uniform_grid: R must be positive");
    if (!(h > 0.0)) throw std::invalid_argument("uniform_grid: h must be positive");
    const double ratio = R / h;
    const auto m = static_cast<long long>(std::llround(ratio));
    if (m < 1 || std::abs(ratio - static_cast<double>(m)) > 1e-9 * ratio)
        throw std::invalid_argument("uniform_grid: R/h = " + std::to_string(ratio) +
                                    " is not an integer");
    std::vector<double> edge_list(static_cast<std::size_t>(m) + 1);
    for (long long i = 0; i <= m; ++i)
        edge_list[static_cast<std::size_t>(i)] = static_cast<double>(i) * h;
    edge_list.back() = R;  // exact final edge
    return Grid(std::move(edge_list));
}

/// Nonuniform mesh from an explicit edge list.
inline Grid custom_grid(std::vector<double> edge_list) { return Grid(std::move(edge_list)); }

/// Uniform mesh with exactly `cells` cells of width h (truncation = cells*h).
/// Used by the convergence studies, where the step family h, h/2, h/4 must
/// stay nested even when R/h is not integral (the cell count is rounded once
/// for the coarsest grid and doubled down the family).
inline Grid uniform_grid_cells(std::size_t cells, double h) {
    if (cells < 1) throw std::invalid_argument("uniform_grid_cells: need >= 1 cell");
    if (!(h > 0.0)) throw std::invalid_argument("uniform_grid_cells: h must be positive");
    std::vector<double> edge_list(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) edge_list[i] = static_cast<double>(i) * h;
    return Grid(std::move(edge_list));
}

}  // namespace wavekin
