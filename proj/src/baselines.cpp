// SPDX-License-Identifier: Apache-2.0

#include "rcsd/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace rcsd {

FrequencyChannelEstimate lmmse_channel_estimate(const std::vector<FrequencyGrid>& rx_pilot_grids,
                                                const std::vector<FrequencyGrid>& tx_pilot_grids,
                                                double noise_var) {
    if (rx_pilot_grids.empty() || rx_pilot_grids.size() != tx_pilot_grids.size())
        throw std::invalid_argument("lmmse_channel_estimate: need matching rx/tx pilot grids");
    if (noise_var < 0.0) throw std::invalid_argument("lmmse_channel_estimate: negative noise_var");
    const Eigen::Index q = static_cast<Eigen::Index>(rx_pilot_grids.size());
    const Eigen::Index n_sc = tx_pilot_grids.front().rows();
    const Eigen::Index n_t = tx_pilot_grids.front().cols();
    const Eigen::Index n_r = rx_pilot_grids.front().cols();

    FrequencyChannelEstimate est;
    est.noise_var = noise_var;
    est.h.reserve(static_cast<std::size_t>(n_sc));
    ComplexMatrix p(q, n_t), y(q, n_r);
    for (Eigen::Index n = 0; n < n_sc; ++n) {
        for (Eigen::Index i = 0; i < q; ++i) {
            p.row(i) = tx_pilot_grids[static_cast<std::size_t>(i)].row(n);
            y.row(i) = rx_pilot_grids[static_cast<std::size_t>(i)].row(n);
        }
        if (noise_var > 0.0) {
            ComplexMatrix gram = p.adjoint() * p;
            gram.diagonal().array() += noise_var;
            est.h.push_back(ComplexMatrix(gram.ldlt().solve(p.adjoint() * y).transpose()));
        } else {
            est.h.push_back(ComplexMatrix(pinv_solve(p, y).transpose()));
        }
    }
    return est;
}

FrequencyGrid lmmse_equalize(const FrequencyChannelEstimate& est, const FrequencyGrid& rx_grid) {
    if (static_cast<Eigen::Index>(est.h.size()) != rx_grid.rows())
        throw std::invalid_argument("lmmse_equalize: estimate/grid subcarrier count mismatch");
    const Eigen::Index n_t = est.h.front().cols();
    FrequencyGrid out(rx_grid.rows(), n_t);
    for (Eigen::Index n = 0; n < rx_grid.rows(); ++n) {
        const ComplexMatrix& h = est.h[static_cast<std::size_t>(n)];
        if (h.rows() != rx_grid.cols())
            throw std::invalid_argument("lmmse_equalize: antenna count mismatch");
        ComplexMatrix gram = h.adjoint() * h;
        gram.diagonal().array() += est.noise_var;
        const ComplexMatrix rhs = h.adjoint() * rx_grid.row(n).transpose();
        if (est.noise_var > 0.0)
            out.row(n) = gram.ldlt().solve(rhs).transpose();
        else
            out.row(n) = pinv_solve(gram, rhs).transpose();
    }
    return out;
}

SphereDecodeResult sphere_decode(const ComplexMatrix& h, const ComplexVector& y,
                                 const ModulationScheme& scheme,
                                 const SphereDecodePolicy& policy) {
    const int n_t = static_cast<int>(h.cols());
    if (n_t < 1) throw std::invalid_argument("sphere_decode: empty channel");
    if (h.rows() < h.cols())
        throw std::invalid_argument("sphere_decode: requires N_r >= N_t");
    if (y.size() != h.rows()) throw std::invalid_argument("sphere_decode: y/H size mismatch");

    const Eigen::HouseholderQR<ComplexMatrix> qr(h);
    const ComplexMatrix q_thin = ComplexMatrix(qr.householderQ()).leftCols(n_t);
    ComplexMatrix r = qr.matrixQR().topRows(n_t).triangularView<Eigen::Upper>();
    const ComplexVector y_eff = q_thin.adjoint() * y;

    const auto& points = scheme.points();
    const int m = static_cast<int>(points.size());

    struct Level {
        std::vector<int> order;  // candidates sorted by distance increment
        int position = 0;
        cx tau;                  // y_eff(i) minus interference from levels above
        double ped_prefix = 0.0; // accumulated distance of the levels above
    };
    std::vector<Level> lv(static_cast<std::size_t>(n_t));
    for (auto& l : lv) l.order.resize(static_cast<std::size_t>(m));
    std::vector<int> current(static_cast<std::size_t>(n_t), 0);
    std::vector<std::pair<double, int>> scored(static_cast<std::size_t>(m));

    std::vector<int> best_indices;
    double best_ped = std::numeric_limits<double>::infinity();
    double radius_sq = policy.initial_radius_sq;

    const auto enter_level = [&](int i, double ped_prefix) {
        Level& l = lv[static_cast<std::size_t>(i)];
        cx interference(0.0, 0.0);
        for (int j = i + 1; j < n_t; ++j)
            interference +=
                r(i, j) * points[static_cast<std::size_t>(current[static_cast<std::size_t>(j)])];
        l.tau = y_eff(i) - interference;
        l.ped_prefix = ped_prefix;
        l.position = 0;
        for (int c = 0; c < m; ++c)
            scored[static_cast<std::size_t>(c)] = {
                std::norm(l.tau - r(i, i) * points[static_cast<std::size_t>(c)]), c};
        std::sort(scored.begin(), scored.end());
        for (int c = 0; c < m; ++c)
            l.order[static_cast<std::size_t>(c)] = scored[static_cast<std::size_t>(c)].second;
    };

    while (best_indices.empty()) {
        int level = n_t - 1;
        enter_level(level, 0.0);
        for (;;) {
            Level& l = lv[static_cast<std::size_t>(level)];
            if (l.position >= m) {
                ++level;
                if (level >= n_t) break;
                continue;
            }
            const int cand = l.order[static_cast<std::size_t>(l.position)];
            ++l.position;
            const double inc = std::norm(l.tau - r(level, level) * points[static_cast<std::size_t>(cand)]);
            const double ped = l.ped_prefix + inc;
            if (ped >= std::min(radius_sq, best_ped)) {
                // Candidates are sorted; everything after this one is worse.
                l.position = m;
                continue;
            }
            current[static_cast<std::size_t>(level)] = cand;
            if (level == 0) {
                if (ped < best_ped) {
                    best_ped = ped;
                    best_indices = current;
                }
            } else {
                --level;
                enter_level(level, ped);
            }
        }
        if (best_indices.empty()) {
            if (std::isinf(radius_sq))
                throw std::logic_error("sphere_decode: search exhausted without a leaf");
            radius_sq *= 4.0;
        }
    }

    SphereDecodeResult result;
    result.symbol_indices = best_indices;
    result.symbols = ComplexVector(n_t);
    for (int j = 0; j < n_t; ++j)
        result.symbols(j) =
            points[static_cast<std::size_t>(best_indices[static_cast<std::size_t>(j)])];
    result.metric = (y - h * result.symbols).squaredNorm();
    return result;
}

}  // namespace rcsd
