#pragma once

#include "schf/code.hpp"
#include "schf/math_util.hpp"

#include <array>
#include <span>
#include <vector>

namespace schf {

struct DecodeConfig {
    int breadth = 1;     // adjacent leaves searched on each side per level
    bool refine = false; // enable the additional projection steps
};

struct DecodeResult {
    BigInt index;
    std::vector<double> codeword; // equals encode(index)
    double residual = 0.0;        // ||y/||y|| - codeword||
};

struct HopfAngles {
    double eta = 0.0;
    double xi1 = 0.0;
    double xi2 = 0.0;
};

/// Quadrant-correct (eta, xi1, xi2) of a unit vector in R^4. A dead
/// coordinate pair yields angle 0 for that pair.
inline HopfAngles angles_from_point(const std::array<double, 4>& y) {
    const double a = std::hypot(y[0], y[1]);
    const double b = std::hypot(y[2], y[3]);
    HopfAngles out;
    out.eta = std::atan2(b, a);
    out.xi1 = a == 0.0 ? 0.0 : wrap_angle(std::atan2(y[1], y[0]));
    out.xi2 = b == 0.0 ? 0.0 : wrap_angle(std::atan2(y[3], y[2]));
    return out;
}

/// Index of the codeword maximizing <x_i, y>; ties break to the lowest index.
inline std::size_t decode_ml(const std::vector<Codeword>& codebook, std::span<const double> y) {
    if (codebook.empty()) throw std::invalid_argument("empty codebook");
    std::size_t best = 0;
    double best_ip = dot(codebook[0].coords, y);
    for (std::size_t i = 1; i < codebook.size(); ++i) {
        const double ip = dot(codebook[i].coords, y);
        if (ip > best_ip) {
            best_ip = ip;
            best = i;
        }
    }
    return best;
}

namespace detail {

struct LocalDecode {
    BigInt index;
    double residual = 0.0;
};

/// Projection onto one dim-4 row, written into point (4 doubles): snap the
/// circle by rounding xi2, then the point by rounding xi1 against that
/// circle's displacement. The refined path also evaluates the two adjacent
/// circles, whose half-step offset the committed rounding would otherwise
/// ignore.
inline LocalDecode project_row4(const Dim4Row& row, const double* yhat,
                                bool circle_neighborhood, double* point) {
    const bool mirrored = row.i < 0;
    const double xi1 = wrap_angle(mirrored ? std::atan2(yhat[3], yhat[2])
                                           : std::atan2(yhat[1], yhat[0]));
    const double xi2 = wrap_angle(mirrored ? std::atan2(yhat[1], yhat[0])
                                           : std::atan2(yhat[3], yhat[2]));
    const double dxi1 = two_pi / static_cast<double>(row.m);
    const double dxi2 = two_pi / static_cast<double>(row.n);
    const long long k0 = floor_mod(round_half_up(xi2 / dxi2), row.n);

    long long best_local = 0;
    double best_res = std::numeric_limits<double>::infinity();
    std::array<double, 4> best_p{};
    const int reach = (circle_neighborhood && row.n > 1) ? 1 : 0;
    for (long long dk = -reach; dk <= reach; ++dk) {
        const long long k = floor_mod(k0 + dk, row.n);
        const double disp = static_cast<double>(k) * pi / static_cast<double>(row.m);
        const long long j = floor_mod(round_half_up((xi1 - disp) / dxi1), row.m);
        const long long a_local = k * row.m + j;
        const auto p = dim4_row_point(row, a_local);
        double s = 0.0;
        for (int c = 0; c < 4; ++c) {
            const double diff = p[static_cast<std::size_t>(c)] - yhat[c];
            s += diff * diff;
        }
        const double r = std::sqrt(s);
        if (r < best_res) {
            best_res = r;
            best_local = a_local;
            best_p = p;
        }
    }
    for (int c = 0; c < 4; ++c) point[c] = best_p[static_cast<std::size_t>(c)];
    return {row.prefix + best_local, best_res};
}

/// Allocation-free recursion core. The chosen point is written into point
/// (t.dim doubles); scratch provides 4*dim workspace per call chain.
inline LocalDecode decode_in_table(const CodeTables& ct, std::uint32_t id, const double* y,
                                   const DecodeConfig& cfg, double* point, double* scratch) {
    const LeafTable& t = ct.tables[id];
    const std::size_t dim = static_cast<std::size_t>(t.dim);

    double sq = 0.0;
    for (std::size_t i = 0; i < dim; ++i) sq += y[i] * y[i];
    if (sq == 0.0) {
        // Degenerate block: every unit vector is equidistant; pick index 0.
        encode_into(ct, id, BigInt(0), point);
        return {0, std::sqrt(2.0)};
    }
    const double inv = 1.0 / std::sqrt(sq);
    double* yhat = scratch;
    for (std::size_t i = 0; i < dim; ++i) yhat[i] = y[i] * inv;

    if (t.single_point) {
        point[0] = 1.0;
        for (std::size_t i = 1; i < dim; ++i) point[i] = 0.0;
        double s = (point[0] - yhat[0]) * (point[0] - yhat[0]);
        for (std::size_t i = 1; i < dim; ++i) s += yhat[i] * yhat[i];
        return {0, std::sqrt(s)};
    }

    const std::size_t half = dim / 2;
    double eta;
    if (t.dim == 4) {
        eta = std::atan2(std::hypot(yhat[2], yhat[3]), std::hypot(yhat[0], yhat[1]));
    } else {
        double lo = 0.0, hi = 0.0;
        for (std::size_t i = 0; i < half; ++i) lo += yhat[i] * yhat[i];
        for (std::size_t i = half; i < dim; ++i) hi += yhat[i] * yhat[i];
        eta = std::atan2(std::sqrt(hi), std::sqrt(lo));
    }

    const long long rows = static_cast<long long>(t.dim == 4 ? t.rows4.size() : t.rows.size());
    const long long h = (rows - 1) / 2;
    const double deta = minimal_leaf_separation(t.dist);
    long long ihat = round_half_up((eta - pi / 4.0) / deta);
    ihat = std::max(-h, std::min(h, ihat));

    double* cand = scratch + dim;
    double* child_scratch = scratch + 2 * dim;

    auto eval_row = [&](long long i, double* dst) -> LocalDecode {
        const std::size_t r = static_cast<std::size_t>(i + h);
        if (t.dim == 4) return project_row4(t.rows4[r], yhat, cfg.refine, dst);
        const auto& row = t.rows[r];
        const LocalDecode left =
            decode_in_table(ct, row.left, y, cfg, dst, child_scratch);
        const LocalDecode right =
            decode_in_table(ct, row.right, y + half, cfg, dst + half, child_scratch);
        double res = 0.0;
        for (std::size_t k = 0; k < half; ++k) {
            dst[k] *= row.ceta;
            const double diff = dst[k] - yhat[k];
            res += diff * diff;
        }
        for (std::size_t k = half; k < dim; ++k) {
            dst[k] *= row.seta;
            const double diff = dst[k] - yhat[k];
            res += diff * diff;
        }
        return {row.prefix + right.index * row.m1 + left.index, std::sqrt(res)};
    };

    LocalDecode best = eval_row(ihat, point);
    if (cfg.refine && best.residual >= t.dist / 2.0) {
        for (long long step = 1; step <= cfg.breadth; ++step)
            for (long long sign : {-1ll, 1ll}) {
                const long long i = ihat + sign * step;
                if (i < -h || i > h) continue;
                const LocalDecode other = eval_row(i, cand);
                if (other.residual < best.residual) {
                    best = other;
                    for (std::size_t k = 0; k < dim; ++k) point[k] = cand[k];
                }
            }
    }
    return best;
}

} // namespace detail

/// Sub-optimal foliation decoder. Snaps the received vector to the nearest
/// stored leaf per level, projects within the leaf, and (with refine) also
/// searches breadth adjacent leaves per side whenever the residual is at
/// least dist/2.
inline DecodeResult decode(const CodeTables& tables, std::span<const double> y,
                           const DecodeConfig& cfg = {}) {
    const std::size_t dim = static_cast<std::size_t>(tables.spec.dim);
    if (y.size() != dim)
        throw std::invalid_argument("vector length does not match the code dimension");
    const double nrm = norm(y);
    if (nrm == 0.0) throw std::domain_error("cannot decode the zero vector");

    std::vector<double> work(5 * dim);
    double* point = work.data() + 4 * dim;
    const detail::LocalDecode local =
        detail::decode_in_table(tables, 0, y.data(), cfg, point, work.data());

    std::vector<double> coords(point, point + dim);
    double res = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double diff = coords[i] - y[i] / nrm;
        res += diff * diff;
    }
    return {local.index, std::move(coords), std::sqrt(res)};
}

/// Convenience R^4 decoder; builds the leaf table for (4, d) on the fly.
inline DecodeResult decode4(const std::array<double, 4>& y, double d, const DecodeConfig& cfg = {}) {
    const CodeTables tables = build_tables({4, d, Variant::standard});
    return decode(tables, std::span<const double>(y.data(), 4), cfg);
}

} // namespace schf
