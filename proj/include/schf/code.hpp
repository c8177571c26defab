#pragma once

#include "schf/bigint.hpp"
#include "schf/foliation.hpp"
#include "schf/math_util.hpp"
#include "schf/special_codes.hpp"
#include "schf/torus4.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace schf {

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Variant { standard, modified };

/// Identifies a code: dimension 2^k (k >= 2), minimum distance in (0, 2].
struct CodeSpec {
    int dim = 4;
    double dmin = 1.0;
    Variant variant = Variant::standard;
};

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline void check_spec(const CodeSpec& spec) {
    if (!is_power_of_two(spec.dim) || spec.dim < 4)
        throw std::domain_error("dimension must be a power of two, at least 4");
    check_distance(spec.dmin);
}

inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

namespace detail {

inline std::uint64_t dist_key(double d) { return std::bit_cast<std::uint64_t>(d); }

struct DimDistHash {
    std::size_t operator()(const std::pair<int, std::uint64_t>& k) const {
        return std::hash<std::uint64_t>()(k.second ^ (static_cast<std::uint64_t>(k.first) << 56));
    }
};

template <class V>
using DimDistMap = std::unordered_map<std::pair<int, std::uint64_t>, V, DimDistHash>;

/// Distances marginally above 2 from scaled-distance rounding are treated as 2.
inline bool over_two(double d) { return !leq_guarded(d, 2.0); }
inline double clamp_two(double d) { return std::min(d, 2.0); }

inline BigInt cardinality_rec(int dim, double d, DimDistMap<BigInt>& memo) {
    if (over_two(d)) return 1;
    d = clamp_two(d);
    const auto key = std::make_pair(dim, dist_key(d));
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const double deta = minimal_leaf_separation(d);
    const long long h = leaf_count(d) / 2;
    BigInt total = 0;
    if (dim == 4) {
        const auto lay0 = make_layout(d, pi / 4.0);
        total = BigInt(lay0.m) * lay0.n_circles;
        for (long long k = 1; k <= h; ++k) {
            const auto lay = make_layout(d, pi / 4.0 + static_cast<double>(k) * deta);
            total += 2 * BigInt(lay.m) * lay.n_circles;
        }
    } else {
        const int half = dim / 2;
        const BigInt center = cardinality_rec(half, std::sqrt(2.0) * d, memo);
        total = center * center;
        for (long long k = 1; k <= h; ++k) {
            const double eta = pi / 4.0 + static_cast<double>(k) * deta;
            total += 2 * cardinality_rec(half, d / std::cos(eta), memo) *
                     cardinality_rec(half, d / std::sin(eta), memo);
        }
    }
    memo.emplace(key, total);
    return total;
}

inline BigInt cardinality_modified_rec(int dim, double d, DimDistMap<BigInt>& memo) {
    if (over_two(d)) return 1;
    d = clamp_two(d);
    const auto key = std::make_pair(dim, dist_key(d));
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    static const LeafScheme schemes[] = {LeafScheme::symmetric(), LeafScheme::from_zero(),
                                         LeafScheme::from_half_pi()};
    BigInt best = 0;
    if (dim == 4) {
        const BigInt diag = diagonal_circle_count(d);
        for (const auto& scheme : schemes) {
            BigInt sum = 0;
            for (double eta : leaf_angles(d, scheme)) {
                if (eta == 0.0 || eta == half_pi) {
                    sum += diag;
                } else {
                    const auto lay = make_layout(d, eta);
                    sum += std::max(BigInt(lay.m) * lay.n_circles, diag);
                }
            }
            best = std::max(best, sum);
        }
        best = std::max(best, BigInt(best_special4_count(d)));
    } else {
        const int half = dim / 2;
        for (const auto& scheme : schemes) {
            BigInt sum = 0;
            for (double eta : leaf_angles(d, scheme)) {
                if (eta == 0.0 || eta == half_pi) {
                    sum += cardinality_modified_rec(half, d, memo);
                } else if (eta == pi / 4.0) {
                    const BigInt center = cardinality_modified_rec(half, std::sqrt(2.0) * d, memo);
                    sum += center * center;
                } else {
                    sum += cardinality_modified_rec(half, d / std::cos(eta), memo) *
                           cardinality_modified_rec(half, d / std::sin(eta), memo);
                }
            }
            best = std::max(best, sum);
        }
        if (leq_guarded(d, std::sqrt(2.0))) best = std::max(best, BigInt(2 * dim));
    }
    memo.emplace(key, best);
    return best;
}

} // namespace detail

/// Cardinality of the standard recursive construction.
inline BigInt cardinality_standard(int dim, double d) {
    CodeSpec s{dim, d, Variant::standard};
    check_spec(s);
    detail::DimDistMap<BigInt> memo;
    return detail::cardinality_rec(dim, d, memo);
}

/// Cardinality of the modified construction: best leaf scheme per node,
/// diagonal fiber circles when they beat a torus layout, special codes at
/// dim-4 nodes, biorthogonal substitution at any node.
inline BigInt cardinality_modified(int dim, double d) {
    CodeSpec s{dim, d, Variant::modified};
    check_spec(s);
    detail::DimDistMap<BigInt> memo;
    const BigInt m = detail::cardinality_modified_rec(dim, d, memo);
    return std::max(m, cardinality_standard(dim, d));
}

inline BigInt cardinality(const CodeSpec& spec) {
    check_spec(spec);
    return spec.variant == Variant::standard ? cardinality_standard(spec.dim, spec.dmin)
                                             : cardinality_modified(spec.dim, spec.dmin);
}

/// Best special code usable at (dim, d) when it beats the standard
/// construction: the dim-4 catalog, or the biorthogonal code in any
/// dimension. Returns the point set, or nullopt when nothing beats standard.
inline std::optional<std::vector<std::vector<double>>> adhoc_lookup(int dim, double d) {
    CodeSpec s{dim, d, Variant::modified};
    check_spec(s);
    long long best_count = 0;
    std::vector<std::vector<double>> (*gen4)() = nullptr;
    if (dim == 4) {
        for (const auto& c : special_codes4())
            if (leq_guarded(d, c.min_distance) && c.count > best_count) {
                best_count = c.count;
                gen4 = c.generate;
            }
    }
    bool use_biorthogonal = false;
    if (leq_guarded(d, std::sqrt(2.0)) && 2 * dim > best_count) {
        best_count = 2 * dim;
        use_biorthogonal = true;
    }
    if (best_count == 0 || BigInt(best_count) <= cardinality_standard(dim, d)) return std::nullopt;
    return use_biorthogonal ? biorthogonal_code(dim) : gen4();
}

// ---------------------------------------------------------------------------
// Stored leaf tables and the index <-> codeword maps.
// ---------------------------------------------------------------------------

/// Row of a dim-4 table. Rows with i < 0 are the coordinate-permuted mirrors
/// of row |i|: same (m, n), angle pi/4 + i*deta, blocks swapped on output.
struct Dim4Row {
    long long i = 0;
    double eta = 0.0;
    double ceta = 1.0; // cos(eta), cached for the codec hot path
    double seta = 0.0; // sin(eta)
    long long m = 1;
    long long n = 1;
    BigInt count;
    BigInt prefix;
};

/// Row of a table in dimension > 4. Mirror rows (i < 0) reuse the subcode
/// tables of row |i| with the factors swapped, so the mirror counts are
/// exact by construction.
struct SplitRow {
    long long i = 0;
    double eta = 0.0;
    double ceta = 1.0;
    double seta = 0.0;
    BigInt m1;
    BigInt m2;
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    BigInt count;
    BigInt prefix;
};

/// Per-(node, scaled distance) leaf table. A table with single_point set
/// carries the one-point code e1 used when the scaled distance exceeds 2.
struct LeafTable {
    int dim = 4;
    double dist = 0.0;
    int node = 0;
    bool single_point = false;
    std::vector<Dim4Row> rows4;
    std::vector<SplitRow> rows;
    BigInt total;
};

struct NodeInfo {
    int id = 0;
    int dim = 4;
};

struct CodeTables {
    CodeSpec spec;
    std::vector<NodeInfo> nodes; // the decomposition tree, dim/2 - 1 entries
    std::vector<LeafTable> tables;
    BigInt total;

    const LeafTable& root() const { return tables.front(); }
};

struct Codeword {
    BigInt index;
    std::vector<double> coords;
};

namespace detail {

struct TableBuilder {
    std::vector<LeafTable>& tables;
    DimDistMap<std::uint32_t> memo;

    std::uint32_t build(int dim, double d, int node) {
        const auto key = std::make_pair(dim, dist_key(over_two(d) ? 3.0 : clamp_two(d)));
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const std::uint32_t id = static_cast<std::uint32_t>(tables.size());
        tables.emplace_back();
        memo.emplace(key, id);

        if (over_two(d)) {
            LeafTable t;
            t.dim = dim;
            t.dist = d;
            t.node = node;
            t.single_point = true;
            t.total = 1;
            tables[id] = std::move(t);
            return id;
        }
        d = clamp_two(d);
        const double deta = minimal_leaf_separation(d);
        const long long h = leaf_count(d) / 2;

        LeafTable t;
        t.dim = dim;
        t.dist = d;
        t.node = node;
        if (dim == 4) {
            std::vector<TorusLayout> lays;
            for (long long k = 0; k <= h; ++k)
                lays.push_back(make_layout(d, pi / 4.0 + static_cast<double>(k) * deta));
            BigInt prefix = 0;
            for (long long i = -h; i <= h; ++i) {
                const auto& lay = lays[static_cast<std::size_t>(std::llabs(i))];
                Dim4Row row;
                row.i = i;
                row.eta = i < 0 ? pi / 4.0 - static_cast<double>(-i) * deta
                                : pi / 4.0 + static_cast<double>(i) * deta;
                row.ceta = std::cos(row.eta);
                row.seta = std::sin(row.eta);
                row.m = lay.m;
                row.n = lay.n_circles;
                row.count = BigInt(lay.m) * lay.n_circles;
                row.prefix = prefix;
                prefix += row.count;
                t.rows4.push_back(std::move(row));
            }
            t.total = prefix;
        } else {
            const int half = dim / 2;
            const int left_node = 2 * node + 1;
            const int right_node = 2 * node + 2;
            struct Pair {
                std::uint32_t left, right;
            };
            std::vector<Pair> kids;
            for (long long k = 0; k <= h; ++k) {
                if (k == 0) {
                    const std::uint32_t c = build(half, std::sqrt(2.0) * d, left_node);
                    kids.push_back({c, c});
                } else {
                    const double eta = pi / 4.0 + static_cast<double>(k) * deta;
                    kids.push_back({build(half, d / std::cos(eta), left_node),
                                    build(half, d / std::sin(eta), right_node)});
                }
            }
            BigInt prefix = 0;
            for (long long i = -h; i <= h; ++i) {
                const auto& kid = kids[static_cast<std::size_t>(std::llabs(i))];
                SplitRow row;
                row.i = i;
                row.eta = i < 0 ? pi / 4.0 - static_cast<double>(-i) * deta
                                : pi / 4.0 + static_cast<double>(i) * deta;
                row.ceta = std::cos(row.eta);
                row.seta = std::sin(row.eta);
                row.left = i < 0 ? kid.right : kid.left;
                row.right = i < 0 ? kid.left : kid.right;
                row.m1 = tables[row.left].total;
                row.m2 = tables[row.right].total;
                row.count = row.m1 * row.m2;
                row.prefix = prefix;
                prefix += row.count;
                t.rows.push_back(std::move(row));
            }
            t.total = prefix;
        }
        tables[id] = std::move(t);
        return id;
    }
};

} // namespace detail

/// Builds the per-node leaf tables of the standard construction.
inline CodeTables build_tables(const CodeSpec& spec) {
    check_spec(spec);
    if (spec.variant != Variant::standard)
        throw std::invalid_argument("leaf tables exist for the standard variant only; "
                                    "the modified variant supports cardinality analytics");
    CodeTables ct;
    ct.spec = spec;
    int id = 0;
    for (int level_dim = spec.dim, count = 1; level_dim >= 4; level_dim /= 2, count *= 2)
        for (int j = 0; j < count; ++j) ct.nodes.push_back({id++, level_dim});
    detail::TableBuilder builder{ct.tables, {}};
    builder.build(spec.dim, spec.dmin, 0);
    ct.total = ct.tables.front().total;
    return ct;
}

struct SigmaSplit {
    double eta = 0.0;
    BigInt a1;
    BigInt a2;
};

/// Locates index a's row by prefix sums and splits the leaf-internal index:
/// a1 = (a - prefix) mod M1, a2 = (a - prefix) div M1. Works on dim-4 rows
/// with (M1, M2) = (m, n_circles).
inline SigmaSplit sigma_split(const LeafTable& table, const BigInt& a) {
    if (a < 0 || a >= table.total) throw std::out_of_range("index out of range");
    if (table.single_point) return {0.0, 0, 0};
    if (table.dim == 4) {
        for (const auto& row : table.rows4)
            if (a < row.prefix + row.count) {
                const BigInt aa = a - row.prefix;
                return {row.eta, aa % row.m, aa / row.m};
            }
    } else {
        for (const auto& row : table.rows)
            if (a < row.prefix + row.count) {
                const BigInt aa = a - row.prefix;
                return {row.eta, aa % row.m1, aa / row.m1};
            }
    }
    throw std::logic_error("prefix sums inconsistent");
}

namespace detail {

inline std::array<double, 4> dim4_row_point(const Dim4Row& row, long long a_local) {
    const long long j = a_local % row.m;
    const long long k = a_local / row.m;
    const double xi1 = static_cast<double>(j) * (two_pi / static_cast<double>(row.m)) +
                       static_cast<double>(k) * (pi / static_cast<double>(row.m));
    const double xi2 = static_cast<double>(k) * (two_pi / static_cast<double>(row.n));
    const double alpha = row.i < 0 ? xi2 : xi1;
    const double beta = row.i < 0 ? xi1 : xi2;
    return {row.ceta * std::cos(alpha), row.ceta * std::sin(alpha), row.seta * std::cos(beta),
            row.seta * std::sin(beta)};
}

inline void encode_into(const CodeTables& ct, std::uint32_t id, const BigInt& a, double* out) {
    const LeafTable& t = ct.tables[id];
    if (a < 0 || a >= t.total) throw std::out_of_range("index out of range");
    if (t.single_point) {
        out[0] = 1.0;
        for (int i = 1; i < t.dim; ++i) out[i] = 0.0;
        return;
    }
    if (t.dim == 4) {
        for (const auto& row : t.rows4)
            if (a < row.prefix + row.count) {
                const auto p = dim4_row_point(row, (a - row.prefix).convert_to<long long>());
                std::copy(p.begin(), p.end(), out);
                return;
            }
        throw std::logic_error("prefix sums inconsistent");
    }
    for (const auto& row : t.rows)
        if (a < row.prefix + row.count) {
            const BigInt aa = a - row.prefix;
            const int half = t.dim / 2;
            encode_into(ct, row.left, aa % row.m1, out);
            encode_into(ct, row.right, aa / row.m1, out + half);
            for (int i = 0; i < half; ++i) out[i] *= row.ceta;
            for (int i = half; i < t.dim; ++i) out[i] *= row.seta;
            return;
        }
    throw std::logic_error("prefix sums inconsistent");
}

} // namespace detail

/// Maps an index in [0, M) to its codeword.
inline Codeword encode(const CodeTables& tables, const BigInt& a) {
    if (a < 0 || a >= tables.total) throw std::out_of_range("index out of range");
    Codeword cw;
    cw.index = a;
    cw.coords.resize(static_cast<std::size_t>(tables.spec.dim));
    detail::encode_into(tables, 0, a, cw.coords.data());
    return cw;
}

/// Streams encode(a) for a = 0..M-1 into fn(index, coords).
template <class Fn>
inline void for_each_codeword(const CodeTables& tables, Fn&& fn,
                              std::uint64_t cap = default_enumeration_cap) {
    if (tables.total > cap)
        throw resource_error("codebook of " + to_string(tables.total) +
                             " points exceeds the enumeration cap of " + std::to_string(cap));
    const std::uint64_t m = tables.total.convert_to<std::uint64_t>();
    std::vector<double> buf(static_cast<std::size_t>(tables.spec.dim));
    for (std::uint64_t a = 0; a < m; ++a) {
        detail::encode_into(tables, 0, BigInt(a), buf.data());
        fn(a, buf);
    }
}

/// Full codebook in index order, guarded by the enumeration cap.
inline std::vector<Codeword> enumerate_codebook(const CodeTables& tables,
                                                std::uint64_t cap = default_enumeration_cap) {
    std::vector<Codeword> out;
    if (tables.total <= cap) out.reserve(tables.total.convert_to<std::size_t>());
    for_each_codeword(
        tables, [&](std::uint64_t a, const std::vector<double>& p) { out.push_back({BigInt(a), p}); },
        cap);
    return out;
}

} // namespace schf
