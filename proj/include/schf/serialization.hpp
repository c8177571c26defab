#pragma once

#include "schf/channel.hpp"
#include "schf/code.hpp"

#include <json.hpp>

#include <map>
#include <ostream>
#include <string>

namespace schf {

using json = nlohmann::json;

inline std::string variant_name(Variant v) {
    return v == Variant::standard ? "standard" : "modified";
}

inline Variant variant_from_name(const std::string& s) {
    if (s == "standard") return Variant::standard;
    if (s == "modified") return Variant::modified;
    throw std::invalid_argument("unknown variant: " + s);
}

/// CodeTables -> JSON: spec, total M as a decimal string, and per-node
/// tables with rows (i, eta, M1, M2) plus the child table ids that make the
/// document self-contained for reloading.
inline json tables_to_json(const CodeTables& ct) {
    json doc;
    doc["spec"] = {{"dim", ct.spec.dim},
                   {"dmin", ct.spec.dmin},
                   {"variant", variant_name(ct.spec.variant)}};
    doc["total"] = to_string(ct.total);

    std::map<int, json> by_node;
    for (const auto& n : ct.nodes)
        by_node[n.id] = json{{"node", n.id}, {"dim", n.dim}, {"tables", json::array()}};
    for (std::size_t id = 0; id < ct.tables.size(); ++id) {
        const LeafTable& t = ct.tables[id];
        json jt;
        jt["id"] = id;
        jt["dist"] = t.dist;
        jt["single_point"] = t.single_point;
        jt["rows"] = json::array();
        if (t.dim == 4) {
            for (const auto& r : t.rows4)
                jt["rows"].push_back(json{{"i", r.i}, {"eta", r.eta}, {"m", r.m}, {"n", r.n}});
        } else {
            for (const auto& r : t.rows)
                jt["rows"].push_back(json{{"i", r.i},
                                          {"eta", r.eta},
                                          {"m1", to_string(r.m1)},
                                          {"m2", to_string(r.m2)},
                                          {"left", r.left},
                                          {"right", r.right}});
        }
        by_node.at(t.node)["tables"].push_back(std::move(jt));
    }
    doc["nodes"] = json::array();
    for (auto& [id, jn] : by_node) doc["nodes"].push_back(std::move(jn));
    return doc;
}

inline CodeTables tables_from_json(const json& doc) {
    CodeTables ct;
    ct.spec.dim = doc.at("spec").at("dim").get<int>();
    ct.spec.dmin = doc.at("spec").at("dmin").get<double>();
    ct.spec.variant = variant_from_name(doc.at("spec").at("variant").get<std::string>());

    std::size_t max_id = 0;
    for (const auto& jn : doc.at("nodes"))
        for (const auto& jt : jn.at("tables")) max_id = std::max(max_id, jt.at("id").get<std::size_t>());
    ct.tables.resize(max_id + 1);

    for (const auto& jn : doc.at("nodes")) {
        ct.nodes.push_back({jn.at("node").get<int>(), jn.at("dim").get<int>()});
        for (const auto& jt : jn.at("tables")) {
            LeafTable t;
            t.dim = jn.at("dim").get<int>();
            t.node = jn.at("node").get<int>();
            t.dist = jt.at("dist").get<double>();
            t.single_point = jt.at("single_point").get<bool>();
            if (t.single_point) {
                t.total = 1;
            } else if (t.dim == 4) {
                BigInt prefix = 0;
                for (const auto& jr : jt.at("rows")) {
                    Dim4Row r;
                    r.i = jr.at("i").get<long long>();
                    r.eta = jr.at("eta").get<double>();
                    r.ceta = std::cos(r.eta);
                    r.seta = std::sin(r.eta);
                    r.m = jr.at("m").get<long long>();
                    r.n = jr.at("n").get<long long>();
                    r.count = BigInt(r.m) * r.n;
                    r.prefix = prefix;
                    prefix += r.count;
                    t.rows4.push_back(std::move(r));
                }
                t.total = prefix;
            } else {
                BigInt prefix = 0;
                for (const auto& jr : jt.at("rows")) {
                    SplitRow r;
                    r.i = jr.at("i").get<long long>();
                    r.eta = jr.at("eta").get<double>();
                    r.ceta = std::cos(r.eta);
                    r.seta = std::sin(r.eta);
                    r.m1 = BigInt(jr.at("m1").get<std::string>());
                    r.m2 = BigInt(jr.at("m2").get<std::string>());
                    r.left = jr.at("left").get<std::uint32_t>();
                    r.right = jr.at("right").get<std::uint32_t>();
                    r.count = r.m1 * r.m2;
                    r.prefix = prefix;
                    prefix += r.count;
                    t.rows.push_back(std::move(r));
                }
                t.total = prefix;
            }
            ct.tables[jt.at("id").get<std::size_t>()] = std::move(t);
        }
    }
    ct.total = ct.tables.front().total;
    return ct;
}

/// Codebook CSV: index first, then the coordinates, 17 significant digits.
template <class Stream>
inline void write_codebook_csv(Stream& os, const CodeTables& tables,
                               std::uint64_t cap = default_enumeration_cap) {
    os << "index";
    for (int c = 1; c <= tables.spec.dim; ++c) os << ",x" << c;
    os << '\n';
    os.precision(17);
    for_each_codeword(
        tables,
        [&](std::uint64_t a, const std::vector<double>& p) {
            os << a;
            for (double v : p) os << ',' << v;
            os << '\n';
        },
        cap);
}

inline json sim_report_json(const SimReport& report) {
    json doc;
    doc["spec"] = {{"dim", report.spec.dim},
                   {"dmin", report.spec.dmin},
                   {"variant", variant_name(report.spec.variant)}};
    doc["decoder"] = decoder_name(report.decoder);
    doc["seed"] = report.seed;
    doc["rows"] = json::array();
    for (const auto& r : report.rows)
        doc["rows"].push_back(json{{"snr_db", r.snr_db},
                                   {"trials", r.trials},
                                   {"errors", r.errors},
                                   {"ser", r.ser},
                                   {"stderr", r.ser_stderr},
                                   {"mean_decode_us", r.mean_decode_us}});
    return doc;
}

} // namespace schf
