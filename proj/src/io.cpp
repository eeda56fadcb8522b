#include "rtq/io.hpp"

#include <algorithm>
#include <sstream>

namespace rtq {

json tree_to_json(const WeightedTree& t) {
    json verts = json::array();
    for (int v = 0; v < t.size(); ++v)
        verts.push_back({{"id", v}, {"weight", t.weight(v)}});
    json edges = json::array();
    for (auto [a, b] : t.edges()) edges.push_back({a, b});
    return {{"vertices", verts}, {"edges", edges}};
}

WeightedTree tree_from_json(const json& j) {
    const auto& verts = j.at("vertices");
    std::vector<int> weights(verts.size(), 0);
    for (const auto& v : verts) {
        int id = v.at("id").get<int>();
        if (id < 0 || id >= static_cast<int>(weights.size()))
            throw std::invalid_argument("vertex ids must be dense and 0-based");
        weights[id] = v.at("weight").get<int>();
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return WeightedTree(std::move(weights), std::move(edges));
}

json quiver_to_json(const Quiver& q) {
    json j = tree_to_json(q.tree());
    json arrows = json::array();
    for (auto [t, h] : q.arrows()) arrows.push_back({t, h});
    j["arrows"] = arrows;
    return j;
}

Quiver quiver_from_json(const json& j) {
    WeightedTree t = tree_from_json(j);
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j.at("arrows")) arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    // Arrows may arrive in any order; align each with its tree edge.
    std::vector<std::pair<int, int>> aligned(t.edges().size(), {-1, -1});
    for (auto [tail, head] : arrows) {
        auto key = std::make_pair(std::min(tail, head), std::max(tail, head));
        auto it = std::find(t.edges().begin(), t.edges().end(), key);
        if (it == t.edges().end()) throw std::invalid_argument("arrow does not match any edge");
        aligned[it - t.edges().begin()] = {tail, head};
    }
    for (auto [tail, head] : aligned)
        if (tail < 0) throw std::invalid_argument("every edge needs exactly one arrow");
    return Quiver(std::move(t), std::move(aligned));
}

json divisor_to_json(const Divisor& d) {
    json arr = json::array();
    for (long long c : d.coeffs) arr.push_back(c);
    return arr;
}

Divisor divisor_from_json(const json& j) {
    std::vector<long long> c;
    for (const auto& x : j) c.push_back(x.get<long long>());
    return Divisor(std::move(c));
}

json report_to_json(const RationalityReport& r) {
    json j;
    j["negative_definite"] = r.negative_definite;
    j["rational"] = r.rational;
    if (r.artin_cycle) j["artin_cycle"] = divisor_to_json(*r.artin_cycle);
    if (r.pa_of_z) j["pa_of_Z"] = *r.pa_of_z;
    if (r.multiplicity) j["multiplicity"] = *r.multiplicity;
    j["valency_violations"] = r.valency_violations;
    return j;
}

json rootset_to_json(const RootSet& rs, bool positive_only) {
    json arr = json::array();
    const auto& src = positive_only ? rs.positive_roots : rs.roots;
    for (const Divisor& d : src) arr.push_back(divisor_to_json(d));
    json j;
    j["count"] = rs.roots.size();
    j["positive_count"] = rs.positive_roots.size();
    j["roots"] = arr;
    j["highest"] = divisor_to_json(rs.highest);
    if (!rs.iv_removed.empty()) {
        json rem = json::array();
        for (const Divisor& d : rs.iv_removed) rem.push_back(divisor_to_json(d));
        j["divisibility_filtered"] = rem;
    }
    return j;
}

json trail_to_json(const ReductionTrail& t) {
    json steps = json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"vertex", s.vertex}, {"at", s.at_source ? "source" : "sink"}});
    json j;
    j["steps"] = steps;
    j["final_quiver"] = quiver_to_json(t.final_quiver);
    json dims = json::array();
    for (int d : t.final_dims.dims) dims.push_back(d);
    j["final_dims"] = dims;
    j["split_off_count"] = t.split_off_count;
    j["complete"] = t.complete;
    if (!t.diagnostic.empty()) j["diagnostic"] = t.diagnostic;
    return j;
}

json certificate_to_json(const LfdCertificate& c) {
    json j;
    switch (c.mode) {
        case CertifyMode::direct: j["mode"] = "direct"; break;
        case CertifyMode::compositional: j["mode"] = "compositional"; break;
        case CertifyMode::automatic: j["mode"] = "auto"; break;
    }
    j["verdict"] = c.verdict;
    j["degree"] = c.degree;
    if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
    if (c.discriminant_poly) j["discriminant"] = c.discriminant_poly->to_string();
    if (c.core_discriminant) j["core_discriminant"] = c.core_discriminant->to_string();
    if (!c.core_types.empty()) j["core_types"] = c.core_types;
    if (c.trail) {
        j["split_off_count"] = c.split_off_count;
        j["trail"] = trail_to_json(*c.trail);
    }
    return j;
}

namespace {

std::string dot_vertex(int v, const std::string& label, int weight, const long long* coeff) {
    std::ostringstream out;
    out << "  n" << v << " [shape=" << (weight >= 3 ? "box" : "circle") << ", label=\"" << label
        << "\\nw=" << weight;
    if (coeff) out << "\\n" << *coeff;
    out << "\"];\n";
    return out.str();
}

}  // namespace

std::string tree_to_dot(const WeightedTree& t, const Divisor* divisor) {
    if (divisor) check_divisor(t, *divisor);
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < t.size(); ++v) {
        long long c = divisor ? (*divisor)[v] : 0;
        out << dot_vertex(v, t.label(v), t.weight(v), divisor ? &c : nullptr);
    }
    for (auto [a, b] : t.edges()) out << "  n" << a << " -- n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string quiver_to_dot(const Quiver& q, const DimensionVector* dims) {
    const WeightedTree& t = q.tree();
    std::ostringstream out;
    out << "digraph {\n";
    for (int v = 0; v < t.size(); ++v) {
        long long c = dims ? (*dims)[v] : 0;
        out << dot_vertex(v, t.label(v), t.weight(v), dims ? &c : nullptr);
    }
    for (auto [tail, head] : q.arrows()) out << "  n" << tail << " -> n" << head << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace rtq
