#include "rtq/catalog.hpp"

#include <stdexcept>

namespace rtq {

namespace {

using Edges = std::vector<std::pair<int, int>>;
using Labels = std::vector<std::string>;

void need_params(const std::vector<int>& params, std::size_t count, const std::string& name) {
    if (params.size() != count)
        throw std::invalid_argument(name + " expects " + std::to_string(count) + " parameter(s)");
}

WeightedTree dynkin_a(int n) {
    if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
    std::vector<int> w(n, 2);
    Edges e;
    Labels lab;
    for (int i = 0; i < n; ++i) lab.push_back("E" + std::to_string(i + 1));
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

// Path E1..E_{n-1} with E_n hanging from E_{n-2}.
WeightedTree dynkin_d(int n) {
    if (n < 3) throw std::invalid_argument("D_n requires n >= 3");
    std::vector<int> w(n, 2);
    Edges e;
    Labels lab;
    for (int i = 0; i < n; ++i) lab.push_back("E" + std::to_string(i + 1));
    for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 3, n - 1);
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

// Path E1..E_{n-1} with E_n hanging from E3.
WeightedTree dynkin_e(int n) {
    std::vector<int> w(n, 2);
    Edges e;
    Labels lab;
    for (int i = 0; i < n; ++i) lab.push_back("E" + std::to_string(i + 1));
    for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(2, n - 1);
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

WeightedTree star_anmk(int n, int m, int k) {
    if (n < 0 || m < 0 || k < 0) throw std::invalid_argument("A_nmk arm lengths must be >= 0");
    int total = 1 + n + m + k;
    std::vector<int> w(total, 2);
    w[0] = 3;
    Edges e;
    Labels lab(total);
    lab[0] = "E0";
    auto arm = [&](int first, int len, const std::string& prefix) {
        for (int i = 0; i < len; ++i) {
            int id = first + i;
            lab[id] = prefix + std::to_string(i + 1);
            e.emplace_back(i == 0 ? 0 : id - 1, id);
        }
    };
    arm(1, n, "A");
    arm(1 + n, m, "B");
    arm(1 + n + m, k, "C");
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

// Chain E_m..E1 glued to E0, with a D_{n+1} fork on the other side: F2 adjacent
// to E0 and F1, then the chain F2..Fn.
WeightedTree triple_bmn(int m, int n) {
    if (m < 0) throw std::invalid_argument("B_mn requires m >= 0");
    if (n < 2) throw std::invalid_argument("B_mn requires n >= 2 for the fork to exist");
    int total = 1 + m + n;
    std::vector<int> w(total, 2);
    w[0] = 3;
    Edges e;
    Labels lab(total);
    lab[0] = "E0";
    for (int i = 1; i <= m; ++i) {
        lab[i] = "E" + std::to_string(i);
        e.emplace_back(i == 1 ? 0 : i - 1, i);
    }
    auto fid = [&](int j) { return m + j; };  // F_j
    for (int j = 1; j <= n; ++j) lab[fid(j)] = "F" + std::to_string(j);
    e.emplace_back(0, fid(2));
    e.emplace_back(fid(1), fid(2));
    for (int j = 2; j + 1 <= n; ++j) e.emplace_back(fid(j), fid(j + 1));
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

// Chain E_n..E1 glued to E0, then a D_m tail F1..F_{m-1} with F_m hanging from
// F_{m-2}. For m == 2 the two fork leaves attach to E0 directly.
WeightedTree triple_cmn(int m, int n) {
    if (m < 2) throw std::invalid_argument("C_mn requires m >= 2");
    if (n < 1) throw std::invalid_argument("C_mn requires n >= 1");
    int total = 1 + n + m;
    std::vector<int> w(total, 2);
    w[0] = 3;
    Edges e;
    Labels lab(total);
    lab[0] = "E0";
    for (int i = 1; i <= n; ++i) {
        lab[i] = "E" + std::to_string(i);
        e.emplace_back(i == 1 ? 0 : i - 1, i);
    }
    auto fid = [&](int j) { return n + j; };
    for (int j = 1; j <= m; ++j) lab[fid(j)] = "F" + std::to_string(j);
    if (m == 2) {
        e.emplace_back(0, fid(1));
        e.emplace_back(0, fid(2));
    } else {
        e.emplace_back(0, fid(1));
        for (int j = 1; j + 1 <= m - 1; ++j) e.emplace_back(fid(j), fid(j + 1));
        e.emplace_back(fid(m - 2), fid(m));
    }
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

// Chain arm glued to a D_5 short tail: E0-F1-F2-F3-F4 with F5 on F2.
WeightedTree triple_dn5(int n) {
    if (n < 0) throw std::invalid_argument("D_n5 requires n >= 0");
    int total = 1 + n + 5;
    std::vector<int> w(total, 2);
    w[0] = 3;
    Edges e;
    Labels lab(total);
    lab[0] = "E0";
    for (int i = 1; i <= n; ++i) {
        lab[i] = "E" + std::to_string(i);
        e.emplace_back(i == 1 ? 0 : i - 1, i);
    }
    auto fid = [&](int j) { return n + j; };
    for (int j = 1; j <= 5; ++j) lab[fid(j)] = "F" + std::to_string(j);
    e.emplace_back(0, fid(1));
    e.emplace_back(fid(1), fid(2));
    e.emplace_back(fid(2), fid(3));
    e.emplace_back(fid(3), fid(4));
    e.emplace_back(fid(2), fid(5));
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

// Chain arm glued to an E_6 arm: E0-F1-F2-F3-F4-F5 with F6 on F3.
WeightedTree triple_fn(int n) {
    if (n < 0) throw std::invalid_argument("F_n requires n >= 0");
    int total = 1 + n + 6;
    std::vector<int> w(total, 2);
    w[0] = 3;
    Edges e;
    Labels lab(total);
    lab[0] = "E0";
    for (int i = 1; i <= n; ++i) {
        lab[i] = "E" + std::to_string(i);
        e.emplace_back(i == 1 ? 0 : i - 1, i);
    }
    auto fid = [&](int j) { return n + j; };
    for (int j = 1; j <= 6; ++j) lab[fid(j)] = "F" + std::to_string(j);
    e.emplace_back(0, fid(1));
    for (int j = 1; j <= 4; ++j) e.emplace_back(fid(j), fid(j + 1));
    e.emplace_back(fid(3), fid(6));
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

// Path E1..E_{n-1} with the weight-3 vertex E0 on E3.
WeightedTree triple_hn(int n) {
    if (n < 5) throw std::invalid_argument("H_n requires n >= 5");
    std::vector<int> w(n, 2);
    w[0] = 3;
    Edges e;
    Labels lab(n);
    for (int i = 0; i < n; ++i) lab[i] = "E" + std::to_string(i);
    for (int i = 1; i + 1 <= n - 1; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, 3);
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

// E0-E1-E2-E3-E4-E5 path with E6 on E2; weight 3 at E0.
WeightedTree triple_e71() {
    std::vector<int> w(7, 2);
    w[0] = 3;
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}};
    Labels lab{"E0", "E1", "E2", "E3", "E4", "E5", "E6"};
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

// E0-E1-E2-E3-E4-E5-E6 path with E7 on E4; weight 3 at E0.
WeightedTree triple_e81() {
    std::vector<int> w(8, 2);
    w[0] = 3;
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
    Labels lab{"E0", "E1", "E2", "E3", "E4", "E5", "E6", "E7"};
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

// E1-E2-E3-E4-E5-E6-E7 path with E8 on E3; weight 3 at E1 (id 0).
WeightedTree triple_e82() {
    std::vector<int> w(8, 2);
    w[0] = 3;
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}};
    Labels lab{"E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8"};
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

// Connector between two weight-3 end vertices whose Artin coefficients rise
// 2..k, stay at k+1 across t-2 positions, and fall back to 2; a third heavy
// vertex of weight max(3, k+1) hangs from the last plateau position.
WeightedTree connector_akt(int k, int t) {
    if (k < 1 || t < 3) throw std::invalid_argument("A_kt requires k >= 1 and t >= 3");
    int chain = 2 * k + t - 4;
    int total = chain + 3;
    std::vector<int> w(total, 2);
    Labels lab(total);
    w[0] = 3;
    lab[0] = "W1";
    int wj = chain + 1, ws = chain + 2;
    w[wj] = 3;
    lab[wj] = "W2";
    w[ws] = std::max(3, k + 1);
    lab[ws] = "W3";
    Edges e;
    for (int i = 0; i <= chain; ++i) e.emplace_back(i, i + 1);
    int plateau_last = k + t - 3;
    e.emplace_back(plateau_last, ws);
    for (int i = 1; i <= chain; ++i) lab[i] = "v" + std::to_string(i);
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

// Composite quasi-determinantal tree: W1 and W2 joined by an A_{2,4} connector
// carrying W3 on its plateau, a D_5 short tail at W2 and an E_6 arm at W3.
WeightedTree quasi_composite(int w1, int w2, int w3) {
    if (w1 < 3 || w2 < 4 || w3 < 5)
        throw std::invalid_argument("quasi tree requires w1 >= 3, w2 >= 4, w3 >= 5");
    std::vector<int> w(18, 2);
    w[0] = w1;
    w[5] = w2;
    w[11] = w3;
    Labels lab{"W1", "v1", "v2",  "v3",  "v4",  "W2",  "v5",  "v6",  "v7",
               "v8", "v9", "W3",  "v10", "v11", "v12", "v13", "v14", "v15"};
    Edges e{{0, 1},  {1, 2},   {2, 3},   {3, 4},   {4, 5},   {5, 6},
            {6, 7},  {7, 8},   {8, 9},   {7, 10},  {3, 11},  {11, 16},
            {16, 15}, {15, 14}, {14, 13}, {13, 12}, {14, 17}};
    return WeightedTree(std::move(w), std::move(e), std::move(lab));
}

}  // namespace

WeightedTree catalog_tree(const std::string& raw_name, const std::vector<int>& params) {
    std::string name = raw_name;
    if (name == "H") name = "H_n";
    if (name == "F") name = "F_n";
    if (name == "quasi-composite") name = "quasi";
    if (name == "A") {
        need_params(params, 1, name);
        return dynkin_a(params[0]);
    }
    if (name == "D") {
        need_params(params, 1, name);
        return dynkin_d(params[0]);
    }
    if (name == "E6") {
        need_params(params, 0, name);
        return dynkin_e(6);
    }
    if (name == "E7") {
        need_params(params, 0, name);
        return dynkin_e(7);
    }
    if (name == "E8") {
        need_params(params, 0, name);
        return dynkin_e(8);
    }
    if (name == "A_nmk") {
        need_params(params, 3, name);
        return star_anmk(params[0], params[1], params[2]);
    }
    if (name == "B_mn") {
        need_params(params, 2, name);
        return triple_bmn(params[0], params[1]);
    }
    if (name == "C_mn") {
        need_params(params, 2, name);
        return triple_cmn(params[0], params[1]);
    }
    if (name == "D_n5") {
        need_params(params, 1, name);
        return triple_dn5(params[0]);
    }
    if (name == "F_n") {
        need_params(params, 1, name);
        return triple_fn(params[0]);
    }
    if (name == "H_n") {
        need_params(params, 1, name);
        return triple_hn(params[0]);
    }
    if (name == "E71") {
        need_params(params, 0, name);
        return triple_e71();
    }
    if (name == "E81") {
        need_params(params, 0, name);
        return triple_e81();
    }
    if (name == "E82") {
        need_params(params, 0, name);
        return triple_e82();
    }
    if (name == "A_kt") {
        need_params(params, 2, name);
        return connector_akt(params[0], params[1]);
    }
    if (name == "quasi") {
        need_params(params, 3, name);
        return quasi_composite(params[0], params[1], params[2]);
    }
    throw std::invalid_argument("unknown catalog family: " + name);
}

std::vector<std::string> catalog_families() {
    return {"A",   "D",   "E6",  "E7",  "E8",  "A_nmk", "B_mn", "C_mn",
            "D_n5", "F_n", "H_n", "E71", "E81", "E82",  "A_kt", "quasi"};
}

bool is_triple_tree(const WeightedTree& t) {
    auto heavy = t.heavy_vertices();
    return heavy.size() == 1 && t.weight(heavy[0]) == 3;
}

}  // namespace rtq
