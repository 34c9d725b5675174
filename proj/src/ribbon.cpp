#include "rgpoly/ribbon.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace rgpoly {

namespace {

constexpr int kMaxDarts = 256;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::string tangle_name(TangleType t) {
    switch (t) {
        case TangleType::w1: return "w1";
        case TangleType::w2: return "w2";
        case TangleType::w3: return "w3";
        case TangleType::w4: return "w4";
    }
    return "w1";
}

std::optional<TangleType> tangle_from_name(const std::string& s) {
    if (s == "w1") return TangleType::w1;
    if (s == "w2") return TangleType::w2;
    if (s == "w3") return TangleType::w3;
    if (s == "w4") return TangleType::w4;
    return std::nullopt;
}

void RibbonGraph::finish_construction() {
    int n = dart_count();
    if (n > kMaxDarts) throw GraphError("graph exceeds the supported dart count");
    sigma_inv_.assign(n, -1);
    for (int d = 0; d < n; ++d) {
        if (sigma_[d] < 0 || sigma_[d] >= n || sigma_inv_[sigma_[d]] != -1)
            throw GraphError("rotation is not a permutation");
        sigma_inv_[sigma_[d]] = d;
    }
    for (int d = 0; d < n; ++d) {
        if (eps_[d] < 0 || eps_[d] >= n || eps_[d] == d || eps_[eps_[d]] != d)
            throw GraphError("pairing is not a fixed-point-free involution");
    }
    weights_.resize(edge_count());
    tangles_.resize(edge_count());
}

RibbonGraph RibbonGraph::from_rotation(
    const std::vector<std::vector<std::string>>& vertex_rotations,
    const std::vector<std::pair<std::string, std::string>>& pairs, int isolated_vertices) {
    if (isolated_vertices < 0) throw GraphError("negative isolated vertex count");
    RibbonGraph g;
    std::map<std::string, int> ids;
    std::vector<std::string> names;

    int vertex = 0;
    for (const auto& rot : vertex_rotations) {
        if (rot.empty()) {
            ++g.isolated_;
            continue;
        }
        int first = -1, prev = -1;
        for (const auto& tok : rot) {
            if (ids.count(tok)) throw DuplicateDart("dart '" + tok + "' appears more than once");
            int d = static_cast<int>(names.size());
            ids.emplace(tok, d);
            names.push_back(tok);
            g.sigma_.push_back(-1);
            g.dart_vertex_.push_back(vertex);
            g.dart_edge_.push_back(-1);
            if (prev >= 0) g.sigma_[prev] = d;
            if (first < 0) first = d;
            prev = d;
        }
        g.sigma_[prev] = first;
        ++vertex;
    }
    g.rotation_vertices_ = vertex;
    g.isolated_ += isolated_vertices;

    g.eps_.assign(g.sigma_.size(), -1);
    for (const auto& [ta, tb] : pairs) {
        if (ta == tb) throw SelfPairedDart("dart '" + ta + "' is paired with itself");
        auto ia = ids.find(ta);
        auto ib = ids.find(tb);
        if (ia == ids.end())
            throw UnpairedDart("dart '" + ta + "' appears in an edge but in no vertex rotation");
        if (ib == ids.end())
            throw UnpairedDart("dart '" + tb + "' appears in an edge but in no vertex rotation");
        int da = ia->second, db = ib->second;
        if (g.eps_[da] != -1) throw DuplicateDart("dart '" + ta + "' appears in more than one edge");
        if (g.eps_[db] != -1) throw DuplicateDart("dart '" + tb + "' appears in more than one edge");
        int edge = static_cast<int>(g.edge_darts_.size());
        g.eps_[da] = db;
        g.eps_[db] = da;
        g.dart_edge_[da] = edge;
        g.dart_edge_[db] = edge;
        g.edge_darts_.emplace_back(da, db);
    }
    for (size_t d = 0; d < g.eps_.size(); ++d)
        if (g.eps_[d] == -1)
            throw UnpairedDart("dart '" + names[d] + "' appears in no edge");

    g.finish_construction();
    return g;
}

RibbonGraph RibbonGraph::from_permutations(std::vector<int> sigma, std::vector<int> eps,
                                           int isolated_vertices) {
    if (sigma.size() != eps.size()) throw GraphError("permutation size mismatch");
    if (sigma.size() % 2 != 0) throw GraphError("odd dart count");
    if (isolated_vertices < 0) throw GraphError("negative isolated vertex count");
    RibbonGraph g;
    g.sigma_ = std::move(sigma);
    g.eps_ = std::move(eps);
    g.isolated_ = isolated_vertices;
    int n = g.dart_count();

    // vertices in order of each sigma-cycle's smallest dart
    g.dart_vertex_.assign(n, -1);
    int vertex = 0;
    for (int d = 0; d < n; ++d) {
        if (g.dart_vertex_[d] != -1) continue;
        int cur = d;
        do {
            if (cur < 0 || cur >= n || g.dart_vertex_[cur] != -1)
                throw GraphError("rotation is not a permutation");
            g.dart_vertex_[cur] = vertex;
            cur = g.sigma_[cur];
        } while (cur != d);
        ++vertex;
    }
    g.rotation_vertices_ = vertex;

    // edges in order of their smaller dart
    g.dart_edge_.assign(n, -1);
    for (int d = 0; d < n; ++d) {
        if (g.dart_edge_[d] != -1) continue;
        int o = g.eps_[d];
        if (o == d) throw SelfPairedDart("dart is paired with itself");
        int edge = static_cast<int>(g.edge_darts_.size());
        g.dart_edge_[d] = edge;
        g.dart_edge_[o] = edge;
        g.edge_darts_.emplace_back(d, o);
    }

    g.finish_construction();
    return g;
}

std::vector<std::vector<int>> RibbonGraph::vertex_rotations() const {
    std::vector<std::vector<int>> rots(rotation_vertices_);
    std::vector<int> start(rotation_vertices_, -1);
    for (int d = 0; d < dart_count(); ++d) {
        int v = dart_vertex_[d];
        if (start[v] == -1) start[v] = d;  // smallest dart, since d ascends
    }
    for (int v = 0; v < rotation_vertices_; ++v) {
        int cur = start[v];
        do {
            rots[v].push_back(cur);
            cur = sigma_[cur];
        } while (cur != start[v]);
    }
    return rots;
}

int RibbonGraph::component_count() const {
    int v = vertex_count();
    if (v == 0) return 0;
    UnionFind uf(v);
    for (const auto& [da, db] : edge_darts_) uf.unite(dart_vertex_[da], dart_vertex_[db]);
    int k = 0;
    for (int i = 0; i < rotation_vertices_; ++i)
        if (uf.find(i) == i) ++k;
    return k + isolated_;
}

int RibbonGraph::boundary_count(State h) const {
    std::array<uint64_t, (kMaxDarts + 63) / 64> visited{};
    auto seen = [&](int d) { return (visited[d >> 6] >> (d & 63)) & 1u; };
    auto mark = [&](int d) { visited[d >> 6] |= uint64_t(1) << (d & 63); };

    int p = 0;
    std::array<uint64_t, (kMaxDarts + 63) / 64> vertex_used{};
    for (int d = 0; d < dart_count(); ++d) {
        if (!h.contains(dart_edge_[d])) continue;
        int v = dart_vertex_[d];
        vertex_used[v >> 6] |= uint64_t(1) << (v & 63);
        if (seen(d)) continue;
        ++p;
        int cur = d;
        do {
            mark(cur);
            cur = sigma_[eps_[cur]];
            while (!h.contains(dart_edge_[cur])) cur = sigma_[cur];
        } while (cur != d);
    }
    for (int v = 0; v < rotation_vertices_; ++v)
        if (!((vertex_used[v >> 6] >> (v & 63)) & 1u)) ++p;
    return p + isolated_;
}

std::vector<Walk> RibbonGraph::boundary_walks(State h) const {
    std::vector<Walk> walks;
    std::vector<char> seen(dart_count(), 0);
    std::vector<char> vertex_used(rotation_vertices_, 0);
    for (int d = 0; d < dart_count(); ++d) {
        if (!h.contains(dart_edge_[d])) continue;
        vertex_used[dart_vertex_[d]] = 1;
        if (seen[d]) continue;
        Walk walk;
        int cur = d;
        do {
            seen[cur] = 1;
            int edge = dart_edge_[cur];
            walk.push_back({edge, cur == edge_darts_[edge].first, cur});
            cur = sigma_[eps_[cur]];
            while (!h.contains(dart_edge_[cur])) cur = sigma_[cur];
        } while (cur != d);
        walks.push_back(std::move(walk));
    }
    for (int v = 0; v < rotation_vertices_; ++v)
        if (!vertex_used[v]) walks.emplace_back();
    for (int i = 0; i < isolated_; ++i) walks.emplace_back();
    return walks;
}

Metrics RibbonGraph::metrics(State h) const {
    Metrics m;
    int v = vertex_count();
    m.e = 0;
    for (int e = 0; e < edge_count(); ++e)
        if (h.contains(e)) ++m.e;

    if (v == 0) return m;  // empty graph: all metrics zero

    UnionFind uf(v);
    for (int e = 0; e < edge_count(); ++e) {
        if (!h.contains(e)) continue;
        const auto& [da, db] = edge_darts_[e];
        uf.unite(dart_vertex_[da], dart_vertex_[db]);
    }
    m.k = isolated_;
    for (int i = 0; i < rotation_vertices_; ++i)
        if (uf.find(i) == i) ++m.k;
    m.r = v - m.k;
    m.n = m.e - m.r;
    m.p = boundary_count(h);
    int twog = m.k - m.p + m.n;
    if (twog < 0 || twog % 2 != 0)
        throw std::logic_error("boundary tracing inconsistency: k - p + n = " +
                               std::to_string(twog));
    m.g = twog / 2;
    return m;
}

RibbonGraph RibbonGraph::dual() const {
    if (!is_connected()) throw DisconnectedGraph("dual requires a connected graph");
    if (dart_count() == 0) return *this;  // single vertex is self-dual
    RibbonGraph g;
    g.eps_ = eps_;
    g.dart_edge_ = dart_edge_;
    g.edge_darts_ = edge_darts_;
    g.weights_ = weights_;
    g.tangles_ = tangles_;
    g.isolated_ = 0;
    g.sigma_.resize(dart_count());
    for (int d = 0; d < dart_count(); ++d) g.sigma_[d] = sigma_[eps_[d]];

    // dual vertices are the boundary walks, in walk-trace order
    g.dart_vertex_.assign(dart_count(), -1);
    int vertex = 0;
    for (int d = 0; d < dart_count(); ++d) {
        if (g.dart_vertex_[d] != -1) continue;
        int cur = d;
        do {
            g.dart_vertex_[cur] = vertex;
            cur = g.sigma_[cur];
        } while (cur != d);
        ++vertex;
    }
    g.rotation_vertices_ = vertex;
    int n = dart_count();
    g.sigma_inv_.assign(n, -1);
    for (int d = 0; d < n; ++d) g.sigma_inv_[g.sigma_[d]] = d;
    return g;
}

RibbonGraph RibbonGraph::tensor_cycle(int q) const {
    if (q < 2) throw BadCycleLength("cycle length must be at least 2, got " + std::to_string(q));
    if (q == 2) {
        RibbonGraph g = *this;
        g.weights_.assign(g.edge_count(), std::nullopt);
        g.tangles_.assign(g.edge_count(), std::nullopt);
        return g;
    }
    int e = edge_count();
    int seg = q - 1;            // path edges per original edge
    int newv = q - 2;           // new vertices per original edge
    int nd = dart_count() + e * 2 * newv;
    RibbonGraph g;
    g.sigma_.assign(nd, -1);
    g.eps_.assign(nd, -1);
    g.dart_vertex_.assign(nd, -1);
    g.dart_edge_.assign(nd, -1);
    g.isolated_ = isolated_;

    for (int d = 0; d < dart_count(); ++d) {
        g.sigma_[d] = sigma_[d];
        g.dart_vertex_[d] = dart_vertex_[d];
    }
    int vertex = rotation_vertices_;
    g.edge_darts_.assign(e * seg, {-1, -1});
    for (int i = 0; i < e; ++i) {
        const auto& [dA, dB] = edge_darts_[i];
        int base = dart_count() + i * 2 * newv;
        auto a = [&](int j) { return base + 2 * (j - 1); };      // j in 1..newv
        auto b = [&](int j) { return base + 2 * (j - 1) + 1; };
        for (int j = 1; j <= newv; ++j) {
            g.sigma_[a(j)] = b(j);
            g.sigma_[b(j)] = a(j);
            g.dart_vertex_[a(j)] = vertex;
            g.dart_vertex_[b(j)] = vertex;
            ++vertex;
        }
        auto link = [&](int idx, int x, int y) {
            int edge = i * seg + idx;
            g.eps_[x] = y;
            g.eps_[y] = x;
            g.dart_edge_[x] = edge;
            g.dart_edge_[y] = edge;
            g.edge_darts_[edge] = {x, y};
        };
        link(0, dA, a(1));
        for (int j = 1; j < newv; ++j) link(j, b(j), a(j + 1));
        link(seg - 1, b(newv), dB);
    }
    g.rotation_vertices_ = vertex;
    g.finish_construction();
    return g;
}

RibbonGraph RibbonGraph::with_weight(int edge, std::string symbol) const {
    RibbonGraph g = *this;
    g.weights_.at(edge) = std::move(symbol);
    return g;
}

RibbonGraph RibbonGraph::with_uniform_weights(const std::string& symbol) const {
    RibbonGraph g = *this;
    for (auto& w : g.weights_) w = symbol;
    return g;
}

RibbonGraph RibbonGraph::with_tangle(int edge, TangleType t) const {
    RibbonGraph g = *this;
    g.tangles_.at(edge) = t;
    return g;
}

RibbonGraph RibbonGraph::with_uniform_tangles(TangleType t) const {
    RibbonGraph g = *this;
    for (auto& x : g.tangles_) x = t;
    return g;
}

bool RibbonGraph::all_weighted() const {
    for (const auto& w : weights_)
        if (!w) return false;
    return true;
}

bool RibbonGraph::all_tangled() const {
    for (const auto& t : tangles_)
        if (!t) return false;
    return true;
}

std::string RibbonGraph::canonical_form() const {
    int n = dart_count();
    // connected components over darts
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int d = 0; d < n; ++d) {
        if (comp[d] != -1) continue;
        std::vector<int> stack{d};
        comp[d] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : {sigma_[x], eps_[x]}) {
                if (comp[y] == -1) {
                    comp[y] = ncomp;
                    stack.push_back(y);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> members(ncomp);
    for (int d = 0; d < n; ++d) members[comp[d]].push_back(d);

    // The orientation-reversal flag is global: both encodings flip every
    // component together, and the smaller of the two is canonical.
    std::vector<int> label(n);
    std::vector<int> order;
    auto encode_oriented = [&](const std::vector<int>& nxt) {
        std::vector<std::string> encodings;
        for (const auto& mem : members) {
            std::string best;
            for (int root : mem) {
                for (int d : mem) label[d] = -1;
                order.clear();
                label[root] = 0;
                order.push_back(root);
                for (size_t i = 0; i < order.size(); ++i) {
                    for (int t : {nxt[order[i]], eps_[order[i]]}) {
                        if (label[t] == -1) {
                            label[t] = static_cast<int>(order.size());
                            order.push_back(t);
                        }
                    }
                }
                std::string enc;
                enc.reserve(order.size() * 2);
                for (int d : order) {
                    enc.push_back(static_cast<char>(label[nxt[d]]));
                    enc.push_back(static_cast<char>(label[eps_[d]]));
                }
                if (best.empty() || enc < best) best = std::move(enc);
            }
            encodings.push_back(std::move(best));
        }
        std::sort(encodings.begin(), encodings.end());
        std::string out;
        for (const auto& e : encodings) {
            out += e;
            out.push_back('|');
        }
        return out;
    };
    std::string fwd = encode_oriented(sigma_);
    std::string rev = encode_oriented(sigma_inv_);
    return "i" + std::to_string(isolated_) + ";" + std::min(fwd, rev);
}

bool isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
    if (a.dart_count() != b.dart_count() || a.vertex_count() != b.vertex_count() ||
        a.isolated_vertices() != b.isolated_vertices())
        return false;
    return a.canonical_form() == b.canonical_form();
}

}  // namespace rgpoly
