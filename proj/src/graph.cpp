#include "nzf/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_set>

#include "nzf/errors.hpp"

#include <nlohmann/json.hpp>

namespace nzf {

Multigraph::Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                       std::string name)
    : n_(vertex_count), name_(std::move(name)) {
    if (vertex_count < 0) throw SchemaError("vertex_count must be nonnegative");
    edges_.reserve(edges.size());
    degree_.assign(static_cast<std::size_t>(n_), 0);
    int id = 0;
    for (const auto& [t, h] : edges) {
        if (t < 0 || t >= n_ || h < 0 || h >= n_)
            throw SchemaError("edge " + std::to_string(id) + " endpoint out of range");
        edges_.push_back({id, t, h});
        degree_[static_cast<std::size_t>(t)] += 1;
        degree_[static_cast<std::size_t>(h)] += 1;
        ++id;
    }
    // CSR incidence; loops stored once per vertex.
    std::vector<int> count(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        count[static_cast<std::size_t>(e.tail)] += 1;
        if (e.head != e.tail) count[static_cast<std::size_t>(e.head)] += 1;
    }
    adj_start_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v) adj_start_[static_cast<std::size_t>(v) + 1] = adj_start_[static_cast<std::size_t>(v)] + count[static_cast<std::size_t>(v)];
    adj_.resize(static_cast<std::size_t>(adj_start_[static_cast<std::size_t>(n_)]));
    std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.tail)]++)] = e.id;
        if (e.head != e.tail) adj_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.head)]++)] = e.id;
    }
    // Edges were appended in id order, so each incidence list is sorted.
}

std::span<const int> Multigraph::incident(int v) const {
    auto b = static_cast<std::size_t>(adj_start_[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(adj_start_[static_cast<std::size_t>(v) + 1]);
    return {adj_.data() + b, e - b};
}

int Multigraph::components() const {
    if (n_ == 0) return 0;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    int comps = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++comps;
        stack.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int eid : incident(v)) {
                const Edge& e = edge(eid);
                int w = e.tail == v ? e.head : e.tail;
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

bool Multigraph::is_connected() const { return components() <= 1; }

bool Multigraph::is_cubic() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != 3) return false;
    return n_ > 0;
}

bool Multigraph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.tail == e.head; });
}

std::optional<std::vector<int>> Multigraph::bipartition() const {
    std::vector<int> colour(static_cast<std::size_t>(n_), -1);
    for (int s = 0; s < n_; ++s) {
        if (colour[static_cast<std::size_t>(s)] != -1) continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int eid : incident(v)) {
                const Edge& e = edge(eid);
                if (e.tail == e.head) return std::nullopt;  // loop
                int w = e.tail == v ? e.head : e.tail;
                if (colour[static_cast<std::size_t>(w)] == -1) {
                    colour[static_cast<std::size_t>(w)] = 1 - colour[static_cast<std::size_t>(v)];
                    q.push(w);
                } else if (colour[static_cast<std::size_t>(w)] == colour[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return colour;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

// Reads the N(n) field; returns (n, bytes consumed).
std::pair<long long, std::size_t> g6_read_order(const std::string& s) {
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size()) throw ParseError("unexpected end of graph6 text", i);
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 character out of range", i);
        return c - 63;
    };
    int b0 = byte(0);
    if (b0 < 63) return {b0, 1};
    // b0 == 63 ('~'): extended order
    int b1 = byte(1);
    if (b1 < 63) {
        long long n = (static_cast<long long>(b1) << 12) | (byte(2) << 6) | byte(3);
        return {n, 4};
    }
    long long n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    return {n, 8};
}

Multigraph parse_graph6(const std::string& raw) {
    std::string s = raw;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    std::size_t base = 0;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) {
        s = s.substr(header.size());
        base = header.size();
    }
    if (s.empty()) throw ParseError("empty graph6 text", base);
    auto [n64, pos] = g6_read_order(s);
    if (n64 > 100000) throw ParseError("graph6 order too large for this tool", base);
    int n = static_cast<int>(n64);
    std::size_t nbits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() - pos < nbytes) throw ParseError("graph6 body too short", base + s.size());
    if (s.size() - pos > nbytes) throw ParseError("trailing characters after graph6 body", base + pos + nbytes);
    std::vector<char> bits(nbits, 0);
    for (std::size_t b = 0; b < nbytes; ++b) {
        int c = static_cast<unsigned char>(s[pos + b]);
        if (c < 63 || c > 126) throw ParseError("graph6 character out of range", base + pos + b);
        int v = c - 63;
        for (int k = 0; k < 6; ++k) {
            std::size_t idx = b * 6 + static_cast<std::size_t>(k);
            bool bit = (v >> (5 - k)) & 1;
            if (idx < nbits) {
                bits[idx] = bit;
            } else if (bit) {
                throw ParseError("nonzero padding bits", base + pos + b);
            }
        }
    }
    // Bit order is column-wise (j, i<j); collect, then emit edges in
    // lexicographic (i, j) order with tail = i.
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::size_t idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (bits[idx]) adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) edges.emplace_back(i, j);
    return Multigraph(n, edges);
}

std::string to_graph6(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const Edge& e : g.edges()) {
        if (e.tail == e.head) throw DomainError("graph6: loops are not representable");
        if (adj[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)])
            throw DomainError("graph6: parallel edges are not representable");
        adj[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)] = 1;
        adj[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(e.tail)] = 1;
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return out;
}

Multigraph parse_edge_list_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw SchemaError("edge-list JSON requires fields \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw SchemaError("\"n\" must be an integer");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw SchemaError("each edge must be an integer pair [tail, head]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::string name = j.value("name", std::string());
    return Multigraph(n, edges, name);
}

}  // namespace

Multigraph parse_graph(const std::string& text, GraphFormat format) {
    if (text.empty()) throw ParseError("empty input", 0);
    return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list_json(text);
}

std::string serialize_graph(const Multigraph& g, GraphFormat format) {
    if (format == GraphFormat::Graph6) return to_graph6(g);
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.tail, e.head});
    j["edges"] = edges;
    if (!g.name().empty()) j["name"] = g.name();
    return j.dump();
}

// ---------------------------------------------------------------------------
// structural queries

std::vector<int> bridges(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<int> out;
    int timer = 0;
    // Iterative DFS; parallel edges are distinguished by edge id, so only
    // the tree edge itself is skipped when computing lowlinks.
    struct Frame {
        int v;
        int via_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int s = 0; s < n; ++s) {
        if (disc[static_cast<std::size_t>(s)] != -1) continue;
        disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
        stack.push_back({s, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                int eid = inc[f.next++];
                const Edge& e = g.edge(eid);
                if (e.tail == e.head) continue;       // loop
                if (eid == f.via_edge) continue;      // tree edge back to parent
                int w = e.tail == f.v ? e.head : e.tail;
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    stack.push_back({w, eid, 0});
                } else {
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.v;
                int via = f.via_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                    if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)]) out.push_back(via);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<int> odd_girth(const Multigraph& g) {
    // BFS on the bipartite double cover: the distance from (v,0) to (v,1)
    // is the length of a shortest odd closed walk through v, and the
    // minimum over v of that quantity is the odd girth.
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(2 * n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(2 * s)] = 0;
        q.push(2 * s);
        while (!q.empty()) {
            int node = q.front();
            q.pop();
            int v = node / 2, layer = node % 2;
            if (best != -1 && dist[static_cast<std::size_t>(node)] >= best) continue;
            for (int eid : g.incident(v)) {
                const Edge& e = g.edge(eid);
                int w = e.tail == v ? e.head : e.tail;
                int to = 2 * w + (1 - layer);
                if (dist[static_cast<std::size_t>(to)] == -1) {
                    dist[static_cast<std::size_t>(to)] = dist[static_cast<std::size_t>(node)] + 1;
                    q.push(to);
                }
            }
        }
        int d = dist[static_cast<std::size_t>(2 * s + 1)];
        if (d != -1 && (best == -1 || d < best)) best = d;
    }
    if (best == -1) return std::nullopt;
    return best;
}

CycleBasis fundamental_cycles(const Multigraph& g) {
    int n = g.vertex_count();
    CycleBasis basis;
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<char> is_tree(static_cast<std::size_t>(g.edge_count()), 0);
    for (int s = 0; s < n; ++s) {
        if (depth[static_cast<std::size_t>(s)] != -1) continue;
        basis.components += 1;
        depth[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int eid : g.incident(v)) {
                const Edge& e = g.edge(eid);
                if (e.tail == e.head) continue;
                int w = e.tail == v ? e.head : e.tail;
                if (depth[static_cast<std::size_t>(w)] == -1) {
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    parent_edge[static_cast<std::size_t>(w)] = eid;
                    is_tree[static_cast<std::size_t>(eid)] = 1;
                    q.push(w);
                }
            }
        }
    }
    for (int eid = 0; eid < g.edge_count(); ++eid)
        if (is_tree[static_cast<std::size_t>(eid)]) basis.tree_edges.push_back(eid);

    auto climb = [&](int from, int to, std::vector<SignedEdge>& into, bool reverse) {
        // Walks tree edges from `from` up to ancestor `to`. Forward walks
        // record the travel direction; reversed walks are flipped by the
        // caller's ordering below.
        std::vector<SignedEdge> leg;
        int v = from;
        while (v != to) {
            int eid = parent_edge[static_cast<std::size_t>(v)];
            const Edge& e = g.edge(eid);
            int p = parent[static_cast<std::size_t>(v)];
            // travel v -> p
            int sign = (e.tail == v && e.head == p) ? 1 : -1;
            leg.push_back({eid, reverse ? -sign : sign});
            v = p;
        }
        if (reverse) std::reverse(leg.begin(), leg.end());
        into.insert(into.end(), leg.begin(), leg.end());
    };

    for (int eid = 0; eid < g.edge_count(); ++eid) {
        if (is_tree[static_cast<std::size_t>(eid)]) continue;
        const Edge& e = g.edge(eid);
        FundamentalCycle fc;
        fc.nontree_edge = eid;
        fc.edges.push_back({eid, 1});
        if (e.tail != e.head) {
            // Close the cycle: tail -> head (the edge itself), then the tree
            // path head -> lca -> tail.
            int a = e.head, b = e.tail;
            int da = depth[static_cast<std::size_t>(a)], db = depth[static_cast<std::size_t>(b)];
            int ua = a, ub = b;
            while (da > db) { ua = parent[static_cast<std::size_t>(ua)]; --da; }
            while (db > da) { ub = parent[static_cast<std::size_t>(ub)]; --db; }
            while (ua != ub) {
                ua = parent[static_cast<std::size_t>(ua)];
                ub = parent[static_cast<std::size_t>(ub)];
            }
            int lca = ua;
            climb(e.head, lca, fc.edges, false);
            climb(e.tail, lca, fc.edges, true);
        }
        basis.cycles.push_back(std::move(fc));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// generators

namespace gen {

Multigraph cycle(int n) {
    if (n < 1) throw DomainError("cycle: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Multigraph(n, edges, "C" + std::to_string(n));
}

Multigraph wheel(int n) {
    if (n < 3) throw DomainError("wheel: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
    return Multigraph(n + 1, edges, "W" + std::to_string(n));
}

Multigraph prism(int n) {
    if (n < 3) throw DomainError("prism: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) edges.emplace_back(n + i, n + (i + 1) % n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
    return Multigraph(2 * n, edges, "P" + std::to_string(n));
}

Multigraph complete(int n) {
    if (n < 1) throw DomainError("complete: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Multigraph(n, edges, "K" + std::to_string(n));
}

Multigraph k33() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) edges.emplace_back(i, j);
    return Multigraph(6, edges, "K33");
}

Multigraph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    return Multigraph(10, edges, "Petersen");
}

Multigraph flower_snark(int k) {
    if (k < 3 || k % 2 == 0) throw DomainError("flower_snark: k must be odd and >= 3");
    // k stars (centre a_i with tips b_i, c_i, d_i), the b-cycle of length k,
    // and the single cd-cycle of length 2k.
    auto a = [&](int i) { return i; };
    auto b = [&](int i) { return k + i; };
    auto c = [&](int i) { return 2 * k + i; };
    auto d = [&](int i) { return 3 * k + i; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(a(i), b(i));
        edges.emplace_back(a(i), c(i));
        edges.emplace_back(a(i), d(i));
    }
    for (int i = 0; i < k; ++i) edges.emplace_back(b(i), b((i + 1) % k));
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(c(i), c(i + 1));
    edges.emplace_back(c(k - 1), d(0));
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(d(i), d(i + 1));
    edges.emplace_back(d(k - 1), c(0));
    return Multigraph(4 * k, edges, "J" + std::to_string(k));
}

Multigraph triangle_replaced(const Multigraph& base) {
    if (!base.is_cubic()) throw DomainError("non-cubic: triangle replacement needs a cubic graph");
    int n = base.vertex_count();
    // Slot s of vertex v (0..2, incident endpoints in edge-id order) becomes
    // corner 3v+s of v's triangle.
    std::vector<int> next_slot(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : base.edges()) {
        int st = next_slot[static_cast<std::size_t>(e.tail)]++;
        int sh = next_slot[static_cast<std::size_t>(e.head)]++;
        edges.emplace_back(3 * e.tail + st, 3 * e.head + sh);
    }
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(3 * v, 3 * v + 1);
        edges.emplace_back(3 * v + 1, 3 * v + 2);
        edges.emplace_back(3 * v + 2, 3 * v);
    }
    std::string nm = base.name().empty() ? "triangle_replaced" : base.name() + "_delta";
    return Multigraph(3 * n, edges, nm);
}

}  // namespace gen

}  // namespace nzf
