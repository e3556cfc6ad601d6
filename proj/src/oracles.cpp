#include "ecc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace ecc {

namespace {

// Tomita-style max clique: candidates are greedily colored, vertices are
// expanded in reverse color order, and a branch is cut when depth + color
// cannot beat the incumbent.
class MaxCliqueSolver {
public:
    MaxCliqueSolver(const Graph& g, int target) : g_(g), target_(target) {}

    int run(const Bitset& mask) {
        std::vector<int> p = mask.to_vector();
        if (!p.empty()) expand(p);
        return best_;
    }

private:
    void expand(const std::vector<int>& p) {
        if (done_) return;
        std::vector<std::vector<int>> classes;
        std::vector<Bitset> masks;
        for (int v : p) {
            std::size_t c = 0;
            while (c < classes.size() && g_.neighbors(v).intersects(masks[c])) ++c;
            if (c == classes.size()) {
                classes.emplace_back();
                masks.emplace_back(g_.vertex_count());
            }
            classes[c].push_back(v);
            masks[c].set(v);
        }
        std::vector<int> order, color;
        order.reserve(p.size());
        color.reserve(p.size());
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                order.push_back(v);
                color.push_back(int(c) + 1);
            }

        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (done_) return;
            if (depth_ + color[i] <= best_) return;
            int v = order[i];
            std::vector<int> next;
            next.reserve(i);
            for (int j = 0; j < i; ++j)
                if (g_.adjacent(order[j], v)) next.push_back(order[j]);
            ++depth_;
            if (next.empty()) {
                if (depth_ > best_) {
                    best_ = depth_;
                    if (target_ > 0 && best_ >= target_) done_ = true;
                }
            } else {
                expand(next);
            }
            --depth_;
        }
    }

    const Graph& g_;
    int target_;
    int best_ = 0;
    int depth_ = 0;
    bool done_ = false;
};

Bitset full_mask(const Graph& g) { return Bitset::full(g.vertex_count()); }

} // namespace

int clique_number_within(const Graph& g, const Bitset& mask, int target) {
    MaxCliqueSolver solver(g, target);
    return solver.run(mask);
}

std::vector<int> find_clique_lex(const Graph& g, const Bitset& mask, int k) {
    if (k <= 0) return {};
    std::vector<int> result;
    Bitset avail = mask;
    while (int(result.size()) < k) {
        int need = k - int(result.size()) - 1;
        int fixed = -1;
        std::vector<int> cand = avail.to_vector();
        for (int v : cand) {
            Bitset next = avail & g.neighbors(v);
            for (int u = 0; u <= v; ++u)
                if (next.test(u)) next.reset(u);
            if (need == 0 || clique_number_within(g, next, need) >= need) {
                result.push_back(v);
                avail = next;
                fixed = v;
                break;
            }
        }
        if (fixed < 0) return {};
    }
    return result;
}

std::vector<int> max_clique_within(const Graph& g, const Bitset& mask) {
    int omega = clique_number_within(g, mask);
    return find_clique_lex(g, mask, omega);
}

std::vector<int> max_clique_exact(const Graph& g) {
    if (g.vertex_count() == 0) return {};
    return max_clique_within(g, full_mask(g));
}

std::vector<int> max_stable_exact(const Graph& g) {
    return max_clique_exact(g.complement());
}

int clique_number(const Graph& g) {
    return clique_number_within(g, full_mask(g));
}

int stable_number(const Graph& g) { return clique_number(g.complement()); }

// ---- induced K_{s,t} ---------------------------------------------------

namespace {

struct KstSearcher {
    const Graph& g;
    const Graph& gc; // complement, for stable-set subsearches
    int s, t;
    std::vector<int> side_a;
    std::optional<KstWitness> found;

    // cand: vertices > last chosen, nonadjacent to all chosen
    // common: common neighbors of all chosen
    void rec(const Bitset& cand, const Bitset& common) {
        if (found) return;
        if (int(side_a.size()) == s) {
            auto b = find_clique_lex(gc, common, t);
            if (int(b.size()) == t) found = KstWitness{side_a, b};
            return;
        }
        if (int(side_a.size()) + cand.count() < s) return;
        if (common.count() < t) return;
        std::vector<int> vs = cand.to_vector();
        for (int v : vs) {
            Bitset cand2 = cand & gc.neighbors(v);
            for (int u = 0; u <= v; ++u)
                if (cand2.test(u)) cand2.reset(u);
            Bitset common2 = common & g.neighbors(v);
            side_a.push_back(v);
            rec(cand2, common2);
            side_a.pop_back();
            if (found) return;
        }
    }
};

} // namespace

std::optional<KstWitness> find_induced_kst(const Graph& g, int s, int t) {
    if (s < 0 || t < 0 || s + t < 1)
        throw std::invalid_argument("find_induced_kst: need s,t >= 0 and s+t >= 1");
    Graph gc = g.complement();
    if (t == 0 || s == 0) {
        int want = s + t; // the nonzero side
        auto stable = find_clique_lex(gc, Bitset::full(g.vertex_count()), want);
        if (int(stable.size()) != want) return std::nullopt;
        KstWitness w;
        (t == 0 ? w.side_a : w.side_b) = stable;
        return w;
    }
    KstSearcher searcher{g, gc, s, t, {}, std::nullopt};
    searcher.rec(Bitset::full(g.vertex_count()), Bitset::full(g.vertex_count()));
    return searcher.found;
}

bool contains_induced_kst(const Graph& g, int s, int t) {
    return find_induced_kst(g, s, t).has_value();
}

// ---- maximal cliques -----------------------------------------------------

namespace {

std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        order.push_back(best);
        g.neighbors(best).for_each([&](int u) {
            if (!removed[u]) --deg[u];
        });
    }
    return order;
}

struct BronKerbosch {
    const Graph& g;
    std::vector<Clique>& out;
    std::vector<int> r;

    void run(Bitset p, Bitset x) {
        if (p.none() && x.none()) {
            Clique c;
            c.members = r;
            std::sort(c.members.begin(), c.members.end());
            out.push_back(std::move(c));
            return;
        }
        // pivot: max |P ∩ N(u)| over P ∪ X, ties to lowest index
        int pivot = -1, pivot_score = -1;
        auto consider = [&](int u) {
            int score = p.intersect_count(g.neighbors(u));
            if (score > pivot_score) {
                pivot_score = score;
                pivot = u;
            }
        };
        p.for_each(consider);
        x.for_each(consider);
        Bitset ext = p - g.neighbors(pivot);
        std::vector<int> vs = ext.to_vector();
        for (int v : vs) {
            r.push_back(v);
            run(p & g.neighbors(v), x & g.neighbors(v));
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    }
};

} // namespace

std::vector<Clique> maximal_cliques(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Clique> out;
    if (n == 0) return out;
    std::vector<int> order = degeneracy_order(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    BronKerbosch bk{g, out, {}};
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        Bitset p(n), x(n);
        g.neighbors(v).for_each([&](int u) {
            if (pos[u] > i)
                p.set(u);
            else
                x.set(u);
        });
        bk.r.assign(1, v);
        bk.run(p, x);
    }
    return out;
}

// ---- minimum edge clique cover -------------------------------------------

namespace {

struct EccSearch {
    int m = 0;
    std::vector<Bitset> clique_edges;       // per clique: bitset over edge ids
    std::vector<std::vector<int>> covers;   // per edge: covering clique ids
    std::vector<Bitset> co;                 // per edge: edges sharing a clique
    long long budget = 0;
    long long nodes = 0;
    bool aborted = false;

    int best_size = std::numeric_limits<int>::max();
    std::vector<int> best_choice;
    std::vector<int> choice;

    int lower_bound(const Bitset& covered) const {
        Bitset picked(m);
        int lb = 0;
        for (int e = 0; e < m; ++e) {
            if (covered.test(e)) continue;
            if (!co[e].intersects(picked)) {
                picked.set(e);
                ++lb;
            }
        }
        return lb;
    }

    void rec(Bitset covered, int chosen) {
        if (aborted) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        if (covered.count() == m) {
            if (chosen < best_size) {
                best_size = chosen;
                best_choice = choice;
            }
            return;
        }
        if (chosen + lower_bound(covered) >= best_size) return;
        // branch on the uncovered edge with fewest candidate cliques
        int pick = -1;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (int e = 0; e < m; ++e) {
            if (covered.test(e)) continue;
            if (covers[e].size() < fewest) {
                fewest = covers[e].size();
                pick = e;
            }
        }
        for (int c : covers[pick]) {
            choice.push_back(c);
            rec(covered | clique_edges[c], chosen + 1);
            choice.pop_back();
            if (aborted) return;
        }
    }
};

} // namespace

EccResult min_ecc_exact(const Graph& g, long long node_budget) {
    EccResult result;
    auto edge_list = g.edges();
    int m = int(edge_list.size());
    if (m == 0) {
        CliqueCover cover;
        cover.graph_hash = g.content_hash();
        result.cover = std::move(cover);
        return result;
    }

    std::vector<Clique> all = maximal_cliques(g);
    std::vector<Clique> mc;
    for (auto& c : all)
        if (c.size() >= 2) mc.push_back(std::move(c));

    // edge index lookup
    std::vector<std::vector<int>> edge_id(g.vertex_count(),
                                          std::vector<int>(g.vertex_count(), -1));
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edge_list[e];
        edge_id[u][v] = edge_id[v][u] = e;
    }

    EccSearch search;
    search.m = m;
    search.budget = node_budget;
    search.covers.assign(m, {});
    search.co.assign(m, Bitset(m));
    search.clique_edges.reserve(mc.size());
    for (int c = 0; c < int(mc.size()); ++c) {
        Bitset be(m);
        const auto& vs = mc[c].members;
        std::vector<int> ids;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                ids.push_back(edge_id[vs[i]][vs[j]]);
        for (int e : ids) {
            be.set(e);
            search.covers[e].push_back(c);
        }
        for (int e : ids)
            for (int f : ids)
                if (e != f) search.co[e].set(f);
        search.clique_edges.push_back(std::move(be));
    }

    // forced cliques: an edge with a single candidate pins that clique
    Bitset covered(m);
    std::vector<int> forced;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < m; ++e) {
            if (covered.test(e)) continue;
            if (search.covers[e].size() == 1) {
                int c = search.covers[e][0];
                forced.push_back(c);
                covered |= search.clique_edges[c];
                changed = true;
            }
        }
    }

    // greedy incumbent: most newly covered edges first, ties to lowest id
    {
        Bitset cov = covered;
        std::vector<int> picks = forced;
        while (cov.count() < m) {
            int best_c = -1, best_gain = 0;
            for (int c = 0; c < int(mc.size()); ++c) {
                int gain = search.clique_edges[c].count() -
                           search.clique_edges[c].intersect_count(cov);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            picks.push_back(best_c);
            cov |= search.clique_edges[best_c];
        }
        search.best_size = int(picks.size());
        search.best_choice = picks;
    }

    search.choice = forced;
    search.rec(covered, int(forced.size()));

    result.nodes_explored = search.nodes;
    if (search.aborted) {
        result.budget_exceeded = true;
        return result;
    }
    CliqueCover cover;
    cover.graph_hash = g.content_hash();
    for (int c : search.best_choice) cover.add(mc[c], "oracle");
    result.cover = std::move(cover);
    return result;
}

// ---- counting --------------------------------------------------------

namespace {

long long count_cliques_rec(const Graph& g, const Bitset& cand, int k) {
    if (k == 0) return 1;
    if (cand.count() < k) return 0;
    long long total = 0;
    std::vector<int> vs = cand.to_vector();
    for (int v : vs) {
        Bitset next = cand & g.neighbors(v);
        for (int u = 0; u <= v; ++u)
            if (next.test(u)) next.reset(u);
        total += count_cliques_rec(g, next, k - 1);
    }
    return total;
}

// k-cliques containing both u and v, counting only the adjacency among the
// other k-2 vertices (the u-v pair itself is not consulted).
long long count_cliques_through_pair(const Graph& g, int u, int v, int k) {
    Bitset cand = g.neighbors(u) & g.neighbors(v);
    cand.reset(u);
    cand.reset(v);
    return count_cliques_rec(g, cand, k - 2);
}

} // namespace

long long count_cliques_of_size(const Graph& g, int k) {
    if (k < 0) return 0;
    return count_cliques_rec(g, Bitset::full(g.vertex_count()), k);
}

long long count_stable_sets_of_size(const Graph& g, int k) {
    return count_cliques_of_size(g.complement(), k);
}

// ---- Ramsey witness search ---------------------------------------------

namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// p minimizing the expected number of violations in G(n,p)
double tuned_p(int n, int s, int k) {
    double best_p = 0.5, best_val = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 99; ++i) {
        double p = i / 100.0;
        double val = binom(n, k) * std::pow(p, k * (k - 1) / 2.0) +
                     binom(n, s) * std::pow(1.0 - p, s * (s - 1) / 2.0);
        if (val < best_val) {
            best_val = val;
            best_p = p;
        }
    }
    return best_p;
}

double unit_double(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

Graph seeded_gnp(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_double(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

struct ToggleState {
    int n;
    std::vector<std::vector<bool>> adj;

    explicit ToggleState(const Graph& g) : n(g.vertex_count()) {
        adj.assign(n, std::vector<bool>(n, false));
        for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
    }
    Graph to_graph() const {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[u][v]) edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }
};

} // namespace

std::optional<RamseyWitness> ramsey_search(int n, int s, int max_omega,
                                           std::uint64_t seed,
                                           long long max_iters) {
    if (n < 1) throw std::invalid_argument("ramsey_search: n must be >= 1");
    const int k = max_omega + 1;
    const int sideways_cap = 50;
    std::mt19937_64 rng(seed);
    double p = tuned_p(n, s, k);

    Graph g = seeded_gnp(n, p, rng);
    auto objective = [&](const Graph& h) {
        return count_stable_sets_of_size(h, s) + count_cliques_of_size(h, k);
    };
    long long obj = objective(g);
    long long iters = 0;
    int sideways = 0;

    while (obj > 0 && iters < max_iters) {
        // best single toggle, evaluated through pair-local counts
        long long best_obj = std::numeric_limits<long long>::max();
        int best_u = -1, best_v = -1;
        Graph gc = g.complement();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                long long cand;
                if (g.adjacent(u, v)) {
                    cand = obj - count_cliques_through_pair(g, u, v, k) +
                           count_cliques_through_pair(gc, u, v, s);
                } else {
                    cand = obj + count_cliques_through_pair(g, u, v, k) -
                           count_cliques_through_pair(gc, u, v, s);
                }
                if (cand < best_obj) {
                    best_obj = cand;
                    best_u = u;
                    best_v = v;
                }
            }
        ++iters;
        if (best_obj < obj || (best_obj == obj && sideways < sideways_cap)) {
            sideways = (best_obj == obj) ? sideways + 1 : 0;
            ToggleState st(g);
            st.adj[best_u][best_v] = st.adj[best_v][best_u] =
                !st.adj[best_u][best_v];
            g = st.to_graph();
            obj = best_obj;
        } else {
            g = seeded_gnp(n, p, rng);
            obj = objective(g);
            sideways = 0;
        }
    }

    if (obj != 0) return std::nullopt;

    auto stable = max_stable_exact(g);
    auto clique = max_clique_exact(g);
    if (int(stable.size()) >= s || int(clique.size()) > max_omega)
        throw std::logic_error("ramsey_search: certification failed");
    RamseyWitness w;
    w.graph = std::move(g);
    w.s = s;
    w.omega = int(clique.size());
    w.seed = seed;
    w.iterations_used = iters;
    return w;
}

} // namespace ecc
