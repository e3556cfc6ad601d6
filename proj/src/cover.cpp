#include "ecc/cover.hpp"

#include "ecc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace ecc {

namespace {

// k^q as unsigned 128-bit, saturating; `saturated` reports the clamp.
unsigned __int128 sat_pow_u128(long long k, int q, bool& saturated) {
    const unsigned __int128 cap = ~(unsigned __int128)0;
    unsigned __int128 acc = 1;
    saturated = false;
    if (k < 0) k = 0;
    for (int i = 0; i < q; ++i) {
        if (k != 0 && acc > cap / (unsigned __int128)k) {
            saturated = true;
            return cap;
        }
        acc *= (unsigned __int128)k;
    }
    return acc;
}

bool pow_at_least(long long k, int q, long long x) {
    if (x <= 1) return true;
    if (k <= 0) return false;
    bool sat = false;
    unsigned __int128 p = sat_pow_u128(k, q, sat);
    return sat || p >= (unsigned __int128)x;
}

// smallest k >= 0 with k^q >= x
long long ceil_root(long long x, int q) {
    if (x <= 0) return 0;
    if (x == 1) return 1;
    long long lo = 1, hi = x;
    while (lo < hi) {
        long long mid = lo + (hi - lo) / 2;
        if (pow_at_least(mid, q, x))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

std::string edge_label(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Shared coverage bookkeeping: covered edge set plus the uncovered graph as
// adjacency bitsets with degrees.
struct CoverState {
    const Graph& g;
    EdgeSet covered;
    std::vector<Bitset> h_adj;
    std::vector<int> h_deg;
    long long uncovered_edges;

    explicit CoverState(const Graph& graph)
        : g(graph), covered(graph.vertex_count()), uncovered_edges(graph.edge_count()) {
        int n = g.vertex_count();
        h_adj.reserve(n);
        for (int v = 0; v < n; ++v) h_adj.push_back(g.neighbors(v));
        h_deg.resize(n);
        for (int v = 0; v < n; ++v) h_deg[v] = h_adj[v].count();
    }

    long long mark_clique_covered(const Clique& c) {
        long long newly = 0;
        const auto& vs = c.members;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                int u = vs[i], v = vs[j];
                if (!covered.contains(u, v)) {
                    covered.insert(u, v);
                    h_adj[u].reset(v);
                    h_adj[v].reset(u);
                    --h_deg[u];
                    --h_deg[v];
                    --uncovered_edges;
                    ++newly;
                }
            }
        return newly;
    }

    Graph uncovered_graph() const {
        std::vector<Edge> es;
        es.reserve(std::size_t(uncovered_edges));
        for (int v = 0; v < g.vertex_count(); ++v)
            h_adj[v].for_each([&](int u) {
                if (u > v) es.emplace_back(v, u);
            });
        return Graph::from_edges(g.vertex_count(), es);
    }

    Edge first_uncovered() const {
        for (int v = 0; v < g.vertex_count(); ++v) {
            int u = h_adj[v].first();
            if (u >= 0) return {std::min(u, v), std::max(u, v)};
        }
        throw std::logic_error("no uncovered edge");
    }
};

} // namespace

CoverParams::CoverParams(int s_, int t_, Mode mode_) : s(s_), t(t_), mode(mode_) {
    if (s < 2 || t < 0)
        throw std::invalid_argument("CoverParams: need s >= 2 and t >= 0");
}

long long CoverParams::phase1_threshold(long long n) const {
    return ceil_root(n, s + t);
}

bool CoverParams::phase2_light(long long deg, long long n) const {
    if (deg <= 0) return true;
    int q = s + t;
    bool sat_l = false, sat_r = false;
    unsigned __int128 lhs = sat_pow_u128(deg, q, sat_l);
    unsigned __int128 rhs = sat_pow_u128(n, q - 1, sat_r);
    if (sat_l || sat_r) {
        long double ld = q * std::log((long double)deg);
        long double rd = (q - 1) * std::log((long double)n);
        return ld <= rd;
    }
    return lhs <= rhs;
}

// ---- quadratic baseline ---------------------------------------------------

CliqueCover quadratic_baseline_cover(const Graph& g) {
    int n = g.vertex_count();
    CliqueCover cover;
    cover.graph_hash = g.content_hash();
    Bitset alive = Bitset::full(n);
    std::vector<Bitset> adj;
    adj.reserve(n);
    for (int v = 0; v < n; ++v) adj.push_back(g.neighbors(v));

    auto degree_alive = [&](int v) { return adj[v].intersect_count(alive); };

    while (true) {
        int x = -1, y = -1;
        for (int v = 0; v < n && x < 0; ++v) {
            if (!alive.test(v) || degree_alive(v) == 0) continue;
            Bitset nb = adj[v] & alive;
            int u = nb.first();
            if (u >= 0) {
                x = std::min(v, u);
                y = std::max(v, u);
            }
        }
        if (x < 0) break; // edgeless

        std::string label = "baseline:xy=" + edge_label(x, y);
        Bitset nx = (adj[x] & alive), ny = (adj[y] & alive);
        nx.reset(y);
        ny.reset(x);
        Bitset common = nx & ny;
        Bitset only_x = nx - common;
        Bitset only_y = ny - common;
        bool any_common = common.any();
        common.for_each([&](int z) { cover.add(Clique{x, y, z}, label); });
        only_x.for_each([&](int z) { cover.add(Clique{x, z}, label); });
        only_y.for_each([&](int z) { cover.add(Clique{y, z}, label); });
        if (!any_common) cover.add(Clique{x, y}, label);
        alive.reset(x);
        alive.reset(y);
    }
    return cover;
}

// ---- heavy clique search ---------------------------------------------------

namespace {

// Exact maximization of h-edges covered by a clique of g, over vertices with
// positive h-degree (others cannot change the count). Depth-first in
// ascending vertex order with strict improvements, so the recorded clique is
// the lexicographically first among the maximizers; the incumbent starts at
// threshold-1, which prunes everything below the requested coverage.
struct HeavySearch {
    const Graph& g;
    const Graph& h;
    long long best;
    std::vector<int> current;
    long long current_cov = 0;
    std::vector<int> best_clique;

    void run(const Bitset& cand) {
        long long ub = current_cov + bound_mass(cand);
        if (ub <= best) return;
        std::vector<int> vs = cand.to_vector();
        for (int v : vs) {
            long long gain = 0;
            for (int u : current)
                if (h.adjacent(u, v)) ++gain;
            current.push_back(v);
            current_cov += gain;
            if (current_cov > best) {
                best = current_cov;
                best_clique = current;
            }
            Bitset next = cand & g.neighbors(v);
            for (int u = 0; u <= v; ++u)
                if (next.test(u)) next.reset(u);
            if (next.any()) run(next);
            current.pop_back();
            current_cov -= gain;
        }
    }

    // h-edges within cand plus h-edges between the current clique and cand
    long long bound_mass(const Bitset& cand) const {
        long long within2 = 0;
        std::vector<int> vs = cand.to_vector();
        for (int v : vs) within2 += h.neighbors(v).intersect_count(cand);
        long long between = 0;
        for (int u : current) between += h.neighbors(u).intersect_count(cand);
        return within2 / 2 + between;
    }
};

} // namespace

std::optional<Clique> find_heavy_clique(const Graph& h, const Graph& g,
                                        long long threshold, Mode mode) {
    if (threshold < 1)
        throw std::invalid_argument("find_heavy_clique: threshold must be >= 1");
    if (h.vertex_count() != g.vertex_count())
        throw std::invalid_argument("find_heavy_clique: vertex sets differ");
    int n = g.vertex_count();

    if (mode == Mode::Paper) {
        Bitset cand(n);
        for (int v = 0; v < n; ++v)
            if (h.degree(v) > 0) cand.set(v);
        HeavySearch search{g, h, threshold - 1, {}, 0, {}};
        search.run(cand);
        if (search.best_clique.empty()) return std::nullopt;
        return Clique(search.best_clique);
    }

    // practical: greedy growth by best marginal gain from each h-edge seed
    for (auto [a, b] : h.edges()) {
        std::vector<int> k{a, b};
        long long cov = 1;
        Bitset cand = g.neighbors(a) & g.neighbors(b);
        while (cand.any()) {
            int best_v = -1;
            long long best_gain = 0;
            cand.for_each([&](int w) {
                long long gain = 0;
                for (int u : k)
                    if (h.adjacent(u, w)) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_v = w;
                }
            });
            if (best_v < 0) break;
            k.push_back(best_v);
            cov += best_gain;
            cand &= g.neighbors(best_v);
        }
        if (cov >= threshold) return Clique(k);
    }
    return std::nullopt;
}

// ---- greedy threshold cover -------------------------------------------------

CoverRun greedy_threshold_cover(const Graph& g, const CoverParams& p) {
    CoverRun run;
    run.cover.graph_hash = g.content_hash();
    run.trace.phase1_stalls_certified = (p.mode == Mode::Paper);
    long long n = g.vertex_count();
    long long t1 = std::max<long long>(1, p.phase1_threshold(n));

    CoverState state(g);
    while (state.uncovered_edges > 0) {
        bool progress = false;

        // phase 1: cliques covering at least ceil(n^d) new edges
        while (state.uncovered_edges > 0) {
            Graph h = state.uncovered_graph();
            auto c = find_heavy_clique(h, g, t1, p.mode);
            if (!c) break;
            long long newly = state.mark_clique_covered(*c);
            run.cover.add(*c, "phase1");
            run.trace.steps.push_back({"phase1", *c, newly, std::nullopt, std::nullopt});
            progress = true;
        }

        // phase 2: light vertices finished off with single edges
        bool found_light = true;
        while (found_light) {
            found_light = false;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (state.h_deg[v] < 1) continue;
                if (!p.phase2_light(state.h_deg[v], n)) continue;
                found_light = true;
                progress = true;
                std::vector<int> nbrs = state.h_adj[v].to_vector();
                for (int u : nbrs) {
                    Clique k2{v, u};
                    long long newly = state.mark_clique_covered(k2);
                    run.cover.add(k2, "phase2:v=" + std::to_string(v));
                    run.trace.steps.push_back({"phase2", k2, newly, v, std::nullopt});
                }
                break; // rescan from the lowest index
            }
        }

        if (state.uncovered_edges == 0) break;
        if (!progress) {
            // neither phase can act below the asymptotic regime
            auto [u, v] = state.first_uncovered();
            Clique k2{u, v};
            long long newly = state.mark_clique_covered(k2);
            run.cover.add(k2, "fallback");
            run.trace.steps.push_back({"fallback", k2, newly, std::nullopt, std::nullopt});
        }
    }
    return run;
}

// ---- min-degree peeling -----------------------------------------------------

namespace {

// largest i >= 0 with 4^i * np <= m2; the dyadic |M| range index
int dyadic_range_index(long long m2, long long np) {
    int i = 0;
    unsigned __int128 bound = (unsigned __int128)np * 4;
    while (bound <= (unsigned __int128)m2) {
        ++i;
        bound *= 4;
    }
    return i;
}

} // namespace

CoverRun mindeg_peeling_cover(const Graph& g, PeelVariant variant,
                              const CoverParams& p) {
    CoverRun run;
    run.cover.graph_hash = g.content_hash();
    const double rf = p.effective_remainder_factor();
    const char* tag = variant == PeelVariant::K22 ? "peel22" : "peel23";

    CoverState state(g);
    while (state.uncovered_edges > 0) {
        long long np = 0;
        int v = -1;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (state.h_deg[u] > 0) {
                ++np;
                if (v < 0 || state.h_deg[u] < state.h_deg[v]) v = u;
            }
        Bitset m = state.h_adj[v];
        std::string label = std::string(tag) + ":v=" + std::to_string(v);

        // extract maximum cliques of g among the uncovered part of D
        while ((double)m.count() * (double)m.count() > rf * rf * (double)np) {
            std::vector<int> part = max_clique_within(g, m);
            if (part.empty()) break;
            int range = dyadic_range_index((long long)m.count() * m.count(), np);
            Clique c(part);
            for (int u : part) m.reset(u);
            c.members.push_back(v);
            std::sort(c.members.begin(), c.members.end());
            long long newly = state.mark_clique_covered(c);
            run.cover.add(c, label);
            run.trace.steps.push_back({"peel-clique", c, newly, v, range});
        }
        // remaining vertices of D as singletons
        std::vector<int> rest = m.to_vector();
        for (int u : rest) {
            int range = dyadic_range_index((long long)m.count() * m.count(), np);
            Clique c{v, u};
            m.reset(u);
            long long newly = state.mark_clique_covered(c);
            run.cover.add(c, label);
            run.trace.steps.push_back({"peel-singleton", c, newly, v, range});
        }
    }
    return run;
}

// ---- clique partition --------------------------------------------------------

CliquePartition clique_partition(const Graph& g, int s, const CoverParams& p) {
    if (s < 3) throw std::invalid_argument("clique_partition: need s >= 3");
    CliquePartition out;
    Bitset w = Bitset::full(g.vertex_count());
    const double factor = p.effective_partition_factor();

    while (w.any()) {
        long long wc = w.count();
        if (wc == 1) {
            out.parts.push_back(Clique{w.first()});
            break;
        }
        double tau = factor * std::pow(double(wc), 1.0 / (s - 1)) *
                     std::pow(std::log2(double(wc)), double(s - 2) / (s - 1));
        int extracted = 0;
        while (w.any()) {
            std::vector<int> c = max_clique_within(g, w);
            if (double(c.size()) < tau) break;
            for (int u : c) w.reset(u);
            out.parts.push_back(Clique(c));
            ++extracted;
        }
        if (!w.any()) break;
        if (extracted == 0) {
            // below-threshold level: peel one maximum clique so the vertex
            // set strictly shrinks before the threshold is recomputed
            std::vector<int> c = max_clique_within(g, w);
            for (int u : c) w.reset(u);
            out.parts.push_back(Clique(c));
        }
    }
    return out;
}

// ---- partition product cover ---------------------------------------------------

CliqueCover partition_product_cover(const Graph& g, const CliquePartition& parts,
                                    bool dedupe) {
    int n = g.vertex_count();
    Bitset seen(n);
    for (const Clique& a : parts.parts) {
        if (!is_clique(g, a))
            throw std::invalid_argument("partition_product_cover: part is not a clique");
        for (int v : a.members) {
            if (v < 0 || v >= n || seen.test(v))
                throw std::invalid_argument(
                    "partition_product_cover: parts must be disjoint and in range");
            seen.set(v);
        }
    }
    if (seen.count() != n)
        throw std::invalid_argument("partition_product_cover: parts must cover all vertices");

    CliqueCover cover;
    cover.graph_hash = g.content_hash();
    std::set<std::vector<int>> emitted;
    EdgeSet covered(n);
    for (int v = 0; v < n; ++v) {
        for (std::size_t ai = 0; ai < parts.parts.size(); ++ai) {
            const Clique& a = parts.parts[ai];
            // A_v = {v} plus v's neighbors in A; when v is in A this is A itself
            std::vector<int> av{v};
            for (int u : a.members)
                if (u != v && g.adjacent(u, v)) av.push_back(u);
            std::sort(av.begin(), av.end());
            if (int(av.size()) < 2) continue;
            if (dedupe) {
                if (emitted.count(av)) continue;
                long long newly = 0;
                for (std::size_t i = 0; i < av.size(); ++i)
                    for (std::size_t j = i + 1; j < av.size(); ++j)
                        if (!covered.contains(av[i], av[j])) ++newly;
                if (newly == 0) continue;
                emitted.insert(av);
                for (std::size_t i = 0; i < av.size(); ++i)
                    for (std::size_t j = i + 1; j < av.size(); ++j)
                        covered.insert(av[i], av[j]);
            }
            cover.add(Clique(av), "product:v=" + std::to_string(v) +
                                      ",part=" + std::to_string(ai));
        }
    }
    return cover;
}

// ---- closed-form bounds ----------------------------------------------------------

BoundValue bound_value(BoundKind kind, long long n, int s, int t, double constant) {
    auto need = [&](bool cond, const char* what) {
        if (!cond) throw std::invalid_argument(std::string("bound_value: ") + what);
    };
    BoundValue b;
    switch (kind) {
    case BoundKind::Quadratic:
        need(n >= 0, "n must be >= 0");
        b.value = double((n * n) / 4);
        return b;
    case BoundKind::MainST:
        need(s >= 3 && t >= 2, "main_st needs s >= 3, t >= 2");
        need(n >= 0, "n must be >= 0");
        b.value = 1.5 * std::pow(double(n), 2.0 - 1.0 / (s + t));
        return b;
    case BoundKind::Ks1:
        need(s >= 3, "ks1 needs s >= 3");
        need(n >= 2, "n must be >= 2 where a log appears");
        b.value = constant * std::pow(double(n), 2.0 - 1.0 / (s - 1)) /
                  std::pow(std::log2(double(n)), double(s - 2) / (s - 1));
        b.shape_only = true;
        return b;
    case BoundKind::K22:
        need(n >= 0, "n must be >= 0");
        b.value = constant * std::pow(double(n), 1.5);
        b.shape_only = true;
        return b;
    case BoundKind::K23:
        need(n >= 2, "n must be >= 2 where a log appears");
        b.value = constant * std::pow(double(n), 1.5) *
                  std::sqrt(std::log2(double(n)));
        b.shape_only = true;
        return b;
    case BoundKind::LowerStable:
        need(s >= 3, "lower_stable needs s >= 3");
        need(n >= 2, "n must be >= 2 where a log appears");
        b.value = constant * std::pow(double(n), 2.0 - 4.0 / (s + 1)) /
                  std::pow(std::log2(double(n)), 2.0);
        b.shape_only = true;
        return b;
    }
    throw std::invalid_argument("bound_value: unknown kind");
}

// ---- trace verification -------------------------------------------------------------

TraceCheckResult check_threshold_trace(const Graph& g, const CoverParams& p,
                                       const CoverTrace& trace,
                                       bool posthoc_exact) {
    TraceCheckResult res;
    long long n = g.vertex_count();
    long long t1 = std::max<long long>(1, p.phase1_threshold(n));
    CoverState state(g);

    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& st = trace.steps[i];
        if (st.phase == "phase2") {
            if (!st.trigger) {
                res.fail("step " + std::to_string(i) + ": phase2 without trigger");
            } else {
                bool selection = i == 0 || trace.steps[i - 1].phase != "phase2" ||
                                 trace.steps[i - 1].trigger != st.trigger;
                if (selection) {
                    long long deg = state.h_deg[*st.trigger];
                    if (deg < 1 || !p.phase2_light(deg, n))
                        res.fail("step " + std::to_string(i) +
                                 ": phase2 trigger not light (deg=" + std::to_string(deg) + ")");
                }
                if (posthoc_exact) {
                    Graph h = state.uncovered_graph();
                    if (find_heavy_clique(h, g, t1, Mode::Paper))
                        res.fail("step " + std::to_string(i) +
                                 ": a heavy clique existed at a phase-2 step");
                }
            }
        }
        long long newly = state.mark_clique_covered(st.clique);
        if (newly != st.new_edges)
            res.fail("step " + std::to_string(i) + ": recorded " +
                     std::to_string(st.new_edges) + " new edges, replay found " +
                     std::to_string(newly));
        if (st.phase == "phase1" && newly < t1)
            res.fail("step " + std::to_string(i) + ": phase1 covered " +
                     std::to_string(newly) + " < threshold " + std::to_string(t1));
    }
    return res;
}

TraceCheckResult check_peeling_trace(const Graph& g, const CoverTrace& trace) {
    TraceCheckResult res;
    CoverState state(g);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& st = trace.steps[i];
        if (!st.trigger) {
            res.fail("step " + std::to_string(i) + ": peel step without trigger");
            continue;
        }
        bool selection = i == 0 || trace.steps[i - 1].trigger != st.trigger;
        if (selection) {
            int min_deg = std::numeric_limits<int>::max();
            for (int u = 0; u < g.vertex_count(); ++u)
                if (state.h_deg[u] > 0) min_deg = std::min(min_deg, state.h_deg[u]);
            int trig_deg = state.h_deg[*st.trigger];
            if (trig_deg <= 0 || trig_deg != min_deg)
                res.fail("step " + std::to_string(i) + ": trigger degree " +
                         std::to_string(trig_deg) + " is not the minimum positive " +
                         std::to_string(min_deg));
        }
        long long newly = state.mark_clique_covered(st.clique);
        if (newly != st.new_edges)
            res.fail("step " + std::to_string(i) + ": recorded " +
                     std::to_string(st.new_edges) + " new edges, replay found " +
                     std::to_string(newly));
    }
    if (state.uncovered_edges != 0) res.fail("replay left uncovered edges");
    return res;
}

} // namespace ecc
