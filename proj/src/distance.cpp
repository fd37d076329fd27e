#include "surfdeform/distance.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "surfdeform/common.hpp"

namespace surfdeform {

std::vector<PauliString> recovered_supers(const CodePatch& patch, CheckType type) {
    std::vector<PauliString> same, other;
    for (const auto& g : patch.gauge_set) {
        if (g.is_identity()) continue;
        if (g.pure_x()) (type == CheckType::X ? same : other).push_back(g);
        if (g.pure_z()) (type == CheckType::Z ? same : other).push_back(g);
    }
    if (same.empty()) return {};

    // Union-find over same-type gauges: two belong to one cluster when a
    // common opposite-type gauge anticommutes with both.
    std::vector<std::size_t> parent(same.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& o : other) {
        std::size_t first = same.size();
        for (std::size_t i = 0; i < same.size(); ++i) {
            if (same[i].commutes_with(o)) continue;
            if (first == same.size()) first = i;
            else parent[find(i)] = find(first);
        }
    }

    std::vector<PauliString> products;
    for (std::size_t root = 0; root < same.size(); ++root) {
        if (find(root) != root) continue;
        PauliString prod = PauliString::identity(patch.n());
        for (std::size_t i = 0; i < same.size(); ++i)
            if (find(i) == root) prod = prod * same[i];
        if (prod.is_identity()) continue;
        // Keep only determined products: they must commute with every
        // measured gauge, otherwise the cluster is pure gauge noise.
        bool determined = true;
        for (const auto& g : patch.gauge_set)
            if (!prod.commutes_with(g)) { determined = false; break; }
        if (determined) products.push_back(prod);
    }
    std::sort(products.begin(), products.end());
    return products;
}

MatchingGraph matching_graph(const CodePatch& patch, CheckType error_type, bool bare) {
    MatchingGraph g;
    g.error_type = error_type;
    CheckType det_type = opposite(error_type);

    for (const auto& s : patch.stab_set) {
        if (s.is_identity()) continue;
        if ((det_type == CheckType::Z && s.pure_z()) || (det_type == CheckType::X && s.pure_x()))
            g.detectors.push_back(s);
    }
    if (bare) {
        for (const auto& s : patch.gauge_set)
            if ((det_type == CheckType::Z && s.pure_z()) ||
                (det_type == CheckType::X && s.pure_x()))
                g.detectors.push_back(s);
    } else {
        for (auto& s : recovered_supers(patch, det_type)) g.detectors.push_back(std::move(s));
    }
    std::sort(g.detectors.begin(), g.detectors.end());
    g.detectors.erase(std::unique(g.detectors.begin(), g.detectors.end()), g.detectors.end());

    g.virt_a = g.detectors.size();
    g.virt_b = g.detectors.size() + 1;
    g.adj.assign(g.vertex_count(), {});

    BoundarySide sa = error_type == CheckType::X ? BoundarySide::XL1 : BoundarySide::ZL1;
    BoundarySide sb = error_type == CheckType::X ? BoundarySide::XL2 : BoundarySide::ZL2;

    auto add_edge = [&](std::size_t u, std::size_t v, std::size_t qubit) {
        std::size_t e = g.edges.size();
        g.edges.push_back({u, v, qubit});
        g.adj[u].push_back({v, e});
        g.adj[v].push_back({u, e});
    };

    for (std::size_t i = 0; i < patch.n(); ++i) {
        Coord c = patch.qubit_coords[i];
        if (patch.is_disabled(c)) continue;
        std::vector<std::size_t> members;
        for (std::size_t d = 0; d < g.detectors.size(); ++d) {
            bool hit = det_type == CheckType::Z ? g.detectors[d].z(i) : g.detectors[d].x(i);
            if (hit) members.push_back(d);
        }
        bool on_a = patch.on_boundary(c, sa);
        bool on_b = patch.on_boundary(c, sb);
        if (members.size() >= 2) {
            add_edge(members[0], members[1], i);
            if (members.size() > 2)
                throw internal_error("matching graph: qubit " + c.str() +
                                     " belongs to more than two detector groups");
        } else if (members.size() == 1) {
            if (on_a) add_edge(members[0], g.virt_a, i);
            if (on_b) add_edge(members[0], g.virt_b, i);
            if (!on_a && !on_b) {
                // Detached termination point: attach to the nearer side.
                int da = 1 << 30, db = 1 << 30;
                for (Coord q : patch.boundary(sa).qubits) da = std::min(da, manhattan(q, c));
                for (Coord q : patch.boundary(sb).qubits) db = std::min(db, manhattan(q, c));
                add_edge(members[0], da <= db ? g.virt_a : g.virt_b, i);
            }
        } else {
            // Undetectable error mechanism; only relevant when it acts on the
            // logical, in which case the code is broken (distance 1 path).
            const PauliString& logical =
                error_type == CheckType::X ? patch.logical_z : patch.logical_x;
            bool flips = error_type == CheckType::X ? logical.z(i) : logical.x(i);
            if (flips) add_edge(g.virt_a, g.virt_b, i);
        }
    }
    return g;
}

int graph_distance(const MatchingGraph& g) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<std::size_t> q;
    dist[g.virt_a] = 0;
    q.push_back(g.virt_a);
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop_front();
        if (u == g.virt_b) return dist[u];
        for (auto [v, e] : g.adj[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
        }
    }
    return 0;
}

Distances distance(const CodePatch& patch, bool bare) {
    Distances d;
    d.dx = graph_distance(matching_graph(patch, CheckType::X, bare));
    d.dz = graph_distance(matching_graph(patch, CheckType::Z, bare));
    return d;
}

namespace {

int brute_one_type(const CodePatch& patch, CheckType error_type, int w_max) {
    // Active qubit list and, per qubit, the parity mask over detectors
    // (opposite-type generators) plus the logical-overlap bit.
    std::vector<std::size_t> act;
    for (std::size_t i = 0; i < patch.n(); ++i)
        if (!patch.is_disabled(patch.qubit_coords[i])) act.push_back(i);

    std::vector<const PauliString*> dets;
    for (const auto& s : patch.gen_stabs) {
        bool relevant = error_type == CheckType::X ? s.z_bits().any() : s.x_bits().any();
        if (relevant) dets.push_back(&s);
    }
    const PauliString& logical = error_type == CheckType::X ? patch.logical_z : patch.logical_x;

    std::size_t words = (dets.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> mask(act.size(),
                                                 std::vector<std::uint64_t>(words, 0));
    std::vector<std::uint8_t> lbit(act.size(), 0);
    for (std::size_t k = 0; k < act.size(); ++k) {
        std::size_t i = act[k];
        for (std::size_t d = 0; d < dets.size(); ++d) {
            bool hit = error_type == CheckType::X ? dets[d]->z(i) : dets[d]->x(i);
            if (hit) mask[k][d >> 6] ^= std::uint64_t(1) << (d & 63);
        }
        lbit[k] = error_type == CheckType::X ? logical.z(i) : logical.x(i);
    }

    std::vector<std::uint64_t> acc(words, 0);
    std::vector<std::size_t> pick;
    int found = 0;

    auto zero_acc = [&]() {
        for (auto w : acc)
            if (w) return false;
        return true;
    };
    auto toggle = [&](std::size_t k) {
        for (std::size_t w = 0; w < words; ++w) acc[w] ^= mask[k][w];
    };

    // Depth-first enumeration of supports of exactly `w` qubits.
    std::function<bool(std::size_t, int, int)> rec = [&](std::size_t start, int left,
                                                         int lpar) -> bool {
        if (left == 0) return zero_acc() && (lpar & 1);
        for (std::size_t k = start; k + left <= act.size(); ++k) {
            toggle(k);
            if (rec(k + 1, left - 1, lpar + lbit[k])) { toggle(k); return true; }
            toggle(k);
        }
        return false;
    };

    for (int w = 1; w <= w_max; ++w) {
        if (rec(0, w, 0)) { found = w; break; }
    }
    (void)pick;
    return found;
}

}  // namespace

BruteDistances brute_force_distance(const CodePatch& patch, int w_max) {
    BruteDistances b;
    b.dx = brute_one_type(patch, CheckType::X, w_max);
    b.dz = brute_one_type(patch, CheckType::Z, w_max);
    b.exceeded_x = b.dx == 0;
    b.exceeded_z = b.dz == 0;
    return b;
}

}  // namespace surfdeform
