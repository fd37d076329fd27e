#include "surfdeform/gf2.hpp"

#include <algorithm>

#include "surfdeform/common.hpp"

namespace surfdeform {

std::size_t PauliSpan::pivot_of(const PauliString& p) {
    std::size_t px = p.x_bits().lowest_set();
    std::size_t pz = p.z_bits().lowest_set();
    std::size_t n = p.size();
    // Symplectic layout: x block first, z block second.
    if (px < n) return px;
    if (pz < n) return n + pz;
    return 2 * n;
}

PauliString PauliSpan::reduce(PauliString p) const {
    if (p.size() != n_) throw dimension_error("span/operator length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t piv = pivots_[i];
        bool hit = piv < n_ ? p.x(piv) : p.z(piv - n_);
        if (hit) p = p * rows_[i];
    }
    return p;
}

bool PauliSpan::add(const PauliString& p) {
    PauliString r = reduce(p);
    if (r.is_identity()) return false;
    std::size_t piv = pivot_of(r);
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t idx = std::size_t(it - pivots_.begin());
    pivots_.insert(it, piv);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
}

void PauliSpan::canonicalize() {
    for (std::size_t i = rows_.size(); i-- > 0;) {
        for (std::size_t j = 0; j < i; ++j) {
            std::size_t piv = pivots_[i];
            bool hit = piv < n_ ? rows_[j].x(piv) : rows_[j].z(piv - n_);
            if (hit) rows_[j] = rows_[j] * rows_[i];
        }
    }
}

std::size_t gf2_rank(const std::vector<PauliString>& ops, std::size_t n) {
    PauliSpan s(n);
    for (const auto& p : ops) s.add(p);
    return s.rank();
}

bool spans_equal(const std::vector<PauliString>& a, const std::vector<PauliString>& b,
                 std::size_t n) {
    PauliSpan sa(n), sb(n);
    for (const auto& p : a) sa.add(p);
    for (const auto& p : b) sb.add(p);
    if (sa.rank() != sb.rank()) return false;
    for (const auto& p : b)
        if (!sa.contains(p)) return false;
    return true;
}

std::vector<PauliString> group_center(const std::vector<PauliString>& ops, std::size_t n) {
    PauliSpan basis(n);
    for (const auto& p : ops) basis.add(p);
    const auto& rows = basis.rows();
    std::size_t k = rows.size();

    // Gram matrix of the symplectic form over the basis; nullspace combos are
    // exactly the central elements.
    std::vector<BitVec> gram(k, BitVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (!rows[i].commutes_with(rows[j])) {
                gram[i].set(j);
                gram[j].set(i);
            }

    // Nullspace by column elimination with combination tracking.
    std::vector<BitVec> combo(k, BitVec(k));
    for (std::size_t i = 0; i < k; ++i) combo[i].set(i);
    std::vector<bool> used(k, false);
    std::vector<PauliString> center;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t piv = gram[i].lowest_set();
        if (piv == k) {
            // Central combination.
            PauliString p = PauliString::identity(n);
            for (std::size_t j = 0; j < k; ++j)
                if (combo[i].get(j)) p = p * rows[j];
            center.push_back(p);
            continue;
        }
        for (std::size_t j = i + 1; j < k; ++j) {
            if (gram[j].get(piv)) {
                gram[j].xor_with(gram[i]);
                combo[j].xor_with(combo[i]);
            }
        }
    }

    PauliSpan canon(n);
    for (const auto& p : center) canon.add(p);
    canon.canonicalize();
    return canon.rows();
}

std::vector<std::pair<PauliString, PauliString>> symplectic_pairs(
    std::vector<PauliString> pool) {
    std::vector<std::pair<PauliString, PauliString>> pairs;
    while (!pool.empty()) {
        PauliString u = pool.front();
        pool.erase(pool.begin());
        std::size_t vi = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (!u.commutes_with(pool[i])) { vi = i; break; }
        }
        if (vi == pool.size()) continue;  // central residue, drop
        PauliString v = pool[vi];
        pool.erase(pool.begin() + vi);
        for (auto& w : pool) {
            if (!w.commutes_with(v)) w = w * u;
            if (!w.commutes_with(u)) w = w * v;
        }
        pairs.emplace_back(std::move(u), std::move(v));
    }
    return pairs;
}

}  // namespace surfdeform
