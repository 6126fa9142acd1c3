#include "indcx/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "indcx/errors.hpp"

namespace indcx {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t BettiProfile::at(int dim) const {
    std::size_t i = static_cast<std::size_t>(dim + 1);
    return (dim >= -1 && i < values.size()) ? values[i] : 0;
}

std::int64_t BettiProfile::euler() const {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < values.size(); ++i) e += (i % 2 == 0) ? -values[i] : values[i];
    return e;
}

std::string BettiProfile::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += std::to_string(static_cast<int>(i) - 1) + ":" + std::to_string(values[i]);
    }
    return out.empty() ? "zero" : out;
}

BettiProfile BettiProfile::shifted(int k) const {
    BettiProfile out{prime, {}};
    out.values.assign(static_cast<std::size_t>(k), 0);
    out.values.insert(out.values.end(), values.begin(), values.end());
    out.trim();
    return out;
}

bool BettiProfile::same_values(const BettiProfile& o) const {
    BettiProfile a = *this, b = o;
    a.trim();
    b.trim();
    return a.values == b.values;
}

void BettiProfile::trim() {
    while (!values.empty() && values.back() == 0) values.pop_back();
}

namespace {

using Coef = std::uint64_t;

Coef pow_mod(Coef b, Coef e, Coef p) {
    Coef r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// col += factor * other, both sorted by row, zeros dropped.
void axpy(SparseColumn& col, Coef factor, const SparseColumn& other, Coef p) {
    SparseColumn out;
    out.reserve(col.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
            out.push_back(col[i++]);
        } else if (i == col.size() || other[j].first < col[i].first) {
            out.push_back({other[j].first, static_cast<std::uint32_t>(factor * other[j].second % p)});
            ++j;
        } else {
            Coef v = (col[i].second + factor * other[j].second) % p;
            if (v) out.push_back({col[i].first, static_cast<std::uint32_t>(v)});
            ++i;
            ++j;
        }
    }
    col.swap(out);
}

}  // namespace

std::size_t rank_mod_p(std::vector<SparseColumn> columns, int p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    const Coef q = static_cast<Coef>(p);
    std::uint32_t rows = 0;
    for (auto& col : columns) {
        std::sort(col.begin(), col.end());
        SparseColumn clean;
        for (const auto& [r, v] : col) {
            Coef c = v % q;
            if (!clean.empty() && clean.back().first == r)
                clean.back().second = static_cast<std::uint32_t>((clean.back().second + c) % q);
            else
                clean.push_back({r, static_cast<std::uint32_t>(c)});
        }
        std::erase_if(clean, [](const auto& e) { return e.second == 0; });
        col.swap(clean);
        if (!col.empty()) rows = std::max(rows, col.back().first + 1);
    }
    // Column reduction on the lowest nonzero row; owner[r] is the column whose pivot is r.
    std::vector<std::size_t> owner(rows, columns.size());
    std::size_t rank = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        SparseColumn& col = columns[j];
        while (!col.empty()) {
            std::uint32_t low = col.back().first;
            std::size_t k = owner[low];
            if (k == columns.size()) {
                owner[low] = j;
                ++rank;
                break;
            }
            const SparseColumn& other = columns[k];
            Coef factor = (q - col.back().second % q) * pow_mod(other.back().second, q - 2, q) % q;
            axpy(col, factor, other, q);
        }
    }
    return rank;
}

BettiProfile reduced_betti(const SimplicialComplex& k, int p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    const int top = k.dimension() + 1;  // largest face size
    std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(top + 1));
    for (const auto& f : k.faces()) by_size[static_cast<std::size_t>(f.count())].push_back(f);
    std::vector<std::unordered_map<VertexSet, std::uint32_t, VertexSetHash>> index(by_size.size());
    for (std::size_t s = 0; s < by_size.size(); ++s) {
        std::sort(by_size[s].begin(), by_size[s].end());
        for (std::size_t i = 0; i < by_size[s].size(); ++i) index[s].emplace(by_size[s][i], static_cast<std::uint32_t>(i));
    }
    // rank[s] = rank of the boundary from size-s faces to size-(s-1) faces.
    std::vector<std::size_t> rank(by_size.size() + 1, 0);
    const std::uint32_t minus_one = static_cast<std::uint32_t>(p - 1);
    for (std::size_t s = 1; s < by_size.size(); ++s) {
        std::vector<SparseColumn> cols;
        cols.reserve(by_size[s].size());
        for (const auto& f : by_size[s]) {
            SparseColumn col;
            int i = 0;
            f.for_each([&](std::size_t v) {
                VertexSet g = f;
                g.reset(v);
                col.push_back({index[s - 1].at(g), (i % 2 == 0) ? 1u : minus_one});
                ++i;
            });
            cols.push_back(std::move(col));
        }
        rank[s] = rank_mod_p(std::move(cols), p);
    }
    BettiProfile out{p, {}};
    for (std::size_t s = 0; s < by_size.size(); ++s)
        out.values.push_back(static_cast<std::int64_t>(by_size[s].size() - rank[s] - rank[s + 1]));
    out.trim();
    return out;
}

BettiProfile betti_of_shape(const WedgeShape& s, int p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    BettiProfile out{p, {}};
    if (s.is_point()) return out;
    out.values.assign(static_cast<std::size_t>(s.dim() + 2), 0);
    out.values.back() = s.copies();
    return out;
}

std::string to_string(BettiRoute r) {
    return r == BettiRoute::explicit_complex ? "explicit" : "morse";
}

std::optional<GraphBetti> graph_betti(const Graph& g, int p, std::size_t face_budget, std::size_t morse_budget) {
    try {
        return GraphBetti{reduced_betti(independence_complex(g, face_budget), p), BettiRoute::explicit_complex};
    } catch (const BudgetExceeded&) {
    }
    try {
        return GraphBetti{morse_betti(g, p, morse_budget).profile, BettiRoute::morse_matching};
    } catch (const BudgetExceeded&) {
    }
    return std::nullopt;
}

}  // namespace indcx
