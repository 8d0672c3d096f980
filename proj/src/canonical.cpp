#include "digitop/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "digitop/graph6.hpp"

namespace digitop {

namespace detail {

namespace {

// Iterated (color, neighbor-color multiset) refinement. Color ids are
// ranks of the sorted signatures, so cell order is relabeling-invariant.
// Returns the number of colors. Fast path for n <= 16 packs neighbor
// color counts into one word; the generic path sorts signature vectors.
int refine_colors(int n, const std::uint64_t* rows, std::vector<int>& col) {
    int ncol = 1 + *std::max_element(col.begin(), col.end());
    if (n <= 16) {
        // signature = (current color, neighbor color counts packed 4 bits each)
        std::array<std::pair<std::pair<int, std::uint64_t>, int>, 16> sig;
        for (;;) {
            for (int v = 0; v < n; ++v) {
                std::uint64_t counts = 0;
                std::uint64_t m = rows[v];
                while (m) {
                    int u = std::countr_zero(m);
                    m &= m - 1;
                    counts += std::uint64_t{1} << (4 * col[u]);
                }
                sig[v] = {{col[v], counts}, v};
            }
            std::sort(sig.begin(), sig.begin() + n);
            int next = 0;
            std::vector<int> out(n);
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sig[i].first != sig[i - 1].first)
                    ++next;
                out[sig[i].second] = next;
            }
            col.swap(out);
            if (next + 1 == ncol)
                return ncol;
            ncol = next + 1;
        }
    }
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) {
            order[v] = v;
            sig[v].push_back(col[v]);
            std::uint64_t m = rows[v];
            while (m) {
                int u = std::countr_zero(m);
                m &= m - 1;
                sig[v].push_back(col[u]);
            }
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a] < sig[b]; });
        int next = 0;
        std::vector<int> out(n);
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]])
                ++next;
            out[order[i]] = next;
        }
        col.swap(out);
        if (next + 1 == ncol)
            return ncol;
        ncol = next + 1;
    }
}

struct CanonSearch {
    int n;
    const std::uint64_t* rows;
    bool have_best = false;
    std::vector<std::uint64_t> best_code;
    std::vector<int> best_new_to_old;

    bool twins(int u, int v) const {
        std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        return (rows[u] & mask) == (rows[v] & mask);
    }

    std::vector<std::uint64_t> encode(const std::vector<int>& new_to_old) const {
        long bits = static_cast<long>(n) * (n - 1) / 2;
        std::vector<std::uint64_t> code((bits + 63) / 64, 0);
        long t = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if ((rows[new_to_old[i]] >> new_to_old[j]) & 1)
                    code[t >> 6] |= std::uint64_t{1} << (63 - (t & 63));
        return code;
    }

    void leaf(const std::vector<int>& col) {
        std::vector<int> new_to_old(n);
        for (int v = 0; v < n; ++v)
            new_to_old[col[v]] = v;
        auto code = encode(new_to_old);
        if (!have_best || code < best_code) {
            have_best = true;
            best_code = std::move(code);
            best_new_to_old = std::move(new_to_old);
        }
    }

    void search(std::vector<int> col, int ncol) {
        if (ncol == n) {
            leaf(col);
            return;
        }
        // first non-singleton cell in canonical color order
        std::vector<int> members;
        for (int c = 0;; ++c) {
            members.clear();
            for (int v = 0; v < n; ++v)
                if (col[v] == c)
                    members.push_back(v);
            if (members.size() >= 2)
                break;
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            bool duplicate = false;
            for (std::size_t j = 0; j < i && !duplicate; ++j)
                duplicate = twins(members[j], members[i]);
            if (duplicate)
                continue;
            std::vector<int> next(col.size());
            for (int v = 0; v < n; ++v)
                next[v] = 2 * col[v] + (v == members[i] ? 0 : 1);
            int next_ncol = refine_colors(n, rows, next);
            search(std::move(next), next_ncol);
        }
    }
};

} // namespace

std::vector<int> canonical_labeling_rows(int n, const std::uint64_t* rows) {
    CanonSearch s;
    s.n = n;
    s.rows = rows;
    std::vector<int> col(n, 0);
    int ncol = refine_colors(n, rows, col);
    s.search(std::move(col), ncol);
    std::vector<int> old_to_new(n);
    for (int p = 0; p < n; ++p)
        old_to_new[s.best_new_to_old[p]] = p;
    return old_to_new;
}

std::uint64_t code_from_rows(int n, const std::uint64_t* rows, const std::vector<int>& perm) {
    std::vector<int> new_to_old(n);
    for (int v = 0; v < n; ++v)
        new_to_old[perm[v]] = v;
    std::uint64_t code = 0;
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if ((rows[new_to_old[i]] >> new_to_old[j]) & 1)
                code |= std::uint64_t{1} << (63 - t);
    return code;
}

std::uint64_t canonical_code_rows(int n, const std::uint64_t* rows) {
    if (n > 11)
        throw std::invalid_argument("packed canonical code limited to n <= 11");
    auto perm = canonical_labeling_rows(n, rows);
    return code_from_rows(n, rows, perm);
}

void rows_from_code(int n, std::uint64_t code, std::uint64_t* rows) {
    for (int v = 0; v < n; ++v)
        rows[v] = 0;
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if ((code >> (63 - t)) & 1) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
}

} // namespace detail

std::vector<int> canonical_labeling(const DigitalImage& X) {
    int n = X.size();
    if (n > 64)
        throw std::invalid_argument("canonical labeling limited to n <= 64");
    std::vector<std::uint64_t> rows(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : X.neighbors(v))
            rows[v] |= std::uint64_t{1} << w;
    return detail::canonical_labeling_rows(n, rows.data());
}

std::string canonical_form(const DigitalImage& X) {
    return write_graph6(relabel_image(X, canonical_labeling(X)));
}

bool is_isomorphic(const DigitalImage& X, const DigitalImage& Y) {
    if (X.size() != Y.size() || X.edge_count() != Y.edge_count())
        return false;
    return canonical_form(X) == canonical_form(Y);
}

} // namespace digitop
