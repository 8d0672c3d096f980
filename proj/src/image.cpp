#include "digitop/image.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "digitop/errors.hpp"

namespace digitop {

DigitalImage::DigitalImage(int n, const std::vector<std::pair<int, int>>& edge_list,
                           std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n <= 0)
        throw std::invalid_argument("digital image must have at least one vertex");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count does not match vertex count");

    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    adj_.assign(n, {});

    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (!seen.insert({u, v}).second)
            continue;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] |=
            std::uint64_t{1} << (v & 63);
        bits_[static_cast<std::size_t>(v) * words_ + (static_cast<unsigned>(u) >> 6)] |=
            std::uint64_t{1} << (u & 63);
        ++edge_count_;
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());
}

int DigitalImage::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex index out of range: " + std::to_string(v));
    return v;
}

std::vector<std::pair<int, int>> DigitalImage::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool DigitalImage::connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

std::string DigitalImage::display_label(int v) const {
    check_vertex(v);
    if (!labels_.empty())
        return labels_[v];
    return std::to_string(v);
}

DigitalImage interval_image(int a, int b) {
    if (a > b)
        throw std::invalid_argument("interval endpoints out of order");
    int n = b - a + 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(a + i));
        if (i + 1 < n)
            edges.emplace_back(i, i + 1);
    }
    return DigitalImage(n, edges, std::move(labels));
}

DigitalImage cycle_image(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle image requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        labels.push_back("c_" + std::to_string(i));
    }
    return DigitalImage(n, edges, std::move(labels));
}

DigitalImage complete_image(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return DigitalImage(n, edges);
}

DigitalImage product_image(const std::vector<DigitalImage>& factors, int u) {
    if (factors.empty())
        throw std::invalid_argument("product of zero factors");
    if (u < 1 || u > static_cast<int>(factors.size()))
        throw std::invalid_argument("normal product parameter u out of range");

    long long total = 1;
    for (const auto& f : factors) {
        total *= f.size();
        if (total > 1'000'000)
            throw std::invalid_argument("product image too large");
    }
    int n = static_cast<int>(total);
    int k = static_cast<int>(factors.size());

    auto decode = [&](int idx, std::vector<int>& tuple) {
        for (int i = k - 1; i >= 0; --i) {
            tuple[i] = idx % factors[i].size();
            idx /= factors[i].size();
        }
    };

    std::vector<std::pair<int, int>> edges;
    std::vector<int> ta(k), tb(k);
    for (int a = 0; a < n; ++a) {
        decode(a, ta);
        for (int b = a + 1; b < n; ++b) {
            decode(b, tb);
            int adj_positions = 0;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                if (ta[i] == tb[i])
                    continue;
                if (factors[i].adjacent(ta[i], tb[i]))
                    ++adj_positions;
                else
                    ok = false;
            }
            if (ok && adj_positions >= 1 && adj_positions <= u)
                edges.emplace_back(a, b);
        }
    }
    return DigitalImage(n, edges);
}

std::vector<int> closed_neighborhood(const DigitalImage& X, int x) {
    std::vector<int> out = X.neighbors(x);
    out.insert(std::lower_bound(out.begin(), out.end(), x), x);
    return out;
}

SubimageResult induced_subimage(const DigitalImage& X, const std::vector<int>& keep) {
    std::vector<int> verts = keep;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty())
        throw std::invalid_argument("induced subimage on empty vertex set");

    std::vector<int> old_to_new(X.size(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        if (verts[i] < 0 || verts[i] >= X.size())
            throw std::invalid_argument("subimage vertex out of range");
        old_to_new[verts[i]] = i;
    }

    std::vector<std::pair<int, int>> edges;
    for (int v : verts)
        for (int w : X.neighbors(v))
            if (v < w && old_to_new[w] >= 0)
                edges.emplace_back(old_to_new[v], old_to_new[w]);

    std::vector<std::string> labels;
    if (!X.labels().empty())
        for (int v : verts)
            labels.push_back(X.labels()[v]);

    return SubimageResult{DigitalImage(static_cast<int>(verts.size()), edges, std::move(labels)),
                          std::move(old_to_new), std::move(verts)};
}

DigitalImage relabel_image(const DigitalImage& X, const std::vector<int>& old_to_new) {
    if (static_cast<int>(old_to_new.size()) != X.size())
        throw std::invalid_argument("relabeling has wrong length");
    std::vector<char> used(X.size(), 0);
    for (int v : old_to_new) {
        if (v < 0 || v >= X.size() || used[v])
            throw std::invalid_argument("relabeling is not a permutation");
        used[v] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : X.edges())
        edges.emplace_back(old_to_new[u], old_to_new[v]);
    std::vector<std::string> labels;
    if (!X.labels().empty()) {
        labels.resize(X.size());
        for (int v = 0; v < X.size(); ++v)
            labels[old_to_new[v]] = X.labels()[v];
    }
    return DigitalImage(X.size(), edges, std::move(labels));
}

} // namespace digitop
