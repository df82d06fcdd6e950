#pragma once

#include <array>
#include <cassert>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "polysimp/faces.hpp"
#include "polysimp/polygon.hpp"

namespace polysimp {

// Sweep order: events from top to bottom, ties left to right.
inline bool sweep_below(const Point& a, const Point& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.x > b.x;
}

struct Triangulation {
    std::vector<std::array<std::size_t, 3>> tris;       // ccw vertex triples
    std::vector<std::array<int, 3>> adj;                // neighbor across edge k=(t[k],t[k+1]), -1 none
    std::vector<std::pair<std::size_t, std::size_t>> diagonals;

    // any triangle whose closed interior contains q; smallest index wins
    int locate(const Polygon& p, const Point& q) const {
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const auto& tr = tris[t];
            bool in = true;
            for (int k = 0; k < 3 && in; ++k)
                if (orient(p.v[tr[k]], p.v[tr[(k + 1) % 3]], q) < 0) in = false;
            if (in) return static_cast<int>(t);
        }
        return -1;
    }
};

namespace detail {

enum class VType { start, end, split, merge, regular };

// Plane-sweep monotone decomposition (de Berg et al.), exact predicates.
// Returns the diagonal set that splits p into y-monotone pieces.
class MonotoneSweep {
public:
    explicit MonotoneSweep(const Polygon& p) : p_(p), n_(p.size()) {}

    std::vector<std::pair<std::size_t, std::size_t>> run() {
        std::vector<std::size_t> order(n_);
        for (std::size_t i = 0; i < n_; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return sweep_below(p_.v[b], p_.v[a]);
        });
        for (std::size_t i : order) {
            cur_ = p_.v[i];
            switch (classify(i)) {
                case VType::start:
                    insert_edge(i, i);
                    break;
                case VType::end:
                    finish_edge(p_.prev(i), i);
                    break;
                case VType::split: {
                    auto left = edge_left_of();
                    add_diagonal(i, helper_.at(left));
                    helper_[left] = i;
                    insert_edge(i, i);
                    break;
                }
                case VType::merge: {
                    finish_edge(p_.prev(i), i);
                    auto left = edge_left_of();
                    if (merge_[helper_.at(left)]) add_diagonal(i, helper_.at(left));
                    helper_[left] = i;
                    break;
                }
                case VType::regular:
                    if (sweep_below(p_.v[i], p_.v[p_.prev(i)])) {
                        // interior to the right: chain runs downward through i
                        finish_edge(p_.prev(i), i);
                        insert_edge(i, i);
                    } else {
                        auto left = edge_left_of();
                        if (merge_[helper_.at(left)]) add_diagonal(i, helper_.at(left));
                        helper_[left] = i;
                    }
                    break;
            }
        }
        return diagonals_;
    }

private:
    VType classify(std::size_t i) {
        const Point& c = p_.v[i];
        const Point& pr = p_.v[p_.prev(i)];
        const Point& nx = p_.v[p_.next(i)];
        bool prev_below = sweep_below(pr, c);
        bool next_below = sweep_below(nx, c);
        int turn = orient(pr, c, nx);
        if (prev_below && next_below) {
            VType t = turn > 0 ? VType::start : VType::split;
            if (t == VType::split) merge_[i] = false;
            return t;
        }
        if (!prev_below && !next_below) {
            if (turn > 0) return VType::end;
            merge_[i] = true;
            return VType::merge;
        }
        return VType::regular;
    }

    // exact left-to-right order of status edges at the sweep point
    struct EdgeLess {
        MonotoneSweep* s;
        bool operator()(long a, long b) const {
            if (a == b) return false;
            int c = s->compare_keys(a, b);
            if (c != 0) return c < 0;
            c = s->compare_slopes(a, b);
            if (c != 0) return c < 0;
            return a < b;
        }
    };

    // -1/0/+1 for x_at(a) vs x_at(b) at the current sweep point; id -1 is the
    // degenerate query "edge" at the sweep point itself
    int compare_keys(long a, long b) {
        if (a >= 0 && b >= 0) return compare_edges(static_cast<std::size_t>(a),
                                                   static_cast<std::size_t>(b));
        if (a < 0) return compare_point_edge(static_cast<std::size_t>(b));
        return -compare_point_edge(static_cast<std::size_t>(a));
    }

    void edge_ends(std::size_t e, const Point*& up, const Point*& lo) const {
        const Point& a = p_.v[e];
        const Point& b = p_.v[(e + 1) % n_];
        if (sweep_below(a, b)) {
            up = &b;
            lo = &a;
        } else {
            up = &a;
            lo = &b;
        }
    }

    // sign of cur.x - x_at(e, cur.y)
    int compare_point_edge(std::size_t e) {
        const Point *up, *lo;
        edge_ends(e, up, lo);
        if (up->y == lo->y) {  // horizontal: clamp to the span
            if (cur_.x < std::min(up->x, lo->x)) return -1;
            if (cur_.x > std::max(up->x, lo->x)) return 1;
            return 0;
        }
        return orient(*up, *lo, cur_);  // >0: cur east of the downward edge
    }

    int compare_edges(std::size_t e1, std::size_t e2) {
        const Point *u1, *l1, *u2, *l2;
        edge_ends(e1, u1, l1);
        edge_ends(e2, u2, l2);
        bool h1 = u1->y == l1->y, h2 = u2->y == l2->y;
        if (h1 || h2) {
            Rational x1 = h1 ? clamp_x(*u1, *l1) : x_at(*u1, *l1);
            Rational x2 = h2 ? clamp_x(*u2, *l2) : x_at(*u2, *l2);
            return sign(x1 - x2);
        }
        // sign of x_at(e1) - x_at(e2) by cross multiplication; both
        // denominators (lo.y - up.y) are negative, so their product is positive
        Rational d1 = l1->y - u1->y, d2 = l2->y - u2->y;
        Rational n1 = u1->x * d1 + (cur_.y - u1->y) * (l1->x - u1->x);
        Rational n2 = u2->x * d2 + (cur_.y - u2->y) * (l2->x - u2->x);
        return sign(n1 * d2 - n2 * d1);
    }

    Rational x_at(const Point& up, const Point& lo) const {
        return up.x + (cur_.y - up.y) * (lo.x - up.x) / (lo.y - up.y);
    }

    Rational clamp_x(const Point& a, const Point& b) const {
        const Rational& mn = std::min(a.x, b.x);
        const Rational& mx = std::max(a.x, b.x);
        if (cur_.x < mn) return mn;
        if (cur_.x > mx) return mx;
        return cur_.x;
    }

    // left-below order of edges through a common sweep point
    int compare_slopes(std::size_t e1, std::size_t e2) const {
        const Point *u1, *l1, *u2, *l2;
        edge_ends(e1, u1, l1);
        edge_ends(e2, u2, l2);
        int c = cross_sign(*u1, *l1, *u2, *l2);
        return -c;  // cross(d1,d2) > 0 means e1 is left below
    }

    void insert_edge(std::size_t e, std::size_t helper) {
        auto [it, ok] = status_.insert(static_cast<long>(e));
        assert(ok);
        handles_[e] = it;
        helper_[e] = helper;
    }

    void finish_edge(std::size_t e, std::size_t end_vertex) {
        if (merge_[helper_.at(e)]) add_diagonal(end_vertex, helper_.at(e));
        status_.erase(handles_.at(e));
        handles_.erase(e);
    }

    std::size_t edge_left_of() {
        auto it = status_.lower_bound(-1);
        assert(it != status_.begin());
        return static_cast<std::size_t>(*std::prev(it));
    }

    void add_diagonal(std::size_t a, std::size_t b) {
        if (a != b) diagonals_.emplace_back(std::min(a, b), std::max(a, b));
    }

    const Polygon& p_;
    std::size_t n_;
    Point cur_;
    std::set<long, EdgeLess> status_{EdgeLess{this}};
    std::unordered_map<std::size_t, std::set<long, EdgeLess>::iterator> handles_;
    std::unordered_map<std::size_t, std::size_t> helper_;
    std::unordered_map<std::size_t, bool> merge_;
    std::vector<std::pair<std::size_t, std::size_t>> diagonals_;
};

// Stack triangulation of one y-monotone piece (cycle of P-indices, ccw).
inline void triangulate_monotone(const Polygon& p, const std::vector<std::size_t>& piece,
                                 std::vector<std::array<std::size_t, 3>>& out) {
    const std::size_t m = piece.size();
    auto pt = [&](std::size_t k) -> const Point& { return p.v[piece[k]]; };
    auto emit = [&](std::size_t a, std::size_t b, std::size_t c) {
        int o = orient(p.v[piece[a]], p.v[piece[b]], p.v[piece[c]]);
        assert(o != 0);
        if (o > 0)
            out.push_back({piece[a], piece[b], piece[c]});
        else
            out.push_back({piece[a], piece[c], piece[b]});
    };
    if (m == 3) {
        emit(0, 1, 2);
        return;
    }
    std::size_t top = 0, bot = 0;
    for (std::size_t k = 1; k < m; ++k) {
        if (sweep_below(pt(top), pt(k))) top = k;
        if (sweep_below(pt(k), pt(bot))) bot = k;
    }
    // forward (ccw) from top to bottom is the left chain
    std::vector<bool> left(m, false);
    for (std::size_t k = (top + 1) % m; k != bot; k = (k + 1) % m) left[k] = true;
    std::vector<std::size_t> order(m);
    for (std::size_t k = 0; k < m; ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return sweep_below(pt(b), pt(a)); });
    std::vector<std::size_t> st{order[0], order[1]};
    for (std::size_t j = 2; j + 1 < m; ++j) {
        std::size_t u = order[j];
        if (left[u] != left[st.back()]) {
            while (st.size() > 1) {
                emit(u, st[st.size() - 1], st[st.size() - 2]);
                st.pop_back();
            }
            st.pop_back();
            st.push_back(order[j - 1]);
            st.push_back(u);
        } else {
            std::size_t popped = st.back();
            st.pop_back();
            while (!st.empty()) {
                int o = orient(pt(u), pt(popped), pt(st.back()));
                bool ok = left[u] ? (o < 0) : (o > 0);
                if (!ok) break;
                emit(u, popped, st.back());
                popped = st.back();
                st.pop_back();
            }
            st.push_back(popped);
            st.push_back(u);
        }
    }
    std::size_t u = order[m - 1];
    while (st.size() > 1) {
        emit(u, st[st.size() - 1], st[st.size() - 2]);
        st.pop_back();
    }
}

}  // namespace detail

// O(n log n) triangulation: monotone decomposition, then per-piece stack
// triangulation; dual adjacency over shared diagonals.
inline Triangulation triangulate(const Polygon& p) {
    const std::size_t n = p.size();
    Triangulation t;
    auto diags = detail::MonotoneSweep(p).run();
    std::sort(diags.begin(), diags.end());
    diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
    auto pieces = extract_faces(p, diags);
    for (const auto& piece : pieces) detail::triangulate_monotone(p, piece, t.tris);
    assert(t.tris.size() == n - 2);

    t.adj.assign(t.tris.size(), {-1, -1, -1});
    std::map<std::pair<std::size_t, std::size_t>, std::pair<int, int>> edge_owner;
    for (std::size_t i = 0; i < t.tris.size(); ++i) {
        for (int k = 0; k < 3; ++k) {
            std::size_t a = t.tris[i][k], b = t.tris[i][(k + 1) % 3];
            auto key = std::minmax(a, b);
            auto it = edge_owner.find({key.first, key.second});
            if (it == edge_owner.end()) {
                edge_owner[{key.first, key.second}] = {static_cast<int>(i), k};
            } else {
                auto [j, kj] = it->second;
                t.adj[i][k] = j;
                t.adj[j][kj] = static_cast<int>(i);
                t.diagonals.emplace_back(key.first, key.second);
            }
        }
    }
    return t;
}

// Unique dual-tree path between two triangles (inclusive).
inline std::vector<int> dual_path(const Triangulation& t, int ta, int tb) {
    std::vector<int> parent(t.tris.size(), -2);
    std::vector<int> stack{ta};
    parent[ta] = -1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        if (c == tb) break;
        for (int k = 0; k < 3; ++k) {
            int nb = t.adj[c][k];
            if (nb >= 0 && parent[nb] == -2) {
                parent[nb] = c;
                stack.push_back(nb);
            }
        }
    }
    std::vector<int> path;
    for (int c = tb; c != -1; c = parent[c]) path.push_back(c);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace polysimp
