#pragma once

#include <algorithm>
#include <deque>
#include <vector>

namespace toughham::detail {

/// Edmonds-Karp on a dense capacity matrix.
class FlowNetwork {
public:
    static constexpr int kInfinite = 1 << 28;

    explicit FlowNetwork(int nodes)
        : n_(nodes), cap_(static_cast<std::size_t>(nodes) * static_cast<std::size_t>(nodes), 0), initial_(cap_) {}

    void add(int from, int to, int capacity) {
        cap_[index(from, to)] += capacity;
        initial_[index(from, to)] += capacity;
    }

    [[nodiscard]] int residual(int a, int b) const { return cap_[index(a, b)]; }
    /// Flow pushed along an arc that was added with positive capacity.
    [[nodiscard]] int flow(int a, int b) const {
        return initial_[index(a, b)] > 0 ? std::max(0, initial_[index(a, b)] - cap_[index(a, b)]) : 0;
    }

    int max_flow(int source, int sink, int limit = kInfinite) {
        int total = 0;
        std::vector<int> parent(static_cast<std::size_t>(n_));
        while (total < limit) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[static_cast<std::size_t>(source)] = source;
            std::deque<int> queue{source};
            while (!queue.empty() && parent[static_cast<std::size_t>(sink)] == -1) {
                int a = queue.front();
                queue.pop_front();
                for (int b = 0; b < n_; ++b) {
                    if (parent[static_cast<std::size_t>(b)] == -1 && residual(a, b) > 0) {
                        parent[static_cast<std::size_t>(b)] = a;
                        queue.push_back(b);
                    }
                }
            }
            if (parent[static_cast<std::size_t>(sink)] == -1) break;
            int push = limit - total;
            for (int b = sink; b != source; b = parent[static_cast<std::size_t>(b)])
                push = std::min(push, residual(parent[static_cast<std::size_t>(b)], b));
            for (int b = sink; b != source; b = parent[static_cast<std::size_t>(b)]) {
                int a = parent[static_cast<std::size_t>(b)];
                cap_[index(a, b)] -= push;
                cap_[index(b, a)] += push;
            }
            total += push;
        }
        return total;
    }

    [[nodiscard]] std::vector<bool> reachable(int source) const {
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        seen[static_cast<std::size_t>(source)] = true;
        std::deque<int> queue{source};
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            for (int b = 0; b < n_; ++b) {
                if (!seen[static_cast<std::size_t>(b)] && residual(a, b) > 0) {
                    seen[static_cast<std::size_t>(b)] = true;
                    queue.push_back(b);
                }
            }
        }
        return seen;
    }

private:
    [[nodiscard]] std::size_t index(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
    }

    int n_;
    std::vector<int> cap_;
    std::vector<int> initial_;
};

}  // namespace toughham::detail
