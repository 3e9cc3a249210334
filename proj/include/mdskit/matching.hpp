#pragma once

#include <vector>

namespace mdskit {

// Maximum bipartite matching (Kuhn's augmenting-path algorithm).
// adj[l] lists the right vertices reachable from left vertex l.
// Returns the matching size; match_l[l] / match_r[r] give the partner
// or -1.  Deterministic: vertices and edges are tried in given order.
inline int max_bipartite_matching(int nl, int nr,
                                  const std::vector<std::vector<int>>& adj,
                                  std::vector<int>& match_l,
                                  std::vector<int>& match_r) {
    match_l.assign(nl, -1);
    match_r.assign(nr, -1);
    std::vector<char> used(nr, 0);

    auto try_kuhn = [&](auto&& self, int l) -> bool {
        for (int r : adj[l]) {
            if (used[r]) continue;
            used[r] = 1;
            if (match_r[r] == -1 || self(self, match_r[r])) {
                match_l[l] = r;
                match_r[r] = l;
                return true;
            }
        }
        return false;
    };

    int size = 0;
    for (int l = 0; l < nl; ++l) {
        used.assign(nr, 0);
        if (try_kuhn(try_kuhn, l)) ++size;
    }
    return size;
}

} // namespace mdskit
