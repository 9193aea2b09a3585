/*
   Copyright 2026 The ghsi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file genhermite.hpp
 * @brief Generalized Hermite polynomials H_{p,q}.
 *
 * Built from the two bilinear recurrences
 *
 *     2p H_{p+1,q} H_{p-1,q} =  H H'' - H'^2 + 2p H^2,   H = H_{p,q}
 *     2q H_{p,q+1} H_{p,q-1} = -H H'' + H'^2 + 2q H^2
 *
 * with H_{p,0} = H_{0,q} = 1 and H_{1,1} = 2x. The second index is raised
 * along p = 1 first, then p is raised at fixed q. Each step is an exact
 * polynomial division.
 */

#ifndef GHSI_GENHERMITE_HPP
#define GHSI_GENHERMITE_HPP

#include "ghsi/hermite.hpp"
#include "ghsi/polynomial.hpp"
#include "ghsi/sturm.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace ghsi {

struct GHKey {
    unsigned p = 0;
    unsigned q = 0;
    friend auto operator<=>(const GHKey&, const GHKey&) = default;
};

/// Memo cache for H_{p,q}. Readers share the lock; a missing entry is computed
/// outside any lock and published under the exclusive lock. Two threads may
/// compute the same entry; the first insert wins and both values are equal.
class GHTable {
public:
    static GHTable& global() {
        static GHTable table;
        return table;
    }

    QPoly get(unsigned p, unsigned q) {
        if (p == 0 || q == 0) {
            return QPoly::constant(1);
        }
        if (auto hit = lookup({p, q})) {
            return *hit;
        }
        // Walk q along p = 1.
        QPoly below = QPoly::constant(1); // H_{1,k-1}
        QPoly cur = QPoly::monomial(2, 1); // H_{1,k}
        for (unsigned k = 1; k < q; ++k) {
            QPoly next;
            if (auto hit = lookup({1, k + 1})) {
                next = *hit;
            } else {
                next = step_q(cur, below, k);
                publish({1, k + 1}, next);
            }
            below = std::move(cur);
            cur = std::move(next);
        }
        if (p == 1) {
            return cur;
        }
        // Walk p at fixed q.
        QPoly left = QPoly::constant(1); // H_{k-1,q}
        for (unsigned k = 1; k < p; ++k) {
            QPoly next;
            if (auto hit = lookup({k + 1, q})) {
                next = *hit;
            } else {
                next = step_p(cur, left, k);
                publish({k + 1, q}, next);
            }
            left = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return entries_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        entries_.clear();
        entries_.emplace(GHKey{1, 1}, QPoly::monomial(2, 1));
    }

    GHTable() { entries_.emplace(GHKey{1, 1}, QPoly::monomial(2, 1)); }

private:
    // H_{k+1,q} from H = H_{k,q} and H_{k-1,q}.
    static QPoly step_p(const QPoly& h, const QPoly& left, unsigned k) {
        const QPoly d1 = derivative(h);
        const QPoly rhs = h * derivative(h, 2) - d1 * d1 + h * h * Rational(2 * k);
        return divexact(rhs, left * Rational(2 * k));
    }

    // H_{1,k+1} from H = H_{1,k} and H_{1,k-1}.
    static QPoly step_q(const QPoly& h, const QPoly& below, unsigned k) {
        const QPoly d1 = derivative(h);
        const QPoly rhs = d1 * d1 - h * derivative(h, 2) + h * h * Rational(2 * k);
        return divexact(rhs, below * Rational(2 * k));
    }

    std::optional<QPoly> lookup(GHKey key) const {
        std::shared_lock lock(mutex_);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    void publish(GHKey key, const QPoly& value) {
        std::unique_lock lock(mutex_);
        entries_.emplace(key, value);
    }

    mutable std::shared_mutex mutex_;
    std::map<GHKey, QPoly> entries_;
};

/// Generalized Hermite polynomial H_{p,q}; degree p*q.
inline QPoly gh(unsigned p, unsigned q) { return GHTable::global().get(p, q); }

/// Independent route: Wr(H_p, ..., H_{p+q-1}) rescaled to the leading
/// coefficient of gh(p, q).
inline QPoly gh_via_wronskian(unsigned p, unsigned q) {
    if (q == 0) {
        throw std::invalid_argument("gh_via_wronskian needs q >= 1");
    }
    std::vector<QPoly> fs;
    fs.reserve(q);
    for (unsigned k = 0; k < q; ++k) {
        fs.push_back(classical_hermite(p + k));
    }
    const QPoly w = wronskian(fs);
    const QPoly ref = gh(p, q);
    return w * (ref.leading() / w.leading());
}

} // namespace ghsi

#endif // GHSI_GENHERMITE_HPP
