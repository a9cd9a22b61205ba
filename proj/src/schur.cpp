#include "legann/schur.hpp"

#include <stdexcept>

namespace legann {

LaurentPoly SchurVector::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void SchurVector::add_term(const Partition& lambda, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        terms_.emplace(lambda, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SchurVector SchurVector::operator-() const {
    SchurVector r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

SchurVector& SchurVector::operator+=(const SchurVector& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

SchurVector operator*(const LaurentPoly& c, const SchurVector& x) {
    SchurVector r;
    for (const auto& [p, v] : x.terms_) r.add_term(p, c * v);
    return r;
}

SchurVector operator*(const SchurVector& x, const SchurVector& y) {
    SchurVector r;
    for (const auto& [mu, cx] : x.terms_) {
        for (const auto& [nu, cy] : y.terms_) {
            LaurentPoly c = cx * cy;
            for (const Partition& lam : partitions_of(mu.weight() + nu.weight())) {
                long long lr = lr_coefficient(lam, mu, nu);
                if (lr == 0) continue;
                r.add_term(lam, LaurentPoly(lr) * c);
            }
        }
    }
    return r;
}

SchurVector hook_expand_A(int m) {
    if (m < 1) throw std::invalid_argument("hook_expand_A: m must be positive");
    SchurVector v;
    for (int b = 0; b <= m - 1; ++b) {
        int a = m - 1 - b;
        std::vector<int> hook{a + 1};
        hook.insert(hook.end(), b, 1);
        BigInt sign(b % 2 == 0 ? 1 : -1);
        v.add_term(Partition(hook), LaurentPoly::monomial(sign, 0, 0, a - b));
    }
    return v;
}

SchurVector a_to_schur(const Partition& lambda) {
    SchurVector v = SchurVector::unit();
    for (int p : lambda.parts()) v = v * hook_expand_A(p);
    return v;
}

LaurentPoly schur_inner(const SchurVector& f, const SchurVector& g) {
    LaurentPoly r;
    const auto& a = f.terms();
    const auto& b = g.terms();
    for (const auto& [p, c] : a) {
        auto it = b.find(p);
        if (it != b.end()) r += c * it->second;
    }
    return r;
}

std::map<PartitionPair, LaurentPoly> schur_coproduct(const SchurVector& f) {
    std::map<PartitionPair, LaurentPoly> out;
    auto add = [&out](const Partition& mu, const Partition& nu, LaurentPoly c) {
        if (c.is_zero()) return;
        auto key = PartitionPair{mu, nu};
        auto it = out.find(key);
        if (it == out.end()) {
            out.emplace(std::move(key), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [lam, c] : f.terms()) {
        int n = lam.weight();
        for (int k = 0; k <= n; ++k) {
            for (const Partition& mu : partitions_of(k)) {
                if (!lam.contains(mu)) continue;
                for (const Partition& nu : partitions_of(n - k)) {
                    long long lr = lr_coefficient(lam, mu, nu);
                    if (lr == 0) continue;
                    add(mu, nu, LaurentPoly(lr) * c);
                }
            }
        }
    }
    return out;
}

std::map<PartitionPair, LaurentPoly> tensor_mul(
    const std::map<PartitionPair, LaurentPoly>& x,
    const std::map<PartitionPair, LaurentPoly>& y) {
    std::map<PartitionPair, LaurentPoly> out;
    for (const auto& [px, cx] : x) {
        SchurVector lx = SchurVector::basis(px.first);
        SchurVector rx = SchurVector::basis(px.second);
        for (const auto& [py, cy] : y) {
            SchurVector left = lx * SchurVector::basis(py.first);
            SchurVector right = rx * SchurVector::basis(py.second);
            LaurentPoly c = cx * cy;
            for (const auto& [lp, lc] : left.terms()) {
                for (const auto& [rp, rc] : right.terms()) {
                    LaurentPoly v = c * lc * rc;
                    auto key = PartitionPair{lp, rp};
                    auto it = out.find(key);
                    if (it == out.end()) {
                        out.emplace(key, v);
                    } else {
                        it->second += v;
                        if (it->second.is_zero()) out.erase(it);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace legann
