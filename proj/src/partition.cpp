#include "legann/partition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace legann {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty() || t == "-") return Partition();
    std::vector<int> parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("Partition: empty part");
        parts.push_back(std::stoi(item));
    }
    return Partition(parts);
}

int Partition::weight() const {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 1 : parts_[0] + 1, 0);
    for (int p : parts_) ++m[p];
    return m;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::united(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    std::sort(all.begin(), all.end(), std::greater<int>());
    return Partition(all);
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

namespace {
void gen_partitions(int n, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

namespace {
void gen_matrices(const std::vector<int>& rows, std::vector<int>& col_left,
                  size_t row, std::vector<std::vector<int>>& cur,
                  std::vector<ContingencyMatrix>& out, const Partition& lambda,
                  const Partition& mu) {
    if (row == rows.size()) {
        for (int c : col_left)
            if (c != 0) return;
        out.push_back({lambda, mu, cur});
        return;
    }
    // fill row `row` with a composition of rows[row] bounded by col_left
    std::vector<int> entry(col_left.size(), 0);
    auto rec = [&](auto&& self, size_t col, int left) -> void {
        if (col + 1 == col_left.size()) {
            if (left > col_left[col]) return;
            entry[col] = left;
            col_left[col] -= left;
            cur.push_back(entry);
            gen_matrices(rows, col_left, row + 1, cur, out, lambda, mu);
            cur.pop_back();
            col_left[col] += left;
            return;
        }
        for (int v = std::min(left, col_left[col]); v >= 0; --v) {
            entry[col] = v;
            col_left[col] -= v;
            self(self, col + 1, left - v);
            col_left[col] += v;
        }
        entry[col] = 0;
    };
    if (col_left.empty()) {
        if (rows[row] == 0) {
            cur.push_back(entry);
            gen_matrices(rows, col_left, row + 1, cur, out, lambda, mu);
            cur.pop_back();
        }
        return;
    }
    rec(rec, 0, rows[row]);
}
}  // namespace

std::vector<ContingencyMatrix> contingency_matrices(const Partition& lambda,
                                                    const Partition& mu) {
    std::vector<ContingencyMatrix> out;
    if (lambda.weight() != mu.weight()) return out;
    std::vector<int> col_left = mu.parts();
    std::vector<std::vector<int>> cur;
    gen_matrices(lambda.parts(), col_left, 0, cur, out, lambda, mu);
    return out;
}

LaurentPoly bracket(int m) {
    if (m < 0) throw std::invalid_argument("bracket: negative argument");
    if (m == 0) return LaurentPoly::var_z(-2);
    LaurentPoly acc;
    for (const Partition& lam : partitions_of(m)) {
        // (l! / prod m_k!) * (prod of parts) * z^{2(l-1)}, the multinomial
        // taken as a product of binomial coefficients to stay in integers
        std::vector<int> mult = lam.multiplicities();
        BigInt coeff(1);
        int remaining = lam.length();
        for (size_t k = mult.size(); k-- > 1;) {
            if (mult[k] == 0) continue;
            long long binom = 1;
            for (int j = 1; j <= mult[k]; ++j)
                binom = binom * (remaining - mult[k] + j) / j;
            coeff *= BigInt(binom);
            remaining -= mult[k];
        }
        BigInt parts_product(1);
        for (int p : lam.parts()) parts_product *= BigInt(p);
        acc += LaurentPoly::monomial(coeff * parts_product, 0,
                                     2 * (lam.length() - 1), 0);
    }
    return acc;
}

LaurentPoly turaev_inner(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return LaurentPoly();
    if (lambda.empty() && mu.empty()) return LaurentPoly(1);
    const int l = lambda.length(), k = mu.length();
    LaurentPoly sum;
    std::vector<LaurentPoly> bracket_cache;
    auto br = [&](int m) -> const LaurentPoly& {
        while (static_cast<int>(bracket_cache.size()) <= m)
            bracket_cache.push_back(bracket(static_cast<int>(bracket_cache.size())));
        return bracket_cache[m];
    };
    for (const ContingencyMatrix& cm : contingency_matrices(lambda, mu)) {
        LaurentPoly prod(1);
        for (const auto& row : cm.entries)
            for (int b : row) prod *= br(b);
        sum += prod;
    }
    return LaurentPoly::var_z(2 * l * k - l - k) * sum;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson via lattice-word skew tableaux

namespace {

struct Cell {
    int row, col;
};

// Cells of lambda/mu in reverse reading-word order: rows top to bottom,
// within a row right to left.  Filling in this order lets the lattice
// condition be checked prefix by prefix.
std::vector<Cell> skew_cells(const Partition& lambda, const Partition& mu) {
    std::vector<Cell> cells;
    for (int r = 0; r < lambda.length(); ++r) {
        int lo = r < mu.length() ? mu.part(r) : 0;
        for (int c = lambda.part(r) - 1; c >= lo; --c) cells.push_back({r, c});
    }
    return cells;
}

long long count_lr_tableaux(const Partition& lambda, const Partition& mu,
                            const Partition& nu) {
    std::vector<Cell> cells = skew_cells(lambda, mu);
    int nrows = lambda.length();
    int ncols = lambda.empty() ? 0 : lambda.part(0);
    std::vector<std::vector<int>> grid(nrows, std::vector<int>(ncols, 0));
    std::vector<int> used(nu.length() + 2, 0);

    long long count = 0;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const Cell cell = cells[idx];
        int hi = nu.length();
        // row weakly increasing: bounded by right neighbour (already filled)
        if (cell.col + 1 < lambda.part(cell.row)) {
            hi = std::min(hi, grid[cell.row][cell.col + 1]);
        }
        int lo = 1;
        // column strictly increasing downward: above neighbour already filled
        if (cell.row > 0) {
            int above_lo = cell.row - 1 < mu.length() ? mu.part(cell.row - 1) : 0;
            if (cell.col >= above_lo && cell.col < lambda.part(cell.row - 1))
                lo = std::max(lo, grid[cell.row - 1][cell.col] + 1);
        }
        for (int v = lo; v <= hi; ++v) {
            if (used[v] + 1 > nu.part(v - 1)) continue;          // content bound
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;    // lattice word
            grid[cell.row][cell.col] = v;
            ++used[v];
            self(self, idx + 1);
            --used[v];
            grid[cell.row][cell.col] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu) {
    if (mu.weight() + nu.weight() != lambda.weight()) return 0;
    if (!lambda.contains(mu)) return 0;
    if (nu.empty()) return lambda == mu ? 1 : 0;

    using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
    static std::map<Key, long long> memo;
    static std::mutex memo_mutex;
    Key key{lambda.parts(), mu.parts(), nu.parts()};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    long long value = count_lr_tableaux(lambda, mu, nu);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo.emplace(std::move(key), value);
    }
    return value;
}

}  // namespace legann
