#include "wbsdp/multiplicity.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wbsdp {

long lrCoefficient(const Partition& mu, const Partition& gamma, const Partition& lam) {
    if (gamma.size() + lam.size() != mu.size()) return 0;
    // Containment lam subseteq mu.
    if (lam.length() > mu.length()) return 0;
    for (int i = 0; i < lam.length(); ++i)
        if (lam.rows[i] > mu.rows[i]) return 0;
    if (gamma.size() == 0) return 1;

    // Fill the skew shape mu/lam in reverse reading order (rows top to
    // bottom, cells right to left) with values 1..len(gamma):
    //  - rows weakly increase left to right,
    //  - columns strictly increase top to bottom,
    //  - every reading-word prefix keeps count[v] <= count[v-1],
    //  - final counts equal gamma.
    const int nrows = mu.length();
    const int nvals = gamma.length();
    std::vector<int> lamRow(nrows, 0);
    for (int i = 0; i < lam.length(); ++i) lamRow[i] = lam.rows[i];

    std::vector<std::vector<int>> fill(nrows);
    for (int i = 0; i < nrows; ++i) fill[i].assign(mu.rows[i], 0);
    std::vector<int> counts(nvals + 1, 0);

    long total = 0;
    std::function<void(int, int)> rec = [&](int row, int col) {
        if (row == nrows) {
            ++total;
            return;
        }
        if (col < lamRow[row]) {
            rec(row + 1, row + 1 < nrows ? mu.rows[row + 1] - 1 : 0);
            return;
        }
        // Cells right of col are already filled (reverse reading order); an
        // above-cell inside lam imposes no constraint.
        int rightVal = col + 1 < mu.rows[row] ? fill[row][col + 1] : nvals + 1;
        int aboveVal = 0;
        if (row > 0 && col >= lamRow[row - 1]) aboveVal = fill[row - 1][col];
        for (int v = aboveVal + 1; v <= std::min(rightVal, nvals); ++v) {
            if (counts[v] + 1 > gamma.rows[v - 1]) continue;
            if (v > 1 && counts[v] + 1 > counts[v - 1]) continue;  // lattice word
            fill[row][col] = v;
            ++counts[v];
            if (col == lamRow[row])
                rec(row + 1, row + 1 < nrows ? mu.rows[row + 1] - 1 : 0);
            else
                rec(row, col - 1);
            --counts[v];
            fill[row][col] = 0;
        }
    };
    rec(0, mu.rows.empty() ? 0 : mu.rows[0] - 1);
    return total;
}

ModificationResult kingModify(const Bipartition& tilde, int d) {
    if (tilde.left.length() > d || tilde.right.length() > d)
        throw std::invalid_argument("kingModify: partitions longer than d");
    if (tilde.left.length() + tilde.right.length() <= d) return {1, tilde};

    const int r1 = tilde.right.rows.empty() ? 0 : tilde.right.rows[0];
    const int l1 = tilde.left.rows.empty() ? 0 : tilde.left.rows[0];
    Partition rt = transposePartition(tilde.right);
    Partition lt = transposePartition(tilde.left);
    auto rtCol = [&](int i) { return i <= rt.length() ? rt.rows[i - 1] : 0; };
    auto ltCol = [&](int j) { return j <= lt.length() ? lt.rows[j - 1] : 0; };

    // a_i = d - r'_i - r_1 + i, listed for i = r1..1 (decreasing);
    // b_j = l'_j - r_1 - j + 1, listed for j = 1..l1 (decreasing).
    std::vector<long> merged;
    merged.reserve(r1 + l1);
    for (int i = r1; i >= 1; --i) merged.push_back(d - rtCol(i) - r1 + i);
    for (int j = 1; j <= l1; ++j) merged.push_back(ltCol(j) - r1 - j + 1);

    for (int i = 0; i < r1; ++i)
        for (int j = r1; j < r1 + l1; ++j)
            if (merged[i] == merged[j]) return {0, std::nullopt};

    // Both halves are internally decreasing; the sorting sign is the parity
    // of cross-half inversions.
    long inversions = 0;
    for (std::size_t i = 0; i < merged.size(); ++i)
        for (std::size_t j = i + 1; j < merged.size(); ++j)
            if (merged[i] < merged[j]) ++inversions;
    std::vector<long> sorted = merged;
    std::sort(sorted.begin(), sorted.end(), std::greater<long>());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw std::runtime_error("kingModify: sorted values are not distinct");

    // The first r1 sorted values rebuild the right diagram's columns and the
    // remaining l1 values the left ones; when the list was already sorted
    // this reproduces tilde itself (and it matches the d = 2 pairing
    // ((a,1),(b,1)) -> ((a),(b)) with sign -1).
    auto k = [&](int idx) { return sorted[idx - 1]; };  // 1-based
    std::vector<int> flCols, frCols;
    for (int i = r1; i >= 1; --i) frCols.push_back(static_cast<int>(d - k(i) - i + 1));
    for (int j = 1; j <= l1; ++j) flCols.push_back(static_cast<int>(k(r1 + j) + r1 + j - 1));

    auto colsToPartition = [](std::vector<int>& cols) {
        while (!cols.empty() && cols.back() == 0) cols.pop_back();
        Partition t;
        t.rows = cols;
        if (!isValidPartition(t))
            throw std::runtime_error("kingModify: modified columns are not a partition");
        return transposePartition(t);
    };
    for (int c : flCols)
        if (c < 0) throw std::runtime_error("kingModify: negative column length");
    for (int c : frCols)
        if (c < 0) throw std::runtime_error("kingModify: negative column length");

    Bipartition f{colsToPartition(flCols), colsToPartition(frCols)};
    if (f.left.size() - f.right.size() != tilde.left.size() - tilde.right.size())
        throw std::runtime_error("kingModify: size difference not preserved");
    return {inversions % 2 == 0 ? 1 : -1, f};
}

long restrictionMultiplicity(const Bipartition& lam, const Partition& mu, const Partition& nu,
                             int d) {
    const int p = mu.size();
    const int q = nu.size();
    long total = 0;
    for (int k = 0; k <= std::min(p, q); ++k) {
        for (const auto& tl : partitionsOf(p - k, d)) {
            for (const auto& tr : partitionsOf(q - k, d)) {
                ModificationResult mod = kingModify({tl, tr}, d);
                if (mod.g == 0 || !(*mod.f == lam)) continue;
                long inner = 0;
                for (const auto& gamma : partitionsOf(k))
                    inner += lrCoefficient(mu, gamma, tl) * lrCoefficient(nu, gamma, tr);
                total += mod.g * inner;
            }
        }
    }
    if (total < 0) throw std::runtime_error("restriction multiplicity came out negative");
    return total;
}

Int variableCount(int p, int q, int d, CountKind kind) {
    switch (kind) {
        case CountKind::FullBrauer: {
            Int n = 0;
            for (int k = 0; k <= std::min(p, q); ++k)
                for (const auto& l : partitionsOf(p - k, d))
                    for (const auto& r : partitionsOf(q - k, d))
                        if (l.length() + r.length() <= d) ++n;
            return n;
        }
        case CountKind::GelfandTsetlin: {
            BratteliGraph g = buildBratteli(p, q, Family::A, d);
            Int n = 0;
            for (const auto& c : pathCountsPerLeaf(g)) n += c;
            return n;
        }
        case CountKind::Dimension: {
            BratteliGraph g = buildBratteli(p, q, Family::A, d);
            Int n = 0;
            for (const auto& c : pathCountsPerLeaf(g)) n += c * c;
            return n;
        }
        case CountKind::SpSq: {
            Int n = 0;
            for (int k = 0; k <= std::min(p, q); ++k) {
                for (const auto& l : partitionsOf(p - k, d)) {
                    for (const auto& r : partitionsOf(q - k, d)) {
                        if (l.length() + r.length() > d) continue;
                        Bipartition lam{l, r};
                        for (const auto& mu : partitionsOf(p, d))
                            for (const auto& nu : partitionsOf(q, d)) {
                                long m = restrictionMultiplicity(lam, mu, nu, d);
                                n += Int(m) * Int(m);
                            }
                    }
                }
            }
            return n;
        }
    }
    throw std::invalid_argument("unknown count kind");
}

std::vector<std::pair<int, int>> printedPairOrder(int maxTotal) {
    // (p, q) with p <= q, grouped by p+q; within a group the smaller p comes
    // first: (1,1),(1,2),(1,3),(2,2),(1,4),(2,3),...
    std::vector<std::pair<int, int>> out;
    for (int total = 2; total <= maxTotal; ++total)
        for (int p = 1; p <= total / 2; ++p) out.emplace_back(p, total - p);
    return out;
}

namespace {

std::string pairTableCsv(CountKind kind, int maxD) {
    std::ostringstream os;
    os << "d";
    auto pairs = printedPairOrder();
    for (auto [p, q] : pairs) os << ",\"(" << p << ',' << q << ")\"";
    os << '\n';
    for (int d = 2; d <= maxD; ++d) {
        os << d;
        for (auto [p, q] : pairs) os << ',' << variableCount(p, q, d, kind).get_str();
        os << '\n';
    }
    return os.str();
}

std::string totalTableCsv(CountKind kind, int maxN, int maxD) {
    std::ostringstream os;
    os << "d";
    for (int n = 2; n <= maxN; ++n) os << ",\"p+q=" << n << '"';
    os << '\n';
    for (int d = 2; d <= maxD; ++d) {
        os << d;
        for (int n = 2; n <= maxN; ++n) {
            // Keyed by p+q; verified elsewhere to agree across splits.
            int p = n / 2, q = n - n / 2;
            os << ',' << variableCount(p, q, d, kind).get_str();
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string brauerTableCsv(int maxD) { return pairTableCsv(CountKind::FullBrauer, maxD); }
std::string spqTableCsv(int maxD) { return pairTableCsv(CountKind::SpSq, maxD); }
std::string gtTableCsv(int maxN, int maxD) {
    return totalTableCsv(CountKind::GelfandTsetlin, maxN, maxD);
}
std::string dimensionTableCsv(int maxN, int maxD) {
    return totalTableCsv(CountKind::Dimension, maxN, maxD);
}

}  // namespace wbsdp
