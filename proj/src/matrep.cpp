#include "wbsdp/matrep.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wbsdp/parallel.hpp"

namespace wbsdp {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

Rat SparseMatrix::trace() const {
    Rat t = 0;
    for (const auto& [key, v] : entries)
        if (key / dim == key % dim) t += v;
    return t;
}

std::uint64_t psiDimension(int p, int q, int d, std::uint64_t memoryBound) {
    if (d < 2) throw std::invalid_argument("psi: dimension d must be >= 2");
    std::uint64_t dim = ipow(static_cast<std::uint64_t>(d), p + q);
    if (dim > memoryBound)
        throw std::invalid_argument("psi: d^(p+q) exceeds the memory bound");
    return dim;
}

SparseMatrix psi(const Diagram& dg, int d, std::uint64_t memoryBound) {
    const int n = dg.n();
    SparseMatrix m;
    m.dim = psiDimension(dg.p, dg.q, d, memoryBound);

    // One free label per pair; every assignment contributes a distinct 1.
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < 2 * n; ++x)
        if (dg.match[x] > x) pairs.emplace_back(x, dg.match[x]);

    std::vector<int> label(2 * n, 0);
    std::vector<int> assign(pairs.size(), 0);
    const std::uint64_t total = ipow(static_cast<std::uint64_t>(d), static_cast<int>(pairs.size()));
    m.entries.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t a = 0; a < pairs.size(); ++a) {
            int v = static_cast<int>(rest % d);
            rest /= d;
            label[pairs[a].first] = v;
            label[pairs[a].second] = v;
        }
        std::uint64_t row = 0, col = 0;
        for (int i = 0; i < n; ++i) {
            row = row * d + label[i];        // top labels
            col = col * d + label[n + i];    // bottom labels
        }
        m.entries.emplace_back(row * m.dim + col, Rat(1));
    }
    std::sort(m.entries.begin(), m.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return m;
}

namespace {

SparseMatrix accumulate(std::vector<std::pair<std::uint64_t, const Rat*>>& all,
                        std::uint64_t dim) {
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseMatrix out;
    out.dim = dim;
    std::size_t i = 0;
    while (i < all.size()) {
        std::uint64_t key = all[i].first;
        Rat sum = *all[i].second;
        ++i;
        while (i < all.size() && all[i].first == key) {
            sum += *all[i].second;
            ++i;
        }
        if (sum != 0) out.entries.emplace_back(key, std::move(sum));
    }
    return out;
}

}  // namespace

SparseMatrix psiElementSerial(const AlgebraElement& a, std::uint64_t memoryBound) {
    const std::uint64_t dim = psiDimension(a.p(), a.q(), a.delta(), memoryBound);
    // Entries of psi(diagram) are all 1, so each key contributes the term's
    // coefficient directly.
    std::vector<SparseMatrix> images;
    std::vector<const Rat*> coeffs;
    for (const auto& [dg, c] : a.terms()) {
        images.push_back(psi(dg, a.delta(), memoryBound));
        coeffs.push_back(&c);
    }
    std::size_t total = 0;
    for (const auto& im : images) total += im.entries.size();
    std::vector<std::pair<std::uint64_t, const Rat*>> all;
    all.reserve(total);
    for (std::size_t t = 0; t < images.size(); ++t)
        for (const auto& [key, one] : images[t].entries) all.emplace_back(key, coeffs[t]);
    return accumulate(all, dim);
}

SparseMatrix psiElement(const AlgebraElement& a, std::uint64_t memoryBound) {
    const std::uint64_t dim = psiDimension(a.p(), a.q(), a.delta(), memoryBound);
    std::vector<const std::pair<const Diagram, Rat>*> terms;
    terms.reserve(a.termCount());
    for (const auto& t : a.terms()) terms.push_back(&t);

    std::vector<SparseMatrix> images(terms.size());
    parallelFor(terms.size(), [&](std::size_t i) {
        images[i] = psi(terms[i]->first, a.delta(), memoryBound);
    });

    std::size_t total = 0;
    for (const auto& im : images) total += im.entries.size();
    std::vector<std::pair<std::uint64_t, const Rat*>> all;
    all.reserve(total);
    for (std::size_t t = 0; t < terms.size(); ++t)
        for (const auto& [key, one] : images[t].entries)
            all.emplace_back(key, &terms[t]->second);
    return accumulate(all, dim);
}

SparseMatrix spAdd(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("spAdd: dimension mismatch");
    SparseMatrix out;
    out.dim = a.dim;
    std::size_t i = 0, j = 0;
    while (i < a.entries.size() || j < b.entries.size()) {
        if (j == b.entries.size() ||
            (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
            out.entries.push_back(a.entries[i++]);
        } else if (i == a.entries.size() || b.entries[j].first < a.entries[i].first) {
            out.entries.push_back(b.entries[j++]);
        } else {
            Rat s = a.entries[i].second + b.entries[j].second;
            if (s != 0) out.entries.emplace_back(a.entries[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseMatrix spScale(const SparseMatrix& a, const Rat& c) {
    SparseMatrix out;
    out.dim = a.dim;
    if (c == 0) return out;
    out.entries.reserve(a.entries.size());
    for (const auto& [k, v] : a.entries) out.entries.emplace_back(k, v * c);
    return out;
}

SparseMatrix spMul(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("spMul: dimension mismatch");
    const std::uint64_t dim = a.dim;
    // Bucket b by row.
    std::vector<std::pair<std::size_t, std::size_t>> rowRange(dim, {0, 0});
    for (std::size_t j = 0; j < b.entries.size();) {
        std::uint64_t r = b.entries[j].first / dim;
        std::size_t start = j;
        while (j < b.entries.size() && b.entries[j].first / dim == r) ++j;
        rowRange[r] = {start, j};
    }
    std::map<std::uint64_t, Rat> acc;
    for (const auto& [ka, va] : a.entries) {
        std::uint64_t r = ka / dim, m = ka % dim;
        auto [s, e] = rowRange[m];
        for (std::size_t j = s; j < e; ++j) {
            std::uint64_t c = b.entries[j].first % dim;
            acc[r * dim + c] += va * b.entries[j].second;
        }
    }
    SparseMatrix out;
    out.dim = dim;
    for (auto& [k, v] : acc)
        if (v != 0) out.entries.emplace_back(k, std::move(v));
    return out;
}

SparseMatrix spPartialTrace(const SparseMatrix& m, int n, int d, const std::set<int>& S) {
    std::vector<char> traced(n, 0);
    for (int i : S) traced[i - 1] = 1;
    int kept = n - static_cast<int>(S.size());
    SparseMatrix out;
    out.dim = ipow(static_cast<std::uint64_t>(d), kept);

    std::map<std::uint64_t, Rat> acc;
    std::vector<int> rdig(n), cdig(n);
    for (const auto& [key, v] : m.entries) {
        std::uint64_t r = key / m.dim, c = key % m.dim;
        for (int i = n - 1; i >= 0; --i) {
            rdig[i] = static_cast<int>(r % d);
            r /= d;
            cdig[i] = static_cast<int>(c % d);
            c /= d;
        }
        bool diag = true;
        for (int i = 0; i < n && diag; ++i)
            if (traced[i] && rdig[i] != cdig[i]) diag = false;
        if (!diag) continue;
        std::uint64_t rr = 0, cc = 0;
        for (int i = 0; i < n; ++i) {
            if (traced[i]) continue;
            rr = rr * d + rdig[i];
            cc = cc * d + cdig[i];
        }
        acc[rr * out.dim + cc] += v;
    }
    for (auto& [k, v] : acc)
        if (v != 0) out.entries.emplace_back(k, std::move(v));
    return out;
}

TraceLiftReport verifyTraceLift(int samples, int p, int q, int d, unsigned seed) {
    TraceLiftReport report;
    report.samples = samples;
    const int n = p + q;
    std::mt19937 rng(seed);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;

    for (int s = 0; s < samples; ++s) {
        std::shuffle(perm.begin(), perm.end(), rng);
        Matching m;
        m.n = n;
        m.match.assign(2 * n, -1);
        for (int i = 0; i < n; ++i) {
            m.match[i] = n + perm[i];
            m.match[n + perm[i]] = i;
        }
        Diagram dg = fromPartialTranspose(m, p, q);
        SparseMatrix M = psi(dg, d);

        Rat mt = M.trace();
        Rat dt = intPow(d, static_cast<unsigned long>(traceLoops(dg)));
        if (mt != dt) {
            std::ostringstream os;
            os << "full trace mismatch on " << diagramToString(dg) << ": matrix "
               << ratToString(mt) << " vs diagram " << ratToString(dt);
            report.mismatches.push_back(os.str());
        }

        std::set<int> S;
        for (int i = 1; i <= n; ++i)
            if (rng() % 2 == 0) S.insert(i);
        PartialTraceResult pt = partialTrace(dg, S);
        SparseMatrix lhs = spPartialTrace(M, n, d, S);
        SparseMatrix rhs = spScale(psi(pt.diagram, d),
                                   intPow(d, static_cast<unsigned long>(pt.loops)));
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "partial trace mismatch on " << diagramToString(dg) << " with S={";
            for (int i : S) os << i << ' ';
            os << '}';
            report.mismatches.push_back(os.str());
        }
    }
    return report;
}

namespace {

using CMat = Eigen::MatrixXcd;

CMat toComplex(const SparseMatrix& m) {
    CMat out = CMat::Zero(static_cast<long>(m.dim), static_cast<long>(m.dim));
    for (const auto& [k, v] : m.entries)
        out(static_cast<long>(k / m.dim), static_cast<long>(k % m.dim)) = v.get_d();
    return out;
}

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMat haarUnitary(int d, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<CMat> qr(g);
    CMat Q = qr.householderQ();
    CMat R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        std::complex<double> r = R(j, j);
        Q.col(j) *= r / std::abs(r);
    }
    return Q;
}

}  // namespace

double verifyCommutant(const AlgebraElement& e, int trials, unsigned seed) {
    SparseMatrix M = psiElement(e);
    CMat A = toComplex(M);
    const int d = e.delta();
    std::mt19937 rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        CMat U = haarUnitary(d, rng);
        CMat W = CMat::Identity(1, 1);
        for (int i = 0; i < e.p(); ++i) W = kron(W, U);
        CMat Ubar = U.conjugate();
        for (int i = 0; i < e.q(); ++i) W = kron(W, Ubar);
        double dev = (A * W - W * A).norm();
        worst = std::max(worst, dev);
    }
    return worst;
}

GtFrame buildGtFrame(const IdempotentSet& gtSet, unsigned seed, int retryCap) {
    if (gtSet.symmetry != Symmetry::GelfandTsetlin)
        throw std::invalid_argument("buildGtFrame needs the canonical (GT) set");
    GtFrame fr;
    fr.p = gtSet.p;
    fr.q = gtSet.q;
    fr.d = gtSet.d;
    fr.seed = seed;  // the seed reproduces the whole probe sequence
    fr.gt = gtSet;

    // Group rows by leaf, preserving lexicographic path order within a leaf.
    std::map<Bipartition, std::vector<std::size_t>> byLeaf;
    for (std::size_t i = 0; i < gtSet.rows.size(); ++i)
        byLeaf[gtSet.labels[i].leaf].push_back(i);
    for (auto& [leaf, rows] : byLeaf) {
        fr.leaves.push_back(leaf);
        fr.rowsOfLeaf.push_back(rows);
    }

    auto basis = enumerateDiagrams(gtSet.p, gtSet.q);
    std::mt19937 rng(seed);

    for (std::size_t l = 0; l < fr.leaves.size(); ++l) {
        const auto& rows = fr.rowsOfLeaf[l];
        const AlgebraElement& eps1 = gtSet.rows[rows[0]];
        Rat m = elementTrace(eps1);
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (elementTrace(gtSet.rows[rows[i]]) != m)
                throw std::runtime_error("m_lambda differs across paths to one leaf");
        if (m == 0) throw std::runtime_error("m_lambda vanishes");
        fr.mLambda.push_back(m);

        std::vector<AlgebraElement> up(rows.size()), down(rows.size());
        std::vector<Rat> s2(rows.size(), Rat(1));
        up[0] = eps1;
        down[0] = eps1;

        bool ok = rows.size() == 1;
        for (int attempt = 0; attempt < retryCap && !ok; ++attempt) {
            AlgebraElement h(gtSet.p, gtSet.q, gtSet.d);
            std::uniform_int_distribution<int> coeff(-9, 9);
            for (const auto& dg : basis) h.addTerm(dg, coeff(rng));
            AlgebraElement probe = h + adjoint(h);

            ok = true;
            for (std::size_t i = 1; i < rows.size(); ++i) {
                const AlgebraElement& epsi = gtSet.rows[rows[i]];
                up[i] = mul(mul(eps1, probe), epsi);
                down[i] = mul(mul(epsi, probe), eps1);
                Rat norm2 = elementTrace(mul(up[i], down[i])) / m;
                if (norm2 < 0)
                    throw std::runtime_error("negative transition norm: broken invariant");
                if (norm2 == 0) {
                    ok = false;  // degenerate probe, retry
                    break;
                }
                s2[i] = norm2;
            }
        }
        if (!ok) throw std::runtime_error("no suitable probe found within the retry cap");
        fr.up.push_back(std::move(up));
        fr.down.push_back(std::move(down));
        fr.sSquared.push_back(std::move(s2));
    }
    return fr;
}

std::vector<BlockData> extractBlocks(const AlgebraElement& x, const GtFrame& fr) {
    if (x != adjoint(x)) throw std::invalid_argument("extractBlocks: x must be self-adjoint");
    std::vector<BlockData> out(fr.leaves.size());
    parallelFor(fr.leaves.size(), [&](std::size_t l) {
        const auto& rows = fr.rowsOfLeaf[l];
        const int dl = static_cast<int>(rows.size());
        BlockData b;
        b.leaf = fr.leaves[l];
        b.dLambda = dl;
        b.mLambda = fr.mLambda[l];
        b.sSquared = fr.sSquared[l];
        b.exact.assign(dl, std::vector<Rat>(dl, Rat(0)));
        b.entries.assign(dl, std::vector<double>(dl, 0.0));
        for (int i = 0; i < dl; ++i) {
            AlgebraElement left = mul(fr.up[l][i], x);
            for (int j = 0; j < dl; ++j) {
                b.exact[i][j] = elementTrace(mul(left, fr.down[l][j])) / b.mLambda;
                double scale = std::sqrt(b.sSquared[i].get_d() * b.sSquared[j].get_d());
                b.entries[i][j] = b.exact[i][j].get_d() / scale;
            }
        }
        out[l] = std::move(b);
    });
    return out;
}

std::vector<BlockData> extractBlocks(const AlgebraElement& x, const IdempotentSet& gtSet,
                                     unsigned seed) {
    return extractBlocks(x, buildGtFrame(gtSet, seed));
}

Int algebraDimension(int p, int q, int d) {
    BratteliGraph g = buildBratteli(p, q, Family::A, d);
    auto counts = pathCountsPerLeaf(g);
    Int sum = 0;
    for (const auto& c : counts) sum += c * c;
    return sum;
}

int oracleAlgebraRank(int p, int q, int d, std::uint64_t memoryBound) {
    auto basis = enumerateDiagrams(p, q);
    const std::uint64_t dim = psiDimension(p, q, d, memoryBound);
    // Vectorize each psi(sigma_j) and run rational row-reduction.
    std::vector<std::map<std::uint64_t, Rat>> rows;
    for (const auto& dg : basis) {
        SparseMatrix m = psi(dg, d, memoryBound);
        std::map<std::uint64_t, Rat> row;
        for (const auto& [k, v] : m.entries) row.emplace(k, v);
        rows.push_back(std::move(row));
    }
    (void)dim;
    int rank = 0;
    std::vector<std::pair<std::uint64_t, std::map<std::uint64_t, Rat>>> pivots;
    for (auto& row : rows) {
        for (const auto& [pk, prow] : pivots) {
            auto it = row.find(pk);
            if (it == row.end()) continue;
            Rat factor = it->second;
            for (const auto& [k, v] : prow) {
                auto jt = row.find(k);
                if (jt == row.end()) {
                    row.emplace(k, -factor * v);
                } else {
                    jt->second -= factor * v;
                    if (jt->second == 0) row.erase(jt);
                }
            }
        }
        if (row.empty()) continue;
        std::uint64_t pk = row.begin()->first;
        Rat lead = row.begin()->second;
        for (auto& [k, v] : row) v /= lead;
        pivots.emplace_back(pk, std::move(row));
        row.clear();
        ++rank;
    }
    return rank;
}

std::string blocksToJson(const std::vector<BlockData>& blocks) {
    std::ostringstream os;
    os << '[';
    for (std::size_t l = 0; l < blocks.size(); ++l) {
        const auto& b = blocks[l];
        if (l) os << ',';
        os << "{\"leaf\":\"" << b.leaf.str() << "\",\"dLambda\":" << b.dLambda
           << ",\"mLambda\":\"" << ratToString(b.mLambda) << "\",\"entries\":[";
        for (int i = 0; i < b.dLambda; ++i) {
            if (i) os << ',';
            os << '[';
            for (int j = 0; j < b.dLambda; ++j) {
                if (j) os << ',';
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.17g", b.entries[i][j]);
                os << buf;
            }
            os << ']';
        }
        os << "]}";
    }
    os << ']';
    return os.str();
}

}  // namespace wbsdp
