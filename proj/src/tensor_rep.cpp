#include "hwcl/tensor_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/SVD>

#include "hwcl/errors.hpp"

namespace hwcl {

namespace {

long long pow_ll(long long base, int exp, long long cap) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / base)
            throw cap_exceeded("tensor dimension n^m exceeds the configured cap");
        v *= base;
    }
    return v;
}

long long factorial_ll(long long k) {
    long long v = 1;
    for (long long i = 2; i <= k; ++i) v *= i;
    return v;
}

// All permutations of {0..m-1} moving only the given 1-based label blocks,
// i.e. the direct product of the symmetric groups on each block.
std::vector<Permutation> block_permutations(int m, const std::vector<std::vector<int>>& blocks) {
    std::vector<Permutation> group;
    Permutation id(m);
    std::iota(id.begin(), id.end(), 0);
    group.push_back(id);
    for (const auto& block : blocks) {
        std::vector<int> sorted_block = block;
        std::sort(sorted_block.begin(), sorted_block.end());
        std::vector<int> image = sorted_block;
        std::vector<Permutation> extended;
        do {
            for (const Permutation& base : group) {
                Permutation sigma = base;
                for (std::size_t t = 0; t < sorted_block.size(); ++t)
                    sigma[sorted_block[t] - 1] = image[t] - 1;
                extended.push_back(std::move(sigma));
            }
        } while (std::next_permutation(image.begin(), image.end()));
        group = std::move(extended);
    }
    return group;
}

} // namespace

Permutation inverse_permutation(const Permutation& sigma) {
    Permutation inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = static_cast<int>(i);
    return inv;
}

int permutation_sign(const Permutation& sigma) {
    std::vector<bool> seen(sigma.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(sigma[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

TableauData build_tableau(const Partition& lam, const TensorCaps& caps) {
    if (lam.size() > caps.max_boxes)
        throw cap_exceeded("build_tableau: |lambda| exceeds the box cap");
    TableauData t;
    t.shape = lam;
    const Partition heights = conjugate(lam);
    const int m = static_cast<int>(lam.size());

    int label = 1;
    t.columns.resize(heights.length());
    t.rows.resize(lam.length());
    for (std::size_t c = 0; c < heights.length(); ++c)
        for (long long r = 0; r < heights.part(c); ++r) {
            t.columns[c].push_back(label);
            t.rows[static_cast<std::size_t>(r)].push_back(label);
            ++label;
        }

    t.row_group = block_permutations(m, t.rows);
    t.col_group = block_permutations(m, t.columns);
    t.col_signs.reserve(t.col_group.size());
    for (const Permutation& c : t.col_group) t.col_signs.push_back(permutation_sign(c));

    for (const auto& row : t.rows) t.f_row *= factorial_ll(static_cast<long long>(row.size()));
    for (const auto& col : t.columns) t.f_col *= factorial_ll(static_cast<long long>(col.size()));
    return t;
}

Eigen::MatrixXcd perm_action(const Permutation& sigma, int n, const TensorCaps& caps) {
    if (n < 1) throw std::invalid_argument("perm_action: n must be positive");
    const int m = static_cast<int>(sigma.size());
    const long long dim = pow_ll(n, m, caps.max_dim);
    const Permutation inv = inverse_permutation(sigma);

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<int> digits(static_cast<std::size_t>(m));
    for (long long idx = 0; idx < dim; ++idx) {
        long long rest = idx;
        for (int t = m - 1; t >= 0; --t) {
            digits[static_cast<std::size_t>(t)] = static_cast<int>(rest % n);
            rest /= n;
        }
        long long out = 0;
        for (int t = 0; t < m; ++t) out = out * n + digits[static_cast<std::size_t>(inv[t])];
        rho(out, idx) = 1.0;
    }
    return rho;
}

YoungProjectors young_projector(const Partition& lam, int n, const TensorCaps& caps) {
    const TableauData t = build_tableau(lam, caps);
    const int m = static_cast<int>(lam.size());
    const long long dim = pow_ll(n, m, caps.max_dim);

    Eigen::MatrixXcd p_row = Eigen::MatrixXcd::Zero(dim, dim);
    for (const Permutation& r : t.row_group) p_row += perm_action(r, n, caps);
    p_row /= static_cast<double>(t.f_row);

    Eigen::MatrixXcd p_col = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t i = 0; i < t.col_group.size(); ++i)
        p_col += static_cast<double>(t.col_signs[i]) * perm_action(t.col_group[i], n, caps);
    p_col /= static_cast<double>(t.f_col);

    YoungProjectors out;
    out.p_lambda = static_cast<double>(t.f_col * t.f_row) * (p_col * p_row);
    out.p_col = std::move(p_col);
    out.p_row = std::move(p_row);
    return out;
}

Eigen::VectorXcd apply_tensor_power(const Eigen::MatrixXcd& g, const Eigen::VectorXcd& x, int m) {
    const int n = static_cast<int>(g.rows());
    if (g.cols() != n) throw std::invalid_argument("apply_tensor_power: g must be square");
    long long expected = 1;
    for (int t = 0; t < m; ++t) expected *= n;
    if (x.size() != expected)
        throw std::invalid_argument("apply_tensor_power: vector size is not n^m");
    Eigen::VectorXcd cur = x;
    Eigen::VectorXcd next(x.size());
    long long stride = 1;
    for (int slot = m - 1; slot >= 0; --slot) {
        next.setZero();
        for (long long idx = 0; idx < cur.size(); ++idx) {
            const std::complex<double> v = cur(idx);
            if (v == std::complex<double>{}) continue;
            const int d = static_cast<int>((idx / stride) % n);
            const long long base = idx - static_cast<long long>(d) * stride;
            for (int j = 0; j < n; ++j) next(base + j * stride) += g(j, d) * v;
        }
        cur.swap(next);
        stride *= n;
    }
    return cur;
}

namespace {

void check_unitary(const Eigen::MatrixXcd& g, double tol) {
    const Eigen::MatrixXcd defect = g.adjoint() * g - Eigen::MatrixXcd::Identity(g.rows(), g.cols());
    const double norm = defect.jacobiSvd().singularValues()(0);
    if (!(norm <= tol))
        throw numeric_error("group element is not unitary within tolerance");
}

// Orthonormal basis of image(P) from the left singular vectors, phases
// fixed so the largest-modulus entry of each column is real positive.
Eigen::MatrixXcd image_basis(const Eigen::MatrixXcd& p) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(p, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = (sv.size() > 0) ? 1e-8 * sv(0) : 0.0;
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) ++rank;
    Eigen::MatrixXcd u = svd.matrixU().leftCols(rank);
    for (Eigen::Index c = 0; c < rank; ++c) {
        Eigen::Index lead = 0;
        u.col(c).cwiseAbs().maxCoeff(&lead);
        const std::complex<double> z = u(lead, c);
        const double a = std::abs(z);
        if (a > 0.0) u.col(c) *= std::conj(z) / a;
    }
    return u;
}

Partition sorted_shifted_carrier(const FiniteWeight& w, int n, long long* det_power) {
    // sorted length-n extension, shifted by its minimum to a partition
    std::vector<long long> ext(w.entries());
    ext.resize(static_cast<std::size_t>(n), 0);
    std::sort(ext.begin(), ext.end(), std::greater<>());
    const long long shift = ext.back();
    *det_power = shift;
    std::vector<long long> parts;
    for (long long v : ext)
        if (v - shift > 0) parts.push_back(v - shift);
    return Partition{std::move(parts)};
}

} // namespace

RepRealization build_realization(const FiniteWeight& w, int n, const TensorCaps& caps) {
    if (n < 1) throw std::invalid_argument("build_realization: ambient n must be positive");
    const auto [plus, minus] = split_signs(w);
    if (static_cast<long long>(plus.length() + minus.length()) > n)
        throw std::invalid_argument(
            "build_realization: ambient n too small for the nonzero entries of the weight");

    RepRealization rep;
    rep.weight = w;
    rep.ambient = n;

    if (minus.empty() || plus.empty()) {
        rep.conjugated = plus.empty() && !minus.empty();
        rep.carrier = rep.conjugated ? minus : plus;
    } else {
        rep.det_power = 0;
        rep.carrier = sorted_shifted_carrier(w, n, &rep.det_power);
    }

    if (rep.carrier.empty()) {
        rep.dim = 1;
        rep.isometry = Eigen::MatrixXcd::Identity(1, 1);
        return rep;
    }

    const Eigen::MatrixXcd p = young_projector(rep.carrier, n, caps).p_lambda;
    rep.isometry = image_basis(p);
    rep.dim = rep.isometry.cols();

    const Eigen::MatrixXcd gram =
        rep.isometry.adjoint() * rep.isometry - Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
    if (gram.cwiseAbs().maxCoeff() > 1e-10)
        throw numeric_error("build_realization: isometry columns lost orthonormality");

    Tuple check(rep.carrier.parts());
    check.resize(static_cast<std::size_t>(n), 0);
    if (rep.dim != weyl_dim(check))
        throw numeric_error("build_realization: rank of P_lambda does not match weyl_dim");
    return rep;
}

Eigen::MatrixXcd realize(const RepRealization& rep, const Eigen::MatrixXcd& g) {
    if (g.rows() != rep.ambient || g.cols() != rep.ambient)
        throw std::invalid_argument("realize: group element has wrong dimension");
    check_unitary(g, 1e-10);

    const int boxes = static_cast<int>(rep.carrier.size());
    Eigen::MatrixXcd compressed(rep.dim, rep.dim);
    if (boxes == 0) {
        compressed = Eigen::MatrixXcd::Identity(1, 1);
    } else {
        Eigen::MatrixXcd gv(rep.isometry.rows(), rep.dim);
        for (long long c = 0; c < rep.dim; ++c)
            gv.col(c) = apply_tensor_power(g, rep.isometry.col(c), boxes);
        compressed = rep.isometry.adjoint() * gv;
    }

    if (rep.det_power != 0) {
        std::complex<double> det = Eigen::PartialPivLU<Eigen::MatrixXcd>(g).determinant();
        std::complex<double> factor = 1.0;
        long long e = rep.det_power;
        if (e < 0) {
            det = std::conj(det) / std::norm(det);
            e = -e;
        }
        for (long long i = 0; i < e; ++i) factor *= det;
        compressed *= factor;
    }
    if (rep.conjugated) return compressed.conjugate();
    return compressed;
}

Eigen::MatrixXcd realize(const FiniteWeight& w, int n, const Eigen::MatrixXcd& g,
                         const TensorCaps& caps) {
    return realize(build_realization(w, n, caps), g);
}

std::complex<double> character(const FiniteWeight& w, int n, const EvalPoint& x,
                               const TensorCaps& caps) {
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("character: point size must equal ambient n");
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) g(i, i) = x[static_cast<std::size_t>(i)];
    return realize(w, n, g, caps).trace();
}

double SparseVec::norm() const {
    double s = 0.0;
    for (const auto& [idx, v] : entries) s += std::norm(v);
    return std::sqrt(s);
}

Eigen::VectorXcd SparseVec::dense() const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
    for (const auto& [idx, v] : entries) out(idx) += v;
    return out;
}

std::complex<double> dot(const SparseVec& a, const SparseVec& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("dot: sparse vectors live in different spaces");
    std::complex<double> s = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.entries.size() && j < b.entries.size()) {
        if (a.entries[i].first < b.entries[j].first) ++i;
        else if (a.entries[i].first > b.entries[j].first) ++j;
        else s += a.entries[i++].second * std::conj(b.entries[j++].second);
    }
    return s;
}

SparseVec basis_vector(int k, const Partition& lam, int ambient_n) {
    if (k < 1) throw std::out_of_range("basis_vector: k must be >= 1");
    const Partition heights = conjugate(lam);
    if (k + heights.part(0) > ambient_n)
        throw std::out_of_range("basis_vector: k + lambda'_1 exceeds the ambient dimension");

    SparseVec v;
    v.ambient = ambient_n;
    v.factors = static_cast<int>(lam.size());
    v.dim = 1;
    for (int t = 0; t < v.factors; ++t) v.dim *= ambient_n;
    v.entries.emplace_back(0, 1.0);

    double f_col = 1.0;
    for (std::size_t c = 0; c < heights.length(); ++c) {
        const int h = static_cast<int>(heights.part(c));
        f_col *= static_cast<double>(factorial_ll(h));
        // wedge of e_{k+1},...,e_{k+h}: signed sum over orderings, 1/h!
        std::vector<int> order(static_cast<std::size_t>(h));
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::pair<long long, std::complex<double>>> wedge;
        const double inv_fact = 1.0 / static_cast<double>(factorial_ll(h));
        long long col_dim = 1;
        for (int t = 0; t < h; ++t) col_dim *= ambient_n;
        do {
            long long idx = 0;
            for (int t = 0; t < h; ++t) idx = idx * ambient_n + (k + order[static_cast<std::size_t>(t)]);
            Permutation sigma(order.begin(), order.end());
            wedge.emplace_back(idx, inv_fact * static_cast<double>(permutation_sign(sigma)));
        } while (std::next_permutation(order.begin(), order.end()));
        std::vector<std::pair<long long, std::complex<double>>> merged;
        merged.reserve(v.entries.size() * wedge.size());
        for (const auto& [i0, c0] : v.entries)
            for (const auto& [i1, c1] : wedge)
                merged.emplace_back(i0 * col_dim + i1, c0 * c1);
        v.entries = std::move(merged);
    }
    const double scale = std::sqrt(f_col);
    for (auto& [idx, c] : v.entries) c *= scale;
    std::sort(v.entries.begin(), v.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

} // namespace hwcl
