#include "mulab/tensor.hpp"

#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mulab/eigen_bridge.hpp"

namespace mulab {

int SpaceSignature::total() const {
    long long t = 1;
    for (int d : dims) {
        t *= d;
        if (t > (1 << 30)) throw std::invalid_argument("signature: total dimension overflow");
    }
    return static_cast<int>(t);
}

void SpaceSignature::validate() const {
    if (dims.empty()) throw std::invalid_argument("signature: no legs");
    for (int d : dims)
        if (d <= 0) throw std::invalid_argument("signature: leg dimensions must be positive");
}

std::string SpaceSignature::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
    os << ")";
    return os.str();
}

ComplexMatrix flip(int d1, int d2) {
    if (d1 <= 0 || d2 <= 0) throw std::invalid_argument("flip: non-positive dimension");
    ComplexMatrix s(d1 * d2, d1 * d2);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j) s.at(j * d1 + i, i * d2 + j) = 1.0;
    return s;
}

namespace {

std::vector<long long> strides_of(const SpaceSignature& sig) {
    const int L = sig.legs();
    std::vector<long long> st(static_cast<std::size_t>(L));
    long long acc = 1;
    for (int l = L - 1; l >= 0; --l) {
        st[static_cast<std::size_t>(l)] = acc;
        acc *= sig.dims[static_cast<std::size_t>(l)];
    }
    return st;
}

void check_legs(const std::vector<int>& legs, int L, const char* who) {
    if (legs.empty()) throw std::invalid_argument(std::string(who) + ": empty leg list");
    int prev = 0;
    for (int l : legs) {
        if (l < 1 || l > L)
            throw std::invalid_argument(std::string(who) + ": leg index out of range");
        if (l <= prev)
            throw std::invalid_argument(std::string(who) + ": legs must be strictly increasing");
        prev = l;
    }
}

}  // namespace

ComplexMatrix embed_legs(const ComplexMatrix& op, const std::vector<int>& legs,
                         const SpaceSignature& sig) {
    sig.validate();
    check_legs(legs, sig.legs(), "embed_legs");
    long long m = 1;
    for (int l : legs) m *= sig.dim(l);
    if (!op.is_square() || op.rows() != m)
        throw std::invalid_argument("embed_legs: operator side " + std::to_string(op.rows()) +
                                    " does not match selected legs of " + sig.str());
    const int N = sig.total();
    const auto st = strides_of(sig);

    // spread[oc] = flat ambient offset contributed by the selected-leg
    // components of the operator column index oc.
    const int mm = static_cast<int>(m);
    std::vector<long long> spread(static_cast<std::size_t>(mm));
    for (int oc = 0; oc < mm; ++oc) {
        long long rest = oc, off = 0;
        for (auto it = legs.rbegin(); it != legs.rend(); ++it) {
            const int d = sig.dim(*it);
            off += (rest % d) * st[static_cast<std::size_t>(*it - 1)];
            rest /= d;
        }
        spread[static_cast<std::size_t>(oc)] = off;
    }

    ComplexMatrix out(N, N);
    for (int r = 0; r < N; ++r) {
        // Decompose the ambient row into selected part (an operator row
        // index) and the complement (shared by row and column).
        long long orow = 0, base = r;
        for (int l : legs) {
            const int d = sig.dim(l);
            const long long comp = (r / st[static_cast<std::size_t>(l - 1)]) % d;
            orow = orow * d + comp;
            base -= comp * st[static_cast<std::size_t>(l - 1)];
        }
        const int orow_i = static_cast<int>(orow);
        for (int oc = 0; oc < mm; ++oc) {
            const cd v = op.at(orow_i, oc);
            if (v.real() == 0.0 && v.imag() == 0.0) continue;
            out.at(r, static_cast<int>(base + spread[static_cast<std::size_t>(oc)])) = v;
        }
    }
    return out;
}

ComplexMatrix leg_permutation_matrix(const SpaceSignature& sig, const std::vector<int>& perm) {
    sig.validate();
    const int L = sig.legs();
    if (static_cast<int>(perm.size()) != L)
        throw std::invalid_argument("leg permutation: wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(L), false);
    for (int p : perm) {
        if (p < 1 || p > L) throw std::invalid_argument("leg permutation: index out of range");
        if (seen[static_cast<std::size_t>(p - 1)])
            throw std::invalid_argument("leg permutation: repeated leg");
        seen[static_cast<std::size_t>(p - 1)] = true;
    }
    SpaceSignature out_sig;
    out_sig.dims.reserve(static_cast<std::size_t>(L));
    for (int p : perm) out_sig.dims.push_back(sig.dim(p));
    const auto st_in = strides_of(sig);
    const auto st_out = strides_of(out_sig);
    const int N = sig.total();
    ComplexMatrix P(N, N);
    for (int r = 0; r < N; ++r) {
        long long target = 0;
        for (int i = 0; i < L; ++i) {
            const int src = perm[static_cast<std::size_t>(i)];
            const int d = sig.dim(src);
            const long long comp = (r / st_in[static_cast<std::size_t>(src - 1)]) % d;
            target += comp * st_out[static_cast<std::size_t>(i)];
        }
        P.at(static_cast<int>(target), r) = 1.0;
    }
    return P;
}

ComplexMatrix permute_legs(const ComplexMatrix& x, const SpaceSignature& sig,
                           const std::vector<int>& perm) {
    const int N = sig.total();
    if (!x.is_square() || x.rows() != N)
        throw std::invalid_argument("permute_legs: operator does not match signature");
    const ComplexMatrix P = leg_permutation_matrix(sig, perm);
    return P * x * P.adjoint();
}

double unitarity_residual(const ComplexMatrix& x) {
    if (!x.is_square()) return 1.0;
    const ComplexMatrix id = ComplexMatrix::identity(x.rows());
    const ComplexMatrix xa = x.adjoint();
    return std::max(residual(xa * x, id), residual(x * xa, id));
}

bool is_unitary(const ComplexMatrix& x, double tol) { return unitarity_residual(x) <= tol; }

ExtractResult extract_trivial_leg(const ComplexMatrix& x, const SpaceSignature& sig, int leg,
                                  double tol) {
    sig.validate();
    const int L = sig.legs();
    if (leg < 1 || leg > L) throw std::invalid_argument("extract_trivial_leg: bad leg");
    if (!x.is_square() || x.rows() != sig.total())
        throw std::invalid_argument("extract_trivial_leg: operator does not match signature");
    if (L == 1) {
        // Removing the only leg leaves a scalar; treat as the 1x1 mean trace.
        ComplexMatrix y(1, 1);
        const int d = sig.dim(1);
        for (int t = 0; t < d; ++t) y.at(0, 0) += x.at(t, t);
        y.at(0, 0) /= static_cast<double>(d);
        ExtractResult res;
        res.op = y;
        ComplexMatrix scaled = ComplexMatrix::identity(d);
        scaled *= y.at(0, 0);
        res.residual = residual(x, scaled);
        res.ok = res.residual <= tol;
        return res;
    }

    SpaceSignature rest;
    std::vector<int> rest_legs;
    for (int l = 1; l <= L; ++l)
        if (l != leg) {
            rest.dims.push_back(sig.dim(l));
            rest_legs.push_back(l);
        }
    const int M = rest.total();
    const int d = sig.dim(leg);
    const auto st = strides_of(sig);
    const auto rst = strides_of(rest);
    const long long leg_stride = st[static_cast<std::size_t>(leg - 1)];

    // Flat ambient offset of a reduced multi-index (leg component zero).
    auto lift = [&](int reduced) {
        long long off = 0;
        for (std::size_t i = 0; i < rest_legs.size(); ++i) {
            const int dl = rest.dims[i];
            const long long comp = (reduced / rst[i]) % dl;
            off += comp * st[static_cast<std::size_t>(rest_legs[i] - 1)];
        }
        return off;
    };

    ComplexMatrix y(M, M);
    for (int r = 0; r < M; ++r) {
        const long long rbase = lift(r);
        for (int c = 0; c < M; ++c) {
            const long long cbase = lift(c);
            cd acc = 0.0;
            for (int t = 0; t < d; ++t)
                acc += x.at(static_cast<int>(rbase + t * leg_stride),
                            static_cast<int>(cbase + t * leg_stride));
            y.at(r, c) = acc / static_cast<double>(d);
        }
    }

    ExtractResult res;
    res.op = y;
    res.residual = residual(x, embed_legs(y, rest_legs, sig));
    res.ok = res.residual <= tol;
    return res;
}

ComplexMatrix random_unitary(int n, std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("random_unitary: bad dimension");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    EigenCMat a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const double re = g(rng);
            const double im = g(rng);
            a(r, c) = cd(re, im);
        }
    Eigen::HouseholderQR<EigenCMat> qr(a);
    EigenCMat q = qr.householderQ() * EigenCMat::Identity(n, n);
    EigenCMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < n; ++c) {
        const cd rc = r(c, c);
        const double m = std::abs(rc);
        const cd phase = (m == 0.0) ? cd(1.0, 0.0) : rc / m;
        q.col(c) *= phase;
    }
    return from_eigen(q);
}

}  // namespace mulab
