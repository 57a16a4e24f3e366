#include "mulab/examples.hpp"

#include <map>
#include <stdexcept>

namespace mulab::examples {

MultiplicativeUnitary z2_mu() { return from_group(GroupTable::cyclic(2)); }
MultiplicativeUnitary z3_mu() { return from_group(GroupTable::cyclic(3)); }
MultiplicativeUnitary s3_mu() { return from_group(GroupTable::symmetric(3)); }

namespace {

void validate_action(const GroupTable& q, const GroupTable& n,
                     const std::vector<std::vector<int>>& beta) {
    if (static_cast<int>(beta.size()) != q.n) {
        throw std::invalid_argument("action_bmu: beta must have one row per element of Q");
    }
    const int e = q.identity();
    for (int a = 0; a < q.n; ++a) {
        if (static_cast<int>(beta[a].size()) != n.n) {
            throw std::invalid_argument("action_bmu: beta rows must have |N| entries");
        }
        std::vector<bool> seen(n.n, false);
        for (int x = 0; x < n.n; ++x) {
            if (beta[a][x] < 0 || beta[a][x] >= n.n || seen[beta[a][x]]) {
                throw std::invalid_argument("action_bmu: beta[" + std::to_string(a) +
                                            "] is not a permutation of N");
            }
            seen[beta[a][x]] = true;
        }
        for (int x = 0; x < n.n; ++x)
            for (int y = 0; y < n.n; ++y) {
                if (beta[a][n.op(x, y)] != n.op(beta[a][x], beta[a][y])) {
                    throw std::invalid_argument("action_bmu: beta[" + std::to_string(a) +
                                                "] is not an automorphism of N");
                }
            }
    }
    for (int x = 0; x < n.n; ++x) {
        if (beta[e][x] != x) throw std::invalid_argument("action_bmu: beta at the identity must be trivial");
    }
    for (int a = 0; a < q.n; ++a)
        for (int b = 0; b < q.n; ++b)
            for (int x = 0; x < n.n; ++x) {
                if (beta[q.op(a, b)][x] != beta[a][beta[b][x]]) {
                    throw std::invalid_argument("action_bmu: beta is not a homomorphism");
                }
            }
}

}  // namespace

BraidedMU action_bmu(const GroupTable& q, const GroupTable& n,
                     const std::vector<std::vector<int>>& beta) {
    validate_action(q, n, beta);
    const int dH = q.n, dL = n.n;
    const ComplexMatrix w = from_group(q).w;
    const ComplexMatrix u = ComplexMatrix::identity(dL * dH);
    ComplexMatrix v(dH * dL, dH * dL);
    for (int a = 0; a < dH; ++a)
        for (int x = 0; x < dL; ++x) v.at(a * dL + beta[a][x], a * dL + x) = 1.0;
    const ComplexMatrix f = from_group(n).w;
    return make_braided_mu(w, u, v, f, dH, dL);
}

BraidedMU z2_on_z3_bmu() {
    // The nontrivial element of Z/2 inverts Z/3.
    return action_bmu(GroupTable::cyclic(2), GroupTable::cyclic(3), {{0, 1, 2}, {0, 2, 1}});
}

MixedPair mixed_pair_z2() {
    const GroupTable g = GroupTable::cyclic(2);
    const MultiplicativeUnitary m = from_group(g);
    MixedPair out;
    out.rho = canonical_absorber(m);

    // Grades of the family members' basis vectors: the regular object
    // grades delta_a by a, and grades multiply under the tensor product
    // (rho_rho is ordered with the first factor slowest).
    const std::map<std::string, std::vector<int>> grades = {
        {"unit", {0}}, {"unit2", {0, 0}}, {"rho", {0, 1}}, {"rho_rho", {0, 1, 1, 0}}};
    const cd phase[4] = {cd(1, 0), cd(-1, 0), cd(0, 1), cd(0, -1)};
    const int d = 2;

    for (int phi_code = 0; phi_code < 16; ++phi_code) {
        // phi(c, g), c and g in {0, 1}, packed two bits per c.
        int phi[2][2];
        for (int c = 0; c < 2; ++c)
            for (int gr = 0; gr < 2; ++gr) phi[c][gr] = (phi_code >> (2 * c + gr)) & 1;
        for (int chi_code = 0; chi_code < 256; ++chi_code) {
            cd chi[2][2];
            for (int c = 0; c < 2; ++c)
                for (int gr = 0; gr < 2; ++gr)
                    chi[c][gr] = phase[(chi_code >> (2 * (2 * c + gr))) & 3];

            AbsorberCandidate lam;
            lam.side = Side::Left;
            lam.object_id = out.rho.object_id;
            for (const AbsorberEntry& e : out.rho.family) {
                const std::vector<int>& gv = grades.at(e.id);
                AbsorberEntry le;
                le.id = e.id;
                le.carrier_dim = e.carrier_dim;
                le.trivial = e.trivial;
                le.op = ComplexMatrix(d * e.carrier_dim, d * e.carrier_dim);
                for (int c = 0; c < d; ++c)
                    for (int j = 0; j < e.carrier_dim; ++j) {
                        le.op.at(phi[c][gv[j]] * e.carrier_dim + j, c * e.carrier_dim + j) =
                            chi[c][gv[j]];
                    }
                lam.family.push_back(std::move(le));
            }
            lam.intertwiners = out.rho.intertwiners;
            lam.tensor_pairs = out.rho.tensor_pairs;

            if (!antimultiplicative_check(lam.entry(lam.object_id).op, d).passed) {
                ++out.searched;
                continue;
            }
            if (!verify_absorber(lam).passed) {
                ++out.searched;
                continue;
            }
            if (!mixed_system_check(out.rho, lam).passed) {
                ++out.searched;
                continue;
            }
            out.lam = std::move(lam);
            return out;
        }
    }
    throw std::runtime_error("mixed_pair_z2: no rule passed every filter");
}

}  // namespace mulab::examples
