#include "qact/clifford.hpp"

namespace qact {

GammaSet build_dirac() {
    GammaSet gs;
    const Scalar one(1);
    const Scalar im = Scalar::i();

    Mat g0(4);
    g0.at(1, 1) = one;
    g0.at(2, 2) = one;
    g0.at(3, 3) = -one;
    g0.at(4, 4) = -one;

    Mat g1(4);
    g1.at(1, 4) = one;
    g1.at(2, 3) = one;
    g1.at(3, 2) = -one;
    g1.at(4, 1) = -one;

    Mat g2(4);
    g2.at(1, 4) = -im;
    g2.at(2, 3) = im;
    g2.at(3, 2) = im;
    g2.at(4, 1) = -im;

    Mat g3(4);
    g3.at(1, 3) = one;
    g3.at(2, 4) = -one;
    g3.at(3, 1) = -one;
    g3.at(4, 2) = one;

    gs.g = {g0, g1, g2, g3};
    return gs;
}

bool check_anticommutation(const GammaSet& gs) {
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu; nu < 4; ++nu) {
            Mat anti = gs.g[mu] * gs.g[nu] + gs.g[nu] * gs.g[mu];
            Mat expected(4);
            if (mu == nu) {
                Scalar eta = (mu == 0) ? Scalar(2) : Scalar(-2);
                expected = Mat::identity(4) * eta;
            }
            if (anti != expected) return false;
        }
    }
    return true;
}

Basis clifford_basis(const GammaSet& gs) {
    std::vector<Mat> products;
    products.push_back(Mat::identity(4));
    for (int mu = 0; mu < 4; ++mu) products.push_back(gs.g[mu]);
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu + 1; nu < 4; ++nu) products.push_back(gs.g[mu] * gs.g[nu]);
    }
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu + 1; nu < 4; ++nu) {
            for (int rho = nu + 1; rho < 4; ++rho) {
                products.push_back(gs.g[mu] * gs.g[nu] * gs.g[rho]);
            }
        }
    }
    products.push_back(gs.g[0] * gs.g[1] * gs.g[2] * gs.g[3]);

    Basis b = rref_mats(products);
    if (b.dim() != 16) {
        throw DegenerateGammaSet("canonical gamma products have rank " +
                                 std::to_string(b.dim()) + ", expected 16");
    }
    return b;
}

}  // namespace qact
