// Braiding of V1 with itself at ell = 3, its eigenvalues on two test vectors,
// and the statistics of W1.

#include <iostream>

#include "slq/slq.hpp"

int main() {
    const int ell = 3;
    slq::Pairing R(ell);

    const slq::Corep V1 = slq::build_V(1, ell);
    const slq::Corep W1 = slq::build_W(1, ell);

    const slq::BraidingMatrix psi = slq::braiding_matrix(V1, V1, R);
    for (std::size_t i = 0; i < psi.matrix.rows(); ++i) {
        std::cout << psi.row_labels[i] << "  ->";
        for (std::size_t j = 0; j < psi.matrix.cols(); ++j)
            std::cout << "  " << slq::to_half_power_string(psi.matrix(i, j));
        std::cout << '\n';
    }

    // a⊗c − q c⊗a spans the eigenvalue-1 line.
    const slq::Cyclotomic q = slq::q_power(ell, 1);
    slq::ScalarVector v(4, slq::Cyclotomic(ell));
    v[1] = slq::Cyclotomic(ell, 1);
    v[2] = -q;
    const slq::ScalarVector image = slq::apply_row(v, psi.matrix);
    std::cout << "Psi(a⊗c - q c⊗a) == a⊗c - q c⊗a: " << std::boolalpha << (image == v) << '\n';

    std::cout << "sign of Psi on W1⊗W1: " << slq::statistics_sign(W1, W1, R).value_or(0) << '\n';
    std::cout << "sign of Psi on V1⊗W1: " << slq::statistics_sign(V1, W1, R).value_or(0) << '\n';
    std::cout << "braid relation on V1⊗V1⊗W1: " << slq::check_braid_relation(V1, V1, W1, R) << '\n';
}
