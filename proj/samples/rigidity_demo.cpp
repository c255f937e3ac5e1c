// Builds R(F_n^1) for a few n and prints its derivation and cohomology counts.
#include <iostream>

#include <leibniz/leibniz.hpp>

int main()
{
    using namespace leibniz;
    for (std::size_t n = 4; n <= 6; ++n) {
        const auto R = families::r_f1(n);
        const auto rep = hl2(R);
        std::cout << "R(F_" << n << "^1): dim " << R.dim() << ", Der " << rep.dim_der << ", ZL2 " << rep.dim_zl2
                  << ", BL2 " << rep.dim_bl2 << ", HL2 " << rep.dim_hl2 << ", " << to_string(rep.rigidity) << "\n";
    }
}
