#pragma once

#include <complex>
#include <vector>

namespace graphentropy::detail {

/// Forward DFT X_r = sum_k x_k exp(-2 pi i k r / n) for any n:
/// iterative radix-2 for powers of two, Bluestein's chirp-z otherwise.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x);

}  // namespace graphentropy::detail
