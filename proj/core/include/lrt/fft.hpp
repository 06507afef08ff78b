#pragma once

#include <complex>
#include <vector>

namespace lrt::fft {

// In-place 3-D c2c transforms on an n*n*n row-major array. Plans are cached
// per n and created with FFTW_ESTIMATE so repeated runs are bit-identical.
void forward3(int n, std::complex<double>* data);
void backward3(int n, std::complex<double>* data);  // unnormalized

}  // namespace lrt::fft
