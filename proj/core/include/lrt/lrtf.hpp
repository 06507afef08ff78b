#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace lrt {

// LRTF binary container shared by every module:
//   bytes 0-3   magic "LRTF"
//   u32 LE      version = 1
//   u8          dtype: 0 = float64, 1 = complex128 (interleaved re,im)
//   u8          ndim
//   u16         zero padding
//   ndim x u64  LE shape
//   payload     row-major little-endian
// A JSON sidecar (same basename, extension .json) carries grid metadata and
// provenance.
struct LrtfArray {
  int dtype = 0;
  std::vector<std::uint64_t> shape;
  std::vector<double> real_data;                 // dtype 0
  std::vector<std::complex<double>> cplx_data;   // dtype 1

  std::uint64_t element_count() const;
};

void lrtf_write(const std::string& path, const LrtfArray& arr);
LrtfArray lrtf_read(const std::string& path);

// Sidecar helpers: `meta` is a serialized JSON object.
void lrtf_write_sidecar(const std::string& lrtf_path, const std::string& meta_json);
std::string lrtf_sidecar_path(const std::string& lrtf_path);

}  // namespace lrt
