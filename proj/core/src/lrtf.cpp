#include "lrt/lrtf.hpp"

#include <cstring>
#include <fstream>

#include "lrt/errors.hpp"

namespace lrt {

namespace {

void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& os, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

std::uint64_t get_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

}  // namespace

std::uint64_t LrtfArray::element_count() const {
  std::uint64_t c = 1;
  for (auto s : shape) c *= s;
  return c;
}

void lrtf_write(const std::string& path, const LrtfArray& arr) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("lrtf_write: cannot open " + path);
  os.write("LRTF", 4);
  put_u32(os, 1);
  const unsigned char dtype = static_cast<unsigned char>(arr.dtype);
  const unsigned char ndim = static_cast<unsigned char>(arr.shape.size());
  os.write(reinterpret_cast<const char*>(&dtype), 1);
  os.write(reinterpret_cast<const char*>(&ndim), 1);
  const char pad[2] = {0, 0};
  os.write(pad, 2);
  for (auto s : arr.shape) put_u64(os, s);
  const std::uint64_t count = arr.element_count();
  // x86-64 is little-endian with IEEE doubles; write payload directly.
  if (arr.dtype == 0) {
    if (arr.real_data.size() != count) throw Error("lrtf_write: shape/payload mismatch");
    os.write(reinterpret_cast<const char*>(arr.real_data.data()),
             static_cast<std::streamsize>(count * sizeof(double)));
  } else if (arr.dtype == 1) {
    if (arr.cplx_data.size() != count) throw Error("lrtf_write: shape/payload mismatch");
    os.write(reinterpret_cast<const char*>(arr.cplx_data.data()),
             static_cast<std::streamsize>(count * 2 * sizeof(double)));
  } else {
    throw Error("lrtf_write: unknown dtype");
  }
  if (!os) throw Error("lrtf_write: write failed for " + path);
}

LrtfArray lrtf_read(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("lrtf_read: cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (std::memcmp(magic, "LRTF", 4) != 0) throw Error("lrtf_read: bad magic in " + path);
  const std::uint32_t version = get_u32(is);
  if (version != 1) throw Error("lrtf_read: unsupported version");
  unsigned char dtype = 0, ndim = 0;
  is.read(reinterpret_cast<char*>(&dtype), 1);
  is.read(reinterpret_cast<char*>(&ndim), 1);
  char pad[2];
  is.read(pad, 2);
  LrtfArray arr;
  arr.dtype = dtype;
  arr.shape.resize(ndim);
  for (auto& s : arr.shape) s = get_u64(is);
  const std::uint64_t count = arr.element_count();
  if (dtype == 0) {
    arr.real_data.resize(count);
    is.read(reinterpret_cast<char*>(arr.real_data.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
  } else if (dtype == 1) {
    arr.cplx_data.resize(count);
    is.read(reinterpret_cast<char*>(arr.cplx_data.data()),
            static_cast<std::streamsize>(count * 2 * sizeof(double)));
  } else {
    throw Error("lrtf_read: unknown dtype");
  }
  if (!is) throw Error("lrtf_read: truncated file " + path);
  return arr;
}

std::string lrtf_sidecar_path(const std::string& lrtf_path) {
  const auto dot = lrtf_path.find_last_of('.');
  const auto slash = lrtf_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return lrtf_path + ".json";
  return lrtf_path.substr(0, dot) + ".json";
}

void lrtf_write_sidecar(const std::string& lrtf_path, const std::string& meta_json) {
  const std::string p = lrtf_sidecar_path(lrtf_path);
  std::ofstream os(p);
  if (!os) throw Error("lrtf_write_sidecar: cannot open " + p);
  os << meta_json << "\n";
}

}  // namespace lrt
