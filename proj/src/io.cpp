#include "djsense/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace djsense {

namespace {

void put_u32(std::ostream &out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char *>(b), 4);
}

std::uint32_t get_u32(std::istream &in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char *>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f32(std::ostream &out, float v) {
  static_assert(sizeof(float) == 4);
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  put_u32(out, bits);
}

float get_f32(std::istream &in) {
  std::uint32_t bits = get_u32(in);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

std::ifstream open_for_read(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

std::uint64_t file_payload_bytes(std::istream &in) {
  const auto pos = in.tellg();
  in.seekg(0, std::ios::end);
  const auto end = in.tellg();
  in.seekg(pos);
  return static_cast<std::uint64_t>(end - pos);
}

void check_magic(std::istream &in, const char expect[4], const std::string &what) {
  char magic[4] = {0, 0, 0, 0};
  in.read(magic, 4);
  if (!in || std::memcmp(magic, expect, 4) != 0)
    throw std::runtime_error("not " + what + " file");
}

}  // namespace

void write_mck(const MulticoilKSpace &data, const std::string &path) {
  data.validate();
  // reject non-finite samples before the file is created
  for (const auto &g : data.coils)
    for (const auto &v : g.data)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::invalid_argument("write_mck: non-finite sample");

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot open for writing: " + path);
  out.write("MCK1", 4);
  put_u32(out, static_cast<std::uint32_t>(data.num_coils()));
  put_u32(out, static_cast<std::uint32_t>(data.height()));
  put_u32(out, static_cast<std::uint32_t>(data.width()));
  for (const auto &g : data.coils)
    for (const auto &v : g.data) {
      put_f32(out, static_cast<float>(v.real()));
      put_f32(out, static_cast<float>(v.imag()));
    }
  if (!out)
    throw std::runtime_error("write failed: " + path);
}

MulticoilKSpace read_mck(const std::string &path) {
  auto in = open_for_read(path);
  check_magic(in, "MCK1", "an MCK");
  const std::uint32_t c = get_u32(in);
  const std::uint32_t h = get_u32(in);
  const std::uint32_t w = get_u32(in);
  if (!in)
    throw std::runtime_error("read_mck: truncated header in " + path);
  if (c < 1 || h < 1 || w < 1)
    throw std::runtime_error("read_mck: bad dimensions in " + path);
  const std::uint64_t expected = static_cast<std::uint64_t>(c) * h * w * 8;
  const std::uint64_t have = file_payload_bytes(in);
  if (have != expected)
    throw std::runtime_error("read_mck: size mismatch, expected " + std::to_string(expected + 16) +
                             " bytes");
  MulticoilKSpace data(static_cast<int>(c), static_cast<int>(h), static_cast<int>(w));
  for (auto &g : data.coils)
    for (auto &v : g.data) {
      const float re = get_f32(in);
      const float im = get_f32(in);
      if (!std::isfinite(re) || !std::isfinite(im))
        throw std::runtime_error("read_mck: non-finite sample in " + path);
      v = Complex(re, im);
    }
  return data;
}

void write_mask(const SamplingMask &mask, const std::string &path) {
  mask.validate();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot open for writing: " + path);
  out.write("MSK1", 4);
  put_u32(out, static_cast<std::uint32_t>(mask.height));
  put_u32(out, static_cast<std::uint32_t>(mask.width));
  put_u32(out, static_cast<std::uint32_t>(mask.acs_width));
  out.write(reinterpret_cast<const char *>(mask.columns.data()),
            static_cast<std::streamsize>(mask.columns.size()));
  if (!out)
    throw std::runtime_error("write failed: " + path);
}

SamplingMask read_mask(const std::string &path) {
  auto in = open_for_read(path);
  check_magic(in, "MSK1", "an MSK");
  const std::uint32_t h = get_u32(in);
  const std::uint32_t w = get_u32(in);
  const std::uint32_t acs = get_u32(in);
  if (!in)
    throw std::runtime_error("read_mask: truncated header in " + path);
  if (h < 1 || w < 1)
    throw std::runtime_error("read_mask: bad dimensions in " + path);
  if (file_payload_bytes(in) != w)
    throw std::runtime_error("read_mask: size mismatch, expected " + std::to_string(16 + w) +
                             " bytes");
  std::vector<std::uint8_t> cols(w);
  in.read(reinterpret_cast<char *>(cols.data()), static_cast<std::streamsize>(w));
  for (auto b : cols)
    if (b > 1)
      throw std::runtime_error("read_mask: malformed mask (column byte > 1)");
  return SamplingMask(static_cast<int>(h), static_cast<int>(w), static_cast<int>(acs),
                      std::move(cols));
}

std::string to_string(ReconMode mode) {
  switch (mode) {
    case ReconMode::jsense: return "jsense";
    case ReconMode::modl: return "modl";
    case ReconMode::deep_jsense: return "deep-jsense";
  }
  return "unknown";
}

ReconMode parse_mode(const std::string &name) {
  if (name == "jsense") return ReconMode::jsense;
  if (name == "modl") return ReconMode::modl;
  if (name == "deep-jsense") return ReconMode::deep_jsense;
  throw std::invalid_argument("unknown mode: " + name);
}

}  // namespace djsense
