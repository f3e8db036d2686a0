#include "spoofguard/audio.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace spoofguard {

namespace {

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string& s, std::uint32_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>((v >> 16) & 0xff));
  s.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string& s, std::uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

AudioClip read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open WAV file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t n = bytes.size();

  if (n < 12 || std::memcmp(p, "RIFF", 4) != 0 || std::memcmp(p + 8, "WAVE", 4) != 0) {
    throw Error(ErrorKind::kFormat, "not a RIFF/WAVE file: " + path);
  }

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* data = nullptr;
  std::uint32_t data_len = 0;

  std::size_t off = 12;
  while (off + 8 <= n) {
    const unsigned char* id = p + off;
    const std::uint32_t len = read_u32(p + off + 4);
    off += 8;
    if (off + len > n) throw Error(ErrorKind::kFormat, "truncated chunk in WAV file: " + path);
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (len < 16) throw Error(ErrorKind::kFormat, "short fmt chunk in WAV file: " + path);
      format = read_u16(p + off);
      channels = read_u16(p + off + 2);
      rate = read_u32(p + off + 4);
      bits = read_u16(p + off + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data = p + off;
      data_len = len;
    }
    off += len + (len & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data == nullptr) {
    throw Error(ErrorKind::kFormat, "missing fmt/data chunk in WAV file: " + path);
  }
  if (format != 1 || bits != 16) {
    throw Error(ErrorKind::kData, "unsupported WAV encoding (need PCM 16-bit): " + path);
  }
  if (channels != 1) {
    throw Error(ErrorKind::kData, "unsupported WAV channel count (need mono): " + path);
  }
  if (rate == 0) throw Error(ErrorKind::kFormat, "zero sample rate in WAV file: " + path);
  if (data_len < 2) throw Error(ErrorKind::kFormat, "empty data chunk in WAV file: " + path);

  AudioClip clip;
  clip.sample_rate = static_cast<int>(rate);
  clip.source_id = path;
  const std::size_t count = data_len / 2;
  clip.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::int16_t v =
        static_cast<std::int16_t>(static_cast<std::uint16_t>(data[2 * i] | (data[2 * i + 1] << 8)));
    clip.samples[i] = static_cast<float>(v) / 32768.0f;
  }
  return clip;
}

void write_wav(const std::string& path, const AudioClip& clip) {
  if (clip.sample_rate <= 0) throw Error(ErrorKind::kData, "invalid sample rate on write: " + path);
  if (clip.samples.empty()) throw Error(ErrorKind::kData, "refusing to write empty clip: " + path);

  const std::uint32_t data_len = static_cast<std::uint32_t>(clip.samples.size() * 2);
  const std::uint32_t rate = static_cast<std::uint32_t>(clip.sample_rate);

  std::string out;
  out.reserve(44 + data_len);
  out += "RIFF";
  put_u32(out, 36 + data_len);
  out += "WAVE";
  out += "fmt ";
  put_u32(out, 16);
  put_u16(out, 1);   // PCM
  put_u16(out, 1);   // mono
  put_u32(out, rate);
  put_u32(out, rate * 2);  // byte rate
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  out += "data";
  put_u32(out, data_len);
  for (float f : clip.samples) {
    double scaled = std::lround(static_cast<double>(f) * 32768.0);
    if (scaled > 32767.0) scaled = 32767.0;
    if (scaled < -32768.0) scaled = -32768.0;
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)));
  }

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorKind::kIo, "cannot open for write: " + path);
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!os) throw Error(ErrorKind::kIo, "short write: " + path);
}

}  // namespace spoofguard
