#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "vam/dsp/waveform.hpp"

namespace vam::dsp {

namespace {

WavReadHook g_read_hook;

void put_u32(std::ofstream& f, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff),
               static_cast<char>((v >> 24) & 0xff)};
  f.write(b, 4);
}

void put_u16(std::ofstream& f, std::uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
  f.write(b, 2);
}

std::uint32_t get_u32(std::ifstream& f) {
  unsigned char b[4];
  f.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint16_t get_u16(std::ifstream& f) {
  unsigned char b[2];
  f.read(reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

}  // namespace

void set_wav_read_hook(WavReadHook hook) { g_read_hook = std::move(hook); }
void clear_wav_read_hook() { g_read_hook = nullptr; }

Waveform read_wav(const std::string& path) {
  if (g_read_hook) g_read_hook(path);

  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("read_wav: cannot open " + path);

  char tag[4];
  f.read(tag, 4);
  if (std::strncmp(tag, "RIFF", 4) != 0) throw Error("read_wav: not RIFF: " + path);
  get_u32(f);  // riff size
  f.read(tag, 4);
  if (std::strncmp(tag, "WAVE", 4) != 0) throw Error("read_wav: not WAVE: " + path);

  int sample_rate = 0;
  int channels = 0;
  int bits = 0;
  std::vector<double> samples;
  bool have_fmt = false, have_data = false;

  while (f.read(tag, 4)) {
    const std::uint32_t chunk_size = get_u32(f);
    if (std::strncmp(tag, "fmt ", 4) == 0) {
      const std::uint16_t fmt = get_u16(f);
      channels = get_u16(f);
      sample_rate = static_cast<int>(get_u32(f));
      get_u32(f);  // byte rate
      get_u16(f);  // block align
      bits = get_u16(f);
      if (chunk_size > 16) f.seekg(chunk_size - 16, std::ios::cur);
      if (fmt != 1 || bits != 16)
        throw Error("read_wav: only PCM16 supported: " + path);
      have_fmt = true;
    } else if (std::strncmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw Error("read_wav: data before fmt: " + path);
      const std::size_t n_frames = chunk_size / (2 * static_cast<std::size_t>(channels));
      samples.resize(n_frames);
      std::vector<char> raw(chunk_size);
      f.read(raw.data(), static_cast<std::streamsize>(chunk_size));
      for (std::size_t i = 0; i < n_frames; ++i) {
        // take the first channel; files written by this toolkit are mono
        const std::size_t off = i * 2 * static_cast<std::size_t>(channels);
        const std::int16_t v = static_cast<std::int16_t>(
            static_cast<unsigned char>(raw[off]) |
            (static_cast<unsigned char>(raw[off + 1]) << 8));
        samples[i] = static_cast<double>(v) / 32768.0;
      }
      have_data = true;
    } else {
      f.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }
  if (!have_data) throw Error("read_wav: no data chunk: " + path);
  return Waveform(std::move(samples), sample_rate);
}

void write_wav(const std::string& path, const Waveform& w) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("write_wav: cannot open " + path);

  const std::uint32_t n = static_cast<std::uint32_t>(w.samples.size());
  const std::uint32_t data_bytes = n * 2;

  f.write("RIFF", 4);
  put_u32(f, 36 + data_bytes);
  f.write("WAVE", 4);
  f.write("fmt ", 4);
  put_u32(f, 16);
  put_u16(f, 1);  // PCM
  put_u16(f, 1);  // mono
  put_u32(f, static_cast<std::uint32_t>(w.sample_rate));
  put_u32(f, static_cast<std::uint32_t>(w.sample_rate) * 2);
  put_u16(f, 2);
  put_u16(f, 16);
  f.write("data", 4);
  put_u32(f, data_bytes);

  std::vector<char> raw(data_bytes);
  for (std::uint32_t i = 0; i < n; ++i) {
    double v = std::clamp(w.samples[i], -1.0, 1.0);
    const auto q = static_cast<std::int16_t>(std::lrint(v * 32767.0));
    raw[i * 2] = static_cast<char>(q & 0xff);
    raw[i * 2 + 1] = static_cast<char>((q >> 8) & 0xff);
  }
  f.write(raw.data(), data_bytes);
  if (!f) throw Error("write_wav: short write: " + path);
}

}  // namespace vam::dsp
