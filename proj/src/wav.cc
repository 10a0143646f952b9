// Copyright 2026 The tapcrnn Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "tapcrnn/wav.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "tapcrnn/common.h"

namespace tapcrnn {

double Waveform::Power() const {
  if (samples.empty()) return 0.0;
  double acc = 0.0;
  for (double s : samples) acc += s * s;
  return acc / static_cast<double>(samples.size());
}

double Waveform::Rms() const { return std::sqrt(Power()); }

namespace {

uint32_t ReadU32(const uint8_t *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t ReadU16(const uint8_t *p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void PutU32(std::vector<uint8_t> *out, uint32_t v) {
  out->push_back(static_cast<uint8_t>(v & 0xff));
  out->push_back(static_cast<uint8_t>((v >> 8) & 0xff));
  out->push_back(static_cast<uint8_t>((v >> 16) & 0xff));
  out->push_back(static_cast<uint8_t>((v >> 24) & 0xff));
}

void PutU16(std::vector<uint8_t> *out, uint16_t v) {
  out->push_back(static_cast<uint8_t>(v & 0xff));
  out->push_back(static_cast<uint8_t>((v >> 8) & 0xff));
}

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatIeeeFloat = 3;

}  // namespace

Waveform ReadWav(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  TC_CHECK(in.good(), "cannot open wav file: " << path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  TC_CHECK(bytes.size() >= 44, "truncated wav file: " << path);
  TC_CHECK(std::memcmp(bytes.data(), "RIFF", 4) == 0 &&
               std::memcmp(bytes.data() + 8, "WAVE", 4) == 0,
           "not a RIFF/WAVE file: " << path);

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  size_t data_off = 0, data_len = 0;
  bool have_fmt = false;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char *id = reinterpret_cast<const char *>(bytes.data() + pos);
    uint32_t len = ReadU32(bytes.data() + pos + 4);
    size_t body = pos + 8;
    if (std::memcmp(id, "fmt ", 4) == 0 && body + 16 <= bytes.size()) {
      format = ReadU16(bytes.data() + body);
      channels = ReadU16(bytes.data() + body + 2);
      sample_rate = ReadU32(bytes.data() + body + 4);
      bits = ReadU16(bytes.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data_off = body;
      data_len = len;
    }
    pos = body + len + (len & 1);  // chunks are word-aligned
  }

  TC_CHECK(have_fmt && data_off > 0, "wav missing fmt or data chunk: " << path);
  TC_CHECK(channels >= 1, "wav with zero channels: " << path);
  TC_CHECK(data_off + data_len <= bytes.size(),
           "truncated wav data chunk: " << path);

  const bool pcm16 = (format == kFormatPcm && bits == 16);
  const bool f32 = (format == kFormatIeeeFloat && bits == 32);
  TC_CHECK(pcm16 || f32, "unsupported wav codec (format " << format << ", "
                             << bits << " bit): " << path);

  const size_t bytes_per_sample = pcm16 ? 2 : 4;
  const size_t frame_bytes = bytes_per_sample * channels;
  const size_t n_frames = data_len / frame_bytes;
  TC_CHECK(n_frames > 0, "zero-length audio: " << path);

  Waveform wav;
  wav.sample_rate = static_cast<int>(sample_rate);
  wav.samples.resize(n_frames);
  const uint8_t *d = bytes.data() + data_off;
  for (size_t i = 0; i < n_frames; ++i) {
    double acc = 0.0;
    for (uint16_t c = 0; c < channels; ++c) {
      const uint8_t *p = d + i * frame_bytes + c * bytes_per_sample;
      if (pcm16) {
        int16_t s;
        std::memcpy(&s, p, 2);
        acc += static_cast<double>(s) / 32768.0;
      } else {
        float s;
        std::memcpy(&s, p, 4);
        acc += static_cast<double>(s);
      }
    }
    wav.samples[i] = acc / channels;
  }
  return wav;
}

void WriteWav(const Waveform &wav, const std::string &path) {
  TC_CHECK(!wav.samples.empty(), "refusing to write zero-length audio");
  TC_CHECK(wav.sample_rate > 0, "invalid sample rate " << wav.sample_rate);
  for (double s : wav.samples)
    TC_CHECK_NUM(std::isfinite(s), "non-finite sample in waveform");

  const uint32_t n = static_cast<uint32_t>(wav.samples.size());
  std::vector<uint8_t> out;
  out.reserve(44 + 2 * n);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  PutU32(&out, 36 + 2 * n);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  PutU32(&out, 16);
  PutU16(&out, kFormatPcm);
  PutU16(&out, 1);  // mono
  PutU32(&out, static_cast<uint32_t>(wav.sample_rate));
  PutU32(&out, static_cast<uint32_t>(wav.sample_rate) * 2);  // byte rate
  PutU16(&out, 2);                                           // block align
  PutU16(&out, 16);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  PutU32(&out, 2 * n);
  for (double s : wav.samples) {
    double clipped = std::clamp(s, -1.0, 1.0);
    long code = std::lround(clipped * 32768.0);
    code = std::clamp(code, -32768L, 32767L);
    PutU16(&out, static_cast<uint16_t>(static_cast<int16_t>(code)));
  }

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  TC_CHECK(os.good(), "cannot open for writing: " << path);
  os.write(reinterpret_cast<const char *>(out.data()),
           static_cast<std::streamsize>(out.size()));
  TC_CHECK(os.good(), "short write: " << path);
}

}  // namespace tapcrnn
