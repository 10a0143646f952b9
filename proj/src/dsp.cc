// Copyright 2026 The tapcrnn Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "tapcrnn/dsp.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "tapcrnn/common.h"

namespace tapcrnn {

std::string WindowName(Window w) {
  return w == Window::kHann ? "hann" : "rect";
}

Window WindowFromName(const std::string &name) {
  if (name == "hann") return Window::kHann;
  if (name == "rect") return Window::kRect;
  throw DataError("unknown window: " + name);
}

std::vector<double> MakeWindow(Window w, int len) {
  std::vector<double> win(static_cast<size_t>(len), 1.0);
  if (w == Window::kHann) {
    for (int n = 0; n < len; ++n)
      win[n] = 0.5 - 0.5 * std::cos(2.0 * M_PI * n / len);  // periodic
  }
  return win;
}

void StftConfig::Validate() const {
  TC_CHECK(frame_len > 0 && (frame_len & (frame_len - 1)) == 0,
           "frame_len must be a power of two, got " << frame_len);
  TC_CHECK(hop > 0 && hop <= frame_len,
           "hop must satisfy 0 < hop <= frame_len");
  // Constant-overlap-add: the periodic window sums to a constant when
  // shifted by hop. Checked over one hop span with full overlap coverage.
  std::vector<double> win = MakeWindow(window, frame_len);
  double ref = 0.0;
  for (int n = 0; n < frame_len; n += hop) ref += win[n];
  for (int offset = 0; offset < hop; ++offset) {
    double sum = 0.0;
    for (int n = offset; n < frame_len; n += hop) sum += win[n];
    TC_CHECK(std::abs(sum - ref) <= 1e-10,
             "window/hop pair violates constant overlap-add: "
                 << WindowName(window) << " " << frame_len << "/" << hop);
  }
}

void Fft(std::vector<std::complex<double>> &a, bool inverse) {
  const size_t n = a.size();
  TC_CHECK(n > 0 && (n & (n - 1)) == 0, "fft size must be a power of two");
  // bit-reversal permutation
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
    for (size_t i = 0; i < n; i += len) {
      for (size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> w =
            std::polar(1.0, ang * static_cast<double>(j));
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto &x : a) x *= inv_n;
  }
}

ComplexSpectrogram Stft(const Waveform &wav, const StftConfig &config) {
  config.Validate();
  const int len = static_cast<int>(wav.samples.size());
  TC_CHECK(len >= config.frame_len,
           "waveform shorter than one frame: " << len << " < "
                                               << config.frame_len);
  for (double s : wav.samples)
    TC_CHECK_NUM(std::isfinite(s), "non-finite sample in waveform");

  const int frames = 1 + (len - config.frame_len) / config.hop;
  const int bins = config.FftBins();
  std::vector<double> win = MakeWindow(config.window, config.frame_len);

  ComplexSpectrogram spec;
  spec.frames = frames;
  spec.bins = bins;
  spec.config = config;
  spec.data.resize(static_cast<size_t>(frames) * bins);

  std::vector<std::complex<double>> buf(static_cast<size_t>(config.frame_len));
  for (int t = 0; t < frames; ++t) {
    const int start = t * config.hop;
    for (int n = 0; n < config.frame_len; ++n)
      buf[n] = wav.samples[start + n] * win[n];
    Fft(buf, false);
    for (int f = 0; f < bins; ++f) spec.At(t, f) = buf[f];
  }
  return spec;
}

Waveform Istft(const ComplexSpectrogram &spec, int sample_rate) {
  const StftConfig &config = spec.config;
  config.Validate();
  TC_CHECK(spec.frames > 0, "empty spectrogram");
  TC_CHECK(spec.bins == config.FftBins(),
           "spectrogram bins " << spec.bins << " do not match config "
                               << config.FftBins());
  for (const auto &z : spec.data)
    TC_CHECK_NUM(std::isfinite(z.real()) && std::isfinite(z.imag()),
                 "non-finite spectrogram entry");

  const int n = config.frame_len;
  const int out_len = (spec.frames - 1) * config.hop + n;
  std::vector<double> win = MakeWindow(config.window, n);
  std::vector<double> acc(static_cast<size_t>(out_len), 0.0);
  std::vector<double> wsq(static_cast<size_t>(out_len), 0.0);

  std::vector<std::complex<double>> buf(static_cast<size_t>(n));
  for (int t = 0; t < spec.frames; ++t) {
    for (int f = 0; f < spec.bins; ++f) buf[f] = spec.At(t, f);
    for (int f = spec.bins; f < n; ++f) buf[f] = std::conj(spec.At(t, n - f));
    Fft(buf, true);
    const int start = t * config.hop;
    for (int i = 0; i < n; ++i) {
      acc[start + i] += buf[i].real() * win[i];
      wsq[start + i] += win[i] * win[i];
    }
  }
  Waveform out;
  out.sample_rate = sample_rate;
  out.samples.resize(static_cast<size_t>(out_len));
  for (int i = 0; i < out_len; ++i)
    out.samples[i] = wsq[i] >= kIstftWsqGuard ? acc[i] / wsq[i] : 0.0;
  return out;
}

LpsFrames Lps(const ComplexSpectrogram &spec) {
  LpsFrames lps;
  lps.frames = spec.frames;
  lps.bins = spec.bins;
  lps.data.resize(spec.data.size());
  for (size_t i = 0; i < spec.data.size(); ++i) {
    const double power = std::norm(spec.data[i]);
    lps.data[i] = std::log(std::max(power, kLpsFloorEps));
  }
  return lps;
}

LpsFrames LpsFrames::FromArray(const Array &a) {
  TC_CHECK(a.Rank() == 2, "LPS array must be rank 2, got " << a.ShapeStr());
  LpsFrames lps;
  lps.frames = a.Dim(0);
  lps.bins = a.Dim(1);
  lps.data = a.data;
  return lps;
}

std::vector<double> LpsToMagnitude(const LpsFrames &lps) {
  std::vector<double> mag(lps.data.size());
  for (size_t i = 0; i < lps.data.size(); ++i) {
    TC_CHECK_NUM(std::isfinite(lps.data[i]), "non-finite LPS entry");
    mag[i] = std::exp(0.5 * lps.data[i]);
  }
  return mag;
}

Waveform Reconstruct(const LpsFrames &enhanced_lps,
                     const ComplexSpectrogram &phase_ref, int sample_rate) {
  TC_CHECK(enhanced_lps.frames == phase_ref.frames &&
               enhanced_lps.bins == phase_ref.bins,
           "shape mismatch: lps " << enhanced_lps.frames << "x"
                                  << enhanced_lps.bins << " vs phase "
                                  << phase_ref.frames << "x" << phase_ref.bins);
  std::vector<double> mag = LpsToMagnitude(enhanced_lps);
  ComplexSpectrogram spec;
  spec.frames = phase_ref.frames;
  spec.bins = phase_ref.bins;
  spec.config = phase_ref.config;
  spec.data.resize(phase_ref.data.size());
  for (size_t i = 0; i < spec.data.size(); ++i)
    spec.data[i] = std::polar(mag[i], std::arg(phase_ref.data[i]));
  return Istft(spec, sample_rate);
}

NormStats FitNormStats(const std::vector<LpsFrames> &training_set) {
  TC_CHECK(!training_set.empty(), "empty training set for normalization");
  const int bins = training_set.front().bins;
  int64_t total_frames = 0;
  std::vector<double> mean(static_cast<size_t>(bins), 0.0);
  std::vector<double> sq(static_cast<size_t>(bins), 0.0);
  for (const LpsFrames &utt : training_set) {
    TC_CHECK(utt.bins == bins, "inconsistent bin count across training set");
    for (int t = 0; t < utt.frames; ++t)
      for (int f = 0; f < bins; ++f) {
        mean[f] += utt.At(t, f);
        sq[f] += utt.At(t, f) * utt.At(t, f);
      }
    total_frames += utt.frames;
  }
  TC_CHECK(total_frames > 0, "training set has no frames");
  NormStats stats;
  stats.mean.resize(static_cast<size_t>(bins));
  stats.std.resize(static_cast<size_t>(bins));
  for (int f = 0; f < bins; ++f) {
    const double m = mean[f] / static_cast<double>(total_frames);
    const double var =
        std::max(0.0, sq[f] / static_cast<double>(total_frames) - m * m);
    stats.mean[f] = m;
    stats.std[f] = std::max(std::sqrt(var), kStdFloor);
  }
  return stats;
}

LpsFrames ApplyNorm(const LpsFrames &lps, const NormStats &stats) {
  TC_CHECK(static_cast<size_t>(lps.bins) == stats.mean.size(),
           "normalization stats cover " << stats.mean.size()
                                        << " bins, features have " << lps.bins);
  LpsFrames out = lps;
  for (int t = 0; t < lps.frames; ++t)
    for (int f = 0; f < lps.bins; ++f)
      out.At(t, f) = (lps.At(t, f) - stats.mean[f]) / stats.std[f];
  return out;
}

LpsFrames InvertNorm(const LpsFrames &lps, const NormStats &stats) {
  TC_CHECK(static_cast<size_t>(lps.bins) == stats.mean.size(),
           "normalization stats cover " << stats.mean.size()
                                        << " bins, features have " << lps.bins);
  LpsFrames out = lps;
  for (int t = 0; t < lps.frames; ++t)
    for (int f = 0; f < lps.bins; ++f)
      out.At(t, f) = lps.At(t, f) * stats.std[f] + stats.mean[f];
  return out;
}

MixResult MixAtSnr(const Waveform &clean, const Waveform &noise, double snr_db,
                   uint64_t seed) {
  TC_CHECK(clean.sample_rate == noise.sample_rate,
           "sample rate mismatch: " << clean.sample_rate << " vs "
                                    << noise.sample_rate);
  TC_CHECK(!clean.samples.empty() && !noise.samples.empty(),
           "empty signal passed to mixer");
  const int64_t len = static_cast<int64_t>(clean.samples.size());
  const int64_t noise_len = static_cast<int64_t>(noise.samples.size());

  Rng rng(seed ? seed : 1);
  std::vector<double> segment(static_cast<size_t>(len));
  if (noise_len >= len) {
    const int64_t offset = rng.UniformInt(0, noise_len - len);
    for (int64_t i = 0; i < len; ++i) segment[i] = noise.samples[offset + i];
  } else {
    // tile-loop shorter noise starting from a seeded offset
    const int64_t offset = rng.UniformInt(0, noise_len - 1);
    for (int64_t i = 0; i < len; ++i)
      segment[i] = noise.samples[(offset + i) % noise_len];
  }

  double p_clean = 0.0, p_noise = 0.0;
  for (double s : clean.samples) p_clean += s * s;
  for (double s : segment) p_noise += s * s;
  TC_CHECK(p_clean > 0.0, "silent clean input");
  TC_CHECK(p_noise > 0.0, "silent noise input");

  const double gain = std::sqrt(p_clean / (p_noise * std::pow(10.0, snr_db / 10.0)));

  MixResult out;
  out.scaled_noise.sample_rate = clean.sample_rate;
  out.noisy.sample_rate = clean.sample_rate;
  out.scaled_noise.samples.resize(static_cast<size_t>(len));
  out.noisy.samples.resize(static_cast<size_t>(len));
  for (int64_t i = 0; i < len; ++i) {
    out.scaled_noise.samples[i] = gain * segment[i];
    out.noisy.samples[i] = clean.samples[i] + out.scaled_noise.samples[i];
  }
  return out;
}

void WriteFramesCsv(const LpsFrames &frames, const std::string &path) {
  std::ofstream os(path, std::ios::trunc);
  TC_CHECK(os.good(), "cannot open for writing: " << path);
  os << "frame";
  for (int f = 0; f < frames.bins; ++f) os << ",bin_" << f;
  os << "\n";
  char buf[32];
  for (int t = 0; t < frames.frames; ++t) {
    os << t;
    for (int f = 0; f < frames.bins; ++f) {
      std::snprintf(buf, sizeof(buf), "%.9g", frames.At(t, f));
      os << ',' << buf;
    }
    os << "\n";
  }
  TC_CHECK(os.good(), "short write: " << path);
}

}  // namespace tapcrnn
