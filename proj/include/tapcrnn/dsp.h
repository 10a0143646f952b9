// Copyright 2026 The tapcrnn Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef TAPCRNN_DSP_H_
#define TAPCRNN_DSP_H_

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "tapcrnn/array.h"
#include "tapcrnn/wav.h"

namespace tapcrnn {

// Canonical pipeline rate. Files at any other rate are rejected by the
// dataset loaders; nothing in this codebase resamples.
inline constexpr int kSampleRate = 16000;

// Power floor applied to |X|^2 before the log; bounds LPS at ln(1e-12).
inline constexpr double kLpsFloorEps = 1e-12;

// Floor for per-bin standard deviations so dead bins normalize to zero
// instead of blowing up.
inline constexpr double kStdFloor = 1e-6;

// Overlap-add normalization guard: samples whose window-square sum falls
// below this (the outermost few samples of an utterance) are emitted as
// zero instead of being amplified by 1/w^2.
inline constexpr double kIstftWsqGuard = 1e-6;

enum class Window { kHann, kRect };

std::string WindowName(Window w);
Window WindowFromName(const std::string &name);

// Analysis/synthesis geometry. 257 feature bins force frame_len = 512; the
// default 50% hop with a periodic Hann window sums to a constant overlap.
struct StftConfig {
  int frame_len = 512;
  int hop = 256;
  Window window = Window::kHann;

  int FftBins() const { return frame_len / 2 + 1; }
  void Validate() const;  // hop range, power-of-two length, COLA
};

// Frame-by-frequency complex STFT; carries magnitude and phase jointly.
struct ComplexSpectrogram {
  int frames = 0;
  int bins = 0;
  std::vector<std::complex<double>> data;
  StftConfig config;

  std::complex<double> &At(int t, int f) {
    return data[static_cast<size_t>(t) * bins + f];
  }
  const std::complex<double> &At(int t, int f) const {
    return data[static_cast<size_t>(t) * bins + f];
  }
};

// T x F log-power-spectrum features, entries >= ln(kLpsFloorEps).
struct LpsFrames {
  int frames = 0;
  int bins = 0;
  std::vector<double> data;

  double &At(int t, int f) { return data[static_cast<size_t>(t) * bins + f]; }
  double At(int t, int f) const {
    return data[static_cast<size_t>(t) * bins + f];
  }
  Array ToArray() const { return Array({frames, bins}, data); }
  static LpsFrames FromArray(const Array &a);
};

// Per-bin feature moments, fitted on the training set only.
struct NormStats {
  std::vector<double> mean;
  std::vector<double> std;
};

// In-place radix-2 complex FFT; size must be a power of two. The inverse
// transform includes the 1/N factor.
void Fft(std::vector<std::complex<double>> &a, bool inverse);

// Periodic window of the given length.
std::vector<double> MakeWindow(Window w, int len);

ComplexSpectrogram Stft(const Waveform &wav, const StftConfig &config);

// Weighted overlap-add synthesis with window-square normalization. Output
// length is (T-1)*hop + frame_len.
Waveform Istft(const ComplexSpectrogram &spec, int sample_rate = kSampleRate);

// entry(t,f) = ln(max(|X(t,f)|^2, kLpsFloorEps))
LpsFrames Lps(const ComplexSpectrogram &spec);

// magnitude(t,f) = exp(lps(t,f)/2); exact inverse of Lps above the floor.
std::vector<double> LpsToMagnitude(const LpsFrames &lps);

// Combines exp(lps/2) magnitudes with the phase of `phase_ref`, then Istft.
Waveform Reconstruct(const LpsFrames &enhanced_lps,
                     const ComplexSpectrogram &phase_ref,
                     int sample_rate = kSampleRate);

NormStats FitNormStats(const std::vector<LpsFrames> &training_set);
LpsFrames ApplyNorm(const LpsFrames &lps, const NormStats &stats);
LpsFrames InvertNorm(const LpsFrames &lps, const NormStats &stats);

struct MixResult {
  Waveform noisy;
  Waveform scaled_noise;  // exact noise target for the separation head
};

// Scales a noise segment so that 10*log10(P_clean / P_noise) == snr_db over
// the full utterance, then adds it to the clean signal. The segment is cut
// from a seeded random offset (looping when the noise is shorter than the
// clean signal).
MixResult MixAtSnr(const Waveform &clean, const Waveform &noise, double snr_db,
                   uint64_t seed);

// CSV dump with header `frame,bin_0..bin_N` for plotting.
void WriteFramesCsv(const LpsFrames &frames, const std::string &path);

}  // namespace tapcrnn

#endif  // TAPCRNN_DSP_H_
