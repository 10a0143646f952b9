// Copyright 2026 The tapcrnn Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef TAPCRNN_WAV_H_
#define TAPCRNN_WAV_H_

#include <string>
#include <vector>

namespace tapcrnn {

// Mono PCM audio, samples nominally in [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 16000;

  double Rms() const;
  double Power() const;  // mean square
};

// Reads a RIFF/WAVE file: 16-bit PCM or 32-bit IEEE float, any channel
// count. Multichannel input is averaged down to mono. 16-bit samples map to
// s / 32768.
Waveform ReadWav(const std::string &path);

// Writes mono 16-bit PCM little-endian. Samples outside [-1, 1] are
// hard-clipped before quantization (round to nearest, code -32768..32767).
void WriteWav(const Waveform &wav, const std::string &path);

}  // namespace tapcrnn

#endif  // TAPCRNN_WAV_H_
